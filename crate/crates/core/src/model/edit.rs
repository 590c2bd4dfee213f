//! Axis group edits, deletions and variant cycling.

use std::collections::HashMap;

use super::{
    Anchor, AxisGroup, AxisGroupDraft, AxisGroupKind, EntityId, EntityKind, Grid, Model, ModelError, Offset, Orientation,
    PlanKind, ResolvedAxis, MAX_AXES_PER_GROUP,
};

/// What happens to anchors whose axis survives an edit.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Reanchor {
    /// Keep the offset: the object moves with its axis.
    Follow,
    /// Adjust the offset so the world position is unchanged.
    Pin,
}

type AxisKey = (EntityId, u32);

fn key(a: &ResolvedAxis) -> AxisKey {
    (a.group, a.ordinal)
}

struct AxisMap<'a> {
    old: &'a Grid,
    new: &'a Grid,
    index: [HashMap<AxisKey, u32>; 2],
}

fn slot(o: Orientation) -> usize {
    match o {
        Orientation::H => 0,
        Orientation::V => 1,
    }
}

impl<'a> AxisMap<'a> {
    fn new(old: &'a Grid, new: &'a Grid) -> Self {
        let build = |o| new.axes(o).iter().map(|a| (key(a), a.index)).collect();
        AxisMap { old, new, index: [build(Orientation::H), build(Orientation::V)] }
    }

    fn survivor(&self, o: Orientation, old: &ResolvedAxis) -> Option<&'a ResolvedAxis> {
        self.index[slot(o)].get(&key(old)).and_then(|&i| self.new.axis(o, i).ok())
    }

    /// New (index, offset) for one coordinate of an anchor.
    fn one(&self, o: Orientation, index: u32, d: i64, mode: Reanchor) -> Result<(u32, i64), ModelError> {
        let old = self.old.axis(o, index)?;
        let world = old.coord + d;
        match self.survivor(o, old) {
            Some(new) if mode == Reanchor::Follow => Ok((new.index, d)),
            Some(new) => Ok((new.index, world - new.coord)),
            None => {
                let near = self.new.nearest(o, old.coord).ok_or(ModelError::LastAxisGroup { orientation: o })?;
                Ok((near.index, world - near.coord))
            }
        }
    }

    fn anchor(&self, a: Anchor, mode: Reanchor) -> Result<Anchor, ModelError> {
        let (h_axis, dy_mm) = self.one(Orientation::H, a.h_axis, a.dy_mm, mode)?;
        let (v_axis, dx_mm) = self.one(Orientation::V, a.v_axis, a.dx_mm, mode)?;
        Ok(Anchor { h_axis, v_axis, dx_mm, dy_mm })
    }

    /// Remaps a group rectangle. The set of main axes inside it must be unchanged.
    /// Returns the new corners and the shift to add to the center offset.
    fn rectangle(
        &self,
        start: Anchor,
        end: Anchor,
        mode: Reanchor,
        edited: EntityId,
        owner: EntityId,
    ) -> Result<(Anchor, Anchor, Offset), ModelError> {
        let in_use = ModelError::AxisGroupInUse { group: edited, entity: owner };
        let mut corners = [start, end];
        let mut shift = Offset::ZERO;
        for o in [Orientation::H, Orientation::V] {
            let pick = |a: &Anchor| match o {
                Orientation::H => a.h_axis,
                Orientation::V => a.v_axis,
            };
            let (lo, hi) = (pick(&start).min(pick(&end)), pick(&start).max(pick(&end)));
            self.old.axis(o, lo)?;
            self.old.axis(o, hi)?;
            let old_keys: Vec<AxisKey> = self.old.axes(o)[(lo - 1) as usize..hi as usize].iter().filter(|a| a.main).map(key).collect();
            let mut delta = None;
            for c in corners.iter_mut() {
                let old = self.old.axis(o, pick(c))?;
                let new = self.survivor(o, old).ok_or(in_use.clone())?;
                let d = old.coord - new.coord;
                if mode == Reanchor::Pin && delta.is_some_and(|x| x != d) {
                    return Err(in_use);
                }
                delta = Some(d);
                match o {
                    Orientation::H => c.h_axis = new.index,
                    Orientation::V => c.v_axis = new.index,
                }
            }
            let (nlo, nhi) = (pick(&corners[0]).min(pick(&corners[1])), pick(&corners[0]).max(pick(&corners[1])));
            let new_keys: Vec<AxisKey> = self.new.axes(o)[(nlo - 1) as usize..nhi as usize].iter().filter(|a| a.main).map(key).collect();
            if new_keys != old_keys {
                return Err(in_use);
            }
            if mode == Reanchor::Pin {
                match o {
                    Orientation::H => shift.dy = delta.unwrap_or(0),
                    Orientation::V => shift.dx = delta.unwrap_or(0),
                }
            }
        }
        Ok((corners[0], corners[1], shift))
    }
}

impl Model {
    fn remap_anchors(&mut self, old: &Grid, new: &Grid, mode: Reanchor, edited: EntityId) -> Result<(), ModelError> {
        let map = AxisMap::new(old, new);
        for g in &mut self.column_groups {
            let (s, e, shift) = map.rectangle(g.start, g.end, mode, edited, g.id)?;
            g.start = s;
            g.end = e;
            g.center_offset.dx += shift.dx;
            g.center_offset.dy += shift.dy;
        }
        for g in &mut self.footing_groups {
            let (s, e, shift) = map.rectangle(g.start, g.end, mode, edited, g.id)?;
            g.start = s;
            g.end = e;
            g.center_offset.dx += shift.dx;
            g.center_offset.dy += shift.dy;
        }
        for p in &mut self.partitions {
            p.anchor = map.anchor(p.anchor, mode)?;
        }
        for b in &mut self.beams {
            b.anchor = map.anchor(b.anchor, mode)?;
        }
        for s in &mut self.slab_groups {
            s.anchor = map.anchor(s.anchor, mode)?;
        }
        for s in &mut self.strip_foundations {
            s.anchor = map.anchor(s.anchor, mode)?;
        }
        for b in &mut self.foundation_beams {
            b.anchor = map.anchor(b.anchor, mode)?;
        }
        Ok(())
    }

    fn check_axes_editable(&self) -> Result<(), ModelError> {
        if self.kind != PlanKind::Floor && self.has_content() {
            Err(ModelError::PlanKindLocked { kind: self.kind })
        } else {
            Ok(())
        }
    }

    /// Adds an axis group, or replaces the one with `draft.id`.
    ///
    /// Objects anchored to axes that still exist keep their offsets and move with
    /// those axes; a step change therefore leaves every anchor tuple untouched.
    /// Objects on axes that disappear are re-anchored to the nearest remaining axis
    /// without moving. Edits that would change which main axes a column or footing
    /// group spans are rejected with [`ModelError::AxisGroupInUse`].
    pub fn upsert_axis_group(&mut self, draft: AxisGroupDraft) -> Result<EntityId, ModelError> {
        self.check_axes_editable()?;
        if draft.count == 0 || draft.count > MAX_AXES_PER_GROUP {
            return Err(ModelError::CountOutOfRange(draft.count));
        }
        self.transact(|m| {
            let old = m.grid()?;
            let id = match draft.id {
                Some(id) => {
                    let other = match draft.orientation {
                        Orientation::H => Orientation::V,
                        Orientation::V => Orientation::H,
                    };
                    if m.axis_groups(other).iter().any(|g| g.id == id) {
                        return Err(ModelError::invalid(id, "axis group orientation cannot change"));
                    }
                    let g = m
                        .axis_groups_mut(draft.orientation)
                        .iter_mut()
                        .find(|g| g.id == id)
                        .ok_or(ModelError::UnknownEntity(id))?;
                    g.count = draft.count;
                    g.kind = draft.kind;
                    g.label_start = draft.label_start;
                    id
                }
                None => {
                    let id = m.alloc_id();
                    m.axis_groups_mut(draft.orientation).push(AxisGroup {
                        id,
                        orientation: draft.orientation,
                        count: draft.count,
                        kind: draft.kind,
                        label_start: draft.label_start,
                    });
                    id
                }
            };
            let new = m.grid()?;
            m.remap_anchors(&old, &new, Reanchor::Follow, id)?;
            m.validate()?;
            Ok(id)
        })
    }

    /// Removes an axis group. Additional groups based on its axes go with it.
    /// Every remaining object keeps its world position; objects on removed axes
    /// are re-anchored to the nearest surviving axis. Returns the removed ids.
    pub fn delete_axis_group(&mut self, id: EntityId) -> Result<Vec<EntityId>, ModelError> {
        let group = self.axis_group(id).cloned().ok_or(ModelError::UnknownEntity(id))?;
        self.check_axes_editable()?;
        let o = group.orientation;
        self.transact(|m| {
            let old = m.grid()?;
            let mut removed = vec![id];
            if let AxisGroupKind::Main { .. } = group.kind {
                // 1-based ordinals of the removed main axes
                let before: u32 = m
                    .axis_groups(o)
                    .iter()
                    .take_while(|g| g.id != id)
                    .filter(|g| matches!(g.kind, AxisGroupKind::Main { .. }))
                    .map(|g| g.count)
                    .sum();
                let (first, last) = (before + 1, before + group.count);
                let mut kept = Vec::new();
                for mut g in std::mem::take(m.axis_groups_mut(o)) {
                    if g.id == id {
                        continue;
                    }
                    if let AxisGroupKind::Additional { base_axis, offset_mm } = g.kind {
                        if (first..=last).contains(&base_axis) {
                            removed.push(g.id);
                            continue;
                        }
                        if base_axis > last {
                            g.kind = AxisGroupKind::Additional { base_axis: base_axis - group.count, offset_mm };
                        }
                    }
                    kept.push(g);
                }
                *m.axis_groups_mut(o) = kept;
            } else {
                m.axis_groups_mut(o).retain(|g| g.id != id);
            }
            if m.axis_groups(o).is_empty() {
                return Err(ModelError::LastAxisGroup { orientation: o });
            }
            let new = m.grid()?;
            m.remap_anchors(&old, &new, Reanchor::Pin, id)?;
            m.validate()?;
            removed.sort();
            Ok(removed)
        })
    }

    /// Deletes an entity and whatever depends on it: a partition takes its openings,
    /// a column or footing group takes the beams resting on it, an axis group is
    /// handled by [`Model::delete_axis_group`]. Returns the removed ids, ascending.
    pub fn delete_entity(&mut self, id: EntityId) -> Result<Vec<EntityId>, ModelError> {
        let kind = self.kind_of(id).ok_or(ModelError::UnknownEntity(id))?;
        let mut removed = vec![id];
        match kind {
            EntityKind::AxisGroup => return self.delete_axis_group(id),
            EntityKind::Partition => {
                removed.extend(self.openings_on(id).map(|o| o.id));
                self.partitions.retain(|p| p.id != id);
                self.openings.retain(|o| o.partition != id);
            }
            EntityKind::ColumnGroup => {
                removed.extend(self.beams.iter().filter(|b| b.end_a.group == id || b.end_b.group == id).map(|b| b.id));
                self.column_groups.retain(|g| g.id != id);
                self.beams.retain(|b| b.end_a.group != id && b.end_b.group != id);
            }
            EntityKind::FootingGroup => {
                removed.extend(
                    self.foundation_beams.iter().filter(|b| b.end_a.group == id || b.end_b.group == id).map(|b| b.id),
                );
                self.footing_groups.retain(|g| g.id != id);
                self.foundation_beams.retain(|b| b.end_a.group != id && b.end_b.group != id);
            }
            EntityKind::Opening => self.openings.retain(|e| e.id != id),
            EntityKind::Beam => self.beams.retain(|e| e.id != id),
            EntityKind::SlabGroup => self.slab_groups.retain(|e| e.id != id),
            EntityKind::StripFoundation => self.strip_foundations.retain(|e| e.id != id),
            EntityKind::FoundationBeam => self.foundation_beams.retain(|e| e.id != id),
            EntityKind::Text => self.texts.retain(|e| e.id != id),
        }
        removed.sort();
        Ok(removed)
    }

    pub fn cycle_opening_variant(&mut self, id: EntityId) -> Result<(), ModelError> {
        let o = self.openings.iter_mut().find(|o| o.id == id).ok_or(ModelError::UnknownEntity(id))?;
        o.cycle_variant();
        Ok(())
    }
}
