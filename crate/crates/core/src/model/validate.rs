//! Whole-model integrity checks.

use std::collections::HashSet;

use super::geom;
use super::{ColumnRef, EntityId, EntityKind, Grid, Model, ModelError, Opening};
use crate::catalog::{Catalog, Family};

fn positive(entity: EntityId, what: &str, v: i64) -> Result<(), ModelError> {
    if v > 0 {
        Ok(())
    } else {
        Err(ModelError::invalid(entity, format!("{what} must be positive")))
    }
}

impl Model {
    /// Checks everything that must hold after any successful operation: unique ids,
    /// plan-kind gating, resolvable anchors and references, openings inside their
    /// partitions without overlap, and beam spans within tolerance.
    pub fn validate(&self) -> Result<(), ModelError> {
        self.settings.validate()?;
        let mut seen = HashSet::new();
        for (id, kind) in self.ids() {
            if id.0 == 0 || id.0 >= self.next_id || !seen.insert(id) {
                return Err(ModelError::DuplicateId(id));
            }
            self.require(kind)?;
        }
        let grid = self.grid()?;
        if grid.is_empty() && self.has_grid_dependents() {
            return Err(ModelError::NoGrid);
        }
        for (_, a) in self.anchors() {
            grid.anchor_point(&a)?;
        }
        for g in &self.column_groups {
            positive(g.id, "column width", g.width_mm)?;
            positive(g.id, "column thickness", g.thickness_mm)?;
            if g.mark.is_some() == g.unmarked_type.is_some() {
                return Err(ModelError::invalid(g.id, "a column group has either a mark or an unmarked type"));
            }
            grid.group_nodes(&g.start, &g.end)?;
        }
        for g in &self.footing_groups {
            positive(g.id, "footing length", g.length_mm)?;
            positive(g.id, "footing width", g.width_mm)?;
            positive(g.id, "footing height", g.height_mm)?;
            grid.group_nodes(&g.start, &g.end)?;
        }
        for p in &self.partitions {
            positive(p.id, "partition length", p.length_mm)?;
            positive(p.id, "partition thickness", p.thickness_mm)?;
        }
        for s in &self.strip_foundations {
            positive(s.id, "strip length", s.length_mm)?;
            positive(s.id, "strip width", s.width_mm)?;
        }
        for s in &self.slab_groups {
            positive(s.id, "slab length", s.length_mm)?;
            positive(s.id, "slab width", s.width_mm)?;
            positive(s.id, "slab height", s.height_mm)?;
            if s.count == 0 {
                return Err(ModelError::invalid(s.id, "a slab group holds at least one slab"));
            }
        }
        for o in &self.openings {
            self.check_opening(o)?;
        }
        for b in &self.beams {
            positive(b.id, "beam length", b.length_mm)?;
            positive(b.id, "beam width", b.width_mm)?;
            positive(b.id, "beam height", b.height_mm)?;
            let (a, z) = (self.column_center(&grid, b.id, b.end_a)?, self.column_center(&grid, b.id, b.end_b)?);
            self.check_supported(b.id, a, z, b.along_x, b.length_mm)?;
        }
        for b in &self.foundation_beams {
            positive(b.id, "beam length", b.length_mm)?;
            positive(b.id, "beam width", b.width_mm)?;
            positive(b.id, "beam height", b.height_mm)?;
            let (a, z) = (self.footing_center(&grid, b.id, b.end_a)?, self.footing_center(&grid, b.id, b.end_b)?);
            self.check_supported(b.id, a, z, b.along_x, b.length_mm)?;
        }
        for t in &self.texts {
            if t.lines.is_empty() || !(t.font_height_mm > 0.0 && t.line_step_mm > 0.0) {
                return Err(ModelError::invalid(t.id, "text needs lines and a positive font height and line step"));
            }
        }
        Ok(())
    }

    /// [`Model::validate`] plus: every mark names a record of the right family.
    pub fn validate_with_catalog(&self, catalog: &Catalog) -> Result<(), ModelError> {
        self.validate()?;
        let marks = self
            .column_groups
            .iter()
            .map(|e| (Family::Column, &e.mark))
            .chain(self.openings.iter().map(|e| (Family::Opening, &e.mark)))
            .chain(self.beams.iter().map(|e| (Family::Beam, &e.mark)))
            .chain(self.slab_groups.iter().map(|e| (Family::Slab, &e.mark)))
            .chain(self.footing_groups.iter().map(|e| (Family::Footing, &e.mark)))
            .chain(self.foundation_beams.iter().map(|e| (Family::FoundationBeam, &e.mark)))
            .chain(self.openings.iter().filter_map(|o| o.section_extra.as_ref()).flat_map(|x| {
                let lintel = x.lintel.as_ref().map(|l| (Family::Lintel, &l.mark));
                let transom = x.transom.as_ref().map(|t| (Family::Transom, &t.mark));
                lintel.into_iter().chain(transom)
            }));
        for (family, mark) in marks {
            if let Some(name) = mark {
                if catalog.lookup(family, name).is_none() {
                    return Err(ModelError::UnknownMark { family, name: name.clone() });
                }
            }
        }
        Ok(())
    }

    fn has_grid_dependents(&self) -> bool {
        self.entity_count() > self.count_of(EntityKind::AxisGroup) + self.count_of(EntityKind::Text)
    }

    fn check_opening(&self, o: &Opening) -> Result<(), ModelError> {
        let p = self.partition(o.partition).ok_or(ModelError::DanglingReference { entity: o.id, target: o.partition })?;
        if !(1..=Opening::TYPE_COUNT).contains(&o.gost_type) {
            return Err(ModelError::invalid(o.id, format!("opening type {} outside 1..=19", o.gost_type)));
        }
        positive(o.id, "opening width", o.width_mm)?;
        positive(o.id, "opening height", o.height_mm)?;
        if o.along_x != p.along_x {
            return Err(ModelError::invalid(o.id, "opening direction differs from its partition"));
        }
        if o.anchor_offset_mm < 0 || o.anchor_offset_mm + o.width_mm > p.length_mm {
            return Err(ModelError::OutOfPartition { partition: p.id });
        }
        if let Some(other) = self.opening_conflict(p.id, o.anchor_offset_mm, o.width_mm, Some(o.id)) {
            return Err(ModelError::OverlapsOpening { other });
        }
        Ok(())
    }

    fn column_center(&self, grid: &Grid, owner: EntityId, r: ColumnRef) -> Result<super::Point, ModelError> {
        let g = self.column_group(r.group).ok_or(ModelError::DanglingReference { entity: owner, target: r.group })?;
        geom::column_members(grid, g)?
            .into_iter()
            .find(|m| m.node.ix == r.ix && m.node.iy == r.iy)
            .map(|m| m.center)
            .ok_or(ModelError::UnknownColumn { group: r.group, ix: r.ix, iy: r.iy })
    }

    fn footing_center(&self, grid: &Grid, owner: EntityId, r: ColumnRef) -> Result<super::Point, ModelError> {
        let g = self.footing_group(r.group).ok_or(ModelError::DanglingReference { entity: owner, target: r.group })?;
        geom::footing_members(grid, g)?
            .into_iter()
            .find(|m| m.node.ix == r.ix && m.node.iy == r.iy)
            .map(|m| m.center)
            .ok_or(ModelError::UnknownFooting { group: r.group, ix: r.ix, iy: r.iy })
    }

    fn check_supported(&self, id: EntityId, a: super::Point, z: super::Point, along_x: bool, length: i64) -> Result<(), ModelError> {
        let ok_dir = if along_x { a.y == z.y && a.x != z.x } else { a.x == z.x && a.y != z.y };
        if !ok_dir {
            return Err(ModelError::NotCollinear);
        }
        let span = if along_x { (z.x - a.x).abs() } else { (z.y - a.y).abs() };
        self.check_span(span, length).map(|_| ()).map_err(|e| match e {
            ModelError::SpanMismatch { .. } => e,
            other => ModelError::invalid(id, other.to_string()),
        })
    }
}
