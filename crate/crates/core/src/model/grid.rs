use serde::{Deserialize, Serialize};

use super::{Anchor, AxisGroupKind, AxisLabel, EntityId, Mm, Model, ModelError, Orientation, Point, MAX_AXES_PER_GROUP};

/// One coordination axis after resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedAxis {
    /// 1-based index in the common numbering of its orientation (ascending coordinate).
    pub index: u32,
    pub coord: Mm,
    pub label: String,
    pub group: EntityId,
    /// 0-based position within its group.
    pub ordinal: u32,
    pub main: bool,
}

/// Both resolved axis families of a model.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Grid {
    pub h: Vec<ResolvedAxis>,
    pub v: Vec<ResolvedAxis>,
}

/// A node of a column or footing group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupNode {
    pub ix: u32,
    pub iy: u32,
    pub h_axis: u32,
    pub v_axis: u32,
}

impl Grid {
    pub fn axes(&self, orientation: Orientation) -> &[ResolvedAxis] {
        match orientation {
            Orientation::H => &self.h,
            Orientation::V => &self.v,
        }
    }

    pub fn axis(&self, orientation: Orientation, index: u32) -> Result<&ResolvedAxis, ModelError> {
        index
            .checked_sub(1)
            .and_then(|i| self.axes(orientation).get(i as usize))
            .ok_or(ModelError::UnknownAxis { orientation, index })
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty() || self.v.is_empty()
    }

    /// Intersection of horizontal axis `h_axis` and vertical axis `v_axis`.
    pub fn node(&self, h_axis: u32, v_axis: u32) -> Result<Point, ModelError> {
        let y = self.axis(Orientation::H, h_axis)?.coord;
        let x = self.axis(Orientation::V, v_axis)?.coord;
        Ok(Point { x, y })
    }

    pub fn anchor_point(&self, anchor: &Anchor) -> Result<Point, ModelError> {
        let n = self.node(anchor.h_axis, anchor.v_axis)?;
        Ok(Point { x: n.x + anchor.dx_mm, y: n.y + anchor.dy_mm })
    }

    /// Axis nearest to `coord`; ties go to the lower index.
    pub fn nearest(&self, orientation: Orientation, coord: Mm) -> Option<&ResolvedAxis> {
        self.axes(orientation).iter().min_by_key(|a| ((a.coord - coord).abs(), a.index))
    }

    /// Anchor to the node nearest `p`, with the remainder as offset.
    pub fn anchor_nearest(&self, p: Point) -> Result<Anchor, ModelError> {
        let h = self.nearest(Orientation::H, p.y).ok_or(ModelError::NoGrid)?;
        let v = self.nearest(Orientation::V, p.x).ok_or(ModelError::NoGrid)?;
        Ok(Anchor { h_axis: h.index, v_axis: v.index, dx_mm: p.x - v.coord, dy_mm: p.y - h.coord })
    }

    /// Main-axis nodes of the rectangle spanned by two corner anchors, ordered by
    /// `iy` then `ix`. Corners must be offset-free nodes of main axes.
    pub fn group_nodes(&self, start: &Anchor, end: &Anchor) -> Result<Vec<GroupNode>, ModelError> {
        for a in [start, end] {
            if a.dx_mm != 0 || a.dy_mm != 0 {
                return Err(ModelError::NonRectangularRun);
            }
            if !self.axis(Orientation::H, a.h_axis)?.main || !self.axis(Orientation::V, a.v_axis)?.main {
                return Err(ModelError::NonRectangularRun);
            }
        }
        let (h0, h1) = (start.h_axis.min(end.h_axis), start.h_axis.max(end.h_axis));
        let (v0, v1) = (start.v_axis.min(end.v_axis), start.v_axis.max(end.v_axis));
        let hs: Vec<u32> = self.h[(h0 - 1) as usize..h1 as usize].iter().filter(|a| a.main).map(|a| a.index).collect();
        let vs: Vec<u32> = self.v[(v0 - 1) as usize..v1 as usize].iter().filter(|a| a.main).map(|a| a.index).collect();
        let mut out = Vec::with_capacity(hs.len() * vs.len());
        for (iy, &h_axis) in hs.iter().enumerate() {
            for (ix, &v_axis) in vs.iter().enumerate() {
                out.push(GroupNode { ix: ix as u32, iy: iy as u32, h_axis, v_axis });
            }
        }
        Ok(out)
    }
}

fn letter_label(alphabet: &[char], i: usize) -> String {
    let c = alphabet[i % alphabet.len()];
    std::iter::repeat_n(c, i / alphabet.len() + 1).collect()
}

enum LabelCursor {
    Letter(usize),
    Number(u32),
}

impl LabelCursor {
    fn take(&mut self, alphabet: &[char]) -> String {
        match self {
            LabelCursor::Letter(i) => {
                let s = letter_label(alphabet, *i);
                *i += 1;
                s
            }
            LabelCursor::Number(n) => {
                let s = n.to_string();
                *n += 1;
                s
            }
        }
    }
}

fn overflow(group: EntityId) -> ModelError {
    ModelError::invalid(group, "axis coordinates overflow")
}

impl Model {
    /// Axes of one orientation, main and additional merged, ascending by coordinate.
    pub fn resolve_axes(&self, orientation: Orientation) -> Result<Vec<ResolvedAxis>, ModelError> {
        let alphabet: Vec<char> = self.settings.letter_alphabet.chars().collect();
        if alphabet.is_empty() {
            return Err(ModelError::invalid(None, "letter alphabet is empty"));
        }
        let lettered = match orientation {
            Orientation::H => self.settings.horiz_axes_lettered,
            Orientation::V => !self.settings.horiz_axes_lettered,
        };
        let mut cursor = if lettered { LabelCursor::Letter(0) } else { LabelCursor::Number(1) };
        let groups = self.axis_groups(orientation);

        let mut mains: Vec<ResolvedAxis> = Vec::new();
        let mut at: Mm = 0;
        for g in groups {
            if g.count == 0 || g.count > MAX_AXES_PER_GROUP {
                return Err(ModelError::CountOutOfRange(g.count));
            }
            let AxisGroupKind::Main { step_mm } = g.kind else { continue };
            if step_mm <= 0 {
                return Err(ModelError::invalid(g.id, "main axis step must be positive"));
            }
            match g.label_start {
                Some(AxisLabel::Letter(c)) => {
                    let pos = alphabet
                        .iter()
                        .position(|&a| a == c)
                        .ok_or_else(|| ModelError::invalid(g.id, format!("label `{c}` is not in the axis alphabet")))?;
                    cursor = LabelCursor::Letter(pos);
                }
                Some(AxisLabel::Number(n)) => cursor = LabelCursor::Number(n),
                None => {}
            }
            for k in 0..g.count {
                mains.push(ResolvedAxis {
                    index: 0,
                    coord: at,
                    label: cursor.take(&alphabet),
                    group: g.id,
                    ordinal: k,
                    main: true,
                });
                at = at.checked_add(step_mm).ok_or_else(|| overflow(g.id))?;
            }
        }

        let mut extra: Vec<(usize, ResolvedAxis)> = Vec::new();
        for g in groups {
            let AxisGroupKind::Additional { base_axis, offset_mm } = g.kind else { continue };
            let base_pos = base_axis
                .checked_sub(1)
                .map(|b| b as usize)
                .filter(|&b| b < mains.len())
                .ok_or(ModelError::DanglingBaseAxis { group: g.id, base: base_axis })?;
            if offset_mm <= 0 {
                return Err(ModelError::AdditionalOutOfBay { group: g.id });
            }
            let base = mains[base_pos].coord;
            let limit = mains.get(base_pos + 1).map(|a| a.coord);
            for k in 0..g.count {
                let shift = offset_mm.checked_mul(i64::from(k) + 1).ok_or_else(|| overflow(g.id))?;
                let coord = base.checked_add(shift).ok_or_else(|| overflow(g.id))?;
                if limit.is_some_and(|l| coord >= l) {
                    return Err(ModelError::AdditionalOutOfBay { group: g.id });
                }
                if extra.iter().any(|(_, a)| a.coord == coord) {
                    return Err(ModelError::invalid(g.id, format!("additional axis at {coord} coincides with another axis")));
                }
                extra.push((base_pos, ResolvedAxis { index: 0, coord, label: String::new(), group: g.id, ordinal: k, main: false }));
            }
        }
        extra.sort_by_key(|(_, a)| a.coord);
        let mut per_base = vec![0u32; mains.len()];
        for (base_pos, a) in &mut extra {
            per_base[*base_pos] += 1;
            a.label = format!("{}/{}", mains[*base_pos].label, per_base[*base_pos]);
        }

        let mut all: Vec<ResolvedAxis> = mains.into_iter().chain(extra.into_iter().map(|(_, a)| a)).collect();
        all.sort_by_key(|a| a.coord);
        for (i, a) in all.iter_mut().enumerate() {
            a.index = i as u32 + 1;
        }
        Ok(all)
    }

    pub fn grid(&self) -> Result<Grid, ModelError> {
        Ok(Grid { h: self.resolve_axes(Orientation::H)?, v: self.resolve_axes(Orientation::V)? })
    }

    /// World position of the node (h_axis, v_axis).
    pub fn node_position(&self, h_axis: u32, v_axis: u32) -> Result<Point, ModelError> {
        self.grid()?.node(h_axis, v_axis)
    }
}
