//! World-frame footprints of model entities (integer millimeters).

use serde::{Deserialize, Serialize};

use super::grid::GroupNode;
use super::{Beam, ColumnGroup, FootingGroup, FoundationBeam, Grid, Mm, ModelError, Opening, Partition, Point, SlabGroup, StripFoundation};

/// Axis-aligned rectangle, `x0 <= x1`, `y0 <= y1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub x0: Mm,
    pub y0: Mm,
    pub x1: Mm,
    pub y1: Mm,
}

impl Rect {
    pub fn centered(c: Point, size_x: Mm, size_y: Mm) -> Rect {
        let x0 = c.x - size_x / 2;
        let y0 = c.y - size_y / 2;
        Rect { x0, y0, x1: x0 + size_x, y1: y0 + size_y }
    }

    pub fn from_corner(p: Point, size_x: Mm, size_y: Mm) -> Rect {
        Rect { x0: p.x, y0: p.y, x1: p.x + size_x, y1: p.y + size_y }
    }

    pub fn width(&self) -> Mm {
        self.x1 - self.x0
    }

    pub fn height(&self) -> Mm {
        self.y1 - self.y0
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x0, self.y0),
            Point::new(self.x1, self.y0),
            Point::new(self.x1, self.y1),
            Point::new(self.x0, self.y1),
        ]
    }
}

/// A straight element described by the start of its center line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Linear {
    pub start: Point,
    pub along_x: bool,
    pub length: Mm,
    pub thickness: Mm,
}

impl Linear {
    pub fn end(&self) -> Point {
        self.point_at(self.length)
    }

    /// Point on the center line at distance `t` from the start.
    pub fn point_at(&self, t: Mm) -> Point {
        if self.along_x {
            Point::new(self.start.x + t, self.start.y)
        } else {
            Point::new(self.start.x, self.start.y + t)
        }
    }

    /// Footprint of the part between distances `t0` and `t1` along the center line.
    pub fn part_rect(&self, t0: Mm, t1: Mm) -> Rect {
        let half = self.thickness / 2;
        if self.along_x {
            Rect { x0: self.start.x + t0, x1: self.start.x + t1, y0: self.start.y - half, y1: self.start.y - half + self.thickness }
        } else {
            Rect { y0: self.start.y + t0, y1: self.start.y + t1, x0: self.start.x - half, x1: self.start.x - half + self.thickness }
        }
    }

    pub fn rect(&self) -> Rect {
        self.part_rect(0, self.length)
    }

    /// Distance along the element of the projection of `p`, and the distance of
    /// `p` from the (finite) center line.
    pub fn project(&self, p: Point) -> (Mm, f64) {
        let (along, across) = if self.along_x {
            (p.x - self.start.x, p.y - self.start.y)
        } else {
            (p.y - self.start.y, p.x - self.start.x)
        };
        let outside = if along < 0 {
            -along
        } else if along > self.length {
            along - self.length
        } else {
            0
        };
        (along, ((outside * outside + across * across) as f64).sqrt())
    }
}

pub fn partition_line(grid: &Grid, p: &Partition) -> Result<Linear, ModelError> {
    Ok(Linear { start: grid.anchor_point(&p.anchor)?, along_x: p.along_x, length: p.length_mm, thickness: p.thickness_mm })
}

pub fn strip_line(grid: &Grid, s: &StripFoundation) -> Result<Linear, ModelError> {
    Ok(Linear { start: grid.anchor_point(&s.anchor)?, along_x: s.along_x, length: s.length_mm, thickness: s.width_mm })
}

pub fn beam_line(grid: &Grid, b: &Beam) -> Result<Linear, ModelError> {
    Ok(Linear { start: grid.anchor_point(&b.anchor)?, along_x: b.along_x, length: b.length_mm, thickness: b.width_mm })
}

pub fn foundation_beam_line(grid: &Grid, b: &FoundationBeam) -> Result<Linear, ModelError> {
    Ok(Linear { start: grid.anchor_point(&b.anchor)?, along_x: b.along_x, length: b.length_mm, thickness: b.width_mm })
}

/// Footprint of an opening: its slot through the full partition thickness.
pub fn opening_rect(line: &Linear, o: &Opening) -> Rect {
    line.part_rect(o.anchor_offset_mm, o.anchor_offset_mm + o.width_mm)
}

/// Placed member of a column or footing group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupMember {
    pub node: GroupNode,
    pub center: Point,
    pub rect: Rect,
}

fn members(grid: &Grid, nodes: Vec<GroupNode>, dx: Mm, dy: Mm, size_x: Mm, size_y: Mm) -> Result<Vec<GroupMember>, ModelError> {
    nodes
        .into_iter()
        .map(|node| {
            let n = grid.node(node.h_axis, node.v_axis)?;
            let center = Point::new(n.x + dx, n.y + dy);
            Ok(GroupMember { node, center, rect: Rect::centered(center, size_x, size_y) })
        })
        .collect()
}

pub fn column_members(grid: &Grid, g: &ColumnGroup) -> Result<Vec<GroupMember>, ModelError> {
    let (sx, sy) = if g.along_x { (g.width_mm, g.thickness_mm) } else { (g.thickness_mm, g.width_mm) };
    members(grid, grid.group_nodes(&g.start, &g.end)?, g.center_offset.dx, g.center_offset.dy, sx, sy)
}

pub fn footing_members(grid: &Grid, g: &FootingGroup) -> Result<Vec<GroupMember>, ModelError> {
    let (sx, sy) = if g.along_x { (g.length_mm, g.width_mm) } else { (g.width_mm, g.length_mm) };
    members(grid, grid.group_nodes(&g.start, &g.end)?, g.center_offset.dx, g.center_offset.dy, sx, sy)
}

/// Footprints of the slabs of a group, in laying order.
pub fn slab_rects(grid: &Grid, s: &SlabGroup) -> Result<Vec<Rect>, ModelError> {
    let origin = grid.anchor_point(&s.anchor)?;
    Ok((0..s.count as Mm)
        .map(|i| {
            if s.along_x {
                Rect::from_corner(Point::new(origin.x, origin.y + i * s.width_mm), s.length_mm, s.width_mm)
            } else {
                Rect::from_corner(Point::new(origin.x + i * s.width_mm, origin.y), s.width_mm, s.length_mm)
            }
        })
        .collect())
}
