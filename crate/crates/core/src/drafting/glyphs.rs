//! Partition patterns and opening glyphs.
//!
//! Glyphs are built in a local frame of the partition: `u` runs along the
//! partition from its start, `v` across it from the center line, positive to
//! the left of the direction of travel.

use super::{Primitive, Pt, Style};
use crate::model::{Linear, Opening, PartitionType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpeningClass {
    Window,
    /// A break in the partition with no filling drawn.
    Plain,
    /// Plain break not reaching the floor, marked with a dashed line.
    PlainRaised,
    Door,
    DoubleDoor,
    FoldingDoor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpeningTypeInfo {
    pub code: u8,
    pub name: &'static str,
    pub class: OpeningClass,
}

const fn t(code: u8, name: &'static str, class: OpeningClass) -> OpeningTypeInfo {
    OpeningTypeInfo { code, name, class }
}

/// The opening types, indexed by `code - 1`.
pub const OPENING_TYPES: [OpeningTypeInfo; 19] = {
    use OpeningClass::*;
    [
        t(1, "window, single sash", Window),
        t(2, "opening without rebates", Plain),
        t(3, "window, double sash", Window),
        t(4, "opening without rebates, not reaching the floor", PlainRaised),
        t(5, "window, triple sash", Window),
        t(6, "window, fixed glazing", Window),
        t(7, "door, single leaf", Door),
        t(8, "door, single leaf, rebated opening", Door),
        t(9, "door, double leaf", DoubleDoor),
        t(10, "door, double leaf, rebated opening", DoubleDoor),
        t(11, "door, single leaf, swinging both ways", Door),
        t(12, "door, double leaf, swinging both ways", DoubleDoor),
        t(13, "opening with rebates", Plain),
        t(14, "opening with rebates, not reaching the floor", PlainRaised),
        t(15, "sliding door, single leaf", Plain),
        t(16, "sliding door, double leaf", Plain),
        t(17, "lifting door", Plain),
        t(18, "folding door, opening without rebates", FoldingDoor),
        t(19, "revolving door", Plain),
    ]
};

pub fn opening_class(gost_type: u8) -> OpeningClass {
    OPENING_TYPES.get(usize::from(gost_type).wrapping_sub(1)).map_or(OpeningClass::Plain, |i| i.class)
}

/// Maps local (u, v) of a partition to world coordinates.
#[derive(Debug, Clone, Copy)]
pub(super) struct Frame {
    origin: Pt,
    along_x: bool,
}

impl Frame {
    pub fn of(line: &Linear) -> Frame {
        Frame { origin: line.start.into(), along_x: line.along_x }
    }

    pub fn at(&self, u: f64, v: f64) -> Pt {
        if self.along_x {
            Pt::new(self.origin.x + u, self.origin.y + v)
        } else {
            // +u runs to +Y, so the left side is -X
            Pt::new(self.origin.x - v, self.origin.y + u)
        }
    }

    pub fn seg(&self, u0: f64, v0: f64, u1: f64, v1: f64, style: Style) -> Primitive {
        Primitive::segment(self.at(u0, v0), self.at(u1, v1), style)
    }
}

/// Local-frame shape before placement.
enum Local {
    Seg((f64, f64), (f64, f64)),
    /// Counterclockwise in the local frame from `from` to `to` around `center`.
    Arc { center: (f64, f64), from: (f64, f64), to: (f64, f64) },
}

fn angle(center: Pt, p: Pt) -> f64 {
    let a = (p.y - center.y).atan2(p.x - center.x).to_degrees();
    let a = if a < 0.0 { a + 360.0 } else { a };
    // snap to exact quarter turns so output does not depend on atan2 rounding
    let r = a.round();
    if (a - r).abs() < 1e-9 {
        r % 360.0
    } else {
        a
    }
}

/// Primitives of one opening. `line` is its partition's center line.
pub(super) fn opening_glyph(line: &Linear, o: &Opening, style: Style) -> Vec<Primitive> {
    let frame = Frame::of(line);
    let w = o.width_mm as f64;
    let h = line.thickness as f64 / 2.0;
    let mut shapes = Vec::new();
    match opening_class(o.gost_type) {
        OpeningClass::Window => {
            for v in [-h, 0.0, h] {
                shapes.push(Local::Seg((0.0, v), (w, v)));
            }
        }
        OpeningClass::Plain => {}
        OpeningClass::PlainRaised => shapes.push(Local::Seg((0.0, 0.0), (w, 0.0))),
        OpeningClass::Door => {
            shapes.push(Local::Seg((0.0, h), (0.0, h + w)));
            shapes.push(Local::Arc { center: (0.0, h), from: (w, h), to: (0.0, h + w) });
        }
        OpeningClass::DoubleDoor => {
            let half = w / 2.0;
            shapes.push(Local::Seg((0.0, h), (0.0, h + half)));
            shapes.push(Local::Arc { center: (0.0, h), from: (half, h), to: (0.0, h + half) });
            shapes.push(Local::Seg((w, h), (w, h + half)));
            shapes.push(Local::Arc { center: (w, h), from: (w, h + half), to: (w - half, h) });
        }
        OpeningClass::FoldingDoor => {
            let d = w / 6.0;
            let pts = [(0.0, h), (w / 4.0, h + d), (w / 2.0, h), (3.0 * w / 4.0, h + d), (w, h)];
            for p in pts.windows(2) {
                shapes.push(Local::Seg(p[0], p[1]));
            }
        }
    }
    let pattern_style = if opening_class(o.gost_type) == OpeningClass::PlainRaised { style.dashed() } else { style };
    let start = o.anchor_offset_mm as f64;
    // variant transform: rot180 is a half turn about the opening center, mirrored reflects across the center line
    let place = |(u, v): (f64, f64)| {
        let (u, v) = if o.rot180 { (w - u, -v) } else { (u, v) };
        let v = if o.mirrored { -v } else { v };
        frame.at(start + u, v)
    };
    let reflects = o.mirrored;
    shapes
        .into_iter()
        .map(|s| match s {
            Local::Seg(a, b) => Primitive::segment(place(a), place(b), pattern_style),
            Local::Arc { center, from, to } => {
                let c = place(center);
                let (from, to) = if reflects { (place(to), place(from)) } else { (place(from), place(to)) };
                let r = ((from.x - c.x).powi(2) + (from.y - c.y).powi(2)).sqrt();
                Primitive::Arc { center: c, r, a0: angle(c, from), a1: angle(c, to), style: pattern_style }
            }
        })
        .collect()
}

/// Outline and pattern of one solid part `[a, b]` of a partition.
pub(super) fn partition_part(
    frame: &Frame,
    kind: PartitionType,
    thickness: f64,
    a: f64,
    b: f64,
    hatch_step: f64,
    style: Style,
) -> Vec<Primitive> {
    let h = thickness / 2.0;
    let mut out = vec![
        frame.seg(a, -h, b, -h, style),
        frame.seg(a, h, b, h, style),
        frame.seg(a, -h, a, h, style),
        frame.seg(b, -h, b, h, style),
    ];
    match kind {
        PartitionType::Ordinary => {}
        PartitionType::Glazed1 => out.push(frame.seg(a, 0.0, b, 0.0, style)),
        PartitionType::Glazed2 => {
            out.push(frame.seg(a, -h / 3.0, b, -h / 3.0, style));
            out.push(frame.seg(a, h / 3.0, b, h / 3.0, style));
        }
        PartitionType::PanelShield => {
            let step = 1000.0;
            let mut u = a + step;
            while u < b {
                out.push(frame.seg(u, -h, u, h, style));
                u += step;
            }
        }
        PartitionType::GlassBlock => {
            let cell = thickness.max(200.0);
            let mut u = a;
            while u + cell <= b {
                out.push(frame.seg(u, -h, u + cell, h, style));
                out.push(frame.seg(u, h, u + cell, -h, style));
                u += cell;
            }
        }
        PartitionType::Brick => {
            // 45 degree hatch: from (u0, -h) to (u0 + t, h), clipped to [a, b]
            let mut u0 = a - thickness + hatch_step;
            while u0 < b {
                let lo = u0.max(a);
                let hi = (u0 + thickness).min(b);
                if hi > lo {
                    out.push(frame.seg(lo, -h + (lo - u0), hi, -h + (hi - u0), style));
                }
                u0 += hatch_step;
            }
        }
    }
    out
}
