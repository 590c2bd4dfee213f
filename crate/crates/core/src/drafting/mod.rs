//! Display lists generated from models: plans, dimension chains and the
//! primitives shared with section drawings and the file emitters.

mod dims;
mod glyphs;
mod plan;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{EntityId, ModelError, Orientation};

pub use dims::{dimension_partition, dimension_slab_group, generate_overall_dimension, generate_span_dimensions, overall_dimension_at};
pub use glyphs::{OpeningClass, OpeningTypeInfo, OPENING_TYPES};
pub use plan::{axis_items, generate_plan_display, PlanOptions};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Pt {
    pub x: f64,
    pub y: f64,
}

impl Pt {
    pub const fn new(x: f64, y: f64) -> Pt {
        Pt { x, y }
    }

    pub fn mm(x: i64, y: i64) -> Pt {
        Pt { x: x as f64, y: y as f64 }
    }
}

impl From<crate::model::Point> for Pt {
    fn from(p: crate::model::Point) -> Pt {
        Pt::mm(p.x, p.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Weight {
    Thin,
    Thick,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    Solid,
    Dashed,
    AxisDashDot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Style {
    pub weight: Weight,
    pub pattern: Pattern,
}

impl Style {
    pub const THIN: Style = Style { weight: Weight::Thin, pattern: Pattern::Solid };
    pub const THICK: Style = Style { weight: Weight::Thick, pattern: Pattern::Solid };
    pub const AXIS: Style = Style { weight: Weight::Thin, pattern: Pattern::AxisDashDot };

    /// Existing elements are drawn thin, new ones thick.
    pub fn for_entity(is_new: bool) -> Style {
        if is_new {
            Style::THICK
        } else {
            Style::THIN
        }
    }

    pub fn dashed(self) -> Style {
        Style { pattern: Pattern::Dashed, ..self }
    }
}

/// Which side of the measured points a dimension line lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimSide {
    Above,
    Below,
    Left,
    Right,
}

impl DimSide {
    /// Horizontal dimension lines (Above/Below) measure distances along X.
    pub fn measures_x(self) -> bool {
        matches!(self, DimSide::Above | DimSide::Below)
    }

    /// The orientation whose axes a span chain on this side measures.
    pub fn axis_orientation(self) -> Orientation {
        if self.measures_x() {
            Orientation::V
        } else {
            Orientation::H
        }
    }

    fn sign(self) -> f64 {
        match self {
            DimSide::Above | DimSide::Right => 1.0,
            DimSide::Below | DimSide::Left => -1.0,
        }
    }
}

/// A linear dimension between `p1` and `p2`, drawn `offset_mm` away on `side`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dimension {
    pub p1: Pt,
    pub p2: Pt,
    pub offset_mm: f64,
    pub text: String,
    pub side: DimSide,
}

/// Lines of an exploded dimension, for emitters.
#[derive(Debug, Clone, PartialEq)]
pub struct DimParts {
    pub line: (Pt, Pt),
    pub extensions: [(Pt, Pt); 2],
    pub ticks: [(Pt, Pt); 2],
    pub text_at: Pt,
    /// Degrees counterclockwise.
    pub text_rotation: f64,
}

impl Dimension {
    pub fn measured(&self) -> f64 {
        if self.side.measures_x() {
            (self.p2.x - self.p1.x).abs()
        } else {
            (self.p2.y - self.p1.y).abs()
        }
    }

    /// Explodes the dimension; `tick` and `gap` are world lengths (serif half-size
    /// and text clearance above the line).
    pub fn parts(&self, tick: f64, gap: f64) -> DimParts {
        let s = self.side.sign();
        let (a, b, text_at, text_rotation) = if self.side.measures_x() {
            let y = self.p1.y + s * self.offset_mm;
            let (a, b) = (Pt::new(self.p1.x, y), Pt::new(self.p2.x, y));
            (a, b, Pt::new((a.x + b.x) / 2.0, y + gap), 0.0)
        } else {
            let x = self.p1.x + s * self.offset_mm;
            let (a, b) = (Pt::new(x, self.p1.y), Pt::new(x, self.p2.y));
            (a, b, Pt::new(x - gap, (a.y + b.y) / 2.0), 90.0)
        };
        let overshoot = |from: Pt, to: Pt| {
            let (dx, dy) = (to.x - from.x, to.y - from.y);
            let len = (dx * dx + dy * dy).sqrt();
            if len == 0.0 {
                to
            } else {
                Pt::new(to.x + dx / len * tick, to.y + dy / len * tick)
            }
        };
        let tick_at = |p: Pt| (Pt::new(p.x - tick, p.y - tick), Pt::new(p.x + tick, p.y + tick));
        DimParts {
            line: (a, b),
            extensions: [(self.p1, overshoot(self.p1, a)), (self.p2, overshoot(self.p2, b))],
            ticks: [tick_at(a), tick_at(b)],
            text_at,
            text_rotation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Primitive {
    Segment { p1: Pt, p2: Pt, style: Style },
    Circle { center: Pt, r: f64, style: Style },
    /// Counterclockwise from `a0` to `a1`, degrees.
    Arc { center: Pt, r: f64, a0: f64, a1: f64, style: Style },
    Text { origin: Pt, height: f64, content: String, rotation: f64 },
    DimLinear(Dimension),
    AxisBubble { center: Pt, r: f64, label: String },
    /// Polyline from the annotated point to the text origin, text lines below the shelf.
    Leader { points: Vec<Pt>, text: Vec<String>, height: f64, line_step: f64 },
}

impl Primitive {
    pub fn segment(p1: Pt, p2: Pt, style: Style) -> Primitive {
        Primitive::Segment { p1, p2, style }
    }

    pub fn style(&self) -> Option<Style> {
        match self {
            Primitive::Segment { style, .. } | Primitive::Circle { style, .. } | Primitive::Arc { style, .. } => Some(*style),
            _ => None,
        }
    }

    fn extend_bounds(&self, b: &mut Bounds) {
        match self {
            Primitive::Segment { p1, p2, .. } => {
                b.add(*p1);
                b.add(*p2);
            }
            Primitive::Circle { center, r, .. } | Primitive::Arc { center, r, .. } | Primitive::AxisBubble { center, r, .. } => {
                b.add(Pt::new(center.x - r, center.y - r));
                b.add(Pt::new(center.x + r, center.y + r));
            }
            Primitive::Text { origin, height, .. } => {
                b.add(*origin);
                b.add(Pt::new(origin.x, origin.y + height));
            }
            Primitive::DimLinear(d) => {
                let parts = d.parts(0.0, 0.0);
                b.add(d.p1);
                b.add(d.p2);
                b.add(parts.line.0);
                b.add(parts.line.1);
            }
            Primitive::Leader { points, .. } => points.iter().for_each(|p| b.add(*p)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    Axes,
    Dimensions,
    Columns,
    Partitions,
    Openings,
    Structure,
    Texts,
    Levels,
    Cut,
    Titles,
}

impl Layer {
    pub fn name(self) -> &'static str {
        match self {
            Layer::Axes => "AXES",
            Layer::Dimensions => "DIMENSIONS",
            Layer::Columns => "COLUMNS",
            Layer::Partitions => "PARTITIONS",
            Layer::Openings => "OPENINGS",
            Layer::Structure => "STRUCTURE",
            Layer::Texts => "TEXTS",
            Layer::Levels => "LEVELS",
            Layer::Cut => "CUT",
            Layer::Titles => "TITLES",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisplayItem {
    pub layer: Layer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub owner: Option<EntityId>,
    #[serde(flatten)]
    pub primitive: Primitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub min: Pt,
    pub max: Pt,
}

impl Bounds {
    fn empty() -> Bounds {
        Bounds { min: Pt::new(f64::INFINITY, f64::INFINITY), max: Pt::new(f64::NEG_INFINITY, f64::NEG_INFINITY) }
    }

    fn add(&mut self, p: Pt) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DisplayList {
    pub items: Vec<DisplayItem>,
}

impl DisplayList {
    pub fn new() -> Self {
        DisplayList::default()
    }

    pub fn push(&mut self, layer: Layer, owner: Option<EntityId>, primitive: Primitive) {
        self.items.push(DisplayItem { layer, owner, primitive });
    }

    pub fn extend(&mut self, layer: Layer, owner: Option<EntityId>, primitives: impl IntoIterator<Item = Primitive>) {
        for p in primitives {
            self.push(layer, owner, p);
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn primitives(&self) -> impl Iterator<Item = &Primitive> {
        self.items.iter().map(|i| &i.primitive)
    }

    pub fn owned_by(&self, id: EntityId) -> impl Iterator<Item = &Primitive> {
        self.items.iter().filter(move |i| i.owner == Some(id)).map(|i| &i.primitive)
    }

    /// Bounding box of all primitives; `None` for an empty list.
    pub fn bounds(&self) -> Option<Bounds> {
        if self.items.is_empty() {
            return None;
        }
        let mut b = Bounds::empty();
        for p in self.primitives() {
            p.extend_bounds(&mut b);
        }
        Some(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DraftError {
    #[error("at least two main {0} axes are needed")]
    TooFewAxes(Orientation),
    #[error("unknown entity {0}")]
    UnknownEntity(EntityId),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Integer millimeters without grouping.
pub fn format_mm(v: f64) -> String {
    format!("{}", v.round() as i64)
}
