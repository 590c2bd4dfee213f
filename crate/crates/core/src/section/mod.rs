//! Derived plans and building sections.

mod derive;
mod secant;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drafting::{DisplayList, Layer, Primitive, Pt, Style};
use crate::model::{geom, EntityId, Grid, Mm, Model, ModelError, Orientation, PlanKind, Rect};

pub use derive::{derive_ceiling_plan, derive_foundation_plan, FoundationOptions, FOOTING_HEIGHT_MM, FOOTING_MARGIN_MM, STRIP_MARGIN_MM};
pub use secant::{secant_trace, step_secant, Secant, SecantStep, ViewDirection};

/// Height given to the top storey when the spec has no roof.
pub const DEFAULT_STOREY_HEIGHT_MM: Mm = 3000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectionError {
    #[error("section needs at least one floor")]
    NoFloors,
    #[error("levels must increase strictly from the foundation sole up to the roof")]
    LevelsNotIncreasing,
    #[error("no plan named `{0}`")]
    DanglingPlanRef(String),
    #[error("plan `{plan}` is a {found} plan, expected {expected}")]
    WrongKind { plan: String, expected: PlanKind, found: PlanKind },
    #[error("secant needs at least two vertices")]
    SecantTooShort,
    #[error("secant segment {index} is empty or not parallel to X or Y")]
    NonAxisAlignedSecant { index: usize },
    #[error("only a single-segment secant can be rotated")]
    RotateOnPolyline,
    #[error("scale must be positive")]
    InvalidScale,
    #[error("only floors above the first can take a ceiling plan")]
    MisplacedCeilingRef,
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl SectionError {
    pub fn code(&self) -> &'static str {
        match self {
            SectionError::NoFloors => "NoFloors",
            SectionError::LevelsNotIncreasing => "LevelsNotIncreasing",
            SectionError::DanglingPlanRef(_) => "DanglingPlanRef",
            SectionError::WrongKind { .. } => "WrongKind",
            SectionError::SecantTooShort => "SecantTooShort",
            SectionError::NonAxisAlignedSecant { .. } => "NonAxisAlignedSecant",
            SectionError::RotateOnPolyline => "RotateOnPolyline",
            SectionError::InvalidScale => "InvalidScale",
            SectionError::MisplacedCeilingRef => "MisplacedCeilingRef",
            SectionError::Model(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanAtLevel {
    pub plan: String,
    pub level_mm: Mm,
    /// Floors above the first: a ceiling plan whose slabs form this floor.
    /// Slab tops sit at `level_mm` with the beams hung below them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ceiling: Option<String>,
}

impl PlanAtLevel {
    pub fn new(plan: impl Into<String>, level_mm: Mm) -> Self {
        PlanAtLevel { plan: plan.into(), level_mm, ceiling: None }
    }

    pub fn with_ceiling(mut self, plan: impl Into<String>) -> Self {
        self.ceiling = Some(plan.into());
        self
    }
}

fn default_scale() -> u32 {
    100
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionSpec {
    /// Bottom to top.
    pub floors: Vec<PlanAtLevel>,
    /// Foundation plan at its sole level.
    #[serde(default)]
    pub foundation: Option<PlanAtLevel>,
    /// Ceiling plan at the underside of the roof.
    #[serde(default)]
    pub roof: Option<PlanAtLevel>,
    pub secant: Secant,
    pub letter: String,
    #[serde(default = "default_scale")]
    pub scale: u32,
}

impl SectionSpec {
    /// Every level of the spec, ascending when the spec is valid.
    pub fn levels(&self) -> Vec<Mm> {
        self.foundation
            .iter()
            .chain(&self.floors)
            .chain(&self.roof)
            .map(|p| p.level_mm)
            .collect()
    }

    /// Every plan name the spec refers to, each once, bottom to top.
    pub fn plan_refs(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        let floors = self.floors.iter().flat_map(|f| f.ceiling.iter().chain([&f.plan]));
        for r in self.foundation.iter().map(|f| &f.plan).chain(floors).chain(self.roof.iter().map(|r| &r.plan)) {
            if !out.contains(&r.as_str()) {
                out.push(r);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), SectionError> {
        if self.floors.is_empty() {
            return Err(SectionError::NoFloors);
        }
        let first = self.floors.first().into_iter();
        if first.chain(&self.foundation).chain(&self.roof).any(|p| p.ceiling.is_some()) {
            return Err(SectionError::MisplacedCeilingRef);
        }
        if self.levels().windows(2).any(|w| w[0] >= w[1]) {
            return Err(SectionError::LevelsNotIncreasing);
        }
        if self.scale == 0 {
            return Err(SectionError::InvalidScale);
        }
        self.secant.validate()
    }

    fn storey_top(&self, floor: usize) -> Mm {
        match (self.floors.get(floor + 1), &self.roof) {
            (Some(next), _) => next.level_mm,
            (None, Some(roof)) => roof.level_mm,
            (None, None) => self.floors[floor].level_mm + DEFAULT_STOREY_HEIGHT_MM,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SectionWarning {
    /// The secant cuts nothing; only axes and levels are drawn.
    EmptySecantIntersection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionOutput {
    pub display: DisplayList,
    pub warnings: Vec<SectionWarning>,
}

/// Elevation in meters with three decimals: "+6.000", "±0.000", "−1.800" (U+2212).
pub fn format_level(mm: Mm) -> String {
    let sign = match mm.signum() {
        0 => "±",
        1 => "+",
        _ => "\u{2212}",
    };
    let a = mm.unsigned_abs();
    format!("{sign}{}.{:03}", a / 1000, a % 1000)
}

fn resolve<'a>(plans: &'a BTreeMap<String, Model>, r: &PlanAtLevel, kind: PlanKind) -> Result<&'a Model, SectionError> {
    let m = plans.get(&r.plan).ok_or_else(|| SectionError::DanglingPlanRef(r.plan.clone()))?;
    if m.kind != kind {
        return Err(SectionError::WrongKind { plan: r.plan.clone(), expected: kind, found: m.kind });
    }
    Ok(m)
}

/// A straight piece of the secant and where it starts on the unfolded strip.
#[derive(Debug, Clone, Copy)]
struct Piece {
    a: Pt,
    along_x: bool,
    lo: f64,
    hi: f64,
    s0: f64,
}

impl Piece {
    fn line(&self) -> f64 {
        if self.along_x {
            self.a.y
        } else {
            self.a.x
        }
    }

    fn arc(&self, coord: f64) -> f64 {
        let start = if self.along_x { self.a.x } else { self.a.y };
        self.s0 + (coord - start).abs()
    }
}

struct Strip {
    pieces: Vec<Piece>,
    total: f64,
    right: bool,
}

impl Strip {
    fn new(secant: &Secant) -> Strip {
        let mut s0 = 0.0;
        let mut pieces = Vec::new();
        for w in secant.points.windows(2) {
            let along_x = w[0].y == w[1].y;
            let (p, q) = if along_x { (w[0].x, w[1].x) } else { (w[0].y, w[1].y) };
            pieces.push(Piece { a: w[0], along_x, lo: p.min(q), hi: p.max(q), s0 });
            s0 += (q - p).abs();
        }
        Strip { pieces, total: s0, right: secant.view == ViewDirection::RightOfTravel }
    }

    /// Horizontal section coordinate of arc length `s`.
    fn x(&self, s: f64) -> f64 {
        if self.right {
            self.total - s
        } else {
            s
        }
    }

    fn span(&self, p: &Piece, c0: f64, c1: f64) -> (f64, f64) {
        let (x0, x1) = (self.x(p.arc(c0)), self.x(p.arc(c1)));
        (x0.min(x1), x0.max(x1))
    }

    /// Horizontal extents where the secant runs through `r`.
    fn cuts(&self, r: &Rect) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for p in &self.pieces {
            let (c_lo, c_hi, across_lo, across_hi) =
                if p.along_x { (r.x0, r.x1, r.y0, r.y1) } else { (r.y0, r.y1, r.x0, r.x1) };
            let line = p.line();
            if !((across_lo as f64) < line && line < across_hi as f64) {
                continue;
            }
            let (c0, c1) = ((c_lo as f64).max(p.lo), (c_hi as f64).min(p.hi));
            if c1 > c0 {
                out.push(self.span(p, c0, c1));
            }
        }
        out
    }
}

fn rect_outline(x0: f64, x1: f64, y0: f64, y1: f64, style: Style) -> [Primitive; 4] {
    let c = [Pt::new(x0, y0), Pt::new(x1, y0), Pt::new(x1, y1), Pt::new(x0, y1)];
    [0, 1, 2, 3].map(|i| Primitive::segment(c[i], c[(i + 1) % 4], style))
}

struct Drawer<'a> {
    strip: &'a Strip,
    out: DisplayList,
    cut_any: bool,
}

impl Drawer<'_> {
    fn rect(&mut self, layer: Layer, owner: EntityId, x: (f64, f64), y0: Mm, y1: Mm, style: Style) {
        if y1 > y0 && x.1 > x.0 {
            self.cut_any = true;
            self.out.extend(layer, Some(owner), rect_outline(x.0, x.1, y0 as f64, y1 as f64, style));
        }
    }

    /// Cuts `r` at every crossing, drawing it between `y0` and `y1`.
    fn solid(&mut self, layer: Layer, owner: EntityId, r: &Rect, y0: Mm, y1: Mm, style: Style) {
        for x in self.strip.cuts(r) {
            self.rect(layer, owner, x, y0, y1, style);
        }
    }

    fn floor(&mut self, m: &Model, grid: &Grid, level: Mm, top: Mm) -> Result<(), SectionError> {
        for g in sorted(&m.column_groups, |g| g.id) {
            let style = Style::for_entity(g.is_new);
            for member in geom::column_members(grid, g)? {
                self.solid(Layer::Columns, g.id, &member.rect, level, top, style);
            }
        }
        for p in sorted(&m.partitions, |p| p.id) {
            let line = geom::partition_line(grid, p)?;
            self.partition(m, p.id, &line, p.is_new, level, top);
        }
        Ok(())
    }

    fn partition(&mut self, m: &Model, id: EntityId, line: &geom::Linear, is_new: bool, level: Mm, top: Mm) {
        let style = Style::for_entity(is_new);
        let mut openings: Vec<_> = m.openings_on(id).collect();
        openings.sort_by_key(|o| o.anchor_offset_mm);
        let start = if line.along_x { line.start.x } else { line.start.y } as f64;
        let rect = line.rect();
        for p in self.strip.pieces.clone() {
            let single = Strip { pieces: vec![p], total: self.strip.total, right: self.strip.right };
            let Some(x) = single.cuts(&rect).first().copied() else { continue };
            if p.along_x == line.along_x {
                // running along the cut: the wall face with its openings
                self.rect(Layer::Partitions, id, x, level, top, style);
                for o in &openings {
                    let (sill, h) = vertical(o);
                    let (u0, u1) = (start + o.anchor_offset_mm as f64, start + (o.anchor_offset_mm + o.width_mm) as f64);
                    let (c0, c1) = (u0.max(p.lo), u1.min(p.hi));
                    if c1 <= c0 {
                        continue;
                    }
                    self.rect(Layer::Openings, o.id, single.span(&p, c0, c1), level + sill, level + sill + h, Style::THIN);
                    if let Some(l) = o.section_extra.as_ref().and_then(|e| e.lintel.as_ref()) {
                        let mid = (u0 + u1) / 2.0;
                        let half = l.length_mm as f64 / 2.0;
                        let (l0, l1) = ((mid - half).max(p.lo), (mid + half).min(p.hi));
                        if l1 > l0 {
                            let y0 = level + sill + h;
                            self.rect(Layer::Openings, o.id, single.span(&p, l0, l1), y0, y0 + l.height_mm, Style::THIN);
                        }
                    }
                }
            } else {
                let u = p.line() - start;
                let hit = openings
                    .iter()
                    .find(|o| (o.anchor_offset_mm as f64) < u && u < (o.anchor_offset_mm + o.width_mm) as f64);
                match hit {
                    None => self.rect(Layer::Partitions, id, x, level, top, style),
                    Some(o) => {
                        let (sill, h) = vertical(o);
                        let head = (level + sill + h).min(top);
                        self.rect(Layer::Partitions, id, x, level, level + sill, style);
                        self.rect(Layer::Partitions, id, x, head, top, style);
                        if let Some(l) = o.section_extra.as_ref().and_then(|e| e.lintel.as_ref()) {
                            self.rect(Layer::Openings, o.id, x, head, (head + l.height_mm).min(top), Style::THIN);
                        }
                    }
                }
            }
        }
    }

    fn foundation(&mut self, m: &Model, grid: &Grid, sole: Mm, ground: Mm) -> Result<(), SectionError> {
        for g in sorted(&m.footing_groups, |g| g.id) {
            let style = Style::for_entity(g.is_new);
            for member in geom::footing_members(grid, g)? {
                self.solid(Layer::Structure, g.id, &member.rect, sole, sole + g.height_mm, style);
            }
        }
        for s in sorted(&m.strip_foundations, |s| s.id) {
            let r = geom::strip_line(grid, s)?.rect();
            self.solid(Layer::Structure, s.id, &r, sole, ground, Style::for_entity(s.is_new));
        }
        for b in sorted(&m.foundation_beams, |b| b.id) {
            let r = geom::foundation_beam_line(grid, b)?.rect();
            self.solid(Layer::Structure, b.id, &r, ground - b.height_mm, ground, Style::for_entity(b.is_new));
        }
        Ok(())
    }

    fn roof(&mut self, m: &Model, grid: &Grid, underside: Mm) -> Result<(), SectionError> {
        for b in sorted(&m.beams, |b| b.id) {
            let r = geom::beam_line(grid, b)?.rect();
            self.solid(Layer::Structure, b.id, &r, underside, underside + b.height_mm, Style::for_entity(b.is_new));
        }
        let bed = underside + m.beams.iter().map(|b| b.height_mm).max().unwrap_or(0);
        for s in sorted(&m.slab_groups, |s| s.id) {
            for r in geom::slab_rects(grid, s)? {
                self.solid(Layer::Structure, s.id, &r, bed, bed + s.height_mm, Style::THIN);
            }
        }
        Ok(())
    }
}

fn sorted<T>(items: &[T], key: impl Fn(&T) -> EntityId) -> Vec<&T> {
    let mut v: Vec<&T> = items.iter().collect();
    v.sort_by_key(|t| key(t));
    v
}

fn vertical(o: &crate::model::Opening) -> (Mm, Mm) {
    match &o.section_extra {
        Some(e) => (e.sill_height_mm, e.opening_height_mm),
        None => (0, o.height_mm),
    }
}

/// Draws the section of `spec` over the named plans.
///
/// Entities are sorted by id within each plan so the output is deterministic.
pub fn generate_section_display(spec: &SectionSpec, plans: &BTreeMap<String, Model>) -> Result<SectionOutput, SectionError> {
    spec.validate()?;
    let floors = spec.floors.iter().map(|f| resolve(plans, f, PlanKind::Floor)).collect::<Result<Vec<_>, _>>()?;
    let foundation = spec.foundation.as_ref().map(|f| resolve(plans, f, PlanKind::Foundation)).transpose()?;
    let roof = spec.roof.as_ref().map(|r| resolve(plans, r, PlanKind::Ceiling)).transpose()?;
    let floor_slabs = spec
        .floors
        .iter()
        .map(|f| f.ceiling.as_ref().map(|c| resolve(plans, &PlanAtLevel::new(c.clone(), f.level_mm), PlanKind::Ceiling)).transpose())
        .collect::<Result<Vec<_>, _>>()?;

    let strip = Strip::new(&spec.secant);
    let mut d = Drawer { strip: &strip, out: DisplayList::new(), cut_any: false };
    let scale = spec.scale as f64;
    let settings = &floors[0].settings;
    let font = settings.gen_font_height_mm * scale;

    let levels = spec.levels();
    let (bottom, top) = (levels[0], *levels.last().expect("at least one floor"));
    let top = top.max(spec.storey_top(spec.floors.len() - 1));

    let grid = floors[0].grid()?;
    section_axes(&strip, &grid, bottom as f64, top as f64, font, &mut d.out);

    if let (Some(m), Some(f)) = (foundation, &spec.foundation) {
        d.foundation(m, &m.grid()?, f.level_mm, spec.floors[0].level_mm)?;
    }
    for (i, (m, f)) in floors.iter().zip(&spec.floors).enumerate() {
        if let Some(c) = floor_slabs[i] {
            let slab = c.slab_groups.iter().map(|s| s.height_mm).max().unwrap_or(0);
            let beam = c.beams.iter().map(|b| b.height_mm).max().unwrap_or(0);
            d.roof(c, &c.grid()?, f.level_mm - slab - beam)?;
        }
        d.floor(m, &m.grid()?, f.level_mm, spec.storey_top(i))?;
    }
    if let (Some(m), Some(r)) = (roof, &spec.roof) {
        d.roof(m, &m.grid()?, r.level_mm)?;
    }

    let cut_any = d.cut_any;
    let mut out = d.out;
    for level in levels {
        level_mark(level, -10.0 * scale, strip.total, font, &mut out);
    }
    let title_y = bottom as f64 - 1000.0 - 4.0 * font - 2.0 * font;
    out.push(
        Layer::Titles,
        None,
        Primitive::Text {
            origin: Pt::new(strip.total / 2.0, title_y),
            height: 2.0 * font,
            content: format!("{0}-{0}", spec.letter),
            rotation: 0.0,
        },
    );
    let warnings = if cut_any { Vec::new() } else { vec![SectionWarning::EmptySecantIntersection] };
    Ok(SectionOutput { display: out, warnings })
}

/// Axes crossed by the secant, as vertical dash-dot lines with bubbles below.
fn section_axes(strip: &Strip, grid: &Grid, bottom: f64, top: f64, font: f64, out: &mut DisplayList) {
    let r = 1.5 * font;
    let mut seen: Vec<(i64, String)> = Vec::new();
    for p in &strip.pieces {
        let o = if p.along_x { Orientation::V } else { Orientation::H };
        for a in grid.axes(o) {
            let c = a.coord as f64;
            if c < p.lo || c > p.hi {
                continue;
            }
            let x = strip.x(p.arc(c));
            let key = (x.round() as i64, a.label.clone());
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            let foot = bottom - 1000.0;
            out.push(Layer::Axes, None, Primitive::segment(Pt::new(x, foot), Pt::new(x, top + 500.0), Style::AXIS));
            out.push(Layer::Axes, None, Primitive::AxisBubble { center: Pt::new(x, foot - r), r, label: a.label.clone() });
        }
    }
}

/// Level line across the strip with a triangle mark and its elevation text at `x`.
fn level_mark(level: Mm, x: f64, width: f64, font: f64, out: &mut DisplayList) {
    let y = level as f64;
    let h = 0.8 * font;
    let shelf = x - 4.0 * font;
    let prims = [
        Primitive::segment(Pt::new(x, y), Pt::new(width, y), Style::THIN.dashed()),
        Primitive::segment(Pt::new(x, y), Pt::new(x - h, y + h), Style::THIN),
        Primitive::segment(Pt::new(x, y), Pt::new(x + h, y + h), Style::THIN),
        Primitive::segment(Pt::new(x - h, y + h), Pt::new(x + h, y + h), Style::THIN),
        Primitive::segment(Pt::new(x - h, y + h), Pt::new(shelf, y + h), Style::THIN),
        Primitive::Text { origin: Pt::new(shelf, y + h + 0.3 * font), height: font, content: format_level(level), rotation: 0.0 },
    ];
    out.extend(Layer::Levels, None, prims);
}
