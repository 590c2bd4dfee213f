//! The cutting line of a section.

use serde::{Deserialize, Serialize};

use super::SectionError;
use crate::drafting::{DisplayList, Layer, Primitive, Pt, Style};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViewDirection {
    LeftOfTravel,
    #[default]
    RightOfTravel,
}

/// Axis-aligned polyline in world millimeters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Secant {
    pub points: Vec<Pt>,
    #[serde(default)]
    pub view: ViewDirection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SecantStep {
    ShiftForward,
    ShiftBack,
    Rotate90,
}

impl Secant {
    pub fn new(points: Vec<Pt>, view: ViewDirection) -> Self {
        Secant { points, view }
    }

    pub fn validate(&self) -> Result<(), SectionError> {
        if self.points.len() < 2 {
            return Err(SectionError::SecantTooShort);
        }
        for (index, w) in self.points.windows(2).enumerate() {
            let (dx, dy) = (w[1].x - w[0].x, w[1].y - w[0].y);
            if !(dx.is_finite() && dy.is_finite()) || (dx == 0.0) == (dy == 0.0) {
                return Err(SectionError::NonAxisAlignedSecant { index });
            }
        }
        Ok(())
    }

    /// Unit normal of the first segment, pointing the way the section looks.
    pub fn normal(&self) -> Result<Pt, SectionError> {
        self.validate()?;
        let (a, b) = (self.points[0], self.points[1]);
        let d = Pt::new((b.x - a.x).signum() * f64::from(b.x != a.x), (b.y - a.y).signum() * f64::from(b.y != a.y));
        Ok(match self.view {
            ViewDirection::RightOfTravel => Pt::new(d.y, -d.x),
            ViewDirection::LeftOfTravel => Pt::new(-d.y, d.x),
        })
    }

    pub fn length(&self) -> f64 {
        self.points.windows(2).map(|w| (w[1].x - w[0].x).abs() + (w[1].y - w[0].y).abs()).sum()
    }
}

/// One preview step: shift along the view normal, or turn a single segment
/// a quarter turn counterclockwise about its midpoint.
pub fn step_secant(secant: &Secant, action: SecantStep, step_mm: f64) -> Result<Secant, SectionError> {
    let n = secant.normal()?;
    let points = match action {
        SecantStep::ShiftForward | SecantStep::ShiftBack => {
            let k = if action == SecantStep::ShiftForward { step_mm } else { -step_mm };
            secant.points.iter().map(|p| Pt::new(p.x + k * n.x, p.y + k * n.y)).collect()
        }
        SecantStep::Rotate90 => {
            let [a, b] = secant.points[..] else { return Err(SectionError::RotateOnPolyline) };
            let m = Pt::new((a.x + b.x) / 2.0, (a.y + b.y) / 2.0);
            [a, b].iter().map(|p| Pt::new(m.x - (p.y - m.y), m.y + (p.x - m.x))).collect()
        }
    };
    Ok(Secant { points, view: secant.view })
}

/// The secant drawn on a plan: thick dashed line with the letter at both ends.
pub fn secant_trace(secant: &Secant, letter: &str, font_mm: f64, out: &mut DisplayList) {
    let style = Style::THICK.dashed();
    for w in secant.points.windows(2) {
        out.push(Layer::Cut, None, Primitive::segment(w[0], w[1], style));
    }
    let Ok(n) = secant.normal() else { return };
    if let (Some(first), Some(last)) = (secant.points.first(), secant.points.last()) {
        for p in [first, last] {
            let at = Pt::new(p.x + n.x * 2.0 * font_mm, p.y + n.y * 2.0 * font_mm);
            out.push(Layer::Cut, None, Primitive::segment(*p, at, Style::THICK));
            out.push(Layer::Cut, None, Primitive::Text { origin: at, height: font_mm, content: letter.to_string(), rotation: 0.0 });
        }
    }
}
