//! SVG 1.1 in paper millimeters.

use std::fmt::Write;

use super::num;
use crate::drafting::{DisplayList, Pattern, Primitive, Pt, Style, Weight};

/// Dimension text height and serif size, paper millimeters.
pub(crate) const DIM_TEXT_MM: f64 = 2.5;
pub(crate) const DIM_TICK_MM: f64 = 1.0;
const MARGIN_MM: f64 = 5.0;
const TEXT: &str = "fill=\"black\" stroke=\"none\"";

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Svg {
    s: String,
    scale: f64,
}

impl Svg {
    fn p(&self, p: Pt) -> (String, String) {
        (num(p.x / self.scale), num(-p.y / self.scale))
    }

    fn stroke(style: Style) -> String {
        let w = match style.weight {
            Weight::Thin => "0.2",
            Weight::Thick => "0.6",
        };
        match style.pattern {
            Pattern::Solid => format!("stroke-width=\"{w}\""),
            Pattern::Dashed => format!("stroke-width=\"{w}\" stroke-dasharray=\"4 2\""),
            Pattern::AxisDashDot => format!("stroke-width=\"{w}\" stroke-dasharray=\"12 2 1 2\""),
        }
    }

    fn line(&mut self, a: Pt, b: Pt, style: Style) {
        let ((x1, y1), (x2, y2)) = (self.p(a), self.p(b));
        let _ = writeln!(self.s, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {}/>", Self::stroke(style));
    }

    /// `height` in world units; `anchor` is an SVG text-anchor.
    fn text(&mut self, at: Pt, height: f64, content: &str, rotation: f64, anchor: &str) {
        let (x, y) = self.p(at);
        let h = num(height / self.scale);
        let rot = if rotation == 0.0 { String::new() } else { format!(" transform=\"rotate({} {x} {y})\"", num(-rotation)) };
        let anchor = if anchor == "start" { String::new() } else { format!(" text-anchor=\"{anchor}\" dominant-baseline=\"central\"") };
        let _ = writeln!(self.s, "<text x=\"{x}\" y=\"{y}\" font-size=\"{h}\"{anchor}{rot} {TEXT}>{}</text>", escape(content));
    }

    fn item(&mut self, prim: &Primitive) {
        match prim {
            Primitive::Segment { p1, p2, style } => self.line(*p1, *p2, *style),
            Primitive::Circle { center, r, style } => {
                let (cx, cy) = self.p(*center);
                let _ = writeln!(self.s, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" {}/>", num(r / self.scale), Self::stroke(*style));
            }
            Primitive::Arc { center, r, a0, a1, style } => {
                let sweep = (a1 - a0).rem_euclid(360.0);
                let at = |a: f64| Pt::new(center.x + r * a.to_radians().cos(), center.y + r * a.to_radians().sin());
                let ((x0, y0), (x1, y1)) = (self.p(at(*a0)), self.p(at(*a1)));
                let rr = num(r / self.scale);
                let large = u8::from(sweep > 180.0);
                let _ = writeln!(self.s, "<path d=\"M {x0} {y0} A {rr} {rr} 0 {large} 0 {x1} {y1}\" {}/>", Self::stroke(*style));
            }
            Primitive::Text { origin, height, content, rotation } => self.text(*origin, *height, content, *rotation, "start"),
            Primitive::DimLinear(d) => {
                let parts = d.parts(DIM_TICK_MM * self.scale, 0.8 * self.scale);
                self.line(parts.line.0, parts.line.1, Style::THIN);
                for (a, b) in parts.extensions {
                    self.line(a, b, Style::THIN);
                }
                for (a, b) in parts.ticks {
                    self.line(a, b, Style::THICK);
                }
                let (x, y) = self.p(parts.text_at);
                let rot = if parts.text_rotation == 0.0 { String::new() } else { format!(" transform=\"rotate({} {x} {y})\"", num(-parts.text_rotation)) };
                let _ = writeln!(self.s, "<text x=\"{x}\" y=\"{y}\" font-size=\"{}\" text-anchor=\"middle\"{rot} {TEXT}>{}</text>", num(DIM_TEXT_MM), escape(&d.text));
            }
            Primitive::AxisBubble { center, r, label } => {
                let (cx, cy) = self.p(*center);
                let _ = writeln!(self.s, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" {}/>", num(r / self.scale), Self::stroke(Style::THIN));
                self.text(*center, r / 1.5, label, 0.0, "middle");
            }
            Primitive::Leader { points, text, height, line_step } => {
                for w in points.windows(2) {
                    self.line(w[0], w[1], Style::THIN);
                }
                if let Some(at) = points.last() {
                    for (i, line) in text.iter().enumerate() {
                        let base = Pt::new(at.x, at.y - line_step * i as f64 - height);
                        self.text(base, *height, line, 0.0, "start");
                    }
                }
            }
        }
    }
}

/// Renders `list` at 1:`scale`; one user unit is one paper millimeter and Y
/// points up on the page.
pub fn emit_svg(list: &DisplayList, scale: f64) -> String {
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let (x, y, w, h) = match list.bounds() {
        Some(b) => (
            b.min.x / scale - MARGIN_MM,
            -b.max.y / scale - MARGIN_MM,
            b.width() / scale + 2.0 * MARGIN_MM,
            b.height() / scale + 2.0 * MARGIN_MM,
        ),
        None => (0.0, 0.0, 0.0, 0.0),
    };
    let mut svg = Svg { s: String::new(), scale };
    let (x, y, w, h) = (num(x), num(y), num(w), num(h));
    let _ = writeln!(svg.s, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        svg.s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}mm\" height=\"{h}mm\" viewBox=\"{x} {y} {w} {h}\">"
    );
    let _ = writeln!(svg.s, "<g fill=\"none\" stroke=\"black\" stroke-linecap=\"round\" font-family=\"sans-serif\">");
    let mut layer = None;
    for item in &list.items {
        if layer != Some(item.layer) {
            if layer.is_some() {
                svg.s.push_str("</g>\n");
            }
            let _ = writeln!(svg.s, "<g class=\"{}\">", item.layer.name());
            layer = Some(item.layer);
        }
        svg.item(&item.primitive);
    }
    if layer.is_some() {
        svg.s.push_str("</g>\n");
    }
    svg.s.push_str("</g>\n</svg>\n");
    svg.s
}
