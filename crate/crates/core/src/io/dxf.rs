//! ASCII DXF R12 in paper millimeters.
//!
//! Thick lines get color 7 and thin ones color 8, for pen mapping at plot time.

use std::fmt::Write;

use super::num;
use super::svg::{DIM_TEXT_MM, DIM_TICK_MM};
use crate::drafting::{DisplayList, Layer, Pattern, Primitive, Pt, Style, Weight};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DxfOptions {
    /// Write text as 7-bit ASCII (Cyrillic transliterated) instead of `\U+XXXX` escapes.
    pub transliterate: bool,
}

const CYRILLIC: [(char, &str); 33] = [
    ('А', "A"), ('Б', "B"), ('В', "V"), ('Г', "G"), ('Д', "D"), ('Е', "E"), ('Ё', "E"), ('Ж', "ZH"), ('З', "Z"),
    ('И', "I"), ('Й', "J"), ('К', "K"), ('Л', "L"), ('М', "M"), ('Н', "N"), ('О', "O"), ('П', "P"), ('Р', "R"),
    ('С', "S"), ('Т', "T"), ('У', "U"), ('Ф', "F"), ('Х', "KH"), ('Ц', "C"), ('Ч', "CH"), ('Ш', "SH"), ('Щ', "SHH"),
    ('Ъ', "\""), ('Ы', "Y"), ('Ь', "'"), ('Э', "E"), ('Ю', "YU"), ('Я', "YA"),
];

/// 7-bit rendering of `s`: Cyrillic transliterated, `±` and `°` as DXF control
/// codes, the minus sign as a hyphen, anything else as `?`.
pub fn transliterate(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii() {
            out.push(c);
            continue;
        }
        let upper = c.to_uppercase().next().unwrap_or(c);
        match CYRILLIC.iter().find(|(k, _)| *k == upper) {
            Some((_, t)) if upper == c => out.push_str(t),
            Some((_, t)) => out.push_str(&t.to_lowercase()),
            None => out.push_str(match c {
                '±' => "%%p",
                '°' => "%%d",
                '\u{2212}' => "-",
                _ => "?",
            }),
        }
    }
    out
}

fn escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        if c.is_ascii() {
            out.push(c);
        } else {
            let _ = write!(out, "\\U+{:04X}", c as u32);
        }
    }
    out
}

struct Dxf {
    s: String,
    scale: f64,
    opts: DxfOptions,
}

impl Dxf {
    fn pair(&mut self, code: u16, value: impl std::fmt::Display) {
        let _ = write!(self.s, "{code:>3}\n{value}\n");
    }

    fn xy(&mut self, base: u16, p: Pt) {
        self.pair(base, num(p.x / self.scale));
        self.pair(base + 10, num(p.y / self.scale));
        self.pair(base + 20, "0");
    }

    fn head(&mut self, kind: &str, layer: Layer, style: Option<Style>) {
        self.pair(0, kind);
        self.pair(8, layer.name());
        if let Some(style) = style {
            match style.pattern {
                Pattern::Solid => {}
                Pattern::Dashed => self.pair(6, "DASHED"),
                Pattern::AxisDashDot => self.pair(6, "DASHDOT"),
            }
            self.pair(62, if style.weight == Weight::Thick { 7 } else { 8 });
        }
    }

    fn line(&mut self, layer: Layer, a: Pt, b: Pt, style: Style) {
        self.head("LINE", layer, Some(style));
        self.xy(10, a);
        self.xy(11, b);
    }

    fn circle(&mut self, layer: Layer, c: Pt, r: f64, style: Style) {
        self.head("CIRCLE", layer, Some(style));
        self.xy(10, c);
        self.pair(40, num(r / self.scale));
    }

    /// `height` in paper millimeters; centered text is aligned on its middle.
    fn text(&mut self, layer: Layer, at: Pt, height: f64, content: &str, rotation: f64, centered: bool) {
        let content = if self.opts.transliterate { transliterate(content) } else { escape(content) };
        self.head("TEXT", layer, None);
        self.xy(10, at);
        self.pair(40, num(height));
        self.pair(1, content);
        if rotation != 0.0 {
            self.pair(50, num(rotation));
        }
        if centered {
            self.pair(72, 1);
            self.xy(11, at);
            self.pair(73, 2);
        }
    }

    fn item(&mut self, layer: Layer, prim: &Primitive) {
        let k = self.scale;
        match prim {
            Primitive::Segment { p1, p2, style } => self.line(layer, *p1, *p2, *style),
            Primitive::Circle { center, r, style } => self.circle(layer, *center, *r, *style),
            Primitive::Arc { center, r, a0, a1, style } => {
                self.head("ARC", layer, Some(*style));
                self.xy(10, *center);
                self.pair(40, num(r / k));
                self.pair(50, num(*a0));
                self.pair(51, num(*a1));
            }
            Primitive::Text { origin, height, content, rotation } => self.text(layer, *origin, height / k, content, *rotation, false),
            Primitive::DimLinear(d) => {
                let parts = d.parts(DIM_TICK_MM * k, 0.8 * k);
                self.line(layer, parts.line.0, parts.line.1, Style::THIN);
                for (a, b) in parts.extensions {
                    self.line(layer, a, b, Style::THIN);
                }
                for (a, b) in parts.ticks {
                    self.line(layer, a, b, Style::THICK);
                }
                self.text(layer, parts.text_at, DIM_TEXT_MM, &d.text, parts.text_rotation, true);
            }
            Primitive::AxisBubble { center, r, label } => {
                self.circle(layer, *center, *r, Style::THIN);
                self.text(layer, *center, r / 1.5 / k, label, 0.0, true);
            }
            Primitive::Leader { points, text, height, line_step } => {
                for w in points.windows(2) {
                    self.line(layer, w[0], w[1], Style::THIN);
                }
                if let Some(at) = points.last() {
                    for (i, line) in text.iter().enumerate() {
                        let base = Pt::new(at.x, at.y - line_step * i as f64 - height);
                        self.text(layer, base, height / k, line, 0.0, false);
                    }
                }
            }
        }
    }

    fn tables(&mut self) {
        self.pair(0, "SECTION");
        self.pair(2, "TABLES");
        self.pair(0, "TABLE");
        self.pair(2, "LTYPE");
        self.pair(70, 3);
        for (name, descr, dashes) in [
            ("CONTINUOUS", "Solid line", &[][..]),
            ("DASHED", "__ __ __", &[4.0, -2.0][..]),
            ("DASHDOT", "____ . ____", &[12.0, -2.0, 0.0, -2.0][..]),
        ] {
            self.pair(0, "LTYPE");
            self.pair(2, name);
            self.pair(70, 0);
            self.pair(3, descr);
            self.pair(72, 65);
            self.pair(73, dashes.len());
            self.pair(40, num(dashes.iter().map(|d: &f64| d.abs()).sum()));
            for d in dashes {
                self.pair(49, num(*d));
            }
        }
        self.pair(0, "ENDTAB");
        self.pair(0, "ENDSEC");
    }
}

/// `\U+XXXX` escapes for non-ASCII text.
pub fn emit_dxf(list: &DisplayList, scale: f64) -> String {
    emit_dxf_with(list, scale, DxfOptions::default())
}

pub fn emit_dxf_with(list: &DisplayList, scale: f64, opts: DxfOptions) -> String {
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let mut d = Dxf { s: String::new(), scale, opts };
    d.pair(0, "SECTION");
    d.pair(2, "HEADER");
    d.pair(9, "$ACADVER");
    d.pair(1, "AC1009");
    d.pair(0, "ENDSEC");
    d.tables();
    d.pair(0, "SECTION");
    d.pair(2, "ENTITIES");
    for item in &list.items {
        d.item(item.layer, &item.primitive);
    }
    d.pair(0, "ENDSEC");
    d.pair(0, "EOF");
    d.s
}
