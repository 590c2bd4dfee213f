//! Mark strings of the form `NAME (D1 x D2 [x D3] [, TRAILER])`.
//!
//! The trailer is usually a decimal (volume or mass) but some marks carry
//! a code there instead (`ДН 21-13АПЩ (2085 x 1274, АПЩР2)`), so it is
//! kept verbatim as text.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Prefix shared by every "no mark" designation ("Немаркированная колонна",
/// "Немаркированный проем", ...).
pub const UNMARKED_PREFIX: &str = "Немаркированн";

/// Two or three positive dimensions in millimeters, in catalog order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Dims(Vec<i64>);

impl Dims {
    pub fn new(values: &[i64]) -> Option<Self> {
        if (2..=3).contains(&values.len()) && values.iter().all(|&v| v > 0) {
            Some(Dims(values.to_vec()))
        } else {
            None
        }
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn second(&self) -> i64 {
        self.0[1]
    }

    pub fn third(&self) -> Option<i64> {
        self.0.get(2).copied()
    }
}

impl TryFrom<Vec<i64>> for Dims {
    type Error = String;

    fn try_from(values: Vec<i64>) -> Result<Self, Self::Error> {
        Dims::new(&values).ok_or_else(|| format!("expected 2 or 3 positive dimensions, got {values:?}"))
    }
}

impl From<Dims> for Vec<i64> {
    fn from(d: Dims) -> Self {
        d.0
    }
}

/// The part of a mark string that is parsed: designation, dimensions and trailer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkFragment {
    pub name: String,
    pub dims: Dims,
    pub metric: Option<String>,
}

impl MarkFragment {
    /// Numeric value of the trailer, when it is a number.
    pub fn metric_value(&self) -> Option<f64> {
        self.metric.as_deref().and_then(|m| m.parse().ok())
    }
}

impl fmt::Display for MarkFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (", self.name)?;
        for (i, d) in self.dims.as_slice().iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{d}")?;
        }
        if let Some(m) = &self.metric {
            write!(f, ", {m}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedMark {
    Marked(MarkFragment),
    Unmarked,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("mark parse error at byte {offset}: {reason}")]
pub struct ParseError {
    pub offset: usize,
    pub reason: &'static str,
}

fn err(offset: usize, reason: &'static str) -> ParseError {
    ParseError { offset, reason }
}

fn is_times(c: char) -> bool {
    matches!(c, 'x' | 'X' | 'х' | 'Х' | '×')
}

fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Parses a mark string. Leading/trailing and repeated inner whitespace is
/// tolerated; the returned name and trailer are canonicalized to single spaces.
pub fn parse_mark_string(text: &str) -> Result<ParsedMark, ParseError> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    if trimmed.starts_with(UNMARKED_PREFIX) {
        return Ok(ParsedMark::Unmarked);
    }

    let open = match text.find('(') {
        Some(i) => i,
        None => return Err(err(text.trim_end().len(), "expected '(' with dimensions")),
    };
    let name = collapse_ws(&text[..open]);
    if name.is_empty() {
        return Err(err(lead, "empty mark name"));
    }

    let close = match text[open..].find(')') {
        Some(i) => open + i,
        None => return Err(err(text.len(), "missing ')'")),
    };
    if let Some(extra) = text[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err(err(close + 1 + extra, "unexpected text after ')'"));
    }

    let inner_start = open + 1;
    let inner = &text[inner_start..close];
    let (dims_part, metric) = match inner.find(',') {
        Some(comma) => {
            let m = collapse_ws(&inner[comma + 1..]);
            if m.is_empty() {
                return Err(err(inner_start + comma + 1, "empty trailer after ','"));
            }
            (&inner[..comma], Some(m))
        }
        None => (inner, None),
    };

    let mut dims = Vec::with_capacity(3);
    let mut pos = 0usize;
    let bytes_at = |p: usize| inner_start + p;
    loop {
        let rest = &dims_part[pos..];
        let skip = rest.len() - rest.trim_start().len();
        pos += skip;
        let digits: usize = dims_part[pos..]
            .char_indices()
            .take_while(|(_, c)| c.is_ascii_digit())
            .map(|(i, c)| i + c.len_utf8())
            .last()
            .unwrap_or(0);
        if digits == 0 {
            return Err(err(bytes_at(pos), "expected a dimension"));
        }
        let value: i64 = dims_part[pos..pos + digits]
            .parse()
            .map_err(|_| err(bytes_at(pos), "dimension out of range"))?;
        if value == 0 {
            return Err(err(bytes_at(pos), "dimension must be positive"));
        }
        dims.push(value);
        pos += digits;

        let rest = &dims_part[pos..];
        let skip = rest.len() - rest.trim_start().len();
        pos += skip;
        match dims_part[pos..].chars().next() {
            None => break,
            Some(c) if is_times(c) => {
                if dims.len() == 3 {
                    return Err(err(bytes_at(pos), "at most three dimensions"));
                }
                pos += c.len_utf8();
            }
            Some(_) => return Err(err(bytes_at(pos), "expected 'x' between dimensions")),
        }
    }
    let dims = Dims::new(&dims).ok_or_else(|| err(bytes_at(pos), "expected two or three dimensions"))?;
    Ok(ParsedMark::Marked(MarkFragment { name, dims, metric }))
}

/// Canonical text of a mark: `NAME (D1 x D2[ x D3][, TRAILER])`.
pub fn render_mark_string(mark: &MarkFragment) -> String {
    mark.to_string()
}
