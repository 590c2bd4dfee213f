//! Compact binary capsules.
//!
//! Layout, little-endian: magic `PODO`, u16 version, u32 body length, u32 CRC32
//! of the body, then the body: the model in bincode varint encoding, deflated.

use std::io::{Read, Write};

use bincode::Options;
use flate2::read::DeflateDecoder;
use flate2::write::DeflateEncoder;
use flate2::Compression;

use super::IoError;
use crate::drafting::{generate_span_dimensions, DimSide, DisplayList, Layer, Primitive, Pt, Style};
use crate::model::{Model, Orientation};

pub const CAPSULE_MAGIC: &[u8; 4] = b"PODO";
pub const CAPSULE_VERSION: u16 = 1;
const HEADER_LEN: usize = 14;

fn codec() -> impl Options {
    bincode::DefaultOptions::new().with_little_endian().with_varint_encoding().reject_trailing_bytes()
}

pub fn encode_capsule(model: &Model) -> Vec<u8> {
    let raw = codec().serialize(model).expect("models serialize");
    let mut z = DeflateEncoder::new(Vec::new(), Compression::best());
    z.write_all(&raw).expect("in-memory write");
    let body = z.finish().expect("in-memory write");
    let mut out = Vec::with_capacity(HEADER_LEN + body.len());
    out.extend_from_slice(CAPSULE_MAGIC);
    out.extend_from_slice(&CAPSULE_VERSION.to_le_bytes());
    out.extend_from_slice(&(body.len() as u32).to_le_bytes());
    out.extend_from_slice(&crc32fast::hash(&body).to_le_bytes());
    out.extend_from_slice(&body);
    out
}

/// Decodes and validates a capsule; the stub is regenerated from the model.
pub fn decode_capsule(bytes: &[u8]) -> Result<(Model, DisplayList), IoError> {
    let head = &bytes[..bytes.len().min(4)];
    if head != &CAPSULE_MAGIC[..head.len()] {
        return Err(IoError::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(IoError::CorruptBody("truncated header".into()));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != CAPSULE_VERSION {
        return Err(IoError::VersionUnsupported(version.into()));
    }
    let len = u32::from_le_bytes(bytes[6..10].try_into().expect("4 bytes")) as usize;
    let crc = u32::from_le_bytes(bytes[10..14].try_into().expect("4 bytes"));
    let body = &bytes[HEADER_LEN..];
    if body.len() != len {
        return Err(IoError::CorruptBody(format!("body is {} bytes, header says {len}", body.len())));
    }
    if crc32fast::hash(body) != crc {
        return Err(IoError::CorruptBody("checksum mismatch".into()));
    }
    let mut raw = Vec::new();
    DeflateDecoder::new(body).read_to_end(&mut raw).map_err(|e| IoError::CorruptBody(e.to_string()))?;
    let model: Model = codec().deserialize(&raw).map_err(|e| IoError::CorruptBody(e.to_string()))?;
    model.validate()?;
    let stub = capsule_stub(&model);
    Ok((model, stub))
}

/// The first axis of each orientation with its bubble, plus the first span
/// dimension along each orientation that has two main axes.
pub fn capsule_stub(model: &Model) -> DisplayList {
    let mut out = DisplayList::new();
    let Ok(grid) = model.grid() else { return out };
    let r = 1.5 * model.settings.gen_font_height_mm * 100.0;
    let reach = model.settings.axis_label_offset_mm as f64;
    for o in [Orientation::H, Orientation::V] {
        let across: Vec<f64> = grid.axes(o.other()).iter().map(|a| a.coord as f64).collect();
        let (Some(first), Some(&lo), Some(&hi)) = (grid.axes(o).first(), across.first(), across.last()) else { continue };
        let c = first.coord as f64;
        let (p1, p2, bubble) = match o {
            Orientation::H => (Pt::new(lo - reach, c), Pt::new(hi, c), Pt::new(lo - reach - r, c)),
            Orientation::V => (Pt::new(c, lo - reach), Pt::new(c, hi), Pt::new(c, lo - reach - r)),
        };
        out.push(Layer::Axes, Some(first.group), Primitive::segment(p1, p2, Style::AXIS));
        out.push(Layer::Axes, Some(first.group), Primitive::AxisBubble { center: bubble, r, label: first.label.clone() });
    }
    for side in [DimSide::Below, DimSide::Left] {
        if let Some(d) = generate_span_dimensions(model, side).ok().and_then(|d| d.into_iter().next()) {
            out.push(Layer::Dimensions, None, Primitive::DimLinear(d));
        }
    }
    out
}
