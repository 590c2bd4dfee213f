//! Files: text documents, binary capsules, SVG and DXF.

mod capsule;
mod dxf;
mod svg;
mod text;

use thiserror::Error;

use crate::model::{EntityId, ModelError};

pub use capsule::{capsule_stub, decode_capsule, encode_capsule, CAPSULE_MAGIC, CAPSULE_VERSION};
pub use dxf::{emit_dxf, emit_dxf_with, transliterate, DxfOptions};
pub use svg::emit_svg;
pub use text::{load_section_text, load_text, save_section_text, save_text, MODEL_FORMAT, SECTION_FORMAT, TEXT_VERSION};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("integrity error: {source}")]
    Integrity {
        entity: Option<EntityId>,
        #[source]
        source: ModelError,
    },
    #[error("not a capsule")]
    BadMagic,
    #[error("unsupported format version {0}")]
    VersionUnsupported(u32),
    #[error("corrupt capsule body: {0}")]
    CorruptBody(String),
}

impl IoError {
    pub fn code(&self) -> &'static str {
        match self {
            IoError::Schema { .. } => "SchemaError",
            IoError::Integrity { .. } => "IntegrityError",
            IoError::BadMagic => "BadMagic",
            IoError::VersionUnsupported(_) => "VersionUnsupported",
            IoError::CorruptBody(_) => "CorruptBody",
        }
    }
}

impl From<ModelError> for IoError {
    fn from(source: ModelError) -> Self {
        IoError::Integrity { entity: source.entity(), source }
    }
}

/// Plain decimal with at most three fractional digits and no negative zero.
pub(crate) fn num(v: f64) -> String {
    let s = format!("{:.3}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
