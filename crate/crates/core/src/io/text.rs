//! JSON documents for models and section specs.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::IoError;
use crate::model::Model;
use crate::section::SectionSpec;

pub const MODEL_FORMAT: &str = "podosnova-model";
pub const SECTION_FORMAT: &str = "podosnova-section";
pub const TEXT_VERSION: u32 = 1;

#[derive(Serialize)]
struct ModelDocRef<'a> {
    format: &'a str,
    version: u32,
    model: &'a Model,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    format: String,
    version: u32,
    model: Model,
}

#[derive(Serialize)]
struct SectionDocRef<'a> {
    format: &'a str,
    version: u32,
    section: &'a SectionSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SectionDoc {
    format: String,
    version: u32,
    section: SectionSpec,
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, IoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| IoError::Schema { path: e.path().to_string(), message: e.inner().to_string() })
}

fn check_header(format: &str, expected: &str, version: u32) -> Result<(), IoError> {
    if format != expected {
        return Err(IoError::Schema { path: "format".into(), message: format!("expected `{expected}`, found `{format}`") });
    }
    if version != TEXT_VERSION {
        return Err(IoError::VersionUnsupported(version));
    }
    Ok(())
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Pretty JSON with keys in declaration order.
pub fn save_text(model: &Model) -> String {
    pretty(&ModelDocRef { format: MODEL_FORMAT, version: TEXT_VERSION, model })
}

/// Parses and validates a model document.
pub fn load_text(text: &str) -> Result<Model, IoError> {
    let doc: ModelDoc = parse(text)?;
    check_header(&doc.format, MODEL_FORMAT, doc.version)?;
    doc.model.validate()?;
    Ok(doc.model)
}

pub fn save_section_text(spec: &SectionSpec) -> String {
    pretty(&SectionDocRef { format: SECTION_FORMAT, version: TEXT_VERSION, section: spec })
}

pub fn load_section_text(text: &str) -> Result<SectionSpec, IoError> {
    let doc: SectionDoc = parse(text)?;
    check_header(&doc.format, SECTION_FORMAT, doc.version)?;
    Ok(doc.section)
}
