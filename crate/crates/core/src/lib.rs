//! Parametric floor plans on a coordination grid.

pub mod batch;
pub mod catalog;
pub mod drafting;
pub mod fixtures;
pub mod io;
pub mod model;
pub mod section;

pub use batch::Execution;
pub use catalog::{Catalog, Family};
pub use drafting::{generate_plan_display, DisplayList, PlanOptions};
pub use io::{decode_capsule, emit_dxf, emit_svg, encode_capsule, load_text, save_text, IoError};
pub use model::{Model, ModelError, Op, PlanKind};
pub use section::{derive_ceiling_plan, derive_foundation_plan, generate_section_display, SectionSpec};
