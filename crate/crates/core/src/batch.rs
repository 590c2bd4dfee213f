//! Whole-collection operations over independent models.
//!
//! `Execution::Parallel` uses rayon when the `parallel` feature is on and runs
//! sequentially otherwise. Results are always in input order.

use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::drafting::{generate_plan_display, DisplayList, DraftError, PlanOptions};
use crate::io::encode_capsule;
use crate::model::{Model, ModelError, Op};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when `Parallel` actually runs on the thread pool in this build.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// `f` over `items`, in order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

pub fn validate_all(models: &[Model], catalog: &Catalog, exec: Execution) -> Vec<Result<(), ModelError>> {
    map(exec, models, |m| m.validate_with_catalog(catalog))
}

pub fn render_all(models: &[Model], opts: &PlanOptions, exec: Execution) -> Vec<Result<DisplayList, DraftError>> {
    map(exec, models, |m| generate_plan_display(m, opts))
}

pub fn encode_all(models: &[Model], exec: Execution) -> Vec<Vec<u8>> {
    map(exec, models, encode_capsule)
}

/// What happened when one op sequence was played against a copy of a model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replay {
    pub accepted: usize,
    pub rejected: usize,
    /// Error codes of rejected ops, in order.
    pub errors: Vec<String>,
    /// The final model passed `validate`.
    pub valid: bool,
    pub final_entities: usize,
}

/// Plays each sequence op by op against its own copy of `base`, keeping going
/// after rejected ops.
pub fn replay_all(base: &Model, sequences: &[Vec<Op>], catalog: &Catalog, exec: Execution) -> Vec<Replay> {
    map(exec, sequences, |ops| {
        let mut m = base.clone();
        let mut r = Replay { accepted: 0, rejected: 0, errors: Vec::new(), valid: false, final_entities: 0 };
        for op in ops {
            match m.apply(op, catalog) {
                Ok(_) => r.accepted += 1,
                Err(e) => {
                    r.rejected += 1;
                    r.errors.push(e.code().to_string());
                }
            }
        }
        r.valid = m.validate().is_ok();
        r.final_entities = m.entity_count();
        r
    })
}
