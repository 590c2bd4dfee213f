//! Serializable edit operations, applied atomically.

use serde::{Deserialize, Serialize};

use super::place::{PartitionChainSpec, StripChainSpec, TextSpec};
use super::{
    AxisGroupDraft, BeamSpec, ColumnGroupSpec, ColumnRef, EntityId, FootingGroupSpec, FootingRef, FoundationBeamSpec, Mm, Model,
    ModelError, OpeningParams, SlabGroupSpec,
};
use crate::catalog::Catalog;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Op {
    UpsertAxisGroup(AxisGroupDraft),
    DeleteAxisGroup { id: EntityId },
    PlaceColumnGroup(ColumnGroupSpec),
    PlacePartitionChain(PartitionChainSpec),
    PlaceOpening { partition: EntityId, offset_mm: Mm, params: OpeningParams },
    PlaceBeam { spec: BeamSpec, end_a: ColumnRef, end_b: ColumnRef },
    PlaceSlabGroup(SlabGroupSpec),
    PlaceStripFoundationChain(StripChainSpec),
    PlaceFootingGroup(FootingGroupSpec),
    PlaceFoundationBeam { spec: FoundationBeamSpec, end_a: FootingRef, end_b: FootingRef },
    PlaceText(TextSpec),
    CycleOpeningVariant { id: EntityId },
    DeleteEntity { id: EntityId },
}

/// What an operation changed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Applied {
    pub created: Vec<EntityId>,
    pub removed: Vec<EntityId>,
}

impl Applied {
    fn created(ids: Vec<EntityId>) -> Self {
        Applied { created: ids, removed: Vec::new() }
    }
}

impl Model {
    /// Applies one operation. On error the model is left exactly as it was.
    pub fn apply(&mut self, op: &Op, catalog: &Catalog) -> Result<Applied, ModelError> {
        self.transact(|m| {
            let applied = match op {
                Op::UpsertAxisGroup(draft) => {
                    let existed = draft.id.is_some();
                    let id = m.upsert_axis_group(draft.clone())?;
                    if existed {
                        Applied::default()
                    } else {
                        Applied::created(vec![id])
                    }
                }
                Op::DeleteAxisGroup { id } => Applied { created: Vec::new(), removed: m.delete_axis_group(*id)? },
                Op::PlaceColumnGroup(spec) => Applied::created(vec![m.place_column_group(spec, catalog)?]),
                Op::PlacePartitionChain(spec) => Applied::created(m.place_partition_chain(spec)?),
                Op::PlaceOpening { partition, offset_mm, params } => {
                    Applied::created(vec![m.place_opening(*partition, *offset_mm, params, catalog)?])
                }
                Op::PlaceBeam { spec, end_a, end_b } => Applied::created(vec![m.place_beam(spec, *end_a, *end_b, catalog)?]),
                Op::PlaceSlabGroup(spec) => Applied::created(vec![m.place_slab_group(spec, catalog)?]),
                Op::PlaceStripFoundationChain(spec) => Applied::created(m.place_strip_foundation_chain(spec)?),
                Op::PlaceFootingGroup(spec) => Applied::created(vec![m.place_footing_group(spec, catalog)?]),
                Op::PlaceFoundationBeam { spec, end_a, end_b } => {
                    Applied::created(vec![m.place_foundation_beam(spec, *end_a, *end_b, catalog)?])
                }
                Op::PlaceText(spec) => Applied::created(vec![m.place_text(spec)?]),
                Op::CycleOpeningVariant { id } => {
                    m.cycle_opening_variant(*id)?;
                    Applied::default()
                }
                Op::DeleteEntity { id } => Applied { created: Vec::new(), removed: m.delete_entity(*id)? },
            };
            m.validate()?;
            Ok(applied)
        })
    }

    /// Applies a list of operations as one unit. On error returns the index of the
    /// failing operation and leaves the model unchanged.
    pub fn apply_all(&mut self, ops: &[Op], catalog: &Catalog) -> Result<Vec<Applied>, (usize, ModelError)> {
        let mut draft = self.clone();
        let mut out = Vec::with_capacity(ops.len());
        for (i, op) in ops.iter().enumerate() {
            out.push(draft.apply(op, catalog).map_err(|e| (i, e))?);
        }
        *self = draft;
        Ok(out)
    }
}
