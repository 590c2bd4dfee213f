//! Foundation and ceiling plans derived from a floor plan.

use serde::{Deserialize, Serialize};

use crate::model::{FootingGroup, Mm, Model, ModelError, PlanKind, StripFoundation};

/// Footings are this much larger than the column section on each axis.
pub const FOOTING_MARGIN_MM: Mm = 600;
pub const FOOTING_HEIGHT_MM: Mm = 900;
/// Strip foundations are this much wider than their partition.
pub const STRIP_MARGIN_MM: Mm = 200;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoundationOptions {
    /// Only bearing partitions get strip foundations.
    pub bearing_only: bool,
}

fn require_floor(m: &Model) -> Result<(), ModelError> {
    if m.kind == PlanKind::Floor {
        Ok(())
    } else {
        Err(ModelError::WrongKind { expected: PlanKind::Floor, found: m.kind })
    }
}

fn with_axes(floor: &Model, kind: PlanKind) -> Model {
    let mut m = Model::with_settings(kind, floor.settings.clone());
    m.axis_groups_h = floor.axis_groups_h.clone();
    m.axis_groups_v = floor.axis_groups_v.clone();
    m.next_id = floor.next_id;
    m
}

/// Axes are copied as they are; every column group becomes an unmarked footing
/// group on the same nodes, every partition (or every bearing one) a strip
/// foundation of the same geometry.
pub fn derive_foundation_plan(floor: &Model, opts: FoundationOptions) -> Result<Model, ModelError> {
    require_floor(floor)?;
    let mut m = with_axes(floor, PlanKind::Foundation);
    let mut columns = floor.column_groups.clone();
    columns.sort_by_key(|g| g.id);
    for g in columns {
        let id = m.alloc_id();
        m.footing_groups.push(FootingGroup {
            id,
            mark: None,
            length_mm: g.width_mm + FOOTING_MARGIN_MM,
            width_mm: g.thickness_mm + FOOTING_MARGIN_MM,
            height_mm: FOOTING_HEIGHT_MM,
            along_x: g.along_x,
            start: g.start,
            end: g.end,
            center_offset: g.center_offset,
            is_new: g.is_new,
        });
    }
    let mut partitions = floor.partitions.clone();
    partitions.sort_by_key(|p| p.id);
    for p in partitions.into_iter().filter(|p| p.bearing || !opts.bearing_only) {
        let id = m.alloc_id();
        m.strip_foundations.push(StripFoundation {
            id,
            chain_id: p.chain_id,
            width_mm: p.thickness_mm + STRIP_MARGIN_MM,
            length_mm: p.length_mm,
            along_x: p.along_x,
            anchor: p.anchor,
            is_new: p.is_new,
        });
    }
    m.validate()?;
    Ok(m)
}

/// Axes, marked column groups and bearing partitions are carried over with
/// their ids; everything else is dropped.
pub fn derive_ceiling_plan(floor: &Model) -> Result<Model, ModelError> {
    require_floor(floor)?;
    let mut m = with_axes(floor, PlanKind::Ceiling);
    m.column_groups = floor.column_groups.iter().filter(|g| g.mark.is_some()).cloned().collect();
    m.partitions = floor.partitions.iter().filter(|p| p.bearing).cloned().collect();
    m.validate()?;
    Ok(m)
}
