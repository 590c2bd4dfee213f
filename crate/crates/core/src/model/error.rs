use thiserror::Error;

use super::{EntityId, EntityKind, Orientation, PlanKind};
use crate::catalog::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown {orientation} axis {index}")]
    UnknownAxis { orientation: Orientation, index: u32 },
    #[error("axis group {group}: base axis {base} is not a main axis")]
    DanglingBaseAxis { group: EntityId, base: u32 },
    #[error("axis group {group}: additional axes must lie strictly inside the bay after their base axis")]
    AdditionalOutOfBay { group: EntityId },
    #[error("axis groups of a {kind} plan can only change while the plan holds no other objects")]
    PlanKindLocked { kind: PlanKind },
    #[error("{entity} is not permitted on a {kind} plan")]
    PlanKindForbidden { kind: PlanKind, entity: EntityKind },
    #[error("axis count {0} outside 1..=99")]
    CountOutOfRange(u32),
    #[error("cannot remove the last {orientation} axis group")]
    LastAxisGroup { orientation: Orientation },
    #[error("axis group {group} is spanned by group {entity}; change or delete that group first")]
    AxisGroupInUse { group: EntityId, entity: EntityId },
    #[error("unknown {family} mark `{name}`")]
    UnknownMark { family: Family, name: String },
    #[error("group corners must be offset-free nodes of main axes")]
    NonRectangularRun,
    #[error("polyline segment {index} is not parallel to X or Y")]
    NonAxisAlignedSegment { index: usize },
    #[error("polyline needs at least two vertices")]
    EmptyPolyline,
    #[error("plan has no axis nodes to anchor to")]
    NoGrid,
    #[error("opening does not fit into partition {partition}")]
    OutOfPartition { partition: EntityId },
    #[error("opening overlaps opening {other}")]
    OverlapsOpening { other: EntityId },
    #[error("unknown entity {0}")]
    UnknownEntity(EntityId),
    #[error("span {span} mm does not match beam length {length} mm")]
    SpanMismatch { span: i64, length: i64 },
    #[error("beam ends are not distinct and aligned along X or Y")]
    NotCollinear,
    #[error("column group {group} has no column ({ix}, {iy})")]
    UnknownColumn { group: EntityId, ix: u32, iy: u32 },
    #[error("beam cannot rest on {entity} in this direction")]
    UnbearableDirection { entity: EntityId },
    #[error("footing group {group} has no footing ({ix}, {iy})")]
    UnknownFooting { group: EntityId, ix: u32, iy: u32 },
    #[error("expected a {expected} plan, got {found}")]
    WrongKind { expected: PlanKind, found: PlanKind },
    #[error("duplicate or out-of-order entity id {0}")]
    DuplicateId(EntityId),
    #[error("{entity} refers to missing {target}")]
    DanglingReference { entity: EntityId, target: EntityId },
    #[error("{}{message}", entity.map(|e| format!("{e}: ")).unwrap_or_default())]
    InvalidParameter { entity: Option<EntityId>, message: String },
}

impl ModelError {
    /// Stable error name, used as the machine-readable code in service responses.
    pub fn code(&self) -> &'static str {
        match self {
            ModelError::UnknownAxis { .. } => "UnknownAxis",
            ModelError::DanglingBaseAxis { .. } => "DanglingBaseAxis",
            ModelError::AdditionalOutOfBay { .. } => "AdditionalOutOfBay",
            ModelError::PlanKindLocked { .. } => "PlanKindLocked",
            ModelError::PlanKindForbidden { .. } => "PlanKindForbidden",
            ModelError::CountOutOfRange(_) => "CountOutOfRange",
            ModelError::LastAxisGroup { .. } => "LastAxisGroup",
            ModelError::AxisGroupInUse { .. } => "AxisGroupInUse",
            ModelError::UnknownMark { .. } => "UnknownMark",
            ModelError::NonRectangularRun => "NonRectangularRun",
            ModelError::NonAxisAlignedSegment { .. } => "NonAxisAlignedSegment",
            ModelError::EmptyPolyline => "EmptyPolyline",
            ModelError::NoGrid => "NoGrid",
            ModelError::OutOfPartition { .. } => "OutOfPartition",
            ModelError::OverlapsOpening { .. } => "OverlapsOpening",
            ModelError::UnknownEntity(_) => "UnknownEntity",
            ModelError::SpanMismatch { .. } => "SpanMismatch",
            ModelError::NotCollinear => "NotCollinear",
            ModelError::UnknownColumn { .. } => "UnknownColumn",
            ModelError::UnbearableDirection { .. } => "UnbearableDirection",
            ModelError::UnknownFooting { .. } => "UnknownFooting",
            ModelError::WrongKind { .. } => "WrongKind",
            ModelError::DuplicateId(_) => "DuplicateId",
            ModelError::DanglingReference { .. } => "DanglingReference",
            ModelError::InvalidParameter { .. } => "InvalidParameter",
        }
    }

    /// The entity the error is about, when there is one.
    pub fn entity(&self) -> Option<EntityId> {
        match self {
            ModelError::DanglingBaseAxis { group, .. }
            | ModelError::AdditionalOutOfBay { group }
            | ModelError::UnknownColumn { group, .. }
            | ModelError::UnknownFooting { group, .. } => Some(*group),
            ModelError::AxisGroupInUse { entity, .. }
            | ModelError::UnbearableDirection { entity }
            | ModelError::DanglingReference { entity, .. } => Some(*entity),
            ModelError::OutOfPartition { partition } => Some(*partition),
            ModelError::OverlapsOpening { other } => Some(*other),
            ModelError::UnknownEntity(id) | ModelError::DuplicateId(id) => Some(*id),
            ModelError::InvalidParameter { entity, .. } => *entity,
            _ => None,
        }
    }

    pub(crate) fn invalid(entity: impl Into<Option<EntityId>>, message: impl Into<String>) -> Self {
        ModelError::InvalidParameter { entity: entity.into(), message: message.into() }
    }
}
