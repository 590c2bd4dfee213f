//! The parametric representation of a plan.
//!
//! A [`Model`] is a set of typed entity lists plus settings. Every placed
//! object references the coordination grid through an [`Anchor`]: a pair
//! of global axis indices and an offset in millimeters. Geometry is never
//! stored; it is regenerated from the model.
//!
//! All lengths are integer millimeters at natural scale. The world frame
//! has X to the right and Y up; horizontal axes run parallel to X.

mod edit;
mod error;
pub mod geom;
mod grid;
mod op;
mod place;
mod validate;

#[cfg(test)]
mod scenarios;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use error::ModelError;
pub use grid::{Grid, ResolvedAxis};
pub use op::{Applied, Op};
pub use geom::{GroupMember, Linear, Rect};
pub use grid::GroupNode;
pub use place::{
    BeamSpec, ColumnGroupSpec, FootingGroupSpec, FoundationBeamSpec, LintelSpec, OpeningParams, PartitionChainSpec,
    SectionExtraSpec, SlabGroupSpec, SnapResult, StripChainSpec, TextSpec, TransomSpec, SNAP_CAPTURE_RADIUS_MM,
};

pub type Mm = i64;

/// Largest number of axes in one group.
pub const MAX_AXES_PER_GROUP: u32 = 99;

/// Default lettering: Cyrillic capitals without З, Й, О, Х, Ц, Ч, Щ, Ъ, Ы, Ь (and Ё).
pub const GOST_AXIS_LETTERS: &str = "АБВГДЕЖИКЛМНПРСТУФШЭЮЯ";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EntityId(pub u32);

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanKind {
    Floor,
    Ceiling,
    Foundation,
}

impl fmt::Display for PlanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanKind::Floor => "floor",
            PlanKind::Ceiling => "ceiling",
            PlanKind::Foundation => "foundation",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// Horizontal axes: lines parallel to X, positioned by their Y coordinate.
    H,
    /// Vertical axes: lines parallel to Y, positioned by their X coordinate.
    V,
}

impl Orientation {
    pub fn other(self) -> Orientation {
        match self {
            Orientation::H => Orientation::V,
            Orientation::V => Orientation::H,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::H => "horizontal",
            Orientation::V => "vertical",
        })
    }
}

/// The kinds of entity lists a model holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntityKind {
    AxisGroup,
    ColumnGroup,
    Partition,
    Opening,
    Beam,
    SlabGroup,
    StripFoundation,
    FootingGroup,
    FoundationBeam,
    Text,
}

impl EntityKind {
    /// Which plan kinds may hold this kind of object.
    pub fn permitted_on(self, kind: PlanKind) -> bool {
        use EntityKind::*;
        use PlanKind::*;
        match self {
            AxisGroup | Text => true,
            ColumnGroup | Partition => matches!(kind, Floor | Ceiling),
            Opening => kind == Floor,
            Beam | SlabGroup => kind == Ceiling,
            StripFoundation | FootingGroup | FoundationBeam => kind == Foundation,
        }
    }
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntityKind::AxisGroup => "axis group",
            EntityKind::ColumnGroup => "column group",
            EntityKind::Partition => "partition",
            EntityKind::Opening => "opening",
            EntityKind::Beam => "beam",
            EntityKind::SlabGroup => "slab group",
            EntityKind::StripFoundation => "strip foundation",
            EntityKind::FootingGroup => "footing group",
            EntityKind::FoundationBeam => "foundation beam",
            EntityKind::Text => "text",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: Mm,
    pub y: Mm,
}

impl Point {
    pub const fn new(x: Mm, y: Mm) -> Self {
        Point { x, y }
    }
}

/// An offset vector in millimeters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Offset {
    pub dx: Mm,
    pub dy: Mm,
}

impl Offset {
    pub const ZERO: Offset = Offset { dx: 0, dy: 0 };

    pub const fn new(dx: Mm, dy: Mm) -> Self {
        Offset { dx, dy }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSettings {
    /// Distance the axis lines run past the extreme perpendicular axes before the bubble.
    pub axis_label_offset_mm: Mm,
    /// Distance of span dimensions from the extreme axis.
    pub dim_offset_mm: Mm,
    /// Horizontal axes are lettered and vertical ones numbered (otherwise the reverse).
    pub horiz_axes_lettered: bool,
    /// Horizontal dimension chains go above the plan by default.
    pub horiz_dims_above: bool,
    /// Text height of generated dimensions and marks, in paper millimeters.
    pub gen_font_height_mm: f64,
    pub beam_span_tolerance_mm: Mm,
    pub letter_alphabet: String,
}

impl ModelSettings {
    pub fn validate(&self) -> Result<(), ModelError> {
        if self.axis_label_offset_mm <= 0 || self.dim_offset_mm <= 0 {
            return Err(ModelError::invalid(None, "label and dimension offsets must be positive"));
        }
        if self.gen_font_height_mm.is_nan() || self.gen_font_height_mm <= 0.0 {
            return Err(ModelError::invalid(None, "font height must be positive"));
        }
        if self.beam_span_tolerance_mm < 0 {
            return Err(ModelError::invalid(None, "beam span tolerance must not be negative"));
        }
        let mut seen = std::collections::HashSet::new();
        if self.letter_alphabet.is_empty() || !self.letter_alphabet.chars().all(|c| seen.insert(c)) {
            return Err(ModelError::invalid(None, "letter alphabet must be non-empty with distinct letters"));
        }
        Ok(())
    }
}

impl Default for ModelSettings {
    fn default() -> Self {
        ModelSettings {
            axis_label_offset_mm: 2500,
            dim_offset_mm: 1000,
            horiz_axes_lettered: true,
            horiz_dims_above: false,
            gen_font_height_mm: 3.5,
            beam_span_tolerance_mm: 500,
            letter_alphabet: GOST_AXIS_LETTERS.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisGroupKind {
    /// Regularly spaced axes; `step_mm` is the distance from each axis to the next.
    Main { step_mm: Mm },
    /// Axes offset from a main axis. `base_axis` is the 1-based ordinal among the
    /// main axes of the same orientation; axis k of the group sits at
    /// `base + k * offset_mm`.
    Additional { base_axis: u32, offset_mm: Mm },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisLabel {
    Letter(char),
    Number(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisGroup {
    pub id: EntityId,
    pub orientation: Orientation,
    pub count: u32,
    pub kind: AxisGroupKind,
    /// Restart labeling of main axes here; `None` continues the previous group's sequence.
    pub label_start: Option<AxisLabel>,
}

/// A new axis group, or a replacement for an existing one when `id` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisGroupDraft {
    #[serde(default)]
    pub id: Option<EntityId>,
    pub orientation: Orientation,
    pub count: u32,
    pub kind: AxisGroupKind,
    #[serde(default)]
    pub label_start: Option<AxisLabel>,
}

/// A grid node plus an offset from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Anchor {
    pub h_axis: u32,
    pub v_axis: u32,
    pub dx_mm: Mm,
    pub dy_mm: Mm,
}

impl Anchor {
    pub const fn node(h_axis: u32, v_axis: u32) -> Self {
        Anchor { h_axis, v_axis, dx_mm: 0, dy_mm: 0 }
    }

    pub const fn new(h_axis: u32, v_axis: u32, dx_mm: Mm, dy_mm: Mm) -> Self {
        Anchor { h_axis, v_axis, dx_mm, dy_mm }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnType {
    ReinforcedPlain,
    ReinforcedOneConsole,
    ReinforcedTwoConsole,
    MetalSolid,
    MetalTwoBranch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnGroup {
    pub id: EntityId,
    pub mark: Option<String>,
    pub unmarked_type: Option<ColumnType>,
    /// Section size along the element direction.
    pub width_mm: Mm,
    /// Section size across the element direction.
    pub thickness_mm: Mm,
    pub console_len_mm: Option<Mm>,
    pub start: Anchor,
    pub end: Anchor,
    pub center_offset: Offset,
    pub along_x: bool,
    pub is_new: bool,
    pub console_left: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionType {
    Ordinary,
    PanelShield,
    GlassBlock,
    Glazed1,
    Glazed2,
    Brick,
}

/// A straight partition segment. The anchor locates the start of its center line;
/// it extends `length_mm` along +X (`along_x`) or +Y.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Partition {
    pub id: EntityId,
    pub chain_id: u32,
    pub gost_type: PartitionType,
    pub thickness_mm: Mm,
    pub length_mm: Mm,
    pub bearing: bool,
    pub along_x: bool,
    pub anchor: Anchor,
    pub is_new: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lintel {
    pub mark: Option<String>,
    pub length_mm: Mm,
    pub width_mm: Mm,
    pub height_mm: Mm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Transom {
    pub mark: Option<String>,
    pub thickness_mm: Mm,
    pub width_mm: Mm,
    pub height_mm: Mm,
}

/// Data only used when sections are generated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpeningSectionExtra {
    pub sill_height_mm: Mm,
    pub opening_height_mm: Mm,
    pub lintel: Option<Lintel>,
    pub transom: Option<Transom>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Opening {
    pub id: EntityId,
    pub mark: Option<String>,
    /// Opening type, 1..=19; see [`crate::drafting::OPENING_TYPES`].
    pub gost_type: u8,
    pub width_mm: Mm,
    pub height_mm: Mm,
    pub partition: EntityId,
    pub along_x: bool,
    pub rot180: bool,
    /// Swing to the other face of the partition.
    pub mirrored: bool,
    /// Distance from the partition start to the near edge of the opening.
    pub anchor_offset_mm: Mm,
    pub is_new: bool,
    pub section_extra: Option<OpeningSectionExtra>,
}

impl Opening {
    pub const TYPE_COUNT: u8 = 19;

    /// Advances through the four placement variants: (rot180, mirrored) as a 2-bit counter.
    pub fn cycle_variant(&mut self) {
        let state = u8::from(self.rot180) | (u8::from(self.mirrored) << 1);
        let next = (state + 1) % 4;
        self.rot180 = next & 1 != 0;
        self.mirrored = next & 2 != 0;
    }
}

/// Column `(ix, iy)` of a column group; indices count main axes from the group's
/// lower-left corner, starting at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnRef {
    pub group: EntityId,
    pub ix: u32,
    pub iy: u32,
}

pub type FootingRef = ColumnRef;

/// A ceiling or roof beam. The anchor locates the start of its center line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Beam {
    pub id: EntityId,
    pub mark: Option<String>,
    pub length_mm: Mm,
    pub width_mm: Mm,
    pub height_mm: Mm,
    pub anchor: Anchor,
    pub along_x: bool,
    pub is_new: bool,
    pub end_a: ColumnRef,
    pub end_b: ColumnRef,
}

/// `count` slabs of `length_mm` laid side by side; the anchor is the lower-left corner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlabGroup {
    pub id: EntityId,
    pub mark: Option<String>,
    pub length_mm: Mm,
    pub width_mm: Mm,
    pub height_mm: Mm,
    pub along_x: bool,
    pub anchor: Anchor,
    pub count: u32,
}

/// A straight strip foundation segment, anchored like a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StripFoundation {
    pub id: EntityId,
    pub chain_id: u32,
    pub width_mm: Mm,
    pub length_mm: Mm,
    pub along_x: bool,
    pub anchor: Anchor,
    pub is_new: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FootingGroup {
    pub id: EntityId,
    pub mark: Option<String>,
    pub length_mm: Mm,
    pub width_mm: Mm,
    pub height_mm: Mm,
    pub along_x: bool,
    pub start: Anchor,
    pub end: Anchor,
    pub center_offset: Offset,
    pub is_new: bool,
}

/// Where a foundation beam sits on its first footing, seen along the beam.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Seat {
    #[default]
    Center,
    LeftEdge,
    RightEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoundationBeam {
    pub id: EntityId,
    pub mark: Option<String>,
    pub length_mm: Mm,
    pub width_mm: Mm,
    pub height_mm: Mm,
    pub anchor: Anchor,
    pub along_x: bool,
    pub is_new: bool,
    pub end_a: FootingRef,
    pub seat: Seat,
    pub end_b: FootingRef,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TextNote {
    pub id: EntityId,
    pub lines: Vec<String>,
    /// Paper millimeters.
    pub font_height_mm: f64,
    pub line_step_mm: f64,
    pub origin: Point,
    pub leader_target: Point,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Model {
    pub kind: PlanKind,
    pub settings: ModelSettings,
    pub axis_groups_h: Vec<AxisGroup>,
    pub axis_groups_v: Vec<AxisGroup>,
    pub column_groups: Vec<ColumnGroup>,
    pub partitions: Vec<Partition>,
    pub openings: Vec<Opening>,
    pub beams: Vec<Beam>,
    pub slab_groups: Vec<SlabGroup>,
    pub strip_foundations: Vec<StripFoundation>,
    pub footing_groups: Vec<FootingGroup>,
    pub foundation_beams: Vec<FoundationBeam>,
    pub texts: Vec<TextNote>,
    pub next_id: u32,
}

impl Model {
    pub fn new(kind: PlanKind) -> Self {
        Model::with_settings(kind, ModelSettings::default())
    }

    pub fn with_settings(kind: PlanKind, settings: ModelSettings) -> Self {
        Model {
            kind,
            settings,
            axis_groups_h: Vec::new(),
            axis_groups_v: Vec::new(),
            column_groups: Vec::new(),
            partitions: Vec::new(),
            openings: Vec::new(),
            beams: Vec::new(),
            slab_groups: Vec::new(),
            strip_foundations: Vec::new(),
            footing_groups: Vec::new(),
            foundation_beams: Vec::new(),
            texts: Vec::new(),
            next_id: 1,
        }
    }

    pub(crate) fn alloc_id(&mut self) -> EntityId {
        let id = EntityId(self.next_id);
        self.next_id += 1;
        id
    }

    pub fn axis_groups(&self, orientation: Orientation) -> &[AxisGroup] {
        match orientation {
            Orientation::H => &self.axis_groups_h,
            Orientation::V => &self.axis_groups_v,
        }
    }

    pub(crate) fn axis_groups_mut(&mut self, orientation: Orientation) -> &mut Vec<AxisGroup> {
        match orientation {
            Orientation::H => &mut self.axis_groups_h,
            Orientation::V => &mut self.axis_groups_v,
        }
    }

    /// True when the model holds anything besides axis groups.
    pub fn has_content(&self) -> bool {
        self.entity_count() > self.axis_groups_h.len() + self.axis_groups_v.len()
    }

    pub fn entity_count(&self) -> usize {
        self.ids().len()
    }

    /// Number of entities in the list of the given kind.
    pub fn count_of(&self, kind: EntityKind) -> usize {
        match kind {
            EntityKind::AxisGroup => self.axis_groups_h.len() + self.axis_groups_v.len(),
            EntityKind::ColumnGroup => self.column_groups.len(),
            EntityKind::Partition => self.partitions.len(),
            EntityKind::Opening => self.openings.len(),
            EntityKind::Beam => self.beams.len(),
            EntityKind::SlabGroup => self.slab_groups.len(),
            EntityKind::StripFoundation => self.strip_foundations.len(),
            EntityKind::FootingGroup => self.footing_groups.len(),
            EntityKind::FoundationBeam => self.foundation_beams.len(),
            EntityKind::Text => self.texts.len(),
        }
    }

    /// Every entity id with its kind, ascending by id.
    pub fn ids(&self) -> Vec<(EntityId, EntityKind)> {
        let mut out = Vec::new();
        out.extend(self.axis_groups_h.iter().map(|e| (e.id, EntityKind::AxisGroup)));
        out.extend(self.axis_groups_v.iter().map(|e| (e.id, EntityKind::AxisGroup)));
        out.extend(self.column_groups.iter().map(|e| (e.id, EntityKind::ColumnGroup)));
        out.extend(self.partitions.iter().map(|e| (e.id, EntityKind::Partition)));
        out.extend(self.openings.iter().map(|e| (e.id, EntityKind::Opening)));
        out.extend(self.beams.iter().map(|e| (e.id, EntityKind::Beam)));
        out.extend(self.slab_groups.iter().map(|e| (e.id, EntityKind::SlabGroup)));
        out.extend(self.strip_foundations.iter().map(|e| (e.id, EntityKind::StripFoundation)));
        out.extend(self.footing_groups.iter().map(|e| (e.id, EntityKind::FootingGroup)));
        out.extend(self.foundation_beams.iter().map(|e| (e.id, EntityKind::FoundationBeam)));
        out.extend(self.texts.iter().map(|e| (e.id, EntityKind::Text)));
        out.sort_by_key(|(id, _)| *id);
        out
    }

    pub fn kind_of(&self, id: EntityId) -> Option<EntityKind> {
        self.ids().into_iter().find(|(i, _)| *i == id).map(|(_, k)| k)
    }

    pub fn axis_group(&self, id: EntityId) -> Option<&AxisGroup> {
        self.axis_groups_h.iter().chain(&self.axis_groups_v).find(|g| g.id == id)
    }

    pub fn column_group(&self, id: EntityId) -> Option<&ColumnGroup> {
        self.column_groups.iter().find(|g| g.id == id)
    }

    pub fn partition(&self, id: EntityId) -> Option<&Partition> {
        self.partitions.iter().find(|p| p.id == id)
    }

    pub fn opening(&self, id: EntityId) -> Option<&Opening> {
        self.openings.iter().find(|o| o.id == id)
    }

    pub fn footing_group(&self, id: EntityId) -> Option<&FootingGroup> {
        self.footing_groups.iter().find(|g| g.id == id)
    }

    pub fn slab_group(&self, id: EntityId) -> Option<&SlabGroup> {
        self.slab_groups.iter().find(|g| g.id == id)
    }

    pub fn openings_on(&self, partition: EntityId) -> impl Iterator<Item = &Opening> {
        self.openings.iter().filter(move |o| o.partition == partition)
    }

    /// Every anchor in the model, with the id of its owner.
    pub fn anchors(&self) -> Vec<(EntityId, Anchor)> {
        let mut out = Vec::new();
        for g in &self.column_groups {
            out.push((g.id, g.start));
            out.push((g.id, g.end));
        }
        out.extend(self.partitions.iter().map(|e| (e.id, e.anchor)));
        out.extend(self.beams.iter().map(|e| (e.id, e.anchor)));
        out.extend(self.slab_groups.iter().map(|e| (e.id, e.anchor)));
        out.extend(self.strip_foundations.iter().map(|e| (e.id, e.anchor)));
        for g in &self.footing_groups {
            out.push((g.id, g.start));
            out.push((g.id, g.end));
        }
        out.extend(self.foundation_beams.iter().map(|e| (e.id, e.anchor)));
        out
    }

    /// Runs `f` on a copy and commits only when it succeeds.
    pub(crate) fn transact<T>(&mut self, f: impl FnOnce(&mut Model) -> Result<T, ModelError>) -> Result<T, ModelError> {
        let mut draft = self.clone();
        let out = f(&mut draft)?;
        *self = draft;
        Ok(out)
    }

    pub(crate) fn require(&self, entity: EntityKind) -> Result<(), ModelError> {
        if entity.permitted_on(self.kind) {
            Ok(())
        } else {
            Err(ModelError::PlanKindForbidden { kind: self.kind, entity })
        }
    }
}
