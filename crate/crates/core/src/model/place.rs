//! Placement of columns, partitions, openings, beams, slabs and foundations.

use serde::{Deserialize, Serialize};

use super::geom::{self, GroupMember, Linear};
use super::{
    Anchor, Beam, ColumnGroup, ColumnRef, ColumnType, EntityId, EntityKind, FootingGroup, FootingRef, FoundationBeam, Grid,
    Lintel, Mm, Model, ModelError, Offset, Opening, OpeningSectionExtra, Partition, PartitionType, PlanKind, Point, Seat,
    SlabGroup, StripFoundation, TextNote, Transom,
};
use crate::catalog::{Catalog, Family, MarkRecord};

/// How far from a partition's center line an opening preview still snaps to it.
pub const SNAP_CAPTURE_RADIUS_MM: Mm = 500;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnGroupSpec {
    #[serde(default)]
    pub mark: Option<String>,
    #[serde(default)]
    pub unmarked_type: Option<ColumnType>,
    /// Overrides the catalog width; required for unmarked columns.
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub thickness_mm: Option<Mm>,
    #[serde(default)]
    pub console_len_mm: Option<Mm>,
    pub start: Anchor,
    pub end: Anchor,
    #[serde(default)]
    pub center_offset: Offset,
    #[serde(default)]
    pub along_x: bool,
    #[serde(default)]
    pub is_new: bool,
    #[serde(default)]
    pub console_left: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionChainSpec {
    pub gost_type: PartitionType,
    pub thickness_mm: Mm,
    #[serde(default)]
    pub bearing: bool,
    #[serde(default)]
    pub is_new: bool,
    pub polyline: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LintelSpec {
    #[serde(default)]
    pub mark: Option<String>,
    #[serde(default)]
    pub length_mm: Option<Mm>,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransomSpec {
    #[serde(default)]
    pub mark: Option<String>,
    pub thickness_mm: Mm,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionExtraSpec {
    pub sill_height_mm: Mm,
    /// Defaults to the opening height.
    #[serde(default)]
    pub opening_height_mm: Option<Mm>,
    #[serde(default)]
    pub lintel: Option<LintelSpec>,
    #[serde(default)]
    pub transom: Option<TransomSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpeningParams {
    #[serde(default)]
    pub mark: Option<String>,
    pub gost_type: u8,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
    #[serde(default)]
    pub rot180: bool,
    #[serde(default)]
    pub mirrored: bool,
    #[serde(default)]
    pub is_new: bool,
    #[serde(default)]
    pub section_extra: Option<SectionExtraSpec>,
}

/// Outcome of an opening preview.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SnapResult {
    Placement { partition: EntityId, offset_mm: Mm, along_x: bool, rot180: bool, mirrored: bool },
    NoTarget,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamSpec {
    #[serde(default)]
    pub mark: Option<String>,
    #[serde(default)]
    pub length_mm: Option<Mm>,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
    #[serde(default)]
    pub is_new: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoundationBeamSpec {
    #[serde(default)]
    pub mark: Option<String>,
    #[serde(default)]
    pub length_mm: Option<Mm>,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
    #[serde(default)]
    pub is_new: bool,
    #[serde(default)]
    pub seat: Seat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlabGroupSpec {
    #[serde(default)]
    pub mark: Option<String>,
    #[serde(default)]
    pub length_mm: Option<Mm>,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
    #[serde(default)]
    pub along_x: bool,
    pub anchor: Anchor,
    pub count: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StripChainSpec {
    pub width_mm: Mm,
    #[serde(default)]
    pub is_new: bool,
    pub polyline: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FootingGroupSpec {
    #[serde(default)]
    pub mark: Option<String>,
    #[serde(default)]
    pub length_mm: Option<Mm>,
    #[serde(default)]
    pub width_mm: Option<Mm>,
    #[serde(default)]
    pub height_mm: Option<Mm>,
    #[serde(default)]
    pub along_x: bool,
    pub start: Anchor,
    pub end: Anchor,
    #[serde(default)]
    pub center_offset: Offset,
    #[serde(default)]
    pub is_new: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TextSpec {
    pub lines: Vec<String>,
    #[serde(default = "default_font")]
    pub font_height_mm: f64,
    #[serde(default = "default_line_step")]
    pub line_step_mm: f64,
    pub origin: Point,
    pub leader_target: Point,
}

fn default_font() -> f64 {
    3.5
}

fn default_line_step() -> f64 {
    5.0
}

fn lookup<'c>(catalog: &'c Catalog, family: Family, mark: &Option<String>) -> Result<Option<&'c MarkRecord>, ModelError> {
    match mark {
        None => Ok(None),
        Some(name) => catalog
            .lookup(family, name)
            .map(Some)
            .ok_or_else(|| ModelError::UnknownMark { family, name: name.clone() }),
    }
}

/// Explicit value, else the catalog value, else an error naming the missing dimension.
fn dim(explicit: Option<Mm>, from_mark: Option<Mm>, what: &str) -> Result<Mm, ModelError> {
    let v = explicit.or(from_mark).ok_or_else(|| ModelError::invalid(None, format!("{what} is required without a mark")))?;
    if v <= 0 {
        return Err(ModelError::invalid(None, format!("{what} must be positive")));
    }
    Ok(v)
}

/// Splits a polyline into axis-aligned segments: (start of center line, along_x, length).
fn chain_segments(polyline: &[Point]) -> Result<Vec<(Point, bool, Mm)>, ModelError> {
    if polyline.len() < 2 {
        return Err(ModelError::EmptyPolyline);
    }
    polyline
        .windows(2)
        .enumerate()
        .map(|(index, w)| {
            let (a, b) = (w[0], w[1]);
            let along_x = match (a.x == b.x, a.y == b.y) {
                (false, true) => true,
                (true, false) => false,
                (true, true) => return Err(ModelError::invalid(None, format!("polyline segment {index} has zero length"))),
                (false, false) => return Err(ModelError::NonAxisAlignedSegment { index }),
            };
            let start = Point::new(a.x.min(b.x), a.y.min(b.y));
            let length = (b.x - a.x).abs() + (b.y - a.y).abs();
            Ok((start, along_x, length))
        })
        .collect()
}

fn intervals_overlap(a0: Mm, aw: Mm, b0: Mm, bw: Mm) -> bool {
    a0 < b0 + bw && b0 < a0 + aw
}

impl Model {
    fn member_at(&self, grid: &Grid, r: ColumnRef) -> Result<(&ColumnGroup, GroupMember), ModelError> {
        let unknown = ModelError::UnknownColumn { group: r.group, ix: r.ix, iy: r.iy };
        let g = self.column_group(r.group).ok_or_else(|| unknown.clone())?;
        let m = geom::column_members(grid, g)?.into_iter().find(|m| m.node.ix == r.ix && m.node.iy == r.iy).ok_or(unknown)?;
        Ok((g, m))
    }

    fn footing_at(&self, grid: &Grid, r: FootingRef) -> Result<(&FootingGroup, GroupMember), ModelError> {
        let unknown = ModelError::UnknownFooting { group: r.group, ix: r.ix, iy: r.iy };
        let g = self.footing_group(r.group).ok_or_else(|| unknown.clone())?;
        let m = geom::footing_members(grid, g)?.into_iter().find(|m| m.node.ix == r.ix && m.node.iy == r.iy).ok_or(unknown)?;
        Ok((g, m))
    }

    /// Column centers of a group, in (iy, ix) order.
    pub fn column_members(&self, id: EntityId) -> Result<Vec<GroupMember>, ModelError> {
        let g = self.column_group(id).ok_or(ModelError::UnknownEntity(id))?;
        geom::column_members(&self.grid()?, g)
    }

    pub fn footing_members(&self, id: EntityId) -> Result<Vec<GroupMember>, ModelError> {
        let g = self.footing_group(id).ok_or(ModelError::UnknownEntity(id))?;
        geom::footing_members(&self.grid()?, g)
    }

    fn next_chain_id(&self, kind: EntityKind) -> u32 {
        let max = match kind {
            EntityKind::Partition => self.partitions.iter().map(|p| p.chain_id).max(),
            _ => self.strip_foundations.iter().map(|s| s.chain_id).max(),
        };
        max.map_or(1, |m| m + 1)
    }

    /// First opening on `partition` whose slot intersects `[offset, offset + width)`.
    pub fn opening_conflict(&self, partition: EntityId, offset: Mm, width: Mm, except: Option<EntityId>) -> Option<EntityId> {
        self.openings_on(partition)
            .filter(|o| Some(o.id) != except)
            .find(|o| intervals_overlap(offset, width, o.anchor_offset_mm, o.width_mm))
            .map(|o| o.id)
    }

    pub fn place_column_group(&mut self, spec: &ColumnGroupSpec, catalog: &Catalog) -> Result<EntityId, ModelError> {
        self.require(EntityKind::ColumnGroup)?;
        let grid = self.grid()?;
        grid.group_nodes(&spec.start, &spec.end)?;
        if spec.mark.is_some() == spec.unmarked_type.is_some() {
            return Err(ModelError::invalid(None, "a column group has either a mark or an unmarked type"));
        }
        let rec = lookup(catalog, Family::Column, &spec.mark)?;
        let width_mm = dim(spec.width_mm, rec.map(|r| r.dims.second()), "column width")?;
        let thickness_mm =
            dim(spec.thickness_mm, rec.map(|r| r.dims.third().unwrap_or(r.dims.second())), "column thickness")?;
        if spec.console_len_mm.is_some_and(|c| c <= 0) {
            return Err(ModelError::invalid(None, "console length must be positive"));
        }
        let id = self.alloc_id();
        self.column_groups.push(ColumnGroup {
            id,
            mark: spec.mark.clone(),
            unmarked_type: spec.unmarked_type,
            width_mm,
            thickness_mm,
            console_len_mm: spec.console_len_mm,
            start: spec.start,
            end: spec.end,
            center_offset: spec.center_offset,
            along_x: spec.along_x,
            is_new: spec.is_new,
            console_left: spec.console_left,
        });
        Ok(id)
    }

    /// One partition per polyline segment, all sharing a new chain id. Each segment
    /// is anchored to the node nearest the start of its center line.
    pub fn place_partition_chain(&mut self, spec: &PartitionChainSpec) -> Result<Vec<EntityId>, ModelError> {
        self.require(EntityKind::Partition)?;
        let segments = chain_segments(&spec.polyline)?;
        if spec.thickness_mm <= 0 {
            return Err(ModelError::invalid(None, "partition thickness must be positive"));
        }
        let grid = self.grid()?;
        let anchors = segments.iter().map(|(start, ..)| grid.anchor_nearest(*start)).collect::<Result<Vec<_>, _>>()?;
        let chain_id = self.next_chain_id(EntityKind::Partition);
        Ok(segments
            .into_iter()
            .zip(anchors)
            .map(|((_, along_x, length_mm), anchor)| {
                let id = self.alloc_id();
                self.partitions.push(Partition {
                    id,
                    chain_id,
                    gost_type: spec.gost_type,
                    thickness_mm: spec.thickness_mm,
                    length_mm,
                    bearing: spec.bearing,
                    along_x,
                    anchor,
                    is_new: spec.is_new,
                });
                id
            })
            .collect())
    }

    /// Where an opening of `width_mm` would land with the cursor at `cursor`.
    ///
    /// The nearest partition within [`SNAP_CAPTURE_RADIUS_MM`] is chosen; the
    /// opening is centered on the cursor's projection and clamped into the
    /// partition. Never fails: anything that cannot be placed is `NoTarget`.
    pub fn snap_opening_preview(&self, cursor: Point, width_mm: Mm) -> SnapResult {
        if self.kind != PlanKind::Floor || width_mm <= 0 {
            return SnapResult::NoTarget;
        }
        let Ok(grid) = self.grid() else { return SnapResult::NoTarget };
        let best = self
            .partitions
            .iter()
            .filter_map(|p| {
                let line = geom::partition_line(&grid, p).ok()?;
                let (along, dist) = line.project(cursor);
                (dist <= SNAP_CAPTURE_RADIUS_MM as f64).then_some((dist, p.id, along, p))
            })
            .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let Some((_, _, along, p)) = best else { return SnapResult::NoTarget };
        if width_mm > p.length_mm {
            return SnapResult::NoTarget;
        }
        let offset_mm = (along - width_mm / 2).clamp(0, p.length_mm - width_mm);
        if self.opening_conflict(p.id, offset_mm, width_mm, None).is_some() {
            return SnapResult::NoTarget;
        }
        SnapResult::Placement { partition: p.id, offset_mm, along_x: p.along_x, rot180: false, mirrored: false }
    }

    pub fn place_opening(
        &mut self,
        partition: EntityId,
        offset_mm: Mm,
        params: &OpeningParams,
        catalog: &Catalog,
    ) -> Result<EntityId, ModelError> {
        self.require(EntityKind::Opening)?;
        let p = self.partition(partition).ok_or(ModelError::UnknownEntity(partition))?;
        if !(1..=Opening::TYPE_COUNT).contains(&params.gost_type) {
            return Err(ModelError::invalid(None, format!("opening type {} outside 1..=19", params.gost_type)));
        }
        let rec = lookup(catalog, Family::Opening, &params.mark)?;
        let width_mm = dim(params.width_mm, rec.map(|r| r.dims.first()), "opening width")?;
        let height_mm = dim(params.height_mm, rec.map(|r| r.dims.second()), "opening height")?;
        if offset_mm < 0 || offset_mm + width_mm > p.length_mm {
            return Err(ModelError::OutOfPartition { partition });
        }
        if let Some(other) = self.opening_conflict(partition, offset_mm, width_mm, None) {
            return Err(ModelError::OverlapsOpening { other });
        }
        let section_extra = params.section_extra.as_ref().map(|s| section_extra(s, height_mm, catalog)).transpose()?;
        let along_x = p.along_x;
        let id = self.alloc_id();
        self.openings.push(Opening {
            id,
            mark: params.mark.clone(),
            gost_type: params.gost_type,
            width_mm,
            height_mm,
            partition,
            along_x,
            rot180: params.rot180,
            mirrored: params.mirrored,
            anchor_offset_mm: offset_mm,
            is_new: params.is_new,
            section_extra,
        });
        Ok(id)
    }

    /// Places a beam between two columns. The beam is centered between the column
    /// centers and accepted when `0 <= span - length <= beam_span_tolerance_mm`.
    pub fn place_beam(&mut self, spec: &BeamSpec, end_a: ColumnRef, end_b: ColumnRef, catalog: &Catalog) -> Result<EntityId, ModelError> {
        self.require(EntityKind::Beam)?;
        let grid = self.grid()?;
        let (ga, ma) = self.member_at(&grid, end_a)?;
        let (gb, mb) = self.member_at(&grid, end_b)?;
        let along_x = collinear(ma.center, mb.center)?;
        for g in [ga, gb] {
            if let Some(rec) = lookup(catalog, Family::Column, &g.mark)? {
                if rec.bearing.is_some_and(|b| !b.allows(along_x)) {
                    return Err(ModelError::UnbearableDirection { entity: g.id });
                }
            }
        }
        let rec = lookup(catalog, Family::Beam, &spec.mark)?;
        let length_mm = dim(spec.length_mm, rec.map(|r| r.dims.first()), "beam length")?;
        let width_mm = dim(spec.width_mm, rec.map(|r| r.dims.second()), "beam width")?;
        let height_mm = dim(spec.height_mm, rec.and_then(|r| r.dims.third()), "beam height")?;
        let ((first, mf), (second, ms)) = ordered((end_a, ma), (end_b, mb), along_x);
        let span = along_distance(mf.center, ms.center, along_x);
        let slack = self.check_span(span, length_mm)?;
        let start = advance(mf.center, along_x, slack / 2);
        let node = grid.node(mf.node.h_axis, mf.node.v_axis)?;
        let anchor = Anchor::new(mf.node.h_axis, mf.node.v_axis, start.x - node.x, start.y - node.y);
        let id = self.alloc_id();
        self.beams.push(Beam {
            id,
            mark: spec.mark.clone(),
            length_mm,
            width_mm,
            height_mm,
            anchor,
            along_x,
            is_new: spec.is_new,
            end_a: first,
            end_b: second,
        });
        Ok(id)
    }

    pub(crate) fn check_span(&self, span: Mm, length: Mm) -> Result<Mm, ModelError> {
        let slack = span - length;
        if slack < 0 || slack > self.settings.beam_span_tolerance_mm {
            Err(ModelError::SpanMismatch { span, length })
        } else {
            Ok(slack)
        }
    }

    pub fn place_slab_group(&mut self, spec: &SlabGroupSpec, catalog: &Catalog) -> Result<EntityId, ModelError> {
        self.require(EntityKind::SlabGroup)?;
        self.grid()?.anchor_point(&spec.anchor)?;
        if spec.count == 0 {
            return Err(ModelError::invalid(None, "a slab group holds at least one slab"));
        }
        let rec = lookup(catalog, Family::Slab, &spec.mark)?;
        let length_mm = dim(spec.length_mm, rec.map(|r| r.dims.first()), "slab length")?;
        let width_mm = dim(spec.width_mm, rec.map(|r| r.dims.second()), "slab width")?;
        let height_mm = dim(spec.height_mm, rec.and_then(|r| r.dims.third()), "slab height")?;
        let id = self.alloc_id();
        self.slab_groups.push(SlabGroup {
            id,
            mark: spec.mark.clone(),
            length_mm,
            width_mm,
            height_mm,
            along_x: spec.along_x,
            anchor: spec.anchor,
            count: spec.count,
        });
        Ok(id)
    }

    pub fn place_strip_foundation_chain(&mut self, spec: &StripChainSpec) -> Result<Vec<EntityId>, ModelError> {
        self.require(EntityKind::StripFoundation)?;
        let segments = chain_segments(&spec.polyline)?;
        if spec.width_mm <= 0 {
            return Err(ModelError::invalid(None, "strip foundation width must be positive"));
        }
        let grid = self.grid()?;
        let anchors = segments.iter().map(|(start, ..)| grid.anchor_nearest(*start)).collect::<Result<Vec<_>, _>>()?;
        let chain_id = self.next_chain_id(EntityKind::StripFoundation);
        Ok(segments
            .into_iter()
            .zip(anchors)
            .map(|((_, along_x, length_mm), anchor)| {
                let id = self.alloc_id();
                self.strip_foundations.push(StripFoundation {
                    id,
                    chain_id,
                    width_mm: spec.width_mm,
                    length_mm,
                    along_x,
                    anchor,
                    is_new: spec.is_new,
                });
                id
            })
            .collect())
    }

    pub fn place_footing_group(&mut self, spec: &FootingGroupSpec, catalog: &Catalog) -> Result<EntityId, ModelError> {
        self.require(EntityKind::FootingGroup)?;
        self.grid()?.group_nodes(&spec.start, &spec.end)?;
        let rec = lookup(catalog, Family::Footing, &spec.mark)?;
        let length_mm = dim(spec.length_mm, rec.map(|r| r.dims.first()), "footing length")?;
        let width_mm = dim(spec.width_mm, rec.map(|r| r.dims.second()), "footing width")?;
        let height_mm = dim(spec.height_mm, rec.and_then(|r| r.dims.third()), "footing height")?;
        let id = self.alloc_id();
        self.footing_groups.push(FootingGroup {
            id,
            mark: spec.mark.clone(),
            length_mm,
            width_mm,
            height_mm,
            along_x: spec.along_x,
            start: spec.start,
            end: spec.end,
            center_offset: spec.center_offset,
            is_new: spec.is_new,
        });
        Ok(id)
    }

    /// Places a foundation beam between two footings. The seat positions the beam
    /// across its lower (left) footing: centered or flush with one of its edges.
    pub fn place_foundation_beam(
        &mut self,
        spec: &FoundationBeamSpec,
        end_a: FootingRef,
        end_b: FootingRef,
        catalog: &Catalog,
    ) -> Result<EntityId, ModelError> {
        self.require(EntityKind::FoundationBeam)?;
        let grid = self.grid()?;
        let (_, ma) = self.footing_at(&grid, end_a)?;
        let (_, mb) = self.footing_at(&grid, end_b)?;
        let along_x = collinear(ma.center, mb.center)?;
        let rec = lookup(catalog, Family::FoundationBeam, &spec.mark)?;
        let length_mm = dim(spec.length_mm, rec.map(|r| r.dims.first()), "beam length")?;
        let width_mm = dim(spec.width_mm, rec.map(|r| r.dims.second()), "beam width")?;
        let height_mm = dim(spec.height_mm, rec.and_then(|r| r.dims.third()), "beam height")?;
        let ((first, mf), (second, ms)) = ordered((end_a, ma), (end_b, mb), along_x);
        let across = if along_x { mf.rect.height() } else { mf.rect.width() };
        if width_mm > across {
            return Err(ModelError::UnbearableDirection { entity: first.group });
        }
        let span = along_distance(mf.center, ms.center, along_x);
        let slack = self.check_span(span, length_mm)?;
        // left of travel is +Y for a beam along X and -X for a beam along Y
        let lateral = match spec.seat {
            Seat::Center => 0,
            Seat::LeftEdge => across / 2 - width_mm / 2,
            Seat::RightEdge => -(across / 2 - width_mm / 2),
        };
        let mut start = advance(mf.center, along_x, slack / 2);
        if along_x {
            start.y += lateral;
        } else {
            start.x -= lateral;
        }
        let node = grid.node(mf.node.h_axis, mf.node.v_axis)?;
        let anchor = Anchor::new(mf.node.h_axis, mf.node.v_axis, start.x - node.x, start.y - node.y);
        let id = self.alloc_id();
        self.foundation_beams.push(FoundationBeam {
            id,
            mark: spec.mark.clone(),
            length_mm,
            width_mm,
            height_mm,
            anchor,
            along_x,
            is_new: spec.is_new,
            end_a: first,
            seat: spec.seat,
            end_b: second,
        });
        Ok(id)
    }

    pub fn place_text(&mut self, spec: &TextSpec) -> Result<EntityId, ModelError> {
        if spec.lines.is_empty() {
            return Err(ModelError::invalid(None, "text has no lines"));
        }
        if !(spec.font_height_mm > 0.0 && spec.line_step_mm > 0.0) {
            return Err(ModelError::invalid(None, "font height and line step must be positive"));
        }
        let id = self.alloc_id();
        self.texts.push(TextNote {
            id,
            lines: spec.lines.clone(),
            font_height_mm: spec.font_height_mm,
            line_step_mm: spec.line_step_mm,
            origin: spec.origin,
            leader_target: spec.leader_target,
        });
        Ok(id)
    }

    /// Center line of a partition in world coordinates.
    pub fn partition_line(&self, id: EntityId) -> Result<Linear, ModelError> {
        let p = self.partition(id).ok_or(ModelError::UnknownEntity(id))?;
        geom::partition_line(&self.grid()?, p)
    }
}

fn section_extra(s: &SectionExtraSpec, opening_height: Mm, catalog: &Catalog) -> Result<OpeningSectionExtra, ModelError> {
    if s.sill_height_mm < 0 {
        return Err(ModelError::invalid(None, "sill height must not be negative"));
    }
    let opening_height_mm = dim(s.opening_height_mm, Some(opening_height), "opening height")?;
    let lintel = s
        .lintel
        .as_ref()
        .map(|l| -> Result<Lintel, ModelError> {
            let rec = lookup(catalog, Family::Lintel, &l.mark)?;
            Ok(Lintel {
                mark: l.mark.clone(),
                length_mm: dim(l.length_mm, rec.map(|r| r.dims.first()), "lintel length")?,
                width_mm: dim(l.width_mm, rec.map(|r| r.dims.second()), "lintel width")?,
                height_mm: dim(l.height_mm, rec.and_then(|r| r.dims.third()), "lintel height")?,
            })
        })
        .transpose()?;
    let transom = s
        .transom
        .as_ref()
        .map(|t| -> Result<Transom, ModelError> {
            let rec = lookup(catalog, Family::Transom, &t.mark)?;
            Ok(Transom {
                mark: t.mark.clone(),
                thickness_mm: dim(Some(t.thickness_mm), None, "transom thickness")?,
                width_mm: dim(t.width_mm, rec.map(|r| r.dims.first()), "transom width")?,
                height_mm: dim(t.height_mm, rec.map(|r| r.dims.second()), "transom height")?,
            })
        })
        .transpose()?;
    Ok(OpeningSectionExtra { sill_height_mm: s.sill_height_mm, opening_height_mm, lintel, transom })
}

fn collinear(a: Point, b: Point) -> Result<bool, ModelError> {
    match (a.x == b.x, a.y == b.y) {
        (false, true) => Ok(true),
        (true, false) => Ok(false),
        _ => Err(ModelError::NotCollinear),
    }
}

fn along_distance(a: Point, b: Point, along_x: bool) -> Mm {
    if along_x {
        (b.x - a.x).abs()
    } else {
        (b.y - a.y).abs()
    }
}

fn advance(p: Point, along_x: bool, t: Mm) -> Point {
    if along_x {
        Point::new(p.x + t, p.y)
    } else {
        Point::new(p.x, p.y + t)
    }
}

/// Orders two ends so the first is lower/left along the beam direction.
fn ordered<R: Copy>(a: (R, GroupMember), b: (R, GroupMember), along_x: bool) -> ((R, GroupMember), (R, GroupMember)) {
    let key = |m: &GroupMember| if along_x { m.center.x } else { m.center.y };
    if key(&a.1) <= key(&b.1) {
        (a, b)
    } else {
        (b, a)
    }
}
