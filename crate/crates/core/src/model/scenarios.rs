use super::*;
use crate::catalog::Catalog;

fn cat() -> Catalog {
    Catalog::builtin()
}

fn main_group(o: Orientation, count: u32, step: Mm) -> AxisGroupDraft {
    AxisGroupDraft { id: None, orientation: o, count, kind: AxisGroupKind::Main { step_mm: step }, label_start: None }
}

/// `nh` x `nv` main axes at 6000.
fn grid_model(kind: PlanKind, nh: u32, nv: u32) -> Model {
    let mut m = Model::new(kind);
    m.upsert_axis_group(main_group(Orientation::H, nh, 6000)).unwrap();
    m.upsert_axis_group(main_group(Orientation::V, nv, 6000)).unwrap();
    m
}

fn unmarked_columns(start: Anchor, end: Anchor) -> ColumnGroupSpec {
    ColumnGroupSpec {
        mark: None,
        unmarked_type: Some(ColumnType::ReinforcedPlain),
        width_mm: Some(400),
        thickness_mm: Some(400),
        console_len_mm: None,
        start,
        end,
        center_offset: Offset::ZERO,
        along_x: true,
        is_new: false,
        console_left: false,
    }
}

fn wall(polyline: &[(Mm, Mm)]) -> PartitionChainSpec {
    PartitionChainSpec {
        gost_type: PartitionType::Ordinary,
        thickness_mm: 120,
        bearing: false,
        is_new: false,
        polyline: polyline.iter().map(|&(x, y)| Point::new(x, y)).collect(),
    }
}

fn door(width: Mm) -> OpeningParams {
    OpeningParams {
        mark: None,
        gost_type: 7,
        width_mm: Some(width),
        height_mm: Some(2100),
        rot180: false,
        mirrored: false,
        is_new: false,
        section_extra: None,
    }
}

fn beam(mark: &str) -> BeamSpec {
    BeamSpec { mark: Some(mark.into()), ..Default::default() }
}

#[test]
fn node_positions() {
    let m = grid_model(PlanKind::Floor, 3, 3);
    assert_eq!(m.node_position(1, 1).unwrap(), Point::new(0, 0));
    assert_eq!(m.node_position(2, 3).unwrap(), Point::new(12000, 6000));
    assert_eq!(m.node_position(9, 1), Err(ModelError::UnknownAxis { orientation: Orientation::H, index: 9 }));
}

#[test]
fn step_change_moves_columns_not_anchors() {
    let mut m = grid_model(PlanKind::Floor, 3, 3);
    let g = m.place_column_group(&unmarked_columns(Anchor::node(2, 2), Anchor::node(2, 2)), &cat()).unwrap();
    let before = m.column_members(g).unwrap()[0].center;
    let anchors = m.anchors();
    let v = m.axis_groups_v[0].clone();
    m.upsert_axis_group(AxisGroupDraft { id: Some(v.id), kind: AxisGroupKind::Main { step_mm: 7500 }, ..main_group(Orientation::V, 3, 0) })
        .unwrap();
    let after = m.column_members(g).unwrap()[0].center;
    assert_eq!(after.x - before.x, 1500);
    assert_eq!(after.y, before.y);
    assert_eq!(m.anchors(), anchors);
}

#[test]
fn step_change_stretches_spanning_column_group() {
    let mut m = grid_model(PlanKind::Floor, 2, 3);
    let g = m.place_column_group(&unmarked_columns(Anchor::node(1, 1), Anchor::node(2, 3)), &cat()).unwrap();
    let v = m.axis_groups_v[0].clone();
    m.upsert_axis_group(AxisGroupDraft { id: Some(v.id), kind: AxisGroupKind::Main { step_mm: 9000 }, ..main_group(Orientation::V, 3, 0) })
        .unwrap();
    let xs: Vec<Mm> = m.column_members(g).unwrap().iter().filter(|c| c.node.iy == 0).map(|c| c.center.x).collect();
    assert_eq!(xs, [0, 9000, 18000]);
}

#[test]
fn axis_edits_locked_on_populated_foundation() {
    let mut m = grid_model(PlanKind::Foundation, 2, 2);
    m.place_strip_foundation_chain(&StripChainSpec { width_mm: 400, is_new: false, polyline: vec![Point::new(0, 0), Point::new(6000, 0)] })
        .unwrap();
    assert_eq!(m.upsert_axis_group(main_group(Orientation::H, 1, 3000)), Err(ModelError::PlanKindLocked { kind: PlanKind::Foundation }));
    let id = m.axis_groups_h[0].id;
    assert_eq!(m.delete_axis_group(id), Err(ModelError::PlanKindLocked { kind: PlanKind::Foundation }));
}

#[test]
fn axis_edits_locked_on_populated_ceiling() {
    let mut m = grid_model(PlanKind::Ceiling, 2, 2);
    m.place_text(&TextSpec {
        lines: vec!["x".into()],
        font_height_mm: 3.5,
        line_step_mm: 5.0,
        origin: Point::new(0, 0),
        leader_target: Point::new(1, 1),
    })
    .unwrap();
    let id = m.axis_groups_v[0].id;
    assert_eq!(m.delete_axis_group(id), Err(ModelError::PlanKindLocked { kind: PlanKind::Ceiling }));
}

#[test]
fn axis_count_limit() {
    let mut m = Model::new(PlanKind::Floor);
    assert_eq!(m.upsert_axis_group(main_group(Orientation::H, 100, 6000)), Err(ModelError::CountOutOfRange(100)));
    assert!(m.upsert_axis_group(main_group(Orientation::H, 99, 6000)).is_ok());
}

#[test]
fn deleting_additional_group_keeps_world_geometry() {
    let mut m = grid_model(PlanKind::Floor, 3, 3);
    let extra = m
        .upsert_axis_group(AxisGroupDraft {
            id: None,
            orientation: Orientation::H,
            count: 1,
            kind: AxisGroupKind::Additional { base_axis: 1, offset_mm: 1500 },
            label_start: None,
        })
        .unwrap();
    // on the additional axis (index 2) and above it on axis Б (index 3)
    let ids = m.place_partition_chain(&wall(&[(0, 1500), (6000, 1500)])).unwrap();
    let upper = m.place_partition_chain(&wall(&[(0, 6100), (6000, 6100)])).unwrap();
    m.place_opening(ids[0], 1000, &door(900), &cat()).unwrap();
    assert_eq!(m.partition(ids[0]).unwrap().anchor.h_axis, 2);
    assert_eq!(m.partition(upper[0]).unwrap().anchor.h_axis, 3);
    let before: Vec<_> = [ids[0], upper[0]].iter().map(|&p| m.partition_line(p).unwrap()).collect();
    assert_eq!(m.delete_axis_group(extra).unwrap(), vec![extra]);
    let after: Vec<_> = [ids[0], upper[0]].iter().map(|&p| m.partition_line(p).unwrap()).collect();
    assert_eq!(before, after);
    assert_eq!(m.partition(upper[0]).unwrap().anchor, Anchor::new(2, 1, 0, 100));
}

#[test]
fn deleting_last_group_of_an_orientation() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let id = m.axis_groups_h[0].id;
    assert_eq!(m.delete_axis_group(id), Err(ModelError::LastAxisGroup { orientation: Orientation::H }));
}

#[test]
fn deleting_main_group_cascades_its_additionals() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let second = m.upsert_axis_group(main_group(Orientation::H, 2, 3000)).unwrap();
    let on_first = m
        .upsert_axis_group(AxisGroupDraft {
            id: None,
            orientation: Orientation::H,
            count: 1,
            kind: AxisGroupKind::Additional { base_axis: 1, offset_mm: 500 },
            label_start: None,
        })
        .unwrap();
    let on_second = m
        .upsert_axis_group(AxisGroupDraft {
            id: None,
            orientation: Orientation::H,
            count: 1,
            kind: AxisGroupKind::Additional { base_axis: 3, offset_mm: 500 },
            label_start: None,
        })
        .unwrap();
    let first = m.axis_groups_h[0].id;
    assert_eq!(m.delete_axis_group(first).unwrap(), vec![first, on_first]);
    assert_eq!(m.axis_groups_h.iter().map(|g| g.id).collect::<Vec<_>>(), vec![second, on_second]);
    assert_eq!(m.axis_groups_h[1].kind, AxisGroupKind::Additional { base_axis: 1, offset_mm: 500 });
}

#[test]
fn column_group_cardinality() {
    let mut m = grid_model(PlanKind::Floor, 3, 4);
    let row = m.place_column_group(&unmarked_columns(Anchor::node(1, 1), Anchor::node(1, 4)), &cat()).unwrap();
    assert_eq!(m.column_members(row).unwrap().len(), 4);
    let block = m.place_column_group(&unmarked_columns(Anchor::node(1, 1), Anchor::node(3, 4)), &cat()).unwrap();
    assert_eq!(m.column_members(block).unwrap().len(), 12);
}

#[test]
fn marked_column_takes_catalog_section() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let spec = ColumnGroupSpec { mark: Some("ЗК96-7".into()), unmarked_type: None, width_mm: None, thickness_mm: None, ..unmarked_columns(Anchor::node(1, 1), Anchor::node(1, 1)) };
    let id = m.place_column_group(&spec, &cat()).unwrap();
    let r = m.column_members(id).unwrap()[0].rect;
    assert_eq!((r.width(), r.height()), (600, 400));

    let bad = ColumnGroupSpec { mark: Some("ЗК00-0".into()), ..spec.clone() };
    assert!(matches!(m.place_column_group(&bad, &cat()), Err(ModelError::UnknownMark { .. })));
    let mut foundation = grid_model(PlanKind::Foundation, 2, 2);
    assert!(matches!(foundation.place_column_group(&spec, &cat()), Err(ModelError::PlanKindForbidden { .. })));
    let off_node = ColumnGroupSpec { start: Anchor::new(1, 1, 10, 0), ..spec };
    assert_eq!(m.place_column_group(&off_node, &cat()), Err(ModelError::NonRectangularRun));
}

#[test]
fn partition_chains() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let ids = m.place_partition_chain(&wall(&[(0, 0), (6000, 0), (6000, 6000)])).unwrap();
    assert_eq!(ids.len(), 2);
    assert_eq!(m.partition(ids[0]).unwrap().chain_id, m.partition(ids[1]).unwrap().chain_id);
    assert!(m.partition(ids[0]).unwrap().along_x);
    assert!(!m.partition(ids[1]).unwrap().along_x);
    assert_eq!(m.place_partition_chain(&wall(&[(0, 0), (3000, 3000)])), Err(ModelError::NonAxisAlignedSegment { index: 0 }));
    assert_eq!(m.place_partition_chain(&wall(&[(0, 0)])), Err(ModelError::EmptyPolyline));
    let one = m.place_partition_chain(&wall(&[(0, 6000), (6000, 6000)])).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(m.partition(one[0]).unwrap().length_mm, 6000);
    assert_ne!(m.partition(one[0]).unwrap().chain_id, m.partition(ids[0]).unwrap().chain_id);
}

#[test]
fn reversed_polyline_segment_anchors_at_its_low_end() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let ids = m.place_partition_chain(&wall(&[(6000, 200), (0, 200)])).unwrap();
    let line = m.partition_line(ids[0]).unwrap();
    assert_eq!(line.start, Point::new(0, 200));
    assert_eq!(m.partition(ids[0]).unwrap().anchor, Anchor::new(1, 1, 0, 200));
}

#[test]
fn snap_preview() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let p = m.place_partition_chain(&wall(&[(0, 0), (6000, 0)])).unwrap()[0];
    assert_eq!(
        m.snap_opening_preview(Point::new(3000, 200), 1460),
        SnapResult::Placement { partition: p, offset_mm: 2270, along_x: true, rot180: false, mirrored: false }
    );
    assert_eq!(m.snap_opening_preview(Point::new(3000, 2000), 1460), SnapResult::NoTarget);
    assert_eq!(m.snap_opening_preview(Point::new(3000, 0), 7000), SnapResult::NoTarget);
    // clamped at the ends
    assert!(matches!(m.snap_opening_preview(Point::new(100, 0), 1460), SnapResult::Placement { offset_mm: 0, .. }));
    assert!(matches!(m.snap_opening_preview(Point::new(6300, 0), 1460), SnapResult::Placement { offset_mm: 4540, .. }));
    m.place_opening(p, 2270, &door(1460), &cat()).unwrap();
    assert_eq!(m.snap_opening_preview(Point::new(3000, 0), 1460), SnapResult::NoTarget);
}

#[test]
fn snap_prefers_nearest_then_lowest_id() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let a = m.place_partition_chain(&wall(&[(0, 0), (6000, 0)])).unwrap()[0];
    let b = m.place_partition_chain(&wall(&[(0, 400), (6000, 400)])).unwrap()[0];
    assert!(matches!(m.snap_opening_preview(Point::new(3000, 300), 900), SnapResult::Placement { partition, .. } if partition == b));
    assert!(matches!(m.snap_opening_preview(Point::new(3000, 200), 900), SnapResult::Placement { partition, .. } if partition == a));
}

#[test]
fn openings() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let p = m.place_partition_chain(&wall(&[(0, 0), (6000, 0)])).unwrap()[0];
    let params = OpeningParams { mark: Some("ОР 15-6".into()), width_mm: None, height_mm: None, gost_type: 1, ..door(0) };
    let o = m.place_opening(p, 500, &params, &cat()).unwrap();
    assert_eq!((m.opening(o).unwrap().width_mm, m.opening(o).unwrap().height_mm), (1460, 570));
    assert_eq!(m.place_opening(p, 1000, &door(900), &cat()), Err(ModelError::OverlapsOpening { other: o }));
    assert_eq!(m.place_opening(p, 5500, &door(900), &cat()), Err(ModelError::OutOfPartition { partition: p }));
    assert_eq!(m.place_opening(p, -1, &door(900), &cat()), Err(ModelError::OutOfPartition { partition: p }));
    // touching is not overlapping
    m.place_opening(p, 1960, &door(900), &cat()).unwrap();

    let mut c = grid_model(PlanKind::Ceiling, 2, 2);
    let cp = c.place_partition_chain(&wall(&[(0, 0), (6000, 0)])).unwrap()[0];
    assert!(matches!(c.place_opening(cp, 0, &door(900), &cat()), Err(ModelError::PlanKindForbidden { .. })));
}

#[test]
fn variant_cycling() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let p = m.place_partition_chain(&wall(&[(0, 0), (6000, 0)])).unwrap()[0];
    let o = m.place_opening(p, 0, &door(900), &cat()).unwrap();
    let start = m.clone();
    for _ in 0..4 {
        m.cycle_opening_variant(o).unwrap();
    }
    assert_eq!(m, start);
    assert_eq!(m.cycle_opening_variant(EntityId(999)), Err(ModelError::UnknownEntity(EntityId(999))));
}

fn ceiling_with_columns(mark: &str) -> (Model, EntityId) {
    let mut m = Model::new(PlanKind::Ceiling);
    m.upsert_axis_group(main_group(Orientation::H, 2, 6000)).unwrap();
    m.upsert_axis_group(main_group(Orientation::V, 2, 12000)).unwrap();
    let spec = ColumnGroupSpec { mark: Some(mark.into()), unmarked_type: None, width_mm: None, thickness_mm: None, ..unmarked_columns(Anchor::node(1, 1), Anchor::node(2, 2)) };
    let g = m.place_column_group(&spec, &cat()).unwrap();
    (m, g)
}

#[test]
fn beam_span_rule() {
    let (mut m, g) = ceiling_with_columns("ЗКС96-1");
    let a = ColumnRef { group: g, ix: 0, iy: 0 };
    let b = ColumnRef { group: g, ix: 1, iy: 0 };
    let id = m.place_beam(&beam("2БСО 12-6 АШв"), a, b, &cat()).unwrap();
    let placed = m.beams.iter().find(|x| x.id == id).unwrap();
    assert_eq!(placed.length_mm, 11960);
    // slack 40 split evenly
    assert_eq!(placed.anchor, Anchor::new(1, 1, 20, 0));
    assert_eq!(m.place_beam(&beam("ИБ 8-21"), a, b, &cat()), Err(ModelError::SpanMismatch { span: 12000, length: 5280 }));
    assert_eq!(m.place_beam(&beam("2БСО 12-6 АШв"), a, a, &cat()), Err(ModelError::NotCollinear));
    let diagonal = ColumnRef { group: g, ix: 1, iy: 1 };
    assert_eq!(m.place_beam(&beam("2БСО 12-6 АШв"), a, diagonal, &cat()), Err(ModelError::NotCollinear));
    let missing = ColumnRef { group: g, ix: 5, iy: 0 };
    assert_eq!(m.place_beam(&beam("2БСО 12-6 АШв"), a, missing, &cat()), Err(ModelError::UnknownColumn { group: g, ix: 5, iy: 0 }));
}

#[test]
fn beam_ends_are_normalized() {
    let (mut m, g) = ceiling_with_columns("ЗКС96-1");
    let a = ColumnRef { group: g, ix: 0, iy: 0 };
    let b = ColumnRef { group: g, ix: 1, iy: 0 };
    let id = m.place_beam(&beam("2БСО 12-6 АШв"), b, a, &cat()).unwrap();
    let placed = m.beams.iter().find(|x| x.id == id).unwrap();
    assert_eq!((placed.end_a, placed.end_b), (a, b));
}

#[test]
fn column_bearing_table() {
    // КФ columns carry beams along Y only
    let (mut m, g) = ceiling_with_columns("КФ 60-4");
    let a = ColumnRef { group: g, ix: 0, iy: 0 };
    let b = ColumnRef { group: g, ix: 1, iy: 0 };
    assert_eq!(m.place_beam(&beam("2БСО 12-6 АШв"), a, b, &cat()), Err(ModelError::UnbearableDirection { entity: g }));
}

#[test]
fn beam_on_floor_plan_is_forbidden() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let g = m.place_column_group(&unmarked_columns(Anchor::node(1, 1), Anchor::node(1, 2)), &cat()).unwrap();
    let r = |ix| ColumnRef { group: g, ix, iy: 0 };
    assert!(matches!(m.place_beam(&beam("1БСП 6-1"), r(0), r(1), &cat()), Err(ModelError::PlanKindForbidden { .. })));
}

#[test]
fn slabs_and_footings_from_catalog() {
    let mut f = grid_model(PlanKind::Foundation, 2, 2);
    let spec = FootingGroupSpec {
        mark: Some("1Ф 12.8-1".into()),
        length_mm: None,
        width_mm: None,
        height_mm: None,
        along_x: true,
        start: Anchor::node(1, 1),
        end: Anchor::node(2, 2),
        center_offset: Offset::ZERO,
        is_new: false,
    };
    let id = f.place_footing_group(&spec, &cat()).unwrap();
    let members = f.footing_members(id).unwrap();
    assert_eq!(members.len(), 4);
    assert_eq!((members[0].rect.width(), members[0].rect.height()), (1200, 1200));

    let mut c = grid_model(PlanKind::Ceiling, 2, 2);
    let slabs = c
        .place_slab_group(
            &SlabGroupSpec {
                mark: Some("ПК24.12-8Т".into()),
                length_mm: None,
                width_mm: None,
                height_mm: None,
                along_x: true,
                anchor: Anchor::node(1, 1),
                count: 8,
            },
            &cat(),
        )
        .unwrap();
    let rects = geom::slab_rects(&c.grid().unwrap(), c.slab_group(slabs).unwrap()).unwrap();
    assert_eq!(rects.len(), 8);
    assert!(rects.iter().all(|r| (r.width(), r.height()) == (2380, 1190)));

    let mut floor = grid_model(PlanKind::Floor, 2, 2);
    assert!(matches!(
        floor.place_strip_foundation_chain(&StripChainSpec { width_mm: 400, is_new: false, polyline: vec![Point::new(0, 0), Point::new(6000, 0)] }),
        Err(ModelError::PlanKindForbidden { .. })
    ));
}

#[test]
fn foundation_beam_seats() {
    let mut f = Model::new(PlanKind::Foundation);
    f.upsert_axis_group(main_group(Orientation::H, 1, 6000)).unwrap();
    f.upsert_axis_group(main_group(Orientation::V, 2, 5500)).unwrap();
    let g = f
        .place_footing_group(
            &FootingGroupSpec {
                mark: Some("1Ф 12.8-1".into()),
                length_mm: None,
                width_mm: None,
                height_mm: None,
                along_x: true,
                start: Anchor::node(1, 1),
                end: Anchor::node(1, 2),
                center_offset: Offset::ZERO,
                is_new: false,
            },
            &cat(),
        )
        .unwrap();
    let r = |ix| ColumnRef { group: g, ix, iy: 0 };
    let mut place = |seat| {
        let spec = FoundationBeamSpec { mark: Some("1БФ6-5".into()), seat, ..Default::default() };
        let id = f.place_foundation_beam(&spec, r(0), r(1), &cat()).unwrap();
        f.foundation_beams.iter().find(|b| b.id == id).unwrap().anchor
    };
    // slack 5500 - 5050 = 450; footing 1200 across, beam 200 wide: edge shift 500
    assert_eq!(place(Seat::Center), Anchor::new(1, 1, 225, 0));
    assert_eq!(place(Seat::LeftEdge), Anchor::new(1, 1, 225, 500));
    assert_eq!(place(Seat::RightEdge), Anchor::new(1, 1, 225, -500));
    let wide = FoundationBeamSpec { mark: None, length_mm: Some(5200), width_mm: Some(1300), height_mm: Some(400), ..Default::default() };
    assert_eq!(f.place_foundation_beam(&wide, r(0), r(1), &cat()), Err(ModelError::UnbearableDirection { entity: g }));
    assert!(matches!(
        f.place_foundation_beam(&FoundationBeamSpec { mark: Some("1БФ6-5".into()), ..Default::default() }, r(0), r(7), &cat()),
        Err(ModelError::UnknownFooting { .. })
    ));
}

#[test]
fn deletion_cascades() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let p = m.place_partition_chain(&wall(&[(0, 0), (6000, 0)])).unwrap()[0];
    let o1 = m.place_opening(p, 0, &door(900), &cat()).unwrap();
    let o2 = m.place_opening(p, 3000, &door(900), &cat()).unwrap();
    let t = m
        .place_text(&TextSpec { lines: vec!["a".into()], font_height_mm: 3.5, line_step_mm: 5.0, origin: Point::new(0, 0), leader_target: Point::new(5, 5) })
        .unwrap();
    assert_eq!(m.delete_entity(p).unwrap(), vec![p, o1, o2]);
    assert_eq!(m.delete_entity(t).unwrap(), vec![t]);
    assert_eq!(m.delete_entity(t), Err(ModelError::UnknownEntity(t)));

    let (mut c, g) = ceiling_with_columns("ЗКС96-1");
    let b = c.place_beam(&beam("2БСО 12-6 АШв"), ColumnRef { group: g, ix: 0, iy: 0 }, ColumnRef { group: g, ix: 1, iy: 0 }, &cat()).unwrap();
    assert_eq!(c.delete_entity(g).unwrap(), vec![g, b]);
    c.validate().unwrap();
}

#[test]
fn editing_axes_inside_a_column_group_is_rejected() {
    let mut m = grid_model(PlanKind::Floor, 3, 3);
    m.place_column_group(&unmarked_columns(Anchor::node(1, 1), Anchor::node(3, 3)), &cat()).unwrap();
    let h = m.axis_groups_h[0].clone();
    let shrink = AxisGroupDraft { id: Some(h.id), ..main_group(Orientation::H, 2, 6000) };
    assert!(matches!(m.upsert_axis_group(shrink), Err(ModelError::AxisGroupInUse { .. })));
    assert_eq!(m.axis_groups_h[0], h);
}

#[test]
fn op_json_is_tagged_by_name() {
    let op: Op = serde_json::from_str(r#"{"op":"delete_entity","id":7}"#).unwrap();
    assert_eq!(op, Op::DeleteEntity { id: EntityId(7) });
    let op: Op = serde_json::from_str(
        r#"{"op":"upsert_axis_group","orientation":"H","count":3,"kind":{"main":{"step_mm":6000}}}"#,
    )
    .unwrap();
    assert!(matches!(op, Op::UpsertAxisGroup(AxisGroupDraft { count: 3, .. })));
    assert!(serde_json::from_str::<Op>(r#"{"op":"delete_entity","id":7,"extra":1}"#).is_err());
}

#[test]
fn failed_batch_leaves_model_untouched() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    let before = m.clone();
    let ops = vec![Op::PlacePartitionChain(wall(&[(0, 0), (6000, 0)])), Op::DeleteEntity { id: EntityId(99) }];
    assert_eq!(m.apply_all(&ops, &cat()), Err((1, ModelError::UnknownEntity(EntityId(99)))));
    assert_eq!(m, before);
}

#[test]
fn ids_are_ascending() {
    let m = crate::fixtures::reference_floor(&cat());
    let ids: Vec<u32> = m.ids().into_iter().map(|(id, _)| id.0).collect();
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn settings_invariants() {
    let mut m = grid_model(PlanKind::Floor, 2, 2);
    m.settings.letter_alphabet = "ААБ".into();
    assert!(m.validate().is_err());
    m.settings = ModelSettings { dim_offset_mm: 0, ..ModelSettings::default() };
    assert!(m.validate().is_err());
}
