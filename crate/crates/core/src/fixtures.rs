//! The reference floor plan used by examples, goldens and benchmarks.

use crate::catalog::Catalog;
use crate::model::{
    Anchor, AxisGroupDraft, AxisGroupKind, AxisLabel, ColumnGroupSpec, LintelSpec, Model, Offset, Op, OpeningParams,
    Orientation, PartitionChainSpec, PartitionType, PlanKind, Point, SectionExtraSpec, TextSpec,
};
use crate::model::EntityId;

fn axis(orientation: Orientation, count: u32, kind: AxisGroupKind, label_start: Option<AxisLabel>) -> Op {
    Op::UpsertAxisGroup(AxisGroupDraft { id: None, orientation, count, kind, label_start })
}

fn chain(gost_type: PartitionType, thickness_mm: i64, bearing: bool, is_new: bool, polyline: &[(i64, i64)]) -> Op {
    Op::PlacePartitionChain(PartitionChainSpec {
        gost_type,
        thickness_mm,
        bearing,
        is_new,
        polyline: polyline.iter().map(|&(x, y)| Point::new(x, y)).collect(),
    })
}

fn opening(partition: u32, offset_mm: i64, params: OpeningParams) -> Op {
    Op::PlaceOpening { partition: EntityId(partition), offset_mm, params }
}

fn params(gost_type: u8) -> OpeningParams {
    OpeningParams {
        mark: None,
        gost_type,
        width_mm: None,
        height_mm: None,
        rot180: false,
        mirrored: false,
        is_new: false,
        section_extra: None,
    }
}

/// Operations that build the reference floor plan from an empty model.
///
/// Grid: horizontal axes А, А/1, Б, В at 0, 3000, 6000, 12000; vertical axes
/// 1..5 at 0, 6000, 12000, 18000, 25500.
pub fn reference_floor_ops() -> Vec<Op> {
    vec![
        axis(Orientation::H, 3, AxisGroupKind::Main { step_mm: 6000 }, Some(AxisLabel::Letter('А'))),
        axis(Orientation::V, 3, AxisGroupKind::Main { step_mm: 6000 }, Some(AxisLabel::Number(1))),
        axis(Orientation::V, 2, AxisGroupKind::Main { step_mm: 7500 }, None),
        axis(Orientation::H, 1, AxisGroupKind::Additional { base_axis: 1, offset_mm: 3000 }, None),
        // ids so far: 1..=4
        Op::PlaceColumnGroup(ColumnGroupSpec {
            mark: Some("ЗК96-7".into()),
            unmarked_type: None,
            width_mm: None,
            thickness_mm: None,
            console_len_mm: None,
            start: Anchor::node(1, 1),
            end: Anchor::node(4, 2),
            center_offset: Offset::ZERO,
            along_x: true,
            is_new: false,
            console_left: false,
        }),
        // 6, 7
        chain(PartitionType::Ordinary, 250, true, false, &[(12000, 0), (12000, 12000), (25500, 12000)]),
        // 8
        chain(PartitionType::Brick, 120, false, true, &[(18000, 0), (18000, 6000)]),
        // 9
        chain(PartitionType::Glazed1, 120, false, true, &[(12000, 3000), (18000, 3000)]),
        opening(7, 2000, OpeningParams { mark: Some("ОР 15-6".into()), ..params(1) }),
        opening(
            6,
            4000,
            OpeningParams {
                width_mm: Some(900),
                height_mm: Some(2100),
                is_new: true,
                section_extra: Some(SectionExtraSpec {
                    sill_height_mm: 0,
                    opening_height_mm: None,
                    lintel: Some(LintelSpec { mark: Some("2ПБ19-3-п".into()), length_mm: None, width_mm: None, height_mm: None }),
                    transom: None,
                }),
                ..params(7)
            },
        ),
        opening(8, 1000, OpeningParams { width_mm: Some(1500), height_mm: Some(2100), rot180: true, is_new: true, ..params(9) }),
        Op::PlaceText(TextSpec {
            lines: vec!["Цех сборки".into(), "S = 144 м2".into()],
            font_height_mm: 3.5,
            line_step_mm: 5.0,
            origin: Point::new(3000, 9000),
            leader_target: Point::new(6000, 7500),
        }),
        Op::PlaceText(TextSpec {
            lines: vec!["Перегородка остекленная".into()],
            font_height_mm: 2.5,
            line_step_mm: 4.0,
            origin: Point::new(20000, 4500),
            leader_target: Point::new(15000, 3000),
        }),
    ]
}

/// The reference floor plan: 2+2 axis groups, 6 columns, 4 partitions,
/// 3 openings and 2 texts.
pub fn reference_floor(catalog: &Catalog) -> Model {
    let mut m = Model::new(PlanKind::Floor);
    m.apply_all(&reference_floor_ops(), catalog).expect("reference model builds");
    m
}
