//! Random models, op sequences and independent oracles shared by the
//! integration suites.
#![allow(dead_code)]

use std::path::PathBuf;

use podosnova::catalog::{parse_mark_string, Family, ParsedMark};
use podosnova::drafting::{generate_plan_display, generate_span_dimensions, dimension_partition, overall_dimension_at, DimSide, Primitive, PlanOptions, Pt};
use podosnova::model::{
    Anchor, AxisGroupDraft, AxisGroupKind, BeamSpec, ColumnGroupSpec, ColumnRef, ColumnType, EntityId, EntityKind, FootingGroupSpec,
    FootingRef, FoundationBeamSpec, Offset, OpeningParams, Orientation, PartitionChainSpec, PartitionType, Point, SlabGroupSpec,
    StripChainSpec, TextSpec,
};
use podosnova::{Catalog, Model, Op, PlanKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn round_to(v: i64, step: i64) -> i64 {
    (v / step) * step
}

fn main_group(o: Orientation, count: u32, step: i64) -> Op {
    Op::UpsertAxisGroup(AxisGroupDraft { id: None, orientation: o, count, kind: AxisGroupKind::Main { step_mm: step }, label_start: None })
}

/// Main axis groups in both orientations, and sometimes an additional group.
pub fn random_grid(r: &mut ChaCha8Rng, kind: PlanKind, cat: &Catalog) -> Model {
    let mut m = Model::new(kind);
    for o in [Orientation::H, Orientation::V] {
        for _ in 0..r.gen_range(1..=3) {
            let step = round_to(r.gen_range(1500..=12000), 100);
            m.apply(&main_group(o, r.gen_range(1..=4), step), cat).expect("main groups always apply");
        }
        if r.gen_bool(0.4) {
            let mains: Vec<i64> = m.resolve_axes(o).unwrap().iter().filter(|a| a.main).map(|a| a.coord).collect();
            if mains.len() >= 2 {
                let base = r.gen_range(1..mains.len());
                let gap = mains[base] - mains[base - 1];
                let offset = r.gen_range(1..gap);
                let count = if 2 * offset < gap && r.gen_bool(0.5) { 2 } else { 1 };
                let op = Op::UpsertAxisGroup(AxisGroupDraft {
                    id: None,
                    orientation: o,
                    count,
                    kind: AxisGroupKind::Additional { base_axis: base as u32, offset_mm: offset },
                    label_start: None,
                });
                m.apply(&op, cat).expect("in-bay additional group applies");
            }
        }
    }
    m
}

fn main_indices(m: &Model, o: Orientation) -> Vec<u32> {
    m.resolve_axes(o).unwrap().iter().filter(|a| a.main).map(|a| a.index).collect()
}

fn any_point(r: &mut ChaCha8Rng, m: &Model) -> Point {
    let h = m.resolve_axes(Orientation::H).unwrap();
    let v = m.resolve_axes(Orientation::V).unwrap();
    let y = h.choose(r).unwrap().coord + round_to(r.gen_range(-900..=900), 10);
    let x = v.choose(r).unwrap().coord + round_to(r.gen_range(-900..=900), 10);
    Point::new(x, y)
}

/// A floor plan with columns, partition chains, openings and texts. Ops that
/// the model rejects (overlaps and the like) are simply skipped.
pub fn random_floor(r: &mut ChaCha8Rng, cat: &Catalog) -> Model {
    let mut m = random_grid(r, PlanKind::Floor, cat);
    let columns: Vec<String> = cat.family(Family::Column).map(|c| c.name.clone()).collect();
    for _ in 0..r.gen_range(0..=2) {
        let hs = main_indices(&m, Orientation::H);
        let vs = main_indices(&m, Orientation::V);
        let marked = r.gen_bool(0.6);
        let spec = ColumnGroupSpec {
            mark: marked.then(|| columns.choose(r).unwrap().clone()),
            unmarked_type: (!marked).then(|| *[ColumnType::ReinforcedPlain, ColumnType::MetalSolid, ColumnType::ReinforcedOneConsole].choose(r).unwrap()),
            width_mm: (!marked).then(|| round_to(r.gen_range(200..=800), 10)),
            thickness_mm: (!marked).then(|| round_to(r.gen_range(200..=800), 10)),
            console_len_mm: None,
            start: Anchor::node(*hs.choose(r).unwrap(), *vs.choose(r).unwrap()),
            end: Anchor::node(*hs.choose(r).unwrap(), *vs.choose(r).unwrap()),
            center_offset: Offset::new(round_to(r.gen_range(-300..=300), 50), round_to(r.gen_range(-300..=300), 50)),
            along_x: r.gen_bool(0.5),
            is_new: r.gen_bool(0.3),
            console_left: false,
        };
        let _ = m.apply(&Op::PlaceColumnGroup(spec), cat);
    }
    for _ in 0..r.gen_range(1..=4) {
        let start = any_point(r, &m);
        let mut polyline = vec![start];
        let mut at = start;
        let mut along_x = r.gen_bool(0.5);
        for _ in 0..r.gen_range(1..=3) {
            let len = round_to(r.gen_range(1000..=9000), 10) * if r.gen_bool(0.5) { 1 } else { -1 };
            at = if along_x { Point::new(at.x + len, at.y) } else { Point::new(at.x, at.y + len) };
            polyline.push(at);
            along_x = !along_x;
        }
        let spec = PartitionChainSpec {
            gost_type: *[PartitionType::Ordinary, PartitionType::Brick, PartitionType::Glazed1, PartitionType::PanelShield].choose(r).unwrap(),
            thickness_mm: *[80, 120, 250, 380].choose(r).unwrap(),
            bearing: r.gen_bool(0.5),
            is_new: r.gen_bool(0.3),
            polyline,
        };
        if let Ok(applied) = m.apply(&Op::PlacePartitionChain(spec), cat) {
            for id in applied.created {
                let len = m.partition(id).unwrap().length_mm;
                for _ in 0..r.gen_range(0..=2) {
                    let width = round_to(r.gen_range(600..=2000), 10);
                    if width >= len {
                        continue;
                    }
                    let params = OpeningParams {
                        mark: None,
                        gost_type: r.gen_range(1..=19),
                        width_mm: Some(width),
                        height_mm: Some(round_to(r.gen_range(600..=2400), 10)),
                        rot180: r.gen_bool(0.5),
                        mirrored: r.gen_bool(0.5),
                        is_new: r.gen_bool(0.3),
                        section_extra: None,
                    };
                    let offset = r.gen_range(0..=len - width);
                    let _ = m.apply(&Op::PlaceOpening { partition: id, offset_mm: offset, params }, cat);
                }
            }
        }
    }
    if r.gen_bool(0.5) {
        let text = TextSpec { lines: vec!["Помещение".into()], font_height_mm: 3.5, line_step_mm: 5.0, origin: any_point(r, &m), leader_target: any_point(r, &m) };
        m.apply(&Op::PlaceText(text), cat).unwrap();
    }
    m
}

fn add(p: Point, dx: i64, dy: i64) -> Point {
    Point::new(p.x + dx, p.y + dy)
}

/// Changes the step of one main group and checks that anchors stay put and
/// every placed object follows its node exactly.
pub fn check_axis_edit(r: &mut ChaCha8Rng, m: &mut Model, cat: &Catalog) -> Result<(), String> {
    let anchors = m.anchors();
    let openings: Vec<(EntityId, EntityId, i64)> = m.openings.iter().map(|o| (o.id, o.partition, o.anchor_offset_mm)).collect();
    let mains: Vec<_> = m
        .axis_groups_h
        .iter()
        .chain(&m.axis_groups_v)
        .filter_map(|g| match g.kind {
            AxisGroupKind::Main { step_mm } => Some((g.clone(), step_mm)),
            _ => None,
        })
        .collect();
    let (g, step) = mains.choose(r).ok_or("no main group")?.clone();
    let candidates = [round_to(r.gen_range(1000..=15000), 100), step + round_to(r.gen_range(100..=3000), 100)];
    let mut changed = false;
    let mut why = Vec::new();
    for new_step in candidates {
        if new_step == step {
            continue;
        }
        let draft = AxisGroupDraft { id: Some(g.id), orientation: g.orientation, count: g.count, kind: AxisGroupKind::Main { step_mm: new_step }, label_start: g.label_start };
        match m.apply(&Op::UpsertAxisGroup(draft), cat) {
            Ok(_) => {
                changed = true;
                break;
            }
            Err(e) => why.push(format!("{new_step}: {e}")),
        }
    }
    if !changed {
        return Err(format!("step change of group {} rejected: {why:?}", g.id));
    }
    if m.anchors() != anchors {
        return Err("anchor tuples changed".into());
    }
    let now: Vec<(EntityId, EntityId, i64)> = m.openings.iter().map(|o| (o.id, o.partition, o.anchor_offset_mm)).collect();
    if now != openings {
        return Err("opening placements changed".into());
    }
    let display = generate_plan_display(m, &PlanOptions::default()).map_err(|e| e.to_string())?;
    for cg in &m.column_groups {
        for member in m.column_members(cg.id).map_err(|e| e.to_string())? {
            let node = m.node_position(member.node.h_axis, member.node.v_axis).map_err(|e| e.to_string())?;
            if member.center != add(node, cg.center_offset.dx, cg.center_offset.dy) {
                return Err(format!("column of {} off its node", cg.id));
            }
            let corner = Pt::mm(member.rect.x0, member.rect.y0);
            let drawn = display.owned_by(cg.id).any(|p| matches!(p, Primitive::Segment { p1, .. } if *p1 == corner));
            if !drawn {
                return Err(format!("column outline of {} not drawn at its node", cg.id));
            }
        }
    }
    for p in &m.partitions {
        let node = m.node_position(p.anchor.h_axis, p.anchor.v_axis).map_err(|e| e.to_string())?;
        if m.partition_line(p.id).map_err(|e| e.to_string())?.start != add(node, p.anchor.dx_mm, p.anchor.dy_mm) {
            return Err(format!("partition {} off its node", p.id));
        }
    }
    Ok(())
}

/// Σ span dimensions = overall = distance between the extreme main axes, and
/// Σ partition chain dimensions = partition length.
pub fn check_dimension_conservation(r: &mut ChaCha8Rng, cat: &Catalog) -> Result<(), String> {
    let m = random_floor(r, cat);
    let parse = |t: &str| t.parse::<i64>().map_err(|e| format!("{t}: {e}"));
    for (side, o) in [(DimSide::Below, Orientation::V), (DimSide::Left, Orientation::H)] {
        let mains: Vec<i64> = m.resolve_axes(o).unwrap().iter().filter(|a| a.main).map(|a| a.coord).collect();
        if mains.len() < 2 {
            continue;
        }
        let spans = generate_span_dimensions(&m, side).map_err(|e| e.to_string())?;
        let mut sum = 0;
        for d in &spans {
            sum += parse(&d.text)?;
        }
        let overall = parse(&overall_dimension_at(&m, side).map_err(|e| e.to_string())?.text)?;
        let extreme = mains.last().unwrap() - mains.first().unwrap();
        if sum != overall || overall != extreme {
            return Err(format!("{o}: spans {sum}, overall {overall}, extreme {extreme}"));
        }
    }
    for p in &m.partitions {
        let mut sum = 0;
        for d in dimension_partition(&m, p.id).map_err(|e| e.to_string())? {
            sum += parse(&d.text)?;
        }
        if sum != p.length_mm {
            return Err(format!("partition {}: chain {sum} vs length {}", p.id, p.length_mm));
        }
    }
    Ok(())
}

/// Accept/reject of an opening, computed on a 1 mm raster: it fits when every
/// millimeter it covers lies on the partition and none is already taken.
pub fn opening_oracle(length: i64, taken: &[(i64, i64)], offset: i64, width: i64) -> bool {
    if width <= 0 {
        return false;
    }
    let mut cells = vec![false; length.max(0) as usize];
    for &(o, w) in taken {
        for c in o..o + w {
            cells[c as usize] = true;
        }
    }
    (offset..offset + width).all(|c| c >= 0 && c < length && !cells[c as usize])
}

/// One randomized opening case: a partition with some openings already placed
/// by the validator, then a candidate. Returns (validator, oracle).
pub fn opening_case(r: &mut ChaCha8Rng, cat: &Catalog) -> (bool, bool) {
    let mut m = Model::new(PlanKind::Floor);
    m.apply(&main_group(Orientation::H, 1, 6000), cat).unwrap();
    m.apply(&main_group(Orientation::V, 1, 6000), cat).unwrap();
    let length = r.gen_range(300..=6000);
    let wall = m
        .apply(
            &Op::PlacePartitionChain(PartitionChainSpec {
                gost_type: PartitionType::Ordinary,
                thickness_mm: 120,
                bearing: false,
                is_new: false,
                polyline: vec![Point::new(0, 0), Point::new(length, 0)],
            }),
            cat,
        )
        .unwrap()
        .created[0];
    let mut taken = Vec::new();
    let place = |m: &mut Model, offset: i64, width: i64| {
        let params = OpeningParams {
            mark: None,
            gost_type: 2,
            width_mm: Some(width),
            height_mm: Some(2000),
            rot180: false,
            mirrored: false,
            is_new: false,
            section_extra: None,
        };
        m.apply(&Op::PlaceOpening { partition: wall, offset_mm: offset, params }, cat).is_ok()
    };
    let pick = |r: &mut ChaCha8Rng| (r.gen_range(-200..=length + 200), r.gen_range(1..=length.min(2500)));
    for _ in 0..r.gen_range(0..=4) {
        let (o, w) = pick(r);
        let ok = place(&mut m, o, w);
        assert_eq!(ok, opening_oracle(length, &taken, o, w), "setup disagreement at {o}+{w} on {length} with {taken:?}");
        if ok {
            taken.push((o, w));
        }
    }
    let (o, w) = pick(r);
    (place(&mut m, o, w), opening_oracle(length, &taken, o, w))
}

/// Plan kinds each entity may appear on, written out independently of the model.
pub fn gating_table(entity: EntityKind) -> [bool; 3] {
    use EntityKind::*;
    match entity {
        AxisGroup | Text => [true, true, true],
        ColumnGroup | Partition => [true, true, false],
        Opening => [true, false, false],
        Beam | SlabGroup => [false, true, false],
        StripFoundation | FootingGroup | FoundationBeam => [false, false, true],
    }
}

fn kind_ix(kind: PlanKind) -> usize {
    match kind {
        PlanKind::Floor => 0,
        PlanKind::Ceiling => 1,
        PlanKind::Foundation => 2,
    }
}

/// Referential integrity and gating, checked without calling `validate`.
pub fn integrity(m: &Model) -> Result<(), String> {
    let ids = m.ids();
    let mut seen = std::collections::HashSet::new();
    for (id, kind) in &ids {
        if !seen.insert(*id) {
            return Err(format!("duplicate id {id}"));
        }
        if !gating_table(*kind)[kind_ix(m.kind)] {
            return Err(format!("{kind} {id} on a {} plan", m.kind));
        }
    }
    let h = m.resolve_axes(Orientation::H).map_err(|e| e.to_string())?;
    let v = m.resolve_axes(Orientation::V).map_err(|e| e.to_string())?;
    for (owner, a) in m.anchors() {
        if a.h_axis == 0 || a.h_axis as usize > h.len() || a.v_axis == 0 || a.v_axis as usize > v.len() {
            return Err(format!("{owner} anchored to a missing axis"));
        }
    }
    for o in &m.openings {
        let Some(p) = m.partition(o.partition) else { return Err(format!("opening {} on missing partition", o.id)) };
        if o.anchor_offset_mm < 0 || o.anchor_offset_mm + o.width_mm > p.length_mm {
            return Err(format!("opening {} sticks out of its partition", o.id));
        }
    }
    let column_exists = |c: &ColumnRef| m.column_members(c.group).map(|ms| ms.iter().any(|x| x.node.ix == c.ix && x.node.iy == c.iy)).unwrap_or(false);
    for b in &m.beams {
        if !column_exists(&b.end_a) || !column_exists(&b.end_b) {
            return Err(format!("beam {} rests on a missing column", b.id));
        }
    }
    let footing_exists = |f: &FootingRef| m.footing_members(f.group).map(|ms| ms.iter().any(|x| x.node.ix == f.ix && x.node.iy == f.iy)).unwrap_or(false);
    for b in &m.foundation_beams {
        if !footing_exists(&b.end_a) || !footing_exists(&b.end_b) {
            return Err(format!("foundation beam {} rests on a missing footing", b.id));
        }
    }
    for (id, _) in &ids {
        if id.0 >= m.next_id {
            return Err(format!("id {id} not below next_id"));
        }
    }
    Ok(())
}

fn small_id(r: &mut ChaCha8Rng) -> EntityId {
    EntityId(r.gen_range(1..=14))
}

fn small_anchor(r: &mut ChaCha8Rng, offset: bool) -> Anchor {
    let (dx, dy) = if offset { (round_to(r.gen_range(-500..=500), 50), round_to(r.gen_range(-500..=500), 50)) } else { (0, 0) };
    Anchor::new(r.gen_range(1..=5), r.gen_range(1..=5), dx, dy)
}

fn small_point(r: &mut ChaCha8Rng) -> Point {
    Point::new(round_to(r.gen_range(-1000..=19000), 500), round_to(r.gen_range(-1000..=19000), 500))
}

fn mark(r: &mut ChaCha8Rng, cat: &Catalog, family: Family) -> Option<String> {
    match r.gen_range(0..10) {
        0..=5 => cat.family(family).collect::<Vec<_>>().choose(r).map(|m| m.name.clone()),
        6 => Some("НЕТ-1".into()),
        _ => None,
    }
}

/// Any op, with ids and axis indices drawn from small ranges so that many of
/// them hit real entities and many do not.
pub fn random_op(r: &mut ChaCha8Rng, cat: &Catalog) -> Op {
    let dim = |r: &mut ChaCha8Rng| if r.gen_bool(0.8) { Some(round_to(r.gen_range(100..=6000), 10)) } else { None };
    match r.gen_range(0..14) {
        0 => Op::UpsertAxisGroup(AxisGroupDraft {
            id: r.gen_bool(0.5).then(|| small_id(r)),
            orientation: if r.gen_bool(0.5) { Orientation::H } else { Orientation::V },
            count: r.gen_range(0..=4),
            kind: if r.gen_bool(0.7) {
                AxisGroupKind::Main { step_mm: round_to(r.gen_range(0..=9000), 500) }
            } else {
                AxisGroupKind::Additional { base_axis: r.gen_range(0..=4), offset_mm: round_to(r.gen_range(-1000..=4000), 500) }
            },
            label_start: None,
        }),
        1 => Op::DeleteAxisGroup { id: small_id(r) },
        2 => Op::PlaceColumnGroup(ColumnGroupSpec {
            mark: mark(r, cat, Family::Column),
            unmarked_type: r.gen_bool(0.5).then_some(ColumnType::ReinforcedPlain),
            width_mm: dim(r),
            thickness_mm: dim(r),
            console_len_mm: None,
            start: { let off = r.gen_bool(0.1); small_anchor(r, off) },
            end: small_anchor(r, false),
            center_offset: Offset::ZERO,
            along_x: r.gen_bool(0.5),
            is_new: r.gen_bool(0.5),
            console_left: false,
        }),
        3 | 4 => {
            let a = small_point(r);
            let b = if r.gen_bool(0.5) { Point::new(small_point(r).x, a.y) } else { Point::new(a.x, small_point(r).y) };
            Op::PlacePartitionChain(PartitionChainSpec { gost_type: PartitionType::Ordinary, thickness_mm: 120, bearing: r.gen_bool(0.5), is_new: false, polyline: vec![a, b] })
        }
        5 | 6 => Op::PlaceOpening {
            partition: small_id(r),
            offset_mm: round_to(r.gen_range(-500..=6000), 100),
            params: OpeningParams {
                mark: mark(r, cat, Family::Opening),
                gost_type: r.gen_range(0..=20),
                width_mm: dim(r),
                height_mm: dim(r),
                rot180: false,
                mirrored: false,
                is_new: false,
                section_extra: None,
            },
        },
        7 => Op::PlaceBeam {
            spec: BeamSpec { mark: mark(r, cat, Family::Beam), length_mm: dim(r), width_mm: dim(r), height_mm: dim(r), is_new: false },
            end_a: ColumnRef { group: small_id(r), ix: r.gen_range(0..3), iy: r.gen_range(0..3) },
            end_b: ColumnRef { group: small_id(r), ix: r.gen_range(0..3), iy: r.gen_range(0..3) },
        },
        8 => Op::PlaceSlabGroup(SlabGroupSpec {
            mark: mark(r, cat, Family::Slab),
            length_mm: dim(r),
            width_mm: dim(r),
            height_mm: dim(r),
            along_x: r.gen_bool(0.5),
            anchor: small_anchor(r, true),
            count: r.gen_range(0..=4),
        }),
        9 => {
            let a = small_point(r);
            Op::PlaceStripFoundationChain(StripChainSpec { width_mm: 400, is_new: false, polyline: vec![a, Point::new(a.x, small_point(r).y)] })
        }
        10 => Op::PlaceFootingGroup(FootingGroupSpec {
            mark: mark(r, cat, Family::Footing),
            length_mm: dim(r),
            width_mm: dim(r),
            height_mm: dim(r),
            along_x: true,
            start: small_anchor(r, false),
            end: small_anchor(r, false),
            center_offset: Offset::ZERO,
            is_new: false,
        }),
        11 => Op::PlaceFoundationBeam {
            spec: FoundationBeamSpec { mark: mark(r, cat, Family::FoundationBeam), length_mm: dim(r), width_mm: dim(r), height_mm: dim(r), is_new: false, seat: Default::default() },
            end_a: FootingRef { group: small_id(r), ix: r.gen_range(0..3), iy: r.gen_range(0..3) },
            end_b: FootingRef { group: small_id(r), ix: r.gen_range(0..3), iy: r.gen_range(0..3) },
        },
        12 => {
            if r.gen_bool(0.5) {
                Op::CycleOpeningVariant { id: small_id(r) }
            } else {
                Op::PlaceText(TextSpec { lines: vec!["т".into()], font_height_mm: 3.5, line_step_mm: 5.0, origin: small_point(r), leader_target: small_point(r) })
            }
        }
        _ => Op::DeleteEntity { id: small_id(r) },
    }
}

/// A plan kind and an op sequence that starts by laying a small grid.
pub fn random_sequence(r: &mut ChaCha8Rng, cat: &Catalog, len: usize) -> (PlanKind, Vec<Op>) {
    let kind = *[PlanKind::Floor, PlanKind::Ceiling, PlanKind::Foundation].choose(r).unwrap();
    let mut ops = vec![main_group(Orientation::H, r.gen_range(1..=4), 6000), main_group(Orientation::V, r.gen_range(1..=4), 6000)];
    ops.extend((0..len).map(|_| random_op(r, cat)));
    (kind, ops)
}

/// Families and strings of the reference mark list, unmarked designations included.
pub fn reference_marks() -> Vec<(Family, String)> {
    let text = std::fs::read_to_string(data_dir().join("reference_marks.tsv")).expect("reference mark list");
    text.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (f, s) = l.split_once('\t').expect("family<TAB>mark");
            (f.parse().expect("family"), s.to_string())
        })
        .collect()
}

/// The digit groups between the parentheses, up to the trailer.
pub fn parenthetical_dims(s: &str) -> Vec<i64> {
    let inner = &s[s.find('(').unwrap() + 1..s.rfind(')').unwrap()];
    let dims = inner.split(',').next().unwrap();
    dims.split(|c: char| !c.is_ascii_digit()).filter(|t| !t.is_empty()).map(|t| t.parse().unwrap()).collect()
}

pub fn is_marked(s: &str) -> bool {
    matches!(parse_mark_string(s), Ok(ParsedMark::Marked(_)))
}

/// Places `mark` between two columns 12000 apart on a ceiling plan.
pub fn beam_over_12000(mark: &str, cat: &Catalog) -> Result<EntityId, podosnova::ModelError> {
    let mut m = Model::new(PlanKind::Ceiling);
    m.apply(&main_group(Orientation::H, 1, 6000), cat).unwrap();
    m.apply(&main_group(Orientation::V, 2, 12000), cat).unwrap();
    let spec = ColumnGroupSpec {
        mark: None,
        unmarked_type: Some(ColumnType::ReinforcedPlain),
        width_mm: Some(400),
        thickness_mm: Some(400),
        console_len_mm: None,
        start: Anchor::node(1, 1),
        end: Anchor::node(1, 2),
        center_offset: Offset::ZERO,
        along_x: true,
        is_new: false,
        console_left: false,
    };
    let g = m.apply(&Op::PlaceColumnGroup(spec), cat).unwrap().created[0];
    let beam = BeamSpec { mark: Some(mark.into()), ..Default::default() };
    let applied = m.apply(&Op::PlaceBeam { spec: beam, end_a: ColumnRef { group: g, ix: 0, iy: 0 }, end_b: ColumnRef { group: g, ix: 1, iy: 0 } }, cat)?;
    Ok(applied.created[0])
}

pub const FLOOR_FILE: &str = "reference_floor.podo.json";
pub const FOUNDATION_FILE: &str = "reference_foundation.podo.json";
pub const CEILING_FILE: &str = "reference_ceiling.podo.json";

/// The reference floor, its derived foundation and ceiling plans, keyed by file name.
pub fn reference_plans(cat: &Catalog) -> std::collections::BTreeMap<String, Model> {
    use podosnova::section::FoundationOptions;
    let floor = podosnova::fixtures::reference_floor(cat);
    let foundation = podosnova::derive_foundation_plan(&floor, FoundationOptions::default()).unwrap();
    let ceiling = podosnova::derive_ceiling_plan(&floor).unwrap();
    [(FLOOR_FILE, floor), (FOUNDATION_FILE, foundation), (CEILING_FILE, ceiling)].into_iter().map(|(k, m)| (k.to_string(), m)).collect()
}

/// Cross section 1-1 through the reference floor, across the building at y = 4500.
pub fn reference_section() -> podosnova::SectionSpec {
    use podosnova::section::{PlanAtLevel, Secant, ViewDirection};
    podosnova::SectionSpec {
        floors: vec![PlanAtLevel::new(FLOOR_FILE, 0)],
        foundation: Some(PlanAtLevel::new(FOUNDATION_FILE, -1800)),
        roof: Some(PlanAtLevel::new(CEILING_FILE, 6000)),
        secant: Secant::new(vec![Pt::new(-1500.0, 4500.0), Pt::new(27000.0, 4500.0)], ViewDirection::RightOfTravel),
        letter: "1".into(),
        scale: 100,
    }
}
