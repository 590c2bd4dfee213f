//! Plan drawings.

use serde::{Deserialize, Serialize};

use super::dims::{default_side, generate_span_dimensions, overall_dimension_at};
use super::glyphs::{opening_glyph, partition_part, Frame};
use super::{DimSide, DisplayList, DraftError, Layer, Primitive, Pt, Style};
use crate::model::{geom, Grid, Model, Orientation, Rect, ResolvedAxis};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PlanOptions {
    /// Drawing scale denominator; annotation sizes are paper sizes times this.
    pub scale: u32,
    /// Sides that get span dimension chains. `None` means the default sides.
    pub dim_sides: Option<Vec<DimSide>>,
    /// Add an overall dimension outside every span chain.
    pub overall: bool,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions { scale: 100, dim_sides: None, overall: false }
    }
}

impl PlanOptions {
    pub fn sides(&self, model: &Model) -> Vec<DimSide> {
        match &self.dim_sides {
            Some(s) => s.clone(),
            None => vec![default_side(model, Orientation::V), default_side(model, Orientation::H)],
        }
    }

    fn world(&self, paper_mm: f64) -> f64 {
        paper_mm * f64::from(self.scale.max(1))
    }
}

fn rect_outline(r: &Rect, style: Style) -> Vec<Primitive> {
    let c = r.corners().map(Pt::from);
    (0..4).map(|i| Primitive::segment(c[i], c[(i + 1) % 4], style)).collect()
}

fn span(axes: &[ResolvedAxis]) -> (f64, f64) {
    let lo = axes.iter().map(|a| a.coord).min().unwrap_or(0);
    let hi = axes.iter().map(|a| a.coord).max().unwrap_or(0);
    (lo as f64, hi as f64)
}

/// Axis lines and bubbles. Bubbles go on `bubble_sides`; sides that do not
/// apply to an orientation are ignored.
pub fn axis_items(model: &Model, grid: &Grid, bubble_sides: &[DimSide], scale: u32, out: &mut DisplayList) {
    let ext = model.settings.axis_label_offset_mm as f64;
    let r = 1.5 * model.settings.gen_font_height_mm * f64::from(scale.max(1));
    let (x0, x1) = span(&grid.v);
    let (y0, y1) = span(&grid.h);
    for a in &grid.h {
        let y = a.coord as f64;
        out.push(Layer::Axes, Some(a.group), Primitive::segment(Pt::new(x0 - ext, y), Pt::new(x1 + ext, y), Style::AXIS));
        for side in bubble_sides {
            let x = match side {
                DimSide::Left => x0 - ext - r,
                DimSide::Right => x1 + ext + r,
                _ => continue,
            };
            out.push(Layer::Axes, Some(a.group), Primitive::AxisBubble { center: Pt::new(x, y), r, label: a.label.clone() });
        }
    }
    for a in &grid.v {
        let x = a.coord as f64;
        out.push(Layer::Axes, Some(a.group), Primitive::segment(Pt::new(x, y0 - ext), Pt::new(x, y1 + ext), Style::AXIS));
        for side in bubble_sides {
            let y = match side {
                DimSide::Below => y0 - ext - r,
                DimSide::Above => y1 + ext + r,
                _ => continue,
            };
            out.push(Layer::Axes, Some(a.group), Primitive::AxisBubble { center: Pt::new(x, y), r, label: a.label.clone() });
        }
    }
}

/// Regenerates the drawing of a plan. Layers come in a fixed order, and within
/// a layer entities come in ascending id order.
pub fn generate_plan_display(model: &Model, opts: &PlanOptions) -> Result<DisplayList, DraftError> {
    let grid = model.grid()?;
    let mut out = DisplayList::new();
    let sides = opts.sides(model);

    // bubbles default to the dimension sides, one per orientation at least
    let mut bubble_sides = sides.clone();
    for o in [Orientation::H, Orientation::V] {
        if !bubble_sides.iter().any(|s| s.axis_orientation() == o) {
            bubble_sides.push(default_side(model, o));
        }
    }
    axis_items(model, &grid, &bubble_sides, opts.scale, &mut out);

    for &side in &sides {
        match generate_span_dimensions(model, side) {
            Ok(dims) => out.extend(Layer::Dimensions, None, dims.into_iter().map(Primitive::DimLinear)),
            Err(DraftError::TooFewAxes(_)) => continue,
            Err(e) => return Err(e),
        }
        if opts.overall {
            out.push(Layer::Dimensions, None, Primitive::DimLinear(overall_dimension_at(model, side)?));
        }
    }

    let mut columns = model.column_groups.iter().collect::<Vec<_>>();
    columns.sort_by_key(|g| g.id);
    for g in columns {
        let style = Style::for_entity(g.is_new);
        for m in geom::column_members(&grid, g)? {
            let r = m.rect;
            out.extend(Layer::Columns, Some(g.id), rect_outline(&r, style));
            if g.mark.is_some() || matches!(g.unmarked_type, Some(t) if !matches!(t, crate::model::ColumnType::MetalSolid | crate::model::ColumnType::MetalTwoBranch)) {
                let c = r.corners().map(Pt::from);
                out.push(Layer::Columns, Some(g.id), Primitive::segment(c[0], c[2], style));
                out.push(Layer::Columns, Some(g.id), Primitive::segment(c[1], c[3], style));
            }
            if let Some(len) = g.console_len_mm {
                out.extend(Layer::Columns, Some(g.id), consoles(g, &r, len, style));
            }
        }
    }

    let hatch = opts.world(2.0);
    let mut partitions = model.partitions.iter().collect::<Vec<_>>();
    partitions.sort_by_key(|p| p.id);
    for p in &partitions {
        let line = geom::partition_line(&grid, p)?;
        let frame = Frame::of(&line);
        let mut cuts: Vec<(i64, i64)> = model.openings_on(p.id).map(|o| (o.anchor_offset_mm, o.anchor_offset_mm + o.width_mm)).collect();
        cuts.sort();
        let mut at = 0;
        let style = Style::for_entity(p.is_new);
        for (a, b) in cuts.into_iter().chain([(p.length_mm, p.length_mm)]) {
            if a > at {
                out.extend(Layer::Partitions, Some(p.id), partition_part(&frame, p.gost_type, p.thickness_mm as f64, at as f64, a as f64, hatch, style));
            }
            at = at.max(b);
        }
    }

    let mut openings = model.openings.iter().collect::<Vec<_>>();
    openings.sort_by_key(|o| o.id);
    for o in openings {
        let p = model.partition(o.partition).ok_or(crate::model::ModelError::DanglingReference { entity: o.id, target: o.partition })?;
        let line = geom::partition_line(&grid, p)?;
        out.extend(Layer::Openings, Some(o.id), opening_glyph(&line, o, Style::for_entity(o.is_new)));
    }

    structure(model, &grid, &mut out)?;

    let mut texts = model.texts.iter().collect::<Vec<_>>();
    texts.sort_by_key(|t| t.id);
    for t in texts {
        out.push(
            Layer::Texts,
            Some(t.id),
            Primitive::Leader {
                points: vec![t.leader_target.into(), t.origin.into()],
                text: t.lines.clone(),
                height: opts.world(t.font_height_mm),
                line_step: opts.world(t.line_step_mm),
            },
        );
    }
    Ok(out)
}

fn consoles(g: &crate::model::ColumnGroup, r: &Rect, len: i64, style: Style) -> Vec<Primitive> {
    use crate::model::ColumnType::*;
    let two = matches!(g.unmarked_type, Some(ReinforcedTwoConsole | MetalTwoBranch));
    let mut rects = Vec::new();
    let depth = if g.along_x { r.height() } else { r.width() } / 2;
    // consoles stick out along the column direction
    let before = |r: &Rect| if g.along_x { Rect { x0: r.x0 - len, x1: r.x0, y0: r.y0, y1: r.y0 + depth } } else { Rect { y0: r.y0 - len, y1: r.y0, x0: r.x0, x1: r.x0 + depth } };
    let after = |r: &Rect| if g.along_x { Rect { x0: r.x1, x1: r.x1 + len, y0: r.y0, y1: r.y0 + depth } } else { Rect { y0: r.y1, y1: r.y1 + len, x0: r.x0, x1: r.x0 + depth } };
    if two || g.console_left {
        rects.push(before(r));
    }
    if two || !g.console_left {
        rects.push(after(r));
    }
    rects.iter().flat_map(|r| rect_outline(r, style)).collect()
}

fn structure(model: &Model, grid: &Grid, out: &mut DisplayList) -> Result<(), DraftError> {
    let mut items: Vec<(crate::model::EntityId, Vec<Primitive>)> = Vec::new();
    for b in &model.beams {
        let r = geom::beam_line(grid, b)?.rect();
        items.push((b.id, rect_outline(&r, Style::for_entity(b.is_new))));
    }
    for s in &model.slab_groups {
        let mut prims = Vec::new();
        for r in geom::slab_rects(grid, s)? {
            prims.extend(rect_outline(&r, Style::THIN));
            let c = r.corners().map(Pt::from);
            prims.push(Primitive::segment(c[0], c[2], Style::THIN));
        }
        items.push((s.id, prims));
    }
    for s in &model.strip_foundations {
        let r = geom::strip_line(grid, s)?.rect();
        items.push((s.id, rect_outline(&r, Style::for_entity(s.is_new))));
    }
    for g in &model.footing_groups {
        let style = Style::for_entity(g.is_new);
        let mut prims = Vec::new();
        for m in geom::footing_members(grid, g)? {
            prims.extend(rect_outline(&m.rect, style));
            let inner = Rect::centered(m.center, m.rect.width() / 2, m.rect.height() / 2);
            prims.extend(rect_outline(&inner, style));
        }
        items.push((g.id, prims));
    }
    for b in &model.foundation_beams {
        let r = geom::foundation_beam_line(grid, b)?.rect();
        items.push((b.id, rect_outline(&r, Style::for_entity(b.is_new))));
    }
    items.sort_by_key(|(id, _)| *id);
    for (id, prims) in items {
        out.extend(Layer::Structure, Some(id), prims);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::fixtures::reference_floor;
    use crate::model::PlanKind;

    #[test]
    fn empty_model_empty_list() {
        let m = Model::new(PlanKind::Floor);
        assert!(generate_plan_display(&m, &PlanOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn bubbles_match_resolved_axes() {
        let m = reference_floor(&Catalog::builtin());
        let d = generate_plan_display(&m, &PlanOptions::default()).unwrap();
        let labels: Vec<&str> = d
            .primitives()
            .filter_map(|p| match p {
                Primitive::AxisBubble { center, label, .. } if center.y.fract() == 0.0 && center.x < -2500.0 => Some(label.as_str()),
                _ => None,
            })
            .collect();
        assert_eq!(labels, ["А", "А/1", "Б", "В"]);
        let bubbles = d.primitives().filter(|p| matches!(p, Primitive::AxisBubble { .. })).count();
        assert_eq!(bubbles, 4 + 5);
    }

    #[test]
    fn layers_in_fixed_order() {
        let m = reference_floor(&Catalog::builtin());
        let d = generate_plan_display(&m, &PlanOptions { overall: true, ..Default::default() }).unwrap();
        let layers: Vec<Layer> = d.items.iter().map(|i| i.layer).collect();
        assert!(layers.windows(2).all(|w| w[0] <= w[1]));
        for layer in [Layer::Axes, Layer::Dimensions, Layer::Columns, Layer::Partitions, Layer::Openings, Layer::Texts] {
            assert!(layers.contains(&layer), "{layer:?}");
        }
    }

    #[test]
    fn style_follows_novelty() {
        let m = reference_floor(&Catalog::builtin());
        let d = generate_plan_display(&m, &PlanOptions::default()).unwrap();
        for item in &d.items {
            let Some(owner) = item.owner else { continue };
            let is_new = m
                .partition(owner)
                .map(|p| p.is_new)
                .or_else(|| m.opening(owner).map(|o| o.is_new))
                .or_else(|| m.column_group(owner).map(|g| g.is_new));
            if let (Some(is_new), Some(style)) = (is_new, item.primitive.style()) {
                assert_eq!(style.weight, Style::for_entity(is_new).weight, "{item:?}");
            }
        }
    }

    #[test]
    fn deterministic() {
        let c = Catalog::builtin();
        let a = generate_plan_display(&reference_floor(&c), &PlanOptions::default()).unwrap();
        let b = generate_plan_display(&reference_floor(&c), &PlanOptions::default()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
