//! Dimension chains.

use super::{format_mm, DimSide, Dimension, DraftError, Pt};
use crate::model::{geom, EntityId, Grid, Model, Orientation};

fn main_coords(grid: &Grid, o: Orientation) -> Vec<i64> {
    grid.axes(o).iter().filter(|a| a.main).map(|a| a.coord).collect()
}

/// Coordinate of the extreme perpendicular axis on `side`.
fn extreme(grid: &Grid, side: DimSide) -> f64 {
    let across = grid.axes(match side.axis_orientation() {
        Orientation::H => Orientation::V,
        Orientation::V => Orientation::H,
    });
    let coords = across.iter().map(|a| a.coord);
    let v = match side {
        DimSide::Above | DimSide::Right => coords.max(),
        DimSide::Below | DimSide::Left => coords.min(),
    };
    v.unwrap_or(0) as f64
}

fn dim_between(a: i64, b: i64, base: f64, side: DimSide, offset: f64) -> Dimension {
    let (p1, p2) = if side.measures_x() {
        (Pt::new(a as f64, base), Pt::new(b as f64, base))
    } else {
        (Pt::new(base, a as f64), Pt::new(base, b as f64))
    };
    Dimension { p1, p2, offset_mm: offset, text: format_mm((b - a) as f64), side }
}

/// One dimension per pair of adjacent main axes, `dim_offset_mm` beyond the
/// extreme perpendicular axis on `side`. Above/Below measure the vertical axes,
/// Left/Right the horizontal ones.
pub fn generate_span_dimensions(model: &Model, side: DimSide) -> Result<Vec<Dimension>, DraftError> {
    let grid = model.grid()?;
    let o = side.axis_orientation();
    let coords = main_coords(&grid, o);
    if coords.len() < 2 {
        return Err(DraftError::TooFewAxes(o));
    }
    let base = extreme(&grid, side);
    let offset = model.settings.dim_offset_mm as f64;
    Ok(coords.windows(2).map(|w| dim_between(w[0], w[1], base, side, offset)).collect())
}

/// First to last main axis, at twice the span chain offset.
pub fn overall_dimension_at(model: &Model, side: DimSide) -> Result<Dimension, DraftError> {
    let grid = model.grid()?;
    let o = side.axis_orientation();
    let coords = main_coords(&grid, o);
    let (Some(&first), Some(&last)) = (coords.first(), coords.last()) else { return Err(DraftError::TooFewAxes(o)) };
    if coords.len() < 2 {
        return Err(DraftError::TooFewAxes(o));
    }
    Ok(dim_between(first, last, extreme(&grid, side), side, 2.0 * model.settings.dim_offset_mm as f64))
}

/// Overall dimension of the axes of `orientation`, on the default side.
pub fn generate_overall_dimension(model: &Model, orientation: Orientation) -> Result<Dimension, DraftError> {
    overall_dimension_at(model, default_side(model, orientation))
}

/// Default side for the chain measuring the axes of `orientation`.
pub fn default_side(model: &Model, orientation: Orientation) -> DimSide {
    match orientation {
        Orientation::V if model.settings.horiz_dims_above => DimSide::Above,
        Orientation::V => DimSide::Below,
        Orientation::H => DimSide::Left,
    }
}

/// Solid parts and openings of a partition in order; zero-length parts are skipped.
pub fn dimension_partition(model: &Model, partition: EntityId) -> Result<Vec<Dimension>, DraftError> {
    let p = model.partition(partition).ok_or(DraftError::UnknownEntity(partition))?;
    let line = geom::partition_line(&model.grid()?, p)?;
    let mut cuts: Vec<(i64, i64)> = model.openings_on(partition).map(|o| (o.anchor_offset_mm, o.anchor_offset_mm + o.width_mm)).collect();
    cuts.sort();
    let mut marks = vec![0];
    for (a, b) in cuts {
        marks.push(a);
        marks.push(b);
    }
    marks.push(p.length_mm);
    marks.dedup();
    let (side, base) = if p.along_x { (DimSide::Above, line.start.y as f64) } else { (DimSide::Left, line.start.x as f64) };
    let origin = if p.along_x { line.start.x } else { line.start.y };
    let offset = (p.thickness_mm as f64) / 2.0 + model.settings.dim_offset_mm as f64 / 2.0;
    Ok(marks.windows(2).map(|w| dim_between(origin + w[0], origin + w[1], base, side, offset)).collect())
}

/// One dimension per slab, across the laying direction.
pub fn dimension_slab_group(model: &Model, group: EntityId) -> Result<Vec<Dimension>, DraftError> {
    let s = model.slab_group(group).ok_or(DraftError::UnknownEntity(group))?;
    let rects = geom::slab_rects(&model.grid()?, s)?;
    let offset = model.settings.dim_offset_mm as f64 / 2.0;
    Ok(rects
        .iter()
        .map(|r| if s.along_x { dim_between(r.y0, r.y1, r.x0 as f64, DimSide::Left, offset) } else { dim_between(r.x0, r.x1, r.y0 as f64, DimSide::Below, offset) })
        .collect())
}
