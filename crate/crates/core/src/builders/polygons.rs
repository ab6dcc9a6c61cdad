//! The sixteen reflexive polygons up to lattice equivalence.

use crate::error::{Error, Result};
use crate::lattice::Polytope;

/// Names in the conventional order (by number of lattice boundary points).
pub const POLYGON_NAMES: [&str; 16] =
    ["P3", "P4a", "P4b", "P4c", "P5a", "P5b", "P6a", "P6b", "P6c", "P6d", "P7a", "P7b", "P8a", "P8b", "P8c", "P9"];

/// Boundary lattice points of each polygon; the origin is the interior point.
fn boundary_points(name: &str) -> Option<&'static [[i64; 2]]> {
    Some(match name {
        "P3" => &[[-1, -1], [0, 1], [1, 0]],
        "P4a" => &[[0, -1], [0, 1], [1, 0], [-1, 0]],
        "P4b" => &[[0, -1], [0, 1], [1, 0], [-1, 1]],
        "P4c" => &[[0, -1], [0, 1], [1, 1], [-1, 1]],
        "P5a" => &[[0, -1], [0, 1], [1, 0], [-1, 1], [-1, 0]],
        "P5b" => &[[0, -1], [0, 1], [1, 1], [-1, 1], [-1, 0]],
        "P6a" => &[[0, -1], [0, 1], [1, 0], [-1, 1], [-1, 0], [1, -1]],
        "P6b" => &[[0, -1], [0, 1], [1, 0], [-1, 1], [-1, 0], [1, 1]],
        "P6c" => &[[0, -1], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1]],
        "P6d" => &[[-1, -2], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1]],
        "P7a" => &[[0, -1], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1], [1, 0]],
        "P7b" => &[[0, -1], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1], [-1, -2]],
        "P8a" => &[[-1, -1], [-1, 0], [-1, 1], [0, -1], [0, 1], [1, -1], [1, 0], [1, 1]],
        "P8b" => &[[0, -1], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1], [-1, -2], [1, 0]],
        "P8c" => &[[0, -1], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1], [-1, -2], [-1, -3]],
        "P9" => &[[0, -1], [0, 1], [-1, -1], [-1, 1], [-1, 0], [1, 1], [-1, -2], [2, 1], [1, 0]],
        _ => return None,
    })
}

/// One of the sixteen reflexive polygons, centered at the origin.
pub fn reflexive_polygon(name: &str) -> Result<Polytope> {
    let pts = boundary_points(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Polytope::from_i64_points(&pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
}

/// All sixteen polygons with their names.
pub fn all_reflexive_polygons() -> Vec<(&'static str, Polytope)> {
    POLYGON_NAMES.iter().map(|&n| (n, reflexive_polygon(n).expect("fixture polygon"))).collect()
}
