//! Named polytopes available from the command line.

use crate::builders::{
    bg_polytope, cross, cube, reflexive_polygon, simplex_q, simplex_r, simplex_s, simplex_t, sym_edge_polytope, Graph,
    POLYGON_NAMES,
};
use crate::error::{Error, Result};
use crate::lattice::Polytope;

/// Help text listing the accepted builtin names.
pub const BUILTIN_HELP: &str = "P3 P4a P4b P4c P5a P5b P6a P6b P6c P6d P7a P7b P8a P8b P8c P9, \
cube-D, cross-D, Q-D, R-D, S-D, T-D, ks-0, ks-132, \
sym-edge-{star,path,cycle,complete}-N, bg-{star,path,cycle,complete}-N";

/// The two three-dimensional reflexive polytopes singled out for their
/// scaled discriminants, in the coordinates of their design matrices.
fn ks_polytope(name: &str) -> Option<Polytope> {
    let pts: &[[i64; 3]] = match name {
        "ks-0" => &[[1, 1, 1], [2, 1, 1], [1, 2, 1], [1, 1, 2], [0, 0, 0]],
        "ks-132" => &[[1, 1, 1], [2, 1, 1], [1, 1, 2], [0, 1, 0], [0, 0, 1], [1, 2, 1]],
        _ => return None,
    };
    Polytope::from_i64_points(&pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).ok()
}

fn graph(kind: &str, n: usize) -> Result<Graph> {
    match kind {
        "star" => Graph::star(n),
        "path" => Graph::path(n),
        "cycle" => Graph::cycle(n),
        "complete" => Graph::complete(n),
        _ => Err(Error::UnknownName(kind.to_string())),
    }
}

/// Looks up a builtin polytope by name.
pub fn builtin(name: &str) -> Result<Polytope> {
    if POLYGON_NAMES.contains(&name) {
        return reflexive_polygon(name);
    }
    if let Some(p) = ks_polytope(name) {
        return Ok(p);
    }
    let unknown = || Error::UnknownName(name.to_string());
    let (head, last) = name.rsplit_once('-').ok_or_else(unknown)?;
    let n: usize = last.parse().map_err(|_| unknown())?;
    if let Some(kind) = head.strip_prefix("sym-edge-") {
        return sym_edge_polytope(&graph(kind, n)?);
    }
    if let Some(kind) = head.strip_prefix("bg-") {
        return Ok(bg_polytope(&graph(kind, n)?)?.polytope);
    }
    match head {
        "cube" => cube(n),
        "cross" => cross(n),
        "Q" => simplex_q(n),
        "R" => simplex_r(n),
        "S" => simplex_s(n),
        "T" => simplex_t(n),
        _ => Err(unknown()),
    }
}
