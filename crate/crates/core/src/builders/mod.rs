//! Builders for the named polytopes and constructions.

mod constructions;
mod families;
mod graph;
mod polygons;

pub use constructions::{construct, iterate, product, Construction};
pub use families::{cross, cube, simplex_q, simplex_r, simplex_s, simplex_t, sylvester};
pub use graph::{bg_polytope, sym_edge_polytope, BgPolytope, Graph};
pub use polygons::{all_reflexive_polygons, reflexive_polygon, POLYGON_NAMES};
