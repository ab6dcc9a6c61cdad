//! Exact lattice polytope geometry.

pub mod normal_form;
mod polytope;
mod reduce;
mod vector;
mod volume;

pub use normal_form::{affine_coordinates, hermite_normal_form, lattice_index, smith_invariants};
pub use polytope::{Face, Facet, Polytope};
pub use reduce::{reduce_total_degree, DegreeReduction};
pub use vector::LatticeVector;
pub use volume::Apex;
