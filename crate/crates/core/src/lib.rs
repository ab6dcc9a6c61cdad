//! Degrees and maximum likelihood degrees of toric statistical models.
//!
//! A lattice polytope `P` defines a toric model whose algebraic degree is the
//! normalized volume of `P`. Its ML degree is the number of complex critical
//! points of the log-likelihood on the torus and can drop below the degree for
//! special scalings. This crate provides exact lattice geometry, the standard
//! polytope families and constructions, score equations, a homotopy
//! continuation solver and the principal A-determinant test that detects drops.

pub mod builders;
pub mod catalog;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod score;
pub mod solver;

pub use error::{Error, Result};
pub use lattice::{Face, Facet, LatticeVector, Polytope};
