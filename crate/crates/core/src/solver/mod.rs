//! Homotopy continuation and the ML degree computations built on it.

mod compiled;
mod config;
mod discriminant;
mod linear;
mod mldeg;
mod singularity;
mod solve;
mod tracker;

pub use config::TrackerConfig;
pub use discriminant::{closed_form_discriminant, discriminant_scale, DISCRIMINANT_NAMES};
pub use mldeg::{ml_degree, random_data, seed_rng, solve_score_equations, MLReport, SeedRun};
pub use singularity::{
    face_polynomial, has_toric_singularity, principal_a_determinant_vanishes, FaceWitness, PrincipalDeterminant,
    ToricSingularity,
};
pub use solve::{newton_refine, solve_total_degree, SolutionStatus, SolveReport, TrackedSolution};
