//! Design matrices, scalings, data and the score equations.

mod cube;
mod design;
mod system;

pub use cube::{cube_ml1_mle, cube_ml1_scaling, cube_mle_closed_form};
pub use design::{design_matrix, DataVector, DesignMatrix, Scaling};
pub use system::{
    birch_residual, reduced_score_system, score_system, solution_to_distribution, toric_polynomial, BirchResidual,
    Distribution, ScoreSolution,
};
