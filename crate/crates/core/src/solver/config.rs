use serde::{Deserialize, Serialize};

/// Tolerances and budgets for path tracking and ML degree runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrackerConfig {
    /// Relative residual accepted for a converged solution.
    pub newton_tol: f64,
    /// Relative distance under which two endpoints are the same solution.
    pub dedup_tol: f64,
    /// Relative size under which a coordinate counts as zero.
    pub torus_tol: f64,
    /// Coordinate size above which an endpoint is at infinity.
    pub infinity_threshold: f64,
    /// Smallest singular value (of the equilibrated Jacobian) under which an
    /// endpoint is singular.
    pub singular_svd_tol: f64,
    /// Relative residual of `f` and its gradient accepted as a singular point
    /// of a face polynomial.
    pub singularity_tol: f64,
    /// Number of random data vectors per ML degree computation.
    pub seeds: usize,
    /// Base seed; all randomness derives from it.
    pub seed: u64,
    /// Cap on the number of start paths.
    pub max_paths: u64,
    /// Largest step in the homotopy parameter.
    pub max_step: f64,
    /// Step size under which a path is abandoned.
    pub min_step: f64,
    /// Newton iterations for endpoint refinement.
    pub max_newton_iters: usize,
    /// Data entries are drawn uniformly from `1..=data_max`.
    pub data_max: u64,
    /// Fraction of failed paths above which a run is inconsistent.
    pub max_failure_fraction: f64,
    /// Track paths on the rayon thread pool.
    pub parallel: bool,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            newton_tol: 1e-10,
            dedup_tol: 1e-6,
            torus_tol: 1e-8,
            infinity_threshold: 1e8,
            singular_svd_tol: 1e-8,
            singularity_tol: 1e-8,
            seeds: 3,
            seed: 0,
            max_paths: 50_000,
            max_step: 0.05,
            min_step: 1e-11,
            max_newton_iters: 20,
            data_max: 1000,
            max_failure_fraction: 0.01,
            parallel: true,
        }
    }
}
