//! ML degree by counting nonsingular torus solutions of the score equations.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::compiled::Compiled;
use super::config::TrackerConfig;
use super::singularity::{principal_a_determinant_vanishes, FaceWitness};
use super::solve::{classify, refine, same_point, solve_with_rng, SolutionStatus};
use crate::error::{Error, Result};
use crate::lattice::{reduce_total_degree, LatticeVector};
use crate::score::{
    birch_residual, reduced_score_system, score_system, toric_polynomial, DataVector, DesignMatrix, Scaling,
    ScoreSolution,
};

type C = Complex64;

/// One solve of the score equations for a fixed data vector.
#[derive(Clone, Debug)]
pub struct SeedRun {
    pub data: Vec<u64>,
    /// Distinct nonsingular torus solutions `(s, θ)`.
    pub solutions: Vec<ScoreSolution>,
    pub paths: usize,
    pub failed_paths: usize,
    pub duplicate_paths: usize,
    /// Largest Birch residual (either component) over the solutions.
    pub max_birch_residual: f64,
}

impl SeedRun {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

/// Result of an ML degree computation.
#[derive(Clone, Debug)]
pub struct MLReport {
    pub degree: u64,
    pub ml_degree: usize,
    /// `degree - ml_degree`.
    pub drop: i64,
    pub per_seed_counts: Vec<usize>,
    /// All seeds agree and no seed lost more than the allowed fraction of paths.
    pub consistent: bool,
    pub failed_paths: usize,
    /// A singular face when the count dropped below the degree.
    pub drop_witness: Option<FaceWitness>,
    pub runs: Vec<SeedRun>,
}

/// RNG for the `i`-th seed of a run.
pub fn seed_rng(base: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(base.wrapping_add((i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Random data with entries in `1..=cfg.data_max`.
pub fn random_data<R: Rng>(n: usize, cfg: &TrackerConfig, rng: &mut R) -> DataVector {
    DataVector { counts: (0..n).map(|_| rng.random_range(1..=cfg.data_max)).collect() }
}

/// Solves the score equations for the data `u`. The scale variable `s` is
/// eliminated before tracking and recovered as `1 / Σ c_i θ^{a_i}`; every
/// lifted point is then polished on the full system.
pub fn solve_score_equations(
    a: &DesignMatrix,
    c: &Scaling,
    u: &DataVector,
    cfg: &TrackerConfig,
    rng: &mut ChaCha8Rng,
) -> Result<SeedRun> {
    // Track in coordinates of smaller total degree; the torus change of
    // variables θ_k = Π_j φ_j^{U_jk} carries solutions back.
    let reduction = reduce_total_degree(a.columns());
    let (report, matrix) = match reduction {
        Some(r) if (r.total_degree as u32) < a.exponents().iter().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0) => {
            let cols = r.points.iter().map(|p| LatticeVector::from_i64(p)).collect();
            let b = DesignMatrix::from_columns(cols)?;
            (solve_with_rng(&reduced_score_system(&b, c, u)?, cfg, rng)?, Some(r.matrix))
        }
        _ => (solve_with_rng(&reduced_score_system(a, c, u)?, cfg, rng)?, None),
    };
    let full = Compiled::affine(&score_system(a, c, u)?);
    let f = toric_polynomial(a, c)?;
    let mut solutions: Vec<Vec<C>> = Vec::new();
    let mut max_birch: f64 = 0.0;
    for sol in report.torus_solutions() {
        let theta = match &matrix {
            Some(m) => pull_back(m, &sol.point),
            None => sol.point.clone(),
        };
        let f0 = f.eval(&theta);
        if f0.norm() <= cfg.torus_tol * f.eval_abs(&theta) {
            continue;
        }
        let mut x = vec![1.0 / f0];
        x.extend_from_slice(&theta);
        let r = refine(&full, &x, cfg.max_newton_iters, cfg);
        if classify(&r, false, cfg) != SolutionStatus::NonsingularTorus {
            continue;
        }
        if solutions.iter().any(|s| same_point(s, &r.x, cfg.dedup_tol)) {
            continue;
        }
        let b = birch_residual(a, c, &ScoreSolution::from_point(&r.x), u)?;
        max_birch = max_birch.max(b.max_residual).max(b.sum_deviation);
        solutions.push(r.x);
    }
    Ok(SeedRun {
        data: u.counts.clone(),
        solutions: solutions.iter().map(|x| ScoreSolution::from_point(x)).collect(),
        paths: report.paths,
        failed_paths: report.failed_paths,
        duplicate_paths: report.duplicate_paths,
        max_birch_residual: max_birch,
    })
}

/// `θ_k = Π_j φ_j^{U_jk}`.
fn pull_back(u: &[Vec<i64>], phi: &[C]) -> Vec<C> {
    (0..phi.len()).map(|k| phi.iter().zip(u).map(|(p, row)| p.powi(row[k] as i32)).product()).collect()
}

/// ML degree of the scaled toric model: the modal count of nonsingular torus
/// solutions over `cfg.seeds` random data vectors (ties go to the larger
/// count). When the count is below the degree, the first singular face is
/// reported as a witness.
pub fn ml_degree(a: &DesignMatrix, c: &Scaling, cfg: &TrackerConfig) -> Result<MLReport> {
    let index = a.lattice_index();
    if index != 1.into() {
        return Err(Error::LatticeIndexNotOne(index.to_string()));
    }
    let polytope = a.polytope()?;
    let degree = polytope.normalized_volume().to_u64().ok_or_else(|| Error::InvalidInput("degree overflow".into()))?;
    let mut runs = Vec::with_capacity(cfg.seeds);
    for i in 0..cfg.seeds.max(1) {
        let mut rng = seed_rng(cfg.seed, i);
        let u = random_data(a.len(), cfg, &mut rng);
        runs.push(solve_score_equations(a, c, &u, cfg, &mut rng)?);
    }
    let per_seed_counts: Vec<usize> = runs.iter().map(SeedRun::count).collect();
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &n in &per_seed_counts {
        *freq.entry(n).or_default() += 1;
    }
    let ml_degree = freq.iter().max_by(|x, y| x.1.cmp(y.1).then(x.0.cmp(y.0))).map(|(&k, _)| k).unwrap_or(0);
    let failed_paths: usize = runs.iter().map(|r| r.failed_paths).sum();
    let consistent = per_seed_counts.iter().all(|&n| n == ml_degree)
        && runs
            .iter()
            .all(|r| (r.failed_paths as f64) <= cfg.max_failure_fraction * r.paths as f64 && r.duplicate_paths == 0);
    let drop = degree as i64 - ml_degree as i64;
    let drop_witness = if drop > 0 {
        // Faces live in the design matrix's translated coordinates here.
        principal_a_determinant_vanishes(&polytope, c, cfg)?.witness
    } else {
        None
    };
    Ok(MLReport { degree, ml_degree, drop, per_seed_counts, consistent, failed_paths, drop_witness, runs })
}
