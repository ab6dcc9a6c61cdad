//! Total-degree solving: tracking, endpoint refinement and classification.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::compiled::Compiled;
use super::config::TrackerConfig;
use super::linear::{least_squares, lu_solve, norm_inf, singular_values};
use super::tracker::{Homotopy, PathEnd};
use crate::error::{Error, Result};
use crate::poly::PolynomialSystem;

type C = Complex64;

/// How an endpoint was classified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionStatus {
    NonsingularTorus,
    OffTorus,
    AtInfinity,
    Singular,
    Failed,
}

impl SolutionStatus {
    /// Finite, nonsingular and converged.
    pub fn is_regular(self) -> bool {
        matches!(self, SolutionStatus::NonsingularTorus | SolutionStatus::OffTorus)
    }
}

/// A refined endpoint.
#[derive(Clone, Debug, PartialEq)]
pub struct TrackedSolution {
    pub point: Vec<C>,
    /// Max over equations of `|f_k(x)| / max(Σ |c| |x^a|, max |c|)`.
    pub residual: f64,
    /// Smallest singular value of the row- and column-equilibrated Jacobian.
    pub min_singular_value: f64,
    pub status: SolutionStatus,
    /// Index of the start path (0 for standalone refinement).
    pub path: usize,
    /// Whether the tracker stopped short of `t = 1`.
    pub stalled: bool,
}

/// Everything a total-degree solve produced.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub paths: usize,
    /// One refined endpoint per path, in path order.
    pub endpoints: Vec<TrackedSolution>,
    /// Distinct finite nonsingular solutions (torus and off-torus).
    pub solutions: Vec<TrackedSolution>,
    pub failed_paths: usize,
    /// Regular endpoints reached by more than one path even after
    /// re-tracking with smaller steps.
    pub duplicate_paths: usize,
}

impl SolveReport {
    pub fn torus_solutions(&self) -> impl Iterator<Item = &TrackedSolution> {
        self.solutions.iter().filter(|s| s.status == SolutionStatus::NonsingularTorus)
    }
}

pub(crate) struct Refined {
    pub x: Vec<C>,
    pub residual: f64,
    pub min_sv: f64,
    pub first_step: f64,
}

fn finite(x: &[C]) -> bool {
    x.iter().all(|v| v.re.is_finite() && v.im.is_finite())
}

/// Relative residual and equilibrated Jacobian at `x`.
pub(crate) fn measure(c: &Compiled, x: &[C], cfg: &TrackerConfig) -> (f64, f64) {
    let (neq, nv) = (c.neqs, c.nvars);
    let mut vals = vec![C::default(); neq];
    let mut jac = vec![C::default(); neq * nv];
    let mut scale = vec![0.0; neq];
    c.eval(x, &mut vals, &mut jac, Some(&mut scale), &mut Vec::new());
    let residual =
        vals.iter().zip(&scale).map(|(v, s)| if *s > 0.0 { v.norm() / s } else { v.norm() }).fold(0.0, f64::max);
    for k in 0..neq {
        let s = if scale[k] > 0.0 { scale[k] } else { 1.0 };
        for j in 0..nv {
            let col = if x[j].norm() > cfg.torus_tol { x[j].norm() } else { 1.0 };
            jac[k * nv + j] *= col / s;
        }
    }
    let sv = singular_values(&jac, neq, nv);
    let min_sv = if neq < nv { 0.0 } else { sv.last().copied().unwrap_or(0.0) };
    (residual, min_sv)
}

/// Newton (or Gauss-Newton for non-square systems) polishing.
pub(crate) fn refine(c: &Compiled, x0: &[C], iters: usize, cfg: &TrackerConfig) -> Refined {
    let (neq, nv) = (c.neqs, c.nvars);
    let mut x = x0.to_vec();
    let mut vals = vec![C::default(); neq];
    let mut jac = vec![C::default(); neq * nv];
    let mut scale = vec![0.0; neq];
    let mut pw = Vec::new();
    let mut first_step = 0.0;
    for it in 0..iters {
        c.eval(&x, &mut vals, &mut jac, Some(&mut scale), &mut pw);
        let res =
            vals.iter().zip(&scale).map(|(v, s)| if *s > 0.0 { v.norm() / s } else { v.norm() }).fold(0.0, f64::max);
        if res <= cfg.newton_tol * 1e-3 {
            break;
        }
        let rhs: Vec<C> = vals.iter().map(|v| -v).collect();
        let delta = if neq == nv {
            let mut a = jac.clone();
            let mut b = rhs;
            if !lu_solve(&mut a, &mut b, nv) {
                break;
            }
            b
        } else {
            match least_squares(&jac, &rhs, neq, nv, 1e-12) {
                Some(d) => d,
                None => break,
            }
        };
        if !finite(&delta) {
            break;
        }
        let step = norm_inf(&delta) / norm_inf(&x).max(1.0);
        if it == 0 {
            first_step = step;
        }
        for (xi, d) in x.iter_mut().zip(&delta) {
            *xi += d;
        }
        if step <= 1e-15 {
            break;
        }
    }
    let (residual, min_sv) = if finite(&x) { measure(c, &x, cfg) } else { (f64::INFINITY, 0.0) };
    Refined { x, residual, min_sv, first_step }
}

/// Classifies a refined point.
pub(crate) fn classify(r: &Refined, stalled: bool, cfg: &TrackerConfig) -> SolutionStatus {
    let size = norm_inf(&r.x);
    if !size.is_finite() || size > cfg.infinity_threshold {
        return SolutionStatus::AtInfinity;
    }
    if r.residual <= cfg.newton_tol && r.min_sv > cfg.singular_svd_tol {
        return if r.x.iter().any(|v| v.norm() < cfg.torus_tol) {
            SolutionStatus::OffTorus
        } else {
            SolutionStatus::NonsingularTorus
        };
    }
    if stalled && size > cfg.infinity_threshold.sqrt() {
        return SolutionStatus::AtInfinity;
    }
    if stalled || r.residual <= cfg.newton_tol.sqrt() {
        return SolutionStatus::Singular;
    }
    SolutionStatus::Failed
}

/// Polishes an approximate solution of a square or overdetermined system.
/// Singular solutions are reported as such; a point that neither converges
/// nor sits at a singular solution is an error.
pub fn newton_refine(sys: &PolynomialSystem, point: &[C], cfg: &TrackerConfig) -> Result<TrackedSolution> {
    if point.len() != sys.num_vars {
        return Err(Error::DimensionMismatch { expected: sys.num_vars, got: point.len() });
    }
    let c = Compiled::affine(sys);
    let r = refine(&c, point, cfg.max_newton_iters, cfg);
    let status = classify(&r, false, cfg);
    if status == SolutionStatus::Failed {
        return Err(Error::NoConvergence { residual: r.residual });
    }
    Ok(TrackedSolution {
        point: r.x,
        residual: r.residual,
        min_singular_value: r.min_sv,
        status,
        path: 0,
        stalled: false,
    })
}

fn process_endpoint(end: &PathEnd, target: &Compiled, path: usize, cfg: &TrackerConfig) -> TrackedSolution {
    let stalled = !end.reached;
    let z0 = end.z[0];
    let mut x: Vec<C> = end.z[1..].iter().map(|v| v / z0).collect();
    if z0.norm() == 0.0 || !finite(&x) {
        x = end.z[1..].to_vec();
        return TrackedSolution {
            point: x,
            residual: f64::INFINITY,
            min_singular_value: 0.0,
            status: SolutionStatus::AtInfinity,
            path,
            stalled,
        };
    }
    if stalled && end.t < 0.9 {
        return TrackedSolution {
            point: x,
            residual: f64::INFINITY,
            min_singular_value: 0.0,
            status: SolutionStatus::Failed,
            path,
            stalled,
        };
    }
    let rel0 = z0.norm() / norm_inf(&end.z);
    if rel0 < 1.0 / cfg.infinity_threshold {
        return TrackedSolution {
            point: x,
            residual: f64::INFINITY,
            min_singular_value: 0.0,
            status: SolutionStatus::AtInfinity,
            path,
            stalled,
        };
    }
    let r = refine(target, &x, cfg.max_newton_iters, cfg);
    let mut status = classify(&r, stalled, cfg);
    if stalled && status.is_regular() && r.first_step > 1e-4 {
        // Newton wandered far from where the path stopped.
        status = if rel0 < cfg.infinity_threshold.sqrt().recip() {
            SolutionStatus::AtInfinity
        } else {
            SolutionStatus::Singular
        };
    }
    TrackedSolution { point: r.x, residual: r.residual, min_singular_value: r.min_sv, status, path, stalled }
}

pub(crate) fn same_point(a: &[C], b: &[C], tol: f64) -> bool {
    let scale = norm_inf(a).max(norm_inf(b)).max(1.0);
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol * scale)
}

/// Groups regular endpoints into clusters of coinciding points.
fn cluster(endpoints: &[TrackedSolution], tol: f64) -> Vec<Vec<usize>> {
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for (i, e) in endpoints.iter().enumerate() {
        if !e.status.is_regular() {
            continue;
        }
        match clusters.iter_mut().find(|c| same_point(&endpoints[c[0]].point, &e.point, tol)) {
            Some(c) => c.push(i),
            None => clusters.push(vec![i]),
        }
    }
    clusters
}

fn map_paths<F>(n: usize, parallel: bool, f: F) -> Vec<TrackedSolution>
where
    F: Fn(usize) -> TrackedSolution + Sync + Send,
{
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

/// Solves a square system by a total-degree homotopy. Randomness (the
/// `γ` constant, start system and chart) is derived from `cfg.seed`.
pub fn solve_total_degree(sys: &PolynomialSystem, cfg: &TrackerConfig) -> Result<SolveReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    solve_with_rng(sys, cfg, &mut rng)
}

pub(crate) fn solve_with_rng(sys: &PolynomialSystem, cfg: &TrackerConfig, rng: &mut ChaCha8Rng) -> Result<SolveReport> {
    if sys.equations.len() != sys.num_vars {
        return Err(Error::DimensionMismatch { expected: sys.num_vars, got: sys.equations.len() });
    }
    if sys.num_vars >= 31 {
        return Err(Error::InvalidInput("too many variables".into()));
    }
    let bezout = sys.bezout_number();
    if bezout > cfg.max_paths as u128 {
        return Err(Error::TooManyPaths { bezout, cap: cfg.max_paths });
    }
    if sys.equations.iter().any(|p| p.is_zero()) {
        return Err(Error::InvalidInput("zero equation".into()));
    }
    let target = Compiled::affine(sys);
    let homogenized = Compiled::homogenized(sys);
    let homotopy = Homotopy::new(&homogenized, rng);
    let n = homotopy.path_count() as usize;
    let run = |step_cfg: &TrackerConfig, i: usize| {
        let end = homotopy.track(homotopy.start_point(i as u128), step_cfg);
        process_endpoint(&end, &target, i, cfg)
    };
    let mut endpoints = map_paths(n, cfg.parallel, |i| run(cfg, i));

    // Distinct paths meeting at a regular endpoint indicate path jumping;
    // re-track them with smaller steps.
    let suspicious: Vec<usize> = cluster(&endpoints, cfg.dedup_tol)
        .into_iter()
        .filter(|c| c.iter().filter(|&&i| !endpoints[i].stalled).count() > 1)
        .flatten()
        .collect();
    if !suspicious.is_empty() {
        let fine = TrackerConfig { max_step: cfg.max_step / 8.0, ..cfg.clone() };
        let redone = map_paths(suspicious.len(), cfg.parallel, |k| run(&fine, suspicious[k]));
        for (k, e) in suspicious.iter().zip(redone) {
            endpoints[*k] = e;
        }
    }
    let clusters = cluster(&endpoints, cfg.dedup_tol);
    let duplicate_paths =
        clusters.iter().map(|c| c.iter().filter(|&&i| !endpoints[i].stalled).count().saturating_sub(1)).sum();
    let solutions = clusters.iter().map(|c| endpoints[c[0]].clone()).collect();
    let failed_paths = endpoints.iter().filter(|e| e.status == SolutionStatus::Failed).count();
    Ok(SolveReport { paths: n, endpoints, solutions, failed_paths, duplicate_paths })
}
