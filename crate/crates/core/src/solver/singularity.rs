//! Singular points of face polynomials on the torus, and the principal
//! A-determinant test built on them.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::compiled::Compiled;
use super::config::TrackerConfig;
use super::linear::norm_inf;
use super::solve::{refine, same_point, solve_with_rng, SolutionStatus};
use crate::error::{Error, Result};
use crate::lattice::{affine_coordinates, normal_form::affine_rank, reduce_total_degree, LatticeVector, Polytope};
use crate::poly::{monomial, Polynomial, PolynomialSystem, Term};
use crate::score::{design_matrix, Scaling};

type C = Complex64;

/// `f_F(t) = Σ c_i t^{b_i}`, where `b_i` are the face's lattice points in a
/// lattice basis of their affine span, shifted to be nonnegative.
pub fn face_polynomial(points: &[LatticeVector], weights: &[C]) -> Result<Polynomial> {
    if points.len() != weights.len() {
        return Err(Error::DimensionMismatch { expected: points.len(), got: weights.len() });
    }
    if points.is_empty() {
        return Err(Error::InvalidInput("empty face".into()));
    }
    Ok(polynomial_from(&affine_coordinates(points), weights))
}

fn polynomial_from(exponents: &[LatticeVector], weights: &[C]) -> Polynomial {
    let k = exponents[0].dim();
    let terms = exponents.iter().zip(weights).map(|(b, &c)| Term {
        coeff: c,
        exponents: b.0.iter().map(|x| u32::try_from(x).expect("small exponent")).collect(),
    });
    Polynomial::new(k, terms)
}

/// Outcome of a singularity search on one face.
#[derive(Clone, Debug, Default)]
pub struct ToricSingularity {
    /// Distinct torus points where `f` and its gradient vanish.
    pub witnesses: Vec<Vec<C>>,
    pub paths: usize,
    pub failed_paths: usize,
}

impl ToricSingularity {
    pub fn is_singular(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Searches for `t` in the torus with `f_F(t) = ∇f_F(t) = 0`. Critical points
/// of `f_F` are found by homotopy continuation; each endpoint is then pulled
/// onto `{f = ∇f = 0}` by Gauss-Newton and accepted when the relative
/// residual is below `cfg.singularity_tol`.
pub fn has_toric_singularity(points: &[LatticeVector], weights: &[C], cfg: &TrackerConfig) -> Result<ToricSingularity> {
    let k = affine_rank(points);
    // Affinely independent points carry no singular hypersurface.
    if points.len() == k + 1 {
        return Ok(ToricSingularity::default());
    }
    // Lower the total degree by a unimodular change of the face coordinates.
    let coords = affine_coordinates(points);
    let f = match reduce_total_degree(&coords) {
        Some(r) => polynomial_from(&r.points.iter().map(|p| LatticeVector::from_i64(p)).collect::<Vec<_>>(), weights),
        None => face_polynomial(points, weights)?,
    };
    let grad: Vec<Polynomial> = (0..k).map(|j| f.derivative(j).strip_monomial_factor()).collect();
    if grad.iter().any(|g| g.degree() == 0) {
        return Ok(ToricSingularity::default());
    }
    let sys = PolynomialSystem::new(k, grad.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5EED_F00D);
    let report = solve_with_rng(&sys, cfg, &mut rng)?;
    let aug_f = f.clone();
    let mut eqs = vec![f];
    eqs.extend(grad);
    let aug = Compiled::affine(&PolynomialSystem::new(k, eqs));
    let mut witnesses: Vec<Vec<C>> = Vec::new();
    for e in &report.endpoints {
        if matches!(e.status, SolutionStatus::AtInfinity | SolutionStatus::Failed)
            && e.stalled
            && e.residual.is_infinite()
        {
            continue;
        }
        if !e.point.iter().all(|v| v.re.is_finite() && v.im.is_finite()) || norm_inf(&e.point) > cfg.infinity_threshold
        {
            continue;
        }
        let r = refine(&aug, &e.point, 40, cfg);
        let size = norm_inf(&r.x);
        if !size.is_finite() || size > cfg.infinity_threshold {
            continue;
        }
        if r.x.iter().any(|v| v.norm() < cfg.torus_tol * size.max(1.0)) {
            continue;
        }
        if toric_residual(&aug_f, &r.x) <= cfg.singularity_tol
            && !witnesses.iter().any(|w| same_point(w, &r.x, cfg.dedup_tol))
        {
            witnesses.push(r.x);
        }
    }
    Ok(ToricSingularity { witnesses, paths: report.paths, failed_paths: report.failed_paths })
}

/// Largest of `|f| / Σ|c_i θ^{b_i}|` and `|θ_j ∂_j f| / Σ|b_ij c_i θ^{b_i}|`.
/// Each ratio compares a sum with the moduli of its own terms, so it is
/// invariant under torus rescaling and stays of order one near the coordinate
/// hyperplanes, where `f` and `∇f` are small without any cancellation.
fn toric_residual(f: &Polynomial, x: &[C]) -> f64 {
    let k = x.len();
    let mut sums = vec![C::new(0.0, 0.0); k + 1];
    let mut scales = vec![0.0; k + 1];
    for t in &f.terms {
        let m = t.coeff * monomial(x, &t.exponents);
        sums[0] += m;
        scales[0] += m.norm();
        for (j, &e) in t.exponents.iter().enumerate() {
            sums[j + 1] += m * e as f64;
            scales[j + 1] += m.norm() * e as f64;
        }
    }
    sums.iter().zip(&scales).filter(|(_, &sc)| sc > 0.0).map(|(s, sc)| s.norm() / sc).fold(0.0, f64::max)
}

/// A face on which the scaled polynomial is singular.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceWitness {
    /// Position in [`Polytope::faces`].
    pub face_index: usize,
    pub dim: usize,
    pub vertex_set: Vec<usize>,
    pub lattice_points: Vec<LatticeVector>,
    #[serde(skip)]
    pub point: Vec<C>,
}

/// Result of the principal A-determinant test.
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalDeterminant {
    pub vanishes: bool,
    /// The first singular face in order of increasing dimension.
    pub witness: Option<FaceWitness>,
    pub failed_paths: usize,
}

/// Whether `E_A(c) = 0`, i.e. some face polynomial (including `f_c` itself)
/// has a singular point on the torus. The scaling is aligned with
/// `design_matrix(p)`.
pub fn principal_a_determinant_vanishes(
    p: &Polytope,
    c: &Scaling,
    cfg: &TrackerConfig,
) -> Result<PrincipalDeterminant> {
    let a = design_matrix(p)?;
    if c.len() != a.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: c.len() });
    }
    let mut failed_paths = 0;
    for (face_index, face) in p.faces().iter().enumerate() {
        if face.lattice_points.len() == face.dim + 1 {
            continue;
        }
        let weights: Vec<C> = face
            .lattice_points
            .iter()
            .map(|q| a.index_of_original(q).map(|i| c.weights[i]).expect("face point in design matrix"))
            .collect();
        let res = has_toric_singularity(&face.lattice_points, &weights, cfg)?;
        failed_paths += res.failed_paths;
        if let Some(point) = res.witnesses.into_iter().next() {
            return Ok(PrincipalDeterminant {
                vanishes: true,
                witness: Some(FaceWitness {
                    face_index,
                    dim: face.dim,
                    vertex_set: face.vertex_set.clone(),
                    lattice_points: face.lattice_points.clone(),
                    point,
                }),
                failed_paths,
            });
        }
    }
    Ok(PrincipalDeterminant { vanishes: false, witness: None, failed_paths })
}
