use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{DataVector, DesignMatrix, Scaling};
use crate::error::{Error, Result};
use crate::poly::{monomial, Polynomial, PolynomialSystem, Term};

fn check_lengths(a: &DesignMatrix, c: &Scaling, u: Option<&DataVector>) -> Result<()> {
    if c.len() != a.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: c.len() });
    }
    if let Some(u) = u {
        if u.counts.len() != a.len() {
            return Err(Error::DimensionMismatch { expected: a.len(), got: u.counts.len() });
        }
    }
    Ok(())
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The score equations `A' ψ^c(s,θ) = A' u / u_+` in the variables
/// `(s, θ_1, …, θ_d)`, with denominators cleared:
/// `Σ c_i s θ^{a_i} - 1 = 0` and `u_+ Σ a_{ki} c_i s θ^{a_i} - (Au)_k = 0`.
pub fn score_system(a: &DesignMatrix, scaling: &Scaling, u: &DataVector) -> Result<PolynomialSystem> {
    check_lengths(a, scaling, Some(u))?;
    let d = a.dim();
    let nv = d + 1;
    let total = u.total() as f64;
    let au: Vec<f64> = u.sufficient_statistics(a).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let term = |i: usize, k: Complex64| {
        let mut e = vec![1u32];
        e.extend_from_slice(&a.exponents()[i]);
        Term { coeff: k * scaling.weights[i], exponents: e }
    };
    let mut eqs = Vec::with_capacity(nv);
    eqs.push(Polynomial::new(
        nv,
        (0..a.len()).map(|i| term(i, c(1.0))).chain([Term { coeff: c(-1.0), exponents: vec![0; nv] }]),
    ));
    for (k, &rhs) in au.iter().enumerate().take(d) {
        eqs.push(Polynomial::new(
            nv,
            (0..a.len())
                .map(|i| term(i, c(total * a.entry(k, i))))
                .chain([Term { coeff: c(-rhs), exponents: vec![0; nv] }]),
        ));
    }
    Ok(PolynomialSystem::new(nv, eqs))
}

/// The score equations with `s` eliminated:
/// `Σ_i c_i (u_+ a_{ki} - (Au)_k) θ^{a_i} = 0` for `k = 1..d`.
/// Torus solutions with `Σ c_i θ^{a_i} ≠ 0` correspond one to one with
/// solutions of [`score_system`] via `s = 1 / Σ c_i θ^{a_i}`.
pub fn reduced_score_system(a: &DesignMatrix, scaling: &Scaling, u: &DataVector) -> Result<PolynomialSystem> {
    check_lengths(a, scaling, Some(u))?;
    let d = a.dim();
    let total = u.total() as f64;
    let au: Vec<f64> = u.sufficient_statistics(a).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let eqs = (0..d)
        .map(|k| {
            Polynomial::new(
                d,
                (0..a.len()).map(|i| Term {
                    coeff: scaling.weights[i] * (total * a.entry(k, i) - au[k]),
                    exponents: a.exponents()[i].clone(),
                }),
            )
            .strip_monomial_factor()
        })
        .collect();
    Ok(PolynomialSystem::new(d, eqs))
}

/// The scaled toric polynomial `f_c(θ) = Σ c_i θ^{a_i}`.
pub fn toric_polynomial(a: &DesignMatrix, scaling: &Scaling) -> Result<Polynomial> {
    check_lengths(a, scaling, None)?;
    Ok(Polynomial::new(
        a.dim(),
        (0..a.len()).map(|i| Term { coeff: scaling.weights[i], exponents: a.exponents()[i].clone() }),
    ))
}

/// A point `(s, θ)` of the parametrization.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreSolution {
    pub s: Complex64,
    pub theta: Vec<Complex64>,
}

impl ScoreSolution {
    /// From a point `(s, θ_1, …, θ_d)` of the score system's variables.
    pub fn from_point(x: &[Complex64]) -> ScoreSolution {
        ScoreSolution { s: x[0], theta: x[1..].to_vec() }
    }

    pub fn to_point(&self) -> Vec<Complex64> {
        let mut v = vec![self.s];
        v.extend_from_slice(&self.theta);
        v
    }
}

/// The distribution `p_i = c_i s θ^{a_i}` at a solution.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    pub p: Vec<Complex64>,
    /// Whether every `p_i` is real and positive (up to `1e-8`).
    pub statistically_valid: bool,
}

pub fn solution_to_distribution(a: &DesignMatrix, scaling: &Scaling, sol: &ScoreSolution) -> Result<Distribution> {
    check_lengths(a, scaling, None)?;
    let p: Vec<Complex64> =
        (0..a.len()).map(|i| scaling.weights[i] * sol.s * monomial(&sol.theta, &a.exponents()[i])).collect();
    let statistically_valid = p.iter().all(|x| x.re > 0.0 && x.im.abs() <= 1e-8 * x.norm().max(1.0));
    Ok(Distribution { p, statistically_valid })
}

/// Deviation of a solution from the sufficient statistics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BirchResidual {
    /// `max_k |(A p)_k - (A u)_k / u_+|`.
    pub max_residual: f64,
    /// `|Σ p_i - 1|`.
    pub sum_deviation: f64,
}

/// Birch's theorem says the MLE satisfies `A' p = A' u / u_+`; this measures
/// how far a computed solution is from it.
pub fn birch_residual(
    a: &DesignMatrix,
    scaling: &Scaling,
    sol: &ScoreSolution,
    u: &DataVector,
) -> Result<BirchResidual> {
    check_lengths(a, scaling, Some(u))?;
    let dist = solution_to_distribution(a, scaling, sol)?;
    let total = u.total() as f64;
    let au = u.sufficient_statistics(a);
    let sum: Complex64 = dist.p.iter().sum();
    let mut max_residual: f64 = 0.0;
    for (k, auk) in au.iter().enumerate() {
        let ap: Complex64 = dist.p.iter().enumerate().map(|(i, p)| p * a.entry(k, i)).sum();
        let r = (ap - auk.to_f64().unwrap_or(f64::NAN) / total).norm();
        max_residual = max_residual.max(r);
    }
    Ok(BirchResidual { max_residual, sum_deviation: (sum - 1.0).norm() })
}
