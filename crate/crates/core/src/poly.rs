//! Sparse multivariate polynomials with complex coefficients.

use num_complex::Complex64;

/// One term `coeff · x^exponents`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub exponents: Vec<u32>,
}

/// A polynomial in `nvars` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    pub nvars: usize,
    pub terms: Vec<Term>,
}

impl Polynomial {
    /// Builds a polynomial, merging equal monomials and dropping zeros.
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Polynomial {
        let mut merged: Vec<Term> = Vec::new();
        let mut all: Vec<Term> = terms.into_iter().collect();
        all.sort_by(|a, b| a.exponents.cmp(&b.exponents));
        for t in all {
            debug_assert_eq!(t.exponents.len(), nvars);
            match merged.last_mut() {
                Some(last) if last.exponents == t.exponents => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != Complex64::new(0.0, 0.0));
        Polynomial { nvars, terms: merged }
    }

    pub fn constant(nvars: usize, c: Complex64) -> Polynomial {
        Polynomial::new(nvars, [Term { coeff: c, exponents: vec![0; nvars] }])
    }

    /// Total degree (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.exponents.iter().sum()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        self.terms.iter().map(|t| t.coeff * monomial(x, &t.exponents)).sum()
    }

    /// `Σ |c_i| |x^{a_i}|`, the natural scale for relative residuals.
    pub fn eval_abs(&self, x: &[Complex64]) -> f64 {
        self.terms.iter().map(|t| t.coeff.norm() * monomial(x, &t.exponents).norm()).sum()
    }

    pub fn derivative(&self, j: usize) -> Polynomial {
        Polynomial::new(
            self.nvars,
            self.terms.iter().filter(|t| t.exponents[j] > 0).map(|t| {
                let mut e = t.exponents.clone();
                e[j] -= 1;
                Term { coeff: t.coeff * t.exponents[j] as f64, exponents: e }
            }),
        )
    }

    /// Divides by the largest monomial dividing every term. Zeros on the
    /// torus are unchanged.
    pub fn strip_monomial_factor(&self) -> Polynomial {
        if self.terms.is_empty() {
            return self.clone();
        }
        let min: Vec<u32> = (0..self.nvars).map(|j| self.terms.iter().map(|t| t.exponents[j]).min().unwrap()).collect();
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff, exponents: t.exponents.iter().zip(&min).map(|(a, b)| a - b).collect() })
                .collect(),
        }
    }

    /// Multiplies every coefficient by `k`.
    pub fn scaled(&self, k: Complex64) -> Polynomial {
        Polynomial::new(
            self.nvars,
            self.terms.iter().map(|t| Term { coeff: t.coeff * k, exponents: t.exponents.clone() }),
        )
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.norm()).fold(0.0, f64::max)
    }
}

/// `x^e`.
pub fn monomial(x: &[Complex64], e: &[u32]) -> Complex64 {
    let mut m = Complex64::new(1.0, 0.0);
    for (xi, &ei) in x.iter().zip(e) {
        if ei > 0 {
            m *= xi.powu(ei);
        }
    }
    m
}

/// A list of polynomials in a common set of variables.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialSystem {
    pub num_vars: usize,
    pub equations: Vec<Polynomial>,
}

impl PolynomialSystem {
    pub fn new(num_vars: usize, equations: Vec<Polynomial>) -> PolynomialSystem {
        PolynomialSystem { num_vars, equations }
    }

    pub fn eval(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.equations.iter().map(|p| p.eval(x)).collect()
    }

    /// Row-major Jacobian.
    pub fn jacobian(&self, x: &[Complex64]) -> Vec<Vec<Complex64>> {
        self.equations.iter().map(|p| (0..self.num_vars).map(|j| p.derivative(j).eval(x)).collect()).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.equations.iter().map(Polynomial::degree).collect()
    }

    /// Product of total degrees, the number of total-degree start paths.
    pub fn bezout_number(&self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }

    /// Max over equations of `|f_k(x)| / max(Σ|c||x^a|, max|c|)`.
    pub fn relative_residual(&self, x: &[Complex64]) -> f64 {
        self.equations
            .iter()
            .map(|p| {
                let scale = p.eval_abs(x).max(p.max_coeff_norm());
                if scale == 0.0 {
                    0.0
                } else {
                    p.eval(x).norm() / scale
                }
            })
            .fold(0.0, f64::max)
    }
}
