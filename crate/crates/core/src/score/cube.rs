//! Closed-form critical points for the cube model.

use num_complex::Complex64;

use super::{design_matrix, DesignMatrix, Scaling};
use crate::builders::cube;
use crate::error::{Error, Result};

/// All `2^d` critical points of the unscaled cube model, in the cube's
/// centered coordinates. Each `θ_k` is a root of
/// `(b_k - 1) θ^2 + b_k θ + (b_k + 1) = 0`, where `b` is the vector of
/// normalized sufficient statistics for the centered design matrix.
pub fn cube_mle_closed_form(b: &[f64]) -> Result<Vec<Vec<Complex64>>> {
    let mut roots = Vec::with_capacity(b.len());
    for (k, &bk) in b.iter().enumerate() {
        if bk == 1.0 {
            return Err(Error::DegenerateData(format!("b_{} = 1", k + 1)));
        }
        let disc = 4.0 - 3.0 * bk * bk;
        if disc == 0.0 {
            return Err(Error::DegenerateData(format!("double root for b_{}", k + 1)));
        }
        let sq = Complex64::new(disc, 0.0).sqrt();
        let den = 2.0 * (bk - 1.0);
        roots.push([(sq - bk) / den, (-sq - bk) / den]);
    }
    let d = b.len();
    Ok((0..1usize << d).map(|mask| (0..d).map(|k| roots[k][mask >> (d - 1 - k) & 1]).collect()).collect())
}

/// Per-coordinate weights `(c_{k,0}, c_{k,1})` determine the scaling with
/// `c_{k,-1} = c_{k,0}^2 / (4 c_{k,1})` and `c_i = Π_k c_{k, a_{ki}}`. Returns
/// it aligned with the cube's design matrix.
pub fn cube_ml1_scaling(params: &[(Complex64, Complex64)]) -> Result<(DesignMatrix, Scaling)> {
    for (k, (c0, c1)) in params.iter().enumerate() {
        if c0.norm() == 0.0 || c1.norm() == 0.0 {
            return Err(Error::ZeroParameter(format!("coordinate {}", k + 1)));
        }
    }
    let a = design_matrix(&cube(params.len())?)?;
    let weights = a
        .exponents()
        .iter()
        .map(|e| {
            params
                .iter()
                .zip(e)
                .map(|(&(c0, c1), &x)| match x {
                    0 => c0 * c0 / (4.0 * c1),
                    1 => c0,
                    _ => c1,
                })
                .product()
        })
        .collect();
    Ok((a, Scaling::new(weights)?))
}

/// The unique critical point `θ_k = (b_k + 1) c_{k,0} / (2 c_{k,1} (1 - b_k))`
/// of the cube model under [`cube_ml1_scaling`], in centered coordinates.
pub fn cube_ml1_mle(b: &[f64], params: &[(Complex64, Complex64)]) -> Result<Vec<Complex64>> {
    if b.len() != params.len() {
        return Err(Error::DimensionMismatch { expected: params.len(), got: b.len() });
    }
    b.iter()
        .zip(params)
        .enumerate()
        .map(|(k, (&bk, &(c0, c1)))| {
            if bk == 1.0 {
                return Err(Error::DegenerateData(format!("b_{} = 1", k + 1)));
            }
            Ok((bk + 1.0) * c0 / (2.0 * c1 * (1.0 - bk)))
        })
        .collect()
}
