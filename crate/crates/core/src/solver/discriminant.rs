//! Closed-form discriminants for a few named models.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::score::{DesignMatrix, Scaling};

type C = Complex64;

/// Names accepted by [`closed_form_discriminant`].
pub const DISCRIMINANT_NAMES: [&str; 4] = ["ks-0", "ks-132", "ks-132-gamma0", "cross-2"];

fn canonical(name: &str) -> &str {
    match name {
        "P0" => "ks-0",
        "P132-full" => "ks-132",
        "P132-gamma0" => "ks-132-gamma0",
        "cross2" => "cross-2",
        other => other,
    }
}

/// The individual terms of a discriminant; their sum is the value and the sum
/// of their moduli is a natural scale for deciding vanishing.
fn terms(name: &str, a: &DesignMatrix, c: &Scaling) -> Result<Vec<C>> {
    if c.len() != a.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: c.len() });
    }
    let w = |p: &[i64]| -> Result<C> {
        a.index_of(&LatticeVector::from_i64(p))
            .map(|i| c.weights[i])
            .ok_or_else(|| Error::InvalidInput(format!("point {p:?} missing for {name}")))
    };
    Ok(match canonical(name) {
        "ks-0" => {
            let (c111, c211, c121, c112, c000) =
                (w(&[1, 1, 1])?, w(&[2, 1, 1])?, w(&[1, 2, 1])?, w(&[1, 1, 2])?, w(&[0, 0, 0])?);
            vec![c111.powu(4), -256.0 * c211 * c121 * c112 * c000]
        }
        "ks-132" => {
            let (c111, c211, c112) = (w(&[1, 1, 1])?, w(&[2, 1, 1])?, w(&[1, 1, 2])?);
            let (c010, c001, c121) = (w(&[0, 1, 0])?, w(&[0, 0, 1])?, w(&[1, 2, 1])?);
            let x = c111.powu(3);
            let y = c211 * c112 * c010;
            let z = c211 * c001 * c121;
            vec![x * x, 54.0 * x * y, 729.0 * y * y, 54.0 * x * z, -1458.0 * y * z, 729.0 * z * z]
        }
        "ks-132-gamma0" => {
            let (c112, c010, c001, c121) = (w(&[1, 1, 2])?, w(&[0, 1, 0])?, w(&[0, 0, 1])?, w(&[1, 2, 1])?);
            vec![c112 * c010, -c001 * c121]
        }
        "cross-2" => {
            let (c11, c21, c12, c01, c10) = (w(&[1, 1])?, w(&[2, 1])?, w(&[1, 2])?, w(&[0, 1])?, w(&[1, 0])?);
            vec![
                c11.powu(4) * c01 * c10,
                -8.0 * c11 * c11 * c21 * c01 * c01 * c10,
                16.0 * c21 * c21 * c01.powu(3) * c10,
                -8.0 * c11 * c11 * c12 * c01 * c10 * c10,
                -32.0 * c21 * c12 * c01 * c01 * c10 * c10,
                16.0 * c12 * c12 * c01 * c10.powu(3),
            ]
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

/// Evaluates a closed-form discriminant at a scaling aligned with `a`. The
/// aliases `P0`, `P132-full`, `P132-gamma0` and `cross2` are also accepted. Weights
/// are looked up by their points in `a`'s coordinates, so `a` must be the
/// design matrix of the matching builtin polytope.
pub fn closed_form_discriminant(name: &str, a: &DesignMatrix, c: &Scaling) -> Result<C> {
    Ok(terms(name, a, c)?.into_iter().sum())
}

/// Sum of the moduli of the discriminant's terms.
pub fn discriminant_scale(name: &str, a: &DesignMatrix, c: &Scaling) -> Result<f64> {
    Ok(terms(name, a, c)?.iter().map(|t| t.norm()).sum())
}
