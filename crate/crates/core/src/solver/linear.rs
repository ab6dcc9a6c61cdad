//! Small dense complex linear algebra for the tracking inner loop.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Solves `a x = b` in place by LU with partial pivoting. `a` is row-major
/// `n × n` and is destroyed; the solution overwrites `b`. Returns `false`
/// for an exactly singular matrix.
pub(crate) fn lu_solve(a: &mut [Complex64], b: &mut [Complex64], n: usize) -> bool {
    for k in 0..n {
        let mut p = k;
        let mut best = a[k * n + k].norm_sqr();
        for i in k + 1..n {
            let v = a[i * n + k].norm_sqr();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == 0.0 || !best.is_finite() {
            return false;
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            b.swap(k, p);
        }
        let inv = 1.0 / a[k * n + k];
        for i in k + 1..n {
            let f = a[i * n + k] * inv;
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for j in k + 1..n {
                let v = a[k * n + j];
                a[i * n + j] -= f * v;
            }
            let bk = b[k];
            b[i] -= f * bk;
        }
    }
    for k in (0..n).rev() {
        let mut s = b[k];
        for j in k + 1..n {
            s -= a[k * n + j] * b[j];
        }
        b[k] = s / a[k * n + k];
    }
    true
}

/// Singular values of a row-major `rows × cols` matrix, descending.
pub(crate) fn singular_values(a: &[Complex64], rows: usize, cols: usize) -> Vec<f64> {
    if rows == 0 || cols == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_row_slice(rows, cols, a);
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

/// Least-squares solution of `a x = b` with singular values below
/// `rcond · σ_max` discarded.
pub(crate) fn least_squares(
    a: &[Complex64],
    b: &[Complex64],
    rows: usize,
    cols: usize,
    rcond: f64,
) -> Option<Vec<Complex64>> {
    let m = DMatrix::from_row_slice(rows, cols, a);
    let svd = m.svd(true, true);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let rhs = nalgebra::DVector::from_column_slice(b);
    let x = svd.solve(&rhs, rcond * smax).ok()?;
    Some(x.iter().copied().collect())
}

pub(crate) fn norm_inf(x: &[Complex64]) -> f64 {
    x.iter().map(|v| v.norm()).fold(0.0, f64::max)
}
