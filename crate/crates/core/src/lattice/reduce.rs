//! Unimodular changes of coordinates that lower the total degree of a point
//! configuration.

use super::LatticeVector;

/// A unimodular map `x ↦ U x` together with the images of the input points,
/// translated so that every coordinate has minimum zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReduction {
    /// Rows of `U`.
    pub matrix: Vec<Vec<i64>>,
    pub points: Vec<Vec<i64>>,
    /// `max_i Σ_j` of the translated image coordinates.
    pub total_degree: i64,
}

fn total_degree(pts: &[Vec<i64>]) -> i64 {
    let d = pts.first().map_or(0, Vec::len);
    let m: Vec<i64> = (0..d).map(|j| pts.iter().map(|p| p[j]).min().unwrap_or(0)).collect();
    pts.iter().map(|p| p.iter().zip(&m).map(|(a, b)| a - b).sum::<i64>()).max().unwrap_or(0)
}

fn apply_row_op(pts: &mut [Vec<i64>], j: usize, k: usize, s: i64) -> bool {
    for p in pts.iter_mut() {
        let v = if j == k { p[j].checked_neg() } else { p[k].checked_mul(s).and_then(|x| p[j].checked_add(x)) };
        match v {
            Some(v) => p[j] = v,
            None => return false,
        }
    }
    true
}

/// Greedy descent over elementary row operations (adding `±` one coordinate
/// to another, negating a coordinate) minimizing the total degree. Returns
/// `None` when coordinates do not fit in `i64`.
pub fn reduce_total_degree(points: &[LatticeVector]) -> Option<DegreeReduction> {
    let mut pts: Vec<Vec<i64>> = points.iter().map(LatticeVector::to_i64).collect::<Option<_>>()?;
    let d = pts.first().map_or(0, Vec::len);
    // Rows of `v` transform like the points, so `v` accumulates `U^T`.
    let mut v: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    loop {
        let cur = total_degree(&pts);
        let mut best = (cur, None);
        for j in 0..d {
            for k in 0..d {
                for s in if j == k { &[-1][..] } else { &[-1, 1][..] } {
                    let mut q = pts.clone();
                    if apply_row_op(&mut q, j, k, *s) {
                        let v = total_degree(&q);
                        if v < best.0 {
                            best = (v, Some((j, k, *s)));
                        }
                    }
                }
            }
        }
        let Some((j, k, s)) = best.1 else { break };
        apply_row_op(&mut pts, j, k, s);
        apply_row_op(&mut v, j, k, s);
    }
    let total = total_degree(&pts);
    let m: Vec<i64> = (0..d).map(|j| pts.iter().map(|p| p[j]).min().unwrap_or(0)).collect();
    for p in pts.iter_mut() {
        for (x, mj) in p.iter_mut().zip(&m) {
            *x -= mj;
        }
    }
    let matrix = (0..d).map(|i| (0..d).map(|j| v[j][i]).collect()).collect();
    Some(DegreeReduction { matrix, points: pts, total_degree: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::normal_form::determinant;
    use num_bigint::BigInt;
    use num_traits::Signed;

    #[test]
    fn skewed_segment_becomes_axis_aligned() {
        let pts: Vec<LatticeVector> = (0..4).map(|t| LatticeVector::from_i64(&[t, 3 * t])).collect();
        let r = reduce_total_degree(&pts).unwrap();
        assert_eq!(r.total_degree, 3);
        let det =
            determinant(&r.matrix.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect::<Vec<_>>());
        assert!(det.abs() == BigInt::from(1));
        // Images are U·p up to the common translation.
        let image: Vec<i64> = r.matrix.iter().map(|row| row[0] * 3 + row[1] * 9).collect();
        let origin: Vec<i64> = vec![0, 0];
        let diff: Vec<i64> = image.iter().zip(&origin).map(|(a, b)| a - b).collect();
        let expected: Vec<i64> = r.points[3].iter().zip(&r.points[0]).map(|(a, b)| a - b).collect();
        assert_eq!(diff, expected);
    }
}
