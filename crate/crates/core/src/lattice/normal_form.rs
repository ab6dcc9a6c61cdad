//! Exact integer linear algebra: determinants, ranks, Hermite and Smith forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LatticeVector;

/// Integer matrix stored as a list of rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Row-style Hermite normal form. Returns the nonzero rows, which form an
/// echelon basis of the row lattice with positive pivots and reduced entries
/// above each pivot.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> IntMatrix {
    let mut a: IntMatrix = rows.to_vec();
    let m = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let mut found = false;
        loop {
            let piv = (r..m).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = piv else { break };
            found = true;
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    sub_row_multiple(&mut a, i, r, &q);
                    if !a[i][c].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                sub_row_multiple(&mut a, i, r, &q);
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

fn sub_row_multiple(a: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    let (t, s) = if target < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

/// Rank of an integer matrix.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    hermite_normal_form(rows).len()
}

/// Diagonal of the Smith normal form (the nonzero invariant factors, each
/// dividing the next).
pub fn smith_invariants(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: IntMatrix = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // Move the smallest nonzero entry of row t and column t to the pivot.
            let mut piv = (t, t);
            for i in t..m {
                if !a[i][t].is_zero() && a[i][t].abs() < a[piv.0][piv.1].abs() {
                    piv = (i, t);
                }
            }
            for j in t..n {
                if !a[t][j].is_zero() && a[t][j].abs() < a[piv.0][piv.1].abs() {
                    piv = (t, j);
                }
            }
            if piv.0 != t {
                a.swap(t, piv.0);
            }
            if piv.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, piv.1);
                }
            }
            let mut dirty = false;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    sub_row_multiple(&mut a, i, t, &q);
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut() {
                        let v = &row[t] * &q;
                        row[j] -= v;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, v) in a[t][t..n].iter_mut().zip(&row[t..n]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

/// Rows `p_i - p_0` for a point list.
pub fn difference_rows(points: &[LatticeVector]) -> IntMatrix {
    match points.split_first() {
        None => Vec::new(),
        Some((p0, rest)) => rest.iter().map(|p| (p - p0).0).collect(),
    }
}

/// Affine rank (dimension of the affine span) of a point set.
pub fn affine_rank(points: &[LatticeVector]) -> usize {
    rank(&difference_rows(points))
}

/// Index of the lattice generated by the differences `p_i - p_0` inside the
/// integer points of its own linear span. For full-dimensional point sets this
/// is the index in `Z^d`.
pub fn lattice_index(points: &[LatticeVector]) -> BigInt {
    smith_invariants(&difference_rows(points)).iter().product()
}

/// Primitive normal of the hyperplane through `d` points of `Z^d`, or `None`
/// when the points are affinely dependent. The sign is unspecified.
pub fn hyperplane_normal(points: &[&LatticeVector]) -> Option<LatticeVector> {
    let d = points[0].dim();
    debug_assert_eq!(points.len(), d);
    let rows: IntMatrix = points[1..].iter().map(|p| (*p - points[0]).0).collect();
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: IntMatrix = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let det = determinant(&minor);
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    let g = normal.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    Some(LatticeVector(normal.into_iter().map(|x| x / &g).collect()))
}

/// Coordinates of the points in a lattice basis of the lattice generated by
/// their differences. The result lives in `Z^k` with `k` the affine rank, and
/// is shifted so that each coordinate has minimum zero.
pub fn affine_coordinates(points: &[LatticeVector]) -> Vec<LatticeVector> {
    let basis = hermite_normal_form(&difference_rows(points));
    let k = basis.len();
    let pivots: Vec<usize> =
        basis.iter().map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero HNF row")).collect();
    let p0 = &points[0];
    let mut coords: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut rem = (p - p0).0;
            let mut y = vec![BigInt::zero(); k];
            for (i, row) in basis.iter().enumerate() {
                let c = pivots[i];
                let q = &rem[c] / &row[c];
                debug_assert!((&q * &row[c]) == rem[c], "point outside generated lattice");
                for (r, b) in rem.iter_mut().zip(row) {
                    *r -= &q * b;
                }
                y[i] = q;
            }
            debug_assert!(rem.iter().all(Zero::is_zero));
            y
        })
        .collect();
    for j in 0..k {
        let min = coords.iter().map(|c| c[j].clone()).min().unwrap_or_default();
        for c in coords.iter_mut() {
            c[j] -= &min;
        }
    }
    coords.into_iter().map(LatticeVector).collect()
}
