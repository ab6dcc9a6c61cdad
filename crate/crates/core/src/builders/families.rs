//! Cubes, cross-polytopes and the reflexive simplex families.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, Polytope};

/// The cube `[-1,1]^d`.
pub fn cube(d: usize) -> Result<Polytope> {
    check_range("cube", d, 1, 16)?;
    let pts = (0..1usize << d).map(|mask| {
        LatticeVector::from_i64(&(0..d).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect::<Vec<_>>())
    });
    Polytope::from_points(pts)
}

/// The cross-polytope `conv(±e_i)`.
pub fn cross(d: usize) -> Result<Polytope> {
    check_range("cross", d, 1, 16)?;
    Polytope::from_points((0..d).flat_map(|i| [LatticeVector::unit(d, i, 1), LatticeVector::unit(d, i, -1)]))
}

/// Sylvester's sequence `t_1 = 2`, `t_{i+1} = t_1 ⋯ t_i + 1`.
pub fn sylvester(i: usize) -> Result<BigInt> {
    check_range("sylvester", i, 1, 6)?;
    let mut t = BigInt::from(2);
    for _ in 1..i {
        t = &t * &t - &t + 1;
    }
    Ok(t)
}

fn check_range(family: &str, d: usize, min: usize, max: usize) -> Result<()> {
    if d < min || d > max {
        return Err(Error::DimensionOutOfRange { family: family.to_string(), got: d, min, max });
    }
    Ok(())
}

/// The simplex `Q_d` with vertices `q_0 = (1,…,1)` and, for `1 ≤ i ≤ d`,
/// `q_i` having zeros in positions `< i`, the entry `i-1-d` in position `i`
/// and ones after it. So `q_1 = (-d,1,…,1)` and `q_d = -e_d`.
pub fn simplex_q(d: usize) -> Result<Polytope> {
    check_range("Q", d, 2, 5)?;
    let di = d as i64;
    let mut verts = vec![vec![1; d]];
    for i in 1..=d {
        let mut v = vec![0i64; d];
        v[i - 1] = -(di - (i as i64 - 1));
        for x in v.iter_mut().skip(i) {
            *x = 1;
        }
        verts.push(v);
    }
    Polytope::from_i64_points(&verts)
}

/// `R_d = conv(0, t_1 e_1, …, t_d e_d)` with Sylvester numbers `t_i`.
pub fn simplex_r(d: usize) -> Result<Polytope> {
    check_range("R", d, 2, 5)?;
    let mut pts = vec![LatticeVector::zero(d)];
    for i in 0..d {
        let mut v = LatticeVector::zero(d);
        v.0[i] = sylvester(i + 1)?;
        pts.push(v);
    }
    Polytope::from_points(pts)
}

/// `S_d = conv(0, t_1 e_1, …, t_{d-1} e_{d-1}, 2(t_d - 1) e_d)`.
pub fn simplex_s(d: usize) -> Result<Polytope> {
    check_range("S", d, 2, 5)?;
    let mut pts = vec![LatticeVector::zero(d)];
    for i in 0..d {
        let mut v = LatticeVector::zero(d);
        let t = sylvester(i + 1)?;
        v.0[i] = if i + 1 == d { 2 * (t - 1) } else { t };
        pts.push(v);
    }
    Polytope::from_points(pts)
}

/// The simplex `T_d` with `v_0 = -3e_1 - 2Σ_{i≥2} e_i`, `v_1 = e_1`,
/// `v_2 = e_1 + 2e_2`, `v_3 = e_1 + 2e_3` and `v_i = e_1 + 2 t_{i-3} e_i`.
pub fn simplex_t(d: usize) -> Result<Polytope> {
    check_range("T", d, 3, 5)?;
    let mut v0 = vec![-2i64; d];
    v0[0] = -3;
    let mut pts = vec![LatticeVector::from_i64(&v0), LatticeVector::unit(d, 0, 1)];
    for i in 2..=d {
        let mut v = LatticeVector::unit(d, 0, 1);
        v.0[i - 1] = if i <= 3 { BigInt::from(2) } else { 2 * sylvester(i - 3)? };
        pts.push(v);
    }
    Polytope::from_points(pts)
}
