use std::collections::BTreeMap;

use mldeg_core::builders::*;
use mldeg_core::catalog::builtin;
use mldeg_core::poly::{Polynomial, PolynomialSystem, Term};
use mldeg_core::score::{design_matrix, Scaling};
use mldeg_core::solver::*;
use mldeg_core::{Error, LatticeVector};
use num_complex::Complex64 as C;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(x: f64) -> C {
    C::new(x, 0.0)
}

fn term(coeff: f64, exponents: &[u32]) -> Term {
    Term { coeff: r(coeff), exponents: exponents.to_vec() }
}

fn points(v: &[&[i64]]) -> Vec<LatticeVector> {
    v.iter().map(|p| LatticeVector::from_i64(p)).collect()
}

/// Product of affine forms `Σ w_j x_j + w_n`, expanded densely.
fn product_of_linear(n: usize, forms: &[Vec<C>]) -> Polynomial {
    let mut acc: BTreeMap<Vec<u32>, C> = BTreeMap::from([(vec![0; n], r(1.0))]);
    for w in forms {
        let mut next = BTreeMap::new();
        for (e, c) in &acc {
            for j in 0..=n {
                let mut e2 = e.clone();
                if j < n {
                    e2[j] += 1;
                }
                *next.entry(e2).or_insert(r(0.0)) += c * w[j];
            }
        }
        acc = next;
    }
    Polynomial::new(n, acc.into_iter().map(|(exponents, coeff)| Term { coeff, exponents }))
}

fn random_c<R: Rng>(rng: &mut R) -> C {
    C::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

#[test]
fn dense_quadrics_have_four_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let eqs = (0..2)
        .map(|_| {
            let monos: [[u32; 2]; 6] = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]];
            Polynomial::new(2, monos.iter().map(|e| Term { coeff: random_c(&mut rng), exponents: e.to_vec() }))
        })
        .collect();
    let sys = PolynomialSystem::new(2, eqs);
    let rep = solve_total_degree(&sys, &TrackerConfig::default()).unwrap();
    assert_eq!(rep.paths, 4);
    assert_eq!(rep.solutions.len(), 4);
    assert_eq!(rep.failed_paths, 0);
    for s in &rep.solutions {
        assert!(sys.relative_residual(&s.point) < 1e-10);
    }
}

#[test]
fn planted_roots_are_recovered() {
    let cfg = TrackerConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for trial in 0..50 {
        let n = 1 + trial % 3;
        let d = 1 + (trial / 3) % 3;
        // Roots of a decoupled system in y, moved by x = M y + v.
        let roots: Vec<Vec<C>> = (0..n)
            .map(|_| loop {
                let rs: Vec<C> = (0..d).map(|_| random_c(&mut rng) * 2.0).collect();
                let sep =
                    (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).all(|(i, j)| (rs[i] - rs[j]).norm() > 0.3);
                if sep {
                    break rs;
                }
            })
            .collect();
        let m: Vec<Vec<C>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { r(1.0) + random_c(&mut rng) * 0.3 } else { random_c(&mut rng) * 0.3 })
                    .collect()
            })
            .collect();
        let v: Vec<C> = (0..n).map(|_| random_c(&mut rng)).collect();
        let minv = invert(&m);
        // y = M⁻¹ (x - v), so y_i - r = Σ_j Minv_ij x_j - (Minv v)_i - r.
        let eqs = (0..n)
            .map(|i| {
                let offset: C = (0..n).map(|j| minv[i][j] * v[j]).sum();
                let forms: Vec<Vec<C>> = roots[i]
                    .iter()
                    .map(|&root| {
                        let mut w = minv[i].clone();
                        w.push(-offset - root);
                        w
                    })
                    .collect();
                product_of_linear(n, &forms)
            })
            .collect();
        let sys = PolynomialSystem::new(n, eqs);
        let rep = solve_total_degree(&sys, &TrackerConfig { seed: trial as u64, ..cfg.clone() }).unwrap();
        let want = d.pow(n as u32);
        assert_eq!(rep.solutions.len(), want, "trial {trial}");
        for idx in 0..want {
            let y: Vec<C> = (0..n).map(|i| roots[i][(idx / d.pow(i as u32)) % d]).collect();
            let x: Vec<C> = (0..n).map(|i| (0..n).map(|j| m[i][j] * y[j]).sum::<C>() + v[i]).collect();
            let hit = rep.solutions.iter().any(|s| s.point.iter().zip(&x).all(|(a, b)| (a - b).norm() < cfg.dedup_tol));
            assert!(hit, "trial {trial}: planted root {idx} missing");
        }
    }
}

fn invert(m: &[Vec<C>]) -> Vec<Vec<C>> {
    let n = m.len();
    let mut a: Vec<Vec<C>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.extend((0..n).map(|j| r(f64::from(u8::from(i == j)))));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())).unwrap();
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for row in 0..n {
            if row != col {
                let f = a[row][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[row].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[test]
fn newton_refinement() {
    let cfg = TrackerConfig::default();
    // x² + y² - 5, xy - 2 with root (1, 2).
    let sys = PolynomialSystem::new(
        2,
        vec![
            Polynomial::new(2, [term(1.0, &[2, 0]), term(1.0, &[0, 2]), term(-5.0, &[0, 0])]),
            Polynomial::new(2, [term(1.0, &[1, 1]), term(-2.0, &[0, 0])]),
        ],
    );
    let exact = newton_refine(&sys, &[r(1.0), r(2.0)], &cfg).unwrap();
    assert_eq!(exact.status, SolutionStatus::NonsingularTorus);
    assert!((exact.point[0] - r(1.0)).norm() < 1e-14 && (exact.point[1] - r(2.0)).norm() < 1e-14);
    let near = newton_refine(&sys, &[r(1.0001), r(1.9999)], &cfg).unwrap();
    assert!((near.point[0] - r(1.0)).norm() < 1e-12 && (near.point[1] - r(2.0)).norm() < 1e-12);
    assert!(near.residual < 1e-12);
    let double = PolynomialSystem::new(
        2,
        vec![Polynomial::new(2, [term(1.0, &[2, 0])]), Polynomial::new(2, [term(1.0, &[0, 2])])],
    );
    let sing = newton_refine(&double, &[r(1e-3), r(-1e-3)], &cfg).unwrap();
    assert_eq!(sing.status, SolutionStatus::Singular);
    assert!(matches!(newton_refine(&sys, &[r(1.0)], &cfg), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn path_cap_is_enforced() {
    let sys = PolynomialSystem::new(
        2,
        vec![
            Polynomial::new(2, [term(1.0, &[10, 0]), term(-1.0, &[0, 0])]),
            Polynomial::new(2, [term(1.0, &[0, 10]), term(-1.0, &[0, 0])]),
        ],
    );
    let cfg = TrackerConfig { max_paths: 99, ..TrackerConfig::default() };
    assert!(matches!(solve_total_degree(&sys, &cfg), Err(Error::TooManyPaths { bezout: 100, cap: 99 })));
    let rep = solve_total_degree(&sys, &TrackerConfig::default()).unwrap();
    assert_eq!(rep.solutions.len(), 100);
}

#[test]
fn solving_is_deterministic() {
    let p = reflexive_polygon("P6b").unwrap();
    let a = design_matrix(&p).unwrap();
    let c = Scaling::standard(a.len());
    let cfg = TrackerConfig::default();
    let x = ml_degree(&a, &c, &cfg).unwrap();
    let y = ml_degree(&a, &c, &TrackerConfig { parallel: false, ..cfg.clone() }).unwrap();
    assert_eq!(x.per_seed_counts, y.per_seed_counts);
    for (u, v) in x.runs.iter().zip(&y.runs) {
        assert_eq!(u.data, v.data);
        for (s, t) in u.solutions.iter().zip(&v.solutions) {
            assert_eq!(s.theta, t.theta);
        }
    }
    let other = ml_degree(&a, &c, &TrackerConfig { seed: 1, ..cfg }).unwrap();
    assert_ne!(other.runs[0].data, x.runs[0].data);
    assert_eq!(other.ml_degree, x.ml_degree);
}

#[test]
fn face_polynomials() {
    let ones = |n| vec![r(1.0); n];
    let top = face_polynomial(&points(&[&[0, 2], &[1, 2], &[2, 2]]), &ones(3)).unwrap();
    assert_eq!(top, Polynomial::new(1, [term(1.0, &[0]), term(1.0, &[1]), term(1.0, &[2])]));
    let p8a = reflexive_polygon("P8a").unwrap();
    let pts = p8a.lattice_points();
    let f = face_polynomial(pts, &ones(pts.len())).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let (x, y) = (random_c(&mut rng), random_c(&mut rng));
        let want = (1.0 + x + x * x) * (1.0 + y + y * y);
        assert!((f.eval(&[x, y]) - want).norm() < 1e-12);
    }
    let vertex = face_polynomial(&points(&[&[3, -1]]), &[r(2.5)]).unwrap();
    assert_eq!(vertex.terms.len(), 1);
    assert_eq!(vertex.eval(&vec![r(0.7); vertex.nvars]), r(2.5));
    assert!(face_polynomial(pts, &ones(2)).is_err());
}

#[test]
fn toric_singularities() {
    let cfg = TrackerConfig::default();
    let p8a = reflexive_polygon("P8a").unwrap();
    let pts = p8a.lattice_points();
    let res = has_toric_singularity(pts, &vec![r(1.0); pts.len()], &cfg).unwrap();
    // (1 + x + x²)(1 + y + y²) is singular where both factors vanish.
    assert_eq!(res.witnesses.len(), 4);
    let omega = C::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    for w in &res.witnesses {
        for t in w {
            assert!((t - omega).norm() < 1e-8 || (t - omega.conj()).norm() < 1e-8);
        }
    }
    let cross2 = cross(2).unwrap();
    for face in cross2.faces().iter().filter(|f| f.dim == 1) {
        let n = face.lattice_points.len();
        assert!(!has_toric_singularity(&face.lattice_points, &vec![r(1.0); n], &cfg).unwrap().is_singular());
    }
    let whole = cross2.lattice_points();
    let a = design_matrix(&cross2).unwrap();
    let weights = |center: f64| -> Vec<C> {
        whole.iter().map(|q| if q.0.iter().all(|x| x == &0.into()) { r(center) } else { r(1.0) }).collect()
    };
    assert_eq!(a.len(), 5);
    assert!(!has_toric_singularity(whole, &weights(1.0), &cfg).unwrap().is_singular());
    assert!(has_toric_singularity(whole, &weights(4.0), &cfg).unwrap().is_singular());
    let gamma0 = points(&[&[1, 1, 2], &[0, 1, 0], &[0, 0, 1], &[1, 2, 1]]);
    assert!(has_toric_singularity(&gamma0, &[r(1.0); 4], &cfg).unwrap().is_singular());
    assert!(!has_toric_singularity(&gamma0, &[r(1.0), r(2.0), r(1.0), r(1.0)], &cfg).unwrap().is_singular());
}

#[test]
fn principal_determinants() {
    let cfg = TrackerConfig::default();
    let p6a = reflexive_polygon("P6a").unwrap();
    let pd = principal_a_determinant_vanishes(&p6a, &Scaling::standard(7), &cfg).unwrap();
    assert!(!pd.vanishes && pd.witness.is_none());
    let cube3 = cube(3).unwrap();
    let pd = principal_a_determinant_vanishes(&cube3, &Scaling::standard(27), &cfg).unwrap();
    assert!(pd.vanishes);
    let w = pd.witness.unwrap();
    assert!(w.dim == 1 || w.dim == 2);
    let cross2 = cross(2).unwrap();
    let a = design_matrix(&cross2).unwrap();
    let center = a.index_of_original(&LatticeVector::zero(2)).unwrap();
    let mut c = vec![r(1.0); 5];
    c[center] = r(4.0);
    let pd = principal_a_determinant_vanishes(&cross2, &Scaling::new(c).unwrap(), &cfg).unwrap();
    assert!(pd.vanishes);
    assert_eq!(pd.witness.unwrap().dim, 2);
    assert!(principal_a_determinant_vanishes(&cross2, &Scaling::standard(4), &cfg).is_err());
}

#[test]
fn closed_form_discriminants() {
    let ks0 = builtin("ks-0").unwrap();
    let a0 = design_matrix(&ks0).unwrap();
    let std0 = Scaling::standard(a0.len());
    assert_eq!(closed_form_discriminant("ks-0", &a0, &std0).unwrap(), r(-255.0));
    assert_eq!(closed_form_discriminant("P0", &a0, &std0).unwrap(), r(-255.0));

    let mut c = vec![r(1.0); a0.len()];
    c[a0.index_of(&LatticeVector::from_i64(&[1, 1, 1])).unwrap()] = r(4.0);
    let c = Scaling::new(c).unwrap();
    assert_eq!(closed_form_discriminant("ks-0", &a0, &c).unwrap(), r(0.0));

    let ks132 = builtin("ks-132").unwrap();
    let a = design_matrix(&ks132).unwrap();
    let std132 = Scaling::standard(a.len());
    assert_eq!(closed_form_discriminant("P132-gamma0", &a, &std132).unwrap(), r(0.0));
    assert_ne!(closed_form_discriminant("ks-132", &a, &std132).unwrap(), r(0.0));
    assert!(discriminant_scale("ks-132", &a, &std132).unwrap() > 0.0);
    assert!(matches!(closed_form_discriminant("nope", &a, &std132), Err(Error::UnknownName(_))));
}
