use std::collections::BTreeSet;

use mldeg_core::builders::*;
use mldeg_core::{Error, LatticeVector, Polytope};
use num_bigint::BigInt;

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn vertices(p: &Polytope) -> Vec<Vec<i64>> {
    p.vertices().iter().map(|v| v.to_i64().unwrap()).collect()
}

/// Searches for an affine unimodular map sending `p` onto `q`: a basis of
/// `p`'s vertex differences is sent to every ordered choice of `q` vertices.
fn equivalent(p: &Polytope, q: &Polytope) -> bool {
    let (pv, qv) = (vertices(p), vertices(q));
    let d = p.dim();
    if q.dim() != d || pv.len() != qv.len() {
        return false;
    }
    let target: BTreeSet<Vec<i64>> = qv.iter().cloned().collect();
    // Affinely independent vertices of p, greedily.
    let mut basis = vec![0usize];
    for i in 1..pv.len() {
        if basis.len() == d + 1 {
            break;
        }
        let mut trial = basis.clone();
        trial.push(i);
        let rows: Vec<Vec<BigInt>> = trial[1..]
            .iter()
            .map(|&k| pv[k].iter().zip(&pv[trial[0]]).map(|(a, b)| BigInt::from(a - b)).collect())
            .collect();
        if mldeg_core::lattice::normal_form::rank(&rows) == trial.len() - 1 {
            basis = trial;
        }
    }
    let diff = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    // Columns v_k - v_0 as a d×d matrix and its adjugate.
    let v: Vec<Vec<i64>> = (0..d).map(|r| (1..=d).map(|c| diff(&pv[basis[c]], &pv[basis[0]])[r]).collect()).collect();
    let dv = det(&v);
    let adj: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = v
                        .iter()
                        .enumerate()
                        .filter(|&(r, _)| r != j)
                        .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
                        .collect();
                    if (i + j) % 2 == 0 {
                        det(&minor)
                    } else {
                        -det(&minor)
                    }
                })
                .collect()
        })
        .collect();
    let n = qv.len();
    let mut idx = vec![0usize; d + 1];
    loop {
        let distinct = idx.iter().collect::<BTreeSet<_>>().len() == d + 1;
        if distinct {
            let w: Vec<Vec<i64>> =
                (0..d).map(|r| (1..=d).map(|c| diff(&qv[idx[c]], &qv[idx[0]])[r]).collect()).collect();
            let wa: Vec<Vec<i64>> =
                (0..d).map(|r| (0..d).map(|c| (0..d).map(|k| w[r][k] * adj[k][c]).sum()).collect()).collect();
            if wa.iter().flatten().all(|x| x % dv == 0) {
                let m: Vec<Vec<i64>> = wa.iter().map(|r| r.iter().map(|x| x / dv).collect()).collect();
                if det(&m).abs() == 1 {
                    let image: BTreeSet<Vec<i64>> = pv
                        .iter()
                        .map(|x| {
                            let y = diff(x, &pv[basis[0]]);
                            (0..d).map(|r| (0..d).map(|k| m[r][k] * y[k]).sum::<i64>() + qv[idx[0]][r]).collect()
                        })
                        .collect();
                    if image == target {
                        return true;
                    }
                }
            }
        }
        // Next tuple in 0..n^(d+1).
        let mut k = 0;
        while k <= d {
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k > d {
            return false;
        }
    }
}

fn vol(p: &Polytope) -> u64 {
    p.normalized_volume().try_into().unwrap()
}

fn polygon(name: &str) -> Polytope {
    reflexive_polygon(name).unwrap()
}

#[test]
fn equivalence_oracle_distinguishes_polygons() {
    assert!(equivalent(
        &polygon("P6a"),
        &polygon("P6a").transform(&[vec![1.into(), 1.into()], vec![0.into(), 1.into()]]).unwrap()
    ));
    assert!(!equivalent(&polygon("P6a"), &polygon("P6b")));
    assert!(!equivalent(&polygon("P4a"), &polygon("P4c")));
}

#[test]
fn cubes() {
    let c1 = cube(1).unwrap();
    assert_eq!(c1.lattice_points().len(), 3);
    assert_eq!(vertices(&c1), vec![vec![-1], vec![1]]);
    for d in 1..=4 {
        let c = cube(d).unwrap();
        assert_eq!(c.vertices().len(), 1 << d);
        assert_eq!(c.lattice_points().len(), 3usize.pow(d as u32));
    }
    assert!(equivalent(&cube(2).unwrap(), &polygon("P8a")));
    assert_eq!(vol(&cube(3).unwrap()), 48);
    assert!(matches!(cube(0), Err(Error::DimensionOutOfRange { .. })));
}

#[test]
fn cross_polytopes() {
    assert!(equivalent(&cross(2).unwrap(), &polygon("P4a")));
    assert_eq!(cross(3).unwrap().f_vector(), vec![6, 12, 8]);
    assert_eq!(vol(&cross(4).unwrap()), 16);
    for d in 1..=5 {
        let c = cross(d).unwrap();
        assert_eq!(c.vertices().len(), 2 * d);
        assert_eq!(c.lattice_points().len(), 2 * d + 1);
    }
}

#[test]
fn sylvester_numbers() {
    let got: Vec<BigInt> = (1..=6).map(|i| sylvester(i).unwrap()).collect();
    let want: Vec<BigInt> = [2u64, 3, 7, 43, 1807, 3263443].iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(got, want);
    assert!(sylvester(0).is_err());
    assert!(sylvester(7).is_err());
}

#[test]
fn simplex_families() {
    let q2 = simplex_q(2).unwrap();
    assert_eq!(vol(&q2), 6);
    assert_eq!(q2.lattice_points().len(), 7);
    assert!(equivalent(&q2, &polygon("P6d")));
    assert_eq!(vertices(&simplex_q(3).unwrap()), vec![vec![-3, 1, 1], vec![0, -2, 1], vec![0, 0, -1], vec![1, 1, 1]]);
    assert_eq!(vol(&simplex_r(3).unwrap()), 42);
    assert_eq!(vol(&simplex_s(3).unwrap()), 72);
    assert_eq!(vol(&simplex_t(3).unwrap()), 16);
    // Degree formulas (d+1)! and t_d^2 - t_d.
    for d in 2..=5u64 {
        assert_eq!(vol(&simplex_q(d as usize).unwrap()), (1..=d + 1).product::<u64>());
        let t: u64 = sylvester(d as usize).unwrap().try_into().unwrap();
        assert_eq!(vol(&simplex_r(d as usize).unwrap()), t * t - t);
    }
    for bad in [simplex_q(1), simplex_r(6), simplex_s(1), simplex_t(2), simplex_t(6)] {
        assert!(matches!(bad, Err(Error::DimensionOutOfRange { .. })));
    }
}

#[test]
fn families_are_reflexive_after_centering() {
    let mut all = Vec::new();
    for d in 2..=5 {
        all.extend([simplex_q(d), simplex_r(d), simplex_s(d)]);
    }
    all.extend((3..=5).map(simplex_t));
    all.extend((1..=5).flat_map(|d| [cube(d), cross(d)]));
    for p in all {
        let p = p.unwrap();
        assert!(p.is_reflexive_up_to_translation(), "{:?}", vertices(&p));
    }
}

#[test]
fn construction_point_counts() {
    for (name, p) in all_reflexive_polygons() {
        let n = p.lattice_points().len();
        assert_eq!(construct(Construction::A, &p).unwrap().lattice_points().len(), 3 * n, "{name}");
        assert_eq!(construct(Construction::B, &p).unwrap().lattice_points().len(), n + 2, "{name}");
        assert_eq!(construct(Construction::C, &p).unwrap().lattice_points().len(), 2 * n + 1, "{name}");
    }
}

#[test]
fn construction_degrees() {
    assert_eq!(vol(&construct(Construction::B, &polygon("P3")).unwrap()), 6);
    assert_eq!(vol(&construct(Construction::A, &polygon("P5a")).unwrap()), 30);
    assert_eq!(vol(&construct(Construction::C, &polygon("P3")).unwrap()), 12);
    assert_eq!(vol(&iterate(Construction::B, 2, &polygon("P3")).unwrap()), 12);
    assert_eq!(vol(&iterate(Construction::A, 2, &polygon("P3")).unwrap()), 144);
    assert_eq!(iterate(Construction::C, 0, &polygon("P9")).unwrap(), polygon("P9"));
}

#[test]
fn iterated_degree_formulas() {
    let falling = |d: u64, k: u64| (d + 1..=d + k).product::<u64>();
    for (name, p) in all_reflexive_polygons() {
        let deg = vol(&p);
        for k in 1..=2u64 {
            let a = vol(&iterate(Construction::A, k as usize, &p).unwrap());
            let b = vol(&iterate(Construction::B, k as usize, &p).unwrap());
            let c = vol(&iterate(Construction::C, k as usize, &p).unwrap());
            assert_eq!(a, (1 << k) * falling(2, k) * deg, "A^{k}({name})");
            assert_eq!(b, (1 << k) * deg, "B^{k}({name})");
            // Each C step adds a prism of height one and a unit pyramid over
            // the current polytope Q: deg(C(Q)) = (dim Q + 2) deg(Q).
            assert_eq!(c, falling(3, k) * deg, "C^{k}({name})");
        }
        // The closed form 1 + (d+k)!/d! agrees with the stepwise product at k = 1 only.
        let c1 = vol(&construct(Construction::C, &p).unwrap());
        assert_eq!(c1, (1 + falling(2, 1)) * deg, "C({name})");
        let c2 = vol(&iterate(Construction::C, 2, &p).unwrap());
        assert_ne!(c2, (1 + falling(2, 2)) * deg, "C^2({name})");
    }
}

#[test]
fn constructions_preserve_reflexivity() {
    for (name, p) in all_reflexive_polygons() {
        for c in [Construction::A, Construction::B, Construction::C] {
            assert!(construct(c, &p).unwrap().is_reflexive_up_to_translation(), "{c}({name})");
        }
    }
}

#[test]
fn construction_names_round_trip() {
    for c in [Construction::A, Construction::B, Construction::C] {
        assert_eq!(c.to_string().parse::<Construction>().unwrap(), c);
    }
    assert!("D".parse::<Construction>().is_err());
}

#[test]
fn products() {
    assert_eq!(product(&cube(1).unwrap(), &cube(1).unwrap()).unwrap(), cube(2).unwrap());
    assert_eq!(vol(&product(&polygon("P3"), &cube(1).unwrap()).unwrap()), 18);
    let pairs = [
        (polygon("P3"), polygon("P4a")),
        (cube(2).unwrap(), cross(1).unwrap()),
        (polygon("P5a"), simplex_q(2).unwrap()),
    ];
    for (p, q) in pairs {
        let prod = product(&p, &q).unwrap();
        let (d1, d2) = (p.dim() as u64, q.dim() as u64);
        let binom = (1..=d2).fold(1, |acc, i| acc * (d1 + i) / i);
        assert_eq!(vol(&prod), binom * vol(&p) * vol(&q));
        assert_eq!(prod.lattice_points().len(), p.lattice_points().len() * q.lattice_points().len());
    }
}

#[test]
fn polygon_fixtures() {
    assert_eq!(POLYGON_NAMES.len(), 16);
    for (name, p) in all_reflexive_polygons() {
        let boundary = p.lattice_points().len() - 1;
        let label: usize = name[1..2].parse().unwrap();
        assert_eq!(boundary, label, "{name}");
        // Pick's theorem with one interior point: area = boundary / 2.
        assert_eq!(vol(&p) as usize, boundary, "{name}");
    }
    assert_eq!(vol(&polygon("P5a")), 5);
    assert_eq!(vol(&polygon("P9")), 9);
    assert!(matches!(reflexive_polygon("P10"), Err(Error::UnknownName(_))));
    // Fixtures are pairwise inequivalent.
    let all = all_reflexive_polygons();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            assert!(!equivalent(&all[i].1, &all[j].1), "{} vs {}", all[i].0, all[j].0);
        }
    }
}

#[test]
fn graphs() {
    let k3 = Graph::complete(3).unwrap();
    assert!(!k3.is_bipartite());
    assert!(Graph::star(7).unwrap().is_bipartite());
    assert!(Graph::cycle(4).unwrap().is_bipartite());
    assert!(!Graph::cycle(5).unwrap().is_bipartite());
    let g = Graph::parse("# a triangle\n1 2\n2 3\n\n3 1\n1 2\n").unwrap();
    assert_eq!(g.vertex_count, 3);
    assert_eq!(g.edges.len(), 3);
    assert!(Graph::parse("1 x\n").is_err());
    let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert!(!disconnected.is_connected());
}

#[test]
fn symmetric_edge_polytopes() {
    let tri = sym_edge_polytope(&Graph::complete(3).unwrap()).unwrap();
    assert_eq!(vol(&tri), 6);
    assert!(equivalent(&tri, &polygon("P6a")));
    for d in 3..=4 {
        let star = sym_edge_polytope(&Graph::star(d).unwrap()).unwrap();
        assert!(equivalent(&star, &cross(d - 1).unwrap()));
    }
    assert!(sym_edge_polytope(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_err());
}

#[test]
fn bipartite_graph_polytopes() {
    let edge = bg_polytope(&Graph::complete(2).unwrap()).unwrap();
    assert!(edge.bipartite);
    assert!(equivalent(&edge.polytope, &polygon("P8a")));
    for d in 3..=5usize {
        let star = bg_polytope(&Graph::star(d).unwrap()).unwrap();
        assert!(star.polytope.is_reflexive());
        assert_eq!(vol(&star.polytope), (d as u64) << d);
    }
    let star3 = bg_polytope(&Graph::star(3).unwrap()).unwrap().polytope;
    assert!(equivalent(&product(&cross(1).unwrap(), &cross(2).unwrap()).unwrap(), &star3));
    let odd = bg_polytope(&Graph::complete(3).unwrap()).unwrap();
    assert!(!odd.bipartite);
    assert!(!odd.polytope.is_reflexive());
}

#[test]
fn reflexive_check_sees_lattice_vector_api() {
    let p = construct(Construction::C, &polygon("P3")).unwrap();
    assert!(p.contains(&LatticeVector::from_i64(&[0, 0, 1])));
}
