//! Known (ML degree, degree) tables, recomputed row by row.

use anyhow::Result;
use clap::ValueEnum;
use mldeg_core::builders::{
    construct, cross, cube, iterate, reflexive_polygon, simplex_q, simplex_r, simplex_s, simplex_t, Construction,
    POLYGON_NAMES,
};
use mldeg_core::catalog::builtin;
use mldeg_core::score::{cube_ml1_scaling, design_matrix, Scaling};
use mldeg_core::solver::{ml_degree, TrackerConfig};
use mldeg_core::Polytope;
use num_complex::Complex64;

use crate::Outcome;

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    /// The sixteen reflexive polygons.
    Polygons,
    /// Cubes in dimensions 1 to 3.
    Cube,
    /// Cross polytopes in dimensions 1 to 4.
    Cross,
    /// Scalings with a known ML degree drop.
    Scaled,
    /// The 3-cube with an ML-degree-one scaling.
    MlOne,
    /// The simplex families Q, R, S and T.
    Simplices,
    /// Constructions A, B and C of small polygons.
    Constructions,
    /// Construction B applied twice.
    Iterations,
    All,
}

struct Row {
    label: String,
    polytope: Polytope,
    scaling: Option<Scaling>,
    ml_degree: usize,
    /// Expected degree, or `None` when only the ML degree is known.
    degree: Option<u64>,
    drop: Option<i64>,
}

impl Row {
    fn new(label: impl Into<String>, polytope: Polytope, ml_degree: usize, degree: u64) -> Row {
        Row { label: label.into(), polytope, scaling: None, ml_degree, degree: Some(degree), drop: None }
    }
}

const POLYGON_TABLE: [(usize, u64); 16] = [
    (3, 3),
    (4, 4),
    (4, 4),
    (4, 4),
    (3, 5),
    (5, 5),
    (6, 6),
    (6, 6),
    (6, 6),
    (6, 6),
    (7, 7),
    (7, 7),
    (4, 8),
    (8, 8),
    (8, 8),
    (9, 9),
];

fn polygons() -> Result<Vec<Row>> {
    POLYGON_NAMES
        .iter()
        .zip(POLYGON_TABLE)
        .map(|(name, (m, d))| Ok(Row::new(*name, reflexive_polygon(name)?, m, d)))
        .collect()
}

fn cubes() -> Result<Vec<Row>> {
    [(1, 2, 2), (2, 4, 8), (3, 8, 48)]
        .into_iter()
        .map(|(d, m, deg)| Ok(Row::new(format!("cube-{d}"), cube(d)?, m, deg)))
        .collect()
}

fn crosses() -> Result<Vec<Row>> {
    (1..=4).map(|d| Ok(Row::new(format!("cross-{d}"), cross(d)?, 1 << d, 1 << d))).collect()
}

/// Builtin name, weights at the listed points, expected ML degree.
type ScaledCase = (&'static str, Vec<(&'static [i64], f64)>, usize);

fn scaled() -> Result<Vec<Row>> {
    let cases: [ScaledCase; 3] = [
        ("cross-2", vec![(&[1, 1], 2.0), (&[2, 1], 4.0), (&[1, 2], 25.0), (&[0, 1], 4.0), (&[1, 0], 1.0)], 3),
        ("ks-0", vec![(&[1, 1, 1], 4.0)], 3),
        ("ks-132", vec![(&[2, 1, 1], -1.0 / 108.0)], 4),
    ];
    cases
        .into_iter()
        .map(|(name, asg, m)| {
            let p = builtin(name)?;
            let a = design_matrix(&p)?;
            let asg: Vec<(&[i64], Complex64)> = asg.into_iter().map(|(q, w)| (q, Complex64::new(w, 0.0))).collect();
            let c = Scaling::with_points(&a, &asg)?;
            let shown: Vec<String> = asg.iter().map(|(q, w)| format!("c{q:?}={}", w.re)).collect();
            Ok(Row {
                label: format!("{name} [{}]", shown.join(" ")),
                polytope: p,
                scaling: Some(c),
                ml_degree: m,
                degree: None,
                drop: None,
            })
        })
        .collect()
}

fn ml_one() -> Result<Vec<Row>> {
    let one = Complex64::new(1.0, 0.0);
    let (_, c) = cube_ml1_scaling(&[(2.0 * one, one); 3])?;
    let p = cube(3)?;
    Ok(vec![Row {
        label: "cube-3 ML-one scaling".into(),
        polytope: p,
        scaling: Some(c),
        ml_degree: 1,
        degree: Some(48),
        drop: None,
    }])
}

fn simplices(extended: bool) -> Result<Vec<Row>> {
    let mut rows = vec![
        Row::new("Q-2", simplex_q(2)?, 6, 6),
        Row::new("Q-3", simplex_q(3)?, 24, 24),
        Row::new("R-2", simplex_r(2)?, 6, 6),
        Row::new("S-2", simplex_s(2)?, 8, 8),
        Row::new("T-3", simplex_t(3)?, 16, 16),
    ];
    if extended {
        rows.extend([
            Row::new("Q-4", simplex_q(4)?, 120, 120),
            Row::new("R-3", simplex_r(3)?, 42, 42),
            Row::new("S-3", simplex_s(3)?, 72, 72),
            Row::new("T-4", simplex_t(4)?, 64, 64),
        ]);
    }
    Ok(rows)
}

fn constructions() -> Result<Vec<Row>> {
    use Construction::*;
    [
        (A, "P3", 6, 18),
        (B, "P3", 6, 6),
        (C, "P3", 8, 12),
        (B, "P5a", 10, 10),
        (B, "P6a", 10, 12),
        (B, "P6d", 11, 12),
        (C, "P5a", 11, 20),
        (A, "P8a", 8, 48),
    ]
    .into_iter()
    .map(|(k, name, m, d)| Ok(Row::new(format!("{k}({name})"), construct(k, &reflexive_polygon(name)?)?, m, d)))
    .collect()
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Twice-iterated B with the drop predicted by the binomial formula.
fn iterations() -> Result<Vec<Row>> {
    [("P3", 11, 12, 1, 0), ("P5a", 16, 20, 2, 1), ("P8a", 24, 32, 4, 1)]
        .into_iter()
        .map(|(name, m, d, factor, j)| {
            let mut row = Row::new(
                format!("B^2({name}) drop {factor}*C(2,{j})"),
                iterate(Construction::B, 2, &reflexive_polygon(name)?)?,
                m,
                d,
            );
            row.drop = Some(factor * binomial(2, j));
            Ok(row)
        })
        .collect()
}

fn rows(suite: Suite, extended: bool) -> Result<Vec<(Suite, Row)>> {
    let tag = |s: Suite, r: Vec<Row>| r.into_iter().map(move |x| (s, x));
    Ok(match suite {
        Suite::Polygons => tag(suite, polygons()?).collect(),
        Suite::Cube => tag(suite, cubes()?).collect(),
        Suite::Cross => tag(suite, crosses()?).collect(),
        Suite::Scaled => tag(suite, scaled()?).collect(),
        Suite::MlOne => tag(suite, ml_one()?).collect(),
        Suite::Simplices => tag(suite, simplices(extended)?).collect(),
        Suite::Constructions => tag(suite, constructions()?).collect(),
        Suite::Iterations => tag(suite, iterations()?).collect(),
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Polygons,
                Suite::Cube,
                Suite::Cross,
                Suite::Scaled,
                Suite::MlOne,
                Suite::Simplices,
                Suite::Constructions,
                Suite::Iterations,
            ] {
                all.extend(rows(s, extended)?);
            }
            all
        }
    })
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

pub fn run(suite: Suite, extended: bool, cfg: &TrackerConfig) -> Result<Outcome> {
    let rows = rows(suite, extended)?;
    let mut failed = 0;
    for (s, row) in &rows {
        let a = design_matrix(&row.polytope)?;
        let c = row.scaling.clone().unwrap_or_else(|| Scaling::standard(a.len()));
        let rep = ml_degree(&a, &c, cfg)?;
        let ok = rep.ml_degree == row.ml_degree
            && row.degree.is_none_or(|d| d == rep.degree)
            && row.drop.is_none_or(|d| d == rep.drop)
            && rep.consistent;
        if !ok {
            failed += 1;
        }
        let expected = match row.degree {
            Some(d) => format!("{}/{d}", row.ml_degree),
            None => format!("{}/-", row.ml_degree),
        };
        println!(
            "{} {} {}: ml_degree/degree {}/{} expected {expected}{}",
            if ok { "PASS" } else { "FAIL" },
            suite_name(*s),
            row.label,
            rep.ml_degree,
            rep.degree,
            if rep.consistent { "" } else { " (seeds disagree)" }
        );
    }
    println!("{}/{} rows PASS", rows.len() - failed, rows.len());
    Ok(if failed == 0 { Outcome::Pass } else { Outcome::Fail })
}
