//! The single-polytope subcommands.

use std::io::Write;

use anyhow::{bail, Context, Result};
use mldeg_core::builders::iterate;
use mldeg_core::catalog::write_polytope;
use mldeg_core::score::{birch_residual, design_matrix, solution_to_distribution, DesignMatrix, Scaling};
use mldeg_core::solver::{
    ml_degree, principal_a_determinant_vanishes, seed_rng, solve_score_equations, FaceWitness, MLReport, TrackerConfig,
};
use mldeg_core::Polytope;
use serde::Serialize;

use crate::source;
use crate::{Format, Outcome, SourceArgs};

#[derive(Serialize)]
struct Info {
    name: String,
    dim: usize,
    vertices: usize,
    lattice_points: usize,
    f_vector: Vec<usize>,
    reflexive: bool,
    degree: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<Vec<String>>,
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn info(src: &SourceArgs, points: bool, format: Format) -> Result<Outcome> {
    let (name, p) = source::polytope(src)?;
    let listed =
        if points { Some(design_matrix(&p)?.columns().iter().map(ToString::to_string).collect()) } else { None };
    let info = Info {
        name,
        dim: p.dim(),
        vertices: p.vertices().len(),
        lattice_points: p.lattice_points().len(),
        f_vector: p.f_vector(),
        reflexive: p.is_reflexive(),
        degree: p.normalized_volume().to_string(),
        points: listed,
    };
    match format {
        Format::Json => print_json(&info)?,
        Format::Text => {
            println!("name: {}", info.name);
            println!("dim: {}", info.dim);
            println!("vertices: {}", info.vertices);
            println!("lattice_points: {}", info.lattice_points);
            println!("f_vector: {}", join(&info.f_vector));
            println!("reflexive: {}", info.reflexive);
            if !info.reflexive && p.is_reflexive_up_to_translation() {
                println!("reflexive_up_to_translation: true");
            }
            println!("degree: {}", info.degree);
            if let Some(pts) = &info.points {
                println!("points (design-matrix order, translated to the nonnegative orthant):");
                for (i, q) in pts.iter().enumerate() {
                    println!("  {i}: {q}");
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// The serializable part of an [`MLReport`].
#[derive(Serialize)]
struct Summary<'a> {
    name: &'a str,
    degree: u64,
    ml_degree: usize,
    drop: i64,
    per_seed_counts: &'a [usize],
    consistent: bool,
    failed_paths: usize,
    max_birch_residual: f64,
    drop_witness: &'a Option<FaceWitness>,
}

fn summary<'a>(name: &'a str, rep: &'a MLReport) -> Summary<'a> {
    Summary {
        name,
        degree: rep.degree,
        ml_degree: rep.ml_degree,
        drop: rep.drop,
        per_seed_counts: &rep.per_seed_counts,
        consistent: rep.consistent,
        failed_paths: rep.failed_paths,
        max_birch_residual: rep.runs.iter().map(|r| r.max_birch_residual).fold(0.0, f64::max),
        drop_witness: &rep.drop_witness,
    }
}

fn describe(w: &FaceWitness) -> String {
    format!("face {} (dim {}, lattice points {})", w.face_index, w.dim, join(&w.lattice_points))
}

fn prepare(src: &SourceArgs, scaling: Option<&str>) -> Result<(String, Polytope, DesignMatrix, Scaling)> {
    let (name, p) = source::polytope(src)?;
    let a = design_matrix(&p)?;
    let c = source::scaling(scaling, &a)?;
    Ok((name, p, a, c))
}

pub fn mldeg(
    src: &SourceArgs,
    scaling: Option<&str>,
    data: Option<&str>,
    cfg: &TrackerConfig,
    format: Format,
) -> Result<Outcome> {
    let (name, _, a, c) = prepare(src, scaling)?;
    if let Some(path) = data {
        return solve_one(&a, &c, &source::data(path, &a)?, cfg, format);
    }
    let rep = ml_degree(&a, &c, cfg).context("computing the ML degree (pass --force to lift the path cap)")?;
    let s = summary(&name, &rep);
    match format {
        Format::Json => print_json(&s)?,
        Format::Text => {
            println!("name: {name}");
            println!("ml_degree: {}", s.ml_degree);
            println!("degree: {}", s.degree);
            println!("drop: {}", s.drop);
            println!("per_seed_counts: {}", join(s.per_seed_counts));
            println!("consistent: {}", s.consistent);
            println!("failed_paths: {}", s.failed_paths);
            println!("max_birch_residual: {:.2e}", s.max_birch_residual);
            if let Some(w) = &rep.drop_witness {
                println!("drop_witness: {}", describe(w));
            }
        }
    }
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct SolutionLine {
    theta: Vec<[f64; 2]>,
    p: Vec<[f64; 2]>,
    statistically_valid: bool,
    birch_residual: f64,
}

fn solve_one(
    a: &DesignMatrix,
    c: &Scaling,
    u: &mldeg_core::score::DataVector,
    cfg: &TrackerConfig,
    format: Format,
) -> Result<Outcome> {
    let mut rng = seed_rng(cfg.seed, 0);
    let run = solve_score_equations(a, c, u, cfg, &mut rng)?;
    let pair = |z: &num_complex::Complex64| [z.re, z.im];
    let mut lines = Vec::new();
    for sol in &run.solutions {
        let dist = solution_to_distribution(a, c, sol)?;
        let res = birch_residual(a, c, sol, u)?;
        lines.push(SolutionLine {
            theta: sol.theta.iter().map(pair).collect(),
            p: dist.p.iter().map(pair).collect(),
            statistically_valid: dist.statistically_valid,
            birch_residual: res.max_residual.max(res.sum_deviation),
        });
    }
    match format {
        Format::Json => {
            for l in &lines {
                print_json(l)?;
            }
        }
        Format::Text => {
            println!("solutions: {}", lines.len());
            for (i, (l, sol)) in lines.iter().zip(&run.solutions).enumerate() {
                let theta: Vec<String> = sol.theta.iter().map(|z| format!("{z:.8}")).collect();
                let tag = if l.statistically_valid { "  [probability distribution]" } else { "" };
                println!("{i}: theta = ({}){tag}", theta.join(", "));
            }
        }
    }
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct DropLevel<'a> {
    #[serde(flatten)]
    summary: Summary<'a>,
    discriminant_vanishes: bool,
    witness: Option<FaceWitness>,
    agrees: bool,
}

/// Runs the ML degree and the principal A-determinant test on the polytope
/// and, with `--construct`, on every intermediate construction level.
pub fn drop_check(src: &SourceArgs, scaling: Option<&str>, cfg: &TrackerConfig, format: Format) -> Result<Outcome> {
    let (name, base) = source::base(src)?;
    let levels: Vec<(String, Polytope)> = match src.construct {
        Some(k) => {
            if scaling.is_some() {
                bail!("--scaling cannot be combined with --construct in drop-check");
            }
            (0..=src.iterate).map(|i| Ok((source::label(&name, k, i), iterate(k, i, &base)?))).collect::<Result<_>>()?
        }
        None => vec![(name, base)],
    };
    let mut outcome = Outcome::Pass;
    for (label, p) in &levels {
        let a = design_matrix(p)?;
        let c = source::scaling(scaling, &a)?;
        let rep = ml_degree(&a, &c, cfg).with_context(|| format!("computing the ML degree of {label}"))?;
        let pd = principal_a_determinant_vanishes(p, &c, cfg)?;
        let agrees = pd.vanishes == (rep.drop > 0) && rep.consistent;
        if !agrees {
            outcome = Outcome::Fail;
        }
        match format {
            Format::Json => print_json(&DropLevel {
                summary: summary(label, &rep),
                discriminant_vanishes: pd.vanishes,
                witness: pd.witness,
                agrees,
            })?,
            Format::Text => {
                let verdict = match &pd.witness {
                    Some(w) => format!("E_A vanishes on {}", describe(w)),
                    None => "E_A nonzero".to_string(),
                };
                println!(
                    "{} {label}: ml_degree {}, degree {}, drop {}, {verdict}",
                    if agrees { "PASS" } else { "FAIL" },
                    rep.ml_degree,
                    rep.degree,
                    rep.drop
                );
            }
        }
    }
    Ok(outcome)
}

pub fn construct(src: &SourceArgs, output: Option<&str>) -> Result<Outcome> {
    if src.construct.is_none() {
        bail!("construct needs --construct A|B|C");
    }
    let (_, p) = source::polytope(src)?;
    let text = write_polytope(&p);
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path}"))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(Outcome::Pass)
}
