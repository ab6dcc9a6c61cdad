//! Loading polytopes, scalings and data from the command line arguments.

use anyhow::{bail, Context, Result};
use mldeg_core::builders::{iterate, Construction};
use mldeg_core::catalog::{builtin, parse_data, parse_ks, parse_scaling};
use mldeg_core::score::{DataVector, DesignMatrix, Scaling};
use mldeg_core::Polytope;

use crate::SourceArgs;

pub fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

/// The polytope named by `--builtin` or `--file`, before any construction.
pub fn base(src: &SourceArgs) -> Result<(String, Polytope)> {
    if let Some(name) = &src.builtin {
        return Ok((name.clone(), builtin(name)?));
    }
    let path = src.file.as_deref().expect("clap requires --builtin or --file");
    let blocks = parse_ks(&read(path)?, src.transpose).with_context(|| format!("parsing {path}"))?;
    let n = blocks.len();
    match blocks.into_iter().nth(src.index) {
        Some(b) => Ok((format!("{path}#{}", b.index), b.polytope)),
        None => bail!("{path} has {n} blocks, no block {}", src.index),
    }
}

pub fn label(name: &str, c: Construction, k: usize) -> String {
    match k {
        0 => name.to_string(),
        1 => format!("{c}({name})"),
        _ => format!("{c}^{k}({name})"),
    }
}

/// The polytope after the requested construction.
pub fn polytope(src: &SourceArgs) -> Result<(String, Polytope)> {
    let (name, p) = base(src)?;
    match src.construct {
        Some(c) => Ok((label(&name, c, src.iterate), iterate(c, src.iterate, &p)?)),
        None => Ok((name, p)),
    }
}

pub fn scaling(path: Option<&str>, a: &DesignMatrix) -> Result<Scaling> {
    let Some(path) = path else {
        return Ok(Scaling::standard(a.len()));
    };
    let c = parse_scaling(&read(path)?).with_context(|| format!("parsing {path}"))?;
    if c.len() != a.len() {
        bail!("{path} has {} weights but the polytope has {} lattice points", c.len(), a.len());
    }
    Ok(c)
}

pub fn data(path: &str, a: &DesignMatrix) -> Result<DataVector> {
    let u = parse_data(&read(path)?).with_context(|| format!("parsing {path}"))?;
    if u.counts.len() != a.len() {
        bail!("{path} has {} entries but the polytope has {} lattice points", u.counts.len(), a.len());
    }
    Ok(u)
}
