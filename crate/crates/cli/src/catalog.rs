//! Batch runs over KS-style files with in-order, resumable output.
//!
//! Blocks are solved by a worker pool a batch at a time and written in input
//! order, flushing after every batch. On restart the output is cut back to its
//! last complete line and the run continues with the block after the last
//! record's id. Per-block randomness depends only on `--seed`, so with
//! `--no-timing` a resumed run is byte-identical to an uninterrupted one.

use std::fs::OpenOptions;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use log::{error, info, warn};
use mldeg_core::catalog::{parse_ks, CatalogRecord, KsBlock};
use mldeg_core::score::{design_matrix, Scaling};
use mldeg_core::solver::{ml_degree, TrackerConfig};
use rayon::prelude::*;

use crate::source::read;
use crate::{CatalogFormat, Outcome};

pub struct Options {
    pub file: String,
    pub transpose: bool,
    pub limit: Option<usize>,
    pub output: Option<String>,
    pub format: CatalogFormat,
    pub timing: bool,
    pub cfg: TrackerConfig,
}

fn record(block: &KsBlock, opts: &Options) -> Result<CatalogRecord> {
    let start = Instant::now();
    let p = &block.polytope;
    let a = design_matrix(p)?;
    let rep = ml_degree(&a, &Scaling::standard(a.len()), &opts.cfg)?;
    let runtime_ms = if opts.timing { u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX) } else { 0 };
    Ok(CatalogRecord {
        id: block.index.to_string(),
        dim: p.dim(),
        n_lattice_points: p.lattice_points().len(),
        f_vector: p.f_vector(),
        degree: rep.degree,
        ml_degree: rep.ml_degree,
        drop: rep.drop,
        reflexive: p.is_reflexive_up_to_translation(),
        seeds: opts.cfg.seeds,
        consistent: rep.consistent,
        runtime_ms,
    })
}

fn line(rec: &CatalogRecord, format: CatalogFormat) -> Result<String> {
    Ok(match format {
        CatalogFormat::Json => serde_json::to_string(rec)?,
        CatalogFormat::Csv => rec.to_csv(),
    })
}

/// Invariants every record must satisfy.
fn violations(rec: &CatalogRecord) -> Vec<&'static str> {
    let mut v = Vec::new();
    if rec.drop < 0 {
        v.push("negative drop");
    }
    if rec.dim % 2 == 1 && rec.reflexive && rec.degree % 2 == 1 {
        v.push("odd degree for an odd-dimensional reflexive polytope");
    }
    if !rec.consistent {
        v.push("seeds disagree");
    }
    v
}

/// Truncates `path` to its last complete line and returns the index of the
/// first block still to be processed.
fn resume_point(path: &str, format: CatalogFormat) -> Result<(usize, bool)> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok((0, false)),
        Err(e) => return Err(e).with_context(|| format!("reading {path}")),
    };
    let complete = text.rfind('\n').map_or(0, |i| i + 1);
    if complete < text.len() {
        warn!("{path}: dropping an incomplete trailing line");
        OpenOptions::new().write(true).open(path)?.set_len(complete as u64)?;
    }
    let mut lines = text[..complete].lines();
    let has_header = format == CatalogFormat::Csv && lines.next().is_some();
    let Some(last) = lines.last() else {
        return Ok((0, has_header));
    };
    let id = match format {
        CatalogFormat::Json => {
            serde_json::from_str::<CatalogRecord>(last)
                .with_context(|| format!("{path}: last line is not a record"))?
                .id
        }
        CatalogFormat::Csv => last.split(',').next().unwrap_or_default().to_string(),
    };
    let id: usize = id.parse().map_err(|_| anyhow!("{path}: last record has non-numeric id {id:?}"))?;
    Ok((id + 1, has_header))
}

pub fn run(opts: &Options) -> Result<Outcome> {
    let text = read(&opts.file)?;
    let mut blocks = parse_ks(&text, opts.transpose).with_context(|| format!("parsing {}", opts.file))?;
    if let Some(n) = opts.limit {
        blocks.truncate(n);
    }
    let (first, has_header) = match &opts.output {
        Some(path) => resume_point(path, opts.format)?,
        None => (0, false),
    };
    let mut out: Box<dyn Write> = match &opts.output {
        Some(path) => Box::new(BufWriter::new(
            OpenOptions::new().create(true).append(true).open(path).with_context(|| format!("opening {path}"))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    if opts.format == CatalogFormat::Csv && !has_header {
        writeln!(out, "{}", CatalogRecord::CSV_HEADER)?;
    }
    if first > 0 {
        info!("resuming at block {first}");
    }
    let todo: Vec<&KsBlock> = blocks.iter().filter(|b| b.index >= first).collect();
    let batch = rayon::current_num_threads().max(1);
    let mut outcome = Outcome::Pass;
    for chunk in todo.chunks(batch) {
        let results: Vec<Result<CatalogRecord>> = chunk.par_iter().map(|b| record(b, opts)).collect();
        for (b, res) in chunk.iter().zip(results) {
            match res {
                Ok(rec) => {
                    for v in violations(&rec) {
                        error!("block {} (line {}): {v}", b.index, b.line);
                        outcome = Outcome::Fail;
                    }
                    writeln!(out, "{}", line(&rec, opts.format)?)?;
                }
                Err(e) => {
                    error!("block {} (line {}): {e:#}", b.index, b.line);
                    outcome = Outcome::Fail;
                }
            }
        }
        out.flush()?;
    }
    let done = todo.len();
    info!("{done} blocks processed, {} skipped as already present", blocks.len() - done);
    Ok(outcome)
}
