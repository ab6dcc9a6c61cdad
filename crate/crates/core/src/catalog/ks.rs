//! Blocks of integer matrices in the Kreuzer–Skarke text format.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, Polytope};

/// One parsed block.
#[derive(Clone, Debug)]
pub struct KsBlock {
    /// Zero-based position in the file.
    pub index: usize,
    /// Line number of the header (one-based).
    pub line: usize,
    /// The header line as written.
    pub header: String,
    pub polytope: Polytope,
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<BigInt>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<BigInt>().map_err(|e| Error::MalformedBlock { line: lineno, message: format!("{t:?}: {e}") })
        })
        .collect()
}

/// Parses consecutive blocks. Each block starts with a header whose first two
/// tokens are integers `r k` (further tokens are ignored), followed by `r`
/// rows of `k` integers. With `r < k` or `r == k` the columns are the points;
/// with `r > k` the rows are. `transpose` flips that choice.
pub fn parse_ks(text: &str, transpose: bool) -> Result<Vec<KsBlock>> {
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()).collect();
    let mut blocks = Vec::new();
    let mut pos = 0;
    while pos < lines.len() {
        let (lineno, header) = lines[pos];
        let mut tokens = header.split_whitespace();
        let mut dim = || -> Result<usize> {
            tokens.next().and_then(|t| t.parse::<usize>().ok()).ok_or_else(|| Error::MalformedBlock {
                line: lineno,
                message: "header must start with two integers".into(),
            })
        };
        let (r, k) = (dim()?, dim()?);
        if r == 0 || k == 0 {
            return Err(Error::MalformedBlock { line: lineno, message: "empty matrix".into() });
        }
        let mut rows = Vec::with_capacity(r);
        for i in 0..r {
            let Some(&(ln, row)) = lines.get(pos + 1 + i) else {
                return Err(Error::MalformedBlock { line: lineno, message: format!("expected {r} rows, found {i}") });
            };
            let ints = parse_ints(row, ln)?;
            if ints.len() != k {
                return Err(Error::DimensionMismatch { expected: k, got: ints.len() });
            }
            rows.push(ints);
        }
        let columns_are_points = (r <= k) != transpose;
        let points: Vec<LatticeVector> = if columns_are_points {
            (0..k).map(|j| LatticeVector(rows.iter().map(|row| row[j].clone()).collect())).collect()
        } else {
            rows.into_iter().map(LatticeVector).collect()
        };
        let polytope = Polytope::from_points(points)
            .map_err(|e| Error::MalformedBlock { line: lineno, message: e.to_string() })?;
        blocks.push(KsBlock { index: blocks.len(), line: lineno, header: header.to_string(), polytope });
        pos += 1 + r;
    }
    Ok(blocks)
}

/// Writes a polytope as one block: header `d n`, then `d` rows whose columns
/// are the vertices.
pub fn write_polytope(p: &Polytope) -> String {
    let v = p.vertices();
    let mut out = format!("{} {}\n", p.dim(), v.len());
    for k in 0..p.dim() {
        let row: Vec<String> = v.iter().map(|x| x.0[k].to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
