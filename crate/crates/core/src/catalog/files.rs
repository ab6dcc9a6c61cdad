//! Plain-text inputs: scalings and data vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::score::{DataVector, Scaling};

fn parse_f64(t: &str, line: usize) -> Result<f64> {
    if let Some((n, d)) = t.split_once('/') {
        let n: f64 = parse_f64(n, line)?;
        let d: f64 = parse_f64(d, line)?;
        return Ok(n / d);
    }
    t.parse::<f64>().map_err(|e| Error::MalformedBlock { line, message: format!("{t:?}: {e}") })
}

/// One weight per line as `re [im]`; rationals `p/q` are accepted. Blank
/// lines and `#` comments are skipped.
pub fn parse_scaling(text: &str) -> Result<Scaling> {
    let mut w = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let (re, im) = match toks[..] {
            [re] => (parse_f64(re, i + 1)?, 0.0),
            [re, im] => (parse_f64(re, i + 1)?, parse_f64(im, i + 1)?),
            _ => return Err(Error::MalformedBlock { line: i + 1, message: "expected `re [im]`".into() }),
        };
        w.push(Complex64::new(re, im));
    }
    Scaling::new(w)
}

/// Whitespace-separated nonnegative integers.
pub fn parse_data(text: &str) -> Result<DataVector> {
    let counts = text
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|e| Error::InvalidInput(format!("data entry {t:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    DataVector::new(counts)
}
