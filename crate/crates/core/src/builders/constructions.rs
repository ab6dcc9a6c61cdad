//! The three constructions raising dimension by one, and products.

use std::fmt;
use std::str::FromStr;

use log::warn;

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, Polytope};

/// Which construction to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Prism `P × [-1,1]`.
    A,
    /// Bipyramid `conv(P × {0}, ±e_{d+1})`.
    B,
    /// `conv(P × [-1,0], e_{d+1})`.
    C,
}

impl FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Construction::A),
            "B" | "b" => Ok(Construction::B),
            "C" | "c" => Ok(Construction::C),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Construction::A => "A",
            Construction::B => "B",
            Construction::C => "C",
        };
        f.write_str(s)
    }
}

fn warn_if_not_centered(p: &Polytope) {
    if !p.has_interior_origin() {
        warn!("construction applied to a polytope without the origin in its interior");
    } else if !p.is_reflexive() {
        warn!("construction applied to a non-reflexive polytope");
    }
}

/// Cartesian product `P × Q`.
pub fn product(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    Polytope::from_points(p.vertices().iter().flat_map(|a| q.vertices().iter().map(move |b| a.concat(b))))
}

/// Applies one construction.
pub fn construct(c: Construction, p: &Polytope) -> Result<Polytope> {
    warn_if_not_centered(p);
    let d = p.dim();
    let up = LatticeVector::unit(d + 1, d, 1);
    match c {
        Construction::A => Polytope::from_points(p.vertices().iter().flat_map(|v| [v.extended(-1), v.extended(1)])),
        Construction::B => Polytope::from_points(p.vertices().iter().map(|v| v.extended(0)).chain([up.clone(), -&up])),
        Construction::C => {
            Polytope::from_points(p.vertices().iter().flat_map(|v| [v.extended(-1), v.extended(0)]).chain([up]))
        }
    }
}

/// Applies a construction `k` times.
pub fn iterate(c: Construction, k: usize, p: &Polytope) -> Result<Polytope> {
    let mut cur = p.clone();
    for _ in 0..k {
        cur = construct(c, &cur)?;
    }
    Ok(cur)
}
