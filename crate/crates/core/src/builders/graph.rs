//! Polytopes attached to simple graphs.

use std::collections::BTreeSet;

use log::warn;

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, Polytope};

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, dropping loops and duplicate edges.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) out of range")));
            }
            if u != v {
                set.insert((u.min(v), u.max(v)));
            }
        }
        Ok(Graph { vertex_count, edges: set.into_iter().collect() })
    }

    pub fn star(d: usize) -> Result<Graph> {
        Graph::new(d, (1..d).map(|i| (0, i)))
    }

    pub fn path(d: usize) -> Result<Graph> {
        Graph::new(d, (1..d).map(|i| (i - 1, i)))
    }

    pub fn cycle(d: usize) -> Result<Graph> {
        Graph::new(d, (0..d).map(|i| (i, (i + 1) % d)))
    }

    pub fn complete(d: usize) -> Result<Graph> {
        Graph::new(d, (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))))
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.vertex_count];
        for s in 0..self.vertex_count {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(a, b) in &self.edges {
                    let w = if a == u {
                        b
                    } else if b == u {
                        a
                    } else {
                        continue;
                    };
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Parses `u v` lines with 1-indexed vertices; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut n = 0;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::MalformedBlock { line: lineno + 1, message: e.to_string() })?;
            let [u, v] = nums[..] else {
                return Err(Error::MalformedBlock { line: lineno + 1, message: "expected two vertices".into() });
            };
            if u == 0 || v == 0 {
                return Err(Error::MalformedBlock { line: lineno + 1, message: "vertices are 1-indexed".into() });
            }
            n = n.max(u).max(v);
            edges.push((u - 1, v - 1));
        }
        Graph::new(n, edges)
    }
}

/// The symmetric edge polytope `conv(±(e_i - e_j) : ij ∈ E)`, written in the
/// first `n-1` coordinates of the sum-zero hyperplane.
pub fn sym_edge_polytope(g: &Graph) -> Result<Polytope> {
    if !g.is_connected() {
        warn!("disconnected graph: symmetric edge polytope is not full-dimensional");
    }
    let n = g.vertex_count;
    if n < 2 {
        return Err(Error::InvalidInput("graph needs at least two vertices".into()));
    }
    let project = |v: Vec<i64>| LatticeVector::from_i64(&v[..n - 1]);
    let pts = g.edges.iter().flat_map(|&(i, j)| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v[j] = -1;
        let w: Vec<i64> = v.iter().map(|x| -x).collect();
        [project(v), project(w)]
    });
    Polytope::from_points(pts)
}

/// Result of [`bg_polytope`]: the polytope and whether the graph was bipartite
/// (only then is the polytope guaranteed reflexive).
#[derive(Clone, Debug)]
pub struct BgPolytope {
    pub polytope: Polytope,
    pub bipartite: bool,
}

/// `conv(±e_i, ±e_i ± e_j : ij ∈ E)`.
pub fn bg_polytope(g: &Graph) -> Result<BgPolytope> {
    let n = g.vertex_count;
    let bipartite = g.is_bipartite();
    if !bipartite {
        warn!("graph is not bipartite; the polytope need not be reflexive");
    }
    let mut pts: Vec<LatticeVector> =
        (0..n).flat_map(|i| [LatticeVector::unit(n, i, 1), LatticeVector::unit(n, i, -1)]).collect();
    for &(i, j) in &g.edges {
        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut v = LatticeVector::unit(n, i, a);
            v.0[j] = b.into();
            pts.push(v);
        }
    }
    Ok(BgPolytope { polytope: Polytope::from_points(pts)?, bipartite })
}
