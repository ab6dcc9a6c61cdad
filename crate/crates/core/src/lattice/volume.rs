//! Normalized volume by recursive boundary triangulation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::normal_form::{affine_coordinates, determinant};
use super::polytope::raw_facets;
use super::{LatticeVector, Polytope};

/// Which vertex serves as the cone apex at every level of the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Apex {
    LexMin,
    LexMax,
}

/// Triangulates the convex hull of `points` (all of them vertices, affinely
/// spanning `Z^k`) into `k`-simplices given as lists of entries of `ids`.
fn triangulate(points: &[LatticeVector], ids: &[usize], apex: Apex) -> Vec<Vec<usize>> {
    let k = points[0].dim();
    if k == 0 {
        return vec![vec![ids[0]]];
    }
    if k == 1 {
        return vec![vec![ids[0], ids[1]]];
    }
    let base = match apex {
        Apex::LexMin => (0..points.len()).min_by(|&a, &b| points[a].cmp(&points[b])).unwrap(),
        Apex::LexMax => (0..points.len()).max_by(|&a, &b| points[a].cmp(&points[b])).unwrap(),
    };
    let mut out = Vec::new();
    for facet in raw_facets(points) {
        if facet.on.contains(&base) {
            continue;
        }
        let sub: Vec<LatticeVector> = facet.on.iter().map(|&i| points[i].clone()).collect();
        let sub_ids: Vec<usize> = facet.on.iter().map(|&i| ids[i]).collect();
        let local = affine_coordinates(&sub);
        for mut simplex in triangulate(&local, &sub_ids, apex) {
            simplex.push(ids[base]);
            out.push(simplex);
        }
    }
    out
}

impl Polytope {
    /// Triangulation into full-dimensional simplices, as vertex index lists.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        self.triangulation_with(Apex::LexMin)
    }

    pub fn triangulation_with(&self, apex: Apex) -> Vec<Vec<usize>> {
        let ids: Vec<usize> = (0..self.vertices().len()).collect();
        triangulate(self.vertices(), &ids, apex)
    }

    /// Normalized volume `d! · vol(P)`, the degree of the toric model.
    pub fn normalized_volume(&self) -> BigInt {
        self.normalized_volume_with(Apex::LexMin)
    }

    pub fn normalized_volume_with(&self, apex: Apex) -> BigInt {
        let v = self.vertices();
        self.triangulation_with(apex)
            .iter()
            .map(|s| {
                let rows: Vec<Vec<BigInt>> = s[1..].iter().map(|&i| (&v[i] - &v[s[0]]).0).collect();
                determinant(&rows).abs()
            })
            .fold(BigInt::zero(), |a, b| a + b)
    }
}
