use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::normal_form::{self, affine_rank, hyperplane_normal};
use super::LatticeVector;
use crate::error::{Error, Result};

/// A facet in outward form `normal · x <= offset` with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: LatticeVector,
    pub offset: BigInt,
    /// Indices into [`Polytope::vertices`], sorted.
    pub vertex_set: Vec<usize>,
}

/// A nonempty face of a polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Indices into [`Polytope::vertices`], sorted.
    pub vertex_set: Vec<usize>,
    pub dim: usize,
    /// All lattice points of the face, sorted lexicographically.
    pub lattice_points: Vec<LatticeVector>,
}

/// A full-dimensional lattice polytope in `Z^d`, stored through its vertices
/// (sorted lexicographically) and facet inequalities.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<LatticeVector>,
    facets: Vec<Facet>,
    lattice_points: OnceLock<Vec<LatticeVector>>,
    faces: OnceLock<Vec<Face>>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

/// A supporting hyperplane found by the brute-force hull, with the indices of
/// the input points lying on it.
pub(crate) struct RawFacet {
    pub normal: LatticeVector,
    pub offset: BigInt,
    pub on: Vec<usize>,
}

/// Supporting facet hyperplanes of a full-dimensional point set, found by
/// testing the hyperplane through every affinely independent `d`-subset.
pub(crate) fn raw_facets(points: &[LatticeVector]) -> Vec<RawFacet> {
    let n = points.len();
    let d = points[0].dim();
    let mut found: BTreeMap<LatticeVector, BigInt> = BTreeMap::new();
    if let Some(small) = small_facets(points) {
        found = small.into_iter().map(|(nv, o)| (LatticeVector::from_i64(&nv), BigInt::from(o))).collect();
    } else if d == 1 {
        let lo = points.iter().map(|p| p.0[0].clone()).min().unwrap();
        let hi = points.iter().map(|p| p.0[0].clone()).max().unwrap();
        found.insert(LatticeVector::from_i64(&[1]), hi);
        found.insert(LatticeVector::from_i64(&[-1]), -lo);
    } else {
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let subset: Vec<&LatticeVector> = idx.iter().map(|&i| &points[i]).collect();
            if let Some(normal) = hyperplane_normal(&subset) {
                let offset = normal.dot(subset[0]);
                let neg = -&normal;
                if found.get(&normal) == Some(&offset) || found.get(&neg).is_some_and(|o| *o == -&offset) {
                    if !next_combination(&mut idx, n) {
                        break;
                    }
                    continue;
                }
                let mut below = true;
                let mut above = true;
                for p in points {
                    let v = normal.dot(p);
                    if v > offset {
                        below = false;
                    } else if v < offset {
                        above = false;
                    }
                    if !below && !above {
                        break;
                    }
                }
                if below {
                    found.entry(normal).or_insert(offset);
                } else if above {
                    found.entry(neg).or_insert(-offset);
                }
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    found
        .into_iter()
        .map(|(normal, offset)| {
            let on = points.iter().enumerate().filter(|(_, p)| normal.dot(p) == offset).map(|(i, _)| i).collect();
            RawFacet { normal, offset, on }
        })
        .collect()
}

/// Largest coordinate magnitude for which [`small_facets`] is exact: every
/// minor then stays far below the `i128` range by Hadamard's bound.
const SMALL_COORD: i64 = 1 << 12;

/// Same enumeration as [`raw_facets`] in machine integers, for small
/// coordinates in dimension at most 8.
fn small_facets(points: &[LatticeVector]) -> Option<BTreeMap<Vec<i64>, i64>> {
    let d = points[0].dim();
    if !(2..=8).contains(&d) {
        return None;
    }
    let pts: Vec<Vec<i64>> = points.iter().map(|p| p.to_i64()).collect::<Option<_>>()?;
    if pts.iter().flatten().any(|x| x.abs() > SMALL_COORD) {
        return None;
    }
    let n = pts.len();
    let mut found: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut idx: Vec<usize> = (0..d).collect();
    let mut minor = vec![vec![0i128; d - 1]; d - 1];
    loop {
        let base = &pts[idx[0]];
        let rows: Vec<Vec<i128>> =
            idx[1..].iter().map(|&i| pts[i].iter().zip(base).map(|(a, b)| (a - b) as i128).collect()).collect();
        let mut normal = vec![0i128; d];
        for (j, nj) in normal.iter_mut().enumerate() {
            for (m, r) in minor.iter_mut().zip(&rows) {
                for (c, x) in m.iter_mut().enumerate() {
                    *x = r[if c < j { c } else { c + 1 }];
                }
            }
            let det = bareiss_i128(&mut minor);
            *nj = if j % 2 == 0 { det } else { -det };
        }
        let g = normal.iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
        if g != 0 {
            let normal: Vec<i64> = normal.iter().map(|x| (x / g) as i64).collect();
            let dot = |p: &[i64]| p.iter().zip(&normal).map(|(a, b)| a * b).sum::<i64>();
            let offset = dot(base);
            let neg: Vec<i64> = normal.iter().map(|x| -x).collect();
            let known = found.get(&normal) == Some(&offset) || found.get(&neg) == Some(&-offset);
            if !known {
                let (mut below, mut above) = (true, true);
                for p in &pts {
                    let v = dot(p);
                    below &= v <= offset;
                    above &= v >= offset;
                    if !below && !above {
                        break;
                    }
                }
                if below {
                    found.entry(normal).or_insert(offset);
                } else if above {
                    found.entry(neg).or_insert(-offset);
                }
            }
        }
        if !next_combination(&mut idx, n) {
            break;
        }
    }
    Some(found)
}

/// Fraction-free elimination; destroys `m`.
fn bareiss_i128(m: &mut [Vec<i128>]) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for i in 0..k {
        if m[i][i] == 0 {
            let Some(r) = (i + 1..k).find(|&r| m[r][i] != 0) else { return 0 };
            m.swap(i, r);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
            }
        }
        prev = m[i][i];
    }
    sign * m[k - 1][k - 1]
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl Polytope {
    /// Convex hull of a finite point set. Non-vertex points are dropped.
    pub fn from_points(points: impl IntoIterator<Item = LatticeVector>) -> Result<Polytope> {
        let set: BTreeSet<LatticeVector> = points.into_iter().collect();
        let points: Vec<LatticeVector> = set.into_iter().collect();
        let Some(first) = points.first() else {
            return Err(Error::InvalidInput("empty point set".into()));
        };
        let dim = first.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: p.dim() });
        }
        if dim == 0 {
            return Err(Error::InvalidInput("dimension zero".into()));
        }
        let r = affine_rank(&points);
        if r < dim {
            return Err(Error::NotFullDimensional { rank: r, dim });
        }
        let raw = raw_facets(&points);
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
        for (f, rf) in raw.iter().enumerate() {
            for &i in &rf.on {
                incident[i].push(f);
            }
        }
        // A point is a vertex exactly when the normals of its facets span R^d.
        let is_vertex: Vec<bool> = incident
            .iter()
            .map(|fs| {
                fs.len() >= dim
                    && normal_form::rank(&fs.iter().map(|&f| raw[f].normal.0.clone()).collect::<Vec<_>>()) == dim
            })
            .collect();
        let mut remap = vec![usize::MAX; points.len()];
        let mut vertices = Vec::new();
        for (i, p) in points.iter().enumerate() {
            if is_vertex[i] {
                remap[i] = vertices.len();
                vertices.push(p.clone());
            }
        }
        let facets = raw
            .into_iter()
            .map(|rf| Facet {
                vertex_set: rf.on.iter().filter(|&&i| is_vertex[i]).map(|&i| remap[i]).collect(),
                normal: rf.normal,
                offset: rf.offset,
            })
            .collect();
        Ok(Polytope { dim, vertices, facets, lattice_points: OnceLock::new(), faces: OnceLock::new() })
    }

    /// Convex hull of points given as `i64` rows.
    pub fn from_i64_points(points: &[Vec<i64>]) -> Result<Polytope> {
        Self::from_points(points.iter().map(|p| LatticeVector::from_i64(p)))
    }

    /// Convex hull of a vertex list (alias of [`Polytope::from_points`]).
    pub fn from_vertices(vertices: Vec<LatticeVector>) -> Result<Polytope> {
        Self::from_points(vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Whether `p` satisfies every facet inequality.
    pub fn contains(&self, p: &LatticeVector) -> bool {
        self.facets.iter().all(|f| f.normal.dot(p) <= f.offset)
    }

    /// Whether `p` lies strictly inside.
    pub fn contains_interior(&self, p: &LatticeVector) -> bool {
        self.facets.iter().all(|f| f.normal.dot(p) < f.offset)
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> &[LatticeVector] {
        self.lattice_points.get_or_init(|| self.enumerate_lattice_points())
    }

    fn enumerate_lattice_points(&self) -> Vec<LatticeVector> {
        let d = self.dim;
        let lo: Vec<BigInt> = (0..d).map(|j| self.vertices.iter().map(|v| v.0[j].clone()).min().unwrap()).collect();
        let hi: Vec<BigInt> = (0..d).map(|j| self.vertices.iter().map(|v| v.0[j].clone()).max().unwrap()).collect();
        if let Some(points) = self.enumerate_small(&lo, &hi) {
            return points;
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            let p = LatticeVector(cur.clone());
            if self.contains(&p) {
                out.push(p);
            }
            let mut j = d;
            loop {
                if j == 0 {
                    break 'outer;
                }
                j -= 1;
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    cur[j + 1..d].clone_from_slice(&lo[j + 1..d]);
                    break;
                }
            }
        }
        out
    }

    /// Fast path with `i64` arithmetic when every product stays small.
    fn enumerate_small(&self, lo: &[BigInt], hi: &[BigInt]) -> Option<Vec<LatticeVector>> {
        let d = self.dim;
        let lo: Vec<i64> = lo.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
        let hi: Vec<i64> = hi.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
        let bound = lo.iter().chain(&hi).map(|x| x.unsigned_abs()).max().unwrap_or(0);
        let mut ineqs = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let n = f.normal.to_i64()?;
            let nmax = n.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
            if (nmax as u128) * (bound as u128) * (d as u128) > (i64::MAX as u128) / 4 {
                return None;
            }
            ineqs.push((n, f.offset.to_i64()?));
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            if ineqs.iter().all(|(n, b)| n.iter().zip(&cur).map(|(a, x)| a * x).sum::<i64>() <= *b) {
                out.push(LatticeVector::from_i64(&cur));
            }
            let mut j = d;
            loop {
                if j == 0 {
                    break 'outer;
                }
                j -= 1;
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    cur[j + 1..d].copy_from_slice(&lo[j + 1..d]);
                    break;
                }
            }
        }
        Some(out)
    }

    /// Lattice points strictly inside the polytope.
    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        self.lattice_points().iter().filter(|p| self.contains_interior(p)).cloned().collect()
    }

    /// All nonempty faces, ordered by dimension and then by vertex set. The
    /// polytope itself is the last entry.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| self.compute_faces())
    }

    fn compute_faces(&self) -> Vec<Face> {
        let facet_sets: Vec<BTreeSet<usize>> =
            self.facets.iter().map(|f| f.vertex_set.iter().copied().collect()).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<BTreeSet<usize>> = Vec::new();
        for s in &facet_sets {
            if seen.insert(s.iter().copied().collect()) {
                queue.push(s.clone());
            }
        }
        while let Some(face) = queue.pop() {
            for s in &facet_sets {
                let inter: BTreeSet<usize> = face.intersection(s).copied().collect();
                if !inter.is_empty() && seen.insert(inter.iter().copied().collect()) {
                    queue.push(inter);
                }
            }
        }
        seen.insert((0..self.vertices.len()).collect());
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vs| {
                let pts: Vec<LatticeVector> = vs.iter().map(|&i| self.vertices[i].clone()).collect();
                let dim = affine_rank(&pts);
                let lattice_points = self.face_lattice_points(&vs);
                Face { vertex_set: vs, dim, lattice_points }
            })
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertex_set.cmp(&b.vertex_set)));
        faces
    }

    fn face_lattice_points(&self, vertex_set: &[usize]) -> Vec<LatticeVector> {
        let tight: Vec<&Facet> =
            self.facets.iter().filter(|f| vertex_set.iter().all(|v| f.vertex_set.binary_search(v).is_ok())).collect();
        self.lattice_points().iter().filter(|p| tight.iter().all(|f| f.normal.dot(p) == f.offset)).cloned().collect()
    }

    /// Number of faces of each dimension `0..d`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim];
        for face in self.faces() {
            if face.dim < self.dim {
                f[face.dim] += 1;
            }
        }
        f
    }

    /// Whether the origin is interior and every facet has the form `n·x <= 1`.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_one())
    }

    /// Whether the origin lies strictly inside.
    pub fn has_interior_origin(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_positive())
    }

    /// The dual polytope, whose vertices are the facet normals.
    pub fn dual(&self) -> Result<Polytope> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        Polytope::from_points(self.facets.iter().map(|f| f.normal.clone()))
    }

    /// The translate `P + shift`.
    pub fn translate(&self, shift: &LatticeVector) -> Polytope {
        let vertices = self.vertices.iter().map(|v| v + shift).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet {
                normal: f.normal.clone(),
                offset: &f.offset + f.normal.dot(shift),
                vertex_set: f.vertex_set.clone(),
            })
            .collect();
        Polytope { dim: self.dim, vertices, facets, lattice_points: OnceLock::new(), faces: OnceLock::new() }
    }

    /// Translates so that every coordinate is nonnegative with minimum zero.
    /// Returns the translate and the shift applied.
    pub fn translate_nonnegative(&self) -> (Polytope, LatticeVector) {
        let shift = LatticeVector(
            (0..self.dim).map(|j| -self.vertices.iter().map(|v| v.0[j].clone()).min().unwrap()).collect(),
        );
        (self.translate(&shift), shift)
    }

    /// Whether some lattice translate of the polytope is reflexive.
    pub fn is_reflexive_up_to_translation(&self) -> bool {
        self.center_at_interior_point().is_ok_and(|q| q.is_reflexive())
    }

    /// Translates the unique interior lattice point to the origin.
    pub fn center_at_interior_point(&self) -> Result<Polytope> {
        let interior = self.interior_lattice_points();
        match interior.as_slice() {
            [p] => Ok(self.translate(&-p)),
            _ => Err(Error::InvalidInput(format!("{} interior lattice points, expected 1", interior.len()))),
        }
    }

    /// Image under an integer matrix (rows of `u`), e.g. a unimodular map.
    pub fn transform(&self, u: &[Vec<BigInt>]) -> Result<Polytope> {
        Polytope::from_points(
            self.vertices
                .iter()
                .map(|v| LatticeVector(u.iter().map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum()).collect())),
        )
    }
}
