use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{lattice_index, LatticeVector, Polytope};

/// The design matrix of a lattice polytope: its lattice points after a
/// translation into the nonnegative orthant, in lexicographic order. The
/// implicit homogenizing row of ones is not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct DesignMatrix {
    dim: usize,
    columns: Vec<LatticeVector>,
    exponents: Vec<Vec<u32>>,
    shift: LatticeVector,
}

/// Design matrix of `P`. Fails unless the lattice points generate `Z^d`
/// affinely, which the parametrization needs to be injective.
pub fn design_matrix(p: &Polytope) -> Result<DesignMatrix> {
    let (q, shift) = p.translate_nonnegative();
    let columns = q.lattice_points().to_vec();
    let index = lattice_index(&columns);
    if !index.is_one() {
        return Err(Error::LatticeIndexNotOne(index.to_string()));
    }
    DesignMatrix::with_shift(columns, shift)
}

impl DesignMatrix {
    /// Design matrix from nonnegative columns, taken as given.
    pub fn from_columns(columns: Vec<LatticeVector>) -> Result<DesignMatrix> {
        let dim = columns.first().map_or(0, LatticeVector::dim);
        Self::with_shift(columns, LatticeVector::zero(dim))
    }

    fn with_shift(columns: Vec<LatticeVector>, shift: LatticeVector) -> Result<DesignMatrix> {
        let dim = shift.dim();
        let exponents = columns
            .iter()
            .map(|c| {
                if c.dim() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: c.dim() });
                }
                c.0.iter()
                    .map(|x| x.to_u32().ok_or_else(|| Error::InvalidInput(format!("exponent {x} not in u32"))))
                    .collect()
            })
            .collect::<Result<Vec<Vec<u32>>>>()?;
        Ok(DesignMatrix { dim, columns, exponents, shift })
    }

    /// Rows of `A` (without the row of ones).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of columns (lattice points).
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[LatticeVector] {
        &self.columns
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    /// Translation that was applied to the polytope's lattice points.
    pub fn shift(&self) -> &LatticeVector {
        &self.shift
    }

    /// Column index of a point in the translated coordinates.
    pub fn index_of(&self, point: &LatticeVector) -> Option<usize> {
        self.columns.binary_search(point).ok().or_else(|| self.columns.iter().position(|c| c == point))
    }

    /// Column index of a point in the polytope's original coordinates.
    pub fn index_of_original(&self, point: &LatticeVector) -> Option<usize> {
        self.index_of(&(point + &self.shift))
    }

    pub fn lattice_index(&self) -> BigInt {
        lattice_index(&self.columns)
    }

    /// The polytope spanned by the columns.
    pub fn polytope(&self) -> Result<Polytope> {
        Polytope::from_points(self.columns.iter().cloned())
    }

    /// Entry `a_{ki}` as `f64`.
    pub fn entry(&self, k: usize, i: usize) -> f64 {
        self.exponents[i][k] as f64
    }
}

/// Nonzero complex weights `c_i`, one per design matrix column.
#[derive(Clone, Debug, PartialEq)]
pub struct Scaling {
    pub weights: Vec<Complex64>,
}

impl Scaling {
    pub fn new(weights: Vec<Complex64>) -> Result<Scaling> {
        if let Some(i) = weights.iter().position(|w| w.norm() == 0.0) {
            return Err(Error::ZeroParameter(format!("weight {i}")));
        }
        Ok(Scaling { weights })
    }

    /// All weights equal to one.
    pub fn standard(n: usize) -> Scaling {
        Scaling { weights: vec![Complex64::new(1.0, 0.0); n] }
    }

    pub fn from_real(weights: &[f64]) -> Result<Scaling> {
        Scaling::new(weights.iter().map(|&w| Complex64::new(w, 0.0)).collect())
    }

    /// Standard weights except at the listed points, given in the design
    /// matrix's translated coordinates.
    pub fn with_points(a: &DesignMatrix, assignments: &[(&[i64], Complex64)]) -> Result<Scaling> {
        let mut w = vec![Complex64::new(1.0, 0.0); a.len()];
        for (p, c) in assignments {
            let v = LatticeVector::from_i64(p);
            let i = a.index_of(&v).ok_or_else(|| Error::InvalidInput(format!("point {v} not in design matrix")))?;
            w[i] = *c;
        }
        Scaling::new(w)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// A vector of nonnegative integer counts `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataVector {
    pub counts: Vec<u64>,
}

impl DataVector {
    pub fn new(counts: Vec<u64>) -> Result<DataVector> {
        if counts.iter().all(|&c| c == 0) {
            return Err(Error::ZeroSampleSize);
        }
        Ok(DataVector { counts })
    }

    /// Sample size `u_+`.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Sufficient statistics `A u`.
    pub fn sufficient_statistics(&self, a: &DesignMatrix) -> Vec<BigInt> {
        (0..a.dim())
            .map(|k| {
                a.exponents()
                    .iter()
                    .zip(&self.counts)
                    .map(|(e, &u)| BigInt::from(e[k]) * BigInt::from(u))
                    .fold(BigInt::zero(), |x, y| x + y)
            })
            .collect()
    }

    /// `b = A u / u_+` in the design matrix's translated coordinates.
    pub fn normalized_statistics(&self, a: &DesignMatrix) -> Vec<BigRational> {
        let total = BigInt::from(self.total());
        self.sufficient_statistics(a).into_iter().map(|s| BigRational::new(s, total.clone())).collect()
    }

    /// `b` in the polytope's original coordinates, as floats.
    pub fn original_statistics(&self, a: &DesignMatrix) -> Vec<f64> {
        self.normalized_statistics(a)
            .iter()
            .zip(a.shift().coords())
            .map(|(b, s)| (b - BigRational::from(s.clone())).to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}
