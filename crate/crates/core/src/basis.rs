//! Square column bases and exact determinants.

use std::fmt;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{Ring, RingScalar};
use crate::vector::{self, LatticeVector};

/// A `d×d` full-rank matrix whose columns generate a lattice.
#[derive(Clone, PartialEq, Eq)]
pub struct Basis {
    ring: Ring,
    columns: Vec<LatticeVector>,
    det_abs_sq: Int,
}

impl Basis {
    /// Validates shape and ring, and rejects singular matrices.
    pub fn new(columns: Vec<LatticeVector>) -> Result<Self> {
        let d = columns.len();
        let first = columns.first().ok_or(Error::DimensionMismatch(0, 1))?;
        let ring = first.ring();
        for c in &columns {
            if c.ring() != ring {
                return Err(Error::RingMismatch(ring, c.ring()));
            }
            if c.dim() != d {
                return Err(Error::DimensionMismatch(c.dim(), d));
            }
        }
        let det_abs_sq = det_abs_sq_of(&columns);
        if det_abs_sq.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Basis {
            ring,
            columns,
            det_abs_sq,
        })
    }

    /// Columns whose determinant is already known (e.g. after a unimodular update).
    pub(crate) fn with_det_unchecked(columns: Vec<LatticeVector>, det_abs_sq: Int) -> Self {
        let ring = columns[0].ring();
        Basis {
            ring,
            columns,
            det_abs_sq,
        }
    }

    pub fn from_int_columns<I: Into<Int> + Clone>(columns: &[Vec<I>]) -> Result<Self> {
        Basis::new(
            columns
                .iter()
                .map(|c| LatticeVector::from_ints(c))
                .collect(),
        )
    }

    pub fn from_gaussian_columns<I: Into<Int> + Clone>(columns: &[Vec<(I, I)>]) -> Result<Self> {
        Basis::new(
            columns
                .iter()
                .map(|c| LatticeVector::from_gaussian(c))
                .collect(),
        )
    }

    pub fn identity(ring: Ring, d: usize) -> Self {
        let columns = (0..d).map(|i| LatticeVector::unit(ring, d, i)).collect();
        Basis {
            ring,
            columns,
            det_abs_sq: Int::ONE,
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn columns(&self) -> &[LatticeVector] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &LatticeVector {
        &self.columns[i]
    }

    pub fn into_columns(self) -> Vec<LatticeVector> {
        self.columns
    }

    /// Entry in `row` of column `col`.
    pub fn entry(&self, row: usize, col: usize) -> &RingScalar {
        &self.columns[col].entries()[row]
    }

    /// Cached `|det B|²`.
    pub fn det_abs_sq(&self) -> &Int {
        &self.det_abs_sq
    }

    /// Shortest column by the vector order.
    pub fn shortest_column(&self) -> &LatticeVector {
        self.columns.iter().min().expect("basis is nonempty")
    }

    /// `B·x`.
    pub fn combine(&self, coords: &[RingScalar]) -> Result<LatticeVector> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(coords.len(), self.dim()));
        }
        let mut acc = LatticeVector::zero(self.ring, self.dim());
        for (c, x) in self.columns.iter().zip(coords) {
            if !x.is_zero() {
                acc = vector::sub_scaled_unchecked(&acc, &x.neg(), c);
            }
        }
        Ok(acc)
    }

    /// Exchanges two columns.
    pub fn swap_columns(&self, i: usize, j: usize) -> Basis {
        let mut columns = self.columns.clone();
        columns.swap(i, j);
        Basis::with_det_unchecked(columns, self.det_abs_sq.clone())
    }

    /// `b_target ← b_target + k·b_source`, a unimodular update for `target ≠ source`.
    pub fn add_multiple(&self, target: usize, source: usize, k: &RingScalar) -> Result<Basis> {
        if target == source {
            return Err(Error::InvalidConfig(
                "column update needs distinct columns".into(),
            ));
        }
        let mut columns = self.columns.clone();
        columns[target] =
            vector::vec_sub_scaled(&self.columns[target], &k.neg(), &self.columns[source])?;
        Ok(Basis::with_det_unchecked(columns, self.det_abs_sq.clone()))
    }

    /// Multiplies every entry by the integer `c ≠ 0`.
    pub fn scaled(&self, c: i64) -> Result<Basis> {
        let k = RingScalar::int(c);
        Basis::new(self.columns.iter().map(|v| v.scale(&k)).collect())
    }

    /// Recomputes `|det B|²` from the entries, ignoring the cache.
    pub fn recompute_det_abs_sq(&self) -> Int {
        det_abs_sq_of(&self.columns)
    }

    /// The real embedding: each Gaussian entry `α+βi` becomes the block
    /// `[[α, −β], [β, α]]`, so column `j` maps to the columns for `b_j` and
    /// `i·b_j`. Integer bases are returned unchanged.
    pub fn real_embedding(&self) -> Basis {
        match self.ring {
            Ring::Integer => self.clone(),
            Ring::GaussianInteger => {
                let i_unit = RingScalar::gaussian(0, 1);
                let mut cols = Vec::with_capacity(2 * self.dim());
                for c in &self.columns {
                    cols.push(LatticeVector::from_ints(&c.real_embedding()));
                    cols.push(LatticeVector::from_ints(&c.scale(&i_unit).real_embedding()));
                }
                // |det| of the embedding equals |det B|², so its square is |det B|⁴.
                Basis::with_det_unchecked(cols, self.det_abs_sq.square())
            }
        }
    }

    /// Entries as an integer column matrix (integer ring only).
    pub(crate) fn int_columns(&self) -> Result<Vec<Vec<Int>>> {
        if self.ring != Ring::Integer {
            return Err(Error::UnsupportedRing(self.ring));
        }
        Ok(self
            .columns
            .iter()
            .map(|c| c.entries().iter().map(|e| e.re().clone()).collect())
            .collect())
    }

    pub(crate) fn from_int_matrix_unchecked(cols: Vec<Vec<Int>>, det_abs_sq: Int) -> Basis {
        let columns = cols
            .into_iter()
            .map(|c| {
                LatticeVector::from_entries_unchecked(
                    Ring::Integer,
                    c.into_iter().map(RingScalar::int).collect(),
                )
            })
            .collect();
        Basis::with_det_unchecked(columns, det_abs_sq)
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Basis")
            .field("ring", &self.ring)
            .field("columns", &self.columns)
            .field("det_abs_sq", &self.det_abs_sq)
            .finish()
    }
}

/// `|det B|²` by fraction-free (Bareiss) elimination over the exact ring.
pub fn det_abs_sq(b: &Basis) -> Int {
    b.det_abs_sq.clone()
}

pub(crate) fn det_abs_sq_of(columns: &[LatticeVector]) -> Int {
    determinant(columns).norm_sq()
}

/// Signed determinant of the column matrix.
pub(crate) fn determinant(columns: &[LatticeVector]) -> RingScalar {
    let n = columns.len();
    let ring = columns[0].ring();
    // Work on rows of the transpose; the determinant is unchanged.
    let mut m: Vec<Vec<RingScalar>> = columns.iter().map(|c| c.entries().to_vec()).collect();
    let mut prev = RingScalar::one(ring);
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return RingScalar::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn b_bad() -> Basis {
        Basis::from_int_columns(&[vec![95, 460], vec![47, 215]]).unwrap()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_abs_sq(&b_bad()), Int::from(1_428_025));
        let good = Basis::from_int_columns(&[vec![1, 30], vec![40, 5]]).unwrap();
        assert_eq!(det_abs_sq(&good), Int::from(1195 * 1195));
        assert_eq!(det_abs_sq(&Basis::identity(Ring::Integer, 5)), Int::ONE);
        assert_eq!(determinant(b_bad().columns()), RingScalar::int(-1195));
    }

    #[test]
    fn singular_rejected() {
        let r = Basis::from_int_columns(&[vec![3, 4], vec![6, 8]]);
        assert_eq!(r, Err(Error::Singular));
        let r = Basis::from_int_columns(&[vec![1, 2], vec![3]]);
        assert!(matches!(r, Err(Error::DimensionMismatch(..))));
    }

    #[test]
    fn gaussian_determinant() {
        // det [[1+i, 2], [0, 1-i]] = (1+i)(1-i) = 2
        let b =
            Basis::from_gaussian_columns(&[vec![(1, 1), (0, 0)], vec![(2, 0), (1, -1)]]).unwrap();
        assert_eq!(det_abs_sq(&b), Int::from(4));
        let e = b.real_embedding();
        assert_eq!(e.recompute_det_abs_sq(), Int::from(16));
        assert_eq!(e.det_abs_sq(), &Int::from(16));
    }

    #[test]
    fn pivoting_needed() {
        let b = Basis::from_int_columns(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(det_abs_sq(&b), Int::from(4));
        assert_eq!(determinant(b.columns()), RingScalar::int(-2));
    }

    #[test]
    fn combine_matches_hand_values() {
        let x = [RingScalar::int(-7), RingScalar::int(15)];
        assert_eq!(
            b_bad().combine(&x).unwrap(),
            LatticeVector::from_ints(&[40, 5])
        );
    }
}
