//! Immutable lattice vectors with a cached exact squared norm.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{Ring, RingScalar};

/// Exact accumulator for sums of products; stays in `i128` until it overflows.
#[derive(Default)]
pub(crate) struct Acc {
    small: i128,
    big: Option<BigInt>,
}

impl Acc {
    #[inline]
    pub(crate) fn add_prod(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(x), Int::Small(y)) = (a, b) {
            let p = *x as i128 * *y as i128;
            match self.small.checked_add(p) {
                Some(s) => self.small = s,
                None => {
                    *self.big.get_or_insert_with(BigInt::default) += BigInt::from(self.small);
                    self.small = p;
                }
            }
        } else {
            *self.big.get_or_insert_with(BigInt::default) += a.to_big() * b.to_big();
        }
    }

    #[inline]
    pub(crate) fn sub_prod(&mut self, a: &Int, b: &Int) {
        self.add_prod(&-a, b);
    }

    pub(crate) fn finish(self) -> Int {
        match self.big {
            None => Int::from_i128(self.small),
            Some(b) => Int::from_big(b + BigInt::from(self.small)),
        }
    }
}

/// A vector of `d` ring scalars. Immutable; clones share storage.
#[derive(Clone)]
pub struct LatticeVector {
    ring: Ring,
    entries: Arc<[RingScalar]>,
    norm_sq: Int,
}

impl LatticeVector {
    /// Builds a vector, checking that every entry belongs to one ring.
    pub fn new(entries: Vec<RingScalar>) -> Result<Self> {
        let ring = match entries.first() {
            Some(e) => e.ring(),
            None => return Err(Error::DimensionMismatch(0, 1)),
        };
        if let Some(bad) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(ring, bad.ring()));
        }
        Ok(Self::from_entries_unchecked(ring, entries))
    }

    pub(crate) fn from_entries_unchecked(ring: Ring, entries: Vec<RingScalar>) -> Self {
        let mut acc = Acc::default();
        for e in &entries {
            acc.add_prod(e.re(), e.re());
            acc.add_prod(e.im(), e.im());
        }
        LatticeVector {
            ring,
            entries: entries.into(),
            norm_sq: acc.finish(),
        }
    }

    pub fn from_ints<I: Into<Int> + Clone>(values: &[I]) -> Self {
        let entries = values
            .iter()
            .map(|v| RingScalar::int(v.clone()))
            .collect::<Vec<_>>();
        Self::from_entries_unchecked(Ring::Integer, entries)
    }

    pub fn from_gaussian<I: Into<Int> + Clone>(values: &[(I, I)]) -> Self {
        let entries = values
            .iter()
            .map(|(a, b)| RingScalar::gaussian(a.clone(), b.clone()))
            .collect::<Vec<_>>();
        Self::from_entries_unchecked(Ring::GaussianInteger, entries)
    }

    pub fn zero(ring: Ring, dim: usize) -> Self {
        Self::from_entries_unchecked(ring, vec![RingScalar::zero(ring); dim])
    }

    /// The `i`-th standard unit vector.
    pub fn unit(ring: Ring, dim: usize, i: usize) -> Self {
        let mut e = vec![RingScalar::zero(ring); dim];
        e[i] = RingScalar::one(ring);
        Self::from_entries_unchecked(ring, e)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn entries(&self) -> &[RingScalar] {
        &self.entries
    }

    pub fn norm_sq(&self) -> &Int {
        &self.norm_sq
    }

    /// Euclidean length as a float (reporting only).
    pub fn norm(&self) -> f64 {
        self.norm_sq.to_f64().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.norm_sq.is_zero()
    }

    pub fn neg(&self) -> Self {
        LatticeVector {
            ring: self.ring,
            entries: self.entries.iter().map(RingScalar::neg).collect(),
            norm_sq: self.norm_sq.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_compatible(self, other)?;
        let e = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self::from_entries_unchecked(self.ring, e))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_compatible(self, other)?;
        let e = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Self::from_entries_unchecked(self.ring, e))
    }

    /// The multiple of `self` by a ring unit (`±1`, and `±i` for Gaussian
    /// vectors) whose first nonzero entry has positive real part and
    /// nonnegative imaginary part. Associates share one representative.
    pub fn canonical_associate(&self) -> Self {
        let Some(lead) = self.entries.iter().find(|e| !e.is_zero()) else {
            return self.clone();
        };
        let (re, im) = (lead.re().signum(), lead.im().signum());
        let unit = if re > 0 && im >= 0 {
            return self.clone();
        } else if re < 0 && im <= 0 {
            return self.neg();
        } else if im > 0 {
            RingScalar::gaussian(0, -1)
        } else {
            RingScalar::gaussian(0, 1)
        };
        LatticeVector {
            ring: self.ring,
            entries: self.entries.iter().map(|a| unit.mul(a)).collect(),
            norm_sq: self.norm_sq.clone(),
        }
    }

    /// `k·self`.
    pub fn scale(&self, k: &RingScalar) -> Self {
        let e = self.entries.iter().map(|a| k.mul(a)).collect();
        Self::from_entries_unchecked(self.ring, e)
    }

    /// Interleaved `(re, im)` pairs; the real embedding of a Gaussian vector.
    pub fn real_embedding(&self) -> Vec<Int> {
        match self.ring {
            Ring::Integer => self.entries.iter().map(|e| e.re().clone()).collect(),
            Ring::GaussianInteger => self
                .entries
                .iter()
                .flat_map(|e| [e.re().clone(), e.im().clone()])
                .collect(),
        }
    }
}

pub(crate) fn check_compatible(u: &LatticeVector, v: &LatticeVector) -> Result<()> {
    if u.ring != v.ring {
        return Err(Error::RingMismatch(u.ring, v.ring));
    }
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    Ok(())
}

/// `uᴴv = Σ conj(u_j)·v_j`; the ordinary dot product over ℤ.
pub fn inner_product(u: &LatticeVector, v: &LatticeVector) -> Result<RingScalar> {
    check_compatible(u, v)?;
    let (re, im) = inner_parts(u, v);
    Ok(RingScalar::from_parts_unchecked(u.ring, re, im))
}

/// Real and imaginary parts of `uᴴv` without ring checks.
pub(crate) fn inner_parts(u: &LatticeVector, v: &LatticeVector) -> (Int, Int) {
    let mut re = Acc::default();
    match u.ring {
        Ring::Integer => {
            for (a, b) in u.entries.iter().zip(v.entries.iter()) {
                re.add_prod(a.re(), b.re());
            }
            (re.finish(), Int::ZERO)
        }
        Ring::GaussianInteger => {
            // (a - bi)(c + di) = (ac + bd) + (ad - bc)i
            let mut im = Acc::default();
            for (a, b) in u.entries.iter().zip(v.entries.iter()) {
                re.add_prod(a.re(), b.re());
                re.add_prod(a.im(), b.im());
                im.add_prod(a.re(), b.im());
                im.sub_prod(a.im(), b.re());
            }
            (re.finish(), im.finish())
        }
    }
}

pub fn norm_sq(v: &LatticeVector) -> Int {
    v.norm_sq.clone()
}

/// `v − k·u`.
pub fn vec_sub_scaled(
    v: &LatticeVector,
    k: &RingScalar,
    u: &LatticeVector,
) -> Result<LatticeVector> {
    check_compatible(u, v)?;
    if v.ring == Ring::Integer && k.ring() == Ring::GaussianInteger {
        return Err(Error::RingMismatch(v.ring, k.ring()));
    }
    if k.is_zero() {
        return Ok(v.clone());
    }
    Ok(sub_scaled_unchecked(v, k, u))
}

pub(crate) fn sub_scaled_unchecked(
    v: &LatticeVector,
    k: &RingScalar,
    u: &LatticeVector,
) -> LatticeVector {
    let ring = v.ring;
    let entries = match ring {
        Ring::Integer => v
            .entries
            .iter()
            .zip(u.entries.iter())
            .map(|(a, b)| RingScalar::int(a.re() - &(k.re() * b.re())))
            .collect(),
        Ring::GaussianInteger => v
            .entries
            .iter()
            .zip(u.entries.iter())
            .map(|(a, b)| {
                let p = k.mul(b);
                RingScalar::from_parts_unchecked(ring, a.re() - p.re(), a.im() - p.im())
            })
            .collect(),
    };
    LatticeVector::from_entries_unchecked(ring, entries)
}

impl PartialEq for LatticeVector {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.entries == other.entries
    }
}

impl Eq for LatticeVector {}

impl Hash for LatticeVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.entries.hash(state);
    }
}

/// Shorter first; equal norms are ordered by their entries.
impl Ord for LatticeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm_sq
            .cmp(&other.norm_sq)
            .then_with(|| self.entries.iter().cmp(other.entries.iter()))
    }
}

impl PartialOrd for LatticeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} |v|^2={}", self.norm_sq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_associates() {
        let v = LatticeVector::from_ints(&[0, -3, 4]);
        assert_eq!(
            v.canonical_associate(),
            LatticeVector::from_ints(&[0, 3, -4])
        );
        assert_eq!(v.neg().canonical_associate(), v.canonical_associate());
        let g = LatticeVector::from_gaussian(&[(0, 0), (2, -1), (1, 1)]);
        let units = [(1, 0), (0, 1), (-1, 0), (0, -1)];
        let reps: Vec<_> = units
            .iter()
            .map(|&(a, b)| g.scale(&RingScalar::gaussian(a, b)).canonical_associate())
            .collect();
        assert!(reps.iter().all(|r| r == &reps[0]));
        assert_eq!(reps[0].entries()[1], RingScalar::gaussian(1, 2));
        assert_eq!(reps[0].norm_sq(), g.norm_sq());
        let lead_minus_i = LatticeVector::from_gaussian(&[(0, -1), (3, 0)]);
        assert_eq!(
            lead_minus_i.canonical_associate(),
            LatticeVector::from_gaussian(&[(1, 0), (0, 3)])
        );
    }

    #[test]
    fn inner_product_examples() {
        let u = LatticeVector::from_ints(&[1, 30]);
        let v = LatticeVector::from_ints(&[47, 215]);
        assert_eq!(inner_product(&u, &v).unwrap(), RingScalar::int(6497));

        let g = LatticeVector::from_gaussian(&[(1, 1), (2, 0)]);
        assert_eq!(inner_product(&g, &g).unwrap(), RingScalar::gaussian(6, 0));

        let z = LatticeVector::from_ints(&[0, 0]);
        assert_eq!(inner_product(&z, &v).unwrap(), RingScalar::int(0));
    }

    #[test]
    fn inner_product_errors() {
        let u = LatticeVector::from_ints(&[1, 2]);
        let w = LatticeVector::from_ints(&[1, 2, 3]);
        let g = LatticeVector::from_gaussian(&[(1, 0), (0, 1)]);
        assert_eq!(inner_product(&u, &w), Err(Error::DimensionMismatch(2, 3)));
        assert_eq!(
            inner_product(&u, &g),
            Err(Error::RingMismatch(Ring::Integer, Ring::GaussianInteger))
        );
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_sq(&LatticeVector::from_ints(&[1, 30])), Int::from(901));
        assert_eq!(
            norm_sq(&LatticeVector::from_ints(&[40, 5])),
            Int::from(1625)
        );
        assert_eq!(norm_sq(&LatticeVector::zero(Ring::Integer, 3)), Int::ZERO);
    }

    #[test]
    fn sub_scaled_examples() {
        let u = LatticeVector::from_ints(&[1, 30]);
        let v = LatticeVector::from_ints(&[47, 215]);
        let t = vec_sub_scaled(&v, &RingScalar::int(7), &u).unwrap();
        assert_eq!(t, LatticeVector::from_ints(&[40, 5]));
        assert_eq!(t.norm_sq(), &Int::from(1625));
        assert_eq!(vec_sub_scaled(&v, &RingScalar::int(0), &u).unwrap(), v);
        assert!(vec_sub_scaled(&v, &RingScalar::int(1), &v)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn mixed_ring_entries_rejected() {
        let r = LatticeVector::new(vec![RingScalar::int(1), RingScalar::gaussian(1, 1)]);
        assert!(matches!(r, Err(Error::RingMismatch(..))));
    }

    #[test]
    fn accumulator_overflow_is_exact() {
        let big = i64::MAX;
        let v = LatticeVector::from_ints(&[big, big, big, big]);
        let expected = BigInt::from(big) * BigInt::from(big) * 4;
        assert_eq!(v.norm_sq().to_big(), expected);
    }
}
