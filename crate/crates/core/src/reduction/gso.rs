//! Gram–Schmidt orthogonalisation, in floating point and in exact rationals.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::Ring;

/// Slack allowed by floating-point size-reduction and Lovász checks.
pub const TAU_GS: f64 = 1e-9;
/// Relative threshold below which `‖b*_k‖²` is treated as zero.
pub const TAU_RANK: f64 = 1e-12;

/// Orthogonalised vectors `b*_j` and projection scalars `μ_{k,j}`.
#[derive(Clone, Debug)]
pub struct GramSchmidtData {
    pub ortho: Vec<Vec<f64>>,
    /// Lower triangular; `mu[k][j]` for `j < k`, ones on the diagonal.
    pub mu: Vec<Vec<f64>>,
    pub norms_sq: Vec<f64>,
}

/// Floating-point Gram–Schmidt of the columns of an integer basis.
pub fn gram_schmidt(b: &Basis) -> Result<GramSchmidtData> {
    if b.ring() != Ring::Integer {
        return Err(Error::UnsupportedRing(b.ring()));
    }
    let cols: Vec<Vec<f64>> = b
        .columns()
        .iter()
        .map(|c| c.entries().iter().map(|e| e.re().to_f64()).collect())
        .collect();
    gram_schmidt_f64(&cols)
}

pub(crate) fn gram_schmidt_f64(cols: &[Vec<f64>]) -> Result<GramSchmidtData> {
    let n = cols.len();
    let mut ortho: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut mu = vec![vec![0.0; n]; n];
    let mut norms_sq = Vec::with_capacity(n);
    for k in 0..n {
        let mut v = cols[k].clone();
        for j in 0..k {
            let m = dot(&ortho[j], &cols[k]) / norms_sq[j];
            mu[k][j] = m;
            for (x, y) in v.iter_mut().zip(&ortho[j]) {
                *x -= m * y;
            }
        }
        mu[k][k] = 1.0;
        let ns = dot(&v, &v);
        let scale = dot(&cols[k], &cols[k]);
        if !(ns > TAU_RANK * scale) {
            return Err(Error::Degenerate(format!(
                "column {k} is dependent on its predecessors"
            )));
        }
        norms_sq.push(ns);
        ortho.push(v);
    }
    Ok(GramSchmidtData {
        ortho,
        mu,
        norms_sq,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact Gram–Schmidt data over ℚ.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactGramSchmidt {
    pub mu: Vec<Vec<BigRational>>,
    pub norms_sq: Vec<BigRational>,
}

impl ExactGramSchmidt {
    pub fn mu_f64(&self, k: usize, j: usize) -> f64 {
        self.mu[k][j].to_f64().unwrap_or(f64::NAN)
    }
}

/// Exact Gram–Schmidt by explicit rational orthogonalisation of the columns.
pub fn gram_schmidt_exact(cols: &[Vec<Int>]) -> Result<ExactGramSchmidt> {
    let n = cols.len();
    let rat: Vec<Vec<BigRational>> = cols
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| BigRational::from_integer(x.to_big()))
                .collect()
        })
        .collect();
    let mut ortho: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    let mut norms_sq: Vec<BigRational> = Vec::with_capacity(n);
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for k in 0..n {
        let mut v = rat[k].clone();
        for j in 0..k {
            let m = rdot(&ortho[j], &rat[k]) / &norms_sq[j];
            for (x, y) in v.iter_mut().zip(&ortho[j]) {
                *x -= &m * y;
            }
            mu[k][j] = m;
        }
        mu[k][k] = BigRational::from_integer(1.into());
        let ns = rdot(&v, &v);
        if ns.is_zero() {
            return Err(Error::Degenerate(format!(
                "column {k} is dependent on its predecessors"
            )));
        }
        norms_sq.push(ns);
        ortho.push(v);
    }
    Ok(ExactGramSchmidt { mu, norms_sq })
}

fn rdot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut s = BigRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::big_rational;

    #[test]
    fn identity_is_orthonormal() {
        let g = gram_schmidt(&Basis::identity(Ring::Integer, 3)).unwrap();
        for k in 0..3 {
            for j in 0..k {
                assert_eq!(g.mu[k][j], 0.0);
            }
            assert_eq!(g.norms_sq[k], 1.0);
        }
    }

    #[test]
    fn two_dimensional_examples() {
        let good = Basis::from_int_columns(&[vec![1, 30], vec![40, 5]]).unwrap();
        let g = gram_schmidt(&good).unwrap();
        assert!((g.mu[1][0] - 190.0 / 901.0).abs() < 1e-15);

        let bad = Basis::from_int_columns(&[vec![95, 460], vec![47, 215]]).unwrap();
        let g = gram_schmidt(&bad).unwrap();
        assert!((g.mu[1][0] - 0.468_509_915_014_164_3).abs() < 1e-12);

        let exact = gram_schmidt_exact(&bad.int_columns().unwrap()).unwrap();
        assert_eq!(exact.mu[1][0], big_rational(103_365, 220_625));
        assert!((g.ortho[0][0] - 95.0).abs() < 1e-12 && (g.ortho[0][1] - 460.0).abs() < 1e-12);
    }

    #[test]
    fn dependent_columns_are_degenerate() {
        let cols = vec![vec![3.0, 4.0], vec![6.0, 8.0]];
        assert!(matches!(gram_schmidt_f64(&cols), Err(Error::Degenerate(_))));
        let cols = vec![
            vec![Int::from(3), Int::from(4)],
            vec![Int::from(6), Int::from(8)],
        ];
        assert!(matches!(
            gram_schmidt_exact(&cols),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn module_basis_unsupported() {
        let b = Basis::identity(Ring::GaussianInteger, 2);
        assert_eq!(
            gram_schmidt(&b).unwrap_err(),
            Error::UnsupportedRing(Ring::GaussianInteger)
        );
        assert!(gram_schmidt(&b.real_embedding()).is_ok());
    }
}
