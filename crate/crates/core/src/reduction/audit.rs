//! Independent check of the LLL postconditions.
//!
//! The checker orthogonalises the output from scratch and never looks at the
//! reduction's internal state.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::basis::Basis;
use crate::error::Result;
use crate::reduction::gso::{gram_schmidt, gram_schmidt_exact, TAU_GS};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct LllAudit {
    /// Pairs `(k, j)` with `|μ_{k,j}| > 1/2`.
    pub size_violations: Vec<(usize, usize)>,
    /// Indices `k` where the Lovász inequality fails between `k-1` and `k`.
    pub lovasz_violations: Vec<usize>,
    pub max_abs_mu: f64,
}

impl LllAudit {
    pub fn passed(&self) -> bool {
        self.size_violations.is_empty() && self.lovasz_violations.is_empty()
    }
}

/// Exact rational audit; no tolerance.
pub fn audit_lll(b: &Basis, delta: &BigRational) -> Result<LllAudit> {
    let b = b.real_embedding();
    let g = gram_schmidt_exact(&b.int_columns()?)?;
    let half = BigRational::new(1.into(), 2.into());
    let mut out = LllAudit::default();
    for k in 1..b.dim() {
        for j in 0..k {
            let m = g.mu[k][j].abs();
            out.max_abs_mu = out.max_abs_mu.max(m.to_f64().unwrap_or(f64::INFINITY));
            if m > half {
                out.size_violations.push((k, j));
            }
        }
        let mu = &g.mu[k][k - 1];
        if g.norms_sq[k] < (delta - mu * mu) * &g.norms_sq[k - 1] {
            out.lovasz_violations.push(k);
        }
    }
    Ok(out)
}

/// Floating-point audit with slack [`TAU_GS`] on both conditions.
pub fn audit_lll_f64(b: &Basis, delta: f64) -> Result<LllAudit> {
    let b = b.real_embedding();
    let g = gram_schmidt(&b)?;
    let mut out = LllAudit::default();
    for k in 1..b.dim() {
        for j in 0..k {
            let m = g.mu[k][j].abs();
            out.max_abs_mu = out.max_abs_mu.max(m);
            if m > 0.5 + TAU_GS {
                out.size_violations.push((k, j));
            }
        }
        let mu = g.mu[k][k - 1];
        let rhs = (delta - mu * mu) * g.norms_sq[k - 1];
        if g.norms_sq[k] < rhs - TAU_GS * rhs.abs().max(1.0) {
            out.lovasz_violations.push(k);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::big_rational;

    #[test]
    fn flags_bad_basis() {
        let bad = Basis::from_int_columns(&[vec![95, 460], vec![47, 215]]).unwrap();
        let a = audit_lll(&bad, &big_rational(3, 4)).unwrap();
        assert!(a.size_violations.is_empty());
        assert_eq!(a.lovasz_violations, vec![1]);
        assert!(!audit_lll_f64(&bad, 0.75).unwrap().passed());
    }

    #[test]
    fn accepts_good_basis() {
        let good = Basis::from_int_columns(&[vec![1, 30], vec![40, 5]]).unwrap();
        assert!(audit_lll(&good, &big_rational(99, 100)).unwrap().passed());
        assert!(audit_lll_f64(&good, 0.99).unwrap().passed());
    }

    #[test]
    fn flags_unreduced_mu() {
        let b = Basis::from_int_columns(&[vec![1, 0], vec![3, 1]]).unwrap();
        let a = audit_lll(&b, &big_rational(3, 4)).unwrap();
        assert_eq!(a.size_violations, vec![(1, 0)]);
        assert_eq!(a.max_abs_mu, 3.0);
    }
}
