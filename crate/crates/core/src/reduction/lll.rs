//! The LLL algorithm.
//!
//! [`lll`] runs an exact integral variant: Gram–Schmidt data is kept as the
//! integers `d_i` (Gram determinants of leading columns) and
//! `λ_{k,j} = d_{j+1}·μ_{k,j}`, updated incrementally after every size
//! reduction and swap. Its control flow follows the textbook loop exactly
//! (size-reduce `b_k` against `b_{k-1}, …, b_1`, then test Lovász, swap and
//! step back on failure), so it makes the same decisions as
//! [`lll_reference`], which recomputes the orthogonalisation from scratch
//! after every column update.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::reduction::gso::{gram_schmidt_exact, gram_schmidt_f64, TAU_RANK};
use crate::vector::Acc;

#[derive(Clone, Debug, PartialEq)]
pub struct LllParams {
    /// Lovász constant, strictly between 0 and 1.
    pub delta: BigRational,
    /// Cap on outer-loop iterations; `None` means `64·d²·(1 + ⌈log₂ max‖b_i‖⌉)`.
    pub max_sweeps: Option<usize>,
}

impl LllParams {
    pub fn new(delta: BigRational) -> Result<Self> {
        if !(delta.is_positive() && delta < BigRational::one()) {
            return Err(Error::InvalidConfig(format!(
                "delta must lie in (0, 1), got {delta}"
            )));
        }
        Ok(LllParams {
            delta,
            max_sweeps: None,
        })
    }

    /// Parses `delta` exactly from a decimal (`0.9999999`) or fraction (`3/4`).
    pub fn from_decimal(s: &str) -> Result<Self> {
        LllParams::new(parse_rational(s)?)
    }

    pub fn with_max_sweeps(mut self, cap: usize) -> Self {
        self.max_sweeps = Some(cap);
        self
    }

    /// The iteration cap for a `d`-column basis whose longest column has
    /// `log2_len` bits of length.
    pub fn sweep_cap(&self, d: usize, log2_len: u64) -> usize {
        self.max_sweeps
            .unwrap_or_else(|| (64 * d * d).saturating_mul(1 + log2_len as usize))
    }

    pub fn delta_f64(&self) -> f64 {
        self.delta.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for LllParams {
    fn default() -> Self {
        LllParams {
            delta: BigRational::new(3.into(), 4.into()),
            max_sweeps: None,
        }
    }
}

/// Exact rational from `"a/b"`, a decimal like `"-0.125"`, or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part
            .chars()
            .chain(frac_part.chars())
            .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let q = BigRational::new(num, den);
    Ok(if neg { -q } else { q })
}

/// Reduced basis plus loop statistics.
#[derive(Clone, Debug)]
pub struct LllOutcome {
    pub basis: Basis,
    pub sweeps: usize,
    pub swaps: usize,
}

/// LLL-reduces `b`. A Gaussian-integer basis is reduced through its real
/// embedding, so the result is an integer basis of dimension `2d`.
pub fn lll(b: &Basis, params: &LllParams) -> Result<Basis> {
    lll_with_stats(b, params).map(|o| o.basis)
}

pub fn lll_with_stats(b: &Basis, params: &LllParams) -> Result<LllOutcome> {
    let work = b.real_embedding();
    let cols = work.int_columns()?;
    let cap = params.sweep_cap(cols.len(), log2_max_len(&work));
    let mut state = IntegralLll::new(cols)?;
    let (sweeps, swaps) = state.run(&params.delta, cap)?;
    Ok(LllOutcome {
        basis: Basis::from_int_matrix_unchecked(state.b, work.det_abs_sq().clone()),
        sweeps,
        swaps,
    })
}

fn log2_max_len(b: &Basis) -> u64 {
    b.columns()
        .iter()
        .map(|c| c.norm_sq().bits().div_ceil(2))
        .max()
        .unwrap_or(0)
}

struct IntegralLll {
    b: Vec<Vec<Int>>,
    /// `d[0] = 1`, `d[i+1] = ‖b*_0‖²·…·‖b*_i‖²`.
    d: Vec<Int>,
    /// `lam[k][j] = d[j+1]·μ_{k,j}` for `j < k`.
    lam: Vec<Vec<Int>>,
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Acc::default();
    for (x, y) in a.iter().zip(b) {
        acc.add_prod(x, y);
    }
    acc.finish()
}

impl IntegralLll {
    fn new(b: Vec<Vec<Int>>) -> Result<Self> {
        let n = b.len();
        let mut d = vec![Int::ONE; n + 1];
        let mut lam = vec![vec![Int::ZERO; n]; n];
        for k in 0..n {
            for j in 0..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 0..j {
                    u = Int::div_exact(&(&d[i + 1] * &u - &lam[k][i] * &lam[j][i]), &d[i]);
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.signum() <= 0 {
                        return Err(Error::Degenerate(format!(
                            "column {k} is dependent on its predecessors"
                        )));
                    }
                    d[k + 1] = u;
                }
            }
        }
        Ok(IntegralLll { b, d, lam })
    }

    /// Size-reduces `b_k` against `b_l` when `|μ_{k,l}| > 1/2`.
    fn reduce(&mut self, k: usize, l: usize) {
        let two_lam = &self.lam[k][l] * &Int::from(2);
        if two_lam.abs() <= self.d[l + 1] {
            return;
        }
        let q = Int::div_round(&self.lam[k][l], &self.d[l + 1]);
        let (lo, hi) = self.b.split_at_mut(k);
        for (x, y) in hi[0].iter_mut().zip(&lo[l]) {
            *x -= &(&q * y);
        }
        self.lam[k][l] = &self.lam[k][l] - &(&q * &self.d[l + 1]);
        for i in 0..l {
            let delta = &q * &self.lam[l][i];
            self.lam[k][i] -= &delta;
        }
    }

    /// `d[k+1]·d[k-1] ≥ δ·d[k]² − λ²`, i.e. `‖b*_k‖² ≥ (δ − μ²)‖b*_{k-1}‖²`.
    fn lovasz(&self, k: usize, delta: &BigRational) -> bool {
        let lam = &self.lam[k][k - 1];
        let lhs = &(&self.d[k + 1] * &self.d[k - 1]) + &lam.square();
        let lhs = BigInt::from(&lhs) * delta.denom();
        let rhs = BigInt::from(&self.d[k].square()) * delta.numer();
        lhs >= rhs
    }

    fn swap(&mut self, k: usize) {
        let n = self.b.len();
        self.b.swap(k - 1, k);
        for j in 0..k - 1 {
            let t = std::mem::take(&mut self.lam[k][j]);
            self.lam[k][j] = std::mem::replace(&mut self.lam[k - 1][j], t);
        }
        let lam = self.lam[k][k - 1].clone();
        let bnew = Int::div_exact(
            &(&self.d[k - 1] * &self.d[k + 1] + lam.square()),
            &self.d[k],
        );
        for i in k + 1..n {
            let t = self.lam[i][k].clone();
            self.lam[i][k] = Int::div_exact(
                &(&self.d[k + 1] * &self.lam[i][k - 1] - &lam * &t),
                &self.d[k],
            );
            self.lam[i][k - 1] =
                Int::div_exact(&(&bnew * &t + &lam * &self.lam[i][k]), &self.d[k + 1]);
        }
        self.d[k] = bnew;
    }

    fn run(&mut self, delta: &BigRational, cap: usize) -> Result<(usize, usize)> {
        let n = self.b.len();
        let (mut sweeps, mut swaps) = (0, 0);
        let mut k = 1;
        while k < n {
            sweeps += 1;
            if sweeps > cap {
                return Err(Error::MaxSweepsExceeded(cap));
            }
            for j in (0..k).rev() {
                self.reduce(k, j);
            }
            if self.lovasz(k, delta) {
                k += 1;
            } else {
                self.swap(k);
                swaps += 1;
                k = (k - 1).max(1);
            }
        }
        Ok((sweeps, swaps))
    }
}

/// Arithmetic used by [`lll_reference`] for its Gram–Schmidt recomputations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsoArithmetic {
    Exact,
    Float,
    /// Exact for `d ≤ 8`, floating point above; falls back to exact if the
    /// floating orthogonalisation loses rank.
    Auto,
}

/// Literal textbook LLL: after every size reduction and every swap the
/// whole orthogonalisation is recomputed from the current columns.
pub fn lll_reference(b: &Basis, params: &LllParams, arith: GsoArithmetic) -> Result<LllOutcome> {
    let work = b.real_embedding();
    let mut cols = work.int_columns()?;
    let n = cols.len();
    let cap = params.sweep_cap(n, log2_max_len(&work));
    let mut exact = match arith {
        GsoArithmetic::Exact => true,
        GsoArithmetic::Float => false,
        GsoArithmetic::Auto => n <= 8,
    };
    let half = BigRational::new(1.into(), 2.into());
    let delta_f = params.delta_f64();

    let (mut sweeps, mut swaps) = (0, 0);
    let mut k = 1;
    while k < n {
        sweeps += 1;
        if sweeps > cap {
            return Err(Error::MaxSweepsExceeded(cap));
        }
        for j in (0..k).rev() {
            let q = if exact {
                let g = gram_schmidt_exact(&cols)?;
                let mu = &g.mu[k][j];
                if mu.abs() > half {
                    Some(Int::div_round(
                        &Int::from_big(mu.numer().clone()),
                        &Int::from_big(mu.denom().clone()),
                    ))
                } else {
                    None
                }
            } else {
                match float_gso(&cols) {
                    Ok(g) if g.mu[k][j].abs() > 0.5 => {
                        Some(Int::from_i128(g.mu[k][j].round() as i128))
                    }
                    Ok(_) => None,
                    Err(_) if arith == GsoArithmetic::Auto => {
                        exact = true;
                        continue;
                    }
                    Err(e) => return Err(e),
                }
            };
            if let Some(q) = q {
                let bj = cols[j].clone();
                for (x, y) in cols[k].iter_mut().zip(&bj) {
                    *x -= &(&q * y);
                }
            }
        }
        let holds = if exact {
            let g = gram_schmidt_exact(&cols)?;
            let mu = &g.mu[k][k - 1];
            g.norms_sq[k] >= (&params.delta - mu * mu) * &g.norms_sq[k - 1]
        } else {
            let g = float_gso(&cols)?;
            let mu = g.mu[k][k - 1];
            g.norms_sq[k] >= (delta_f - mu * mu) * g.norms_sq[k - 1]
        };
        if holds {
            k += 1;
        } else {
            cols.swap(k - 1, k);
            swaps += 1;
            k = (k - 1).max(1);
        }
    }
    Ok(LllOutcome {
        basis: Basis::from_int_matrix_unchecked(cols, work.det_abs_sq().clone()),
        sweeps,
        swaps,
    })
}

fn float_gso(cols: &[Vec<Int>]) -> Result<crate::reduction::gso::GramSchmidtData> {
    let f: Vec<Vec<f64>> = cols
        .iter()
        .map(|c| c.iter().map(Int::to_f64).collect())
        .collect();
    let g = gram_schmidt_f64(&f)?;
    if g.norms_sq.iter().any(|x| !x.is_finite() || *x <= TAU_RANK) {
        return Err(Error::Degenerate(
            "floating-point orthogonalisation lost rank".into(),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{big_rational, Ring};

    fn norms(b: &Basis) -> Vec<Int> {
        let mut v: Vec<Int> = b.columns().iter().map(|c| c.norm_sq().clone()).collect();
        v.sort();
        v
    }

    #[test]
    fn parses_delta_exactly() {
        assert_eq!(
            parse_rational("0.9999999").unwrap(),
            big_rational(9_999_999, 10_000_000)
        );
        assert_eq!(parse_rational("3/4").unwrap(), big_rational(3, 4));
        assert_eq!(parse_rational("-.5").unwrap(), big_rational(-1, 2));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(LllParams::from_decimal("1").is_err());
        assert!(LllParams::from_decimal("0").is_err());
    }

    #[test]
    fn reduces_bad_basis() {
        let bad = Basis::from_int_columns(&[vec![95, 460], vec![47, 215]]).unwrap();
        let out = lll(&bad, &LllParams::default()).unwrap();
        assert_eq!(norms(&out), vec![Int::from(901), Int::from(1625)]);
        assert_eq!(out.recompute_det_abs_sq(), Int::from(1195 * 1195));
    }

    #[test]
    fn identity_unchanged() {
        let id = Basis::identity(Ring::Integer, 4);
        for delta in ["0.75", "0.99", "0.9999999"] {
            let p = LllParams::from_decimal(delta).unwrap();
            assert_eq!(lll(&id, &p).unwrap(), id);
        }
    }

    #[test]
    fn sweep_cap_is_enforced() {
        let bad = Basis::from_int_columns(&[vec![95, 460], vec![47, 215]]).unwrap();
        let p = LllParams::default().with_max_sweeps(1);
        assert_eq!(lll(&bad, &p).unwrap_err(), Error::MaxSweepsExceeded(1));
    }

    #[test]
    fn incremental_matches_reference() {
        let b = Basis::from_int_columns(&[
            vec![1, -7, 12, 3],
            vec![19, 4, -2, 8],
            vec![-5, 22, 1, 7],
            vec![3, 3, 17, -11],
        ])
        .unwrap();
        let p = LllParams::from_decimal("0.99").unwrap();
        let fast = lll_with_stats(&b, &p).unwrap();
        let slow = lll_reference(&b, &p, GsoArithmetic::Exact).unwrap();
        assert_eq!(fast.basis, slow.basis);
        assert_eq!((fast.sweeps, fast.swaps), (slow.sweeps, slow.swaps));
        let float = lll_reference(&b, &p, GsoArithmetic::Float).unwrap();
        assert_eq!(fast.basis, float.basis);
    }

    #[test]
    fn module_basis_goes_through_real_embedding() {
        let b =
            Basis::from_gaussian_columns(&[vec![(7, 3), (1, -2)], vec![(2, 9), (5, 5)]]).unwrap();
        let out = lll(&b, &LllParams::default()).unwrap();
        assert_eq!(out.ring(), Ring::Integer);
        assert_eq!(out.dim(), 4);
        assert_eq!(out.recompute_det_abs_sq(), b.det_abs_sq().square());
    }
}
