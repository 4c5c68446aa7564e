//! Coefficient rings: the rational integers ℤ and the Gaussian integers ℤ[i].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "int")]
    Integer,
    #[serde(rename = "gaussian")]
    GaussianInteger,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Integer => "int",
            Ring::GaussianInteger => "gaussian",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "int" | "integer" | "z" => Ok(Ring::Integer),
            "gaussian" | "gaussian-integer" | "zi" | "module" => Ok(Ring::GaussianInteger),
            other => Err(Error::Parse(format!("unknown ring '{other}'"))),
        }
    }
}

/// An element `re + im·i` of the active ring. For [`Ring::Integer`] the
/// imaginary part is always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingScalar {
    ring: Ring,
    re: Int,
    im: Int,
}

impl RingScalar {
    pub fn int(v: impl Into<Int>) -> Self {
        RingScalar {
            ring: Ring::Integer,
            re: v.into(),
            im: Int::ZERO,
        }
    }

    pub fn gaussian(re: impl Into<Int>, im: impl Into<Int>) -> Self {
        RingScalar {
            ring: Ring::GaussianInteger,
            re: re.into(),
            im: im.into(),
        }
    }

    /// Builds a scalar of `ring`; fails if an integer would carry an imaginary part.
    pub fn new(ring: Ring, re: Int, im: Int) -> Result<Self> {
        if ring == Ring::Integer && !im.is_zero() {
            return Err(Error::UnsupportedRing(ring));
        }
        Ok(RingScalar { ring, re, im })
    }

    pub(crate) fn from_parts_unchecked(ring: Ring, re: Int, im: Int) -> Self {
        debug_assert!(ring == Ring::GaussianInteger || im.is_zero());
        RingScalar { ring, re, im }
    }

    pub fn zero(ring: Ring) -> Self {
        RingScalar {
            ring,
            re: Int::ZERO,
            im: Int::ZERO,
        }
    }

    pub fn one(ring: Ring) -> Self {
        RingScalar {
            ring,
            re: Int::ONE,
            im: Int::ZERO,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn re(&self) -> &Int {
        &self.re
    }

    pub fn im(&self) -> &Int {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> Int {
        self.re.square() + self.im.square()
    }

    pub fn conj(&self) -> Self {
        RingScalar {
            ring: self.ring,
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RingScalar {
            ring: self.ring,
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RingScalar {
            ring: self.ring,
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.ring == Ring::Integer && other.ring == Ring::Integer {
            return RingScalar::int(&self.re * &other.re);
        }
        let re = &self.re * &other.re - &self.im * &other.im;
        let im = &self.re * &other.im + &self.im * &other.re;
        RingScalar {
            ring: Ring::GaussianInteger,
            re,
            im,
        }
    }

    pub fn neg(&self) -> Self {
        RingScalar {
            ring: self.ring,
            re: -&self.re,
            im: -&self.im,
        }
    }

    /// Exact quotient in ℤ[i]; the caller guarantees divisibility.
    pub(crate) fn div_exact(&self, other: &Self) -> Self {
        if other.im.is_zero() {
            return RingScalar {
                ring: self.ring,
                re: Int::div_exact(&self.re, &other.re),
                im: Int::div_exact(&self.im, &other.re),
            };
        }
        let n = other.norm_sq();
        let p = self.mul(&other.conj());
        RingScalar {
            ring: self.ring,
            re: Int::div_exact(&p.re, &n),
            im: Int::div_exact(&p.im, &n),
        }
    }
}

impl Ord for RingScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for RingScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring {
            Ring::Integer => write!(f, "{}", self.re),
            Ring::GaussianInteger => {
                if self.im.signum() < 0 {
                    write!(f, "{}-{}i", self.re, self.im.abs())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An exact complex rational `re + im·i`, the projection scalar μ of the
/// crossover before rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionCoefficient {
    pub ring: Ring,
    pub re: BigRational,
    pub im: BigRational,
}

impl ProjectionCoefficient {
    pub fn real(re: BigRational) -> Self {
        ProjectionCoefficient {
            ring: Ring::Integer,
            re,
            im: BigRational::zero(),
        }
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        ProjectionCoefficient {
            ring: Ring::GaussianInteger,
            re,
            im,
        }
    }

    /// `re + im·i` as numerators over one positive denominator.
    pub fn from_parts(ring: Ring, re_num: &Int, im_num: &Int, den: &Int) -> Self {
        let den = den.to_big();
        ProjectionCoefficient {
            ring,
            re: BigRational::new(re_num.to_big(), den.clone()),
            im: BigRational::new(im_num.to_big(), den),
        }
    }

    /// Multiplies both components by `xi`, taken as the exact dyadic
    /// rational its `f64` encodes.
    pub fn scale(&self, xi: f64) -> Self {
        let xi = BigRational::from_float(xi).unwrap_or_else(BigRational::zero);
        ProjectionCoefficient {
            ring: self.ring,
            re: &self.re * &xi,
            im: &self.im * &xi,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

fn round_rational(q: &BigRational) -> Int {
    // BigRational keeps its denominator positive.
    Int::div_round(
        &Int::from_big(q.numer().clone()),
        &Int::from_big(q.denom().clone()),
    )
}

/// Componentwise nearest ring element, ties rounded away from zero.
pub fn round_nearest(z: &ProjectionCoefficient) -> RingScalar {
    let re = round_rational(&z.re);
    match z.ring {
        Ring::Integer => RingScalar::int(re),
        Ring::GaussianInteger => RingScalar::gaussian(re, round_rational(&z.im)),
    }
}

#[cfg(test)]
pub(crate) fn big_rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_examples() {
        let mu = ProjectionCoefficient::real(big_rational(6497, 901));
        assert_eq!(round_nearest(&mu), RingScalar::int(7));

        let half = ProjectionCoefficient::complex(big_rational(1, 2), big_rational(1, 2));
        assert_eq!(round_nearest(&half), RingScalar::gaussian(1, 1));

        let neg_half = ProjectionCoefficient::real(big_rational(-1, 2));
        assert_eq!(round_nearest(&neg_half), RingScalar::int(-1));
    }

    #[test]
    fn scale_is_exact_dyadic() {
        let mu = ProjectionCoefficient::real(big_rational(6497, 901));
        assert_eq!(round_nearest(&mu.scale(1.3)), RingScalar::int(9));
        assert_eq!(round_nearest(&mu.scale(0.1)), RingScalar::int(1));
        assert_eq!(mu.scale(1.0), mu);
    }

    #[test]
    fn gaussian_arithmetic() {
        let a = RingScalar::gaussian(1, 1);
        assert_eq!(a.mul(&a.conj()), RingScalar::gaussian(2, 0));
        assert_eq!(a.mul(&a), RingScalar::gaussian(0, 2));
        let p = RingScalar::gaussian(3, 4).mul(&RingScalar::gaussian(1, -2));
        assert_eq!(
            p.div_exact(&RingScalar::gaussian(1, -2)),
            RingScalar::gaussian(3, 4)
        );
        assert_eq!(RingScalar::gaussian(3, -4).to_string(), "3-4i");
        assert_eq!(RingScalar::gaussian(0, 0).to_string(), "0+0i");
    }

    #[test]
    fn integer_rejects_imaginary() {
        assert!(RingScalar::new(Ring::Integer, Int::ONE, Int::ONE).is_err());
    }
}
