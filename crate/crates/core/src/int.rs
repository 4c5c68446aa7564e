//! Exact integers with an inline small-value representation.
//!
//! Lattice entries in practice fit in a machine word, but reduction of
//! Hermite-normal-form bases and determinants routinely produce numbers of
//! hundreds of bits. [`Int`] stores values that fit in an `i64` inline and
//! promotes to a heap-allocated [`BigInt`] on overflow, so every operation is
//! exact while the common case never allocates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An arbitrary-precision integer.
///
/// Invariant: `Big` is only used for values outside the `i64` range, so the
/// derived `Eq`/`Hash` are value-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    pub fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    pub fn from_i128(v: i128) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(Box::new(BigInt::from(v))),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn as_small(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Int {
        self * self
    }

    /// Nearest `f64`; saturates to ±∞ beyond the float range.
    pub fn to_f64(&self) -> f64 {
        match self {
            Int::Small(v) => *v as f64,
            Int::Big(b) => b.to_f64().unwrap_or(if b.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }),
        }
    }

    /// Natural logarithm of a positive value, accurate for any magnitude.
    pub fn ln(&self) -> f64 {
        debug_assert!(self.signum() > 0);
        match self {
            Int::Small(v) => (*v as f64).ln(),
            Int::Big(b) => {
                let bits = b.bits();
                let shift = bits.saturating_sub(64);
                let top = (&**b >> shift).to_f64().unwrap_or(f64::MAX);
                top.ln() + shift as f64 * std::f64::consts::LN_2
            }
        }
    }

    /// Number of significant bits of `|self|`.
    pub fn bits(&self) -> u64 {
        match self {
            Int::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Int::Big(b) => b.bits(),
        }
    }

    /// `num / den` rounded to the nearest integer, ties away from zero.
    ///
    /// # Panics
    /// If `den` is not positive.
    pub fn div_round(num: &Int, den: &Int) -> Int {
        assert!(den.signum() > 0, "rounding divisor must be positive");
        if let (Int::Small(n), Int::Small(d)) = (num, den) {
            let (n, d) = (*n as i128, *d as i128);
            let q = (2 * n.abs() + d) / (2 * d);
            return Int::from_i128(if n < 0 { -q } else { q });
        }
        let (n, d) = (num.to_big(), den.to_big());
        let q = (BigInt::from(2) * n.abs() + &d).div_floor(&(BigInt::from(2) * &d));
        Int::from_big(if n.is_negative() { -q } else { q })
    }

    /// Exact quotient; the caller guarantees `den` divides `num`.
    pub fn div_exact(num: &Int, den: &Int) -> Int {
        match (num, den) {
            (Int::Small(n), Int::Small(d)) if !(*n == i64::MIN && *d == -1) => {
                debug_assert_eq!(n % d, 0);
                Int::Small(n / d)
            }
            _ => {
                let (q, r) = num.to_big().div_rem(&den.to_big());
                debug_assert!(r.is_zero());
                Int::from_big(q)
            }
        }
    }

    /// `(quotient, remainder)` with truncation toward zero.
    pub fn div_rem(&self, den: &Int) -> (Int, Int) {
        match (self, den) {
            (Int::Small(n), Int::Small(d)) if !(*n == i64::MIN && *d == -1) => {
                (Int::Small(n / d), Int::Small(n % d))
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&den.to_big());
                (Int::from_big(q), Int::from_big(r))
            }
        }
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        Int::from_i128(v as i128)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl From<&Int> for BigInt {
    fn from(v: &Int) -> Self {
        v.to_big()
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            // A big value is outside the i64 range, so its sign decides.
            (Int::Small(_), Int::Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Int::Big(a), Int::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Int::Big(a), Int::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => fmt::Display::fmt(v, f),
            Int::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Int::Small(v));
        }
        s.parse::<BigInt>().map(Int::from_big)
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::ONE
    }
}

impl<'a> Neg for &'a Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b Int> for &'a Int {
            type Output = Int;
            fn $method(self, rhs: &'b Int) -> Int {
                if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Int::Small(v);
                    }
                    return Int::from_i128((*a as i128) $op (*b as i128));
                }
                Int::from_big(self.to_big() $op rhs.to_big())
            }
        }

        impl $trait<Int> for Int {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                (&self).$method(&rhs)
            }
        }

        impl<'b> $trait<&'b Int> for Int {
            type Output = Int;
            fn $method(self, rhs: &'b Int) -> Int {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<Int> for &'a Int {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::ZERO, |acc, x| acc + x)
    }
}

impl serde::Serialize for Int {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Int::Small(v) => s.serialize_i64(*v),
            Int::Big(b) => s.collect_str(b),
        }
    }
}
