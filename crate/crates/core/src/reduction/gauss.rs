use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{Ring, RingScalar};
use crate::vector::{inner_product, vec_sub_scaled, LatticeVector};

/// Gauss (Lagrange) reduction of two integer vectors of any dimension.
///
/// Returns `(u, v)` spanning the same rank-2 lattice with `‖u‖ ≤ ‖v‖` and
/// `|u·v| ≤ ‖u‖²/2`.
pub fn gauss_reduce_2d(
    b1: &LatticeVector,
    b2: &LatticeVector,
) -> Result<(LatticeVector, LatticeVector)> {
    if b1.ring() != Ring::Integer {
        return Err(Error::UnsupportedRing(b1.ring()));
    }
    if b1.is_zero() || b2.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (mut u, mut v) = (b1.clone(), b2.clone());
    if u.norm_sq() > v.norm_sq() {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        let dot = inner_product(&u, &v)?;
        let m = Int::div_round(dot.re(), u.norm_sq());
        v = vec_sub_scaled(&v, &RingScalar::int(m), &u)?;
        if v.is_zero() {
            return Err(Error::Degenerate(
                "input vectors are linearly dependent".into(),
            ));
        }
        if v.norm_sq() >= u.norm_sq() {
            return Ok((u, v));
        }
        std::mem::swap(&mut u, &mut v);
    }
}
