use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{round_nearest, ProjectionCoefficient, RingScalar};
use crate::vector::{check_compatible, inner_parts, sub_scaled_unchecked, LatticeVector};

/// `μ = uᴴv / ‖u‖²` as an exact rational.
pub fn crossover_coefficient(
    u: &LatticeVector,
    v: &LatticeVector,
) -> Result<ProjectionCoefficient> {
    check_compatible(u, v)?;
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (re, im) = inner_parts(u, v);
    Ok(ProjectionCoefficient::from_parts(
        u.ring(),
        &re,
        &im,
        u.norm_sq(),
    ))
}

/// `t = v − ⌈μ⌋·u`.
pub fn crossover(u: &LatticeVector, v: &LatticeVector) -> Result<LatticeVector> {
    check_compatible(u, v)?;
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (re, im) = inner_parts(u, v);
    let nsq = u.norm_sq();
    let k = RingScalar::new(u.ring(), Int::div_round(&re, nsq), Int::div_round(&im, nsq))?;
    Ok(subtract(v, &k, u))
}

/// `t = v − ⌈ξμ⌋·u`; `ξ = 1` is plain [`crossover`].
pub fn mutated_crossover(u: &LatticeVector, v: &LatticeVector, xi: f64) -> Result<LatticeVector> {
    if xi == 1.0 {
        return crossover(u, v);
    }
    let mu = crossover_coefficient(u, v)?;
    let k = round_nearest(&mu.scale(xi));
    Ok(subtract(v, &k, u))
}

fn subtract(v: &LatticeVector, k: &RingScalar, u: &LatticeVector) -> LatticeVector {
    if k.is_zero() {
        v.clone()
    } else {
        sub_scaled_unchecked(v, k, u)
    }
}

/// `‖v‖⁻¹`; reporting only, the engines compare exact squared norms.
pub fn fitness(v: &LatticeVector) -> Result<f64> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(1.0 / v.norm())
}
