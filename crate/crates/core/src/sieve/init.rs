use rand::Rng;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::genesis::rng::{substream, StreamPurpose};
use crate::ring::{Ring, RingScalar};
use crate::sieve::config::SieveConfig;
use crate::sieve::population::Population;
use crate::vector::LatticeVector;

/// Fresh Bernoulli draws per population slot before falling back.
pub const INIT_RESAMPLES: u32 = 32;
const FALLBACK_ATTEMPTS: u32 = 64;

/// Initial population `P = B·C` with `C` Bernoulli(ρ); Gaussian coefficients
/// draw real and imaginary bits independently.
///
/// Zero and duplicate columns are redrawn up to [`INIT_RESAMPLES`] times.
/// After that the slot takes the first basis column not yet present, and
/// failing that a binary combination drawn with density one half.
pub fn init_population(b: &Basis, cfg: &SieveConfig) -> Result<Population> {
    cfg.validate()?;
    let d = b.dim();
    let n = cfg.pop_size;
    if cfg.include_basis_columns && n < d {
        return Err(Error::InvalidConfig(format!(
            "population size {n} is smaller than the {d} basis columns it must include"
        )));
    }
    let mut p = Population::new(n);
    if cfg.include_basis_columns {
        for c in b.columns() {
            p.insert(c.clone());
        }
    }
    let mut slot = 0u32;
    while p.len() < n {
        let mut rng = substream(cfg.seed, StreamPurpose::Population, 0, slot);
        slot += 1;
        let mut placed = false;
        for _ in 0..INIT_RESAMPLES {
            let coords: Vec<RingScalar> = (0..d)
                .map(|_| bernoulli_coefficient(&mut rng, b.ring(), cfg.rho))
                .collect();
            let v = b.combine(&coords)?;
            if p.insert(v) {
                placed = true;
                break;
            }
        }
        if !placed {
            placed = b.columns().iter().any(|c| p.insert(c.clone()));
        }
        for _ in 0..FALLBACK_ATTEMPTS {
            if placed {
                break;
            }
            let coords: Vec<RingScalar> = (0..d)
                .map(|_| bernoulli_coefficient(&mut rng, b.ring(), 0.5))
                .collect();
            placed = p.insert(b.combine(&coords)?);
        }
        if !placed {
            return Err(Error::Generation(format!(
                "could not find {n} distinct nonzero population members"
            )));
        }
    }
    Ok(p)
}

fn bernoulli_coefficient<R: Rng>(rng: &mut R, ring: Ring, rho: f64) -> RingScalar {
    let re = rng.gen_bool(rho) as i64;
    match ring {
        Ring::Integer => RingScalar::int(re),
        Ring::GaussianInteger => RingScalar::gaussian(re, rng.gen_bool(rho) as i64),
    }
}

/// Population built from given vectors, e.g. a hand-picked starting set.
pub fn explicit_population(vectors: Vec<LatticeVector>, capacity: usize) -> Result<Population> {
    if vectors.iter().any(LatticeVector::is_zero) {
        return Err(Error::ZeroVector);
    }
    let p = Population::from_vectors(vectors, capacity);
    Ok(p)
}
