use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::genesis::rng::{substream, uniform_symmetric, StreamPurpose};
use crate::int::Int;
use crate::ring::{Ring, RingScalar};
use crate::vector::LatticeVector;

/// Singular draws are resampled this many times before giving up.
pub const MAX_RESAMPLES: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub dim: usize,
    pub ring: Ring,
    pub seed: u64,
    /// Entries are drawn from `[-entry_bound, entry_bound]`.
    pub entry_bound: u64,
    /// Other columns added to each column of a module basis.
    pub mix_count: usize,
}

impl GeneratorSpec {
    /// Defaults: `entry_bound = d³`, `mix_count = ⌊d/4⌋`.
    pub fn new(ring: Ring, dim: usize, seed: u64) -> Self {
        let d = dim as u64;
        GeneratorSpec {
            dim,
            ring,
            seed,
            entry_bound: d.saturating_pow(3).max(1),
            mix_count: dim / 4,
        }
    }

    pub fn with_entry_bound(mut self, bound: u64) -> Self {
        self.entry_bound = bound;
        self
    }

    pub fn with_mix_count(mut self, k: usize) -> Self {
        self.mix_count = k;
        self
    }

    fn validate(&self, ring: Ring) -> Result<()> {
        if self.ring != ring {
            return Err(Error::RingMismatch(ring, self.ring));
        }
        if self.dim == 0 || self.entry_bound == 0 {
            return Err(Error::InvalidConfig(
                "dimension and entry bound must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Uniform random integral basis; column `j` of attempt `a` is drawn from
/// its own substream.
pub fn random_integral_basis(spec: &GeneratorSpec) -> Result<Basis> {
    spec.validate(Ring::Integer)?;
    let m = Int::from(spec.entry_bound);
    for attempt in 0..MAX_RESAMPLES {
        let cols: Vec<LatticeVector> = (0..spec.dim)
            .map(|j| {
                let mut rng = substream(spec.seed, StreamPurpose::BasisColumn, attempt, j as u32);
                let entries: Vec<Int> = (0..spec.dim)
                    .map(|_| uniform_symmetric(&mut rng, &m))
                    .collect();
                LatticeVector::from_ints(&entries)
            })
            .collect();
        match Basis::new(cols) {
            Ok(b) => return Ok(b),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Generation(format!(
        "no nonsingular draw in {MAX_RESAMPLES} attempts"
    )))
}

/// Uniform random Gaussian-integer basis, then each column gets `mix_count`
/// other columns of the unmixed matrix added to it (chosen with replacement).
pub fn random_module_basis(spec: &GeneratorSpec) -> Result<Basis> {
    spec.validate(Ring::GaussianInteger)?;
    let d = spec.dim;
    let m = Int::from(spec.entry_bound);
    for attempt in 0..MAX_RESAMPLES {
        let raw: Vec<LatticeVector> = (0..d)
            .map(|j| {
                let mut rng = substream(spec.seed, StreamPurpose::BasisColumn, attempt, j as u32);
                let entries: Vec<RingScalar> = (0..d)
                    .map(|_| {
                        let re = uniform_symmetric(&mut rng, &m);
                        let im = uniform_symmetric(&mut rng, &m);
                        RingScalar::gaussian(re, im)
                    })
                    .collect();
                LatticeVector::from_entries_unchecked(Ring::GaussianInteger, entries)
            })
            .collect();
        let mixed: Vec<LatticeVector> = if d < 2 {
            raw
        } else {
            (0..d)
                .map(|i| {
                    let mut rng = substream(spec.seed, StreamPurpose::ModuleMix, attempt, i as u32);
                    let mut col = raw[i].clone();
                    for _ in 0..spec.mix_count {
                        let mut k = rand::Rng::gen_range(&mut rng, 0..d - 1);
                        if k >= i {
                            k += 1;
                        }
                        col = col.add(&raw[k]).expect("same shape");
                    }
                    col
                })
                .collect()
        };
        match Basis::new(mixed) {
            Ok(b) => return Ok(b),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Generation(format!(
        "no nonsingular draw in {MAX_RESAMPLES} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_is_deterministic_and_bounded() {
        let spec = GeneratorSpec::new(Ring::Integer, 6, 42);
        assert_eq!(spec.entry_bound, 216);
        let a = random_integral_basis(&spec).unwrap();
        assert_eq!(a, random_integral_basis(&spec).unwrap());
        assert_ne!(
            a,
            random_integral_basis(&GeneratorSpec {
                seed: 43,
                ..spec.clone()
            })
            .unwrap()
        );
        for c in a.columns() {
            for e in c.entries() {
                assert!(e.re().abs() <= Int::from(216));
            }
        }
    }

    #[test]
    fn forty_dim_bound() {
        let spec = GeneratorSpec::new(Ring::Integer, 40, 1);
        assert_eq!(spec.entry_bound, 64_000);
        let b = random_integral_basis(&spec).unwrap();
        assert!(b
            .columns()
            .iter()
            .flat_map(|c| c.entries())
            .all(|e| e.re().abs() <= Int::from(64_000)));
    }

    #[test]
    fn one_dim_is_nonzero() {
        for seed in 0..20 {
            let b = random_integral_basis(&GeneratorSpec::new(Ring::Integer, 1, seed)).unwrap();
            assert!(!b.entry(0, 0).is_zero());
        }
    }

    #[test]
    fn module_defaults_and_mixing() {
        let spec = GeneratorSpec::new(Ring::GaussianInteger, 20, 9);
        assert_eq!((spec.entry_bound, spec.mix_count), (8000, 5));
        let raw = random_module_basis(&spec.clone().with_mix_count(0)).unwrap();
        let bound = Int::from(8000);
        for e in raw.columns().iter().flat_map(|c| c.entries()) {
            assert!(e.re().abs() <= bound && e.im().abs() <= bound);
        }
        let mixed = random_module_basis(&spec).unwrap();
        assert_ne!(mixed, raw);
        assert_eq!(mixed, random_module_basis(&spec).unwrap());
    }

    #[test]
    fn two_dim_mixing_with_one_partner_is_always_singular() {
        // Both columns add the other: det scales by 1 - 1 = 0.
        let spec = GeneratorSpec::new(Ring::GaussianInteger, 2, 0).with_mix_count(1);
        assert!(matches!(
            random_module_basis(&spec),
            Err(Error::Generation(_))
        ));
    }

    #[test]
    fn ring_is_checked() {
        let spec = GeneratorSpec::new(Ring::GaussianInteger, 3, 0);
        assert!(matches!(
            random_integral_basis(&spec),
            Err(Error::RingMismatch(..))
        ));
    }
}
