//! Gaussian heuristic, Hadamard ratio, approximation factor and exact
//! lattice membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::{Ring, RingScalar};
use crate::vector::LatticeVector;

/// Which dimension a Gaussian-integer lattice is measured in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimConvention {
    /// `d` and `|det B|`, treating the lattice as rank `d` over ℤ[i].
    RingDim,
    /// `2d` and `|det B|²`, the real embedding.
    #[default]
    RealDim,
}

impl std::str::FromStr for DimConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "ringdim" | "ring" => Ok(DimConvention::RingDim),
            "realdim" | "real" => Ok(DimConvention::RealDim),
            _ => Err(Error::Parse(format!("unknown dimension convention '{s}'"))),
        }
    }
}

/// `σ = √(D/2πe)·vol^{1/D}`, evaluated in the log domain.
pub fn gaussian_heuristic(b: &Basis, convention: DimConvention) -> Result<f64> {
    let det_sq = b.det_abs_sq();
    if det_sq.is_zero() {
        return Err(Error::Singular);
    }
    let d = b.dim() as f64;
    let (dim, ln_vol) = match (b.ring(), convention) {
        (Ring::GaussianInteger, DimConvention::RealDim) => (2.0 * d, det_sq.ln()),
        _ => (d, 0.5 * det_sq.ln()),
    };
    let two_pi_e = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    Ok((0.5 * (dim / two_pi_e).ln() + ln_vol / dim).exp())
}

/// `(|det B| / Π‖b_i‖)^{1/d}`.
pub fn hadamard_ratio(b: &Basis) -> Result<f64> {
    let det_sq = b.det_abs_sq();
    if det_sq.is_zero() {
        return Err(Error::Singular);
    }
    let ln_norms: f64 = b.columns().iter().map(|c| 0.5 * c.norm_sq().ln()).sum();
    let r = ((0.5 * det_sq.ln() - ln_norms) / b.dim() as f64).exp();
    Ok(r.min(1.0))
}

/// `√best_norm_sq / σ`.
pub fn approx_factor(best_norm_sq: &Int, sigma: f64) -> f64 {
    (0.5 * best_norm_sq.ln()).exp() / sigma
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QualityReport {
    pub sigma: f64,
    pub best_len: f64,
    pub alpha: f64,
    pub hadamard: f64,
    pub dim_convention: Option<DimConvention>,
}

impl QualityReport {
    /// Report for `b` with `best_norm_sq` as the length of the best vector found.
    pub fn new(b: &Basis, best_norm_sq: &Int, convention: DimConvention) -> Result<Self> {
        let sigma = gaussian_heuristic(b, convention)?;
        Ok(QualityReport {
            sigma,
            best_len: (0.5 * best_norm_sq.ln()).exp(),
            alpha: approx_factor(best_norm_sq, sigma),
            hadamard: hadamard_ratio(b)?,
            dim_convention: (b.ring() == Ring::GaussianInteger).then_some(convention),
        })
    }

    /// Report with the shortest basis column as the best vector.
    pub fn of_basis(b: &Basis, convention: DimConvention) -> Result<Self> {
        QualityReport::new(b, b.shortest_column().norm_sq(), convention)
    }
}

/// Solves `B·x = v` for many `v` against one basis, using a precomputed
/// integer multiple of `B⁻¹`.
#[derive(Clone, Debug)]
pub struct LatticeSolver {
    ring: Ring,
    dim: usize,
    /// `scaled_inverse = denom·B⁻¹` over the (real-embedded) basis.
    scaled_inverse: Vec<Vec<BigInt>>,
    denom: BigInt,
}

impl LatticeSolver {
    pub fn new(b: &Basis) -> Result<Self> {
        let real = b.real_embedding();
        let n = real.dim();
        // Row-major copy of the embedded matrix, augmented with the identity.
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..n)
                    .map(|c| BigRational::from_integer(real.entry(r, c).re().to_big()))
                    .collect();
                row.extend((0..n).map(|c| {
                    if c == r {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::Singular)?;
            m.swap(col, p);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            let pivot = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot).skip(col) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let denom = m
            .iter()
            .flat_map(|row| row[n..].iter())
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scaled_inverse = m
            .iter()
            .map(|row| {
                row[n..]
                    .iter()
                    .map(|q| q.numer() * (&denom / q.denom()))
                    .collect()
            })
            .collect();
        Ok(LatticeSolver {
            ring: b.ring(),
            dim: b.dim(),
            scaled_inverse,
            denom,
        })
    }

    /// Coordinates of `v` in the basis when they are ring elements.
    pub fn coordinates(&self, v: &LatticeVector) -> Result<Option<Vec<RingScalar>>> {
        if v.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring, v.ring()));
        }
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch(v.dim(), self.dim));
        }
        let rhs: Vec<BigInt> = v.real_embedding().iter().map(Int::to_big).collect();
        let mut y = Vec::with_capacity(rhs.len());
        for row in &self.scaled_inverse {
            let s: BigInt = row
                .iter()
                .zip(&rhs)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum();
            let (q, r) = s.div_rem(&self.denom);
            if !r.is_zero() {
                return Ok(None);
            }
            y.push(Int::from_big(q));
        }
        Ok(Some(match self.ring {
            Ring::Integer => y.into_iter().map(RingScalar::int).collect(),
            Ring::GaussianInteger => y
                .chunks(2)
                .map(|p| RingScalar::gaussian(p[0].clone(), p[1].clone()))
                .collect(),
        }))
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        matches!(self.coordinates(v), Ok(Some(_)))
    }
}

/// Exact coordinates of `v` in `b`, or `None` when `v ∉ L(B)`.
pub fn membership(b: &Basis, v: &LatticeVector) -> Result<Option<Vec<RingScalar>>> {
    LatticeSolver::new(b)?.coordinates(v)
}
