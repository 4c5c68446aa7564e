//! Exact lattice toolkit: Gaussian-integer module lattices, classical
//! reduction (Gram–Schmidt, Gauss, LLL, Hermite normal form), lattice
//! generators and knapsack encodings, and evolutionary sieving for short
//! vectors.

pub mod basis;
pub mod error;
pub mod genesis;
pub mod int;
pub mod metrics;
pub mod reduction;
pub mod ring;
pub mod sieve;
pub mod vector;

pub use basis::{det_abs_sq, Basis};
pub use error::{Error, Result};
pub use genesis::{GeneratorSpec, KnapsackInstance};
pub use int::Int;
pub use metrics::{DimConvention, QualityReport};
pub use reduction::{gauss_reduce_2d, gram_schmidt, hnf, lll, LllParams};
pub use ring::{round_nearest, ProjectionCoefficient, Ring, RingScalar};
pub use sieve::{GenerationReport, SieveConfig, StopReason, StopRule};
pub use vector::{inner_product, norm_sq, vec_sub_scaled, LatticeVector};
