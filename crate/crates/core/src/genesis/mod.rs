//! Lattice sources: random bases, knapsack encodings, and basis files.

mod format;
mod generators;
mod knapsack;
pub mod rng;

pub use format::{
    parse_basis_any, parse_basis_file, parse_basis_json, parse_gaussian_token, parse_vector,
    write_basis_file, write_basis_json,
};
pub use generators::{random_integral_basis, random_module_basis, GeneratorSpec, MAX_RESAMPLES};
pub use knapsack::{
    knapsack_basis, knapsack_decode, parse_weights, random_superincreasing, KnapsackInstance,
};
