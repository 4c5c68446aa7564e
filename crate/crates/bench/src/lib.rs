//! Fixtures shared by the criterion benchmarks.

use evosieve::genesis::random_integral_basis;
use evosieve::{Basis, GeneratorSpec, LatticeVector, Ring};

/// Random integral basis of dimension `d` with the default generator.
pub fn integral_basis(d: usize, seed: u64) -> Basis {
    random_integral_basis(&GeneratorSpec::new(Ring::Integer, d, seed))
        .expect("generator accepts d ≥ 1")
}

/// Two fixed vectors of length `d` for crossover timing.
pub fn crossover_pair(d: usize) -> (LatticeVector, LatticeVector) {
    let u: Vec<i64> = (0..d as i64).map(|i| 17 * i - 40).collect();
    let v: Vec<i64> = (0..d as i64).map(|i| 1000 - 31 * i * i).collect();
    (LatticeVector::from_ints(&u), LatticeVector::from_ints(&v))
}
