//! Built-in two-dimensional example: a badly conditioned basis of a lattice
//! whose reduced basis is `(1, 30), (40, 5)`, and a starting population.

use evosieve::{Basis, LatticeVector};

pub fn demo_basis() -> Basis {
    Basis::from_int_columns(&[vec![95i64, 460], vec![47, 215]]).expect("demo basis is nonsingular")
}

pub fn demo_population() -> Vec<LatticeVector> {
    [[46i64, 185], [94, 430], [97, 520], [475, 2300]]
        .iter()
        .map(|x| LatticeVector::from_ints(x))
        .collect()
}
