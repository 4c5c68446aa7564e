//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use evosieve::{Basis, Int, LatticeVector, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn int_basis(cols: &[Vec<i64>]) -> Basis {
    Basis::from_int_columns(cols).unwrap()
}

pub fn b_bad() -> Basis {
    int_basis(&[vec![95, 460], vec![47, 215]])
}

pub fn demo_population() -> Vec<LatticeVector> {
    [[46, 185], [94, 430], [97, 520], [475, 2300]]
        .iter()
        .map(|x| LatticeVector::from_ints(x))
        .collect()
}

/// Nonsingular integer basis with entries in `[-bound, bound]`.
pub fn random_int_basis(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Basis {
    loop {
        let cols: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        if let Ok(b) = Basis::from_int_columns(&cols) {
            return b;
        }
    }
}

pub fn random_gaussian_basis(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Basis {
    loop {
        let cols: Vec<Vec<(i64, i64)>> = (0..d)
            .map(|_| {
                (0..d)
                    .map(|_| (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)))
                    .collect()
            })
            .collect();
        if let Ok(b) = Basis::from_gaussian_columns(&cols) {
            return b;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_columns(b: &Basis) -> Vec<Vec<i64>> {
    assert_eq!(b.ring(), Ring::Integer);
    b.columns()
        .iter()
        .map(|c| {
            c.entries()
                .iter()
                .map(|e| e.re().as_small().expect("small entries"))
                .collect()
        })
        .collect()
}

/// Row norms of `B⁻¹` by float Gauss–Jordan.
fn inverse_row_norms(cols: &[Vec<i64>]) -> Vec<f64> {
    let d = cols.len();
    let mut m: Vec<Vec<f64>> = (0..d)
        .map(|r| {
            let mut row: Vec<f64> = (0..d).map(|c| cols[c][r] as f64).collect();
            row.extend((0..d).map(|c| if c == r { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d)
            .max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()))
            .unwrap();
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..d {
            if r != c {
                let f = m[r][c];
                let pivot_row = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    (0..d)
        .map(|r| m[r][d..].iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect()
}

/// Exact `λ₁²` of a small integer lattice by enumerating every coefficient
/// vector that could beat the shortest column. `None` when the box is too big.
pub fn lambda1_sq(b: &Basis) -> Option<Int> {
    let cols = small_columns(b);
    let d = cols.len();
    let r = b.shortest_column().norm();
    let bounds: Vec<i64> = inverse_row_norms(&cols)
        .iter()
        .map(|n| (n * r * (1.0 + 1e-9)).floor() as i64 + 1)
        .collect();
    let points: f64 = bounds.iter().map(|&k| (2 * k + 1) as f64).product();
    if points > 4e6 {
        return None;
    }
    let mut best: Option<i128> = None;
    let mut x: Vec<i64> = bounds.iter().map(|k| -k).collect();
    loop {
        if x.iter().any(|&c| c != 0) {
            let n: i128 = (0..d)
                .map(|row| {
                    let s: i128 = (0..d).map(|c| x[c] as i128 * cols[c][row] as i128).sum();
                    s * s
                })
                .sum();
            best = Some(best.map_or(n, |b| b.min(n)));
        }
        let mut i = 0;
        loop {
            if i == d {
                return best.map(Int::from_i128);
            }
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = -bounds[i];
            i += 1;
        }
    }
}

/// Every subset solving the instance, by enumeration.
pub fn subset_solutions(weights: &[Int], target: &Int) -> Vec<Vec<bool>> {
    let n = weights.len();
    (0u64..1 << n)
        .map(|mask| (0..n).map(|k| mask >> k & 1 == 1).collect::<Vec<bool>>())
        .filter(|x| {
            let s: Int = weights
                .iter()
                .zip(x)
                .filter(|(_, &b)| b)
                .map(|(m, _)| m.clone())
                .sum();
            &s == target
        })
        .collect()
}
