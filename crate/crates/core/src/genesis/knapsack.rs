//! Subset-sum instances and their lattice encoding.

use rand::Rng;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::genesis::rng::{substream, StreamPurpose};
use crate::int::Int;
use crate::ring::Ring;
use crate::vector::LatticeVector;

/// Weights `M = {m_1, …, m_n}` and target `S`; find `x ∈ {0,1}ⁿ` with `M·x = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackInstance {
    weights: Vec<Int>,
    target: Int,
}

impl KnapsackInstance {
    pub fn new(weights: Vec<Int>, target: Int) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidConfig(
                "knapsack needs at least one weight".into(),
            ));
        }
        if weights.iter().any(|m| m.signum() <= 0) || target.signum() <= 0 {
            return Err(Error::InvalidConfig(
                "knapsack weights and target must be positive".into(),
            ));
        }
        let total: Int = weights.iter().cloned().sum();
        if target > total {
            return Err(Error::InvalidConfig(
                "knapsack target exceeds the sum of weights".into(),
            ));
        }
        Ok(KnapsackInstance { weights, target })
    }

    pub fn from_u64(weights: &[u64], target: u64) -> Result<Self> {
        KnapsackInstance::new(
            weights.iter().map(|&m| Int::from(m)).collect(),
            Int::from(target),
        )
    }

    /// Parses `"m1,m2,…:S"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (w, t) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected 'weights:target', got '{s}'")))?;
        let weights = parse_weights(w)?;
        let target = t
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad knapsack target '{t}'")))?;
        KnapsackInstance::new(weights, target)
    }

    pub fn weights(&self) -> &[Int] {
        &self.weights
    }

    pub fn target(&self) -> &Int {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_solution(&self, x: &[bool]) -> bool {
        x.len() == self.len()
            && self
                .weights
                .iter()
                .zip(x)
                .filter(|(_, &b)| b)
                .map(|(m, _)| m.clone())
                .sum::<Int>()
                == self.target
    }

    /// Density `n / log₂(max m)`.
    pub fn density(&self) -> f64 {
        let max = self.weights.iter().max().expect("nonempty");
        self.len() as f64 / (max.ln() / std::f64::consts::LN_2)
    }
}

/// Comma-separated positive integers.
pub fn parse_weights(s: &str) -> Result<Vec<Int>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| Error::Parse(format!("bad knapsack weight '{t}'")))
        })
        .collect()
}

/// The `(n+1)×(n+1)` basis with columns `2e_k + m_k e_{n+1}` for `k ≤ n`
/// and `(1, …, 1, S)` last.
///
/// The determinant is `2ⁿ⁻¹(2S − ΣM)`, so instances with `2S = ΣM` have no
/// basis and give [`Error::Singular`].
pub fn knapsack_basis(inst: &KnapsackInstance) -> Result<Basis> {
    let n = inst.len();
    let mut cols: Vec<Vec<Int>> = (0..n)
        .map(|k| {
            let mut c = vec![Int::ZERO; n + 1];
            c[k] = Int::from(2);
            c[n] = inst.weights[k].clone();
            c
        })
        .collect();
    let mut last = vec![Int::ONE; n + 1];
    last[n] = inst.target.clone();
    cols.push(last);
    Basis::new(cols.iter().map(|c| LatticeVector::from_ints(c)).collect())
}

/// Reads `x` off a vector of shape `(±1, …, ±1, 0)`: `x_k = 1` iff `t_k > 0`,
/// trying `t` and then `-t`, and keeping whichever satisfies `M·x = S`.
pub fn knapsack_decode(t: &LatticeVector, inst: &KnapsackInstance) -> Option<Vec<bool>> {
    let n = inst.len();
    if t.ring() != Ring::Integer || t.dim() != n + 1 || !t.entries()[n].is_zero() {
        return None;
    }
    let signs: Option<Vec<i64>> = t.entries()[..n]
        .iter()
        .map(|e| match e.re().as_small() {
            Some(s @ (1 | -1)) => Some(s),
            _ => None,
        })
        .collect();
    let signs = signs?;
    for flip in [1, -1] {
        let x: Vec<bool> = signs.iter().map(|&s| s * flip > 0).collect();
        if inst.is_solution(&x) {
            return Some(x);
        }
    }
    None
}

/// Random instance with `m_1 ∈ [1, 2¹⁰]` and `m_k = 2m_{k−1} + r`,
/// `r ∈ [1, 2¹⁰]`, and a random nonempty planted solution.
pub fn random_superincreasing(n: usize, seed: u64) -> Result<(KnapsackInstance, Vec<bool>)> {
    if n == 0 {
        return Err(Error::InvalidConfig(
            "knapsack needs at least one weight".into(),
        ));
    }
    let mut rng = substream(seed, StreamPurpose::Knapsack, 0, n as u32);
    let mut weights = Vec::with_capacity(n);
    let mut prev = Int::ZERO;
    for _ in 0..n {
        let m = &(&prev * &Int::from(2)) + &Int::from(rng.gen_range(1..=1024i64));
        weights.push(m.clone());
        prev = m;
    }
    let mut x: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    if !x.contains(&true) {
        let k = rng.gen_range(0..n);
        x[k] = true;
    }
    let target = weights
        .iter()
        .zip(&x)
        .filter(|(_, &b)| b)
        .map(|(m, _)| m.clone())
        .sum();
    Ok((KnapsackInstance::new(weights, target)?, x))
}
