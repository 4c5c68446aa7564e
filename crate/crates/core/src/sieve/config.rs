use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Int;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StopRule {
    /// Stop once the best vector has length at most `w`.
    TargetNorm { w: f64 },
    /// Stop once the mean population length changed by less than `epsilon`
    /// for `streak` generations in a row.
    Plateau { epsilon: f64, streak: usize },
}

impl Default for StopRule {
    fn default() -> Self {
        StopRule::Plateau {
            epsilon: 1.0,
            streak: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SieveConfig {
    /// Population size `n`.
    pub pop_size: usize,
    /// Bernoulli density of the initial coefficient matrix.
    pub rho: f64,
    /// Chance that a crossover draws `ξ ~ N(1, 1)` instead of `ξ = 1`.
    pub mutation_prob: f64,
    /// A generation stops after `⌈n^budget_exponent⌉` accepted children.
    pub budget_exponent: f64,
    pub stop_rule: StopRule,
    pub seed: u64,
    /// Seed the initial population with the basis columns.
    pub include_basis_columns: bool,
    pub max_generations: usize,
    /// Worker threads for crossovers; 1 runs serially. Results do not depend
    /// on this value.
    pub threads: usize,
}

impl SieveConfig {
    pub fn new(pop_size: usize, rho: f64, seed: u64) -> Self {
        SieveConfig {
            pop_size,
            rho,
            mutation_prob: 0.0,
            budget_exponent: 1.5,
            stop_rule: StopRule::default(),
            seed,
            include_basis_columns: true,
            max_generations: 1000,
            threads: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if self.pop_size == 0 {
            return bad("population size must be positive");
        }
        if !(self.rho > 0.0 && self.rho <= 1.0) {
            return bad("rho must lie in (0, 1]");
        }
        if !(0.0..1.0).contains(&self.mutation_prob) {
            return bad("mutation probability must lie in [0, 1)");
        }
        if !(self.budget_exponent >= 1.0 && self.budget_exponent.is_finite()) {
            return bad("budget exponent must be at least 1");
        }
        if self.max_generations == 0 {
            return bad("max generations must be positive");
        }
        if self.threads == 0 {
            return bad("thread count must be positive");
        }
        match self.stop_rule {
            StopRule::TargetNorm { w } if !(w > 0.0) => bad("target norm must be positive"),
            StopRule::Plateau { epsilon, streak } if !(epsilon > 0.0) || streak == 0 => {
                bad("plateau epsilon and streak must be positive")
            }
            _ => Ok(()),
        }
    }

    /// `⌈n^budget_exponent⌉` accepted children per generation.
    pub fn budget(&self) -> usize {
        (self.pop_size as f64).powf(self.budget_exponent).ceil() as usize
    }
}

/// Statistics of one generation, taken after elite selection.
#[derive(Clone, Debug, PartialEq)]
pub struct GenerationReport {
    pub generation: usize,
    pub best_norm_sq: Int,
    pub best_norm: f64,
    pub mean_norm: f64,
    pub accepted_children: usize,
    pub crossovers_attempted: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    TargetReached,
    Plateau,
    /// No child was accepted and nothing random is left to change that.
    FixedPoint,
    MaxGenerations,
}

impl StopReason {
    /// Whether the run ended by its stop rule rather than by a cap.
    pub fn converged(self) -> bool {
        matches!(self, StopReason::TargetReached | StopReason::Plateau)
    }
}
