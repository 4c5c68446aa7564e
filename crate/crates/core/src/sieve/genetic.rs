use std::collections::HashSet;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::genesis::rng::{standard_normal, substream, StreamPurpose};
use crate::sieve::config::{GenerationReport, SieveConfig, StopReason, StopRule};
use crate::sieve::crossover::mutated_crossover;
use crate::sieve::init::init_population;
use crate::sieve::population::{elite_select, pair_stream, Population};
use crate::vector::LatticeVector;

/// ChaCha words reserved per pair: one Bernoulli draw and two uniforms for
/// Box–Muller take six of them.
const WORDS_PER_PAIR: u128 = 8;
/// Pairs evaluated per parallel batch.
const PARALLEL_CHUNK: usize = 4096;

#[derive(Clone, Debug)]
pub struct SieveOutcome {
    /// Shortest vector seen; elite selection never drops it, so this is the
    /// head of the final population.
    pub best: LatticeVector,
    pub population: Population,
    pub history: Vec<GenerationReport>,
    pub stop: StopReason,
    /// Mean length of the initial population.
    pub initial_mean_norm: f64,
}

/// Builds the initial population from `b` and evolves it.
pub fn genetic_sieve(b: &Basis, cfg: &SieveConfig) -> Result<SieveOutcome> {
    let p0 = init_population(b, cfg)?;
    evolve(p0, cfg, |_| {})
}

/// Runs generations on `p0` until the stop rule fires, calling `observe`
/// with every report as soon as it is produced.
///
/// Each generation draws pairs in [`pair_stream`] order, crosses them with
/// `ξ = 1` or, with probability `mutation_prob`, `ξ ~ N(1, 1)`, and accepts a
/// child when it is nonzero, in neither `P` nor `R` up to a unit, and shorter than one of
/// its parents. It ends after `⌈n^budget_exponent⌉` acceptances or when the
/// pairs run out, and `P` becomes the `n` shortest of `P ∪ R`.
///
/// The random draws of pair `k` in generation `g` come from a fixed window
/// of substream `g`, so results are the same for any thread count.
pub fn evolve(
    p0: Population,
    cfg: &SieveConfig,
    mut observe: impl FnMut(&GenerationReport),
) -> Result<SieveOutcome> {
    cfg.validate()?;
    if p0.is_empty() {
        return Err(Error::InvalidConfig("initial population is empty".into()));
    }
    let pool = if cfg.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| Error::InvalidConfig(format!("cannot start worker threads: {e}")))?,
        )
    } else {
        None
    };
    let start = Instant::now();
    let n = cfg.pop_size;
    let budget = cfg.budget();
    let initial_mean_norm = p0.mean_norm();
    let mut p = elite_select(p0.into_members(), n);
    let mut prev_mean = initial_mean_norm;
    let mut streak = 0;
    let mut history = Vec::new();

    let stop = loop {
        let generation = history.len() + 1;
        let (children, attempts) = match &pool {
            None => breed_serial(&p, cfg, generation, budget),
            Some(pool) => pool.install(|| breed_parallel(&p, cfg, generation, budget)),
        };
        let accepted = children.len();
        p = elite_select(p.into_members().into_iter().chain(children), n);
        let best = p.best().expect("population stays nonempty");
        let report = GenerationReport {
            generation,
            best_norm_sq: best.norm_sq().clone(),
            best_norm: best.norm(),
            mean_norm: p.mean_norm(),
            accepted_children: accepted,
            crossovers_attempted: attempts,
            elapsed: start.elapsed(),
        };
        observe(&report);
        let mean = report.mean_norm;
        history.push(report);

        match cfg.stop_rule {
            StopRule::TargetNorm { w } => {
                if best.norm() <= w {
                    break StopReason::TargetReached;
                }
                if accepted == 0 && cfg.mutation_prob == 0.0 {
                    break StopReason::FixedPoint;
                }
            }
            StopRule::Plateau {
                epsilon,
                streak: needed,
            } => {
                streak = if (mean - prev_mean).abs() < epsilon {
                    streak + 1
                } else {
                    0
                };
                if streak >= needed {
                    break StopReason::Plateau;
                }
            }
        }
        prev_mean = mean;
        if generation >= cfg.max_generations {
            break StopReason::MaxGenerations;
        }
    };

    Ok(SieveOutcome {
        best: p.best().expect("population stays nonempty").clone(),
        population: p,
        history,
        stop,
        initial_mean_norm,
    })
}

fn generation_rng(cfg: &SieveConfig, generation: usize) -> Option<ChaCha8Rng> {
    (cfg.mutation_prob > 0.0)
        .then(|| substream(cfg.seed, StreamPurpose::Mutation, 0, generation as u32))
}

/// `ξ` for pair `k`.
fn draw_xi(rng: Option<&mut ChaCha8Rng>, cfg: &SieveConfig, k: usize) -> f64 {
    match rng {
        None => 1.0,
        Some(rng) => {
            rng.set_word_pos(k as u128 * WORDS_PER_PAIR);
            if rng.gen_bool(cfg.mutation_prob) {
                1.0 + standard_normal(rng)
            } else {
                1.0
            }
        }
    }
}

/// The child of `(u, v)` if it passes the parent-local part of the test.
fn candidate(
    u: &LatticeVector,
    v: &LatticeVector,
    xi: f64,
    p: &Population,
) -> Option<LatticeVector> {
    let t = mutated_crossover(u, v, xi)
        .expect("population members are nonzero and share a shape")
        .canonical_associate();
    let shorter = t.norm_sq() < u.norm_sq() || t.norm_sq() < v.norm_sq();
    (!t.is_zero() && shorter && !p.contains(&t)).then_some(t)
}

fn breed_serial(
    p: &Population,
    cfg: &SieveConfig,
    generation: usize,
    budget: usize,
) -> (Vec<LatticeVector>, usize) {
    let mut rng = generation_rng(cfg, generation);
    let mut r = Vec::new();
    let mut seen = HashSet::new();
    let mut attempts = 0;
    for (k, (u, v)) in pair_stream(p).enumerate() {
        if r.len() >= budget {
            break;
        }
        attempts += 1;
        let xi = draw_xi(rng.as_mut(), cfg, k);
        if let Some(t) = candidate(u, v, xi, p) {
            if seen.insert(t.clone()) {
                r.push(t);
            }
        }
    }
    (r, attempts)
}

/// Same result as [`breed_serial`]: children are computed in parallel
/// batches and then accepted in pair order.
fn breed_parallel(
    p: &Population,
    cfg: &SieveConfig,
    generation: usize,
    budget: usize,
) -> (Vec<LatticeVector>, usize) {
    let base_rng = generation_rng(cfg, generation);
    let mut r = Vec::new();
    let mut seen = HashSet::new();
    let mut attempts = 0;
    let mut pairs = pair_stream(p).enumerate();
    loop {
        let batch: Vec<(usize, (&LatticeVector, &LatticeVector))> =
            pairs.by_ref().take(PARALLEL_CHUNK).collect();
        if batch.is_empty() {
            break;
        }
        let results: Vec<Option<LatticeVector>> = batch
            .par_iter()
            .map(|&(k, (u, v))| {
                let mut rng = base_rng.clone();
                let xi = draw_xi(rng.as_mut(), cfg, k);
                candidate(u, v, xi, p)
            })
            .collect();
        for t in results {
            if r.len() >= budget {
                return (r, attempts);
            }
            attempts += 1;
            if let Some(t) = t {
                if seen.insert(t.clone()) {
                    r.push(t);
                }
            }
        }
    }
    (r, attempts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::Int;
    use crate::ring::Ring;

    fn eq1_with_eq3_population() -> Population {
        Population::from_vectors(
            [[46, 185], [94, 430], [97, 520], [475, 2300]]
                .iter()
                .map(|x| LatticeVector::from_ints(x)),
            4,
        )
    }

    #[test]
    fn finds_shortest_vector_of_demo_lattice() {
        let cfg = SieveConfig::new(4, 0.5, 1);
        let out = evolve(eq1_with_eq3_population(), &cfg, |_| {}).unwrap();
        assert_eq!(out.best.norm_sq(), &Int::from(901));
        assert_eq!(out.stop, StopReason::Plateau);
        for w in out.history.windows(2) {
            assert!(w[1].best_norm_sq <= w[0].best_norm_sq);
        }
    }

    #[test]
    fn budget_and_attempt_bounds() {
        let b = Basis::from_int_columns(&[
            vec![9, 4, 0, 1],
            vec![3, 11, 2, 0],
            vec![0, 5, 13, 7],
            vec![8, 0, 1, 17],
        ])
        .unwrap();
        let cfg = SieveConfig {
            max_generations: 5,
            ..SieveConfig::new(6, 0.5, 3)
        };
        let out = genetic_sieve(&b, &cfg).unwrap();
        for h in &out.history {
            assert!(h.accepted_children <= cfg.budget());
            assert!(h.crossovers_attempted <= 15);
        }
    }

    #[test]
    fn target_rule_and_fixed_point() {
        let cfg = SieveConfig {
            stop_rule: StopRule::TargetNorm { w: 31.0 },
            ..SieveConfig::new(4, 0.5, 1)
        };
        let out = evolve(eq1_with_eq3_population(), &cfg, |_| {}).unwrap();
        assert_eq!(out.stop, StopReason::TargetReached);
        let cfg = SieveConfig {
            stop_rule: StopRule::TargetNorm { w: 1.0 },
            ..cfg
        };
        let out = evolve(eq1_with_eq3_population(), &cfg, |_| {}).unwrap();
        assert_eq!(out.stop, StopReason::FixedPoint);
        assert_eq!(out.history.last().unwrap().accepted_children, 0);
    }

    #[test]
    fn parallel_matches_serial_with_mutation() {
        let b = crate::genesis::random_integral_basis(&crate::genesis::GeneratorSpec::new(
            Ring::Integer,
            8,
            4,
        ))
        .unwrap();
        let serial = SieveConfig {
            mutation_prob: 0.3,
            max_generations: 6,
            ..SieveConfig::new(40, 0.3, 9)
        };
        let parallel = SieveConfig {
            threads: 3,
            ..serial.clone()
        };
        let a = genetic_sieve(&b, &serial).unwrap();
        let c = genetic_sieve(&b, &parallel).unwrap();
        assert_eq!(a.population, c.population);
        let strip = |h: &[GenerationReport]| -> Vec<_> {
            h.iter()
                .map(|r| {
                    (
                        r.best_norm_sq.clone(),
                        r.mean_norm,
                        r.accepted_children,
                        r.crossovers_attempted,
                    )
                })
                .collect()
        };
        assert_eq!(strip(&a.history), strip(&c.history));
    }

    #[test]
    fn observer_sees_every_report() {
        let mut seen = 0;
        let cfg = SieveConfig::new(4, 0.5, 1);
        let out = evolve(eq1_with_eq3_population(), &cfg, |_| seen += 1).unwrap();
        assert_eq!(seen, out.history.len());
    }
}
