use std::io::Write;
use std::time::Instant;

use evosieve::genesis::knapsack_decode;
use evosieve::metrics::{approx_factor, gaussian_heuristic, LatticeSolver};
use evosieve::reduction::lll;
use evosieve::sieve::{evolve, explicit_population, init_population, naive_sieve, Population};
use evosieve::{Basis, GenerationReport, KnapsackInstance, SieveConfig, StopReason, StopRule};

use super::{lll_params, params_json};
use crate::args::SieveArgs;
use crate::demo::{demo_basis, demo_population};
use crate::error::{CliError, CliResult, ExitStatus};
use crate::io::{load_basis, open_sink};
use crate::manifest::RunManifest;
use crate::report::{HistoryWriter, Summary};

/// Default population size: ten per dimension, but no more than half of
/// the binary coefficient vectors.
pub fn default_pop(d: usize) -> usize {
    let half = if d >= 64 {
        usize::MAX
    } else {
        1usize << d.saturating_sub(1)
    };
    (10 * d).min(half).max(2)
}

pub fn config_from_args(a: &SieveArgs, d: usize) -> SieveConfig {
    let stop_rule = match a.target_norm {
        Some(w) => StopRule::TargetNorm { w },
        None => StopRule::Plateau {
            epsilon: a.plateau_epsilon,
            streak: a.plateau_streak,
        },
    };
    SieveConfig {
        pop_size: a
            .pop
            .unwrap_or_else(|| if a.demo2d { 4 } else { default_pop(d) }),
        rho: a.rho,
        mutation_prob: a.mutation,
        budget_exponent: a.budget_exponent,
        stop_rule,
        seed: a.seed,
        include_basis_columns: !a.no_basis_columns,
        max_generations: a.max_generations,
        threads: a.threads,
    }
}

pub fn run(
    a: &SieveArgs,
    argv: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let (basis, digest) = match &a.input {
        Some(p) => {
            let (b, d) = load_basis(p, a.ring)?;
            (b, Some(d))
        }
        None => (demo_basis(), None),
    };
    let basis = if a.lll {
        lll(&basis, &lll_params(&a.delta, None)?)
            .map_err(|e| CliError::from_lib(e, ExitStatus::Reduction))?
    } else {
        basis
    };
    let cfg = config_from_args(a, basis.dim());
    cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
    let knapsack = match &a.decode_knapsack {
        Some(s) => Some(KnapsackInstance::parse(s).map_err(|e| CliError::usage(e.to_string()))?),
        None => None,
    };
    let mut manifest = RunManifest::new(
        "sieve",
        argv.to_vec(),
        serde_json::json!({ "args": params_json(a), "config": params_json(&cfg) }),
        Some(a.seed),
    );
    if let (Some(p), Some(d)) = (&a.input, digest) {
        manifest = manifest.with_input(p, d);
    }

    let p0 = if a.demo2d {
        explicit_population(demo_population(), cfg.pop_size)
    } else {
        init_population(&basis, &cfg)
    }
    .map_err(|e| CliError::from_lib(e, ExitStatus::Generation))?;

    let timing = !a.no_timing;
    let start = Instant::now();
    let mut sink = open_sink(a.out.as_deref(), out)?;
    let mut writer = HistoryWriter::new(&mut *sink, a.format, timing)?;
    let (population, history, stop) = if a.naive {
        let (p, h) = naive_sieve(p0);
        for r in &h {
            writer.generation(r)?;
        }
        (p, h, None)
    } else {
        let mut write_err = None;
        let outcome = evolve(p0, &cfg, |r: &GenerationReport| {
            if write_err.is_none() {
                write_err = writer.generation(r).err();
            }
        })
        .map_err(|e| CliError::from_lib(e, ExitStatus::Generation))?;
        if let Some(e) = write_err {
            return Err(e);
        }
        (outcome.population, outcome.history, Some(outcome.stop))
    };

    let summary = summarize(&basis, &population, &history, stop, cfg.pop_size, a, start)?;
    writer.summary(&summary)?;
    drop(writer);
    sink.flush()?;
    drop(sink);
    writeln!(err, "{}", summary.line(timing))?;

    let mut status = Ok(());
    if let Some(inst) = &knapsack {
        match population
            .members()
            .iter()
            .find_map(|v| knapsack_decode(v, inst))
        {
            Some(x) => {
                let bits: Vec<&str> = x.iter().map(|&b| if b { "1" } else { "0" }).collect();
                writeln!(err, "x=({})", bits.join(","))?;
            }
            None => {
                status = Err(CliError::new(
                    ExitStatus::NonConvergence,
                    "no knapsack solution in the final population",
                ))
            }
        }
    }
    if let Some(m) = &a.manifest {
        manifest.write(m)?;
    }
    if !summary.closure {
        return Err(CliError::new(
            ExitStatus::Failure,
            "a population vector is not in the lattice",
        ));
    }
    if stop.is_some_and(|s| !s.converged()) {
        return Err(CliError::new(
            ExitStatus::NonConvergence,
            format!("stopped without converging ({})", stop_name(stop)),
        ));
    }
    status
}

fn stop_name(stop: Option<StopReason>) -> String {
    match stop {
        None => "fixed_point".into(),
        Some(s) => serde_json::to_value(s)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
    }
}

fn summarize(
    basis: &Basis,
    population: &Population,
    history: &[GenerationReport],
    stop: Option<StopReason>,
    n: usize,
    a: &SieveArgs,
    start: Instant,
) -> CliResult<Summary> {
    let fail = |e| CliError::from_lib(e, ExitStatus::Failure);
    let best = population
        .best()
        .ok_or_else(|| CliError::new(ExitStatus::Failure, "empty population"))?;
    let sigma = gaussian_heuristic(basis, a.sigma_convention).map_err(fail)?;
    let solver = LatticeSolver::new(basis).map_err(fail)?;
    Ok(Summary {
        d: basis.dim(),
        sigma,
        ell: best.norm(),
        alpha: approx_factor(best.norm_sq(), sigma),
        g: history.len(),
        n,
        stop: stop_name(stop),
        best: best.to_string(),
        closure: population.members().iter().all(|v| solver.contains(v)),
        wall_ms: start.elapsed().as_millis(),
    })
}
