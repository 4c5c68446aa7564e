//! Dimension sweeps: generate, preprocess, sieve, and report one row per run.
//!
//! Config layout (TOML):
//!
//! ```toml
//! [defaults]
//! rho = 0.01
//! seed = 1
//!
//! [[run]]
//! ring = "int"
//! dim = 20
//! pop = 400
//! ```
//!
//! Integer runs are preprocessed with HNF then LLL unless `preprocess =
//! false`; module runs are sieved as generated.

use std::collections::HashMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use evosieve::genesis::{random_integral_basis, random_module_basis};
use evosieve::metrics::{approx_factor, gaussian_heuristic, LatticeSolver};
use evosieve::reduction::{hnf, lll};
use evosieve::sieve::{genetic_sieve, SieveOutcome};
use evosieve::{Basis, DimConvention, GeneratorSpec, Ring, SieveConfig, StopRule};
use serde::{Deserialize, Serialize};

use super::{lll_params, params_json};
use crate::args::BenchArgs;
use crate::error::{CliError, CliResult, ExitStatus};
use crate::io::{open_sink, read_input};
use crate::manifest::RunManifest;
use crate::report::csv_err;

pub const BENCH_HEADER: [&str; 14] = [
    "d",
    "sigma",
    "ell",
    "alpha",
    "g",
    "n",
    "wall_ms",
    "ring",
    "prep_ms",
    "lll_ell",
    "lll_alpha",
    "baseline_ell",
    "stop",
    "closure",
];

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunOptions {
    pub rho: Option<f64>,
    pub seed: Option<u64>,
    pub mutation: Option<f64>,
    pub max_generations: Option<usize>,
    pub preprocess: Option<bool>,
    pub delta: Option<String>,
    pub sigma: Option<DimConvention>,
    pub plateau_epsilon: Option<f64>,
    pub plateau_streak: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub ring: Ring,
    pub dim: usize,
    pub pop: usize,
    #[serde(flatten)]
    pub options: RunOptions,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    #[serde(default)]
    pub defaults: RunOptions,
    #[serde(default)]
    pub run: Vec<RunSpec>,
}

/// A run with every default filled in.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolvedRun {
    pub ring: Ring,
    pub dim: usize,
    pub pop: usize,
    pub rho: f64,
    pub seed: u64,
    pub mutation: f64,
    pub max_generations: usize,
    pub preprocess: bool,
    pub delta: String,
    pub sigma: DimConvention,
    pub plateau_epsilon: f64,
    pub plateau_streak: usize,
}

impl BenchConfig {
    pub fn parse(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::parse(format!("invalid bench config: {e}")))
    }

    pub fn resolved(&self) -> Vec<ResolvedRun> {
        let d = &self.defaults;
        self.run
            .iter()
            .map(|r| {
                let o = &r.options;
                ResolvedRun {
                    ring: r.ring,
                    dim: r.dim,
                    pop: r.pop,
                    rho: o.rho.or(d.rho).unwrap_or(0.01),
                    seed: o.seed.or(d.seed).unwrap_or(0),
                    mutation: o.mutation.or(d.mutation).unwrap_or(0.0),
                    max_generations: o.max_generations.or(d.max_generations).unwrap_or(1000),
                    preprocess: o
                        .preprocess
                        .or(d.preprocess)
                        .unwrap_or(r.ring == Ring::Integer),
                    delta: o
                        .delta
                        .clone()
                        .or_else(|| d.delta.clone())
                        .unwrap_or_else(|| "0.9999999".into()),
                    sigma: o.sigma.or(d.sigma).unwrap_or_default(),
                    plateau_epsilon: o.plateau_epsilon.or(d.plateau_epsilon).unwrap_or(1.0),
                    plateau_streak: o.plateau_streak.or(d.plateau_streak).unwrap_or(3),
                }
            })
            .collect()
    }
}

impl ResolvedRun {
    pub fn sieve_config(&self, threads: usize) -> SieveConfig {
        SieveConfig {
            mutation_prob: self.mutation,
            max_generations: self.max_generations,
            stop_rule: StopRule::Plateau {
                epsilon: self.plateau_epsilon,
                streak: self.plateau_streak,
            },
            threads,
            ..SieveConfig::new(self.pop, self.rho, self.seed)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub d: usize,
    pub sigma: f64,
    pub ell: f64,
    pub alpha: f64,
    pub g: usize,
    pub n: usize,
    pub wall_ms: u128,
    pub ring: Ring,
    pub prep_ms: u128,
    pub lll_ell: f64,
    pub lll_alpha: f64,
    pub baseline_ell: Option<f64>,
    pub stop: String,
    pub closure: bool,
}

impl BenchRow {
    fn record(&self) -> Vec<String> {
        vec![
            self.d.to_string(),
            self.sigma.to_string(),
            self.ell.to_string(),
            self.alpha.to_string(),
            self.g.to_string(),
            self.n.to_string(),
            self.wall_ms.to_string(),
            self.ring.to_string(),
            self.prep_ms.to_string(),
            self.lll_ell.to_string(),
            self.lll_alpha.to_string(),
            self.baseline_ell.map(|x| x.to_string()).unwrap_or_default(),
            self.stop.clone(),
            self.closure.to_string(),
        ]
    }
}

/// Everything one sweep entry produced.
pub struct BenchResult {
    pub row: BenchRow,
    /// Basis as generated.
    pub generated: Basis,
    /// Basis the sieve started from.
    pub sieved: Basis,
    pub outcome: SieveOutcome,
}

/// The generated basis and the basis to sieve, plus preprocessing time.
pub fn prepare(run: &ResolvedRun) -> CliResult<(Basis, Basis, u128)> {
    let gen = |e| CliError::from_lib(e, ExitStatus::Generation);
    let red = |e| CliError::from_lib(e, ExitStatus::Reduction);
    let spec = GeneratorSpec::new(run.ring, run.dim, run.seed);
    let generated = match run.ring {
        Ring::Integer => random_integral_basis(&spec),
        Ring::GaussianInteger => random_module_basis(&spec),
    }
    .map_err(gen)?;
    if !run.preprocess {
        return Ok((generated.clone(), generated, 0));
    }
    if run.ring != Ring::Integer {
        return Err(CliError::usage("preprocessing applies to integer lattices"));
    }
    let start = Instant::now();
    let params = lll_params(&run.delta, None)?;
    let sieved = lll(&hnf(&generated).map_err(red)?, &params).map_err(red)?;
    Ok((generated, sieved, start.elapsed().as_millis()))
}

pub fn bench_run(run: &ResolvedRun, threads: usize) -> CliResult<BenchResult> {
    let fail = |e| CliError::from_lib(e, ExitStatus::Failure);
    let (generated, sieved, prep_ms) = prepare(run)?;
    let lll_basis = if run.preprocess {
        sieved.clone()
    } else {
        lll(&generated, &lll_params(&run.delta, None)?)
            .map_err(|e| CliError::from_lib(e, ExitStatus::Reduction))?
    };
    let sigma = gaussian_heuristic(&generated, run.sigma).map_err(fail)?;
    let start = Instant::now();
    let outcome = genetic_sieve(&sieved, &run.sieve_config(threads))
        .map_err(|e| CliError::from_lib(e, ExitStatus::Generation))?;
    let wall_ms = start.elapsed().as_millis();
    let solver = LatticeSolver::new(&generated).map_err(fail)?;
    let lll_short = lll_basis.shortest_column().norm_sq().clone();
    let row = BenchRow {
        d: run.dim,
        sigma,
        ell: outcome.best.norm(),
        alpha: approx_factor(outcome.best.norm_sq(), sigma),
        g: outcome.history.len(),
        n: run.pop,
        wall_ms,
        ring: run.ring,
        prep_ms,
        lll_ell: lll_basis.shortest_column().norm(),
        lll_alpha: approx_factor(&lll_short, sigma),
        baseline_ell: None,
        stop: serde_json::to_value(outcome.stop)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default(),
        closure: outcome
            .population
            .members()
            .iter()
            .all(|v| solver.contains(v)),
    };
    Ok(BenchResult {
        row,
        generated,
        sieved,
        outcome,
    })
}

#[derive(Deserialize)]
struct BaselineRecord {
    d: usize,
    ell: f64,
    #[serde(default)]
    ring: Option<Ring>,
}

fn load_baseline(path: &Path) -> CliResult<HashMap<(Option<Ring>, usize), f64>> {
    let text = read_input(path)?;
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut map = HashMap::new();
    for rec in rdr.deserialize::<BaselineRecord>() {
        let r = rec.map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
        map.insert((r.ring, r.d), r.ell);
    }
    Ok(map)
}

pub fn run(
    a: &BenchArgs,
    argv: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let text = read_input(&a.config)?;
    let cfg = BenchConfig::parse(&text)?;
    let runs = cfg.resolved();
    if runs.is_empty() {
        return Err(CliError::usage(format!(
            "{} lists no [[run]] entries",
            a.config.display()
        )));
    }
    let baseline = match &a.baseline_csv {
        Some(p) => load_baseline(p)?,
        None => HashMap::new(),
    };
    let manifest = RunManifest::new(
        "bench",
        argv.to_vec(),
        serde_json::json!({ "args": params_json(a), "runs": params_json(&runs) }),
        None,
    )
    .with_input(&a.config, crate::io::sha256_hex(text.as_bytes()));

    let mut sink = open_sink(a.out.as_deref(), out)?;
    let mut w = csv::Writer::from_writer(&mut *sink);
    w.write_record(BENCH_HEADER).map_err(csv_err)?;
    w.flush()?;
    let mut unconverged = Vec::new();
    for run in &runs {
        let mut res = bench_run(run, a.threads)?;
        let row = &mut res.row;
        row.baseline_ell = baseline
            .get(&(Some(run.ring), run.dim))
            .or_else(|| baseline.get(&(None, run.dim)))
            .copied();
        if a.no_timing {
            row.wall_ms = 0;
            row.prep_ms = 0;
        }
        w.write_record(row.record()).map_err(csv_err)?;
        w.flush()?;
        writeln!(
            err,
            "{} d={} alpha={:.4} g={} stop={}",
            row.ring, row.d, row.alpha, row.g, row.stop
        )?;
        if !res.outcome.stop.converged() {
            unconverged.push(run.dim);
        }
        if !row.closure {
            return Err(CliError::new(
                ExitStatus::Failure,
                format!("closure audit failed at d={}", row.d),
            ));
        }
    }
    drop(w);
    sink.flush()?;
    drop(sink);
    if let Some(m) = &a.manifest {
        manifest.write(m)?;
    }
    if unconverged.is_empty() {
        Ok(())
    } else {
        Err(CliError::new(
            ExitStatus::NonConvergence,
            format!("runs without convergence: d={unconverged:?}"),
        ))
    }
}
