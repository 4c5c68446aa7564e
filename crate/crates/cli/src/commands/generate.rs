use std::io::Write;

use evosieve::genesis::{
    knapsack_basis, random_integral_basis, random_module_basis, write_basis_file, write_basis_json,
};
use evosieve::metrics::QualityReport;
use evosieve::reduction::{hnf, lll};
use evosieve::{Basis, DimConvention, GeneratorSpec, KnapsackInstance, Ring};

use super::{lll_params, params_json};
use crate::args::GenerateArgs;
use crate::error::{CliError, CliResult, ExitStatus};
use crate::io::emit;
use crate::manifest::RunManifest;

pub fn run(
    a: &GenerateArgs,
    argv: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let manifest = RunManifest::new("generate", argv.to_vec(), params_json(a), Some(a.seed));
    let b = build(a)?;
    let b = if a.preprocess {
        if b.ring() != Ring::Integer {
            return Err(CliError::usage("--preprocess applies to integer lattices"));
        }
        let p = lll_params(&a.delta, None)?;
        let h = hnf(&b).map_err(|e| CliError::from_lib(e, ExitStatus::Reduction))?;
        lll(&h, &p).map_err(|e| CliError::from_lib(e, ExitStatus::Reduction))?
    } else {
        b
    };
    let text = if a.json {
        write_basis_json(&b)
    } else {
        write_basis_file(&b)
    };
    emit(a.out.as_deref(), &text, out)?;
    let q = QualityReport::of_basis(&b, DimConvention::default())
        .map_err(|e| CliError::from_lib(e, ExitStatus::Generation))?;
    writeln!(
        err,
        "ring={} d={} shortest={:.2} sigma={:.2} alpha={:.4} hadamard={:.4}",
        b.ring(),
        b.dim(),
        q.best_len,
        q.sigma,
        q.alpha,
        q.hadamard
    )?;
    if let Some(m) = &a.manifest {
        manifest.write(m)?;
    }
    Ok(())
}

fn build(a: &GenerateArgs) -> CliResult<Basis> {
    let gen_err = |e| CliError::from_lib(e, ExitStatus::Generation);
    if let (Some(w), Some(t)) = (&a.knapsack, &a.target) {
        let inst = KnapsackInstance::parse(&format!("{w}:{t}"))
            .map_err(|e| CliError::usage(e.to_string()))?;
        return knapsack_basis(&inst).map_err(gen_err);
    }
    let d = a.dim.expect("clap requires --dim without --knapsack");
    if d == 0 {
        return Err(CliError::usage("--dim must be positive"));
    }
    let mut spec = GeneratorSpec::new(a.ring, d, a.seed);
    if let Some(m) = a.entry_bound {
        spec = spec.with_entry_bound(m);
    }
    if let Some(k) = a.mix_count {
        spec = spec.with_mix_count(k);
    }
    match a.ring {
        Ring::Integer => random_integral_basis(&spec),
        Ring::GaussianInteger => random_module_basis(&spec),
    }
    .map_err(gen_err)
}
