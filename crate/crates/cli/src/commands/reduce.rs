use std::io::Write;

use evosieve::genesis::{write_basis_file, write_basis_json};
use evosieve::metrics::hadamard_ratio;
use evosieve::reduction::{hnf, lll_with_stats};
use evosieve::Basis;

use super::{lll_params, params_json};
use crate::args::ReduceArgs;
use crate::error::{CliError, CliResult, ExitStatus};
use crate::io::{emit, load_basis};
use crate::manifest::RunManifest;

pub fn run(
    a: &ReduceArgs,
    argv: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let (b, digest) = load_basis(&a.input, a.ring)?;
    let manifest = RunManifest::new("reduce", argv.to_vec(), params_json(a), None)
        .with_input(&a.input, digest);
    let red = |e| CliError::from_lib(e, ExitStatus::Reduction);
    let params = lll_params(&a.delta, a.max_sweeps)?;
    let before = describe(&b).map_err(red)?;
    let mut stats = String::new();
    let reduced = if a.hnf_only {
        hnf(&b).map_err(red)?
    } else {
        let start = if a.hnf { hnf(&b).map_err(red)? } else { b };
        let o = lll_with_stats(&start, &params).map_err(red)?;
        stats = format!(" sweeps={} swaps={}", o.sweeps, o.swaps);
        o.basis
    };
    let text = if a.json {
        write_basis_json(&reduced)
    } else {
        write_basis_file(&reduced)
    };
    emit(a.out.as_deref(), &text, out)?;
    writeln!(err, "before: {before}")?;
    writeln!(err, "after:  {}{stats}", describe(&reduced).map_err(red)?)?;
    if let Some(m) = &a.manifest {
        manifest.write(m)?;
    }
    Ok(())
}

fn describe(b: &Basis) -> evosieve::Result<String> {
    Ok(format!(
        "hadamard={:.4} shortest_norm_sq={}",
        hadamard_ratio(b)?,
        b.shortest_column().norm_sq()
    ))
}
