//! Command-line front end for the `evosieve` lattice toolkit.
//!
//! Exit statuses: 0 success, 1 failed verification, 2 usage, 3 generation,
//! 4 parse, 5 reduction, 6 no convergence.

pub mod args;
pub mod commands;
pub mod demo;
pub mod error;
pub mod io;
pub mod manifest;
pub mod report;

use std::io::Write;

pub use args::{Cli, Command};
pub use error::{CliError, CliResult, ExitStatus};
pub use manifest::RunManifest;

/// Runs a parsed command line. `argv` is the command line after the program
/// name; it is recorded in manifests.
pub fn run(cli: Cli, argv: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Generate(a) => commands::generate::run(a, &argv, out, err),
        Command::Reduce(a) => commands::reduce::run(a, &argv, out, err),
        Command::Sieve(a) => commands::sieve::run(a, &argv, out, err),
        Command::Verify(a) => commands::verify::run(a, out),
        Command::Bench(a) => commands::bench::run(a, &argv, out, err),
        Command::Replay(a) => commands::replay::run(a, out, err),
    }
}
