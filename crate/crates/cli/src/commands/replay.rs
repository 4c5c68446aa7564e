use std::io::Write;

use clap::Parser;

use crate::args::{Cli, Command, ReplayArgs};
use crate::error::{CliError, CliResult};
use crate::manifest::RunManifest;

pub fn run(a: &ReplayArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let m = RunManifest::load(&a.manifest)?;
    m.check_input()?;
    let argv: Vec<String> = std::iter::once("evosieve".to_string())
        .chain(m.args.iter().cloned())
        .collect();
    let mut cli = Cli::try_parse_from(&argv)
        .map_err(|e| CliError::parse(format!("manifest arguments do not parse: {e}")))?;
    if cli.command.name() != m.command {
        return Err(CliError::parse(format!(
            "manifest command '{}' does not match its arguments",
            m.command
        )));
    }
    if matches!(cli.command, Command::Replay(_)) {
        return Err(CliError::usage("a manifest cannot replay another manifest"));
    }
    if let Some(seed) = m.seed {
        cli.command.pin_seed(seed);
    }
    cli.command.redirect(a.out.clone());
    crate::run(cli, m.args, out, err)
}
