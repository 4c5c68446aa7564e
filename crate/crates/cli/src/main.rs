use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use evosieve_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    match run(cli, argv, &mut out, &mut err) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(err, "evosieve: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
