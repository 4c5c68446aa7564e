use std::fs;
use std::io::Write;
use std::path::Path;

use evosieve::genesis::{parse_basis_file, parse_basis_json};
use evosieve::{Basis, Ring};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult, ExitStatus};

pub fn read_input(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Parses a basis file. Text files are read as Gaussian when `ring` says so
/// or, without a hint, when any entry carries an `i`.
pub fn parse_basis(text: &str, ring: Option<Ring>) -> CliResult<Basis> {
    let b = if text.trim_start().starts_with('{') {
        parse_basis_json(text)
    } else {
        let ring = ring.unwrap_or(if text.contains('i') {
            Ring::GaussianInteger
        } else {
            Ring::Integer
        });
        parse_basis_file(text, ring)
    }
    .map_err(|e| CliError::parse(e.to_string()))?;
    match ring {
        Some(r) if r != b.ring() => Err(CliError::parse(format!(
            "expected a {r} basis, found {}",
            b.ring()
        ))),
        _ => Ok(b),
    }
}

pub fn load_basis(path: &Path, ring: Option<Ring>) -> CliResult<(Basis, String)> {
    let text = read_input(path)?;
    let digest = sha256_hex(text.as_bytes());
    Ok((parse_basis(&text, ring)?, digest))
}

/// Writes `data` to `path`, or to `out` when no path is given.
pub fn emit(path: Option<&Path>, data: &str, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, data).map_err(|e| {
            CliError::new(
                ExitStatus::Failure,
                format!("cannot write {}: {e}", p.display()),
            )
        }),
        None => Ok(out.write_all(data.as_bytes())?),
    }
}

pub fn open_sink<'a>(
    path: Option<&Path>,
    out: &'a mut dyn Write,
) -> CliResult<Box<dyn Write + 'a>> {
    match path {
        Some(p) => {
            let f = fs::File::create(p).map_err(|e| {
                CliError::new(
                    ExitStatus::Failure,
                    format!("cannot write {}: {e}", p.display()),
                )
            })?;
            Ok(Box::new(std::io::BufWriter::new(f)))
        }
        None => Ok(Box::new(out)),
    }
}
