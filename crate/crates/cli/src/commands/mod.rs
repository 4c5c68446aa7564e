pub mod bench;
pub mod generate;
pub mod reduce;
pub mod replay;
pub mod sieve;
pub mod verify;

use evosieve::reduction::LllParams;

use crate::error::{CliError, CliResult};

pub(crate) fn lll_params(delta: &str, max_sweeps: Option<usize>) -> CliResult<LllParams> {
    let p = LllParams::from_decimal(delta).map_err(|e| CliError::usage(format!("--delta: {e}")))?;
    Ok(match max_sweeps {
        Some(m) => p.with_max_sweeps(m),
        None => p,
    })
}

pub(crate) fn params_json<T: serde::Serialize>(args: &T) -> serde_json::Value {
    serde_json::to_value(args).expect("arguments serialize")
}
