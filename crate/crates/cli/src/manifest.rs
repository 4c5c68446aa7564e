//! Run manifests: enough to rerun a command and get the same report.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult, ExitStatus};
use crate::io::{read_input, sha256_hex};

pub const MANIFEST_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub toolkit: String,
    pub version: String,
    pub command: String,
    /// Command line after the program name, as given.
    pub args: Vec<String>,
    /// Every parameter after defaults were applied.
    pub parameters: serde_json::Value,
    pub seed: Option<u64>,
    pub input: Option<InputDigest>,
    pub started_unix_ms: u64,
    pub finished_unix_ms: u64,
}

pub fn now_unix_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_millis() as u64)
}

impl RunManifest {
    pub fn new(
        command: &str,
        args: Vec<String>,
        parameters: serde_json::Value,
        seed: Option<u64>,
    ) -> Self {
        RunManifest {
            schema_version: MANIFEST_SCHEMA,
            toolkit: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            args,
            parameters,
            seed,
            input: None,
            started_unix_ms: now_unix_ms(),
            finished_unix_ms: 0,
        }
    }

    pub fn with_input(mut self, path: &Path, sha256: String) -> Self {
        self.input = Some(InputDigest {
            path: path.to_path_buf(),
            sha256,
        });
        self
    }

    pub fn write(mut self, path: &Path) -> CliResult<()> {
        self.finished_unix_ms = now_unix_ms();
        let text = serde_json::to_string_pretty(&self).expect("manifest serializes");
        std::fs::write(path, text + "\n").map_err(|e| {
            CliError::new(
                ExitStatus::Failure,
                format!("cannot write {}: {e}", path.display()),
            )
        })
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let m: RunManifest = serde_json::from_str(&read_input(path)?)
            .map_err(|e| CliError::parse(format!("invalid manifest {}: {e}", path.display())))?;
        if m.schema_version != MANIFEST_SCHEMA {
            return Err(CliError::parse(format!(
                "unsupported manifest schema {}",
                m.schema_version
            )));
        }
        Ok(m)
    }

    /// Fails when the recorded input file is gone or has changed.
    pub fn check_input(&self) -> CliResult<()> {
        if let Some(inp) = &self.input {
            let text = read_input(&inp.path)?;
            if sha256_hex(text.as_bytes()) != inp.sha256 {
                return Err(CliError::parse(format!(
                    "{} changed since the recorded run",
                    inp.path.display()
                )));
            }
        }
        Ok(())
    }
}
