use std::fmt;

/// Process exit statuses. `Usage` matches clap's own code for bad flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitStatus {
    Ok = 0,
    /// `verify` found a failed check, or an unexpected I/O failure.
    Failure = 1,
    Usage = 2,
    Generation = 3,
    Parse = 4,
    Reduction = 5,
    NonConvergence = 6,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitStatus, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(ExitStatus::Usage, message)
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(ExitStatus::Parse, message)
    }

    /// Maps a library error raised while doing `stage` work. Configuration
    /// and parse errors keep their own codes whatever the stage.
    pub fn from_lib(e: evosieve::Error, stage: ExitStatus) -> Self {
        use evosieve::Error as E;
        let code = match e {
            E::InvalidConfig(_) => ExitStatus::Usage,
            E::Parse(_) => ExitStatus::Parse,
            E::MaxSweepsExceeded(_) => ExitStatus::Reduction,
            _ => stage,
        };
        CliError::new(code, e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(ExitStatus::Failure, format!("i/o error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
