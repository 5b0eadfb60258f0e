//! Library side of the `catphase` command-line tool: argument parsing,
//! command dispatch and CSV/JSON emission. `main.rs` only wires these to the
//! process environment.

pub mod checks;
pub mod commands;
pub mod config;
pub mod emit;

use std::fmt;

pub use config::{parse_config, Command, Format, RunConfig, StateKind, StateSpec};
pub use emit::{Cell, Table};

pub const THREADS_VAR: &str = "CATPHASE_THREADS";

#[derive(Debug)]
pub enum CliError {
    /// `--help` / `--version` text; not a failure.
    Info(String),
    Usage(String),
    Core(catphase::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use catphase::Error as E;
        match self {
            CliError::Info(_) => 0,
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Core(E::NonConverged { .. }) => 2,
            CliError::Core(E::InvalidArgument(_)) => 1,
            CliError::Core(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Info(s) | CliError::Usage(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "error: {e}"),
            CliError::Io(e) => write!(f, "error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<catphase::Error> for CliError {
    fn from(e: catphase::Error) -> Self {
        CliError::Core(e)
    }
}

/// What a finished run hands back to the process.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    /// Encoded output in the requested format.
    pub body: Vec<u8>,
    /// Diagnostics for stderr.
    pub notes: Vec<String>,
    /// False only when `validate` found a failing check.
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            2
        }
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let mut notes = Vec::new();
    let mut passed = true;
    let table = match config.command {
        Command::Profile => commands::profile(config)?,
        Command::Entropy => commands::entropy(config)?,
        Command::GammaScan => commands::gamma_scan_table(config)?,
        Command::Equientropic => commands::equientropic(config)?,
        Command::Kerr => {
            let t = commands::kerr(config)?;
            if t.regime == Some("deformed") {
                notes.push(format!(
                    "note: N = {} >= n_max = {}; kitten components overlap (deformed regime)",
                    config.state.n[0],
                    catphase::n_max(config.state.alpha0)
                ));
            }
            t
        }
        Command::Validate => {
            let (t, ok) = checks::validate()?;
            passed = ok;
            if !ok {
                notes.push("validate: at least one check failed".to_string());
            }
            t
        }
    };
    let body = match config.format {
        Format::Csv => emit::to_csv(&table)?,
        Format::Json => emit::to_json(config, &table)?,
    };
    Ok(Outcome {
        table,
        body,
        notes,
        passed,
    })
}

/// Reads the worker cap; `None` leaves the library default.
pub fn parse_threads(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_VAR} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 1);
        assert_eq!(
            CliError::Core(catphase::Error::NonConverged { change: 1.0, tol: 1e-8 }).exit_code(),
            2
        );
        assert_eq!(CliError::Core(catphase::Error::ZeroNorm { norm: 0.0 }).exit_code(), 3);
        assert_eq!(
            CliError::Core(catphase::Error::BadSchedule { m: 2, n: 4 }).exit_code(),
            3
        );
        assert_eq!(
            CliError::Core(catphase::Error::MixedModuli { min: 1.0, max: 2.0 }).exit_code(),
            3
        );
    }

    #[test]
    fn threads() {
        assert_eq!(parse_threads(None).unwrap(), None);
        assert_eq!(parse_threads(Some("4")).unwrap(), Some(4));
        assert!(parse_threads(Some("0")).is_err());
        assert!(parse_threads(Some("-2")).is_err());
        assert!(parse_threads(Some("many")).is_err());
    }
}
