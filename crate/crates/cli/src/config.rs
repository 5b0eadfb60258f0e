//! Command-line parsing into a validated [`RunConfig`].

use std::f64::consts::{FRAC_PI_2, PI};
use std::path::PathBuf;

use catphase::quadrature::{DEFAULT_TOL, MAX_TOL, MIN_TOL};
use catphase::Complex64;
use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Wehrl and Husimi phase distributions on a θ grid.
    Profile,
    /// Wehrl entropy with error estimate and the weight-only approximation.
    Entropy,
    /// Wehrl entropy of the cat |α0, γ⟩ over a uniform γ grid.
    GammaScan,
    /// Phase distributions of the Kerr-generated kitten (needs --M, --N).
    Kerr,
    /// Equientropic superpositions for a list of N.
    Equientropic,
    /// Runs the built-in invariant checks.
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Coherent,
    /// Cat with phase --gamma.
    Cat,
    Even,
    Odd,
    /// Yurke–Stoler cat, γ = π/2.
    Ys,
    Equientropic,
    Kerr,
    Vacuum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "catphase",
    version,
    about = "Husimi and Wehrl phase distributions of coherent-state superpositions"
)]
struct Args {
    command: Command,

    #[arg(long, value_enum)]
    state: Option<StateKind>,

    /// Amplitude as "re,im".
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    alpha0: Option<Complex64>,

    #[arg(long = "alpha0-mod", conflicts_with = "alpha0")]
    alpha0_mod: Option<f64>,

    /// Phase of α0 in radians (with --alpha0-mod).
    #[arg(long = "alpha0-arg", requires = "alpha0_mod", allow_hyphen_values = true)]
    alpha0_arg: Option<f64>,

    /// Cat superposition phase γ.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,

    /// Number of components; a comma-separated list for `equientropic`.
    #[arg(long = "N", value_delimiter = ',')]
    n: Vec<u64>,

    /// Kerr schedule numerator.
    #[arg(long = "M")]
    m: Option<u64>,

    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[arg(long = "theta-points", default_value_t = 512)]
    theta_points: usize,

    #[arg(long = "gamma-points", default_value_t = 64)]
    gamma_points: usize,

    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"re,im\", got {s:?}"))?;
    let part = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}"));
    let z = Complex64::new(part(re)?, part(im)?);
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("non-finite amplitude {s:?}"))
    }
}

/// Everything needed to build the state under study.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateSpec {
    pub kind: StateKind,
    pub alpha0: Complex64,
    pub gamma: f64,
    /// One entry except for the `equientropic` command.
    #[serde(rename = "N")]
    pub n: Vec<u64>,
    #[serde(rename = "M")]
    pub m: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub state: StateSpec,
    pub tol: f64,
    pub theta_points: usize,
    pub gamma_points: usize,
    pub format: Format,
    /// Not part of the archived config: the same run must produce the same
    /// bytes wherever they are written.
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses arguments (without the program name).
pub fn parse_config<I, S>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(std::iter::once("catphase".into()).chain(argv.into_iter().map(Into::into)))
        .map_err(|e| match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                CliError::Info(e.to_string())
            }
            _ => CliError::Usage(e.render().to_string().trim_end().to_string()),
        })?;

    if !(MIN_TOL..=MAX_TOL).contains(&args.tol) {
        return Err(usage(format!("--tol {} outside [{MIN_TOL:e}, {MAX_TOL:e}]", args.tol)));
    }
    if args.theta_points < 8 || !args.theta_points.is_multiple_of(2) {
        return Err(usage(format!(
            "--theta-points {} must be even and at least 8",
            args.theta_points
        )));
    }
    if args.gamma_points == 0 {
        return Err(usage("--gamma-points must be positive"));
    }

    let kind = resolve_kind(args.command, args.state)?;
    let alpha0 = match (args.alpha0, args.alpha0_mod) {
        (Some(z), _) => Some(z),
        (None, Some(r)) if r >= 0.0 && r.is_finite() => Some(Complex64::from_polar(r, args.alpha0_arg.unwrap_or(0.0))),
        (None, Some(r)) => return Err(usage(format!("--alpha0-mod {r} must be a non-negative number"))),
        (None, None) => None,
    };
    let alpha0 = match (kind, alpha0) {
        (StateKind::Vacuum, _) => Complex64::new(0.0, 0.0),
        (_, Some(z)) => z,
        (_, None) if args.command == Command::Validate => Complex64::new(0.0, 0.0),
        (_, None) => return Err(usage("--alpha0 (or --alpha0-mod) is required for this state")),
    };

    let gamma = match kind {
        StateKind::Cat => args.gamma.unwrap_or(0.0),
        StateKind::Even => 0.0,
        StateKind::Odd => PI,
        StateKind::Ys => FRAC_PI_2,
        _ => 0.0,
    };

    let n = match (args.command, kind) {
        (Command::Equientropic, _) if args.n.is_empty() => vec![2, 3, 4],
        (Command::Equientropic, _) => args.n,
        (_, StateKind::Equientropic | StateKind::Kerr) => match args.n.as_slice() {
            [n] => vec![*n],
            [] => return Err(usage("--N is required for this state")),
            _ => return Err(usage("--N takes a single value here")),
        },
        _ => Vec::new(),
    };
    let m = match kind {
        StateKind::Kerr => Some(args.m.ok_or_else(|| usage("--M is required for Kerr states"))?),
        _ => None,
    };

    Ok(RunConfig {
        command: args.command,
        state: StateSpec {
            kind,
            alpha0,
            gamma,
            n,
            m,
        },
        tol: args.tol,
        theta_points: args.theta_points,
        gamma_points: args.gamma_points,
        format: args.format,
        output: args.output,
    })
}

fn resolve_kind(command: Command, state: Option<StateKind>) -> Result<StateKind, CliError> {
    let fixed = match command {
        Command::Kerr => Some(StateKind::Kerr),
        Command::Equientropic => Some(StateKind::Equientropic),
        Command::GammaScan => Some(StateKind::Cat),
        Command::Validate => Some(StateKind::Vacuum),
        Command::Profile | Command::Entropy => None,
    };
    match (fixed, state) {
        (Some(k), None) => Ok(k),
        (Some(k), Some(s)) if k == s => Ok(k),
        (Some(k), Some(s)) => Err(usage(format!(
            "--state {} conflicts with this command (it always uses {})",
            s.to_possible_value().unwrap().get_name(),
            k.to_possible_value().unwrap().get_name()
        ))),
        (None, Some(s)) => Ok(s),
        (None, None) => Err(usage("--state is required for this command")),
    }
}
