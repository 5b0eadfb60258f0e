use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("superposition has vanishing norm ({norm:e}); components cancel")]
    ZeroNorm { norm: f64 },

    #[error("superposition needs at least one component")]
    Empty,

    #[error("no root of the equientropic weight equation for N = {n}")]
    NoRoot { n: usize },

    #[error("quadrature not converged: doubling changed the result by {change:e} (tolerance {tol:e})")]
    NonConverged { change: f64, tol: f64 },

    #[error("component amplitudes have different moduli ({min} vs {max})")]
    MixedModuli { min: f64, max: f64 },

    #[error("weights must be non-negative and sum to 1 (sum = {sum})")]
    BadWeights { sum: f64 },

    #[error("Kerr schedule requires coprime positive M, N (got M = {m}, N = {n})")]
    BadSchedule { m: u64, n: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
