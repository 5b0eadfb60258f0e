//! Phase-space entropic measures for superpositions of coherent states.
//!
//! The crate evaluates the Husimi Q-function of normalized coherent-state
//! superpositions (Schrödinger cats, cat-like "kitten" states, Kerr-medium
//! states) and integrates it over the phase plane to obtain
//!
//! - the Wehrl entropy `S_w = -∫ Q ln Q d²α`,
//! - the Wehrl phase distribution `S_θ = -∫ Q ln Q |α| d|α|`,
//! - the Husimi phase distribution `P_θ = ∫ Q |α| d|α|`.
//!
//! Large-separation closed forms live in [`closedform`] and are checked
//! against the polar quadrature in [`quadrature`].
//!
//! Row evaluation runs on rayon when the default `parallel` feature is on.
//! Reductions are order-fixed, so results are bitwise identical for any
//! thread count and for the sequential fallback.

// `!(x >= 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod closedform;
pub mod error;
pub mod gauss;
pub mod husimi;
pub mod parallel;
pub mod quadrature;
pub mod states;

pub use error::{Error, Result};
pub use husimi::{q_decompose, q_value, PhasePoint, QDecomposition};
pub use parallel::Execution;
pub use quadrature::{
    checked_phase_profiles, default_quadrature, direct_wehrl_entropy, gamma_scan, husimi_pd, wehrl_entropy, wehrl_pd,
    EntropyReport, PhaseProfile, PolarQuadrature, ProfileKind, ProfileReport,
};
pub use states::{
    gram_normalize, make_cat, make_equientropic, make_kerr_state, n_max, solve_equientropic_weight, CatParameters,
    CoherentSuperposition, Component, KerrSchedule,
};

pub use num_complex::Complex64;

/// Minimum Wehrl entropy `1 + ln π`, attained by coherent states.
pub fn lieb_floor() -> f64 {
    1.0 + std::f64::consts::PI.ln()
}
