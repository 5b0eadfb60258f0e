//! One function per subcommand, each producing a [`Table`].

use std::f64::consts::TAU;

use catphase::closedform::{approx_kitten_wehrl_pd, approx_wehrl_entropy, COMMON_MODULUS_TOL};
use catphase::{
    checked_phase_profiles, default_quadrature, gamma_scan, make_cat, make_equientropic, make_kerr_state, n_max,
    solve_equientropic_weight, wehrl_entropy, CatParameters, CoherentSuperposition, KerrSchedule, PolarQuadrature,
};

use crate::config::{RunConfig, StateKind, StateSpec};
use crate::emit::{Cell, Table};
use crate::CliError;

const HUSIMI: &str = "Husimi Q-function of a coherent-state superposition";
const WEHRL_PD: &str = "Wehrl phase distribution (radial integral of -Q ln Q)";
const HUSIMI_PD: &str = "Husimi phase distribution (radial integral of Q)";
const WEHRL_ENTROPY: &str = "Wehrl entropy as the angular integral of the Wehrl phase distribution";
const KITTEN_PD: &str = "large-separation kitten approximation of the Wehrl phase distribution";
const WEIGHT_ENTROPY: &str = "weight-only Wehrl entropy approximation 1 + ln pi - sum w ln w";
const CAT_STATE: &str = "two-component cat state with superposition phase gamma";
const EQUIENTROPIC: &str = "equientropic weight equation and superposition";
const KERR: &str = "Kerr-medium kitten coefficients after time t = pi M / N";

pub fn build_state(spec: &StateSpec) -> catphase::Result<CoherentSuperposition> {
    let a = spec.alpha0;
    match spec.kind {
        StateKind::Vacuum => Ok(CoherentSuperposition::vacuum()),
        StateKind::Coherent => Ok(CoherentSuperposition::coherent(a)),
        StateKind::Cat | StateKind::Even | StateKind::Odd | StateKind::Ys => {
            make_cat(CatParameters::new(a, spec.gamma))
        }
        StateKind::Equientropic => make_equientropic(a, spec.n[0] as usize),
        StateKind::Kerr => make_kerr_state(KerrSchedule::new(spec.m.unwrap_or(1), spec.n[0], a)?),
    }
}

fn profile_table(config: &RunConfig, state: &CoherentSuperposition, extra: &'static str) -> Result<Table, CliError> {
    let quad = default_quadrature(state, config.tol)?.with_theta_count(config.theta_points)?;
    let report = checked_phase_profiles(state, &quad)?;
    let with_approx = state.common_modulus(COMMON_MODULUS_TOL).is_ok();

    let mut columns = vec!["theta", "S_theta", "P_theta"];
    let mut formulas = vec![HUSIMI, WEHRL_PD, HUSIMI_PD, extra];
    if with_approx {
        columns.push("S_theta_approx");
        formulas.push(KITTEN_PD);
    }
    let mut table = Table::new(columns, formulas);
    for (i, &theta) in report.wehrl.thetas.iter().enumerate() {
        let mut row = vec![
            Cell::Num(theta),
            Cell::Num(report.wehrl.values[i]),
            Cell::Num(report.husimi.values[i]),
        ];
        if with_approx {
            row.push(Cell::Num(approx_kitten_wehrl_pd(state, theta)?));
        }
        table.push(row);
    }
    table.error_estimate = Some(report.error_estimate);
    Ok(table)
}

fn state_formula(kind: StateKind) -> &'static str {
    match kind {
        StateKind::Cat | StateKind::Even | StateKind::Odd | StateKind::Ys => CAT_STATE,
        StateKind::Equientropic => EQUIENTROPIC,
        StateKind::Kerr => KERR,
        StateKind::Coherent | StateKind::Vacuum => HUSIMI,
    }
}

pub fn profile(config: &RunConfig) -> Result<Table, CliError> {
    let state = build_state(&config.state)?;
    profile_table(config, &state, state_formula(config.state.kind))
}

/// Kerr profiles plus the regime flag: components overlap once
/// `N ≥ n_max(α0)`, and the kitten picture no longer applies.
pub fn kerr(config: &RunConfig) -> Result<Table, CliError> {
    let state = build_state(&config.state)?;
    let mut table = profile_table(config, &state, KERR)?;
    let n = config.state.n[0];
    let limit = n_max(config.state.alpha0);
    table.regime = Some(if n as usize >= limit { "deformed" } else { "separated" });
    Ok(table)
}

pub fn entropy(config: &RunConfig) -> Result<Table, CliError> {
    let state = build_state(&config.state)?;
    let quad = default_quadrature(&state, config.tol)?;
    let report = wehrl_entropy(&state, &quad)?;
    let approx = approx_wehrl_entropy(&state.weights())?;
    let mut table = Table::new(
        vec!["S_w", "error_estimate", "S_w_approx"],
        vec![
            HUSIMI,
            WEHRL_PD,
            WEHRL_ENTROPY,
            WEIGHT_ENTROPY,
            state_formula(config.state.kind),
        ],
    );
    table.push(vec![
        Cell::Num(report.wehrl_entropy),
        Cell::Num(report.error_estimate),
        Cell::Num(approx),
    ]);
    table.error_estimate = Some(report.error_estimate);
    Ok(table)
}

/// One grid for the whole scan, fine enough for the even, Yurke–Stoler and
/// odd members (the odd cat has a zero at the origin and is the hardest).
fn scan_quadrature(config: &RunConfig) -> Result<PolarQuadrature, CliError> {
    let mut best: Option<PolarQuadrature> = None;
    for gamma in [0.0, 0.25 * TAU, 0.5 * TAU] {
        let state = make_cat(CatParameters::new(config.state.alpha0, gamma))?;
        let q = default_quadrature(&state, config.tol)?;
        best = Some(match best {
            None => q,
            Some(b) => PolarQuadrature::new(
                b.radial_count().max(q.radial_count()),
                b.theta_count().max(q.theta_count()),
                b.r_max().max(q.r_max()),
                config.tol,
            )?,
        });
    }
    Ok(best.expect("three candidates"))
}

pub fn gamma_scan_table(config: &RunConfig) -> Result<Table, CliError> {
    let quad = scan_quadrature(config)?;
    let n = config.gamma_points;
    let gammas: Vec<f64> = (0..n).map(|i| TAU * i as f64 / n as f64).collect();
    let points = gamma_scan(config.state.alpha0, &gammas, &quad)?;
    let mut table = Table::new(
        vec!["gamma", "S_w", "error_estimate"],
        vec![HUSIMI, WEHRL_PD, WEHRL_ENTROPY, CAT_STATE],
    );
    for p in &points {
        table.push(vec![
            Cell::Num(p.gamma),
            Cell::Num(p.wehrl_entropy),
            Cell::Num(p.error_estimate),
        ]);
    }
    table.error_estimate = points.iter().map(|p| p.error_estimate).reduce(f64::max);
    Ok(table)
}

pub fn equientropic(config: &RunConfig) -> Result<Table, CliError> {
    let target = 1.0 + TAU.ln();
    let mut table = Table::new(
        vec!["N", "x_N", "S_w", "epsilon", "error_estimate"],
        vec![HUSIMI, WEHRL_PD, WEHRL_ENTROPY, EQUIENTROPIC],
    );
    let mut worst = 0.0f64;
    for &n in &config.state.n {
        let x = solve_equientropic_weight(n as usize)?;
        let state = make_equientropic(config.state.alpha0, n as usize)?;
        let report = wehrl_entropy(&state, &default_quadrature(&state, config.tol)?)?;
        worst = worst.max(report.error_estimate);
        table.push(vec![
            Cell::Int(n),
            Cell::Num(x),
            Cell::Num(report.wehrl_entropy),
            Cell::Num(target - report.wehrl_entropy),
            Cell::Num(report.error_estimate),
        ]);
    }
    table.error_estimate = Some(worst);
    Ok(table)
}
