//! Polar quadrature of the Wehrl entropy and of the Wehrl and Husimi phase
//! distributions.
//!
//! One grid serves all three integrals: Gauss–Legendre in `r ∈ [0, R_max]`
//! times a uniform periodic trapezoid in `θ ∈ [0, 2π)`. Each θ ray is
//! integrated independently (in parallel when enabled), and the θ sum uses
//! a pairwise reduction whose shape depends only on the grid size.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::gauss_legendre_on;
use crate::husimi::q_with_log;
use crate::parallel::{map_rows, pairwise_sum, Execution};
use crate::states::{make_cat, CatParameters, CoherentSuperposition};

/// `Q` values below this contribute nothing to `-Q ln Q`.
pub const Q_FLOOR: f64 = 1e-300;

pub const MIN_TOL: f64 = 1e-12;
pub const MAX_TOL: f64 = 1e-3;
pub const DEFAULT_TOL: f64 = 1e-8;

const MIN_THETA_COUNT: usize = 8;
const START_RADIAL: usize = 32;
const MAX_RADIAL: usize = 2048;
const MAX_THETA: usize = 16384;

/// Entropy differences below this are rounding, not discretization error.
const ROUNDOFF_FLOOR: f64 = 1e-12;

/// Polar product rule on the disc `|α| ≤ R_max`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolarQuadrature {
    radial_nodes: Vec<(f64, f64)>,
    theta_count: usize,
    r_max: f64,
    tol: f64,
    execution: Execution,
}

impl PolarQuadrature {
    pub fn new(radial_count: usize, theta_count: usize, r_max: f64, tol: f64) -> Result<Self> {
        if radial_count == 0 {
            return Err(Error::InvalidArgument("radial node count must be positive".into()));
        }
        if theta_count < MIN_THETA_COUNT || !theta_count.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "theta count must be even and at least {MIN_THETA_COUNT}, got {theta_count}"
            )));
        }
        if !(r_max > 0.0 && r_max.is_finite()) {
            return Err(Error::InvalidArgument(format!("R_max must be positive, got {r_max}")));
        }
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        let (r, w) = gauss_legendre_on(radial_count, 0.0, r_max);
        Ok(Self {
            radial_nodes: r.into_iter().zip(w).collect(),
            theta_count,
            r_max,
            tol,
            execution: Execution::default(),
        })
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    /// Same radial rule on a different angular grid.
    pub fn with_theta_count(&self, theta_count: usize) -> Result<Self> {
        Ok(Self::new(self.radial_count(), theta_count, self.r_max, self.tol)?.with_execution(self.execution))
    }

    /// Twice the radial nodes and twice the angles; used for error estimates.
    pub fn doubled(&self) -> Self {
        Self::new(2 * self.radial_count(), 2 * self.theta_count, self.r_max, self.tol)
            .expect("doubling a valid grid stays valid")
            .with_execution(self.execution)
    }

    pub fn radial_nodes(&self) -> &[(f64, f64)] {
        &self.radial_nodes
    }

    pub fn radial_count(&self) -> usize {
        self.radial_nodes.len()
    }

    pub fn theta_count(&self) -> usize {
        self.theta_count
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn execution(&self) -> Execution {
        self.execution
    }

    /// Closed-open uniform grid `θ_i = 2π i / n`.
    pub fn thetas(&self) -> Vec<f64> {
        let h = TAU / self.theta_count as f64;
        (0..self.theta_count).map(|i| i as f64 * h).collect()
    }
}

/// `R_max = max_k |α_k| + √(ln(1/tol)) + 2`; beyond it every coherent
/// component has decayed below `tol`.
pub fn recommended_r_max(state: &CoherentSuperposition, tol: f64) -> f64 {
    state.max_amplitude() + (1.0 / tol).ln().sqrt() + 2.0
}

fn check_tol(tol: f64) -> Result<()> {
    if (MIN_TOL..=MAX_TOL).contains(&tol) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance {tol:e} outside [{MIN_TOL:e}, {MAX_TOL:e}]"
        )))
    }
}

/// Largest change between two profile pairs: the entropy and every shared θ
/// sample of both profiles. `stride` maps coarse θ indices onto the finer
/// grid (2 when the angular count was doubled, 1 otherwise).
fn refinement_change(coarse: &(PhaseProfile, PhaseProfile), fine: &(PhaseProfile, PhaseProfile), stride: usize) -> f64 {
    let pointwise = |a: &PhaseProfile, b: &PhaseProfile| {
        a.values
            .iter()
            .zip(b.values.iter().step_by(stride))
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    };
    (coarse.0.integral - fine.0.integral)
        .abs()
        .max(pointwise(&coarse.0, &fine.0))
        .max(pointwise(&coarse.1, &fine.1))
}

/// Picks a grid on which the entropy and both phase profiles change by less
/// than `tol` when the radial or the angular node count is doubled.
///
/// The angular count starts proportional to `max_k |α_k|` (peaks of angular
/// width `~1/|α_k|`). Each direction is refined on its own until it
/// self-converges to `tol / 2`; rays passing close to a zero of `Q` need
/// the most radial nodes. If a cap is reached the largest grid is returned
/// and [`wehrl_entropy`] reports the failure.
pub fn default_quadrature(state: &CoherentSuperposition, tol: f64) -> Result<PolarQuadrature> {
    check_tol(tol)?;
    let r_max = recommended_r_max(state, tol);
    let theta = (16.0 * (1.0 + state.max_amplitude())).ceil() as usize;
    let mut radial = START_RADIAL;
    let mut theta = theta.max(32).next_power_of_two();
    let target = 0.5 * tol;

    loop {
        let quad = PolarQuadrature::new(radial, theta, r_max, tol)?;
        let current = phase_profiles(state, &quad);
        let radial_ok = radial >= MAX_RADIAL || {
            let finer = PolarQuadrature::new(2 * radial, theta, r_max, tol)?;
            refinement_change(&current, &phase_profiles(state, &finer), 1) < target
        };
        let theta_ok = theta >= MAX_THETA || {
            let finer = PolarQuadrature::new(radial, 2 * theta, r_max, tol)?;
            refinement_change(&current, &phase_profiles(state, &finer), 2) < target
        };
        if radial_ok && theta_ok {
            return Ok(quad);
        }
        if !radial_ok {
            radial *= 2;
        }
        if !theta_ok {
            theta *= 2;
        }
    }
}

/// Which radial moment a [`PhaseProfile`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProfileKind {
    WehrlPD,
    HusimiPD,
}

/// A phase distribution sampled on the closed-open grid `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseProfile {
    pub thetas: Vec<f64>,
    pub values: Vec<f64>,
    pub kind: ProfileKind,
    /// Periodic trapezoid `(2π/n) Σ_i values[i]`.
    pub integral: f64,
}

impl PhaseProfile {
    pub fn new(kind: ProfileKind, thetas: Vec<f64>, values: Vec<f64>) -> Self {
        let integral = TAU / values.len() as f64 * pairwise_sum(&values);
        Self {
            thetas,
            values,
            kind,
            integral,
        }
    }
}

/// `(S_θ, P_θ)` along one ray.
fn ray_moments(state: &CoherentSuperposition, quad: &PolarQuadrature, theta: f64) -> (f64, f64) {
    let dir = Complex64::from_polar(1.0, theta);
    let mut wehrl = 0.0;
    let mut husimi = 0.0;
    for &(r, w) in quad.radial_nodes() {
        let (q, ln_q) = q_with_log(state, dir * r);
        if q < Q_FLOOR {
            continue;
        }
        let jac = w * r;
        wehrl -= jac * q * ln_q;
        husimi += jac * q;
    }
    (wehrl, husimi)
}

/// Wehrl and Husimi phase distributions from a single pass over the grid.
pub fn phase_profiles(state: &CoherentSuperposition, quad: &PolarQuadrature) -> (PhaseProfile, PhaseProfile) {
    let thetas = quad.thetas();
    let rows = map_rows(thetas.len(), quad.execution(), |i| ray_moments(state, quad, thetas[i]));
    let (wehrl, husimi): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
    (
        PhaseProfile::new(ProfileKind::WehrlPD, thetas.clone(), wehrl),
        PhaseProfile::new(ProfileKind::HusimiPD, thetas, husimi),
    )
}

/// `S_θ = -∫ Q ln Q |α| d|α|` on the grid's angles.
pub fn wehrl_pd(state: &CoherentSuperposition, quad: &PolarQuadrature) -> PhaseProfile {
    phase_profiles(state, quad).0
}

/// `P_θ = ∫ Q |α| d|α|` on the grid's angles.
pub fn husimi_pd(state: &CoherentSuperposition, quad: &PolarQuadrature) -> PhaseProfile {
    phase_profiles(state, quad).1
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    /// Nats.
    pub wehrl_entropy: f64,
    /// `|S(grid) - S(doubled grid)|`, floored at rounding level.
    pub error_estimate: f64,
    pub profile: Option<PhaseProfile>,
}

/// Wehrl entropy as the θ-integral of the Wehrl PD, with a doubling
/// self-convergence estimate.
///
/// Fails with [`Error::NonConverged`] when doubling moves the result by more
/// than `10 × tol`.
pub fn wehrl_entropy(state: &CoherentSuperposition, quad: &PolarQuadrature) -> Result<EntropyReport> {
    let profile = wehrl_pd(state, quad);
    let refined = wehrl_pd(state, &quad.doubled()).integral;
    let change = (refined - profile.integral).abs();
    if !(change <= 10.0 * quad.tol()) {
        return Err(Error::NonConverged {
            change,
            tol: quad.tol(),
        });
    }
    Ok(EntropyReport {
        wehrl_entropy: profile.integral,
        error_estimate: change.max(ROUNDOFF_FLOOR),
        profile: Some(profile),
    })
}

/// Both phase profiles together with the largest pointwise change under
/// doubling of the radial rule. The angular grid is left as given, so any
/// sampling density can be requested (rosettes, plots).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileReport {
    pub wehrl: PhaseProfile,
    pub husimi: PhaseProfile,
    pub error_estimate: f64,
}

pub fn checked_phase_profiles(state: &CoherentSuperposition, quad: &PolarQuadrature) -> Result<ProfileReport> {
    let (wehrl, husimi) = phase_profiles(state, quad);
    let finer = PolarQuadrature::new(2 * quad.radial_count(), quad.theta_count(), quad.r_max(), quad.tol())?
        .with_execution(quad.execution());
    let fine = phase_profiles(state, &finer);
    let change = refinement_change(&(wehrl.clone(), husimi.clone()), &fine, 1);
    if !(change <= 10.0 * quad.tol()) {
        return Err(Error::NonConverged {
            change,
            tol: quad.tol(),
        });
    }
    Ok(ProfileReport {
        wehrl,
        husimi,
        error_estimate: change.max(ROUNDOFF_FLOOR),
    })
}

/// Results of the Cartesian cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DirectIntegrals {
    /// `-∬ Q ln Q d²α`.
    pub wehrl_entropy: f64,
    /// `∬ Q d²α`.
    pub husimi_norm: f64,
}

/// Panel width of the Cartesian rule, in units of the coherent-state width.
const PANEL_WIDTH: f64 = 0.25;
const PANEL_NODES: usize = 16;

/// Composite Gauss–Legendre tensor rule on the square `[-L, L]²` with
/// `L = R_max(tol)`. Shares nothing with the polar grid except `Q`, so it
/// serves as an independent check of the θ-integrated Wehrl PD.
pub fn direct_wehrl_entropy(state: &CoherentSuperposition, tol: f64, execution: Execution) -> Result<DirectIntegrals> {
    check_tol(tol)?;
    let half = recommended_r_max(state, tol);
    let panels = (2.0 * half / PANEL_WIDTH).ceil() as usize;
    let width = 2.0 * half / panels as f64;
    let mut xs = Vec::with_capacity(panels * PANEL_NODES);
    let mut ws = Vec::with_capacity(panels * PANEL_NODES);
    for p in 0..panels {
        let a = -half + p as f64 * width;
        let (x, w) = gauss_legendre_on(PANEL_NODES, a, a + width);
        xs.extend(x);
        ws.extend(w);
    }

    let rows = map_rows(xs.len(), execution, |i| {
        let mut wehrl = 0.0;
        let mut norm = 0.0;
        for (&y, &wy) in xs.iter().zip(&ws) {
            let (q, ln_q) = q_with_log(state, Complex64::new(xs[i], y));
            if q < Q_FLOOR {
                continue;
            }
            wehrl -= wy * q * ln_q;
            norm += wy * q;
        }
        (ws[i] * wehrl, ws[i] * norm)
    });
    let (wehrl, norm): (Vec<f64>, Vec<f64>) = rows.into_iter().unzip();
    Ok(DirectIntegrals {
        wehrl_entropy: pairwise_sum(&wehrl),
        husimi_norm: pairwise_sum(&norm),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaScanPoint {
    pub gamma: f64,
    pub wehrl_entropy: f64,
    pub error_estimate: f64,
}

/// Wehrl entropy of the cat `|α_0, γ⟩` for each `γ`, on a fixed grid.
pub fn gamma_scan(alpha0: Complex64, gammas: &[f64], quad: &PolarQuadrature) -> Result<Vec<GammaScanPoint>> {
    gammas
        .iter()
        .map(|&gamma| {
            let state = make_cat(CatParameters::new(alpha0, gamma))?;
            let report = wehrl_entropy(&state, quad)?;
            Ok(GammaScanPoint {
                gamma,
                wehrl_entropy: report.wehrl_entropy,
                error_estimate: report.error_estimate,
            })
        })
        .collect()
}
