//! Construction and normalization of coherent-state superpositions.
//!
//! Every state in the crate is a [`CoherentSuperposition`]: a finite list of
//! `(c_k, α_k)` pairs representing `Σ_k c_k |α_k⟩` with unit norm.

use std::f64::consts::{LN_2, PI, TAU};

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Amplitudes closer than this are treated as the same coherent state.
pub const MERGE_RADIUS: f64 = 1e-12;

/// Squared Gram norms below this are rejected as destructive cancellation.
pub const ZERO_NORM: f64 = 1e-15;

/// One term `c |α⟩` of a superposition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Component {
    pub coefficient: Complex64,
    pub amplitude: Complex64,
}

impl Component {
    pub fn new(coefficient: Complex64, amplitude: Complex64) -> Self {
        Self { coefficient, amplitude }
    }
}

/// `⟨α|β⟩ = exp(-|α|²/2 - |β|²/2 + α* β)`.
pub fn coherent_overlap(alpha: Complex64, beta: Complex64) -> Complex64 {
    (-0.5 * alpha.norm_sqr() - 0.5 * beta.norm_sqr() + alpha.conj() * beta).exp()
}

/// `⟨ψ|ψ⟩ = Σ_{k,l} c_k* c_l ⟨α_k|α_l⟩`.
pub fn gram_norm_squared(components: &[Component]) -> f64 {
    let mut total = 0.0;
    for a in components {
        for b in components {
            total += (a.coefficient.conj() * b.coefficient * coherent_overlap(a.amplitude, b.amplitude)).re;
        }
    }
    total
}

/// A normalized superposition `Σ_k c_k |α_k⟩` of distinct coherent states.
///
/// Only constructible through [`gram_normalize`] (or the helpers built on
/// it), so the unit-norm invariant always holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoherentSuperposition {
    components: Vec<Component>,
}

impl CoherentSuperposition {
    pub fn coherent(alpha: Complex64) -> Self {
        Self {
            components: vec![Component::new(Complex64::new(1.0, 0.0), alpha)],
        }
    }

    pub fn vacuum() -> Self {
        Self::coherent(Complex64::new(0.0, 0.0))
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn norm_squared(&self) -> f64 {
        gram_norm_squared(&self.components)
    }

    /// Largest `|α_k|`; sets the radial extent of the phase-space grid.
    pub fn max_amplitude(&self) -> f64 {
        self.components.iter().map(|c| c.amplitude.norm()).fold(0.0, f64::max)
    }

    /// The shared modulus `|α_0|` if all amplitudes lie on one circle.
    pub fn common_modulus(&self, tol: f64) -> Result<f64> {
        let (min, max) = self
            .components
            .iter()
            .map(|c| c.amplitude.norm())
            .fold((f64::INFINITY, 0.0_f64), |(lo, hi), r| (lo.min(r), hi.max(r)));
        if max - min > tol {
            Err(Error::MixedModuli { min, max })
        } else {
            Ok(0.5 * (min + max))
        }
    }

    /// Component weights `|c_k|² / Σ_j |c_j|²`.
    ///
    /// For well-separated components the overlaps vanish and these are the
    /// plain `|c_k|²`; the rescaling keeps them summing to one otherwise.
    pub fn weights(&self) -> Vec<f64> {
        let total: f64 = self.components.iter().map(|c| c.coefficient.norm_sqr()).sum();
        self.components
            .iter()
            .map(|c| c.coefficient.norm_sqr() / total)
            .collect()
    }

    /// Phase-space rotation `α_k → e^{iφ} α_k`.
    pub fn rotated(&self, phi: f64) -> Self {
        let rot = Complex64::from_polar(1.0, phi);
        Self {
            components: self
                .components
                .iter()
                .map(|c| Component::new(c.coefficient, rot * c.amplitude))
                .collect(),
        }
    }

    /// Multiplies every coefficient by `e^{iφ}`; the physical state is unchanged.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let rot = Complex64::from_polar(1.0, phi);
        Self {
            components: self
                .components
                .iter()
                .map(|c| Component::new(rot * c.coefficient, c.amplitude))
                .collect(),
        }
    }
}

/// Merges coincident amplitudes, then rescales the coefficients so that the
/// Gram-weighted norm is one.
pub fn gram_normalize<I>(components: I) -> Result<CoherentSuperposition>
where
    I: IntoIterator<Item = (Complex64, Complex64)>,
{
    let mut merged: Vec<Component> = Vec::new();
    let mut seen_any = false;
    for (coefficient, amplitude) in components {
        seen_any = true;
        match merged
            .iter_mut()
            .find(|c| (c.amplitude - amplitude).norm() < MERGE_RADIUS)
        {
            Some(existing) => existing.coefficient += coefficient,
            None => merged.push(Component::new(coefficient, amplitude)),
        }
    }
    if !seen_any {
        return Err(Error::Empty);
    }
    merged.retain(|c| c.coefficient != Complex64::new(0.0, 0.0));

    let norm = gram_norm_squared(&merged);
    if !(norm >= ZERO_NORM) {
        return Err(Error::ZeroNorm { norm });
    }
    let scale = norm.sqrt().recip();
    for c in &mut merged {
        c.coefficient *= scale;
    }
    Ok(CoherentSuperposition { components: merged })
}

/// Parameters of the two-component cat `N_γ (|α_0⟩ + e^{iγ}|-α_0⟩)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CatParameters {
    pub alpha0: Complex64,
    gamma: f64,
}

impl CatParameters {
    pub fn new(alpha0: Complex64, gamma: f64) -> Self {
        Self {
            alpha0,
            gamma: gamma.rem_euclid(TAU),
        }
    }

    pub fn even(alpha0: Complex64) -> Self {
        Self::new(alpha0, 0.0)
    }

    pub fn odd(alpha0: Complex64) -> Self {
        Self::new(alpha0, PI)
    }

    pub fn yurke_stoler(alpha0: Complex64) -> Self {
        Self::new(alpha0, 0.5 * PI)
    }

    /// Superposition phase, reduced to `[0, 2π)`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Closed-form normalization `N_γ = {2[1 + cos γ e^{-2|α_0|²}]}^{-1/2}`.
    pub fn normalization(&self) -> f64 {
        (2.0 * (1.0 + self.gamma.cos() * (-2.0 * self.alpha0.norm_sqr()).exp()))
            .sqrt()
            .recip()
    }
}

pub fn make_cat(p: CatParameters) -> Result<CoherentSuperposition> {
    gram_normalize([
        (Complex64::new(1.0, 0.0), p.alpha0),
        (Complex64::from_polar(1.0, p.gamma), -p.alpha0),
    ])
}

/// Mixing entropy `-(1-mx) ln(1-mx) - m x ln x` of one weight `1-mx` and
/// `m` weights `x`, with `0 ln 0 = 0`.
fn mixing_entropy(m: f64, x: f64) -> f64 {
    let xlogx = |p: f64| if p <= 0.0 { 0.0 } else { p * p.ln() };
    -xlogx(1.0 - m * x) - m * xlogx(x)
}

/// Residual `2 (1-(N-1)x)^{1-(N-1)x} x^{(N-1)x} - 1` of the equientropic
/// weight condition, evaluated in log space.
pub fn equientropic_residual(n: usize, x: f64) -> f64 {
    2.0 * (-mixing_entropy((n - 1) as f64, x)).exp() - 1.0
}

const BISECTION_TOL: f64 = 1e-14;
const BISECTION_MAX_ITER: usize = 200;

/// Weight `x_N` that gives an `N`-component well-separated superposition
/// (one weight `1-(N-1)x`, `N-1` weights `x`) the mixing entropy `ln 2`.
///
/// The mixing entropy rises monotonically on `(0, 1/N]` to `ln N`, so the
/// root is bracketed there. At `N = 2` the maximum equals `ln 2` and the
/// root is the tangent point `x = 1/2`.
pub fn solve_equientropic_weight(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "equientropic superposition needs N >= 2, got {n}"
        )));
    }
    let m = (n - 1) as f64;
    let excess = |x: f64| mixing_entropy(m, x) - LN_2;

    let mut lo = 0.0;
    let mut hi = 1.0 / n as f64;
    let at_hi = excess(hi);
    if at_hi.abs() <= 1e-15 {
        return Ok(hi);
    }
    if !(excess(lo) < 0.0 && at_hi > 0.0) {
        return Err(Error::NoRoot { n });
    }
    for _ in 0..BISECTION_MAX_ITER {
        if hi - lo <= BISECTION_TOL {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if excess(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    if equientropic_residual(n, x).abs() >= 1e-12 {
        return Err(Error::NoRoot { n });
    }
    Ok(x)
}

/// Superposition of `N` coherent states equally spaced on the circle
/// `|α| = |α_0|`, weighted so that its well-separated Wehrl entropy is
/// `1 + ln 2π` for every `N`.
pub fn make_equientropic(alpha0: Complex64, n: usize) -> Result<CoherentSuperposition> {
    let x = solve_equientropic_weight(n)?;
    let lead = (1.0 - (n - 1) as f64 * x).sqrt();
    let rest = x.sqrt();
    let comps = (0..n).map(|k| {
        let c = if k == 0 { lead } else { rest };
        let amp = Complex64::from_polar(1.0, TAU * k as f64 / n as f64) * alpha0;
        (Complex64::new(c, 0.0), amp)
    });
    gram_normalize(comps)
}

/// Kerr-medium evolution time `gt = 2πM/N` for an initial coherent state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KerrSchedule {
    m: u64,
    n: u64,
    pub alpha0: Complex64,
}

impl KerrSchedule {
    pub fn new(m: u64, n: u64, alpha0: Complex64) -> Result<Self> {
        if m == 0 || n == 0 || m.gcd(&n) != 1 {
            return Err(Error::BadSchedule { m, n });
        }
        Ok(Self { m, n, alpha0 })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Reduces `k π / N` to an angle, with `k` taken modulo `2N` exactly.
fn angle_in_units_of_pi_over_n(k: i128, n: u64) -> f64 {
    let period = 2 * n as i128;
    PI * k.rem_euclid(period) as f64 / n as f64
}

/// Cat-like state produced by the Kerr Hamiltonian `-½ħg a†²a²` at
/// `gt = 2πM/N`: components at `e^{iφ_k} α_0` with `φ_k = (2k+N-3)π/N` and
/// `c_k = (1/N) Σ_{n=1}^{N} exp{i n [(M/N)π(n-1) - φ_k]}`.
///
/// All phases are reduced with integer arithmetic before the exponential.
pub fn make_kerr_state(s: KerrSchedule) -> Result<CoherentSuperposition> {
    let big_n = s.n as i128;
    let m = (s.m % (2 * s.n)) as i128;
    let comps = (1..=big_n).map(|k| {
        let phi_units = 2 * k + big_n - 3;
        let mut c = Complex64::new(0.0, 0.0);
        for n in 1..=big_n {
            let units = n * (n - 1) * m - n * phi_units;
            c += Complex64::from_polar(1.0, angle_in_units_of_pi_over_n(units, s.n));
        }
        let amp = Complex64::from_polar(1.0, angle_in_units_of_pi_over_n(phi_units, s.n)) * s.alpha0;
        (c / big_n as f64, amp)
    });
    gram_normalize(comps)
}

/// Largest number of well-separated components on a circle of radius
/// `|α_0|`: `Int(2^{-1/2} π |α_0|)`.
pub fn n_max(alpha0: Complex64) -> usize {
    (PI * alpha0.norm() / 2f64.sqrt()).floor() as usize
}
