//! Husimi Q-function of coherent-state superpositions.
//!
//! The direct route evaluates `Q(α) = π⁻¹ |Σ_k c_k ⟨α|α_k⟩|²` with the
//! overlaps assembled in log space. [`q_decompose`] splits the same value into
//! the coherent ("free") terms and the pairwise interference terms.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::CoherentSuperposition;

/// A point `α = r e^{iθ}` of the phase plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint(Complex64);

impl PhasePoint {
    pub fn new(alpha: Complex64) -> Self {
        Self(alpha)
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        if !(r >= 0.0) {
            return Err(Error::InvalidArgument(format!("radius must be non-negative, got {r}")));
        }
        Ok(Self(Complex64::from_polar(r, theta)))
    }

    pub fn alpha(&self) -> Complex64 {
        self.0
    }

    pub fn radius(&self) -> f64 {
        self.0.norm()
    }

    /// `Arg α` in `[0, 2π)`.
    pub fn theta(&self) -> f64 {
        self.0.arg().rem_euclid(TAU)
    }
}

impl From<Complex64> for PhasePoint {
    fn from(alpha: Complex64) -> Self {
        Self(alpha)
    }
}

/// `(Q(α), ln Q(α))`. The logarithm is exact even where `Q` underflows;
/// it is `-∞` only at exact zeros of the amplitude.
pub fn q_with_log(state: &CoherentSuperposition, alpha: Complex64) -> (f64, f64) {
    let base = -0.5 * alpha.norm_sqr();
    let alpha_conj = alpha.conj();

    // Running log-sum-exp: `sum · e^{shift}` is the amplitude, and `shift`
    // tracks the largest real exponent seen so far.
    let mut shift = f64::NEG_INFINITY;
    let mut sum = Complex64::new(0.0, 0.0);
    for c in state.components() {
        let z = alpha_conj * c.amplitude;
        let re = base - 0.5 * c.amplitude.norm_sqr() + z.re;
        if re > shift {
            sum *= (shift - re).exp();
            shift = re;
        }
        sum += c.coefficient * Complex64::from_polar((re - shift).exp(), z.im);
    }
    let mag2 = sum.norm_sqr();
    if mag2 == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    let ln_q = mag2.ln() + 2.0 * shift - PI.ln();
    (ln_q.exp(), ln_q)
}

/// Husimi function `Q(α) = π⁻¹⟨α|ρ|α⟩` of a pure superposition.
pub fn q_value(state: &CoherentSuperposition, point: PhasePoint) -> f64 {
    q_with_log(state, point.alpha()).0
}

/// `Q = Q_0 + Q_int` at one phase-space point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QDecomposition {
    /// `Σ_k |c_k|² Q_k(α)`, the coherent terms.
    pub free: f64,
    /// `2 Σ_{k>l} |c_k||c_l| Q_kl(α)`, signed.
    pub interference: f64,
    pub total: f64,
}

const NEGATIVE_TOTAL_TOL: f64 = 1e-14;

/// Splits `Q(α)` into coherent and interference parts.
///
/// `Q_k = π⁻¹ exp(-|α - α_k|²)` and
/// `Q_kl = √(Q_k Q_l) cos[γ_k - γ_l + Im(α* α_k) - Im(α* α_l)]`, where
/// `γ_k = Arg c_k`. For amplitudes `α_k = e^{iφ_k} α_0` on a common circle
/// the phase difference is `2|α||α_0| cos(φ⁺_kl + θ_0 - θ) sin φ⁻_kl`.
pub fn q_decompose(state: &CoherentSuperposition, point: PhasePoint) -> QDecomposition {
    let alpha = point.alpha();
    let comps = state.components();
    let dist2: Vec<f64> = comps.iter().map(|c| (alpha - c.amplitude).norm_sqr()).collect();

    let free: f64 = comps
        .iter()
        .zip(&dist2)
        .map(|(c, d)| c.coefficient.norm_sqr() * (-d).exp() / PI)
        .sum();

    let mut interference = 0.0;
    for k in 0..comps.len() {
        for l in 0..k {
            let (ck, cl) = (comps[k], comps[l]);
            let root_qkql = (-0.5 * (dist2[k] + dist2[l])).exp() / PI;
            let phase = ck.coefficient.arg() - cl.coefficient.arg() + (alpha.conj() * ck.amplitude).im
                - (alpha.conj() * cl.amplitude).im;
            interference += 2.0 * ck.coefficient.norm() * cl.coefficient.norm() * root_qkql * phase.cos();
        }
    }

    let raw = free + interference;
    debug_assert!(raw >= -NEGATIVE_TOTAL_TOL, "negative Husimi value {raw}");
    QDecomposition {
        free,
        interference,
        total: raw.max(0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{gram_normalize, make_cat, CatParameters};
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn vacuum_and_coherent_peaks() {
        let vac = CoherentSuperposition::vacuum();
        assert_abs_diff_eq!(q_value(&vac, PhasePoint::new(c(0.0, 0.0))), 1.0 / PI, epsilon = 1e-16);
        let a = c(2.0, -1.5);
        let coh = CoherentSuperposition::coherent(a);
        assert_abs_diff_eq!(q_value(&coh, a.into()), 1.0 / PI, epsilon = 1e-15);
    }

    #[test]
    fn log_is_finite_far_out() {
        let coh = CoherentSuperposition::coherent(c(1.0, 0.0));
        let (q, ln_q) = q_with_log(&coh, c(40.0, 0.0));
        assert_eq!(q, 0.0);
        assert_abs_diff_eq!(ln_q, -(39.0f64.powi(2)) - PI.ln(), epsilon = 1e-9);
    }

    #[test]
    fn odd_cat_vanishes_at_origin() {
        let odd = make_cat(CatParameters::odd(c(0.4, 0.0))).unwrap();
        let (q, ln_q) = q_with_log(&odd, c(0.0, 0.0));
        assert!(q < 1e-30);
        assert!(ln_q < -60.0);
    }

    #[test]
    fn single_component_has_no_interference() {
        let coh = CoherentSuperposition::coherent(c(0.3, 0.9));
        for alpha in [c(0.0, 0.0), c(1.0, 1.0), c(-2.0, 0.5)] {
            let d = q_decompose(&coh, alpha.into());
            assert_eq!(d.interference, 0.0);
            assert_abs_diff_eq!(d.total, q_value(&coh, alpha.into()), epsilon = 1e-15);
        }
    }

    #[test]
    fn well_separated_interference_is_negligible() {
        let a = c(12f64.sqrt(), 0.0);
        let even = make_cat(CatParameters::even(a)).unwrap();
        let d = q_decompose(&even, a.into());
        assert!(d.interference.abs() <= (-12f64).exp() / PI);
    }

    #[test]
    fn rejects_negative_radius() {
        assert!(PhasePoint::from_polar(-1.0, 0.0).is_err());
        let p = PhasePoint::from_polar(2.0, -0.5 * PI).unwrap();
        assert_abs_diff_eq!(p.theta(), 1.5 * PI, epsilon = 1e-15);
        assert_abs_diff_eq!(p.radius(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn decomposition_matches_direct_for_mixed_moduli() {
        let st = gram_normalize([
            (c(0.6, 0.2), c(0.5, 0.0)),
            (c(-0.3, 0.7), c(-1.0, 0.8)),
            (c(0.1, -0.4), c(0.0, -2.0)),
        ])
        .unwrap();
        for alpha in [c(0.0, 0.0), c(0.4, -0.3), c(-1.5, 1.2), c(2.0, 2.0)] {
            let d = q_decompose(&st, alpha.into());
            assert_abs_diff_eq!(d.total, q_value(&st, alpha.into()), epsilon = 1e-12);
        }
    }
}
