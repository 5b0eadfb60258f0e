//! Closed-form phase distributions of coherent states and the
//! large-separation approximations built from them.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::states::CoherentSuperposition;

/// Spread of component moduli accepted as "one circle".
pub const COMMON_MODULUS_TOL: f64 = 1e-9;

/// Error function, accurate to a few ulp over the whole real line.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function `1 - erf(x)` without cancellation.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// A coherent state `|α_0⟩` observed along the ray `Arg α = θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentPDParams {
    pub alpha0: Complex64,
    pub theta: f64,
}

impl CoherentPDParams {
    pub fn new(alpha0: Complex64, theta: f64) -> Self {
        Self { alpha0, theta }
    }

    /// `X = |α_0| cos(θ - θ_0)`, the projection of `α_0` on the ray.
    pub fn x(&self) -> f64 {
        let theta0 = self.alpha0.arg();
        self.alpha0.norm() * (self.theta - theta0).cos()
    }

    /// `X_0 = |α_0|`.
    pub fn x0(&self) -> f64 {
        self.alpha0.norm()
    }

    /// `f_j = X_0² - X² + ln π + j/2`.
    pub fn f(&self, j: u8) -> f64 {
        let (x, x0) = (self.x(), self.x0());
        x0 * x0 - x * x + PI.ln() + 0.5 * f64::from(j)
    }
}

/// The two terms shared by the coherent Wehrl and Husimi PDs:
/// `(e^{-X_0²}/2π, e^{X²-X_0²} √π X [1 + erf X] / 2π)`.
///
/// The Husimi PD is their sum; the Wehrl PD weights them by `f_2` and `f_1`.
pub fn coherent_pd_terms(p: CoherentPDParams) -> (f64, f64) {
    let (x, x0) = (p.x(), p.x0());
    let vacuum = (-x0 * x0).exp() / (2.0 * PI);
    // 1 + erf(X) = erfc(-X); exact for X → -∞ where the sum cancels.
    let shifted = ((x * x - x0 * x0).exp() * PI.sqrt() * x * erfc(-x)) / (2.0 * PI);
    (vacuum, shifted)
}

/// Wehrl phase distribution `S^cs_θ(α_0)` of a coherent state.
pub fn coherent_wehrl_pd(p: CoherentPDParams) -> f64 {
    let (vacuum, shifted) = coherent_pd_terms(p);
    vacuum * p.f(2) + shifted * p.f(1)
}

/// Husimi phase distribution `P^cs_θ(α_0)` of a coherent state.
pub fn coherent_husimi_pd(p: CoherentPDParams) -> f64 {
    let (vacuum, shifted) = coherent_pd_terms(p);
    vacuum + shifted
}

/// Well-separated approximation of the Wehrl PD of the two-component cat
/// `|α_0⟩ ± |-α_0⟩`; independent of the superposition phase.
pub fn approx_cat_wehrl_pd(alpha0: Complex64, theta: f64) -> f64 {
    let plus = CoherentPDParams::new(alpha0, theta);
    let minus = CoherentPDParams::new(-alpha0, theta);
    0.5 * (coherent_wehrl_pd(plus)
        + coherent_wehrl_pd(minus)
        + std::f64::consts::LN_2 * (coherent_husimi_pd(plus) + coherent_husimi_pd(minus)))
}

fn xlogx(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        p * p.ln()
    }
}

/// Well-separated approximation of the Wehrl PD of a superposition whose
/// components share one modulus:
/// `Σ_k w_k S^cs_θ(α_k) - Σ_k w_k ln w_k P^cs_θ(α_k)` with `w_k` from
/// [`CoherentSuperposition::weights`].
pub fn approx_kitten_wehrl_pd(state: &CoherentSuperposition, theta: f64) -> Result<f64> {
    state.common_modulus(COMMON_MODULUS_TOL)?;
    let weights = state.weights();
    Ok(state
        .components()
        .iter()
        .zip(weights)
        .map(|(c, w)| {
            let p = CoherentPDParams::new(c.amplitude, theta);
            w * coherent_wehrl_pd(p) - xlogx(w) * coherent_husimi_pd(p)
        })
        .sum())
}

/// `1 + ln π - Σ_k w_k ln w_k`: the Wehrl entropy of well-separated
/// components with weights `w_k`.
pub fn approx_wehrl_entropy(weights: &[f64]) -> Result<f64> {
    let sum: f64 = weights.iter().sum();
    if weights.is_empty() || weights.iter().any(|&w| !(w >= 0.0)) || (sum - 1.0).abs() > 1e-9 {
        return Err(Error::BadWeights { sum });
    }
    Ok(1.0 + PI.ln() - weights.iter().map(|&w| xlogx(w)).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{gram_normalize, make_cat, make_equientropic, CatParameters};
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Periodic trapezoid on `[0, 2π)`.
    fn theta_integral(f: impl Fn(f64) -> f64, n: usize) -> f64 {
        let h = 2.0 * PI / n as f64;
        (0..n).map(|i| f(i as f64 * h)).sum::<f64>() * h
    }

    #[test]
    fn erf_reference_values() {
        assert_eq!(erf(0.0), 0.0);
        assert_abs_diff_eq!(erf(1.0), 0.842700792949715, epsilon = 1e-15);
        for x in [0.1, 0.5, 2.0, 4.5, 30.0] {
            assert_eq!(erf(x), -erf(-x));
            assert_abs_diff_eq!(erf(x) + erfc(x), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn vacuum_profiles_are_flat() {
        for theta in [0.0, 1.0, 4.0] {
            let p = CoherentPDParams::new(c(0.0, 0.0), theta);
            assert_abs_diff_eq!(coherent_wehrl_pd(p), (PI.ln() + 1.0) / (2.0 * PI), epsilon = 1e-15);
            assert_abs_diff_eq!(coherent_husimi_pd(p), 1.0 / (2.0 * PI), epsilon = 1e-15);
        }
    }

    #[test]
    fn husimi_pd_perpendicular_ray() {
        let a = c(1.2, 0.9);
        let p = CoherentPDParams::new(a, a.arg() + 0.5 * PI);
        assert_abs_diff_eq!(
            coherent_husimi_pd(p),
            (-a.norm_sqr()).exp() / (2.0 * PI),
            epsilon = 1e-15
        );
    }

    #[test]
    fn peak_value_at_sqrt12() {
        let a0 = 12f64.sqrt();
        let p = CoherentPDParams::new(c(a0, 0.0), 0.0);
        let expected =
            ((-12f64).exp() * (PI.ln() + 1.0) + PI.sqrt() * a0 * (1.0 + erf(a0)) * (PI.ln() + 0.5)) / (2.0 * PI);
        assert_abs_diff_eq!(coherent_wehrl_pd(p), expected, epsilon = 1e-14);
    }

    #[test]
    fn wehrl_pd_is_reconstructed_from_husimi_terms() {
        for a in [c(0.0, 0.0), c(0.7, 0.1), c(-2.0, 1.5), c(0.0, 4.0)] {
            for i in 0..16 {
                let p = CoherentPDParams::new(a, i as f64 * PI / 8.0);
                let (t0, t1) = coherent_pd_terms(p);
                assert_eq!(coherent_husimi_pd(p), t0 + t1);
                assert_eq!(coherent_wehrl_pd(p), t0 * p.f(2) + t1 * p.f(1));
                if p.f(1) > 0.0 {
                    assert!(coherent_wehrl_pd(p) >= coherent_husimi_pd(p) * p.f(1).min(p.f(2)));
                }
            }
        }
    }

    #[test]
    fn coherent_integrals() {
        for r in [0.0, 0.5, 1.0, 12f64.sqrt(), 6.0] {
            let a = c(r * 0.6, r * 0.8);
            let s = theta_integral(|t| coherent_wehrl_pd(CoherentPDParams::new(a, t)), 1024);
            let p = theta_integral(|t| coherent_husimi_pd(CoherentPDParams::new(a, t)), 1024);
            assert_abs_diff_eq!(s, 1.0 + PI.ln(), epsilon = 1e-8);
            assert_abs_diff_eq!(p, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn cat_approximation_integrates_to_ln_2pi() {
        let a = c(2.5, 0.3);
        let s = theta_integral(|t| approx_cat_wehrl_pd(a, t), 1024);
        assert_abs_diff_eq!(s, 1.0 + (2.0 * PI).ln(), epsilon = 1e-10);
    }

    #[test]
    fn kitten_reduces_to_cat_for_two_equal_weights() {
        let a = c(1.7, -0.2);
        let even = make_cat(CatParameters::even(a)).unwrap();
        let odd = make_cat(CatParameters::odd(a)).unwrap();
        for i in 0..32 {
            let t = i as f64 * PI / 16.0;
            assert_abs_diff_eq!(
                approx_kitten_wehrl_pd(&even, t).unwrap(),
                approx_cat_wehrl_pd(a, t),
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(
                approx_kitten_wehrl_pd(&odd, t).unwrap(),
                approx_cat_wehrl_pd(a, t),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn kitten_equal_weights_form() {
        let n = 5;
        let a = c(4.0, 0.0);
        let st = gram_normalize((0..n).map(|k| {
            (
                c(1.0, 0.0),
                Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64) * a,
            )
        }))
        .unwrap();
        for i in 0..20 {
            let t = i as f64 * 0.3;
            let expected: f64 = st
                .components()
                .iter()
                .map(|comp| {
                    let p = CoherentPDParams::new(comp.amplitude, t);
                    coherent_wehrl_pd(p) + coherent_husimi_pd(p) * (n as f64).ln()
                })
                .sum::<f64>()
                / n as f64;
            assert_abs_diff_eq!(approx_kitten_wehrl_pd(&st, t).unwrap(), expected, epsilon = 1e-13);
        }
    }

    #[test]
    fn kitten_integral_matches_entropy_formula() {
        let st = make_equientropic(c(0.0, 12f64.sqrt()), 4).unwrap();
        let s = theta_integral(|t| approx_kitten_wehrl_pd(&st, t).unwrap(), 2048);
        let expected = approx_wehrl_entropy(&st.weights()).unwrap();
        assert_abs_diff_eq!(s, expected, epsilon = 1e-8);
        // Equientropic weights carry mixing entropy ln 2.
        assert_abs_diff_eq!(expected, 1.0 + (2.0 * PI).ln(), epsilon = 1e-12);
    }

    #[test]
    fn kitten_rejects_mixed_moduli() {
        let st = gram_normalize([(c(1.0, 0.0), c(1.0, 0.0)), (c(1.0, 0.0), c(-2.0, 0.0))]).unwrap();
        assert!(matches!(
            approx_kitten_wehrl_pd(&st, 0.0),
            Err(Error::MixedModuli { .. })
        ));
    }

    #[test]
    fn entropy_formula_table() {
        assert_abs_diff_eq!(
            approx_wehrl_entropy(&[0.5, 0.5]).unwrap(),
            1.0 + (2.0 * PI).ln(),
            epsilon = 1e-15
        );
        for n in 1..=8 {
            let w = vec![1.0 / n as f64; n];
            assert_abs_diff_eq!(
                approx_wehrl_entropy(&w).unwrap(),
                1.0 + (n as f64 * PI).ln(),
                epsilon = 1e-14
            );
        }
        assert_abs_diff_eq!(
            approx_wehrl_entropy(&[1.0, 0.0]).unwrap(),
            1.0 + PI.ln(),
            epsilon = 1e-15
        );
        assert!(matches!(
            approx_wehrl_entropy(&[0.5, 0.6]),
            Err(Error::BadWeights { .. })
        ));
        assert!(matches!(
            approx_wehrl_entropy(&[1.5, -0.5]),
            Err(Error::BadWeights { .. })
        ));
        assert!(matches!(approx_wehrl_entropy(&[]), Err(Error::BadWeights { .. })));
    }
}
