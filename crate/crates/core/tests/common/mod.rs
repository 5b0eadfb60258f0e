#![allow(dead_code)]

use catphase::{gram_normalize, CoherentSuperposition, Complex64};
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Random superpositions of 1..=4 components with amplitudes in a 6×6 box.
pub fn arb_state() -> impl Strategy<Value = CoherentSuperposition> {
    prop::collection::vec(((-1.0..1.0f64, -1.0..1.0f64), (-3.0..3.0f64, -3.0..3.0f64)), 1..=4).prop_filter_map(
        "cancelling superposition",
        |parts| {
            let comps = parts.into_iter().map(|((cr, ci), (ar, ai))| (c(cr, ci), c(ar, ai)));
            gram_normalize(comps).ok()
        },
    )
}

/// `⟨α|ψ⟩ = Σ_k c_k ⟨α|α_k⟩` without any log-space tricks.
pub fn amplitude(state: &CoherentSuperposition, alpha: Complex64) -> Complex64 {
    state
        .components()
        .iter()
        .map(|k| {
            k.coefficient * (-0.5 * alpha.norm_sqr() - 0.5 * k.amplitude.norm_sqr() + alpha.conj() * k.amplitude).exp()
        })
        .sum()
}

/// `⟨α|ψ⟩` for `ψ = e^{-|α_0|²/2} Σ_n g(n) α_0^n/√n! |n⟩`, summed in the
/// number basis.
pub fn fock_amplitude(alpha: Complex64, alpha0: Complex64, g: impl Fn(u64) -> Complex64) -> Complex64 {
    let x = alpha.conj() * alpha0;
    let mut term = c(1.0, 0.0);
    let mut sum = g(0) * term;
    for n in 1..400u64 {
        term *= x / n as f64;
        sum += g(n) * term;
        if term.norm() < 1e-300 {
            break;
        }
    }
    sum * (-0.5 * alpha.norm_sqr() - 0.5 * alpha0.norm_sqr()).exp()
}
