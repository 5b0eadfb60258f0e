//! The invariant suite behind `catphase validate`.
//!
//! Each check measures one number and compares it with a fixed limit, so the
//! report shows how much headroom every invariant has.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use catphase::closedform::{approx_wehrl_entropy, coherent_husimi_pd, coherent_wehrl_pd, CoherentPDParams};
use catphase::quadrature::phase_profiles;
use catphase::states::equientropic_residual;
use catphase::{
    default_quadrature, direct_wehrl_entropy, lieb_floor, make_cat, make_equientropic, make_kerr_state, n_max,
    q_decompose, q_value, solve_equientropic_weight, wehrl_entropy, wehrl_pd, CatParameters, CoherentSuperposition,
    Complex64, Execution, KerrSchedule,
};

use crate::emit::{Cell, Table};
use crate::CliError;

const TOL: f64 = 1e-8;

/// `measured <= limit` passes (`>` for lower bounds is expressed by negation
/// at the call site).
struct Check {
    name: &'static str,
    measured: f64,
    limit: f64,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn kerr(m: u64, n: u64, a: f64) -> catphase::Result<CoherentSuperposition> {
    make_kerr_state(KerrSchedule::new(m, n, c(a, 0.0))?)
}

fn entropy(state: &CoherentSuperposition) -> catphase::Result<f64> {
    Ok(wehrl_entropy(state, &default_quadrature(state, TOL)?)?.wehrl_entropy)
}

fn coherent_floor() -> catphase::Result<Check> {
    let mut worst = 0.0f64;
    for a in [c(0.0, 0.0), c(1.0, 2.0), c(12f64.sqrt(), 0.0)] {
        worst = worst.max((entropy(&CoherentSuperposition::coherent(a))? - lieb_floor()).abs());
    }
    Ok(Check {
        name: "coherent entropy equals 1 + ln pi",
        measured: worst,
        limit: 1e-7,
    })
}

fn cat_floor() -> catphase::Result<Check> {
    let mut worst = f64::NEG_INFINITY;
    for gamma in [0.0, FRAC_PI_2, PI] {
        for a in [0.4, 1.2, 2.4] {
            let s = entropy(&make_cat(CatParameters::new(c(a, 0.0), gamma))?)?;
            worst = worst.max(lieb_floor() - s);
        }
    }
    Ok(Check {
        name: "cat entropies stay above 1 + ln pi (deficit)",
        measured: worst,
        limit: 1e-7,
    })
}

fn closed_forms() -> catphase::Result<Vec<Check>> {
    let (mut s_err, mut p_err) = (0.0f64, 0.0f64);
    for a in [c(0.0, 0.0), c(1.0, 0.0), c(0.5, -2.0)] {
        let st = CoherentSuperposition::coherent(a);
        let quad = default_quadrature(&st, TOL)?.with_theta_count(128)?;
        let (s, p) = phase_profiles(&st, &quad);
        for (i, &t) in s.thetas.iter().enumerate() {
            let params = CoherentPDParams::new(a, t);
            s_err = s_err.max((s.values[i] - coherent_wehrl_pd(params)).abs());
            p_err = p_err.max((p.values[i] - coherent_husimi_pd(params)).abs());
        }
    }
    Ok(vec![
        Check {
            name: "coherent Wehrl PD matches closed form",
            measured: s_err,
            limit: 1e-6,
        },
        Check {
            name: "coherent Husimi PD matches closed form",
            measured: p_err,
            limit: 1e-8,
        },
    ])
}

fn sample_states() -> catphase::Result<Vec<CoherentSuperposition>> {
    Ok(vec![
        make_cat(CatParameters::odd(c(0.8, 0.0)))?,
        make_cat(CatParameters::yurke_stoler(c(1.2, 0.5)))?,
        make_equientropic(c(2.0, 0.0), 3)?,
        kerr(1, 3, 2.0)?,
    ])
}

fn normalization_and_consistency() -> catphase::Result<Vec<Check>> {
    let (mut norm, mut consistency) = (0.0f64, 0.0f64);
    for st in sample_states()? {
        let quad = default_quadrature(&st, TOL)?;
        let (s, p) = phase_profiles(&st, &quad);
        norm = norm.max((p.integral - 1.0).abs());
        let direct = direct_wehrl_entropy(&st, 1e-9, Execution::default())?;
        consistency = consistency.max((s.integral - direct.wehrl_entropy).abs());
    }
    Ok(vec![
        Check {
            name: "Husimi PD integrates to 1",
            measured: norm,
            limit: 1e-8,
        },
        Check {
            name: "polar entropy matches Cartesian 2D rule",
            measured: consistency,
            limit: 1e-7,
        },
    ])
}

fn husimi_bounds() -> catphase::Result<Vec<Check>> {
    let (mut bound, mut decomposition) = (f64::NEG_INFINITY, 0.0f64);
    for st in sample_states()? {
        for i in 0..24 {
            for j in 0..16 {
                let alpha = Complex64::from_polar(0.25 * i as f64, TAU * j as f64 / 16.0);
                let q = q_value(&st, alpha.into());
                bound = bound.max(-q).max(q - 1.0 / PI);
                decomposition = decomposition.max((q_decompose(&st, alpha.into()).total - q).abs());
            }
        }
    }
    Ok(vec![
        Check {
            name: "0 <= Q <= 1/pi (largest violation)",
            measured: bound,
            limit: 0.0,
        },
        Check {
            name: "free + interference terms equal Q",
            measured: decomposition,
            limit: 1e-14,
        },
    ])
}

fn roots() -> catphase::Result<Vec<Check>> {
    let mut residual = 0.0f64;
    for n in 2..=8 {
        residual = residual.max(equientropic_residual(n, solve_equientropic_weight(n)?).abs());
    }
    Ok(vec![
        Check {
            name: "equientropic roots solve the weight equation",
            measured: residual,
            limit: 1e-12,
        },
        Check {
            name: "equientropic root for N = 2 is 1/2",
            measured: (solve_equientropic_weight(2)? - 0.5).abs(),
            limit: 1e-12,
        },
    ])
}

fn kerr_weights() -> catphase::Result<Vec<Check>> {
    let (mut spread, mut law) = (0.0f64, 0.0f64);
    for n in 2..=6u64 {
        for m in 1..=2 * n {
            let Ok(schedule) = KerrSchedule::new(m, n, c(3.0, 0.0)) else {
                continue;
            };
            let w = make_kerr_state(schedule)?.weights();
            spread = spread.max(w.iter().map(|x| (x - 1.0 / n as f64).abs()).fold(0.0, f64::max));
            law = law.max((approx_wehrl_entropy(&w)? - (1.0 + (n as f64 * PI).ln())).abs());
        }
    }
    Ok(vec![
        Check {
            name: "Kerr kittens have equal weights",
            measured: spread,
            limit: 1e-12,
        },
        Check {
            name: "equal weights give 1 + ln(N pi)",
            measured: law,
            limit: 1e-12,
        },
    ])
}

fn n_max_table() -> Check {
    let got = [
        n_max(c(12f64.sqrt(), 0.0)),
        n_max(c(3.0, 0.0)),
        n_max(c(2f64.sqrt(), 0.0)),
    ];
    let wrong = got.iter().zip([7, 6, 3]).filter(|(g, e)| **g != *e).count();
    Check {
        name: "n_max table (mismatches)",
        measured: wrong as f64,
        limit: 0.0,
    }
}

fn ordering() -> catphase::Result<Check> {
    let a = c(0.4, 0.0);
    let even = make_cat(CatParameters::even(a))?;
    let odd = make_cat(CatParameters::odd(a))?;
    let quad = default_quadrature(&odd, TOL)?.with_theta_count(256)?;
    let (se, so) = (wehrl_pd(&even, &quad), wehrl_pd(&odd, &quad));
    let gap = se
        .values
        .iter()
        .zip(&so.values)
        .map(|(e, o)| o - e)
        .fold(f64::INFINITY, f64::min);
    Ok(Check {
        name: "even cat PD below odd at |alpha0| = 0.4 (negated gap)",
        measured: -gap,
        limit: 0.0,
    })
}

fn determinism() -> catphase::Result<Check> {
    let st = kerr(1, 3, 2.0)?;
    let quad = default_quadrature(&st, TOL)?;
    let seq = phase_profiles(&st, &quad.clone().with_execution(Execution::Sequential));
    let par = phase_profiles(&st, &quad.with_execution(Execution::Parallel));
    let differing = seq
        .0
        .values
        .iter()
        .chain(&seq.1.values)
        .zip(par.0.values.iter().chain(&par.1.values))
        .filter(|(a, b)| a.to_bits() != b.to_bits())
        .count();
    Ok(Check {
        name: "sequential and parallel profiles agree bitwise (differing)",
        measured: differing as f64,
        limit: 0.0,
    })
}

fn all_checks() -> catphase::Result<Vec<Check>> {
    let mut checks = vec![coherent_floor()?, cat_floor()?];
    checks.extend(closed_forms()?);
    checks.extend(normalization_and_consistency()?);
    checks.extend(husimi_bounds()?);
    checks.extend(roots()?);
    checks.extend(kerr_weights()?);
    checks.push(n_max_table());
    checks.push(ordering()?);
    checks.push(determinism()?);
    Ok(checks)
}

/// Returns the report table and whether every check passed.
pub fn validate() -> Result<(Table, bool), CliError> {
    let checks = all_checks()?;
    let mut table = Table::new(
        vec!["check", "status", "measured", "limit"],
        vec!["invariant suite over all library modules"],
    );
    let mut all = true;
    for ch in &checks {
        let ok = ch.measured <= ch.limit;
        all &= ok;
        table.push(vec![
            Cell::Text(ch.name.to_string()),
            Cell::Text(if ok { "PASS" } else { "FAIL" }.to_string()),
            Cell::Num(ch.measured),
            Cell::Num(ch.limit),
        ]);
    }
    Ok((table, all))
}
