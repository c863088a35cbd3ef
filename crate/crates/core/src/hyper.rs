//! Generalized hypergeometric series at unit argument and the two closed
//! summation identities used downstream (Dougall–Ramanujan, Whipple).
//!
//! Series on the unit circle decay only polynomially, so raw partial sums
//! stall far above useful tolerances. [`pfq`] therefore finishes with a
//! Hurwitz-zeta (Euler–Maclaurin) tail estimate at z = 1 and sums by
//! iterated averaging of partial sums (Euler transformation) at z = −1,
//! where the terms alternate. Polynomial (truncating) cases are exact.

use num_complex::Complex64;

use crate::specfun::{eval_gamma_ratio, is_gamma_pole, GammaRatioExpr, MeroValue, POLE_TOL};
use crate::{Error, Result};

/// Parameters of a ₚF_q series: upper α_i, lower β_j, argument z.
#[derive(Debug, Clone)]
pub struct HyperParams {
    pub upper: Vec<Complex64>,
    pub lower: Vec<Complex64>,
    pub argument: Complex64,
}

impl HyperParams {
    pub fn new(upper: Vec<Complex64>, lower: Vec<Complex64>, argument: Complex64) -> Self {
        Self { upper, lower, argument }
    }
}

/// Result of a truncated series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: u32,
    pub last_term_mag: f64,
    pub converged: bool,
}

pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_TERMS: u32 = 100_000;

/// Index at which an upper parameter truncates the series, if any.
fn truncation_order(upper: &[Complex64]) -> Option<u32> {
    upper
        .iter()
        .filter(|a| is_gamma_pole(**a, POLE_TOL))
        .map(|a| (-a.re.round()) as u32)
        .min()
}

/// Evaluate ₚF_q(α; β; z) = Σ_l Π(α_i)_l / Π(β_j)_j · z^l / l!.
///
/// Terms are generated by the running ratio update
/// term_{l+1} = term_l · Π(α_i+l)/Π(β_j+l) · z/(l+1).
/// Truncating series are summed exactly. At z = −1 the alternating partial
/// sums are accelerated by iterated averaging with a built-in error
/// estimate. Otherwise summation stops once |term| ≤ rel_tol·|partial| held
/// for 3 consecutive terms, with an analytic tail correction at z = 1;
/// `converged` is false if `max_terms` is hit first. At z = 1 the
/// convergence excess Re(Σβ − Σα) must be positive.
pub fn pfq(params: &HyperParams, rel_tol: f64, max_terms: u32) -> Result<SeriesResult> {
    let z = params.argument;
    let truncation = truncation_order(&params.upper);
    let excess: Complex64 = params.lower.iter().sum::<Complex64>() - params.upper.iter().sum::<Complex64>();

    let at_plus_one = (z - 1.0).norm() < 1e-12;
    let at_minus_one = (z + 1.0).norm() < 1e-12;
    if at_plus_one && truncation.is_none() && excess.re <= 0.05 {
        return Err(Error::NonConvergent(format!(
            "pFq at z=1 requires Re(Σβ − Σα) > 0, got {}",
            excess.re
        )));
    }
    // z = −1 alternating case: terms must still tend to zero
    if at_minus_one && truncation.is_none() && excess.re <= -0.95 {
        return Err(Error::NonConvergent(format!(
            "pFq at z=−1 requires Re(Σβ − Σα) > −1, got {}",
            excess.re
        )));
    }

    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut consecutive_small = 0u32;
    let mut terms_used = 1u32;
    let mut l = 0u32;
    // window of recent partial sums for the alternating accelerator
    const WINDOW: usize = 16;
    let mut window = [Complex64::new(0.0, 0.0); WINDOW];
    let mut stable = 0u32;
    let minus_accel = at_minus_one && truncation.is_none();
    let plus_accel = at_plus_one && truncation.is_none();
    // checkpoints for the z = 1 tail model t_l ≈ C l^{−σ}(1 + d/l)
    let sigma = excess + 1.0;
    let mut checkpoint: Option<(u32, Complex64)> = None;
    let mut tail_estimate: Option<Complex64> = None;

    loop {
        if let Some(m) = truncation {
            if l >= m {
                // all further terms vanish identically
                return Ok(SeriesResult {
                    value: sum,
                    terms_used,
                    last_term_mag: term.norm(),
                    converged: true,
                });
            }
        }
        if terms_used >= max_terms {
            let (value, converged) = if minus_accel && l as usize >= WINDOW {
                let mut ordered = [Complex64::new(0.0, 0.0); WINDOW];
                for (i, slot) in ordered.iter_mut().enumerate() {
                    *slot = window[(l as usize - WINDOW + i) % WINDOW];
                }
                let (v, err) = averaged_limit(&ordered);
                (v, err <= rel_tol * v.norm())
            } else if let Some(v) = tail_estimate {
                (v, false)
            } else {
                (sum, false)
            };
            return Ok(SeriesResult {
                value,
                terms_used,
                last_term_mag: term.norm(),
                converged,
            });
        }

        let mut ratio = z / (l as f64 + 1.0);
        for &a in &params.upper {
            ratio *= a + l as f64;
        }
        for &b in &params.lower {
            let f = b + l as f64;
            if f.norm() < POLE_TOL {
                return Err(Error::Domain(format!(
                    "lower parameter {b} reaches a pole at term {l} before truncation"
                )));
            }
            ratio /= f;
        }
        term *= ratio;
        sum += term;
        window[(l as usize) % WINDOW] = sum;
        l += 1;
        terms_used += 1;

        if minus_accel {
            if l as usize >= WINDOW + 16 {
                let mut ordered = [Complex64::new(0.0, 0.0); WINDOW];
                for (i, slot) in ordered.iter_mut().enumerate() {
                    *slot = window[(l as usize - WINDOW + i) % WINDOW];
                }
                let (v, err) = averaged_limit(&ordered);
                if err <= rel_tol * v.norm() {
                    stable += 1;
                    if stable >= 2 {
                        return Ok(SeriesResult {
                            value: v,
                            terms_used,
                            last_term_mag: term.norm(),
                            converged: true,
                        });
                    }
                } else {
                    stable = 0;
                }
            }
            continue;
        }

        if plus_accel {
            if l % 32 == 0 && l >= 96 {
                let v = sum + fitted_tail(sigma, term, l, checkpoint);
                if let Some(prev) = tail_estimate {
                    if (v - prev).norm() <= 0.3 * rel_tol * v.norm() {
                        stable += 1;
                        if stable >= 2 {
                            return Ok(SeriesResult {
                                value: v,
                                terms_used,
                                last_term_mag: term.norm(),
                                converged: true,
                            });
                        }
                    } else {
                        stable = 0;
                    }
                }
                tail_estimate = Some(v);
                checkpoint = Some((l, term));
            }
            continue;
        }

        if term.norm() <= rel_tol * sum.norm() {
            consecutive_small += 1;
            if consecutive_small >= 3 {
                break;
            }
        } else {
            consecutive_small = 0;
        }
    }

    Ok(SeriesResult {
        value: sum,
        terms_used,
        last_term_mag: term.norm(),
        converged: true,
    })
}

/// ζ(s, a) for complex s (Re s > −4) and real a ≥ 10, by Euler–Maclaurin.
fn hurwitz_zeta(s: Complex64, a: f64) -> Complex64 {
    let m = 8u32;
    let b = a + m as f64;
    let p = |e: Complex64| -> Complex64 { (-e * b.ln()).exp() };
    let mut zeta = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let aj = a + j as f64;
        zeta += (-s * aj.ln()).exp();
    }
    zeta += p(s - 1.0) / (s - 1.0) + 0.5 * p(s) + s * p(s + 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * p(s + 3.0) / 720.0
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * p(s + 5.0) / 30240.0;
    zeta
}

/// Σ_{j>L} t_j at z = 1, from the model t_l ≈ C l^{−σ}(1 + d/l) with C and d
/// fitted to the last term and an earlier checkpoint.
fn fitted_tail(
    sigma: Complex64,
    t_last: Complex64,
    last_index: u32,
    checkpoint: Option<(u32, Complex64)>,
) -> Complex64 {
    let l = last_index as f64;
    let w = t_last * (sigma * l.ln()).exp();
    let (c, d) = match checkpoint {
        Some((l0, t0)) if l0 != last_index => {
            let l0 = l0 as f64;
            let w0 = t0 * (sigma * l0.ln()).exp();
            let r = w / w0;
            let denom = Complex64::new(1.0 / l, 0.0) - r / l0;
            if denom.norm() < 1e-18 {
                (w, Complex64::new(0.0, 0.0))
            } else {
                let d = (r - 1.0) / denom;
                (w / (1.0 + d / l), d)
            }
        }
        _ => (w, Complex64::new(0.0, 0.0)),
    };
    c * (hurwitz_zeta(sigma, l + 1.0) + d * hurwitz_zeta(sigma + 1.0, l + 1.0))
}

/// Iterated averaging (Euler transformation) of a run of oscillating partial
/// sums; returns the extrapolated limit and the size of the last averaging
/// step as an error estimate.
fn averaged_limit(partials: &[Complex64]) -> (Complex64, f64) {
    let mut level: Vec<Complex64> = partials.to_vec();
    let mut prev = *level.last().unwrap();
    while level.len() > 1 {
        prev = *level.last().unwrap();
        for i in 0..level.len() - 1 {
            level[i] = 0.5 * (level[i] + level[i + 1]);
        }
        level.pop();
    }
    let v = level[0];
    (v, (v - prev).norm())
}

/// True iff the series is well-poised: p = q+1 and
/// 1 + α₁ = α₂ + β₁ = ⋯ = α_p + β_q, to 1e-10.
pub fn is_well_poised(params: &HyperParams) -> bool {
    if params.upper.len() != params.lower.len() + 1 {
        return false;
    }
    let target = params.upper[0] + 1.0;
    params.upper[1..]
        .iter()
        .zip(&params.lower)
        .all(|(a, b)| (a + b - target).norm() < 1e-10)
}

/// Right-hand side of the Dougall–Ramanujan summation:
/// Γ(x+m)Γ(y+m)Γ(z+m)Γ(x+y+z+m) / Γ(m)Γ(x+y+m)Γ(y+z+m)Γ(x+z+m).
pub fn dougall_rhs(m: Complex64, x: Complex64, y: Complex64, z: Complex64) -> MeroValue {
    let expr = GammaRatioExpr::new(
        vec![x + m, y + m, z + m, x + y + z + m],
        vec![m, x + y + m, y + z + m, x + z + m],
        Complex64::new(1.0, 0.0),
    );
    eval_gamma_ratio(&expr)
}

/// The well-poised ₅F₄ of the Dougall–Ramanujan identity, as series params:
/// ₅F₄(m−1, (m+1)/2, −x, −y, −z; (m−1)/2, x+m, y+m, z+m; 1).
pub fn dougall_series_params(m: Complex64, x: Complex64, y: Complex64, z: Complex64) -> HyperParams {
    HyperParams::new(
        vec![m - 1.0, (m + 1.0) / 2.0, -x, -y, -z],
        vec![(m - 1.0) / 2.0, x + m, y + m, z + m],
        Complex64::new(1.0, 0.0),
    )
}

/// Right-hand side of Whipple's transformation for the well-poised ₆F₅ at −1:
/// Γ(1+a−d)Γ(1+a−e)/(Γ(1+a)Γ(1+a−d−e)) · ₃F₂(1+a−b−c, d, e; 1+a−b, 1+a−c; 1).
pub fn whipple_rhs(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    e: Complex64,
    rel_tol: f64,
    max_terms: u32,
) -> Result<SeriesResult> {
    let prefactor = eval_gamma_ratio(&GammaRatioExpr::new(
        vec![a + 1.0 - d, a + 1.0 - e],
        vec![a + 1.0, a + 1.0 - d - e],
        Complex64::new(1.0, 0.0),
    ));
    let f32_params = HyperParams::new(
        vec![a + 1.0 - b - c, d, e],
        vec![a + 1.0 - b, a + 1.0 - c],
        Complex64::new(1.0, 0.0),
    );
    match prefactor {
        MeroValue::Pole => Err(Error::Domain("Whipple prefactor has a pole".into())),
        MeroValue::Zero => Ok(SeriesResult {
            value: Complex64::new(0.0, 0.0),
            terms_used: 0,
            last_term_mag: 0.0,
            converged: true,
        }),
        MeroValue::Finite(p) => {
            let series = pfq(&f32_params, rel_tol, max_terms)?;
            Ok(SeriesResult { value: p * series.value, ..series })
        }
    }
}

/// The well-poised ₆F₅ at −1 that Whipple's transformation reduces:
/// ₆F₅(a, 1+a/2, b, c, d, e; a/2, 1+a−b, 1+a−c, 1+a−d, 1+a−e; −1).
pub fn whipple_series_params(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    e: Complex64,
) -> HyperParams {
    HyperParams::new(
        vec![a, a / 2.0 + 1.0, b, c, d, e],
        vec![a / 2.0, a + 1.0 - b, a + 1.0 - c, a + 1.0 - d, a + 1.0 - e],
        Complex64::new(-1.0, 0.0),
    )
}
