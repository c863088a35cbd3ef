//! The closed-form triple-product integrals over (S^{N−1})³ for the three
//! kernels, the spectral trace sums they come from, the constant relating
//! the symplectic and distance cases, and the convergence-region predicates.
//!
//! Each closed form exists in two variants. `printed` is the verbatim
//! display. `consistent` is the same expression rescaled so it matches the
//! spectral chain validated by the oracles (`×(2π^{(m+1)/2}/Γ(m+1/2))³` for
//! the distance kernel, `×π³` for the inner-product kernel); the two
//! coincide for the symplectic kernel.

use num_complex::Complex64;

use crate::harmonics::dim_hk;
use crate::hyper::{pfq, HyperParams, SeriesResult};
use crate::specfun::{eval_gamma_ratio, gamma_real, GammaRatioExpr, MeroValue};
use crate::spectra::{
    a_k, c_nl, gamma_k_funk_hecke, gamma_k_printed, OperatorKind, ParamSet,
};
use crate::{Error, Result};

fn cpow(base: f64, e: Complex64) -> Complex64 {
    (e * base.ln()).exp()
}

fn require_kind(p: &ParamSet, want: &str) -> Result<u32> {
    match (p.kind, want) {
        (OperatorKind::Symplectic(n), "symplectic") => Ok(n),
        (OperatorKind::Distance(m), "distance") => Ok(m),
        (OperatorKind::InnerProduct(nn), "inner") => Ok(nn),
        _ => Err(Error::Domain(format!("parameter set is not for the {want} kernel"))),
    }
}

fn coords(p: &ParamSet) -> Result<([Complex64; 3], [Complex64; 3], Complex64)> {
    let lambda = p.lambda.ok_or_else(|| Error::Domain("λ not populated; convert first".into()))?;
    let abg = p.abg.ok_or_else(|| Error::Domain("(α,β,γ) not populated; convert first".into()))?;
    let delta = p.delta.ok_or_else(|| Error::Domain("δ not populated; convert first".into()))?;
    Ok((lambda, abg, delta))
}

/// Closed form of ∫∫∫ |[Y,Z]|^{(α−n)/2}|[Z,X]|^{(β−n)/2}|[X,Y]|^{(γ−n)/2}:
/// (2π^{n−1/2})³ Γ((2−n+α)/4)Γ((2−n+β)/4)Γ((2−n+γ)/4)Γ((δ+n)/4) /
/// (Γ(n)Γ((n−λ₁)/2)Γ((n−λ₂)/2)Γ((n−λ₃)/2)).
pub fn closed_symplectic(p: &ParamSet) -> Result<MeroValue> {
    let n = require_kind(p, "symplectic")?;
    let (lambda, abg, delta) = coords(p)?;
    let nf = n as f64;
    let pref = (2.0 * std::f64::consts::PI.powf(nf - 0.5)).powi(3);
    Ok(eval_gamma_ratio(&GammaRatioExpr::new(
        vec![
            (2.0 - nf + abg[0]) / 4.0,
            (2.0 - nf + abg[1]) / 4.0,
            (2.0 - nf + abg[2]) / 4.0,
            (delta + nf) / 4.0,
        ],
        vec![
            Complex64::new(nf, 0.0),
            (nf - lambda[0]) / 2.0,
            (nf - lambda[1]) / 2.0,
            (nf - lambda[2]) / 2.0,
        ],
        Complex64::new(pref, 0.0),
    )))
}

/// Trace(T_{μ₁}T_{μ₂}T_{μ₃}) in closed form:
/// (2π^{n−1/2})³ ΠΓ((1−n−μ_j)/2) · Γ((−μ₁−μ₂−μ₃−n)/2) /
/// (Γ(n) Γ(−(μ₁+μ₂)/2)Γ(−(μ₂+μ₃)/2)Γ(−(μ₁+μ₃)/2)).
pub fn trace_closed_t(n: u32, mu: [Complex64; 3]) -> MeroValue {
    let nf = n as f64;
    let pref = (2.0 * std::f64::consts::PI.powf(nf - 0.5)).powi(3);
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![
            (1.0 - nf - mu[0]) / 2.0,
            (1.0 - nf - mu[1]) / 2.0,
            (1.0 - nf - mu[2]) / 2.0,
            (-mu[0] - mu[1] - mu[2] - nf) / 2.0,
        ],
        vec![
            Complex64::new(nf, 0.0),
            -(mu[0] + mu[1]) / 2.0,
            -(mu[1] + mu[2]) / 2.0,
            -(mu[0] + mu[2]) / 2.0,
        ],
        Complex64::new(pref, 0.0),
    ))
}

/// Closed distance-kernel triple integral exactly as displayed:
/// (Γ(m+1/2)/(2^{1−m/2}√π))³ · 2^{−(λ₁+λ₂+λ₃)/2}/Γ(m) ·
/// Γ((α+m)/4)Γ((β+m)/4)Γ((γ+m)/4)Γ((δ+m)/4) / ΠΓ((m−λ_j)/2).
pub fn closed_distance_printed(p: &ParamSet) -> Result<MeroValue> {
    let m = require_kind(p, "distance")?;
    let (lambda, abg, delta) = coords(p)?;
    let mf = m as f64;
    let lam_sum = lambda[0] + lambda[1] + lambda[2];
    let pref = (gamma_real(mf + 0.5) / (2f64.powf(1.0 - mf / 2.0) * std::f64::consts::PI.sqrt()))
        .powi(3)
        * cpow(2.0, -lam_sum / 2.0);
    Ok(eval_gamma_ratio(&GammaRatioExpr::new(
        vec![
            (abg[0] + mf) / 4.0,
            (abg[1] + mf) / 4.0,
            (abg[2] + mf) / 4.0,
            (delta + mf) / 4.0,
        ],
        vec![
            Complex64::new(mf, 0.0),
            (mf - lambda[0]) / 2.0,
            (mf - lambda[1]) / 2.0,
            (mf - lambda[2]) / 2.0,
        ],
        pref,
    )))
}

/// Constant relating the printed distance closed form to the oracle-backed
/// spectral chain: (2π^{(m+1)/2}/Γ(m+1/2))³.
pub fn distance_consistency_factor(m: u32) -> f64 {
    let mf = m as f64;
    (2.0 * std::f64::consts::PI.powf((mf + 1.0) / 2.0) / gamma_real(mf + 0.5)).powi(3)
}

/// The printed closed form rescaled to match the defining integral.
pub fn closed_distance_consistent(p: &ParamSet) -> Result<MeroValue> {
    let m = require_kind(p, "distance")?;
    Ok(closed_distance_printed(p)?.scale(Complex64::new(distance_consistency_factor(m), 0.0)))
}

/// Printed prefactor and hypergeometric factor of the inner-product closed
/// form, kept separate so pole/zero bookkeeping survives the series factor.
#[derive(Debug, Clone)]
pub struct InnerClosedForm {
    pub value: MeroValue,
    pub hyper: SeriesResult,
}

/// Closed inner-product triple integral exactly as displayed:
/// (2π^{(N−3)/2})³ ΠΓ(1/2−ν_j) / (Γ(N/2)Γ(N/2−ν₂−ν₃)Γ(N/2−ν₁)) ×
/// ₃F₂(1/2−ν₁, ν₂, ν₃; 1/2, N/2−ν₁; 1), where the kernel exponents are
/// −2ν_j.
pub fn closed_inner_printed(
    n_dim: u32,
    nu: [Complex64; 3],
    rel_tol: f64,
    max_terms: u32,
) -> Result<InnerClosedForm> {
    let nf = n_dim as f64;
    let pref = (2.0 * std::f64::consts::PI.powf((nf - 3.0) / 2.0)).powi(3);
    let prefactor = eval_gamma_ratio(&GammaRatioExpr::new(
        vec![0.5 - nu[0], 0.5 - nu[1], 0.5 - nu[2]],
        vec![
            Complex64::new(nf / 2.0, 0.0),
            nf / 2.0 - nu[1] - nu[2],
            nf / 2.0 - nu[0],
        ],
        Complex64::new(pref, 0.0),
    ));
    let series = pfq(
        &HyperParams::new(
            vec![0.5 - nu[0], nu[1], nu[2]],
            vec![Complex64::new(0.5, 0.0), nf / 2.0 - nu[0]],
            Complex64::new(1.0, 0.0),
        ),
        rel_tol,
        max_terms,
    )?;
    Ok(InnerClosedForm { value: prefactor.scale(series.value), hyper: series })
}

/// The printed inner-product closed form rescaled by π³ to match the
/// defining integral.
pub fn closed_inner_consistent(
    n_dim: u32,
    nu: [Complex64; 3],
    rel_tol: f64,
    max_terms: u32,
) -> Result<InnerClosedForm> {
    let mut r = closed_inner_printed(n_dim, nu, rel_tol, max_terms)?;
    r.value = r.value.scale(Complex64::new(std::f64::consts::PI.powi(3), 0.0));
    Ok(r)
}

/// c in Trace(R_{μ₁}R_{μ₂}R_{μ₃}) = c · Trace(T_{μ₁}T_{μ₂}T_{μ₃}):
/// (Γ(m+1/2)/(4πᵐ))³ Π_j Γ(−μ_j/2)/(2^{μ_j} Γ((1−m−μ_j)/2)).
pub fn comparison_constant(m: u32, mu: [Complex64; 3]) -> MeroValue {
    let mf = m as f64;
    let pref = (gamma_real(mf + 0.5) / (4.0 * std::f64::consts::PI.powf(mf))).powi(3)
        * cpow(2.0, -(mu[0] + mu[1] + mu[2]));
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![-mu[0] / 2.0, -mu[1] / 2.0, -mu[2] / 2.0],
        vec![
            (1.0 - mf - mu[0]) / 2.0,
            (1.0 - mf - mu[1]) / 2.0,
            (1.0 - mf - mu[2]) / 2.0,
        ],
        pref,
    ))
}

/// One spectral trace sum, with the printed-multiplier variant alongside
/// when the kind has one (the distance kernel).
#[derive(Debug, Clone)]
pub struct TraceSeries {
    /// Sum over the oracle-validated multipliers.
    pub series: SeriesResult,
    /// Distance kind only: the same sum with the printed γ_k.
    pub printed_variant: Option<SeriesResult>,
    /// Polynomial decay rate s of the terms (~ index^{−s}).
    pub decay_exponent: f64,
}

/// Polynomial decay rate of the trace terms: multiplicity grows like
/// index^{d−2} on S^{d−1} while each multiplier decays like index^{Re μ_j}.
fn decay_exponent(kind: OperatorKind, mu: &[Complex64; 3]) -> f64 {
    let mu_sum: f64 = mu.iter().map(|m| m.re).sum();
    let growth = match kind {
        OperatorKind::Symplectic(n) => (n - 1) as f64,
        OperatorKind::Distance(m) => (m - 1) as f64,
        OperatorKind::InnerProduct(nn) => (nn as f64) - 2.0,
    };
    -(mu_sum + growth)
}

/// Trace(K_{μ₁}K_{μ₂}K_{μ₃}) as a spectral sum: multiplicity of the k-th
/// eigenspace times the product of the three multipliers, summed until
/// three consecutive terms and the polynomial tail bound both drop below
/// `rel_tol` relative to the partial sum.
pub fn trace_series(
    kind: OperatorKind,
    mu: [Complex64; 3],
    rel_tol: f64,
    max_terms: u32,
) -> Result<TraceSeries> {
    let s = decay_exponent(kind, &mu);
    if s <= 1.0 + 1e-3 {
        return Err(Error::NonConvergent(format!(
            "spectral sum decays like index^(-{s:.3}); need exponent > 1"
        )));
    }
    let term_value = |v: MeroValue, what: &str, idx: u32| -> Result<Complex64> {
        match v {
            MeroValue::Finite(x) => Ok(x),
            MeroValue::Zero => Ok(Complex64::new(0.0, 0.0)),
            MeroValue::Pole => Err(Error::Domain(format!("{what} has a pole at index {idx}"))),
        }
    };

    let mut sum = Complex64::new(0.0, 0.0);
    let mut printed_sum = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    let mut small = 0u32;
    let mut used = 0u32;
    let mut converged = false;
    for idx in 0..max_terms {
        let (term, printed_term) = match kind {
            OperatorKind::Symplectic(n) => {
                let d = dim_hk(n + 1, idx)? as f64;
                let mut t = Complex64::new(d, 0.0);
                for m in &mu {
                    t *= term_value(a_k(n, 2 * idx, *m), "A_k", idx)?;
                }
                (t, None)
            }
            OperatorKind::Distance(m) => {
                let d = dim_hk(m + 1, idx)? as f64;
                let mut t = Complex64::new(d, 0.0);
                let mut tp = Complex64::new(d, 0.0);
                for mm in &mu {
                    t *= term_value(gamma_k_funk_hecke(m, idx, *mm), "γ_k", idx)?;
                    tp *= term_value(gamma_k_printed(m, idx, *mm), "γ_k (printed)", idx)?;
                }
                (t, Some(tp))
            }
            OperatorKind::InnerProduct(nn) => {
                let d = dim_hk(nn, 2 * idx)? as f64;
                let mut t = Complex64::new(d, 0.0);
                for mm in &mu {
                    t *= term_value(c_nl(nn, idx, *mm), "c_N(μ,l)", idx)?;
                }
                (t, None)
            }
        };
        sum += term;
        if let Some(tp) = printed_term {
            printed_sum += tp;
        }
        last = term.norm();
        used = idx + 1;
        if last <= rel_tol * sum.norm() {
            small += 1;
        } else {
            small = 0;
        }
        let tail = last * (idx as f64 + 1.0) / (s - 1.0);
        if small >= 3 && tail <= rel_tol * sum.norm() {
            converged = true;
            break;
        }
    }
    let series = SeriesResult { value: sum, terms_used: used, last_term_mag: last, converged };
    let printed_variant = matches!(kind, OperatorKind::Distance(_)).then(|| SeriesResult {
        value: printed_sum,
        terms_used: used,
        last_term_mag: last,
        converged,
    });
    Ok(TraceSeries { series, printed_variant, decay_exponent: s })
}

/// Spectral sum and both closed-form variants for one parameter point.
#[derive(Debug, Clone)]
pub struct TraceReport {
    pub series: TraceSeries,
    pub closed_printed: MeroValue,
    pub closed_consistent: MeroValue,
    /// series / closed_consistent when both are finite and nonzero.
    pub ratio: Option<Complex64>,
}

pub fn trace_report(
    kind: OperatorKind,
    mu: [Complex64; 3],
    rel_tol: f64,
    max_terms: u32,
) -> Result<TraceReport> {
    let series = trace_series(kind, mu, rel_tol, max_terms)?;
    let (closed_printed, closed_consistent) = match kind {
        OperatorKind::Symplectic(n) => {
            let v = trace_closed_t(n, mu);
            (v, v)
        }
        OperatorKind::Distance(_) => {
            let p = crate::spectra::param_convert(&ParamSet::from_mu(kind, mu))?;
            (closed_distance_printed(&p)?, closed_distance_consistent(&p)?)
        }
        OperatorKind::InnerProduct(nn) => {
            let nu = mu.map(|m| m / 2.0 + nn as f64 / 4.0);
            let printed = closed_inner_printed(nn, nu, rel_tol, max_terms)?.value;
            let consistent =
                printed.scale(Complex64::new(std::f64::consts::PI.powi(3), 0.0));
            (printed, consistent)
        }
    };
    let ratio = match closed_consistent {
        MeroValue::Finite(c) if c.norm() > 0.0 => Some(series.series.value / c),
        _ => None,
    };
    Ok(TraceReport { series, closed_printed, closed_consistent, ratio })
}

/// One inequality of a convergence region, with the value it saw.
#[derive(Debug, Clone)]
pub struct RegionDiag {
    pub label: String,
    pub lhs: f64,
    pub bound: f64,
    pub satisfied: bool,
}

fn diag(label: impl Into<String>, lhs: f64, bound: f64) -> RegionDiag {
    RegionDiag { label: label.into(), lhs, bound, satisfied: lhs > bound }
}

/// Convergence region of the triple integral in terms of the real parts of
/// the kernel exponents e_j.
pub fn exponent_region(kind: OperatorKind, e: [f64; 3]) -> Vec<RegionDiag> {
    let sum: f64 = e.iter().sum();
    let mut out = Vec::new();
    match kind {
        OperatorKind::Symplectic(n) => {
            for (j, ej) in e.iter().enumerate() {
                out.push(diag(format!("Re e{}", j + 1), *ej, -1.0));
            }
            if n == 1 {
                out.push(diag("Re(e1+e2+e3)", sum, -2.0));
            }
        }
        OperatorKind::Distance(m) => {
            for (j, ej) in e.iter().enumerate() {
                out.push(diag(format!("Re e{}", j + 1), *ej, -(m as f64)));
            }
            out.push(diag("Re(e1+e2+e3)", sum, -2.0 * m as f64));
        }
        OperatorKind::InnerProduct(_) => {
            for (j, ej) in e.iter().enumerate() {
                out.push(diag(format!("Re e{}", j + 1), *ej, -1.0));
            }
        }
    }
    out
}

/// Region verdict with per-inequality diagnostics; for the symplectic kernel
/// the equivalent (α,β,γ,δ)-form verdict is reported alongside.
#[derive(Debug, Clone)]
pub struct RegionReport {
    pub inside: bool,
    pub diagnostics: Vec<RegionDiag>,
    pub alt_form_inside: Option<bool>,
}

pub fn region_check(p: &ParamSet) -> Result<RegionReport> {
    let full = crate::spectra::param_convert(p)?;
    let e = full.kernel_exponents()?.map(|x| x.re);
    let diagnostics = exponent_region(full.kind, e);
    let inside = diagnostics.iter().all(|d| d.satisfied);
    let alt_form_inside = match full.kind {
        OperatorKind::Symplectic(n) => {
            let abg = full.abg.unwrap();
            let delta = full.delta.unwrap();
            let mut ok = abg.iter().all(|a| a.re > n as f64 - 2.0);
            if n == 1 {
                ok &= delta.re > -1.0;
            }
            Some(ok)
        }
        _ => None,
    };
    Ok(RegionReport { inside, diagnostics, alt_form_inside })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::{dougall_rhs, dougall_series_params};
    use crate::oracle::{torus_quadrature_triple, ShardRng};
    use crate::specfun::sphere_volume;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn finite(v: MeroValue) -> Complex64 {
        v.value().expect("expected finite value")
    }

    fn converted(kind: OperatorKind, lambda: [Complex64; 3]) -> ParamSet {
        crate::spectra::param_convert(&ParamSet::from_lambda(kind, lambda)).unwrap()
    }

    fn rand_mu(rng: &mut ShardRng, lo: f64, hi: f64, im: f64) -> [Complex64; 3] {
        [0; 3].map(|_| {
            Complex64::new(lo + (hi - lo) * rng.next_f64(), im * (rng.next_f64() - 0.5))
        })
    }

    #[test]
    fn symplectic_reference_point() {
        let p = converted(OperatorKind::Symplectic(1), [c(-5.0); 3]);
        let v = finite(closed_symplectic(&p).unwrap());
        let exact = 3.0 * PI.powi(3) / 4.0;
        assert!((v.re - exact).abs() < 1e-12 * exact, "{}", v.re);
        // torus oracle at the same kernel exponents (2,2,2)
        let t = torus_quadrature_triple(OperatorKind::Symplectic(1), 64, [2, 2, 2]).unwrap();
        assert!((v.re - t).abs() < 1e-11);
    }

    #[test]
    fn symplectic_zero_at_denominator_pole() {
        let p = converted(OperatorKind::Symplectic(1), [c(1.0), c(-0.3), c(-0.7)]);
        assert!(matches!(closed_symplectic(&p).unwrap(), MeroValue::Zero));
    }

    #[test]
    fn symplectic_closed_equals_trace_closed() {
        let mut rng = ShardRng::new(17, 0);
        for n in 1..=3u32 {
            for _ in 0..50 {
                let mu = rand_mu(&mut rng, -7.5, -2.5, 1.0);
                let p = crate::spectra::param_convert(&ParamSet::from_mu(
                    OperatorKind::Symplectic(n),
                    mu,
                ))
                .unwrap();
                let a = finite(closed_symplectic(&p).unwrap());
                let b = finite(trace_closed_t(n, mu));
                assert!((a - b).norm() <= 1e-12 * b.norm(), "n={n} μ={mu:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn trace_closed_is_dougall_assembly() {
        let mut rng = ShardRng::new(23, 0);
        for n in 1..=3u32 {
            for _ in 0..20 {
                let mu = rand_mu(&mut rng, -6.5, -2.2, 0.8);
                let closed = finite(trace_closed_t(n, mu));
                let mut assembled = finite(dougall_rhs(
                    c(n as f64),
                    -(mu[0] + n as f64) / 2.0,
                    -(mu[1] + n as f64) / 2.0,
                    -(mu[2] + n as f64) / 2.0,
                ));
                for m in &mu {
                    assembled *= finite(a_k(n, 0, *m));
                }
                assert!(
                    (closed - assembled).norm() <= 1e-11 * closed.norm(),
                    "n={n}: {closed} vs {assembled}"
                );
            }
        }
    }

    #[test]
    fn trace_series_matches_closed_symplectic() {
        let mut rng = ShardRng::new(31, 0);
        for n in 1..=3u32 {
            for _ in 0..7 {
                let mu = rand_mu(&mut rng, -8.0, -3.0, 0.6);
                let ts = trace_series(OperatorKind::Symplectic(n), mu, 1e-10, 40_000).unwrap();
                assert!(ts.series.converged);
                let closed = finite(trace_closed_t(n, mu));
                assert!(
                    (ts.series.value - closed).norm() <= 1e-8 * closed.norm(),
                    "n={n} μ={mu:?}: {} vs {closed}",
                    ts.series.value
                );
            }
        }
    }

    #[test]
    fn trace_series_matches_dougall_series() {
        let mut rng = ShardRng::new(37, 0);
        let n = 2u32;
        for _ in 0..5 {
            let mu = rand_mu(&mut rng, -7.0, -3.0, 0.5);
            let ts = trace_series(OperatorKind::Symplectic(n), mu, 1e-10, 40_000).unwrap();
            let params = dougall_series_params(
                c(n as f64),
                -(mu[0] + n as f64) / 2.0,
                -(mu[1] + n as f64) / 2.0,
                -(mu[2] + n as f64) / 2.0,
            );
            let mut f54 = pfq(&params, 1e-12, 200_000).unwrap().value;
            for m in &mu {
                f54 *= finite(a_k(n, 0, *m));
            }
            assert!(
                (ts.series.value - f54).norm() <= 1e-8 * f54.norm(),
                "μ={mu:?}: {} vs {f54}",
                ts.series.value
            );
        }
    }

    #[test]
    fn trace_series_refuses_slow_decay() {
        let mu = [c(-0.4); 3];
        assert!(matches!(
            trace_series(OperatorKind::Symplectic(2), mu, 1e-10, 1000),
            Err(Error::NonConvergent(_))
        ));
    }

    #[test]
    fn inner_constant_kernel_truncates() {
        for n_dim in 2..=6u32 {
            let mu = [c(-(n_dim as f64) / 2.0); 3];
            let ts = trace_series(OperatorKind::InnerProduct(n_dim), mu, 1e-12, 100).unwrap();
            let vol = sphere_volume(n_dim).powi(3);
            assert!((ts.series.value.re - vol).abs() < 1e-12 * vol, "N={n_dim}");
        }
    }

    #[test]
    fn inner_trace_matches_whipple_closed_form() {
        let mut rng = ShardRng::new(41, 0);
        for n_dim in [3u32, 4, 6] {
            for _ in 0..7 {
                let mu = rand_mu(&mut rng, -8.0, -3.5, 0.5);
                let ts = trace_series(OperatorKind::InnerProduct(n_dim), mu, 1e-10, 60_000).unwrap();
                let nu = mu.map(|m| m / 2.0 + n_dim as f64 / 4.0);
                let cf = closed_inner_consistent(n_dim, nu, 1e-12, 400_000).unwrap();
                let cv = finite(cf.value);
                assert!(
                    (ts.series.value - cv).norm() <= 1e-8 * cv.norm(),
                    "N={n_dim} μ={mu:?}: {} vs {cv}",
                    ts.series.value
                );
            }
        }
    }

    #[test]
    fn inner_printed_at_zero_exponents() {
        for n_dim in 2..=6u32 {
            let r = closed_inner_printed(n_dim, [c(0.0); 3], 1e-12, 100).unwrap();
            let nf = n_dim as f64;
            let expect = 8.0 * PI.powf(1.5 * nf - 3.0) / gamma_real(nf / 2.0).powi(3);
            assert!((finite(r.value).re - expect).abs() < 1e-12 * expect);
            let rc = closed_inner_consistent(n_dim, [c(0.0); 3], 1e-12, 100).unwrap();
            let vol3 = sphere_volume(n_dim).powi(3);
            assert!((finite(rc.value).re - vol3).abs() < 1e-12 * vol3);
        }
    }

    #[test]
    fn inner_prefactor_pole_bookkeeping() {
        let r = closed_inner_printed(4, [c(0.5), c(0.1), c(0.1)], 1e-12, 10_000).unwrap();
        assert!(matches!(r.value, MeroValue::Pole));
    }

    #[test]
    fn distance_reference_point() {
        let p = converted(OperatorKind::Distance(1), [c(-5.0); 3]);
        let v = finite(closed_distance_printed(&p).unwrap());
        let expect = 0.75 * PI.powf(1.5);
        assert!((v.re - expect).abs() < 1e-13 * expect, "{}", v.re);
        let vc = finite(closed_distance_consistent(&p).unwrap());
        let torus = torus_quadrature_triple(OperatorKind::Distance(1), 64, [2, 2, 2]).unwrap();
        assert!((vc.re - 48.0 * PI.powi(3)).abs() < 1e-11 * vc.re);
        assert!((vc.re - torus).abs() < 1e-10 * vc.re);
    }

    #[test]
    fn distance_printed_equals_comparison_times_trace() {
        let mut rng = ShardRng::new(43, 0);
        for m in 1..=3u32 {
            for _ in 0..30 {
                let mu = rand_mu(&mut rng, -7.0, -2.5, 0.8);
                let p = crate::spectra::param_convert(&ParamSet::from_mu(
                    OperatorKind::Distance(m),
                    mu,
                ))
                .unwrap();
                let lhs = finite(closed_distance_printed(&p).unwrap());
                let rhs = finite(comparison_constant(m, mu)) * finite(trace_closed_t(m, mu));
                assert!(
                    (lhs - rhs).norm() <= 1e-10 * rhs.norm(),
                    "m={m} μ={mu:?}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn distance_series_variants_match_their_closed_forms() {
        let mut rng = ShardRng::new(47, 0);
        for m in 1..=2u32 {
            for _ in 0..5 {
                let mu = rand_mu(&mut rng, -7.0, -3.0, 0.4);
                let ts = trace_series(OperatorKind::Distance(m), mu, 1e-10, 40_000).unwrap();
                let p = crate::spectra::param_convert(&ParamSet::from_mu(
                    OperatorKind::Distance(m),
                    mu,
                ))
                .unwrap();
                let printed = finite(closed_distance_printed(&p).unwrap());
                let consistent = finite(closed_distance_consistent(&p).unwrap());
                let pv = ts.printed_variant.as_ref().unwrap().value;
                assert!(
                    (pv - printed).norm() <= 1e-8 * printed.norm(),
                    "m={m}: {pv} vs {printed}"
                );
                assert!(
                    (ts.series.value - consistent).norm() <= 1e-8 * consistent.norm(),
                    "m={m}: {} vs {consistent}",
                    ts.series.value
                );
            }
        }
    }

    #[test]
    fn trace_report_symplectic_ratio_is_one() {
        let report = trace_report(OperatorKind::Symplectic(1), [c(-3.0); 3], 1e-10, 10_000).unwrap();
        let r = report.ratio.unwrap();
        assert!((r - c(1.0)).norm() < 1e-8);
        let exact = 3.0 * PI.powi(3) / 4.0;
        assert!((finite(report.closed_printed).re - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn region_examples() {
        let diags = exponent_region(OperatorKind::Symplectic(2), [0.5; 3]);
        assert!(diags.iter().all(|d| d.satisfied));
        let diags = exponent_region(OperatorKind::Symplectic(1), [-0.9; 3]);
        assert!(!diags.iter().all(|d| d.satisfied)); // sum −2.7 < −2
        assert!(diags[..3].iter().all(|d| d.satisfied));
        let diags = exponent_region(OperatorKind::Distance(2), [-1.5; 3]);
        assert!(diags[..3].iter().all(|d| d.satisfied));
        assert!(!diags[3].satisfied); // sum −4.5 < −4
        let diags = exponent_region(OperatorKind::InnerProduct(5), [-0.5; 3]);
        assert!(diags.iter().all(|d| d.satisfied));
    }

    #[test]
    fn region_forms_agree_for_symplectic() {
        let mut rng = ShardRng::new(53, 0);
        for _ in 0..1000 {
            let n = 1 + (rng.next_u64() % 3) as u32;
            let lam = [0; 3].map(|_| c(-6.0 + 8.0 * rng.next_f64()));
            let p = ParamSet::from_lambda(OperatorKind::Symplectic(n), lam);
            let report = region_check(&p).unwrap();
            assert_eq!(report.inside, report.alt_form_inside.unwrap(), "n={n} λ={lam:?}");
        }
    }
}
