//! Eigenvalue (multiplier) formulas for the three integral operators with
//! kernels |[x,y]|^{−μ−n}, |x−y|^{−μ−m} and |⟨x,y⟩|^{−μ−N/2}, the
//! Fourier-side constants B_N and C_N, and the parameter dictionaries
//! (λ, μ, αβγ) connecting the kernel exponents of the triple integrals.

use num_complex::Complex64;

use crate::specfun::{eval_gamma_ratio, GammaRatioExpr, MeroValue};
use crate::{Error, Result};

/// Real base raised to a complex exponent.
fn cpow(base: f64, e: Complex64) -> Complex64 {
    (e * base.ln()).exp()
}

/// i^{−k}, exact by residue of k mod 4.
fn i_pow_neg(k: u32) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Which of the three operators is meant, with its dimension parameter.
///
/// `Symplectic(n)` acts on S^{2n−1} ⊂ R^{2n} = C^n, `Distance(m)` on
/// S^m ⊂ R^{m+1}, `InnerProduct(N)` on S^{N−1} ⊂ R^N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Symplectic(u32),
    Distance(u32),
    InnerProduct(u32),
}

impl OperatorKind {
    /// Half-sum shift ρ appearing in every parameter dictionary:
    /// n, m, or N/2 respectively.
    pub fn rho(&self) -> f64 {
        match self {
            Self::Symplectic(n) => *n as f64,
            Self::Distance(m) => *m as f64,
            Self::InnerProduct(nn) => *nn as f64 / 2.0,
        }
    }

    /// Real dimension of the ambient space the sphere sits in.
    pub fn ambient_dim(&self) -> u32 {
        match self {
            Self::Symplectic(n) => 2 * n,
            Self::Distance(m) => m + 1,
            Self::InnerProduct(nn) => *nn,
        }
    }
}

/// Eigenvalue A_k(μ) of T_μ on H^k(R^{2n}): zero for odd k, otherwise
/// 2π^{n−1/2} Γ((1−n−μ)/2)Γ((k+n+μ)/2) / (Γ((n+μ)/2)Γ((k+n−μ)/2)).
pub fn a_k(n: u32, k: u32, mu: Complex64) -> MeroValue {
    if k % 2 == 1 {
        return MeroValue::Zero;
    }
    let nf = n as f64;
    let kf = k as f64;
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![(1.0 - nf - mu) / 2.0, (kf + nf + mu) / 2.0],
        vec![(nf + mu) / 2.0, (kf + nf - mu) / 2.0],
        Complex64::new(2.0 * std::f64::consts::PI.powf(nf - 0.5), 0.0),
    ))
}

/// Bochner coefficient B_N(λ, k) = π^{−λ−N/2} i^{−k} Γ((k+λ+N)/2)/Γ((k−λ)/2):
/// the Fourier transform multiplier on |x|^λ p(x/|x|), p ∈ H^k.
pub fn b_n(n_dim: u32, lambda: Complex64, k: u32) -> MeroValue {
    let nf = n_dim as f64;
    let kf = k as f64;
    let pref = cpow(std::f64::consts::PI, -lambda - nf / 2.0) * i_pow_neg(k);
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![(kf + lambda + nf) / 2.0],
        vec![(kf - lambda) / 2.0],
        pref,
    ))
}

/// C_N(μ) = 2π^{μ+(N−1)/2} Γ((2−N−2μ)/4)/Γ((N+2μ)/4), the constant tying
/// the kernel |⟨x,y⟩|^{−μ−N/2} to the Fourier transform.
pub fn c_n(n_dim: u32, mu: Complex64) -> MeroValue {
    let nf = n_dim as f64;
    let pref = 2.0 * cpow(std::f64::consts::PI, mu + (nf - 1.0) / 2.0);
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![(2.0 - nf - 2.0 * mu) / 4.0],
        vec![(nf + 2.0 * mu) / 4.0],
        pref,
    ))
}

/// First printed form of C_N, (2π)^{μ+N/2}/(Γ(μ+N/2) cos(π(μ+N/2)/2)),
/// kept only as a cross-check of [`c_n`]. Not pole-safe.
pub fn c_n_cos_form(n_dim: u32, mu: Complex64) -> Result<Complex64> {
    let s = mu + n_dim as f64 / 2.0;
    let gamma = crate::specfun::gamma(s)?;
    let cosine = (std::f64::consts::PI / 2.0 * s).cos();
    if cosine.norm() < 1e-14 {
        return Err(Error::Domain("cosine zero in C_N first form".into()));
    }
    Ok(cpow(2.0 * std::f64::consts::PI, s) / (gamma * cosine))
}

/// Eigenvalue of T_μ on the bidegree space H^{α,β}(C^n): (−1)^β A_{α+β}(μ).
pub fn t_eigen(n: u32, alpha: u32, beta: u32, mu: Complex64) -> MeroValue {
    let sign = if beta % 2 == 0 { 1.0 } else { -1.0 };
    a_k(n, alpha + beta, mu).scale(Complex64::new(sign, 0.0))
}

/// The printed multiplier γ_k of the distance kernel |ω−η|^{−μ−m} on H^k:
/// Γ(m+1/2)Γ(−μ/2)Γ(k+(m+μ)/2) / (2^{μ+1}√π Γ((μ+m)/2)Γ(k+(m−μ)/2)).
pub fn gamma_k_printed(m: u32, k: u32, mu: Complex64) -> MeroValue {
    let mf = m as f64;
    let kf = k as f64;
    let pref = cpow(2.0, -mu - 1.0) / std::f64::consts::PI.sqrt();
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![Complex64::new(mf + 0.5, 0.0), -mu / 2.0, kf + (mf + mu) / 2.0],
        vec![(mu + mf) / 2.0, kf + (mf - mu) / 2.0],
        pref,
    ))
}

/// Multiplier of the same kernel derived independently via the Funk–Hecke
/// theorem with the Euclidean surface measure:
/// 2^{−μ} π^{m/2} Γ(−μ/2)Γ(k+(m+μ)/2) / (Γ((m+μ)/2)Γ(k+(m−μ)/2)).
/// Differs from [`gamma_k_printed`] by the k,μ-independent factor
/// 2π^{(m+1)/2}/Γ(m+1/2).
pub fn gamma_k_funk_hecke(m: u32, k: u32, mu: Complex64) -> MeroValue {
    let mf = m as f64;
    let kf = k as f64;
    let pref = cpow(2.0, -mu) * std::f64::consts::PI.powf(mf / 2.0);
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![-mu / 2.0, kf + (mf + mu) / 2.0],
        vec![(mf + mu) / 2.0, kf + (mf - mu) / 2.0],
        pref,
    ))
}

/// Eigenvalue c_N(μ, l) of Q_μ on H^{2l}(R^N), in the displayed form
/// (−1)^l 2π^{(N−1)/2} Γ((2−N−2μ)/4)Γ(l+(2μ+N)/4) /
/// (Γ((N+2μ)/4)Γ(l+(N−2μ)/4)).
pub fn c_nl(n_dim: u32, l: u32, mu: Complex64) -> MeroValue {
    let nf = n_dim as f64;
    let lf = l as f64;
    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    let pref = Complex64::new(sign * 2.0 * std::f64::consts::PI.powf((nf - 1.0) / 2.0), 0.0);
    eval_gamma_ratio(&GammaRatioExpr::new(
        vec![(2.0 - nf - 2.0 * mu) / 4.0, lf + (2.0 * mu + nf) / 4.0],
        vec![(nf + 2.0 * mu) / 4.0, lf + (nf - 2.0 * mu) / 4.0],
        pref,
    ))
}

/// Eigenvalue of Q_μ on H^k(R^N): zero on odd-degree spaces, c_N(μ, k/2)
/// on even ones.
pub fn q_eigen(n_dim: u32, k: u32, mu: Complex64) -> MeroValue {
    if k % 2 == 1 {
        MeroValue::Zero
    } else {
        c_nl(n_dim, k / 2, mu)
    }
}

/// The three equivalent coordinate systems for a triple-integral parameter
/// point: kernel powers λ_j, spectral parameters μ_j, and the exponent
/// triple (α, β, γ) with δ = α+β+γ. Any one system determines the rest.
#[derive(Debug, Clone)]
pub struct ParamSet {
    pub kind: OperatorKind,
    pub lambda: Option<[Complex64; 3]>,
    pub mu: Option<[Complex64; 3]>,
    pub abg: Option<[Complex64; 3]>,
    pub delta: Option<Complex64>,
}

impl ParamSet {
    pub fn from_lambda(kind: OperatorKind, lambda: [Complex64; 3]) -> Self {
        Self { kind, lambda: Some(lambda), mu: None, abg: None, delta: None }
    }

    pub fn from_mu(kind: OperatorKind, mu: [Complex64; 3]) -> Self {
        Self { kind, lambda: None, mu: Some(mu), abg: None, delta: None }
    }

    pub fn from_abg(kind: OperatorKind, abg: [Complex64; 3]) -> Self {
        Self { kind, lambda: None, mu: None, abg: Some(abg), delta: None }
    }

    /// Kernel exponents e_j = −μ_j − ρ = (α_j − ρ)/2; requires μ populated
    /// (call [`param_convert`] first).
    pub fn kernel_exponents(&self) -> Result<[Complex64; 3]> {
        let mu = self.mu.ok_or_else(|| Error::Domain("μ not populated".into()))?;
        let rho = self.kind.rho();
        Ok([-mu[0] - rho, -mu[1] - rho, -mu[2] - rho])
    }
}

fn lambda_to_mu(lambda: &[Complex64; 3], rho: f64) -> [Complex64; 3] {
    let s: Complex64 = lambda.iter().sum();
    [0, 1, 2].map(|j| (s - rho) / 2.0 - lambda[j])
}

fn mu_to_lambda(mu: &[Complex64; 3], rho: f64) -> [Complex64; 3] {
    let s: Complex64 = mu.iter().sum();
    [0, 1, 2].map(|j| s + rho - mu[j])
}

fn lambda_to_abg(lambda: &[Complex64; 3]) -> [Complex64; 3] {
    let s: Complex64 = lambda.iter().sum();
    [0, 1, 2].map(|j| 2.0 * lambda[j] - s)
}

fn abg_to_lambda(abg: &[Complex64; 3]) -> [Complex64; 3] {
    [
        -(abg[1] + abg[2]) / 2.0,
        -(abg[0] + abg[2]) / 2.0,
        -(abg[0] + abg[1]) / 2.0,
    ]
}

fn triples_close(a: &[Complex64; 3], b: &[Complex64; 3]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() <= 1e-9 * (1.0 + x.norm()))
}

/// Populate all coordinate systems from whichever are present, checking any
/// redundantly supplied ones for consistency.
pub fn param_convert(input: &ParamSet) -> Result<ParamSet> {
    let rho = input.kind.rho();
    let lambda = if let Some(l) = input.lambda {
        l
    } else if let Some(m) = input.mu {
        mu_to_lambda(&m, rho)
    } else if let Some(a) = input.abg {
        abg_to_lambda(&a)
    } else {
        return Err(Error::Domain("no coordinate system supplied".into()));
    };
    let mu = lambda_to_mu(&lambda, rho);
    let abg = lambda_to_abg(&lambda);
    let delta = -(lambda[0] + lambda[1] + lambda[2]);

    if let Some(m) = input.mu {
        if !triples_close(&m, &mu) {
            return Err(Error::Inconsistent("μ disagrees with λ".into()));
        }
    }
    if let Some(a) = input.abg {
        if !triples_close(&a, &abg) {
            return Err(Error::Inconsistent("(α,β,γ) disagrees with λ".into()));
        }
    }
    if let Some(d) = input.delta {
        if (d - delta).norm() > 1e-9 * (1.0 + d.norm()) {
            return Err(Error::Inconsistent("δ disagrees with λ".into()));
        }
    }
    Ok(ParamSet {
        kind: input.kind,
        lambda: Some(lambda),
        mu: Some(mu),
        abg: Some(abg),
        delta: Some(delta),
    })
}
