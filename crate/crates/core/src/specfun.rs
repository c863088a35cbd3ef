//! Complex gamma-function kernel with explicit pole bookkeeping.
//!
//! Everything downstream evaluates gamma-ratio expressions of the shape
//! `c · Γ(a₁)⋯Γ(aₚ) / Γ(b₁)⋯Γ(b_q)` through [`eval_gamma_ratio`], which
//! cancels integer-offset pole pairs exactly (Γ(x+k)/Γ(x) → (x₀)_k) and
//! reports lone poles/zeros structurally instead of producing NaN.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::{Error, Result};

/// Default tolerance for deciding that an argument sits on a gamma pole.
pub const POLE_TOL: f64 = 1e-9;

/// Lanczos coefficients, g = 7, 9 terms (the GSL set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// True iff `z` lies within `tol` of a nonpositive integer (both components).
pub fn is_gamma_pole(z: Complex64, tol: f64) -> bool {
    if z.im.abs() > tol {
        return false;
    }
    let r = z.re.round();
    r <= 0.5 && (z.re - r).abs() <= tol
}

/// Principal-branch log Γ(z) for complex z.
///
/// Lanczos approximation with reflection for Re z < 1/2. The imaginary part
/// is not normalized across branch cuts; all consumers only need
/// `exp(log_gamma)` or differences of log-gammas.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z, POLE_TOL) {
        return Err(Error::Domain(format!("log_gamma at pole z = {z}")));
    }
    Ok(log_gamma_unchecked(z))
}

fn log_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let pi_z = z * PI;
        return Complex64::new(PI, 0.0).ln() - pi_z.sin().ln() - log_gamma_unchecked(Complex64::new(1.0, 0.0) - z);
    }
    let zm1 = z - 1.0;
    let mut sum = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        sum += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (zm1 + 0.5) * t.ln() - t + sum.ln()
}

/// Γ(z) by exponentiating [`log_gamma`].
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Γ(x) for real non-pole x, as a real number.
pub fn gamma_real(x: f64) -> f64 {
    let g = log_gamma_unchecked(Complex64::new(x, 0.0)).exp();
    g.re
}

/// Euclidean surface volume of the unit sphere S^{N-1}: 2 π^{N/2} / Γ(N/2).
pub fn sphere_volume(n_dim: u32) -> f64 {
    2.0 * PI.powf(n_dim as f64 / 2.0) / gamma_real(n_dim as f64 / 2.0)
}

/// Rising factorial (a)_l = a(a+1)⋯(a+l−1).
///
/// Exact product for l ≤ 64; log-gamma ratio beyond, falling back to the
/// product whenever a factor sits near a pole crossing.
pub fn pochhammer(a: Complex64, l: u32) -> Complex64 {
    if l == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if l <= 64 || crosses_pole(a, l) {
        let mut p = Complex64::new(1.0, 0.0);
        for i in 0..l {
            p *= a + i as f64;
        }
        return p;
    }
    (log_gamma_unchecked(a + l as f64) - log_gamma_unchecked(a)).exp()
}

fn crosses_pole(a: Complex64, l: u32) -> bool {
    is_gamma_pole(a, POLE_TOL) || is_gamma_pole(a + l as f64, POLE_TOL) || {
        // a negative real start with a zero factor inside the product range
        a.im.abs() <= POLE_TOL && a.re < 0.5 && a.re + l as f64 > -0.5 && {
            let r = a.re.round();
            (a.re - r).abs() <= POLE_TOL
        }
    }
}

/// (b0)_k for integer b0 ≤ 0 and integer k (possibly negative), as the exact
/// limit of Γ(x+k)/Γ(x) at x → b0. All factors are nonzero negative integers
/// because b0+k−1 ≤ −1 whenever both endpoints are poles.
fn pochhammer_pole_limit(b0: i64, k: i64) -> f64 {
    if k >= 0 {
        let mut p = 1.0;
        for i in 0..k {
            p *= (b0 + i) as f64;
        }
        p
    } else {
        let mut p = 1.0;
        for i in 1..=(-k) {
            p *= (b0 - i) as f64;
        }
        1.0 / p
    }
}

/// A value of a meromorphic gamma-ratio expression at a point: finite,
/// an exact zero, or a pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeroValue {
    Finite(Complex64),
    Zero,
    Pole,
}

impl MeroValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, MeroValue::Finite(_))
    }

    /// The finite payload, with Zero read as 0.
    pub fn value(&self) -> Option<Complex64> {
        match self {
            MeroValue::Finite(v) => Some(*v),
            MeroValue::Zero => Some(Complex64::new(0.0, 0.0)),
            MeroValue::Pole => None,
        }
    }

    /// Scale by a nonzero finite constant.
    pub fn scale(self, c: Complex64) -> MeroValue {
        match self {
            MeroValue::Finite(v) => MeroValue::Finite(c * v),
            other => other,
        }
    }

    /// Product of two meromorphic values. Pole × Zero is indeterminate and
    /// kept as Pole to stay conservative.
    pub fn mul(self, other: MeroValue) -> MeroValue {
        use MeroValue::*;
        match (self, other) {
            (Pole, _) | (_, Pole) => Pole,
            (Zero, _) | (_, Zero) => Zero,
            (Finite(a), Finite(b)) => Finite(a * b),
        }
    }
}

/// The generic shape `prefactor · Γ(a₁)⋯Γ(aₚ) / Γ(b₁)⋯Γ(b_q)`.
#[derive(Debug, Clone)]
pub struct GammaRatioExpr {
    pub numerator_args: Vec<Complex64>,
    pub denominator_args: Vec<Complex64>,
    pub prefactor: Complex64,
}

impl GammaRatioExpr {
    pub fn new(num: Vec<Complex64>, den: Vec<Complex64>, prefactor: Complex64) -> Self {
        Self { numerator_args: num, denominator_args: den, prefactor }
    }
}

/// Evaluate a gamma-ratio expression as a meromorphic value.
///
/// Numerator and denominator pole arguments are matched greedily in order of
/// increasing real part; every matched pair Γ(a)/Γ(b) with a−b = k ∈ ℤ is
/// replaced by the exact limit (b₀)_k. Unmatched numerator poles give Pole,
/// unmatched denominator poles give Zero.
pub fn eval_gamma_ratio(expr: &GammaRatioExpr) -> MeroValue {
    let (mut num_poles, num_regular) = split_poles(&expr.numerator_args);
    let (mut den_poles, den_regular) = split_poles(&expr.denominator_args);

    num_poles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    den_poles.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let matched = num_poles.len().min(den_poles.len());
    let mut limit_product = 1.0f64;
    for i in 0..matched {
        let k = num_poles[i] - den_poles[i];
        limit_product *= pochhammer_pole_limit(den_poles[i], k);
    }

    if num_poles.len() > matched {
        return MeroValue::Pole;
    }
    if den_poles.len() > matched || limit_product == 0.0 {
        return MeroValue::Zero;
    }

    let mut log_sum = Complex64::new(0.0, 0.0);
    for &a in &num_regular {
        log_sum += log_gamma_unchecked(a);
    }
    for &b in &den_regular {
        log_sum -= log_gamma_unchecked(b);
    }
    let v = expr.prefactor * log_sum.exp() * limit_product;
    if v.re.is_finite() && v.im.is_finite() {
        MeroValue::Finite(v)
    } else {
        MeroValue::Pole
    }
}

fn split_poles(args: &[Complex64]) -> (Vec<i64>, Vec<Complex64>) {
    let mut poles = Vec::new();
    let mut regular = Vec::new();
    for &a in args {
        if is_gamma_pole(a, POLE_TOL) {
            poles.push(a.re.round() as i64);
        } else {
            regular.push(a);
        }
    }
    (poles, regular)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_at_small_integers_and_half() {
        assert!((gamma(c(4.0, 0.0)).unwrap().re - 6.0).abs() < 1e-12);
        assert!((gamma(c(0.5, 0.0)).unwrap().re - PI.sqrt()).abs() < 1e-13);
        assert!((log_gamma(c(4.0, 0.0)).unwrap().re - 6.0f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn gamma_of_i_modulus() {
        // |Γ(i)|² = π / sinh π, via the reflection formula
        let g = gamma(c(0.0, 1.0)).unwrap();
        let modulus_sq = g.norm_sqr();
        assert!((modulus_sq - PI / PI.sinh()).abs() < 1e-12);
    }

    #[test]
    fn pole_detection() {
        assert!(is_gamma_pole(c(0.0, 0.0), 1e-12));
        assert!(is_gamma_pole(c(-3.0, 1e-15), 1e-12));
        assert!(!is_gamma_pole(c(0.5, 0.0), 1e-12));
        assert!(!is_gamma_pole(c(1.0, 0.0), 1e-12));
    }

    #[test]
    fn pochhammer_basics() {
        assert!((pochhammer(c(3.0, 0.0), 2) - c(12.0, 0.0)).norm() < 1e-12);
        assert_eq!(pochhammer(c(2.7, -1.3), 0), c(1.0, 0.0));
        assert!((pochhammer(c(-1.0, 0.0), 3)).norm() < 1e-12);
    }

    #[test]
    fn pochhammer_large_l_matches_product() {
        let a = c(1.37, 0.21);
        let mut p = c(1.0, 0.0);
        for i in 0..100u32 {
            p *= a + i as f64;
        }
        let q = pochhammer(a, 100);
        assert!((p - q).norm() / p.norm() < 1e-11);
    }

    #[test]
    fn gamma_ratio_pole_pair() {
        // Γ(0)/Γ(−1) = −1
        let e = GammaRatioExpr::new(vec![c(0.0, 0.0)], vec![c(-1.0, 0.0)], c(1.0, 0.0));
        match eval_gamma_ratio(&e) {
            MeroValue::Finite(v) => assert!((v - c(-1.0, 0.0)).norm() < 1e-12),
            other => panic!("expected finite, got {other:?}"),
        }
    }

    #[test]
    fn gamma_ratio_lone_poles() {
        let zero = GammaRatioExpr::new(vec![c(0.5, 0.0)], vec![c(0.0, 0.0)], c(1.0, 0.0));
        assert_eq!(eval_gamma_ratio(&zero), MeroValue::Zero);
        let pole = GammaRatioExpr::new(
            vec![c(-2.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0)],
            c(1.0, 0.0),
        );
        assert_eq!(eval_gamma_ratio(&pole), MeroValue::Pole);
    }

    #[test]
    fn gamma_ratio_permutation_invariance() {
        let e1 = GammaRatioExpr::new(
            vec![c(0.3, 0.1), c(-1.0, 0.0), c(2.2, -0.4)],
            vec![c(-3.0, 0.0), c(1.7, 0.0)],
            c(2.0, 0.0),
        );
        let e2 = GammaRatioExpr::new(
            vec![c(2.2, -0.4), c(0.3, 0.1), c(-1.0, 0.0)],
            vec![c(1.7, 0.0), c(-3.0, 0.0)],
            c(2.0, 0.0),
        );
        match (eval_gamma_ratio(&e1), eval_gamma_ratio(&e2)) {
            (MeroValue::Finite(a), MeroValue::Finite(b)) => {
                assert!((a - b).norm() / a.norm() < 1e-12)
            }
            (a, b) => assert_eq!(a, b),
        }
    }
}
