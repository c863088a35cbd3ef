//! Dimension combinatorics of harmonic polynomial spaces H^k(R^N) and
//! H^{α,β}(C^n), the alternating-sum identity between them, the Chebyshev-like
//! expansion of x^l + x^{-l}, and concrete harmonic polynomials for
//! quadrature tests.

use num_complex::Complex64;

use crate::{Error, Result};

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Overflow(format!("{a} * {b} exceeds i128")))
}

/// C(n, k) exactly in i128, zero when n < 0 or k < 0 or k > n.
fn binomial(n: i64, k: i64) -> Result<i128> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 1..=k {
        acc = checked_mul(acc, (n - k + i) as i128)?;
        acc /= i as i128; // exact: acc is C(n-k+i, i) after division
    }
    Ok(acc)
}

/// dim H^k(R^N): harmonic homogeneous polynomials of degree k in N real
/// variables. Computed as the rank of the trace-free part,
/// C(k+N−1, k) − C(k+N−3, k−2), which covers N = 1, 2 uniformly.
pub fn dim_hk(n_dim: u32, k: u32) -> Result<i128> {
    if n_dim == 0 {
        return Err(Error::Domain("ambient dimension must be ≥ 1".into()));
    }
    let (n, k) = (n_dim as i64, k as i64);
    Ok(binomial(k + n - 1, k)? - binomial(k + n - 3, k - 2)?)
}

/// dim H^{α,β}(C^n): bidegree-(α,β) harmonic polynomials, via
/// (α+β+n−1)·(α+1)_{n−2}·(β+1)_{n−2} / ((n−1)!(n−2)!) in exact integers.
pub fn dim_hab(n: u32, alpha: u32, beta: u32) -> Result<i128> {
    if n == 0 {
        return Err(Error::Domain("complex dimension must be ≥ 1".into()));
    }
    if n == 1 {
        // only z^α and z̄^β survive ∂∂̄
        return Ok(if alpha == 0 || beta == 0 { 1 } else { 0 });
    }
    let (n, a, b) = (n as i128, alpha as i128, beta as i128);
    let mut num = a + b + n - 1;
    let mut den: i128 = 1;
    for j in 1..=(n - 2) {
        num = checked_mul(num, a + j)?;
        num = checked_mul(num, b + j)?;
        den = checked_mul(den, j)?;
    }
    den = checked_mul(den, checked_mul(den, n - 1)?)?; // (n−1)!(n−2)! = (n−2)!²(n−1)
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// D(k) = Σ_{α+β=k} (−1)^β dim H^{α,β}(C^n), summed term by term.
pub fn alternating_sum_d(n: u32, k: u32) -> Result<i128> {
    let mut total: i128 = 0;
    for beta in 0..=k {
        let term = dim_hab(n, k - beta, beta)?;
        total += if beta % 2 == 0 { term } else { -term };
    }
    Ok(total)
}

/// Coefficients of the monic Chebyshev-like polynomial X^{(l)} with
/// X^{(l)}(x + 1/x) = x^l + x^{−l}: entry j is (−1)^j dim H^j(R^{l+2−2j}),
/// multiplying X^{l−2j}.
pub fn chebyshev_like_coeffs(l: u32) -> Result<Vec<i128>> {
    if l == 0 {
        return Err(Error::Domain("expansion defined for l ≥ 1".into()));
    }
    (0..=l / 2)
        .map(|j| {
            let d = dim_hk(l + 2 - 2 * j, j)?;
            Ok(if j % 2 == 0 { d } else { -d })
        })
        .collect()
}

/// A concrete harmonic homogeneous polynomial, evaluable on R^N.
///
/// `Zonal` is the degree-k zonal harmonic with the given axis, realized by
/// the homogenized Gegenbauer recurrence in t = ⟨x, axis⟩ and |x|²
/// (Chebyshev for N = 2). `Bidegree` identifies R^{2n} with C^n by
/// (x, ξ) ↦ x + iξ, i.e. z_m = x_m + i x_{n+m}, and evaluates z_i^α z̄_j^β
/// with i ≠ j, or the
/// one-variable monomials for n = 1.
#[derive(Debug, Clone)]
pub enum TestPolynomial {
    Zonal { n_dim: u32, degree: u32, axis: Vec<f64> },
    Bidegree { n: u32, alpha: u32, beta: u32, hol_index: usize, anti_index: usize },
}

impl TestPolynomial {
    pub fn zonal(n_dim: u32, degree: u32, axis: Vec<f64>) -> Result<Self> {
        if axis.len() != n_dim as usize {
            return Err(Error::Domain("axis length must match ambient dimension".into()));
        }
        let norm = axis.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::Domain("axis must be a unit vector".into()));
        }
        if n_dim == 1 && degree >= 2 {
            return Err(Error::Domain("no harmonics of degree ≥ 2 in one variable".into()));
        }
        Ok(Self::Zonal { n_dim, degree, axis })
    }

    pub fn bidegree(n: u32, alpha: u32, beta: u32, hol_index: usize, anti_index: usize) -> Result<Self> {
        if n == 0 || hol_index >= n as usize || anti_index >= n as usize {
            return Err(Error::Domain("bidegree index out of range".into()));
        }
        if n == 1 {
            if alpha > 0 && beta > 0 {
                return Err(Error::Domain("n = 1 admits only z^α or z̄^β".into()));
            }
        } else if hol_index == anti_index && alpha > 0 && beta > 0 {
            return Err(Error::Domain("monomial z_i^α z̄_i^β is not harmonic".into()));
        }
        Ok(Self::Bidegree { n, alpha, beta, hol_index, anti_index })
    }

    /// Real ambient dimension of the evaluation domain.
    pub fn ambient_dim(&self) -> usize {
        match self {
            Self::Zonal { n_dim, .. } => *n_dim as usize,
            Self::Bidegree { n, .. } => 2 * *n as usize,
        }
    }

    /// Homogeneity degree.
    pub fn degree(&self) -> u32 {
        match self {
            Self::Zonal { degree, .. } => *degree,
            Self::Bidegree { alpha, beta, .. } => alpha + beta,
        }
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        debug_assert_eq!(x.len(), self.ambient_dim());
        match self {
            Self::Zonal { degree, axis, n_dim } => {
                let t: f64 = x.iter().zip(axis).map(|(a, b)| a * b).sum();
                let r2: f64 = x.iter().map(|v| v * v).sum();
                Complex64::new(zonal_value(*n_dim, *degree, t, r2), 0.0)
            }
            Self::Bidegree { n, alpha, beta, hol_index, anti_index } => {
                let half = *n as usize;
                let z = Complex64::new(x[*hol_index], x[half + hol_index]);
                let w = Complex64::new(x[*anti_index], x[half + anti_index]);
                z.powu(*alpha) * w.conj().powu(*beta)
            }
        }
    }
}

/// Homogenized Gegenbauer C_k^{(N−2)/2} in t with homogenizing factor r²;
/// Chebyshev T_k (scaled ×2 for k ≥ 1) when N = 2, plain monomial when N = 1.
fn zonal_value(n_dim: u32, degree: u32, t: f64, r2: f64) -> f64 {
    if n_dim == 1 {
        return if degree == 0 { 1.0 } else { t };
    }
    let k = degree;
    if k == 0 {
        return 1.0;
    }
    if n_dim == 2 {
        // 2 T_k(t/r) r^k: p_1 = 2t, p_{k+1} = 2t p_k − r² p_{k−1}
        let mut prev = 2.0;
        let mut cur = 2.0 * t;
        for _ in 1..k {
            let next = 2.0 * t * cur - r2 * prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    let lambda = (n_dim as f64 - 2.0) / 2.0;
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * t;
    for j in 1..k {
        let jf = j as f64;
        let next = (2.0 * (jf + lambda) * t * cur - (jf + 2.0 * lambda - 1.0) * r2 * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Richardson-extrapolated central-difference Laplacian of `p` at `x`,
/// returned with the scale Σ_j |∂²p/∂x_j²| used for relative comparison.
pub fn laplacian_fd(p: &TestPolynomial, x: &[f64], h: f64) -> (Complex64, f64) {
    let second_diffs = |h: f64| -> Vec<Complex64> {
        (0..x.len())
            .map(|j| {
                let mut xp = x.to_vec();
                let mut xm = x.to_vec();
                xp[j] += h;
                xm[j] -= h;
                (p.eval(&xp) - 2.0 * p.eval(x) + p.eval(&xm)) / (h * h)
            })
            .collect()
    };
    let coarse = second_diffs(h);
    let fine = second_diffs(h / 2.0);
    let mut lap = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for (c, f) in coarse.iter().zip(&fine) {
        let extrap = (4.0 * f - c) / 3.0;
        lap += extrap;
        scale += extrap.norm();
    }
    (lap, scale)
}
