//! Brute-force ground truth: Monte Carlo on products of spheres, exact
//! trapezoid quadrature on the torus for the circle kernels, and adaptive
//! 1-D quadrature for the Gaussian Fourier pairing.
//!
//! All Monte Carlo is sharded with a counter-based splittable generator and
//! an ordered reduction, so results are bit-identical for a given
//! (seed, samples, shard_count) whether shards run sequentially or on a
//! thread pool.

use num_complex::Complex64;

use crate::harmonics::TestPolynomial;
use crate::specfun::sphere_volume;
use crate::spectra::{b_n, OperatorKind};
use crate::triple::exponent_region;
use crate::{Error, Result};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic per-shard stream: the (seed, shard) pair is hashed into an
/// independent SplitMix64 state.
#[derive(Debug, Clone)]
pub struct ShardRng {
    state: u64,
}

impl ShardRng {
    pub fn new(seed: u64, shard: u64) -> Self {
        let mut s = seed;
        let a = splitmix_next(&mut s);
        let mut state = a ^ shard.wrapping_mul(0xD134_2543_DE82_EF95);
        splitmix_next(&mut state);
        Self { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        splitmix_next(&mut self.state)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard Gaussian pair via Box–Muller.
    pub fn next_gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = 1.0 - self.next_f64(); // (0, 1]
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }
}

/// Uniform point on S^{N−1}: normalized vector of independent Gaussians.
pub fn sample_sphere(n_dim: u32, rng: &mut ShardRng) -> Vec<f64> {
    loop {
        let mut v = Vec::with_capacity(n_dim as usize);
        while v.len() < n_dim as usize {
            let (a, b) = rng.next_gaussian_pair();
            v.push(a);
            if v.len() < n_dim as usize {
                v.push(b);
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for x in &mut v {
                *x /= norm;
            }
            return v;
        }
    }
}

/// [X, Y] = −⟨x, η⟩ + ⟨ξ, y⟩ for X = (x, ξ), Y = (y, η) ∈ R^{2n}.
pub fn symplectic_form(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() || x.len() % 2 != 0 || x.is_empty() {
        return Err(Error::Domain("symplectic form needs matching even dimensions".into()));
    }
    let n = x.len() / 2;
    let mut acc = 0.0;
    for i in 0..n {
        acc += x[n + i] * y[i] - x[i] * y[n + i];
    }
    Ok(acc)
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn pair_base(kind: OperatorKind, x: &[f64], y: &[f64]) -> f64 {
    match kind {
        OperatorKind::Symplectic(_) => symplectic_form(x, y).unwrap(),
        OperatorKind::Distance(_) => {
            x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
        }
        OperatorKind::InnerProduct(_) => dot(x, y),
    }
}

fn kernel_pow(base: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        base.abs().powf(e)
    }
}

/// Kernel of an integral under estimation: the operator family plus the
/// exponent(s) of its pair factors — three for a triple integral, one for a
/// single operator application.
#[derive(Debug, Clone)]
pub struct KernelSpec {
    pub kind: OperatorKind,
    pub exponents: Vec<f64>,
}

impl KernelSpec {
    pub fn triple(kind: OperatorKind, exponents: [f64; 3]) -> Self {
        Self { kind, exponents: exponents.to_vec() }
    }

    pub fn single(kind: OperatorKind, exponent: f64) -> Self {
        Self { kind, exponents: vec![exponent] }
    }
}

/// Whether shards are reduced on the current thread or a rayon pool; the
/// estimate is bit-identical either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

/// A reproducible Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy)]
pub struct MCEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

fn shard_sizes(samples: u64, shards: u64) -> Vec<u64> {
    let base = samples / shards;
    let rem = samples % shards;
    (0..shards).map(|i| base + u64::from(i < rem)).collect()
}

fn run_shards<F>(shards: u64, mode: ExecMode, work: F) -> Vec<(f64, f64, f64, f64)>
where
    F: Fn(u64) -> (f64, f64, f64, f64) + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..shards).map(work).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..shards).into_par_iter().map(work).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..shards).map(work).collect()
            }
        }
    }
}

/// vol(S^{N−1})^k × mean of the kernel over independent uniform k-tuples,
/// with per-tuple partial sums accumulated per shard and reduced in shard
/// order.
fn mc_reduce(
    sums: &[(f64, f64, f64, f64)],
    samples: u64,
    seed: u64,
    scale: f64,
) -> MCEstimate {
    let (mut s1, mut s2) = (0.0, 0.0);
    for (a, b, _, _) in sums {
        s1 += a;
        s2 += b;
    }
    let n = samples as f64;
    let mean = s1 / n;
    let var = ((s2 / n - mean * mean) / (n - 1.0).max(1.0)).max(0.0);
    MCEstimate {
        mean: scale * mean,
        stderr: scale * var.sqrt(),
        samples,
        seed,
    }
}

/// Monte Carlo triple integral ∫∫∫ K(Y,Z)^{e₁} K(Z,X)^{e₂} K(X,Y)^{e₃} with
/// the Euclidean surface measure on each factor.
pub fn mc_triple(
    kernel: &KernelSpec,
    samples: u64,
    seed: u64,
    shards: u64,
    mode: ExecMode,
) -> Result<MCEstimate> {
    if kernel.exponents.len() != 3 {
        return Err(Error::Domain("triple integral needs three exponents".into()));
    }
    if samples == 0 || shards == 0 {
        return Err(Error::Domain("samples and shards must be positive".into()));
    }
    let e: [f64; 3] = [kernel.exponents[0], kernel.exponents[1], kernel.exponents[2]];
    let diags = exponent_region(kernel.kind, e);
    if let Some(bad) = diags.iter().find(|d| !d.satisfied) {
        return Err(Error::NonConvergent(format!(
            "exponents outside the convergence region: {} = {} ≤ {}",
            bad.label, bad.lhs, bad.bound
        )));
    }
    if e.iter().any(|&x| x <= -0.5) {
        return Err(Error::Domain(
            "Monte Carlo restricted to exponents > −1/2 (finite variance)".into(),
        ));
    }
    let n_dim = kernel.kind.ambient_dim();
    let sizes = shard_sizes(samples, shards);
    let kind = kernel.kind;
    let sums = run_shards(shards, mode, |shard| {
        let mut rng = ShardRng::new(seed, shard);
        let (mut s1, mut s2) = (0.0, 0.0);
        for _ in 0..sizes[shard as usize] {
            let x = sample_sphere(n_dim, &mut rng);
            let y = sample_sphere(n_dim, &mut rng);
            let z = sample_sphere(n_dim, &mut rng);
            let v = kernel_pow(pair_base(kind, &y, &z), e[0])
                * kernel_pow(pair_base(kind, &z, &x), e[1])
                * kernel_pow(pair_base(kind, &x, &y), e[2]);
            s1 += v;
            s2 += v * v;
        }
        (s1, s2, 0.0, 0.0)
    });
    let vol = sphere_volume(n_dim);
    Ok(mc_reduce(&sums, samples, seed, vol * vol * vol))
}

/// Estimate of an operator applied to a polynomial, with the implied
/// eigenvalue when the base point carries enough of the polynomial's mass.
#[derive(Debug, Clone, Copy)]
pub struct OperatorEstimate {
    pub value: Complex64,
    pub stderr: f64,
    pub multiplier: Option<Complex64>,
    pub samples: u64,
    pub seed: u64,
}

/// MC estimate of (K f)(η) = ∫ f(ω) K(ω, η)^e dσ(ω) for f = p restricted to
/// the sphere; `multiplier` is value / p(η) when |p(η)| exceeds a tenth of
/// the polynomial's rms size on the sphere.
pub fn mc_apply_operator(
    kernel: &KernelSpec,
    p: &TestPolynomial,
    eta: &[f64],
    samples: u64,
    seed: u64,
    shards: u64,
    mode: ExecMode,
) -> Result<OperatorEstimate> {
    if kernel.exponents.len() != 1 {
        return Err(Error::Domain("operator application takes one exponent".into()));
    }
    let e = kernel.exponents[0];
    if e <= -0.5 {
        return Err(Error::Domain(
            "Monte Carlo restricted to exponents > −1/2 (finite variance)".into(),
        ));
    }
    let n_dim = kernel.kind.ambient_dim();
    if p.ambient_dim() != n_dim as usize || eta.len() != n_dim as usize {
        return Err(Error::Domain("polynomial / point dimension mismatch".into()));
    }
    let norm = dot(eta, eta).sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::Domain("base point must lie on the sphere".into()));
    }
    if samples == 0 || shards == 0 {
        return Err(Error::Domain("samples and shards must be positive".into()));
    }
    let sizes = shard_sizes(samples, shards);
    let kind = kernel.kind;
    let sums = run_shards(shards, mode, |shard| {
        let mut rng = ShardRng::new(seed, shard);
        let (mut sr, mut si, mut sq, mut p2) = (0.0, 0.0, 0.0, 0.0);
        for _ in 0..sizes[shard as usize] {
            let w = sample_sphere(n_dim, &mut rng);
            let k = kernel_pow(pair_base(kind, &w, eta), e);
            let f = p.eval(&w);
            let v = f * k;
            sr += v.re;
            si += v.im;
            sq += v.norm_sqr();
            p2 += f.norm_sqr();
        }
        (sr, si, sq, p2)
    });
    let n = samples as f64;
    let (mut sr, mut si, mut sq, mut p2) = (0.0, 0.0, 0.0, 0.0);
    for (a, b, c, d) in &sums {
        sr += a;
        si += b;
        sq += c;
        p2 += d;
    }
    let vol = sphere_volume(n_dim);
    let mean = Complex64::new(sr / n, si / n);
    let var = ((sq / n - mean.norm_sqr()) / (n - 1.0).max(1.0)).max(0.0);
    let value = vol * mean;
    let stderr = vol * var.sqrt();
    let rms = (p2 / n).sqrt();
    let at_eta = p.eval(eta);
    let multiplier = if at_eta.norm() > 0.1 * rms { Some(value / at_eta) } else { None };
    Ok(OperatorEstimate { value, stderr, multiplier, samples, seed, })
}

/// Exact triple integral over (S¹)³ for even-integer exponents: the kernels
/// are trigonometric polynomials, so after quotienting rotation invariance
/// the trapezoid rule on the 2-torus is exact once the grid beats the
/// bandwidth.
pub fn torus_quadrature_triple(
    kind: OperatorKind,
    n_grid: u32,
    exponents: [u32; 3],
) -> Result<f64> {
    if !n_grid.is_power_of_two() || n_grid < 64 {
        return Err(Error::Domain("grid must be a power of two, at least 64".into()));
    }
    if exponents.iter().any(|e| e % 2 != 0) {
        return Err(Error::Domain("torus quadrature needs even exponents".into()));
    }
    let k = |theta: f64, e: u32| -> f64 {
        let base = match kind {
            OperatorKind::Symplectic(1) => theta.sin(),
            OperatorKind::Distance(1) => 2.0 * (theta / 2.0).sin(),
            _ => return f64::NAN,
        };
        base.powi(e as i32)
    };
    if matches!(k(0.3, 2), v if v.is_nan()) {
        return Err(Error::Domain("torus oracle covers Symplectic(1) and Distance(1) only".into()));
    }
    let g = n_grid as usize;
    let h = 2.0 * std::f64::consts::PI / g as f64;
    let mut total = 0.0;
    for iu in 0..g {
        let u = iu as f64 * h;
        for iv in 0..g {
            let v = iv as f64 * h;
            total += k(v - u, exponents[0]) * k(-v, exponents[1]) * k(u, exponents[2]);
        }
    }
    Ok(2.0 * std::f64::consts::PI * total * h * h)
}

/// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64, f64) {
        let m = 0.5 * (a + b);
        let (fa, fm, fb) = (f(a), f(m), f(b));
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), fa, fm, fb)
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (left, ..) = simpson(f, a, m);
        let (right, ..) = simpson(f, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, left, tol / 2.0, depth - 1)
                + recurse(f, m, b, right, tol / 2.0, depth - 1)
        }
    }
    let (whole, ..) = simpson(f, a, b);
    recurse(f, a, b, whole, tol, 40)
}

/// ∫₀^∞ u^q g(u) du with q > −1 after the substitution u = t^p chosen so the
/// transformed integrand is C¹ at 0.
fn power_weighted_integral<G: Fn(f64) -> f64>(q: f64, upper: f64, g: G) -> f64 {
    let p = (2.0 / (1.0 + q)).ceil() + 1.0;
    // ∫ u^q g(u) du = p ∫ t^{p(q+1)−1} g(t^p) dt
    let expo = p * (q + 1.0) - 1.0;
    let t_max = upper.powf(1.0 / p);
    p * adaptive_simpson(&|t: f64| if t <= 0.0 { 0.0 } else { t.powf(expo) * g(t.powf(p)) },
        0.0, t_max, 1e-13)
}

/// The two sides of the N = 1, k = 0 Fourier pairing with the self-dual
/// Gaussian e^{−πx²}: (⟨|x|^λ, gauss⟩, B₁(λ,0)·⟨|y|^{−λ−1}, gauss⟩).
/// Both sides agree when the Bochner constant is correct.
pub fn gaussian_pairing_check(lambda: f64) -> Result<(f64, f64)> {
    if lambda <= -1.0 || lambda >= 0.0 {
        return Err(Error::Domain("pairing defined for λ in (−1, 0)".into()));
    }
    let gauss = |x: f64| (-std::f64::consts::PI * x * x).exp();
    let upper = 5.0; // e^{−25π} ≪ any tolerance
    let lhs = 2.0 * power_weighted_integral(lambda, upper, gauss);
    let dual = 2.0 * power_weighted_integral(-lambda - 1.0, upper, gauss);
    let b = b_n(1, Complex64::new(lambda, 0.0), 0)
        .value()
        .ok_or_else(|| Error::Domain("B₁(λ,0) not finite".into()))?;
    Ok((lhs, b.re * dual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma_real;
    use std::f64::consts::PI;

    #[test]
    fn rng_streams_are_deterministic_and_distinct() {
        let mut a = ShardRng::new(7, 0);
        let mut b = ShardRng::new(7, 0);
        let mut c = ShardRng::new(7, 1);
        let xs: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        let zs: Vec<u64> = (0..8).map(|_| c.next_u64()).collect();
        assert_eq!(xs, ys);
        assert_ne!(xs, zs);
    }

    #[test]
    fn sphere_points_are_unit_and_balanced() {
        let mut rng = ShardRng::new(11, 0);
        let n = 100_000;
        let mut mean1 = 0.0;
        let mut mean_sq = 0.0;
        for _ in 0..n {
            let x = sample_sphere(4, &mut rng);
            let norm: f64 = x.iter().map(|v| v * v).sum();
            assert!((norm - 1.0).abs() < 1e-13);
            mean1 += x[0];
            mean_sq += x[0] * x[0];
        }
        let nf = n as f64;
        // σ(x₁) ≈ 1/2, σ of mean ≈ 1/(2√n)
        assert!((mean1 / nf).abs() < 4.0 / (2.0 * nf.sqrt()));
        assert!((mean_sq / nf - 0.25).abs() < 4.0 / nf.sqrt());
    }

    #[test]
    fn sphere_zero_dim_is_sign() {
        let mut rng = ShardRng::new(3, 0);
        let mut pos = 0u32;
        for _ in 0..1000 {
            let x = sample_sphere(1, &mut rng);
            assert!((x[0].abs() - 1.0).abs() < 1e-14);
            pos += u32::from(x[0] > 0.0);
        }
        assert!(pos > 400 && pos < 600);
    }

    #[test]
    fn symplectic_form_properties() {
        assert_eq!(symplectic_form(&[1.0, 0.0, 0.0, 0.0], &[0.0, 0.0, 1.0, 0.0]).unwrap(), -1.0);
        let mut rng = ShardRng::new(5, 0);
        for _ in 0..1000 {
            let x = sample_sphere(6, &mut rng);
            let y = sample_sphere(6, &mut rng);
            let f = symplectic_form(&x, &y).unwrap();
            assert!((f + symplectic_form(&y, &x).unwrap()).abs() < 1e-15);
            assert!(symplectic_form(&x, &x).unwrap().abs() < 1e-15);
            // ⟨X, JY⟩ with J(y, η) = (−η, y)
            let jy: Vec<f64> = (0..6)
                .map(|i| if i < 3 { -y[i + 3] } else { y[i - 3] })
                .collect();
            assert!((f - dot(&x, &jy)).abs() < 1e-15);
        }
        assert!(symplectic_form(&[1.0, 0.0], &[0.0, 0.0, 1.0, 0.0]).is_err());
        assert!(symplectic_form(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn constant_kernel_is_volume_cubed() {
        let spec = KernelSpec::triple(OperatorKind::InnerProduct(3), [0.0; 3]);
        let est = mc_triple(&spec, 1000, 1, 4, ExecMode::Sequential).unwrap();
        let vol = sphere_volume(3);
        assert!((est.mean - vol.powi(3)).abs() < 1e-12);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn mc_matches_torus_oracle() {
        let spec = KernelSpec::triple(OperatorKind::Symplectic(1), [2.0, 2.0, 2.0]);
        let est = mc_triple(&spec, 400_000, 42, 8, ExecMode::Sequential).unwrap();
        let exact = 3.0 * PI.powi(3) / 4.0;
        assert!(
            (est.mean - exact).abs() < 4.0 * est.stderr,
            "{} vs {exact} ± {}",
            est.mean,
            est.stderr
        );
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        let spec = KernelSpec::triple(OperatorKind::Distance(2), [2.0, 2.0, 2.0]);
        let a = mc_triple(&spec, 50_000, 9, 16, ExecMode::Sequential).unwrap();
        let b = mc_triple(&spec, 50_000, 9, 16, ExecMode::Parallel).unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits());
        assert_eq!(a.stderr.to_bits(), b.stderr.to_bits());
    }

    #[test]
    fn stderr_scales_like_root_n() {
        let spec = KernelSpec::triple(OperatorKind::InnerProduct(3), [2.0, 2.0, 2.0]);
        let small = mc_triple(&spec, 10_000, 3, 4, ExecMode::Sequential).unwrap();
        let large = mc_triple(&spec, 1_000_000, 3, 4, ExecMode::Sequential).unwrap();
        let ratio = small.stderr / large.stderr;
        assert!(ratio > 5.0 && ratio < 20.0, "ratio {ratio}");
    }

    #[test]
    fn region_violation_refused() {
        let spec = KernelSpec::triple(OperatorKind::Symplectic(1), [-0.9, -0.9, -0.9]);
        assert!(matches!(
            mc_triple(&spec, 100, 1, 1, ExecMode::Sequential),
            Err(Error::NonConvergent(_))
        ));
        let spec = KernelSpec::triple(OperatorKind::Distance(2), [-0.8, 0.0, 0.0]);
        assert!(matches!(
            mc_triple(&spec, 100, 1, 1, ExecMode::Sequential),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn operator_on_constant_gives_volume() {
        let p = TestPolynomial::zonal(3, 0, vec![0.0, 0.0, 1.0]).unwrap();
        let spec = KernelSpec::single(OperatorKind::Distance(2), 0.0);
        let est = mc_apply_operator(&spec, &p, &[0.0, 0.0, 1.0], 500, 2, 2, ExecMode::Sequential)
            .unwrap();
        assert!((est.value.re - sphere_volume(3)).abs() < 1e-12);
        let m = est.multiplier.unwrap();
        assert!((m.re - sphere_volume(3)).abs() < 1e-12);
    }

    #[test]
    fn torus_quadrature_reference_values() {
        let v = torus_quadrature_triple(OperatorKind::Symplectic(1), 64, [2, 2, 2]).unwrap();
        assert!((v - 3.0 * PI.powi(3) / 4.0).abs() < 1e-12, "{v}");
        let v = torus_quadrature_triple(OperatorKind::Distance(1), 64, [2, 2, 2]).unwrap();
        assert!((v - 48.0 * PI.powi(3)).abs() < 1e-11, "{v}");
        let v = torus_quadrature_triple(OperatorKind::Symplectic(1), 128, [0, 0, 0]).unwrap();
        assert!((v - (2.0 * PI).powi(3)).abs() < 1e-10);
        assert!(torus_quadrature_triple(OperatorKind::Symplectic(1), 60, [2, 2, 2]).is_err());
        assert!(torus_quadrature_triple(OperatorKind::Symplectic(1), 64, [1, 2, 2]).is_err());
        assert!(torus_quadrature_triple(OperatorKind::Symplectic(2), 64, [2, 2, 2]).is_err());
    }

    #[test]
    fn gaussian_pairing_reference_point() {
        let (lhs, rhs) = gaussian_pairing_check(-0.5).unwrap();
        let expect = PI.powf(-0.25) * gamma_real(0.25);
        assert!((lhs - expect).abs() < 1e-10, "{lhs} vs {expect}");
        assert!((rhs - expect).abs() < 1e-10, "{rhs} vs {expect}");
    }

    #[test]
    fn gaussian_pairing_dual_exponents() {
        for &lam in &[-0.25, -0.75, -0.4] {
            let (lhs, rhs) = gaussian_pairing_check(lam).unwrap();
            assert!((lhs - rhs).abs() < 1e-9 * lhs.abs(), "λ={lam}: {lhs} vs {rhs}");
        }
        let b1 = b_n(1, Complex64::new(-0.25, 0.0), 0).value().unwrap();
        let b2 = b_n(1, Complex64::new(-0.75, 0.0), 0).value().unwrap();
        assert!((b1 * b2 - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn gaussian_pairing_near_zero_limit() {
        let (lhs, rhs) = gaussian_pairing_check(-1e-3).unwrap();
        assert!((lhs - 1.0).abs() < 1e-2);
        assert!((rhs - 1.0).abs() < 1e-2);
        assert!(gaussian_pairing_check(0.0).is_err());
        assert!(gaussian_pairing_check(-1.0).is_err());
    }
}
