//! Triple-product integrals on spheres and the spectra of the integral
//! operators behind them.
//!
//! The library evaluates the closed gamma-ratio formulas for the three
//! kernels `|[x,y]|` (symplectic form), `|x-y|` (chordal distance) and
//! `|<x,y>|` (inner product), the eigenvalues of the corresponding
//! operators on spherical-harmonic subspaces, and the hypergeometric
//! identities connecting them. Every closed formula can be cross-checked
//! against independent brute-force oracles: Monte Carlo on spheres,
//! torus quadrature, and 1-D Gaussian Fourier pairing.

pub mod error;
pub mod harmonics;
pub mod hyper;
pub mod oracle;
pub mod specfun;
pub mod spectra;
pub mod triple;

pub use error::{Error, Result};
pub use num_complex::Complex64;
