//! End-to-end acceptance gate: one pass/fail line per criterion, at pinned
//! tolerances. Run with `cargo test --test acceptance -- --nocapture` to see
//! every line.

use trisphere_cli::report::{CheckKind, SuiteEntry};
use trisphere_cli::suite::{self, SuiteConfig};

fn cfg(samples: u64) -> SuiteConfig {
    SuiteConfig { seed: 42, samples, rel_tol: 1e-10, max_terms: 200_000 }
}

fn gate(name: &str, entries: &[SuiteEntry]) {
    let pass = entries.iter().all(|e| e.pass);
    println!("acceptance {name}: {}", if pass { "PASS" } else { "FAIL" });
    for e in entries {
        assert!(
            e.pass,
            "{name} / {}: expected {:.12e}, observed {:.12e}, sigma {:?}",
            e.name, e.expected, e.observed, e.sigma
        );
    }
}

#[test]
fn reference_symplectic_integral() {
    let cfg = cfg(10_000_000);
    let mut entries = suite::symplectic_reference_exact(&cfg);
    entries.extend(suite::symplectic_reference_mc(&cfg));
    gate("reference symplectic integral", &entries);
}

#[test]
fn spectral_trace_chain() {
    gate("spectral trace chain", &suite::trace_chain(&cfg(0)));
}

#[test]
fn very_well_poised_summation() {
    gate("very-well-poised summation", &suite::dougall_identity(&cfg(0)));
}

#[test]
fn alternating_series_transformation() {
    gate("alternating series transformation", &suite::whipple_identity(&cfg(0)));
}

#[test]
fn dimension_identities() {
    gate("dimension identities", &suite::dimension_identities(&cfg(0)));
}

#[test]
fn eigenvalue_oracles() {
    gate("eigenvalue oracles", &suite::eigenvalue_oracles(&cfg(1_000_000)));
}

#[test]
fn multiplier_factorization() {
    gate("multiplier factorization", &suite::factorization_identity(&cfg(0)));
}

#[test]
fn gaussian_pairing() {
    gate("gaussian pairing", &suite::gaussian_pairing(&cfg(0)));
}

#[test]
fn constant_audit() {
    // reported, never fatal: the printed prefactors are measured, not assumed
    let (entries, constants) = suite::constant_audit(&cfg(1_000_000));
    let pass = entries.iter().all(|e| e.pass);
    println!("acceptance constant audit: {}", if pass { "PASS" } else { "FAIL" });
    for c in &constants {
        println!(
            "  measured {} dim {}: {:.12e} (spread {:.3e})",
            c.theorem, c.dim, c.measured, c.spread
        );
    }
    assert!(entries.iter().all(|e| e.kind == CheckKind::ConstantAudit));
    assert!(!constants.is_empty());
}

#[test]
fn region_predicates() {
    gate("region predicates", &suite::region_predicates(&cfg(0)));
}
