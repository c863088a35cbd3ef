//! Machine-readable verification reports: one entry per check, a table of
//! measured audit constants, and the environment that produced them.

use serde::{Deserialize, Serialize};

/// How a suite entry decides pass/fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Integer or bit-exact comparison; `observed` counts failures.
    Exact,
    /// `observed` (an error or a value) compared against `expected` within
    /// a tolerance folded into the comparison itself.
    Tolerance,
    /// Monte Carlo agreement; `sigma` is the z-score, pass iff ≤ 3.
    McSigma,
    /// Measured printed constant; reported, never fatal.
    ConstantAudit,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SuiteEntry {
    pub name: String,
    pub kind: CheckKind,
    pub expected: f64,
    pub observed: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    pub pass: bool,
}

/// One measured constant from the prefactor audits, keyed by the theorem
/// label used in the text report and the dimension it was measured at.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConstantEntry {
    pub theorem: String,
    pub dim: u32,
    pub measured: f64,
    pub spread: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EnvInfo {
    pub seed: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub suite: Vec<SuiteEntry>,
    pub constants: Vec<ConstantEntry>,
    pub env: EnvInfo,
}

impl VerificationReport {
    /// Conjunction over every entry that is allowed to fail the run;
    /// constant audits only report.
    pub fn all_pass(&self) -> bool {
        self.suite
            .iter()
            .filter(|e| e.kind != CheckKind::ConstantAudit)
            .all(|e| e.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,kind,expected,observed,sigma,pass\n");
        for e in &self.suite {
            let kind = match e.kind {
                CheckKind::Exact => "exact",
                CheckKind::Tolerance => "tolerance",
                CheckKind::McSigma => "mc-sigma",
                CheckKind::ConstantAudit => "constant-audit",
            };
            let sigma = e.sigma.map(|s| format!("{s:.6e}")).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{:.12e},{:.12e},{},{}\n",
                e.name, kind, e.expected, e.observed, sigma, e.pass
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.suite {
            let status = if e.pass { "PASS" } else { "FAIL" };
            let sigma = e
                .sigma
                .map(|s| format!("  sigma {s:.3}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{status}  {:<44} expected {:>18.12e}  observed {:>18.12e}{sigma}\n",
                e.name, e.expected, e.observed
            ));
        }
        if !self.constants.is_empty() {
            out.push_str("\nmeasured constants\n");
            for c in &self.constants {
                out.push_str(&format!(
                    "  {:<34} dim {:>2}  measured {:>18.12e}  spread {:.3e}\n",
                    c.theorem, c.dim, c.measured, c.spread
                ));
            }
        }
        out.push_str(&format!(
            "\nseed {}  wall {} ms  overall {}\n",
            self.env.seed,
            self.env.wall_ms,
            if self.all_pass() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            suite: vec![
                SuiteEntry {
                    name: "a".into(),
                    kind: CheckKind::Tolerance,
                    expected: 1.0,
                    observed: 1.0 + 1e-13,
                    sigma: None,
                    pass: true,
                },
                SuiteEntry {
                    name: "b".into(),
                    kind: CheckKind::McSigma,
                    expected: 2.0,
                    observed: 2.1,
                    sigma: Some(1.2),
                    pass: true,
                },
            ],
            constants: vec![ConstantEntry {
                theorem: "t".into(),
                dim: 2,
                measured: 3.5,
                spread: 1e-12,
            }],
            env: EnvInfo { seed: 42, wall_ms: 17 },
        }
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn audit_entries_never_fail_the_run() {
        let mut r = sample();
        r.suite.push(SuiteEntry {
            name: "audit".into(),
            kind: CheckKind::ConstantAudit,
            expected: 1.0,
            observed: 2.0,
            sigma: None,
            pass: false,
        });
        assert!(r.all_pass());
        r.suite[0].pass = false;
        assert!(!r.all_pass());
    }

    #[test]
    fn csv_has_fixed_header() {
        let csv = sample().to_csv();
        assert!(csv.starts_with("name,kind,expected,observed,sigma,pass\n"));
        assert_eq!(csv.lines().count(), 3);
    }
}
