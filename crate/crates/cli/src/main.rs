//! `trisphere`: evaluate the closed-form triple-product sphere integrals,
//! print operator spectra, compare spectral sums against closed forms, test
//! convergence regions, and run the verification suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use trisphere::harmonics::dim_hk;
use trisphere::specfun::MeroValue;
use trisphere::spectra::{
    a_k, gamma_k_funk_hecke, gamma_k_printed, param_convert, q_eigen, OperatorKind,
    ParamSet,
};
use trisphere::triple::{
    closed_distance_consistent, closed_distance_printed, closed_inner_consistent,
    closed_inner_printed, closed_symplectic, region_check, trace_report,
};
use trisphere::Error;
use trisphere_cli::parse::{format_complex, parse_triple};
use trisphere_cli::report::VerificationReport;
use trisphere_cli::suite::{run_suite, SuiteConfig, SuiteFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Symplectic,
    Distance,
    Inner,
}

impl KindArg {
    fn with_dim(self, dim: u32) -> OperatorKind {
        match self {
            KindArg::Symplectic => OperatorKind::Symplectic(dim),
            KindArg::Distance => OperatorKind::Distance(dim),
            KindArg::Inner => OperatorKind::InnerProduct(dim),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Exact,
    Mc,
    Audit,
    All,
}

#[derive(Parser, Debug)]
#[command(name = "trisphere", version, about = "Triple-product sphere integrals: closed forms, spectra, and verification")]
struct Cli {
    /// Base seed for every Monte Carlo draw
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Monte Carlo sample count
    #[arg(long, global = true, default_value_t = 1_000_000)]
    samples: u64,
    /// Relative tolerance for series summation
    #[arg(long = "rel-tol", global = true, default_value_t = 1e-10)]
    rel_tol: f64,
    /// Term budget for series summation
    #[arg(long = "max-terms", global = true, default_value_t = 200_000)]
    max_terms: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long = "out", global = true)]
    out: Option<PathBuf>,
    /// Zero out wall-clock fields so identical configs give identical bytes
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a closed-form triple integral at one parameter point
    Eval {
        #[command(subcommand)]
        kernel: EvalKernel,
    },
    /// Tabulate operator multipliers and eigenspace multiplicities
    Spectrum {
        kind: KindArg,
        /// n, m, or N, matching the kernel family
        #[arg(long)]
        dim: u32,
        /// Spectral parameter μ, e.g. "-3" or "-2+0.5i"
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long = "k-max", default_value_t = 10)]
        k_max: u32,
    },
    /// Sum the spectral trace and compare with the closed forms
    Trace {
        kind: KindArg,
        #[arg(long)]
        dim: u32,
        /// Comma-separated μ triple, e.g. "-3,-3,-3"
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Convergence-region verdict with per-inequality diagnostics
    Region {
        kind: KindArg,
        #[arg(long)]
        dim: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Run the verification suite and emit a report
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand, Debug)]
enum EvalKernel {
    /// |[Y,Z]|-kernel on S^{2n−1}
    Symplectic {
        #[arg(long)]
        n: u32,
        /// Kernel powers λ₁,λ₂,λ₃
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Spectral parameters μ₁,μ₂,μ₃
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// |ω−η|-kernel on S^m
    Distance {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// |⟨x,y⟩|-kernel on S^{N−1}
    Inner {
        #[arg(long = "N")]
        n_dim: u32,
        /// Exponent parameters ν₁,ν₂,ν₃ (kernel powers −2ν_j)
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
}

/// Failures carrying their process exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure { code: 2, message: e.to_string() },
            _ => Failure { code: 1, message: e.to_string() },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.rel_tol > 0.0 && cli.rel_tol <= 1e-2) {
        eprintln!("error: --rel-tol must lie in (0, 1e-2]");
        return ExitCode::from(2);
    }
    if cli.samples < 1_000 {
        eprintln!("error: --samples must be at least 1000");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure { code: 3, message: format!("writing {}: {e}", path.display()) }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn mero_parts(v: MeroValue) -> (Option<Complex64>, &'static str) {
    match v {
        MeroValue::Finite(x) => (Some(x), "finite"),
        MeroValue::Zero => (Some(Complex64::new(0.0, 0.0)), "zero"),
        MeroValue::Pole => (None, "pole"),
    }
}

fn parse_opt_triple(s: &Option<String>) -> Result<Option<[Complex64; 3]>, Failure> {
    s.as_deref().map(parse_triple).transpose().map_err(usage)
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Eval { kernel } => cmd_eval(cli, kernel),
        Command::Spectrum { kind, dim, mu, k_max } => cmd_spectrum(cli, *kind, *dim, mu, *k_max),
        Command::Trace { kind, dim, mu } => cmd_trace(cli, *kind, *dim, mu),
        Command::Region { kind, dim, lambda, mu } => cmd_region(cli, *kind, *dim, lambda, mu),
        Command::Verify { suite } => cmd_verify(cli, *suite),
    }
}

fn build_param_set(
    kind: OperatorKind,
    lambda: &Option<String>,
    mu: &Option<String>,
    abg: Option<[Complex64; 3]>,
) -> Result<ParamSet, Failure> {
    let p = ParamSet {
        kind,
        lambda: parse_opt_triple(lambda)?,
        mu: parse_opt_triple(mu)?,
        abg,
        delta: None,
    };
    if p.lambda.is_none() && p.mu.is_none() && p.abg.is_none() {
        return Err(usage("supply one of --lambda, --mu, or --alpha/--beta/--gamma"));
    }
    Ok(param_convert(&p)?)
}

fn cmd_eval(cli: &Cli, kernel: &EvalKernel) -> Result<ExitCode, Failure> {
    let (p, value, extra): (ParamSet, MeroValue, Vec<(String, String)>) = match kernel {
        EvalKernel::Symplectic { n, lambda, mu, alpha, beta, gamma } => {
            let abg = match (alpha, beta, gamma) {
                (None, None, None) => None,
                (Some(a), Some(b), Some(g)) => {
                    let parse = |s: &String| {
                        trisphere_cli::parse::parse_complex(s).map_err(usage)
                    };
                    Some([parse(a)?, parse(b)?, parse(g)?])
                }
                _ => return Err(usage("--alpha/--beta/--gamma must be given together")),
            };
            let p = build_param_set(OperatorKind::Symplectic(*n), lambda, mu, abg)?;
            let v = closed_symplectic(&p)?;
            (p, v, vec![])
        }
        EvalKernel::Distance { m, lambda, mu } => {
            let p = build_param_set(OperatorKind::Distance(*m), lambda, mu, None)?;
            let printed = closed_distance_printed(&p)?;
            let consistent = closed_distance_consistent(&p)?;
            let note = match consistent {
                MeroValue::Finite(v) => format_complex(v),
                MeroValue::Zero => "0".into(),
                MeroValue::Pole => "pole".into(),
            };
            (p, printed, vec![("consistent".into(), note)])
        }
        EvalKernel::Inner { n_dim, nu, mu } => {
            let p = match (parse_opt_triple(nu)?, mu) {
                (Some(nu), _) => {
                    // kernel powers −2ν_j ⇔ μ_j = 2ν_j − N/2
                    let shift = *n_dim as f64 / 2.0;
                    param_convert(&ParamSet::from_mu(
                        OperatorKind::InnerProduct(*n_dim),
                        nu.map(|v| 2.0 * v - shift),
                    ))?
                }
                (None, Some(_)) => {
                    build_param_set(OperatorKind::InnerProduct(*n_dim), &None, mu, None)?
                }
                (None, None) => return Err(usage("supply --nu or --mu")),
            };
            let nu = p.mu.unwrap().map(|m| m / 2.0 + *n_dim as f64 / 4.0);
            let printed = closed_inner_printed(*n_dim, nu, cli.rel_tol, cli.max_terms)?;
            let consistent = closed_inner_consistent(*n_dim, nu, cli.rel_tol, cli.max_terms)?;
            let note = match consistent.value {
                MeroValue::Finite(v) => format_complex(v),
                MeroValue::Zero => "0".into(),
                MeroValue::Pole => "pole".into(),
            };
            (
                p,
                printed.value,
                vec![
                    ("consistent (printed × π³)".into(), note),
                    ("series terms".into(), printed.hyper.terms_used.to_string()),
                ],
            )
        }
    };

    let region = region_check(&p)?;
    let verdict = if region.inside { "convergent" } else { "divergent" };
    let (v, status) = mero_parts(value);

    let body = match cli.format {
        Format::Json => {
            let mut obj = json!({
                "value": v.map(|z| json!({"re": z.re, "im": z.im})),
                "status": status,
                "region": verdict,
            });
            for (k, val) in &extra {
                obj[k] = json!(val);
            }
            format!("{}\n", serde_json::to_string_pretty(&obj).unwrap())
        }
        Format::Csv => {
            let mut s = String::from("value,status,region\n");
            s.push_str(&format!(
                "{},{status},{verdict}\n",
                v.map(format_complex).unwrap_or_default()
            ));
            s
        }
        Format::Text => {
            let mut s = format!(
                "value: {}\nstatus: {status}\nregion: {verdict}\n",
                v.map(format_complex).unwrap_or_else(|| "—".into())
            );
            for (k, val) in &extra {
                s.push_str(&format!("{k}: {val}\n"));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(
    cli: &Cli,
    kind: KindArg,
    dim: u32,
    mu: &str,
    k_max: u32,
) -> Result<ExitCode, Failure> {
    if k_max > 10_000 {
        return Err(usage("--k-max must be at most 10000"));
    }
    let mu = trisphere_cli::parse::parse_complex(mu).map_err(usage)?;
    let op = kind.with_dim(dim);

    struct Row {
        k: u32,
        multipliers: Vec<(&'static str, MeroValue)>,
        multiplicity: i128,
    }
    let mut rows = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let (multipliers, mult_dim) = match op {
            OperatorKind::Symplectic(n) => {
                (vec![("multiplier", a_k(n, k, mu))], dim_hk(2 * n, k)?)
            }
            OperatorKind::Distance(m) => (
                vec![
                    ("printed", gamma_k_printed(m, k, mu)),
                    ("funk-hecke", gamma_k_funk_hecke(m, k, mu)),
                ],
                dim_hk(m + 1, k)?,
            ),
            OperatorKind::InnerProduct(nn) => {
                (vec![("multiplier", q_eigen(nn, k, mu))], dim_hk(nn, k)?)
            }
        };
        rows.push(Row { k, multipliers, multiplicity: mult_dim });
    }

    let cell = |v: MeroValue| -> String {
        match mero_parts(v) {
            (Some(z), _) => format_complex(z),
            (None, _) => "pole".into(),
        }
    };
    let headers: Vec<&str> = rows[0].multipliers.iter().map(|(h, _)| *h).collect();
    let body = match cli.format {
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|r| {
                    let mut o = json!({"k": r.k, "multiplicity": r.multiplicity.to_string()});
                    for (h, v) in &r.multipliers {
                        o[*h] = json!(cell(*v));
                    }
                    o
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&json!(list)).unwrap())
        }
        Format::Csv => {
            let mut s = format!("k,{},multiplicity\n", headers.join(","));
            for r in &rows {
                let vals: Vec<String> = r.multipliers.iter().map(|(_, v)| cell(*v)).collect();
                s.push_str(&format!("{},{},{}\n", r.k, vals.join(","), r.multiplicity));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:>5}  {:<60}  multiplicity\n", "k", headers.join(" / "));
            for r in &rows {
                let vals: Vec<String> = r.multipliers.iter().map(|(_, v)| cell(*v)).collect();
                s.push_str(&format!("{:>5}  {:<60}  {}\n", r.k, vals.join(" / "), r.multiplicity));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_trace(cli: &Cli, kind: KindArg, dim: u32, mu: &str) -> Result<ExitCode, Failure> {
    let mu = parse_triple(mu).map_err(usage)?;
    let op = kind.with_dim(dim);
    let report = trace_report(op, mu, cli.rel_tol, cli.max_terms)?;
    let mero = |v: MeroValue| match mero_parts(v) {
        (Some(z), _) => format_complex(z),
        (None, _) => "pole".into(),
    };
    let body = match cli.format {
        Format::Json => {
            let obj = json!({
                "series": mero(MeroValue::Finite(report.series.series.value)),
                "terms": report.series.series.terms_used,
                "converged": report.series.series.converged,
                "decay_exponent": report.series.decay_exponent,
                "closed_printed": mero(report.closed_printed),
                "closed_consistent": mero(report.closed_consistent),
                "ratio": report.ratio.map(format_complex),
            });
            format!("{}\n", serde_json::to_string_pretty(&obj).unwrap())
        }
        Format::Csv => {
            let mut s =
                String::from("series,terms,converged,decay_exponent,closed_printed,closed_consistent,ratio\n");
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                format_complex(report.series.series.value),
                report.series.series.terms_used,
                report.series.series.converged,
                report.series.decay_exponent,
                mero(report.closed_printed),
                mero(report.closed_consistent),
                report.ratio.map(format_complex).unwrap_or_default(),
            ));
            s
        }
        Format::Text => {
            let mut s = format!(
                "spectral sum:      {}  ({} terms, converged: {}, decay exponent {:.3})\n",
                format_complex(report.series.series.value),
                report.series.series.terms_used,
                report.series.series.converged,
                report.series.decay_exponent,
            );
            s.push_str(&format!("closed (printed):  {}\n", mero(report.closed_printed)));
            s.push_str(&format!("closed (matched):  {}\n", mero(report.closed_consistent)));
            if let Some(r) = report.ratio {
                s.push_str(&format!("sum / closed:      {}\n", format_complex(r)));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_region(
    cli: &Cli,
    kind: KindArg,
    dim: u32,
    lambda: &Option<String>,
    mu: &Option<String>,
) -> Result<ExitCode, Failure> {
    let p = build_param_set(kind.with_dim(dim), lambda, mu, None)?;
    let report = region_check(&p)?;
    let verdict = if report.inside { "convergent" } else { "divergent" };
    let body = match cli.format {
        Format::Json => {
            let diags: Vec<_> = report
                .diagnostics
                .iter()
                .map(|d| {
                    json!({"label": d.label, "lhs": d.lhs, "bound": d.bound, "satisfied": d.satisfied})
                })
                .collect();
            let obj = json!({
                "region": verdict,
                "diagnostics": diags,
                "alt_form": report.alt_form_inside,
            });
            format!("{}\n", serde_json::to_string_pretty(&obj).unwrap())
        }
        Format::Csv => {
            let mut s = String::from("label,lhs,bound,satisfied\n");
            for d in &report.diagnostics {
                s.push_str(&format!("{},{},{},{}\n", d.label, d.lhs, d.bound, d.satisfied));
            }
            s
        }
        Format::Text => {
            let mut s = format!("region: {verdict}\n");
            for d in &report.diagnostics {
                let mark = if d.satisfied { "ok" } else { "violated" };
                s.push_str(&format!("  {} = {:.6} > {:.6}: {mark}\n", d.label, d.lhs, d.bound));
            }
            if let Some(alt) = report.alt_form_inside {
                s.push_str(&format!(
                    "exponent-form verdict agrees: {}\n",
                    alt == report.inside
                ));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, suite: SuiteArg) -> Result<ExitCode, Failure> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        samples: cli.samples,
        rel_tol: cli.rel_tol,
        max_terms: cli.max_terms,
    };
    let filter = match suite {
        SuiteArg::Exact => SuiteFilter::Exact,
        SuiteArg::Mc => SuiteFilter::Mc,
        SuiteArg::Audit => SuiteFilter::Audit,
        SuiteArg::All => SuiteFilter::All,
    };
    let mut report: VerificationReport = run_suite(filter, &cfg);
    if cli.deterministic {
        report.env.wall_ms = 0;
    }
    let body = match cli.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    emit(cli, &body)?;
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
