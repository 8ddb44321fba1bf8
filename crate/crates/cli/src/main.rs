//! qhodge: exact verification suites, spectra and classical-limit sweeps for
//! the Hodge-de Rham Dirac operator on the quantum 3-sphere.

mod output;
mod verify;

use clap::{Args, Parser, Subcommand};
use output::{write_out, Format};
use qhodge::dirac::{
    classical_limit_sweep, classical_spectrum, spectrum_closed_form, spectrum_numeric, CaseTag,
    RecordRow, Reducer, SpectrumReport,
};
use qhodge::excalc::Calculus;
use qhodge::hodge::Hodge;
use qhodge::qscalar::QScalar;
use qhodge::uqsu2::Weight;

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_CONFIG: i32 = 2;

#[derive(Parser)]
#[command(name = "qhodge", version, about = "Braided exterior calculus and the Hodge-de Rham operator spectrum on the quantum 3-sphere, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Metric scale gamma as an integer or p/q rational (Cartan-Killing
    /// family member).
    #[arg(long, default_value = "1")]
    gamma: String,

    /// Pin alpha = 1 instead of gamma (the normalisation the spectra tables
    /// use).
    #[arg(long)]
    alpha_one: bool,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Output path; "-" or absent means stdout. Relative paths resolve
    /// against $QHODGE_OUT_DIR when that is set.
    #[arg(long)]
    out: Option<String>,

    /// Numeric tolerance for verification checks.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,

    /// JSON config file with fields {gamma, mode, q}; explicit flags win.
    #[arg(long)]
    config: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full invariant suite and report pass/fail per check.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Multiply beta by this factor to demonstrate the S^2-degeneracy
        /// failure mode.
        #[arg(long, default_value_t = 1.0)]
        beta_scale: f64,
        /// Override eps1 (rational) to demonstrate closure failure.
        #[arg(long)]
        eps1: Option<String>,
        /// Override eps3 (rational) to demonstrate closure failure.
        #[arg(long)]
        eps3: Option<String>,
        /// Use the +i A^-1 root for kappa instead of the default -i A^-1.
        #[arg(long)]
        kappa_plus: bool,
    },
    /// Closed-form and numeric spectra for weights (J, N).
    Spectrum {
        #[command(flatten)]
        common: CommonOpts,
        /// J as an integer or half-integer ("3/2").
        #[arg(long = "J")]
        j: String,
        /// N; all valid N for the given J when omitted.
        #[arg(long = "N", allow_hyphen_values = true)]
        n: Option<i64>,
        /// Comma-separated numeric q values in (0, 1].
        #[arg(long)]
        q: Option<String>,
        /// Emit closed forms only (no numeric evaluation).
        #[arg(long)]
        symbolic: bool,
        /// Restrict to one reduction case.
        #[arg(long, default_value = "auto")]
        case: String,
        /// The classical q = 1 spectrum instead of the quantum one.
        #[arg(long)]
        classical: bool,
    },
    /// Classical-limit convergence sweep over a q grid.
    Limit {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long = "J")]
        j: String,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: Option<i64>,
        /// Grid a:b:n of n points from a to b, inside (0, 1).
        #[arg(long, default_value = "0.9:0.999:10")]
        q_grid: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify { common, .. }
        | Command::Spectrum { common, .. }
        | Command::Limit { common, .. }
            if common.tol <= 0.0 =>
        {
            config_error("tolerance must be positive")
        }
        _ => dispatch(cli.command),
    };
    std::process::exit(code);
}

fn dispatch(command: Command) -> i32 {
    match command {
        Command::Verify { common, beta_scale, eps1, eps3, kappa_plus } => {
            run_verify(&common, beta_scale, eps1, eps3, kappa_plus)
        }
        Command::Spectrum { common, j, n, q, symbolic, case, classical } => {
            run_spectrum(&common, &j, n, q.as_deref(), symbolic, &case, classical)
        }
        Command::Limit { common, j, n, q_grid } => run_limit(&common, &j, n, &q_grid),
    }
}

// -------------------------------------------------------------------------
// Shared parsing
// -------------------------------------------------------------------------

fn parse_rational(s: &str) -> Result<QScalar, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| format!("bad rational: {s}"))?;
        let d: i64 = den.trim().parse().map_err(|_| format!("bad rational: {s}"))?;
        if d == 0 {
            return Err("rational with zero denominator".into());
        }
        Ok(QScalar::from_ratio(n, d))
    } else {
        let n: i64 = s.parse().map_err(|_| format!("bad rational: {s}"))?;
        Ok(QScalar::from_int(n))
    }
}

/// J as "2", "3/2"; returns 2J.
fn parse_two_j(s: &str) -> Result<i64, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| format!("bad J: {s}"))?;
        let d: i64 = den.trim().parse().map_err(|_| format!("bad J: {s}"))?;
        if d != 2 {
            return Err(format!("J must be an integer or half-integer, got {s}"));
        }
        Ok(n)
    } else {
        let n: i64 = s.parse().map_err(|_| format!("bad J: {s}"))?;
        Ok(2 * n)
    }
}

fn parse_q_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| {
            let v: f64 = p.trim().parse().map_err(|_| format!("bad q value: {p}"))?;
            if v > 0.0 && v <= 1.0 {
                Ok(v)
            } else {
                Err(format!("q must lie in (0, 1], got {v}"))
            }
        })
        .collect()
}

fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be a:b:n, got {s}"));
    }
    let a: f64 = parts[0].parse().map_err(|_| format!("bad grid start: {}", parts[0]))?;
    let b: f64 = parts[1].parse().map_err(|_| format!("bad grid end: {}", parts[1]))?;
    let n: usize = parts[2].parse().map_err(|_| format!("bad grid count: {}", parts[2]))?;
    if n < 2 || !(0.0 < a && a < 1.0) || !(0.0 < b && b < 1.0) {
        return Err(format!("grid must have n >= 2 points inside (0, 1), got {s}"));
    }
    Ok((0..n).map(|k| a + (b - a) * (k as f64) / ((n - 1) as f64)).collect())
}

#[derive(serde::Deserialize, Default)]
struct FileConfig {
    gamma: Option<String>,
    #[allow(dead_code)]
    mode: Option<String>,
    q: Option<serde_json::Value>,
}

fn load_config(common: &CommonOpts) -> Result<(QScalar, Option<Vec<f64>>), String> {
    let mut gamma_str = common.gamma.clone();
    let mut q_from_file = None;
    if let Some(path) = &common.config {
        let text = std::fs::read_to_string(path).map_err(|e| format!("config {path}: {e}"))?;
        let fc: FileConfig =
            serde_json::from_str(&text).map_err(|e| format!("config {path}: {e}"))?;
        if let Some(g) = fc.gamma {
            if common.gamma == "1" {
                gamma_str = g;
            }
        }
        match fc.q {
            Some(serde_json::Value::Number(x)) => {
                q_from_file = x.as_f64().map(|v| vec![v]);
            }
            Some(serde_json::Value::String(s)) if s == "symbolic" => {}
            _ => {}
        }
    }
    Ok((parse_rational(&gamma_str)?, q_from_file))
}

fn config_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_CONFIG
}

// -------------------------------------------------------------------------
// verify
// -------------------------------------------------------------------------

fn run_verify(
    common: &CommonOpts,
    beta_scale: f64,
    eps1: Option<String>,
    eps3: Option<String>,
    kappa_plus: bool,
) -> i32 {
    let (gamma, _) = match load_config(common) {
        Ok(v) => v,
        Err(e) => return config_error(&e),
    };
    let overrides = verify::Overrides {
        beta_scale,
        eps1: match eps1.as_deref().map(parse_rational).transpose() {
            Ok(v) => v,
            Err(e) => return config_error(&e),
        },
        eps3: match eps3.as_deref().map(parse_rational).transpose() {
            Ok(v) => v,
            Err(e) => return config_error(&e),
        },
        kappa_plus,
    };
    let outcome = verify::run_all(&gamma, common.tol, &overrides);
    let text = match common.format {
        Format::Json => serde_json::to_string_pretty(&outcome).unwrap() + "\n",
        _ => {
            let mut t = String::new();
            for c in &outcome.checks {
                t.push_str(&format!(
                    "{} {:<38} {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            for n in &outcome.notes {
                t.push_str(&format!("NOTE {n}\n"));
            }
            t.push_str(&format!(
                "{} checks, {} failed\n",
                outcome.checks.len(),
                outcome.checks.iter().filter(|c| !c.passed).count()
            ));
            t
        }
    };
    if let Err(e) = write_out(&common.out, &text) {
        return config_error(&e);
    }
    if let Some(first) = outcome.checks.iter().find(|c| !c.passed) {
        eprintln!("verification failed: {}", first.name);
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    }
}

// -------------------------------------------------------------------------
// spectrum
// -------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn run_spectrum(
    common: &CommonOpts,
    j: &str,
    n: Option<i64>,
    q: Option<&str>,
    symbolic: bool,
    case: &str,
    classical: bool,
) -> i32 {
    let (gamma, q_file) = match load_config(common) {
        Ok(v) => v,
        Err(e) => return config_error(&e),
    };
    let two_j = match parse_two_j(j) {
        Ok(v) => v,
        Err(e) => return config_error(&e),
    };
    let q_values: Vec<f64> = match q {
        Some(spec) => match parse_q_list(spec) {
            Ok(v) => v,
            Err(e) => return config_error(&e),
        },
        None => q_file.unwrap_or_else(|| if symbolic || classical { vec![] } else { vec![0.5] }),
    };
    let ns: Vec<i64> = match n {
        Some(n) => {
            if !Weight::is_valid(two_j, n) {
                return config_error(&format!(
                    "invalid weight: |N| <= 2J and N = 2J (mod 2) required, got J={j}, N={n}"
                ));
            }
            vec![n]
        }
        None => Weight::string(two_j).iter().map(|w| w.n).collect(),
    };
    let case_filter = match case {
        "auto" => None,
        "generic" => Some(CaseTag::Generic),
        "highest" => Some(CaseTag::Highest),
        "lowest" => Some(CaseTag::Lowest),
        other => return config_error(&format!("unknown case {other}")),
    };

    let mut reports: Vec<SpectrumReport> = Vec::new();
    if classical {
        for &nv in &ns {
            let recs = classical_spectrum(two_j, nv).expect("validated weight");
            let case_name =
                recs.first().map(|r| r.case.name().to_string()).unwrap_or_default();
            let rows = recs
                .iter()
                .filter(|r| case_filter.map_or(true, |cf| r.case == cf || r.case == CaseTag::Diagonal))
                .map(|r| RecordRow {
                    case: r.case.name().to_string(),
                    family: r.family.to_string(),
                    lambda_closed: r.description.to_string(),
                    lambda_closed_num: Some([r.lambda.re, r.lambda.im]),
                    lambda_numeric: None,
                    abs_err: None,
                    eigvec_ratios: None,
                    provenance: "closed-form".to_string(),
                })
                .collect();
            reports.push(SpectrumReport {
                q: None,
                resolved: None,
                j: Weight::new(two_j, nv).unwrap().j_string(),
                n: nv,
                case: case_name,
                records: rows,
            });
        }
    } else {
        let calc = Calculus::new();
        let hodge = match if common.alpha_one {
            Hodge::with_alpha(&calc, &QScalar::one())
        } else {
            Hodge::new(&calc, &gamma)
        } {
            Ok(h) => h,
            Err(e) => return config_error(&format!("{e}")),
        };
        let reducer = match Reducer::new(&hodge) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFY_FAILED;
            }
        };
        for &nv in &ns {
            let closed = spectrum_closed_form(&reducer, two_j, nv).expect("validated weight");
            let case_name = reducer
                .auto(two_j, nv)
                .map(|(c, _)| c.name().to_string())
                .unwrap_or_default();
            if symbolic || q_values.is_empty() {
                let rows = closed
                    .iter()
                    .filter(|r| {
                        case_filter.map_or(true, |cf| r.case == cf || r.case == CaseTag::Diagonal)
                    })
                    .map(|r| RecordRow {
                        case: r.case.name().to_string(),
                        family: r.family.to_string(),
                        lambda_closed: r.kind.label(hodge.r2()),
                        lambda_closed_num: None,
                        lambda_numeric: None,
                        abs_err: None,
                        eigvec_ratios: None,
                        provenance: "closed-form".to_string(),
                    })
                    .collect();
                reports.push(SpectrumReport {
                    q: None,
                    resolved: Some(qhodge::dirac::ResolvedParams::from_hodge(&hodge)),
                    j: Weight::new(two_j, nv).unwrap().j_string(),
                    n: nv,
                    case: case_name.clone(),
                    records: rows,
                });
            }
            for &q0 in &q_values {
                let recs = match spectrum_numeric(&reducer, two_j, nv, q0) {
                    Ok(r) => r,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_VERIFY_FAILED;
                    }
                };
                let mut rows: Vec<RecordRow> = recs
                    .iter()
                    .filter(|r| {
                        case_filter.map_or(true, |cf| r.case == cf || r.case == CaseTag::Diagonal)
                    })
                    .map(|r| RecordRow {
                        case: r.case.name().to_string(),
                        family: r.family.to_string(),
                        lambda_closed: r.lambda_closed_label.clone(),
                        lambda_closed_num: Some([r.lambda_closed.re, r.lambda_closed.im]),
                        lambda_numeric: Some([r.lambda_numeric.re, r.lambda_numeric.im]),
                        abs_err: Some(r.abs_err),
                        eigvec_ratios: Some(
                            r.eigvec.iter().map(|c| [c.re, c.im]).collect(),
                        ),
                        provenance: "closed+numeric".to_string(),
                    })
                    .collect();
                // the diagonal families are exact closed forms; list them too
                for r in closed.iter().filter(|r| r.case == CaseTag::Diagonal) {
                    let v = r.kind.eval(q0, hodge.r2()).expect("diagonal eigenvalue");
                    rows.push(RecordRow {
                        case: r.case.name().to_string(),
                        family: r.family.to_string(),
                        lambda_closed: r.kind.label(hodge.r2()),
                        lambda_closed_num: Some([v.re, v.im]),
                        lambda_numeric: None,
                        abs_err: None,
                        eigvec_ratios: None,
                        provenance: "closed-form".to_string(),
                    });
                }
                reports.push(SpectrumReport {
                    q: Some(q0),
                    resolved: Some(qhodge::dirac::ResolvedParams::from_hodge(&hodge)),
                    j: Weight::new(two_j, nv).unwrap().j_string(),
                    n: nv,
                    case: case_name.clone(),
                    records: rows,
                });
            }
        }
    }

    let text = output::render_spectrum(&reports, common.format);
    if let Err(e) = write_out(&common.out, &text) {
        return config_error(&e);
    }
    EXIT_OK
}

// -------------------------------------------------------------------------
// limit
// -------------------------------------------------------------------------

fn run_limit(common: &CommonOpts, j: &str, n: Option<i64>, q_grid: &str) -> i32 {
    let (gamma, _) = match load_config(common) {
        Ok(v) => v,
        Err(e) => return config_error(&e),
    };
    let _ = gamma;
    let two_j = match parse_two_j(j) {
        Ok(v) => v,
        Err(e) => return config_error(&e),
    };
    let grid = match parse_grid(q_grid) {
        Ok(g) => g,
        Err(e) => return config_error(&e),
    };
    let ns: Vec<i64> = match n {
        Some(n) => {
            if !Weight::is_valid(two_j, n) {
                return config_error(&format!("invalid weight J={j}, N={n}"));
            }
            vec![n]
        }
        None => Weight::string(two_j).iter().map(|w| w.n).collect(),
    };
    let calc = Calculus::new();
    // limits are stated against alpha = 1
    let hodge = Hodge::with_alpha(&calc, &QScalar::one()).expect("alpha = 1");
    let reducer = match Reducer::new(&hodge) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_VERIFY_FAILED;
        }
    };
    let mut reports = Vec::new();
    for &nv in &ns {
        match classical_limit_sweep(&reducer, two_j, nv, &grid) {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFY_FAILED;
            }
        }
    }
    let text = output::render_limit(&reports, common.format);
    if let Err(e) = write_out(&common.out, &text) {
        return config_error(&e);
    }
    EXIT_OK
}
