//! Output rendering: JSON, CSV and fixed-width tables, all with
//! deterministic ordering so identical configurations produce identical
//! bytes.

use clap::ValueEnum;
use qhodge::dirac::{LimitReport, SpectrumReport};
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Long exact expressions are truncated for tables with a stable hash
/// suffix; JSON always carries the full string.
pub fn truncate_expr(s: &str) -> String {
    if s.len() <= 120 {
        return s.to_string();
    }
    let mut h = DefaultHasher::new();
    s.hash(&mut h);
    format!("{}...#{:08x}", &s[..100], h.finish() as u32)
}

pub fn write_out(out: &Option<String>, text: &str) -> Result<(), String> {
    match out.as_deref() {
        None | Some("-") => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let resolved = if std::path::Path::new(path).is_absolute() {
                std::path::PathBuf::from(path)
            } else if let Ok(dir) = std::env::var("QHODGE_OUT_DIR") {
                std::path::Path::new(&dir).join(path)
            } else {
                std::path::PathBuf::from(path)
            };
            std::fs::write(&resolved, text)
                .map_err(|e| format!("writing {}: {e}", resolved.display()))
        }
    }
}

fn fmt_c(v: &Option<[f64; 2]>) -> String {
    match v {
        Some([re, im]) => format!("{re:+.12e}{im:+.12e}i"),
        None => String::new(),
    }
}

pub fn render_spectrum(reports: &[SpectrumReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).unwrap() + "\n",
        Format::Csv => {
            let mut t = String::from(
                "q,J,N,case,family,lambda_closed,closed_re,closed_im,numeric_re,numeric_im,abs_err\n",
            );
            for rep in reports {
                for r in &rep.records {
                    let (cre, cim) = r
                        .lambda_closed_num
                        .map(|[a, b]| (a.to_string(), b.to_string()))
                        .unwrap_or_default();
                    let (nre, nim) = r
                        .lambda_numeric
                        .map(|[a, b]| (a.to_string(), b.to_string()))
                        .unwrap_or_default();
                    t.push_str(&format!(
                        "{},{},{},{},{},\"{}\",{},{},{},{},{}\n",
                        rep.q.map(|q| q.to_string()).unwrap_or_default(),
                        rep.j,
                        rep.n,
                        r.case,
                        r.family,
                        r.lambda_closed.replace('"', "'"),
                        cre,
                        cim,
                        nre,
                        nim,
                        r.abs_err.map(|e| format!("{e:e}")).unwrap_or_default(),
                    ));
                }
            }
            t
        }
        Format::Table => {
            let mut t = String::new();
            for rep in reports {
                t.push_str(&format!(
                    "J = {}, N = {}, case = {}{}\n",
                    rep.j,
                    rep.n,
                    rep.case,
                    rep.q.map(|q| format!(", q = {q}")).unwrap_or_default()
                ));
                for r in &rep.records {
                    t.push_str(&format!(
                        "  {:<16} {:<9} closed = {}\n",
                        r.family,
                        r.case,
                        truncate_expr(&r.lambda_closed)
                    ));
                    if r.lambda_closed_num.is_some() || r.lambda_numeric.is_some() {
                        t.push_str(&format!(
                            "  {:<16} {:<9} value  = {}  numeric = {}  |err| = {}\n",
                            "",
                            "",
                            fmt_c(&r.lambda_closed_num),
                            fmt_c(&r.lambda_numeric),
                            r.abs_err.map(|e| format!("{e:.3e}")).unwrap_or_default()
                        ));
                    }
                }
                t.push('\n');
            }
            t
        }
    }
}

pub fn render_limit(reports: &[LimitReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).unwrap() + "\n",
        Format::Csv => {
            let mut t = String::from("J,N,family,case,classical_re,classical_im,q,abs_err,fitted_order\n");
            for rep in reports {
                for row in &rep.rows {
                    for (q, e) in row.q_grid.iter().zip(&row.abs_err) {
                        t.push_str(&format!(
                            "{},{},{},{},{},{},{},{:e},{:.4}\n",
                            rep.j,
                            rep.n,
                            row.family,
                            row.case,
                            row.lambda_classical[0],
                            row.lambda_classical[1],
                            q,
                            e,
                            row.fitted_order
                        ));
                    }
                }
            }
            t
        }
        Format::Table => {
            let mut t = String::new();
            for rep in reports {
                t.push_str(&format!("J = {}, N = {}\n", rep.j, rep.n));
                for row in &rep.rows {
                    t.push_str(&format!(
                        "  {:<16} {:<9} classical = {:+.6}{:+.6}i  order = {:.3}  monotone = {}\n",
                        row.family,
                        row.case,
                        row.lambda_classical[0],
                        row.lambda_classical[1],
                        row.fitted_order,
                        row.monotone
                    ));
                    let pairs: Vec<String> = row
                        .q_grid
                        .iter()
                        .zip(&row.abs_err)
                        .map(|(q, e)| format!("{q:.4}:{e:.2e}"))
                        .collect();
                    t.push_str(&format!("    err {}\n", pairs.join(" ")));
                }
                t.push('\n');
            }
            t
        }
    }
}
