use std::fmt::Write as _;
use std::str::FromStr;

use super::{GridPoint, IdentityReport, Verdict};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReportFormat {
    Json,
    Text,
    Latex,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            "latex" => Ok(ReportFormat::Latex),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Serializes reports. JSON keeps every field; the other formats are
/// summaries. Output depends only on the reports.
pub fn render_report(reports: &[IdentityReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => text(reports),
        ReportFormat::Latex => latex(reports),
        ReportFormat::Csv => csv(reports),
    }
}

/// Machine strings spell λ as `L`; nothing else in them uses that letter.
fn human(s: &str) -> String {
    s.replace('L', "λ")
}

fn point_label(p: &GridPoint, index_name: &str) -> String {
    let mut s = format!("{index_name}={} k={} λ={}", p.n, p.k, p.lambda_label());
    if let Some(y) = p.y_label() {
        let _ = write!(s, " y={y}");
    }
    s
}

fn text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let id = r.identity;
        let _ = writeln!(out, "{}: {}", id, human(id.title()));
        let _ = writeln!(
            out,
            "  {} pass, {} fail; holds on: {}",
            r.summary.pass, r.summary.fail, r.summary.validity_domain
        );
        for c in &r.summary.checks {
            let _ = writeln!(
                out,
                "  check {:<22} {:>5} pass {:>5} fail   holds on: {}",
                c.check, c.pass, c.fail, c.validity_domain
            );
        }
        for res in r.results.iter().filter(|res| res.verdict == Verdict::Fail) {
            let _ = write!(
                out,
                "  FAIL {} [{}]: {}",
                point_label(&res.point, id.index_name()),
                res.check,
                human(res.witness.as_deref().unwrap_or(""))
            );
            match (&res.lhs, &res.rhs) {
                (Some(l), Some(r)) if !l.is_empty() => {
                    let _ = writeln!(out, "   (lhs {}, rhs {})", human(l), human(r));
                }
                _ => out.push('\n'),
            }
        }
        out.push('\n');
    }
    out
}

fn tex_escape(s: &str) -> String {
    s.replace('_', "\\_")
}

fn latex(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let checks: Vec<&str> = r.summary.checks.iter().map(|c| c.check.as_str()).collect();
        let _ = writeln!(out, "\\subsection*{{{}}}", tex_escape(r.identity.name()));
        let _ = writeln!(
            out,
            "{} pass, {} fail; holds on: {}.\n",
            r.summary.pass,
            r.summary.fail,
            tex_escape(&r.summary.validity_domain)
        );
        let _ = writeln!(out, "\\begin{{tabular}}{{rrll{}}}", "c".repeat(checks.len()));
        out.push_str("\\hline\n");
        let _ = write!(out, "${}$ & $k$ & $\\lambda$ & $y$", r.identity.index_name());
        for c in &checks {
            let _ = write!(out, " & {}", tex_escape(c));
        }
        out.push_str(" \\\\\n\\hline\n");
        for p in &r.grid {
            let _ = write!(
                out,
                "{} & {} & {} & {}",
                p.n,
                p.k,
                p.lambda_label(),
                p.y_label().unwrap_or_else(|| "--".into())
            );
            for c in &checks {
                let cell = r
                    .results
                    .iter()
                    .find(|res| &res.point == p && res.check == *c)
                    .map_or("--", |res| res.verdict.as_str());
                let _ = write!(out, " & {cell}");
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}\n\n");
    }
    out
}

fn csv(reports: &[IdentityReport]) -> String {
    let mut out = String::from("identity,n,k,lambda,y,verdict,check\n");
    for r in reports {
        for res in &r.results {
            let p = &res.point;
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.identity,
                p.n,
                p.k,
                p.lambda_label(),
                p.y_label().unwrap_or_default(),
                res.verdict.as_str(),
                res.check
            );
        }
    }
    out
}
