//! Checked-in verdict patterns.
//!
//! An expectation file is a report without witnesses. A run matches it when
//! every verdict it records agrees with the run, and every result the file
//! does not mention passes. Known failures therefore stay green while new
//! failures and unexpected passes are flagged.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GridPoint, IdentityId, IdentityReport, Verdict};
use crate::error::{Error, Result};

#[derive(Serialize)]
struct ExpectedResultOut<'a> {
    point: &'a GridPoint,
    check: &'a str,
    verdict: Verdict,
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("expectations serialize")
}

fn lines<T>(items: &[T], render: impl Fn(&T) -> String) -> String {
    if items.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = items.iter().map(render).collect();
    format!("[\n      {}\n    ]", body.join(",\n      "))
}

/// The expectation document for `reports`, one grid point or result per
/// line so that diffs stay readable.
pub fn expectation_json(reports: &[IdentityReport]) -> String {
    let mut s = String::from("[\n");
    for (i, r) in reports.iter().enumerate() {
        let results = lines(&r.results, |res| {
            compact(&ExpectedResultOut {
                point: &res.point,
                check: &res.check,
                verdict: res.verdict,
            })
        });
        s.push_str("  {\n");
        s.push_str(&format!("    \"identity\": {},\n", compact(&r.identity)));
        s.push_str(&format!("    \"grid\": {},\n", lines(&r.grid, compact)));
        s.push_str(&format!("    \"results\": {results},\n"));
        s.push_str(&format!("    \"summary\": {}\n", compact(&r.summary)));
        s.push_str(if i + 1 < reports.len() { "  },\n" } else { "  }\n" });
    }
    s.push_str("]\n");
    s
}

#[derive(Deserialize)]
struct PointIn {
    n: usize,
    k: usize,
    lambda: String,
    y: Option<String>,
}

#[derive(Deserialize)]
struct ResultIn {
    point: PointIn,
    check: String,
    verdict: String,
}

#[derive(Deserialize)]
struct ReportIn {
    identity: String,
    results: Vec<ResultIn>,
}

type Key = (String, usize, usize, String, Option<String>, String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationMismatch {
    pub identity: IdentityId,
    pub point: GridPoint,
    pub check: String,
    /// `None` when the expectation does not mention the result.
    pub expected: Option<Verdict>,
    pub actual: Verdict,
}

impl fmt::Display for ExpectationMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected = self.expected.map_or("pass (not listed)", Verdict::as_str);
        write!(
            f,
            "{} n={} k={} lambda={}",
            self.identity,
            self.point.n,
            self.point.k,
            self.point.lambda_label()
        )?;
        if let Some(y) = self.point.y_label() {
            write!(f, " y={y}")?;
        }
        write!(f, " [{}]: expected {}, got {}", self.check, expected, self.actual.as_str())
    }
}

/// Lists every result of `reports` that disagrees with `expectation`.
pub fn compare_expectation(
    reports: &[IdentityReport],
    expectation: &str,
) -> Result<Vec<ExpectationMismatch>> {
    let parsed: Vec<ReportIn> =
        serde_json::from_str(expectation).map_err(|e| Error::Parse(format!("expectation file: {e}")))?;
    let mut expected: HashMap<Key, Verdict> = HashMap::new();
    for rep in parsed {
        for res in rep.results {
            let verdict = match res.verdict.as_str() {
                "pass" => Verdict::Pass,
                "fail" => Verdict::Fail,
                other => return Err(Error::Parse(format!("unknown verdict {other:?}"))),
            };
            let key = (
                rep.identity.clone(),
                res.point.n,
                res.point.k,
                res.point.lambda,
                res.point.y,
                res.check,
            );
            expected.insert(key, verdict);
        }
    }
    let mut out = Vec::new();
    for r in reports {
        for res in &r.results {
            let key = (
                r.identity.name().to_string(),
                res.point.n,
                res.point.k,
                res.point.lambda_label(),
                res.point.y_label(),
                res.check.clone(),
            );
            let want = expected.get(&key).copied();
            if want.unwrap_or(Verdict::Pass) != res.verdict {
                out.push(ExpectationMismatch {
                    identity: r.identity,
                    point: res.point.clone(),
                    check: res.check.clone(),
                    expected: want,
                    actual: res.verdict,
                });
            }
        }
    }
    Ok(out)
}
