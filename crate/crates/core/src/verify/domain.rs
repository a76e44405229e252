//! Describes the set of passing grid points in a few words.

use std::collections::BTreeMap;

use super::{CheckResult, CheckSummary, IdentityId, Summary, Verdict};
use crate::mode::LambdaMode;

type Key = (LambdaMode, usize, usize);
type Predicate = Box<dyn Fn(&Key) -> bool>;

/// A check passes at `(mode, k, n)` when it passes at every `y` sample.
fn aggregate(results: &[&CheckResult]) -> BTreeMap<Key, bool> {
    let mut out = BTreeMap::new();
    for r in results {
        let key = (r.point.mode.clone(), r.point.k, r.point.n);
        let entry = out.entry(key).or_insert(true);
        *entry &= r.verdict == Verdict::Pass;
    }
    out
}

fn describe(id: IdentityId, points: &BTreeMap<Key, bool>) -> String {
    let passing = points.values().filter(|&&v| v).count();
    if passing == points.len() {
        return "all tested points".into();
    }
    if passing == 0 {
        return "no tested point".into();
    }
    let idx = id.index_name();
    let matches = |pred: &dyn Fn(&Key) -> bool| points.iter().all(|(key, &pass)| pred(key) == pass);

    let ns: std::collections::BTreeSet<usize> = points.keys().map(|k| k.2).collect();
    let ks: std::collections::BTreeSet<usize> = points.keys().map(|k| k.1).collect();
    let mut candidates: Vec<(String, Predicate)> = Vec::new();
    for &t in &ns {
        // threshold just above a failing index, the tightest claim the data allows
        candidates.push((format!("{idx} >= {}", t + 1), Box::new(move |key: &Key| key.2 > t)));
        candidates.push((format!("{idx} <= {t}"), Box::new(move |key: &Key| key.2 <= t)));
    }
    candidates.push(("k even".into(), Box::new(|key: &Key| key.1.is_multiple_of(2))));
    candidates.push(("k odd".into(), Box::new(|key: &Key| key.1 % 2 == 1)));
    for &t in &ks {
        candidates.push((format!("k = {t}"), Box::new(move |key: &Key| key.1 == t)));
        candidates.push((format!("k <= {t}"), Box::new(move |key: &Key| key.1 <= t)));
        candidates.push((format!("k >= {t}"), Box::new(move |key: &Key| key.1 >= t)));
    }
    candidates.push(("lambda = 1".into(), Box::new(|key: &Key| key.0.is_classical())));
    candidates.push(("lambda != 1".into(), Box::new(|key: &Key| !key.0.is_classical())));
    candidates.push((format!("{idx} < k"), Box::new(|key: &Key| key.2 < key.1)));
    candidates.push((format!("{idx} <= k"), Box::new(|key: &Key| key.2 <= key.1)));
    candidates.push(("k = 0 or lambda = 1".into(), Box::new(|key: &Key| key.1 == 0 || key.0.is_classical())));
    candidates.push((
        format!("k = 0 or {idx} < k"),
        Box::new(|key: &Key| key.1 == 0 || key.2 < key.1),
    ));
    candidates.push((
        format!("k = 0 or {idx} <= k"),
        Box::new(|key: &Key| key.1 == 0 || key.2 <= key.1),
    ));
    candidates.push((
        format!("k = 0 or (lambda = 1 and {idx} < k)"),
        Box::new(|key: &Key| key.1 == 0 || (key.0.is_classical() && key.2 < key.1)),
    ));
    for (label, pred) in &candidates {
        if matches(pred.as_ref()) {
            return label.clone();
        }
    }
    enumerate(idx, points)
}

type ByMode<'a> = BTreeMap<&'a LambdaMode, Vec<(usize, bool)>>;

/// Lists the passing set grouped by order and λ, for patterns no single
/// predicate captures.
fn enumerate(idx: &str, points: &BTreeMap<Key, bool>) -> String {
    let mut by_k: BTreeMap<usize, ByMode> = BTreeMap::new();
    for ((mode, k, n), &pass) in points {
        by_k.entry(*k).or_default().entry(mode).or_default().push((*n, pass));
    }
    let mut clauses = Vec::new();
    for (k, modes) in &by_k {
        if modes.values().flatten().all(|&(_, pass)| pass) {
            clauses.push(format!("k = {k}"));
            continue;
        }
        let mut patterns: Vec<&Vec<(usize, bool)>> = modes.values().collect();
        patterns.dedup();
        let shared = patterns.len() == 1;
        for (mode, ns) in modes {
            let head = if shared {
                format!("k = {k}")
            } else {
                format!("lambda = {}, k = {k}", mode.label())
            };
            if let Some(clause) = describe_ns(idx, head, ns) {
                clauses.push(clause);
            }
            if shared {
                break;
            }
        }
    }
    clauses.join("; ")
}

fn describe_ns(idx: &str, head: String, ns: &[(usize, bool)]) -> Option<String> {
    let passing: Vec<usize> = ns.iter().filter(|(_, p)| *p).map(|(n, _)| *n).collect();
    let &first = passing.first()?;
    let suffix = ns.iter().all(|&(n, pass)| pass == (n >= first));
    Some(if passing.len() == ns.len() {
        head
    } else if passing.len() == 1 {
        format!("{head}, {idx} = {first}")
    } else if suffix {
        format!("{head}, {idx} >= {first}")
    } else {
        let list: Vec<String> = passing.iter().map(usize::to_string).collect();
        format!("{head}, {idx} in {{{}}}", list.join(", "))
    })
}

pub(super) fn summarize(id: IdentityId, results: &[CheckResult]) -> Summary {
    let mut names: Vec<&str> = Vec::new();
    for r in results {
        if !names.contains(&r.check.as_str()) {
            names.push(&r.check);
        }
    }
    let checks: Vec<CheckSummary> = names
        .iter()
        .map(|&name| {
            let rows: Vec<&CheckResult> = results.iter().filter(|r| r.check == name).collect();
            let pass = rows.iter().filter(|r| r.verdict == Verdict::Pass).count();
            CheckSummary {
                check: name.to_string(),
                pass,
                fail: rows.len() - pass,
                validity_domain: describe(id, &aggregate(&rows)),
            }
        })
        .collect();
    Summary {
        pass: checks.iter().map(|c| c.pass).sum(),
        fail: checks.iter().map(|c| c.fail).sum(),
        validity_domain: checks
            .first()
            .map(|c| c.validity_domain.clone())
            .unwrap_or_default(),
        checks,
    }
}
