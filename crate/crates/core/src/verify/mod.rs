//! A catalog of identities about the polynomial families, each checked by
//! exact equality over a parameter grid.
//!
//! Every identity is compiled to one or more named checks. A check compares
//! two sides exactly and, on failure, keeps the rendered difference as a
//! witness. Identities with a second variable `y` are checked at `deg + 1`
//! or more distinct rational samples, which decides polynomial identity in
//! `y`.

mod checks;
mod intpoly;
mod domain;
mod expect;
mod render;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::render_rational;
use crate::mode::LambdaMode;

pub use expect::{compare_expectation, expectation_json, ExpectationMismatch};
pub use render::{render_report, ReportFormat};

/// Verdict pattern of the default suite, including its known failures.
pub const DEFAULT_EXPECTATION: &str = include_str!("../../expectations/default_suite.json");
/// Verdict pattern of the default suite in numeric modes with indices up to 24.
pub const NUMERIC_N24_EXPECTATION: &str = include_str!("../../expectations/numeric_n24.json");

/// Largest `n` accepted for symbolic grid points.
pub const MAX_N_SYMBOLIC: usize = 10;
/// Largest `n` accepted for numeric grid points.
pub const MAX_N_NUMERIC: usize = 24;
/// Largest order `k` accepted anywhere.
pub const MAX_K: usize = 5;

macro_rules! identity_ids {
    ($($variant:ident => $name:literal, $title:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId { $($variant,)* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(IdentityId::$variant => $name,)* }
            }

            /// One-line description of the identity.
            pub fn title(self) -> &'static str {
                match self { $(IdentityId::$variant => $title,)* }
            }
        }

        impl FromStr for IdentityId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($name => Ok(IdentityId::$variant),)*
                    other => Err(Error::UnknownIdentity(other.to_string())),
                }
            }
        }
    };
}

identity_ids! {
    Deriv => "ID_DERIV", "d/dx B_n^(k)(x|L) = n B_{n-1}^(k)(x|L)";
    Diff => "ID_DIFF", "(L B_{n+1}^(k)(x+1|L) - B_{n+1}^(k)(x|L))/(n+1) = B_n^(k-1)(x|L)";
    LowerOrder => "ID_LOWER_ORDER", "Λ B_n^(k)(x|L) = n B_{n-1}^(k-1)(x|L)";
    ZeroOrder => "ID_ZERO_ORDER", "E_n^(0)(x|L) = B_n^(0)(x|L) = x^n";
    LemmaClosedForm => "ID_LEMMA_CLOSED_FORM", "(Λ^k f)(0) = sum_l (-1)^l C(k,l) L^l f(l)";
    Thm1 => "ID_THM1", "q(x) = sum_{j=k}^{n} b_j B_j^(k)(x|L), q = x^n";
    CorXn => "ID_COR_XN", "x^n expanded in B_j^(k)(x|L)";
    Thm2 => "ID_THM2", "E_n^(k)(x) expanded in B_j^(k)(x|L)";
    Thm3 => "ID_THM3", "B_n^(k)(x) expanded in B_j^(k)(x|L)";
    Hansen => "ID_HANSEN", "sum C(m,i) B_i(x) B_{m-i}(y) = (1-m) B_m(x+y) + (x+y-1) m B_{m-1}(x+y)";
    EulerRamanujan => "ID_EULER_RAMANUJAN", "B_m = -sum_{i=2}^{m-2} C(m,i) B_i B_{m-i} / (m+1)";
    Thm4 => "ID_THM4", "Bernoulli convolution expanded in B_j^(k)(x|L)";
    Dilcher => "ID_DILCHER", "sum C(n,i) E_i(x) E_{n-i}(y) = 2(1-x-y) E_n(x+y) + 2 E_{n+1}(x+y)";
    Thm5 => "ID_THM5", "Euler convolution expanded in B_j^(k)(x|L)";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl IdentityId {
    /// Whether grid points carry a `y` sample.
    pub fn is_bivariate(self) -> bool {
        matches!(
            self,
            IdentityId::Hansen | IdentityId::Dilcher | IdentityId::Thm4 | IdentityId::Thm5
        )
    }

    /// Name of the first grid coordinate in summaries.
    pub fn index_name(self) -> &'static str {
        match self {
            IdentityId::Hansen | IdentityId::EulerRamanujan => "m",
            IdentityId::LemmaClosedForm | IdentityId::Thm1 => "deg",
            _ => "n",
        }
    }

    /// Identities about the classical polynomials only; mode overrides do
    /// not apply to them.
    pub fn is_classical_only(self) -> bool {
        matches!(
            self,
            IdentityId::Hansen | IdentityId::Dilcher | IdentityId::EulerRamanujan
        )
    }
}

/// One parameter point. `n` is the degree or index, `k` the order, `y` the
/// sample of the second variable for bivariate identities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridPoint {
    pub n: usize,
    pub k: usize,
    pub mode: LambdaMode,
    pub y: Option<BigRational>,
}

impl GridPoint {
    pub fn new(n: usize, k: usize, mode: LambdaMode) -> Self {
        GridPoint { n, k, mode, y: None }
    }

    pub fn with_y(mut self, y: BigRational) -> Self {
        self.y = Some(y);
        self
    }

    pub fn lambda_label(&self) -> String {
        self.mode.label()
    }

    pub fn y_label(&self) -> Option<String> {
        self.y.as_ref().map(render_rational)
    }
}

/// Sorted by mode, then order, then index, then `y`.
impl Ord for GridPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mode
            .cmp(&other.mode)
            .then(self.k.cmp(&other.k))
            .then(self.n.cmp(&other.n))
            .then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for GridPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for GridPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GridPoint", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("lambda", &self.lambda_label())?;
        st.serialize_field("y", &self.y_label())?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Outcome of one named check at one grid point. Sides and witness are in
/// machine notation (`L` for λ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub point: GridPoint,
    pub check: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub pass: usize,
    pub fail: usize,
    pub validity_domain: String,
}

/// Totals over all results; the top-level validity domain is the one of the
/// first check, which is the identity as stated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub validity_domain: String,
    pub checks: Vec<CheckSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub grid: Vec<GridPoint>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl IdentityReport {
    /// Results of one check, in grid order.
    pub fn check_results<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CheckResult> + 'a {
        self.results.iter().filter(move |r| r.check == check)
    }

    pub fn check_summary(&self, check: &str) -> Option<&CheckSummary> {
        self.summary.checks.iter().find(|c| c.check == check)
    }
}

fn validate_point(p: &GridPoint) -> Result<()> {
    let n_cap = if p.mode.is_symbolic() { MAX_N_SYMBOLIC } else { MAX_N_NUMERIC };
    if p.n > n_cap {
        return Err(Error::OutOfBounds(format!(
            "n = {} exceeds {} for lambda = {}",
            p.n,
            n_cap,
            p.mode.label()
        )));
    }
    if p.k > MAX_K {
        return Err(Error::OutOfBounds(format!("k = {} exceeds {}", p.k, MAX_K)));
    }
    Ok(())
}

/// Runs every check of `id` on `grid`. Points are evaluated in parallel; the
/// report is sorted by grid point, then check order, independent of timing.
pub fn verify_identity(id: IdentityId, grid: &[GridPoint]) -> Result<IdentityReport> {
    if grid.is_empty() {
        return Err(Error::InvalidConfig(format!("empty grid for {id}")));
    }
    grid.iter().try_for_each(validate_point)?;
    if id.is_bivariate() && grid.iter().any(|p| p.y.is_none()) {
        return Err(Error::InvalidConfig(format!("{id} needs a y sample at every point")));
    }
    let mut points = grid.to_vec();
    points.sort();
    points.dedup();
    let per_point: Vec<Vec<CheckResult>> = points
        .par_iter()
        .map(|p| checks::check_point(id, p))
        .collect::<Result<_>>()?;
    let results: Vec<CheckResult> = per_point.into_iter().flatten().collect();
    let summary = domain::summarize(id, &results);
    Ok(IdentityReport {
        identity: id,
        grid: points,
        results,
        summary,
    })
}

/// Which identities to run and how far to push the default grids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    /// `None` runs the whole catalog; an empty list is rejected.
    pub ids: Option<Vec<IdentityId>>,
    /// Replaces the upper bound of the index (`n`, `m` or degree).
    pub max_n: Option<usize>,
    /// Replaces the upper bound of the order `k`.
    pub max_k: Option<usize>,
    /// Replaces the λ values, except for identities about classical
    /// polynomials only.
    pub modes: Option<Vec<LambdaMode>>,
}

fn standard_modes() -> Vec<LambdaMode> {
    vec![
        LambdaMode::Symbolic,
        LambdaMode::classical(),
        LambdaMode::numeric(2, 1),
        LambdaMode::numeric(-2, 1),
        LambdaMode::numeric(1, 3),
    ]
}

fn y_samples(count: usize) -> Vec<BigRational> {
    (1..=count as i64)
        .map(|i| BigRational::new((2 * i - 1).into(), 3.into()))
        .collect()
}

/// The grid `run_suite` uses for `id` under `config`.
pub fn default_grid(id: IdentityId, config: &SuiteConfig) -> Vec<GridPoint> {
    use IdentityId::*;
    let (n_lo, n_hi, k_lo, k_hi, modes) = match id {
        Deriv => (1, 10, 0, 4, standard_modes()),
        Diff => (0, 10, 1, 4, standard_modes()),
        LowerOrder => (1, 10, 1, 4, standard_modes()),
        ZeroOrder => (0, 10, 0, 0, standard_modes()),
        LemmaClosedForm => (0, 5, 0, 5, vec![LambdaMode::Symbolic]),
        Thm1 => (0, 6, 0, 3, standard_modes()),
        CorXn | Thm2 | Thm3 | Thm4 | Thm5 => (
            0,
            8,
            0,
            3,
            vec![LambdaMode::Symbolic, LambdaMode::classical(), LambdaMode::numeric(2, 1)],
        ),
        Hansen | Dilcher => (0, 10, 0, 0, vec![LambdaMode::classical()]),
        EulerRamanujan => (2, 20, 0, 0, vec![LambdaMode::classical()]),
    };
    let n_hi = config.max_n.unwrap_or(n_hi);
    let k_hi = if matches!(id, ZeroOrder | Hansen | Dilcher | EulerRamanujan) {
        k_hi
    } else {
        config.max_k.unwrap_or(k_hi)
    };
    let modes = match &config.modes {
        Some(m) if !id.is_classical_only() => m.clone(),
        _ => modes,
    };
    let mut grid = Vec::new();
    for mode in &modes {
        for k in k_lo..=k_hi {
            for n in n_lo..=n_hi {
                let p = GridPoint::new(n, k, mode.clone());
                if id.is_bivariate() {
                    grid.extend(y_samples(n + 2).into_iter().map(|y| p.clone().with_y(y)));
                } else {
                    grid.push(p);
                }
            }
        }
    }
    grid
}

/// One report per selected identity, in catalog order.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    let mut ids = match &config.ids {
        Some(ids) if ids.is_empty() => {
            return Err(Error::InvalidConfig("empty identity subset".into()));
        }
        Some(ids) => ids.clone(),
        None => IdentityId::ALL.to_vec(),
    };
    ids.sort();
    ids.dedup();
    if config.modes.as_ref().is_some_and(Vec::is_empty) {
        return Err(Error::InvalidConfig("empty lambda list".into()));
    }
    ids.into_iter()
        .map(|id| {
            let grid = default_grid(id, config);
            if grid.is_empty() {
                return Err(Error::InvalidConfig(format!("{id}: bounds leave no grid points")));
            }
            verify_identity(id, &grid)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), *id);
        }
        assert_eq!(IdentityId::ALL.len(), 14);
        assert!("ID_NOPE".parse::<IdentityId>().is_err());
    }

    #[test]
    fn config_errors() {
        let empty = SuiteConfig {
            ids: Some(vec![]),
            ..Default::default()
        };
        assert!(run_suite(&empty).is_err());
        let too_far = SuiteConfig {
            ids: Some(vec![IdentityId::Deriv]),
            max_n: Some(11),
            modes: Some(vec![LambdaMode::Symbolic]),
            ..Default::default()
        };
        assert!(matches!(run_suite(&too_far), Err(Error::OutOfBounds(_))));
        assert!(verify_identity(IdentityId::Deriv, &[]).is_err());
    }

    #[test]
    fn small_examples() {
        let c = LambdaMode::classical();
        let hansen = verify_identity(
            IdentityId::Hansen,
            &y_samples(3)
                .into_iter()
                .map(|y| GridPoint::new(1, 0, c.clone()).with_y(y))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(hansen.summary.fail, 0);

        let dilcher = verify_identity(
            IdentityId::Dilcher,
            &[GridPoint::new(0, 0, c.clone()).with_y(BigRational::new(1.into(), 3.into()))],
        )
        .unwrap();
        assert_eq!(dilcher.summary.fail, 0);

        let er = verify_identity(
            IdentityId::EulerRamanujan,
            &[GridPoint::new(2, 0, c.clone()), GridPoint::new(4, 0, c.clone())],
        )
        .unwrap();
        assert_eq!(er.results[0].verdict, Verdict::Fail);
        assert_eq!(er.results[0].witness.as_deref(), Some("1/6"));
        assert_eq!(er.results[1].verdict, Verdict::Pass);
        assert_eq!(er.summary.validity_domain, "m >= 3");
    }

    #[test]
    fn theorem1_counterexample() {
        let r = verify_identity(IdentityId::Thm1, &[GridPoint::new(1, 1, LambdaMode::Symbolic)]).unwrap();
        let lit = r.check_results("theorem1_literal").next().unwrap();
        assert_eq!(lit.verdict, Verdict::Fail);
        assert_eq!(lit.witness.as_deref(), Some("-L/(L-1) - x"));
        let cor = r.check_results("corrected_conjecture").next().unwrap();
        assert_eq!(cor.verdict, Verdict::Pass);
        assert_eq!(cor.witness, None);
    }

    #[test]
    fn lemma_counterexample() {
        let r = verify_identity(
            IdentityId::LemmaClosedForm,
            &[GridPoint::new(1, 1, LambdaMode::Symbolic)],
        )
        .unwrap();
        let stated = r.check_results("paper_lemma").next().unwrap();
        assert_eq!(stated.verdict, Verdict::Fail);
        assert_eq!(stated.lhs.as_deref(), Some("-L"));
        assert_eq!(stated.rhs.as_deref(), Some("L"));
        assert_eq!(r.check_results("corrected_sign").next().unwrap().verdict, Verdict::Pass);
    }
}
