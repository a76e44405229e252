//! `apostol`: number tables, polynomials, basis expansions and identity
//! reports from the command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use apostol_core::expansion::{
    corrected_coefficients, corrected_upper_coefficients, expand_oracle, theorem1_coefficients,
    BasisExpansion,
};
use apostol_core::field::{parse_rational, render_field, Notation};
use apostol_core::special::{apostol_bernoulli_poly, apostol_euler_poly, numbers, Family};
use apostol_core::verify::{
    compare_expectation, expectation_json, render_report, run_suite, IdentityId, ReportFormat,
    SuiteConfig, DEFAULT_EXPECTATION,
};
use apostol_core::{Error, FieldElement, LambdaMode, XPolynomial};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "apostol",
    version,
    about = "Exact Apostol-Bernoulli and Apostol-Euler computations and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of numbers n = 0..=N.
    Numbers(NumbersArgs),
    /// Print one polynomial.
    Poly(PolyArgs),
    /// Expand a polynomial in the Apostol-Bernoulli basis three ways.
    Expand(ExpandArgs),
    /// Run identity checks and compare with the expected verdicts.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    ApostolBernoulli,
    ApostolEuler,
    Bernoulli,
    Euler,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::ApostolBernoulli => Family::ApostolBernoulli,
            FamilyArg::ApostolEuler => Family::ApostolEuler,
            FamilyArg::Bernoulli => Family::Bernoulli,
            FamilyArg::Euler => Family::Euler,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Latex,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Text => ReportFormat::Text,
            FormatArg::Latex => ReportFormat::Latex,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Spell lambda as L in text output too.
    #[arg(long)]
    ascii: bool,
}

#[derive(Args)]
struct NumbersArgs {
    /// Number family.
    #[arg(long, value_enum, default_value = "apostol-bernoulli")]
    family: FamilyArg,
    /// Order of the family.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Largest index.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// `symbolic`, or a rational such as `1`, `-2`, `1/3`. Ignored by the
    /// classical families.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PolyArgs {
    /// Polynomial family; `bernoulli` and `euler` mean lambda = 1.
    #[arg(long, value_enum, default_value = "apostol-bernoulli")]
    family: FamilyArg,
    /// Order of the family.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Index of the polynomial.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// `symbolic`, or a rational such as `1`, `-2`, `1/3`.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ExpandArgs {
    /// Rational coefficients of q(x), constant term first, e.g. `0,1` for x.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Order of the basis.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// `symbolic`, or a rational such as `1`, `-2`, `1/3`.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated identity ids, e.g. `ID_HANSEN,ID_THM1`. Default: all.
    #[arg(long, value_delimiter = ',')]
    ids: Option<Vec<String>>,
    /// Upper bound of the index n (m for the convolution identities).
    #[arg(long, visible_alias = "max-m")]
    max_n: Option<usize>,
    /// Upper bound of the order k.
    #[arg(long)]
    max_k: Option<usize>,
    /// Comma-separated lambda values replacing the default ones.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Option<Vec<String>>,
    /// Expectation file to compare against instead of the built-in one.
    #[arg(long, value_name = "PATH", conflicts_with = "no_expect")]
    expect: Option<PathBuf>,
    /// Report only; skip the expectation comparison.
    #[arg(long)]
    no_expect: bool,
    /// Also write the observed verdicts as an expectation file.
    #[arg(long, value_name = "PATH")]
    write_expectation: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

/// Failure modes mapped to exit codes: usage problems exit 2, everything
/// else exits 1.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EulerPole
            | Error::Parse(_)
            | Error::UnknownIdentity(_)
            | Error::OutOfBounds(_)
            | Error::InvalidConfig(_)
            | Error::UnknownFormat(_)
            | Error::PoleAtEvaluation(_)
            | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Internal(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Numbers(a) => cmd_numbers(a),
        Command::Poly(a) => cmd_poly(a),
        Command::Expand(a) => cmd_expand(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: &OutputArgs, doc: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, doc).map_err(|e| io_failure(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(doc.as_bytes())
                .map_err(|e| Failure::Internal(format!("stdout: {e}")))
        }
    }
}

fn parse_mode(s: &str) -> Result<LambdaMode, Failure> {
    s.parse::<LambdaMode>()
        .map_err(|_| Failure::Usage(format!("malformed lambda {s:?}: expected symbolic, p or p/q")))
}

fn notation(out: &OutputArgs) -> Notation {
    match out.format {
        FormatArg::Text if !out.ascii => Notation::Human,
        _ => Notation::Machine,
    }
}

fn json_doc(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Machine notation turned into a LaTeX math fragment.
fn latex_math(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'L' => out.push_str("\\lambda "),
            '*' => out.push_str(" \\cdot "),
            '^' => {
                let mut exp = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                out.push_str(&format!("^{{{exp}}}"));
            }
            _ => out.push(c),
        }
    }
    out
}

fn family_symbol(f: Family) -> char {
    f.letter()
}

fn cmd_numbers(a: NumbersArgs) -> Result<(), Failure> {
    let family = Family::from(a.family);
    let mode = match family {
        Family::Bernoulli | Family::Euler => LambdaMode::classical(),
        _ => parse_mode(&a.lambda)?,
    };
    let table = numbers(family, a.k, a.n, &mode)?;
    let sym = family_symbol(family);
    let note = notation(&a.out);
    let doc = match a.out.format {
        FormatArg::Text => table
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{sym}_{i} = {}\n", render_field(v, note)))
            .collect(),
        FormatArg::Json => json_doc(&json!({
            "family": family.name(),
            "k": a.k,
            "lambda": mode.label(),
            "values": table.values.iter().map(FieldElement::to_machine_string).collect::<Vec<_>>(),
        })),
        FormatArg::Csv => std::iter::once("n,value\n".to_string())
            .chain(
                table
                    .values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| format!("{i},{}\n", v.to_machine_string())),
            )
            .collect(),
        FormatArg::Latex => {
            let mut s = String::from("\\begin{tabular}{rl}\n\\hline\n$n$ & value \\\\\n\\hline\n");
            for (i, v) in table.values.iter().enumerate() {
                s.push_str(&format!("{i} & ${}$ \\\\\n", latex_math(&v.to_machine_string())));
            }
            s.push_str("\\hline\n\\end{tabular}\n");
            s
        }
    };
    emit(&a.out, &doc)
}

fn cmd_poly(a: PolyArgs) -> Result<(), Failure> {
    let family = Family::from(a.family);
    let mode = match family {
        Family::Bernoulli | Family::Euler => LambdaMode::classical(),
        _ => parse_mode(&a.lambda)?,
    };
    let p = match family {
        Family::ApostolBernoulli | Family::Bernoulli => apostol_bernoulli_poly(a.n, a.k, &mode),
        Family::ApostolEuler | Family::Euler => apostol_euler_poly(a.n, a.k, &mode)?,
    };
    let doc = render_poly(&p, family, &a);
    emit(&a.out, &doc)
}

fn render_poly(p: &XPolynomial, family: Family, a: &PolyArgs) -> String {
    let machine = p.render(Notation::Machine);
    match a.out.format {
        FormatArg::Text => format!("{}\n", p.render(notation(&a.out))),
        FormatArg::Json => json_doc(&json!({
            "family": family.name(),
            "n": a.n,
            "k": a.k,
            "lambda": p.mode().label(),
            "polynomial": machine,
            "coefficients": p.coeffs().iter().map(FieldElement::to_machine_string).collect::<Vec<_>>(),
        })),
        FormatArg::Csv => std::iter::once("power,coefficient\n".to_string())
            .chain(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{i},{}\n", c.to_machine_string())),
            )
            .collect(),
        FormatArg::Latex => format!("${}$\n", latex_math(&machine)),
    }
}

fn parse_coeffs(s: &str, mode: &LambdaMode) -> Result<XPolynomial, Failure> {
    let coeffs = s
        .split(',')
        .map(|c| parse_rational(c.trim()).map_err(|_| Failure::Usage(format!("malformed rational {c:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(XPolynomial::from_rationals(&coeffs, mode))
}

fn cmd_expand(a: ExpandArgs) -> Result<(), Failure> {
    let mode = parse_mode(&a.lambda)?;
    let q = parse_coeffs(&a.coeffs, &mode)?;
    let oracle = expand_oracle(&q, a.k, &mode);
    let literal = theorem1_coefficients(&q, a.k, &mode);
    let (corrected, agree_from) = if mode.is_classical() {
        (corrected_upper_coefficients(&q, a.k, &mode), a.k)
    } else {
        (corrected_coefficients(&q, a.k, &mode)?, 0)
    };
    let corrected_name = if mode.is_classical() { "corrected_upper" } else { "corrected_conjecture" };
    let rows: Vec<(&str, &BasisExpansion, bool)> = vec![
        ("oracle", &oracle, true),
        ("theorem1_literal", &literal, literal.agrees_with(&oracle)),
        (corrected_name, &corrected, corrected.agrees_from(&oracle, agree_from)),
    ];
    let note = notation(&a.out);
    let doc = match a.out.format {
        FormatArg::Text => {
            let mut s = format!(
                "q(x) = {}   k = {}   lambda = {}\n",
                q.render(note),
                a.k,
                mode.label()
            );
            for (name, e, agrees) in &rows {
                s.push_str(&format!(
                    "{name}: exact {}, agrees with oracle {}\n",
                    yes_no(e.exact),
                    yes_no(*agrees)
                ));
                if e.coefficients.is_empty() {
                    s.push_str("  (no coefficients)\n");
                }
                for (i, b) in e.coefficients.iter().enumerate() {
                    s.push_str(&format!("  b_{} = {}\n", e.j_lo + i, render_field(b, note)));
                }
            }
            s
        }
        FormatArg::Json => json_doc(&json!({
            "q": q.render(Notation::Machine),
            "k": a.k,
            "lambda": mode.label(),
            "expansions": rows.iter().map(|(name, e, agrees)| json!({
                "method": name,
                "j_lo": e.j_lo,
                "coefficients": e.coefficients.iter().map(FieldElement::to_machine_string).collect::<Vec<_>>(),
                "exact": e.exact,
                "agrees_with_oracle": agrees,
            })).collect::<Vec<_>>(),
        })),
        FormatArg::Csv => {
            let mut s = String::from("method,j,coefficient\n");
            for (name, e, _) in &rows {
                for (i, b) in e.coefficients.iter().enumerate() {
                    s.push_str(&format!("{name},{},{}\n", e.j_lo + i, b.to_machine_string()));
                }
            }
            s
        }
        FormatArg::Latex => {
            let mut s = String::from("\\begin{tabular}{lrl}\n\\hline\nmethod & $j$ & $b_j$ \\\\\n\\hline\n");
            for (name, e, _) in &rows {
                for (i, b) in e.coefficients.iter().enumerate() {
                    s.push_str(&format!(
                        "{} & {} & ${}$ \\\\\n",
                        name.replace('_', "\\_"),
                        e.j_lo + i,
                        latex_math(&b.to_machine_string())
                    ));
                }
            }
            s.push_str("\\hline\n\\end{tabular}\n");
            s
        }
    };
    emit(&a.out, &doc)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let ids = a
        .ids
        .as_ref()
        .map(|ids| ids.iter().map(|s| s.parse::<IdentityId>()).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let modes = a
        .lambda
        .as_ref()
        .map(|ls| ls.iter().map(|s| parse_mode(s)).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let config = SuiteConfig {
        ids,
        max_n: a.max_n,
        max_k: a.max_k,
        modes,
    };
    let reports = run_suite(&config)?;
    let mut doc = render_report(&reports, a.out.format.into());
    if a.out.ascii {
        doc = doc.replace('λ', "L");
    }
    emit(&a.out, &doc)?;
    if let Some(path) = &a.write_expectation {
        fs::write(path, expectation_json(&reports)).map_err(|e| io_failure(path, e))?;
    }
    if a.no_expect {
        return Ok(());
    }
    let expectation = match &a.expect {
        Some(path) => fs::read_to_string(path).map_err(|e| io_failure(path, e))?,
        None => DEFAULT_EXPECTATION.to_string(),
    };
    let mismatches = compare_expectation(&reports, &expectation)?;
    if mismatches.is_empty() {
        return Ok(());
    }
    for m in mismatches.iter().take(20) {
        eprintln!("mismatch: {m}");
    }
    Err(Failure::Internal(format!(
        "{} verdict(s) differ from the expectation",
        mismatches.len()
    )))
}
