use std::path::PathBuf;
use std::process::{Command, Output};

fn apostol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apostol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn numbers_table_in_text_and_ascii() {
    let o = apostol(&["numbers", "--k", "1", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "B_0 = 0\nB_1 = 1/(λ-1)\nB_2 = -2λ/(λ-1)^2\n");
    let o = apostol(&["numbers", "--k", "1", "--n", "2", "--ascii"]);
    assert_eq!(stdout(&o), "B_0 = 0\nB_1 = 1/(L-1)\nB_2 = -2L/(L-1)^2\n");
}

#[test]
fn numbers_json_and_csv() {
    let o = apostol(&["numbers", "--family", "bernoulli", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["values"], serde_json::json!(["1", "-1/2", "1/6", "0", "-1/30"]));
    let o = apostol(&["numbers", "--family", "euler", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,0\n2,-1\n3,0\n4,5\n");
}

#[test]
fn zero_order_polynomial_is_a_monomial() {
    let o = apostol(&["poly", "--n", "3", "--k", "0", "--lambda", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^3\n");
}

#[test]
fn expand_shows_the_three_methods() {
    let o = apostol(&["expand", "--coeffs", "0,1", "--k", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let methods: Vec<&str> = v["expansions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["method"].as_str().unwrap())
        .collect();
    assert_eq!(methods, ["oracle", "theorem1_literal", "corrected_conjecture"]);
    assert_eq!(v["expansions"][0]["coefficients"], serde_json::json!(["L", "L/2-1/2"]));
    assert_eq!(v["expansions"][1]["agrees_with_oracle"], false);
    assert_eq!(v["expansions"][2]["agrees_with_oracle"], true);
}

#[test]
fn verify_subset_exits_zero_against_builtin_expectation() {
    let o = apostol(&["verify", "--ids", "ID_HANSEN", "--max-m", "6", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["identity"], "ID_HANSEN");
    assert_eq!(v[0]["summary"]["fail"], 0);
}

#[test]
fn verify_text_shows_counterexample() {
    let o = apostol(&["verify", "--ids", "ID_EULER_RAMANUJAN"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("holds on: m >= 3"), "{text}");
    assert!(text.contains("FAIL m=2 k=0 λ=1 [as_stated]: 1/6"), "{text}");
}

#[test]
fn expectation_mismatch_exits_one() {
    let path = scratch("empty-expectation.json");
    let empty = r#"[{"identity": "ID_EULER_RAMANUJAN", "results": []}]"#;
    std::fs::write(&path, empty).unwrap();
    let o = apostol(&["verify", "--ids", "ID_EULER_RAMANUJAN", "--expect", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected pass (not listed), got fail"));
}

#[test]
fn written_expectation_round_trips() {
    let path = scratch("thm1.json");
    let p = path.to_str().unwrap();
    let args = ["verify", "--ids", "ID_THM1", "--max-n", "3", "--lambda", "2,symbolic", "--format", "csv"];
    let o = apostol(&[&args[..], &["--no-expect", "--write-expectation", p]].concat());
    assert!(o.status.success());
    let o = apostol(&[&args[..], &["--expect", p]].concat());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--ids", "ID_NOPE"][..],
        &["numbers", "--lambda", "abc"],
        &["numbers", "--family", "apostol-euler", "--lambda", "-1"],
        &["verify", "--ids", "ID_DERIV", "--max-n", "11", "--lambda", "symbolic"],
        &["expand", "--coeffs", "1,x"],
        &["verify", "--format", "xml"],
    ] {
        let o = apostol(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic_and_file_output_matches_stdout() {
    let args = ["verify", "--ids", "ID_THM5,ID_LEMMA_CLOSED_FORM", "--max-n", "3", "--format", "json"];
    let a = apostol(&args);
    let b = apostol(&args);
    assert_eq!(a.stdout, b.stdout);
    let path = scratch("report.json");
    let o = apostol(&[&args[..], &["--output", path.to_str().unwrap()]].concat());
    assert!(o.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
}

#[test]
fn latex_report_has_a_table() {
    let o = apostol(&["verify", "--ids", "ID_DILCHER", "--max-n", "2", "--format", "latex"]);
    assert!(o.status.success());
    let t = stdout(&o);
    assert!(t.contains("\\subsection*{ID\\_DILCHER}") && t.contains("\\begin{tabular}"), "{t}");
}

#[test]
fn help_lists_the_flags() {
    let o = apostol(&["verify", "--help"]);
    let help = stdout(&o);
    for flag in ["--ids", "--max-n", "--max-k", "--lambda", "--format", "--output", "--expect", "--no-expect", "--write-expectation"] {
        assert!(help.contains(flag), "{flag} missing from help");
    }
}
