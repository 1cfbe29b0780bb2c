use std::process::{Command, Output};

fn fitzgerald(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitzgerald"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn test_json_is_one_object() {
    let o = fitzgerald(&["test", "--p", "2", "--poly", "x^4+x+1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for key in [
        "poly",
        "p",
        "ext",
        "q",
        "modulus",
        "k",
        "m",
        "expected_count",
        "actual_count",
        "fitzgerald_primitive",
        "order_e",
        "order_primitive",
        "agree",
        "trace_of_beta",
        "lagrange_ok",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
    assert_eq!(v["agree"], true);
}

#[test]
fn human_output_names_the_verdict() {
    let o = fitzgerald(&["test", "--p", "3", "--poly", "x^2+x+2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("criterion: primitive"), "{text}");
    assert!(text.contains("agree: true"), "{text}");
}

#[test]
fn csv_is_byte_identical_across_runs_and_jobs() {
    let a = fitzgerald(&["enumerate", "--p", "3", "--k", "4", "--classify"]);
    let b = fitzgerald(&[
        "enumerate",
        "--p",
        "3",
        "--k",
        "4",
        "--classify",
        "--jobs",
        "4",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 82);
}

#[test]
fn csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let o = fitzgerald(&[
        "enumerate",
        "--p",
        "2",
        "--k",
        "4",
        "--classify",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let summary = stdout(&o);
    assert!(summary.contains("classified=3"), "{summary}");
    assert!(summary.contains("primitive=2 expected=2"), "{summary}");
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        [
            "poly",
            "irreducible",
            "applicable",
            "actual_count",
            "expected_count",
            "order_e",
            "fitz",
            "order",
            "agree"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 16);
    let primitive: Vec<&str> = rows
        .iter()
        .filter(|r| &r[6] == "true")
        .map(|r| r.get(0).unwrap())
        .collect();
    assert_eq!(primitive, ["x^4+x+1", "x^4+x^3+1"]);
}

#[test]
fn extension_field_input() {
    let o = fitzgerald(&[
        "gpoly",
        "--p",
        "2",
        "--ext",
        "2",
        "--coeffs",
        "[0,1],1,1",
        "--json",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["modulus"], "x^2+x+1");
    assert_eq!(v["m"], 15);
    let t = fitzgerald(&[
        "test",
        "--p",
        "2",
        "--ext",
        "2",
        "--coeffs",
        "[0,1],1,1",
        "--json",
    ]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&t)).unwrap();
    assert_eq!(v["nonzero_count"], r["actual_count"]);
    assert_eq!(v["fitzgerald_primitive"], r["order_primitive"]);
}

#[test]
fn error_exit_codes() {
    assert_eq!(fitzgerald(&[]).status.code(), Some(2));
    assert_eq!(
        fitzgerald(&["test", "--p", "2", "--poly", "x^4+x+1", "--coeffs", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fitzgerald(&["test", "--p", "2", "--poly", "x^^2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fitzgerald(&["test", "--p", "3", "--poly", "2*x^2+1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        fitzgerald(&["gpoly", "--p", "2", "--poly", "x^4+x^2+1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        fitzgerald(&["enumerate", "--p", "2", "--k", "30", "--cap", "1000"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_reports_every_property() {
    let o = fitzgerald(&[
        "verify", "--p", "2", "--ext", "2", "--k", "3", "--jobs", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in [
        "criterion_equivalence",
        "irreducible_count",
        "primitive_count",
        "stream_equality",
        "g_degree",
        "lagrange_identity",
        "divisibility",
        "inverse_series_traces",
        "trace_fibers",
    ] {
        assert!(text.contains(&format!("PASS {name}")), "{name}: {text}");
    }
}
