//! End-to-end tests of the binary: JSON shapes, exit codes, determinism,
//! and the round trip of the echoed complex document.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_reisner"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait for binary")
}

fn run_json(args: &[&str], stdin: &str) -> Value {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON output")
}

const PATH4: &str = r#"{"vertices":4,"facets":[[1,2],[2,3],[3,4]]}"#;
const GON5: &str = r#"{"vertices":5,"facets":[[1,2],[2,3],[3,4],[4,5],[5,1]]}"#;

#[test]
fn classify_pointed_path() {
    let v = run_json(&["classify"], PATH4);
    assert_eq!(v["components"][0]["kind"], "pointed_path");
    assert_eq!(v["components"][0]["m"], 4);
    assert_eq!(v["lci"], true);
    assert_eq!(v["ci"], false);
    assert_eq!(v["cm"], true);
    assert_eq!(v["buchsbaum"], true);
}

#[test]
fn classify_two_disjoint_triangles() {
    let input = r#"{"vertices":6,"facets":[[1,2,3],[4,5,6]]}"#;
    let v = run_json(&["classify"], input);
    assert_eq!(v["gci"], true);
    assert_eq!(v["cm"], false);
    assert_eq!(v["buchsbaum"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["components"][0]["kind"], "ci_dim_ge_2");
}

#[test]
fn classify_star_reports_witness() {
    let input = r#"{"vertices":4,"facets":[[1,2],[1,3],[1,4]]}"#;
    let v = run_json(&["classify"], input);
    assert_eq!(v["lci"], false);
    assert_eq!(v["witness_vertex"], 1);
    assert_eq!(v["cm"], "unknown_by_this_criterion");
}

#[test]
fn classify_accepts_ideal_input() {
    let ideal = r#"{"vars":4,"generators":["x1*x3","x1*x4","x2*x4"]}"#;
    let from_ideal = run_json(&["classify"], ideal);
    let from_complex = run_json(&["classify"], PATH4);
    assert_eq!(from_ideal, from_complex);
}

#[test]
fn power_table_for_path_square() {
    let v = run_json(&["power", "--power", "2"], PATH4);
    assert_eq!(v["count"], 6);
    let gens: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["monomial"].as_str().unwrap())
        .collect();
    assert_eq!(
        gens,
        vec![
            "x1^2*x3^2",
            "x1^2*x3*x4",
            "x1^2*x4^2",
            "x1*x2*x3*x4",
            "x1*x2*x4^2",
            "x2^2*x4^2"
        ]
    );
    assert_eq!(v["generators"][0]["degree"], 4);
    assert_eq!(
        v["generators"][0]["exponents"],
        serde_json::json!([2, 0, 2, 0])
    );
}

#[test]
fn power_one_returns_the_ideal_itself() {
    let v = run_json(&["power", "--power", "1"], GON5);
    assert_eq!(v["count"], 5);
    assert_eq!(v["generators"][0]["monomial"], "x1*x3");
}

#[test]
fn power_accepts_exponent_vectors() {
    let input = r#"{"vars":3,"generators":[[1,1,0],[0,2,1]]}"#;
    let v = run_json(&["power", "--power", "2"], input);
    assert_eq!(v["vars"], 3);
    assert!(v["count"].as_u64().unwrap() >= 3);
}

#[test]
fn cohomology_reports_for_known_examples() {
    let v = run_json(&["cohomology", "--power", "2"], PATH4);
    assert_eq!(v["depth"], 1);
    assert_eq!(v["is_cm"], false);
    assert_eq!(v["modules"][1]["total_dim"], 1);
    assert_eq!(
        v["modules"][1]["contributions"][0]["degree"],
        serde_json::json!([1, 0, 0, 1])
    );

    let v = run_json(&["cohomology", "--power", "2"], GON5);
    assert_eq!(v["is_cm"], true);

    let v = run_json(&["cohomology", "--power", "3"], GON5);
    assert_eq!(v["depth"], 0);
}

#[test]
fn cohomology_over_prime_field() {
    let v = run_json(&["cohomology", "--power", "1", "--field", "p:2"], GON5);
    assert_eq!(v["field"], "p:2");
    assert_eq!(v["depth"], 2);
}

#[test]
fn screen_pentagon_rules_out_from_six() {
    let v = run_json(&["screen", "--max-power", "10"], GON5);
    assert_eq!(v["numerics"]["multiplicity"], 5);
    assert_eq!(v["numerics"]["codim"], 3);
    for row in v["rows"].as_array().unwrap() {
        let power = row["power"].as_u64().unwrap();
        let expected = if power >= 6 {
            "ruled_out"
        } else {
            "inconclusive"
        };
        assert_eq!(row["verdict"], expected, "power {power}");
    }
    assert_eq!(v["rows"][5]["bound"], "143/28");
}

#[test]
fn exit_code_2_on_invalid_input() {
    let out = run(&["classify"], r#"{"vertices":3,"facets":[[1,7]]}"#);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify"], "not json");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify"], r#"{"vertices":3}"#);
    assert_eq!(out.status.code(), Some(2));
    let out = run(
        &["classify"],
        r#"{"vars":3,"generators":["x1^2*x2"]}"#, // not squarefree
    );
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["cohomology", "--power", "1", "--field", "p:4"], GON5);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_3_on_failed_precondition() {
    let out = run(
        &["screen", "--max-power", "5"],
        r#"{"vertices":3,"facets":[[1,2,3]]}"#,
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["classify"],
        vec!["power", "--power", "3"],
        vec!["cohomology", "--power", "2"],
        vec!["screen", "--max-power", "8"],
    ] {
        let a = run(&args, GON5);
        let b = run(&args, GON5);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn echoed_complex_roundtrips() {
    let v = run_json(
        &["classify"],
        r#"{"vertices":5,"facets":[[2,1],[3,2],[3,4],[5,4],[1,5]]}"#,
    );
    let echoed = serde_json::to_string(&v["complex"]).unwrap();
    let again = run_json(&["classify"], &echoed);
    assert_eq!(v, again);
}

#[test]
fn text_format_smoke() {
    let out = run(&["classify", "--format", "text"], PATH4);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4-pointed path"));
    assert!(text.contains("cohen-macaulay yes"));

    let out = run(&["screen", "--max-power", "6", "--format", "text"], GON5);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("143/28"));
    assert!(text.contains("ruled out"));
}
