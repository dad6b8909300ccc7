use std::process::{Command, Output};

use ffclass::golden::{run_golden, GoldenCase};
use ffclass::report::{ClassifyJson, EllipticJson};

fn ffclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffclass"))
        .args(args)
        .env_remove("FFCLASS_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const EX1: [&str; 4] = ["--p", "3", "--alpha", "x^3+x+1"];

fn with(cmd: &str, extra: &[&str]) -> Vec<String> {
    let mut v = vec![cmd.to_string()];
    v.extend(EX1.iter().map(|s| s.to_string()));
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

fn run(cmd: &str, extra: &[&str]) -> Output {
    let args = with(cmd, extra);
    ffclass(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn classify_example1() {
    let out = run("classify", &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("class number 4, structure Z/4"), "{text}");
    assert!(text.contains("genera: 2"), "{text}");
}

#[test]
fn classify_json_matches_text() {
    let json: ClassifyJson = serde_json::from_str(&stdout(&run("classify", &["--output", "json"]))).unwrap();
    assert_eq!(json.classes.len(), 4);
    assert_eq!(json.invariant_factors, [4]);
    assert_eq!(json.num_genera, 2);
    let text = stdout(&run("classify", &[]));
    for class in &json.classes {
        let row = format!("{};{}", class.u, class.v);
        assert!(text.contains(&row), "{row} missing from text output");
        let form = format!("({}, {}, {})", class.form[0], class.form[1], class.form[2]);
        assert!(text.contains(&form), "{form} missing from text output");
    }
}

#[test]
fn json_output_round_trips() {
    let json: ClassifyJson = serde_json::from_str(&stdout(&run("classify", &["--output", "json"]))).unwrap();
    let again = ClassifyJson::new(&json.ingest().unwrap());
    assert_eq!(again, json);

    let elliptic: EllipticJson = serde_json::from_str(&stdout(&run("elliptic", &["--output", "json"]))).unwrap();
    let case = GoldenCase {
        name: "cli".into(),
        classify: json,
        elliptic,
    };
    assert!(run_golden(&case).passed());
}

#[test]
fn compose_example() {
    let out = run("compose", &["--i1", "x;2", "--i2", "x;1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("x;2 * x;1 = 1;0 (identity)"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run("compose", &["--i1", "x;2", "--i2", "x;1", "--output", "json"]))).unwrap();
    assert_eq!(json["result"]["u"], "1");
    assert_eq!(json["result"]["v"], "0");
    assert_eq!(json["is_identity"], true);
}

#[test]
fn equiv_example() {
    let out = run("equiv", &["--f1", "x,2,2x^2+2", "--f2", "x,1,2x^2+2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not properly equivalent"));
    let out = run("equiv", &["--f1", "2x^2+2,1,x", "--f2", "x,2,2x^2+2"]);
    assert!(stdout(&out).ends_with("\nproperly equivalent\n"));
}

#[test]
fn reduce_and_genus() {
    let out = run("reduce", &["--form", "2x^2+2,1,x", "--output", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["reduced"], serde_json::json!(["x", "2", "2x^2+2"]));

    let out = run("genus", &["--form", "x+2,0,2x^2+2x+1", "--output", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["principal"], true);
}

#[test]
fn elliptic_and_oracle() {
    let out = run("elliptic", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("isomorphism onto the class group: PASS"));

    let out = run("oracle", &["--output", "json", "--verify-bound"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["orbit_count"], 4);
    assert_eq!(json["total_orbits"], 8);
    assert_eq!(json["warnings"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    // Mathematical precondition failures exit with 1.
    let out = ffclass(&["classify", "--p", "9", "--alpha", "x^3+x+1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
    let out = ffclass(&["classify", "--p", "3", "--alpha", "x^3+2x^2+x"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ffclass(&["classify", "--p", "3", "--alpha", "x^4+x+1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run("compose", &["--i1", "x;0", "--i2", "x;1"]);
    assert_eq!(out.status.code(), Some(1));

    // Usage errors exit with 2.
    assert_eq!(ffclass(&["classify"]).status.code(), Some(2));
    assert_eq!(ffclass(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ffclass(&["classify", "--p", "3", "--alpha", "x^"]).status.code(), Some(2));
    assert_eq!(run("compose", &["--i1", "x;2"]).status.code(), Some(2));
    assert_eq!(run("classify", &["--output", "yaml"]).status.code(), Some(2));
    assert!(out.stdout.is_empty());
}
