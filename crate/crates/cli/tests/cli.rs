//! End-to-end tests of the `hilb` binary: output formats, round trips
//! between subcommands, and exit codes.

use std::process::{Command, Output};

fn hilb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilb"))
        .args(args)
        .env_remove("HILB_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn assert_code(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout(output),
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn classify_json_verdicts() {
    let out = hilb(&["classify", "--ambient", "3", "--partition", "2,2,1", "--json"]);
    assert_code(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verdict"], "singular");
    assert_eq!(value["polynomial"], "2t+2");
    assert_eq!(value["partition"], serde_json::json!([2, 2, 1]));
    assert_eq!(value["lexComponentDim"], 11);
    assert_eq!(value["witnessStatus"], "provided");

    let out = hilb(&["classify", "--ambient", "3", "--partition", "3,3,2,1", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verdict"], "smooth");
    assert_eq!(value["condition"], 3);
    assert_eq!(value["witness"], serde_json::Value::Null);

    let out = hilb(&["classify", "--ambient", "4", "--partition", "5,1", "--json"]);
    assert_code(&out, 0); // empty is an answer, not an error
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verdict"], "empty");
}

#[test]
fn classify_output_is_byte_stable() {
    let a = hilb(&["classify", "--ambient", "4", "--partition", "3,2,1", "--json", "--certify"]);
    let b = hilb(&["classify", "--ambient", "4", "--partition", "3,2,1", "--json", "--certify"]);
    assert_code(&a, 0);
    assert_eq!(a.stdout, b.stdout);
    let value: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(value["certificate"]["singularCertified"], true);
    assert_eq!(value["certificate"]["hom0"], 18);
    assert_eq!(value["certificate"]["lexComponentDim"], 15);
    assert_eq!(value["certificate"]["assumesLexComponent"], true);
}

#[test]
fn classify_accepts_polynomials() {
    let out = hilb(&["classify", "--ambient", "3", "--poly", "3t+1", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["partition"], serde_json::json!([2, 2, 2, 1]));
    assert_eq!(value["verdict"], "singular");

    // t is not a Hilbert polynomial: empty for every ambient space, exit 0
    let out = hilb(&["classify", "--ambient", "4", "--poly", "t", "--json"]);
    assert_code(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["verdict"], "empty");
    assert_eq!(value["partition"], serde_json::Value::Null);
}

#[test]
fn classify_batch_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.txt");
    std::fs::write(&path, "# sample partitions\n2,2,1\n3,3,2,1\n\n5\n").unwrap();
    let out = hilb(&["classify", "--ambient", "3", "--batch", path.to_str().unwrap()]);
    assert_code(&out, 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "2,2,1 -> singular");
    assert_eq!(lines[1], "3,3,2,1 -> smooth (condition 3)");
    assert_eq!(lines[2], "5 -> empty");

    let out = hilb(&[
        "classify", "--ambient", "3", "--batch", path.to_str().unwrap(), "--json",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    for line in text.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(value["verdict"].is_string());
    }
}

#[test]
fn convert_round_trip() {
    let out = hilb(&["convert", "--partition", "2,2,1"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "2t+2");

    let out = hilb(&["convert", "--poly", "2t+2"]);
    assert_eq!(stdout(&out).trim(), "2,2,1");

    // quadratic with fractional power-basis coefficients
    let out = hilb(&["convert", "--partition", "3"]);
    assert_eq!(stdout(&out).trim(), "(1/2)t^2+(3/2)t+1");
    let out = hilb(&["convert", "--poly", "(1/2)t^2+(3/2)t+1"]);
    assert_eq!(stdout(&out).trim(), "3");

    // a non-Hilbert polynomial is a domain error for convert
    let out = hilb(&["convert", "--poly", "t"]);
    assert_code(&out, 1);
}

#[test]
fn lex_output_feeds_hilb_and_tangent() {
    let out = hilb(&["lex", "--ambient", "3", "--partition", "2,2,1"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert_eq!(text, "vars 4\nx0\nx1^3\nx1^2*x2\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("L.ideal");
    std::fs::write(&path, &text).unwrap();

    let out = hilb(&[
        "hilb", "--ideal", path.to_str().unwrap(), "--from", "0", "--to", "4",
        "--polynomial", "--hint", "3",
    ]);
    assert_code(&out, 0);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines[0], "0\t1");
    assert_eq!(lines[1], "1\t3");
    assert_eq!(lines[2], "2\t6");
    assert_eq!(lines[3], "3\t8");
    assert_eq!(lines[4], "4\t10");
    assert_eq!(lines[5], "polynomial\t2t+2");

    let out = hilb(&["tangent", "--ideal", path.to_str().unwrap()]);
    assert_code(&out, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["field"], "rationals");
    assert!(value["hom0Dim"].is_u64());

    let modular = hilb(&[
        "tangent", "--ideal", path.to_str().unwrap(), "--field", "prime:1000003",
    ]);
    let mod_value: serde_json::Value = serde_json::from_str(&stdout(&modular)).unwrap();
    assert_eq!(value["hom0Dim"], mod_value["hom0Dim"]);
}

#[test]
fn lex_decompose_lists_components() {
    let out = hilb(&["lex", "--ambient", "3", "--partition", "2,2,1", "--decompose"]);
    let text = stdout(&out);
    assert!(text.contains("# irreducible component 1"));
    assert!(text.contains("# irreducible component 2"));
    assert!(text.contains("x1^2\n"));
    assert!(text.contains("x2\n"));
}

#[test]
fn chain_prints_each_step() {
    let out = hilb(&["chain", "--ambient", "4", "--type", "3:2,2:4"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.contains("# step 1 of the residual flag, type 3:2"));
    assert!(text.contains("# step 2 of the residual flag, type 2:4"));
    assert!(text.contains("x2^4"));
}

#[test]
fn witness_subcommand() {
    let out = hilb(&["witness", "--ambient", "4", "--partition", "3,2,1"]);
    assert_code(&out, 0);
    let text = stdout(&out);
    assert!(text.starts_with('#'));
    assert!(text.contains("vars 5"));

    // singular but with no constructed witness
    let out = hilb(&["witness", "--ambient", "4", "--partition", "3,1,1"]);
    assert_code(&out, 0);
    assert!(stdout(&out).contains("no witness ideal constructed"));

    // smooth input is a domain error
    let out = hilb(&["witness", "--ambient", "4", "--partition", "3,3,1"]);
    assert_code(&out, 1);
}

#[test]
fn resdim_and_exit_codes() {
    let out = hilb(&["resdim", "--ambient", "4", "--type", "3:1"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "6");

    // ambient below n_1: domain error
    let out = hilb(&["resdim", "--ambient", "2", "--type", "3:1"]);
    assert_code(&out, 1);

    // malformed type: usage error from the value parser
    let out = hilb(&["resdim", "--ambient", "4", "--type", "3"]);
    assert_code(&out, 2);

    // missing required group: usage error
    let out = hilb(&["classify", "--ambient", "3"]);
    assert_code(&out, 2);

    // increasing parts: usage error
    let out = hilb(&["classify", "--ambient", "3", "--partition", "1,2"]);
    assert_code(&out, 2);

    // ideal-building commands refuse huge ambients, pure arithmetic does not
    let out = hilb(&["classify", "--ambient", "99999", "--partition", "2,2,1"]);
    assert_code(&out, 2);
    let out = hilb(&["resdim", "--ambient", "50000", "--type", "3:2"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).trim(), "199997");
}

#[test]
fn degree_cap_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tall.ideal");
    std::fs::write(&path, "vars 2\nx0^25\n").unwrap();
    let path = path.to_str().unwrap();

    let out = hilb(&["tangent", "--ideal", path]);
    assert_code(&out, 1); // above the default cap of 20

    let out = Command::new(env!("CARGO_BIN_EXE_hilb"))
        .args(["tangent", "--ideal", path])
        .env("HILB_DEGREE_CAP", "30")
        .output()
        .unwrap();
    assert_code(&out, 0);

    let out = hilb(&["tangent", "--ideal", path, "--degree-cap", "30"]);
    assert_code(&out, 0);

    let out = Command::new(env!("CARGO_BIN_EXE_hilb"))
        .args(["tangent", "--ideal", path])
        .env("HILB_DEGREE_CAP", "not-a-number")
        .output()
        .unwrap();
    assert_code(&out, 2);
}

#[test]
fn json_witness_round_trips_into_ideal_file() {
    let out = hilb(&["classify", "--ambient", "3", "--partition", "1,1,1,1", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let vars = value["witness"]["vars"].as_u64().unwrap();
    let mut file = format!("vars {vars}\n");
    for gen in value["witness"]["gens"].as_array().unwrap() {
        let exps: Vec<String> =
            gen.as_array().unwrap().iter().map(|e| e.to_string()).collect();
        file.push_str(&exps.join(" "));
        file.push('\n');
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.ideal");
    std::fs::write(&path, file).unwrap();
    let out = hilb(&["tangent", "--ideal", path.to_str().unwrap()]);
    assert_code(&out, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // the square of the maximal ideal of a point in P^3
    assert_eq!(report["hom0Dim"], 18);

    // and the hilb tabulation agrees with the constant polynomial 4
    let out = hilb(&[
        "hilb", "--ideal", path.to_str().unwrap(), "--from", "2", "--to", "6", "--polynomial",
    ]);
    let text = stdout(&out);
    assert!(text.lines().take(5).all(|l| l.ends_with("\t4")));
    assert!(text.trim_end().ends_with("polynomial\t4"));
}

#[test]
fn missing_ideal_file_is_domain_error() {
    let out = hilb(&["tangent", "--ideal", "/nonexistent/path.ideal"]);
    assert_code(&out, 1);
    let out = hilb(&["hilb", "--ideal", "/nonexistent/path.ideal", "--from", "0", "--to", "2"]);
    assert_code(&out, 1);
}
