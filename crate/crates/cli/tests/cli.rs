use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freecommutant"))
        .args(args)
        .env_remove("FREECOMMUTANT_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    let value: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    validate(&value);
    (value, out.status.code().unwrap())
}

fn validate(report: &Value) {
    let schema_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/report.schema.json"
    ))
    .unwrap();
    let schema: Value = serde_json::from_str(&schema_text).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let messages: Vec<String> = match compiled.validate(report) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    panic!("schema violations: {messages:?}");
}

fn column(report: &Value, section: usize, name: &str) -> Vec<Value> {
    let s = &report["sections"][section];
    let idx = s["columns"]
        .as_array()
        .unwrap()
        .iter()
        .position(|c| c == name)
        .unwrap();
    s["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[idx].clone())
        .collect()
}

#[test]
fn additivity_example() {
    let (r, code) = json(&[
        "verify-additivity",
        "--x",
        "atomic(1/2:0,1/2:1)",
        "--max-order",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["holds"], true);
    assert_eq!(column(&r, 0, "n").len(), 6);
    assert_eq!(column(&r, 0, "lhs")[1], "3/2");
}

#[test]
fn witness_example() {
    let (r, code) = json(&["freeness-witness", "--x", "free-poisson(1)"]);
    assert_eq!(code, 0);
    assert_eq!(column(&r, 0, "witness"), vec![Value::from("1")]);
    assert!(r["notes"][0].as_str().unwrap().contains("not free"));
}

#[test]
fn fock_example() {
    let (r, code) = json(&[
        "verify-fock",
        "--rho",
        "rho-moments[1,1,1,1,1,1,1,1,1]",
        "--max-order",
        "8",
    ]);
    assert_eq!(code, 0);
    let model: Vec<Value> = column(&r, 0, "model");
    let expected: Vec<Value> = ["1", "3", "4", "9", "16", "35", "71", "157"]
        .map(Value::from)
        .to_vec();
    assert_eq!(model, expected);
    assert_eq!(column(&r, 1, "holds").len(), 10);
}

#[test]
fn other_commands_hold() {
    for args in [
        vec![
            "cancellation",
            "--x",
            "free-poisson(1)",
            "--s-var",
            "2",
            "--max-order",
            "5",
        ],
        vec![
            "verify-prop41",
            "--x",
            "atomic(1/3:-1, 2/3:2)",
            "--max-order",
            "6",
        ],
        vec![
            "fid-check",
            "--rho",
            "atomic(1/2:-1, 1/2:1)",
            "--poly",
            "x + i[x,s]",
            "--size",
            "3",
        ],
        vec!["fid-check", "--x", "semicircle(1)"],
        vec!["partitions", "--n", "4", "--kind", "nc-irr"],
        vec![
            "cumulants",
            "--poly",
            "s + i*x",
            "--x",
            "semicircle(1)",
            "--max-order",
            "3",
        ],
    ] {
        let (r, code) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(r["holds"], true);
    }
}

#[test]
fn partition_listing() {
    let (r, _) = json(&["partitions", "--n", "3", "--kind", "nc-irr"]);
    assert_eq!(r["parameters"]["count"], "2");
    assert_eq!(
        column(&r, 0, "partition"),
        vec![Value::from("{{1,2,3}}"), Value::from("{{1,3},{2}}")]
    );
}

#[test]
fn non_hermitian_cumulants_are_reported() {
    let (r, _) = json(&[
        "cumulants",
        "--poly",
        "s + i*x",
        "--x",
        "free-poisson(1)",
        "--max-order",
        "2",
    ]);
    assert_eq!(column(&r, 0, "kappa")[0], "1i");
}

#[test]
fn fid_control_fails_with_exit_one() {
    let (r, code) = json(&["fid-check", "--x", "cumulants[0,1,0,-1]", "--size", "2"]);
    assert_eq!(code, 1);
    assert_eq!(r["holds"], false);
    assert!(r["counterexample"].is_string());
}

#[test]
fn non_semicircular_s_breaks_additivity() {
    let out = run(&[
        "verify-additivity",
        "--x",
        "free-poisson(1)",
        "--s",
        "free-poisson(1)",
        "--max-order",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("first counterexample"));
}

#[test]
fn injected_fault_flips_exit_code() {
    for args in [
        vec![
            "verify-additivity",
            "--x",
            "free-poisson(1)",
            "--max-order",
            "3",
        ],
        vec!["freeness-witness", "--x", "free-poisson(1)"],
        vec!["cancellation", "--x", "free-poisson(1)", "--max-order", "3"],
        vec![
            "verify-prop41",
            "--x",
            "free-poisson(1)",
            "--max-order",
            "3",
        ],
        vec!["verify-fock", "--rho", "atomic(1:1)", "--max-order", "3"],
        vec!["fid-check", "--x", "semicircle(1)"],
    ] {
        assert_eq!(run(&args).status.code(), Some(0), "{args:?}");
        let mut faulty = args.clone();
        faulty.push("--inject-fault");
        let out = run(&faulty);
        assert_eq!(out.status.code(), Some(1), "{faulty:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("first counterexample"),
            "{faulty:?}"
        );
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["verify-additivity"],
        vec!["verify-additivity", "--x", "atomic(1/2:0, 1/3:1)"],
        vec!["verify-additivity", "--x", "gaussian(1)"],
        vec![
            "verify-additivity",
            "--x",
            "free-poisson(1)",
            "--max-order",
            "9",
        ],
        vec!["verify-additivity", "--x", "free-poisson(1)", "--bogus"],
        vec!["verify-fock", "--rho", "semicircle(1)"],
        vec!["partitions", "--n", "20"],
        vec![
            "verify-additivity",
            "--x",
            "cumulants[0,1]",
            "--max-order",
            "4",
        ],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn syntax_errors_name_the_position() {
    let out = run(&["verify-additivity", "--x", "atomic(1/2:0, 1/2 1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 18"));
}

#[test]
fn env_var_raises_the_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_freecommutant"))
        .args([
            "verify-fock",
            "--rho",
            "atomic(1:1)",
            "--max-order",
            "9",
            "--format",
            "json",
        ])
        .env("FREECOMMUTANT_MAX_ORDER", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["parameters"]["max_order"], "9");
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let args = [
        "verify-additivity",
        "--x",
        "atomic(1/3:-1, 2/3:2)",
        "--max-order",
        "5",
        "--format",
        "json",
    ];
    let one = run(&[&args[..], &["--jobs", "1"]].concat()).stdout;
    let three = run(&[&args[..], &["--jobs", "3"]].concat()).stdout;
    assert_eq!(one, three);
    assert_eq!(one, run(&args).stdout);
}

#[test]
fn table_and_json_agree_on_rationals() {
    let args = [
        "verify-prop41",
        "--x",
        "atomic(1/3:-1, 2/3:2)",
        "--max-order",
        "4",
    ];
    let (r, _) = json(&args);
    let table = String::from_utf8(run(&args).stdout).unwrap();
    for v in column(&r, 0, "closed_form")
        .iter()
        .chain(column(&r, 0, "oracle").iter())
    {
        assert!(
            table.contains(v.as_str().unwrap()),
            "{v} missing from table"
        );
    }
}
