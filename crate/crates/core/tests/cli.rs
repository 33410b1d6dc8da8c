use std::process::{Command, Output};

fn cozero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cozero"))
        .args(args)
        .env_remove("COZERO_MAX_CARDINALITY")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_text() {
    let o = cozero(&["analyze", "Z2xZ2xZ2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("omega=3 chi=3 perfect=true"), "{out}");
    assert!(out.contains("formula=C(3,1)=3 match"), "{out}");
}

#[test]
fn analyze_json_for_several_rings() {
    let o = cozero(&["analyze", "Z4", "--rings", "Z2xZ3,Z9", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rings: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["spec"].as_str().unwrap())
        .collect();
    assert_eq!(rings, ["Z4", "Z2xZ3", "Z9"]);
    assert_eq!(v[0]["vertices"], 1);
    assert_eq!(v[0]["null_graph"], true);
    assert_eq!(v[1]["formula"]["expected"], 2);
}

#[test]
fn verify_named_suite() {
    let o = cozero(&[
        "verify",
        "--suite",
        "quotient-reduction",
        "--rings",
        "Z2xZ2,Z2xZ2xZ2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports
        .iter()
        .all(|r| r["pass"] == true && r["outcome"] == "pass"));
    assert!(reports.iter().all(|r| r.get("elapsed").is_none()));
}

#[test]
fn verify_reports_skips_with_reasons() {
    let o = cozero(&[
        "verify",
        "--suite",
        "perfection,null-graph",
        "Z5",
        "Z4",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reasons: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| format!("{} {} {}", r["claim_id"], r["spec"], r["skip_reason"]))
        .collect();
    assert_eq!(
        reasons,
        [
            r#""null-graph" "Z4" null"#,
            r#""null-graph" "Z5" "is-domain""#,
            r#""perfection" "Z4" "not-VNR""#,
            r#""perfection" "Z5" null"#,
        ]
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--suite", "bogus"][..],
        &["analyze", "Z2 x Z3"],
        &["analyze", "Z1"],
        &["analyze"],
        &["export", "Z6", "--format", "text"],
        &["nonsense"],
    ] {
        let o = cozero(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn caps_exit_one() {
    let o = cozero(&["analyze", "Z101xZ103"]);
    assert_eq!(o.status.code(), Some(1));
    let o = cozero(&["--max-vertices", "4", "analyze", "Z2xZ2xZ2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cardinality_cap_from_environment() {
    let run = |env: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_cozero"))
            .args(args)
            .env("COZERO_MAX_CARDINALITY", env)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("4", &["analyze", "Z2xZ3"]), Some(1));
    assert_eq!(run("4", &["analyze", "Z2xZ2"]), Some(0));
    // the flag wins over the environment
    assert_eq!(
        run("4", &["analyze", "Z2xZ3", "--max-cardinality", "6"]),
        Some(0)
    );
    assert_eq!(run("lots", &["analyze", "Z2xZ2"]), Some(2));
}

#[test]
fn export_quotient_dot() {
    let o = cozero(&["export", "Z3xZ3", "--quotient", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "graph \"Z3xZ3\" {\n  0 [label=\"(0,1)\"];\n  1 [label=\"(1,0)\"];\n  0 -- 1;\n}\n"
    );
}

#[test]
fn export_complement_json_to_file() {
    let path = std::env::temp_dir().join(format!("cozero-export-{}.json", std::process::id()));
    let o = cozero(&[
        "export",
        "Z2xZ2xZ2",
        "--complement",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["spec"], "Z2xZ2xZ2");
    assert_eq!(v["labels"].as_array().unwrap().len(), 6);
    // 15 pairs, 9 of them edges of the graph itself
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}
