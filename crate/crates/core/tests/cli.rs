use std::process::{Command, Output};

use serde_json::Value;

fn mk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mk"))
        .args(args)
        .output()
        .expect("mk runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn eval_exit_codes() {
    let o = mk(&["eval", "--universe-rank", "3", "--env", "a=2", "a \\cup {a}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[[],[[]],[[],[[]]]]");

    let o = mk(&["eval", "{x : x \\in 2}", "--universe-rank", "2"]);
    assert_eq!(stdout(&o).trim(), "[[],[[]]]");

    assert_eq!(mk(&["eval", "0 ∈ 1"]).status.code(), Some(0));
    let o = mk(&["eval", "1 ∈ 0"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "false"));
    assert_eq!(mk(&["eval", "x ∈"]).status.code(), Some(2));
    assert_eq!(mk(&["eval", "x ∈ 1"]).status.code(), Some(2));
    assert_eq!(
        mk(&["eval", "0 ∈ 1", "--universe-rank", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn check_prints_witness() {
    let o = mk(&[
        "check",
        "well_order",
        "--args",
        r#"{"carrier": 2, "le": [[0,0],[1,1],[0,1]]}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["holds"], true);

    let o = mk(&["check", "nest", "--args", r#"{"family": [[0], [1]]}"#]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["holds"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);

    assert_eq!(mk(&["check", "nest", "--args", "{"]).status.code(), Some(2));
    assert_eq!(mk(&["check", "nope", "--args", "{}"]).status.code(), Some(2));
}

#[test]
fn every_demo_verifies() {
    for (kind, input) in [
        ("tukey", "[[], [0], [1], [0, 1]]"),
        ("hausdorff", r#"{"family": [[0], [1], [0, 1]]}"#),
        ("maxprinciple", "[[0], [1, 2]]"),
        ("zermelo", "[[0], [1, 2], [3]]"),
        ("zorn", r#"{"carrier": 3, "le": [[0,0],[1,1],[2,2],[0,2]]}"#),
        ("wellorder", "[0, 1, [1]]"),
        ("ac-from-zermelo", "3"),
        ("ac-from-wo", "3"),
    ] {
        for choice in ["canonical", "seed:4"] {
            let o = mk(&["demo", kind, "--input", input, "--choice", choice]);
            assert_eq!(
                o.status.code(),
                Some(0),
                "{kind}: {}",
                String::from_utf8_lossy(&o.stderr)
            );
            let v = json(&o);
            assert!(v["postconditions"]
                .as_array()
                .unwrap()
                .iter()
                .all(|p| p["holds"] == true));
        }
    }
    let o = mk(&["demo", "wellorder", "--input", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        mk(&["demo", "wellorder", "--input", "3", "--guard", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        mk(&["demo", "wellorder", "--input", "2", "--guard", "2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        mk(&["demo", "zermelo", "--input", "[[], [1]]"]).status.code(),
        Some(2)
    );
}

#[test]
fn suite_reports_are_reproducible() {
    let dir = std::env::temp_dir().join(format!("mk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zorn.json");
    let args = [
        "suite",
        "zorn",
        "--n",
        "3",
        "--choice",
        "seed:2",
        "--no-timing",
        "--json",
        path.to_str().unwrap(),
    ];
    let a = mk(&args);
    let b = mk(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&a));

    let v = json(&a);
    for key in [
        "suite",
        "params",
        "instances",
        "expected_errors",
        "failures",
        "millis",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["instances"], 19);
    assert_eq!(v["millis"], 0);
    assert_eq!(v["params"]["choice"], "seed:2");
    std::fs::remove_dir_all(dir).unwrap();

    assert_eq!(mk(&["suite", "zorn", "--n", "5"]).status.code(), Some(2));
    assert_eq!(mk(&["suite", "nonsense"]).status.code(), Some(2));
}
