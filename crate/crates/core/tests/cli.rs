use std::process::{Command, Output};

fn fusionkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(args)
        .env_remove("FUSIONKIT_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = fusionkit(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn tensor_examples() {
    assert_eq!(ok(&["tensor", "A1", "--lambda", "1", "--mu", "1"]), "V(2)+V(0)\n");
    assert_eq!(ok(&["tensor", "A1", "--lambda", "3", "--mu", "0"]), "V(3)\n");
    let table = ok(&["tensor", "A2", "--lambda", "1,1", "--mu", "1,1", "--table"]);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[2], "2 V(1,1)  dim 8");
    assert_eq!(lines[5], "total dim 64");
    assert_eq!(
        ok(&["tensor", "A2", "--lambda", "1,1", "--mu", "1,1"]),
        "V(3,0)+V(2,2)+2V(1,1)+V(0,3)+V(0,0)\n"
    );
}

#[test]
fn fusion_examples() {
    assert_eq!(ok(&["fusion", "A1", "--level", "3", "--lambda", "2", "--mu", "2"]), "V(0)+V(2)\n");
    assert_eq!(ok(&["fusion", "A1", "--level", "1", "--lambda", "1", "--mu", "1"]), "V(0)\n");
    assert_eq!(ok(&["fusion", "A1", "--level", "3", "--lambda", "0", "--mu", "2"]), "V(2)\n");
    assert_eq!(ok(&["fusion", "A1", "--level", "4", "--lambda", "4", "--mu", "2"]), "V(2)\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tensor", "X1", "--lambda", "1", "--mu", "1"][..],
        &["tensor", "A1", "--lambda", "1,x", "--mu", "1"],
        &["tensor", "A1", "--lambda", "-1", "--mu", "1"],
        &["tensor", "A2", "--lambda", "1", "--mu", "1"],
        &["fusion", "A1", "--level", "3", "--lambda", "5", "--mu", "0"],
        &["fusion", "A1", "--level", "0", "--lambda", "0", "--mu", "0"],
        &["prv-sweep", "--series", "A1", "--max-level", "0"],
        &["prv-sweep", "--series", "A1", "--min-level", "3", "--max-level", "2"],
        &["prv-sweep", "--max-level", "2"],
        &["frobnicate"],
    ] {
        let o = fusionkit(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn dimension_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(["tensor", "A2", "--lambda", "4,4", "--mu", "3,3"])
        .env("FUSIONKIT_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the configured cap"));
}

#[test]
fn sweeps() {
    let a1 = ok(&["prv-sweep", "--series", "A1", "--max-level", "6"]);
    assert!(a1.starts_with("all ") && a1.contains(" pairs passed"), "{a1}");
    let g2 = ok(&["prv-sweep", "--series", "G2", "--max-level", "3"]);
    assert!(g2.contains("pairs passed"), "{g2}");
    let both = ok(&["prv-sweep", "--series", "A1,G2", "--max-level", "2", "--jobs", "2"]);
    assert!(both.contains("pairs passed"));
    // μ = 2ω is not in P_1
    assert_eq!(ok(&["prv-sweep", "--series", "A1", "--max-level", "1", "--mu", "2"]), "0 applicable pairs\n");
    assert_eq!(
        ok(&["prv-sweep", "--series", "A1", "--max-level", "1", "--nontrivial"]),
        "all 1 pairs passed (1 PRV components verified, 0 proposition witnesses)\n"
    );
}

#[test]
fn sweep_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for jobs in ["1", "4"] {
        let path = dir.path().join(format!("a2-{jobs}.json"));
        ok(&[
            "prv-sweep", "--series", "A2", "--max-level", "4", "--jobs", jobs, "--output",
            path.to_str().unwrap(),
        ]);
        bodies.push(std::fs::read_to_string(&path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    let doc: serde_json::Value = serde_json::from_str(&bodies[0]).unwrap();
    assert_eq!(doc["schema"], 1);
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len() as u64, doc["summary"]["applicable_pairs"].as_u64().unwrap());
    assert!(reports.iter().all(|r| r["passed"] == true));
    assert!(reports[0]["lambda"].is_array());

    let csv = dir.path().join("a1.csv");
    ok(&[
        "prv-sweep", "--series", "A1", "--max-level", "4", "--format", "csv", "--output",
        csv.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("algebra,level,lambda,mu,applicable"));
    assert!(lines.all(|l| l.starts_with("A1,") && l.ends_with(",true")));
}

#[test]
fn algebra_dump_matches_golden() {
    for (name, golden) in [("A2", include_str!("golden/a2.json")), ("G2", include_str!("golden/g2.json"))] {
        let got: serde_json::Value = serde_json::from_str(&ok(&["algebra", name])).unwrap();
        let want: serde_json::Value = serde_json::from_str(golden).unwrap();
        assert_eq!(got, want, "{name}");
        assert_eq!(got["schema"], 1);
    }
}
