use std::path::Path;
use std::process::{Command, Output};

fn lierep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lierep"))
        .args(args)
        .env_remove("LIEREP_TABLES")
        .output()
        .expect("run lierep")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mu_dim_alpha() {
    let o = lierep(&["mu", "A1+C^4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
    assert_eq!(stdout(&lierep(&["dim", "A1+C3+C^6"])), "30\n");
    assert_eq!(stdout(&lierep(&["alpha", "A10"])), "30\n");
    let o = lierep(&["--json", "mu", "C2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["algebra"], "B2");
    assert_eq!(v["mu"], 4);
}

#[test]
fn exit_codes() {
    assert_eq!(lierep(&["mu", "D3"]).status.code(), Some(1));
    assert_eq!(lierep(&["mu", "A1+"]).status.code(), Some(1));
    assert_eq!(lierep(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(lierep(&["construct", "G2"]).status.code(), Some(2));
    assert_eq!(lierep(&["alpha", "E8"]).status.code(), Some(2));
    assert_eq!(lierep(&["prune", "A1", "--degree", "5"]).status.code(), Some(2));
    assert_eq!(lierep(&["oracle-minmatrix", "A1+C^1"]).status.code(), Some(2));
    assert_eq!(
        lierep(&["oracle-minmatrix", "A1+A2", "--max-f", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(lierep(&["nilbound", "3", "4"]).status.code(), Some(1));
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("out.json");
    let f = file.to_str().unwrap();
    let o = lierep(&["construct", "A1+C3+C^6", "--out", f]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = lierep(&["verify", f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "faithful, degree 12\n");
}

fn tamper(path: &Path, f: impl FnOnce(&mut serde_json::Value)) {
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    f(&mut v);
    std::fs::write(path, v.to_string()).unwrap();
}

#[test]
fn verify_rejects_broken_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("rep.json");
    let f = file.to_str().unwrap();
    assert_eq!(lierep(&["construct", "A2+C^1", "--out", f]).status.code(), Some(0));

    tamper(&file, |v| v["basis"][0]["matrix"][0][1] = serde_json::json!("2"));
    assert_eq!(lierep(&["verify", f]).status.code(), Some(3));

    assert_eq!(lierep(&["construct", "A2+C^1", "--out", f]).status.code(), Some(0));
    tamper(&file, |v| {
        let n = v["basis"].as_array().unwrap().len();
        let zero = serde_json::json!([[0, 0, 0], [0, 0, 0], [0, 0, 0]]);
        v["basis"][n - 1]["matrix"] = zero;
    });
    let o = lierep(&["verify", f]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("kernel dimension 1"));

    std::fs::write(&file, "{ not json").unwrap();
    assert_eq!(lierep(&["verify", f]).status.code(), Some(1));
}

#[test]
fn construct_verify_over_gl6() {
    let dir = tempfile::tempdir().unwrap();
    for g in lierep::classify::enumerate_gln(6) {
        if !g.all_classical() {
            continue;
        }
        let file = dir.path().join("r.json");
        let f = file.to_str().unwrap();
        let expr = g.to_string();
        assert_eq!(lierep(&["construct", &expr, "--out", f]).status.code(), Some(0), "{g}");
        let o = lierep(&["verify", f]);
        assert_eq!(o.status.code(), Some(0), "{g}");
        assert_eq!(stdout(&o), format!("faithful, degree {}\n", lierep::invariants::mu(&g)));
    }
}

#[test]
fn enumerate_output() {
    let o = lierep(&["enumerate", "4"]);
    assert_eq!(stdout(&o).lines().count(), 19);
    let o = lierep(&["--json", "enumerate", "1"]);
    let v: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, vec!["C^1"]);
}

#[test]
fn minmatrix_agrees_with_mu() {
    let pool = [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 4), ("C3", 6)];
    for (i, (a, ma)) in pool.iter().enumerate() {
        let o = lierep(&["oracle-minmatrix", a]);
        assert_eq!(o.status.code(), Some(0), "{a}");
        for (b, mb) in &pool[i..] {
            if ma + mb <= 8 {
                let expr = format!("{a}+{b}");
                let o = lierep(&["--json", "oracle-minmatrix", &expr]);
                assert_eq!(o.status.code(), Some(0), "{expr}");
                let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
                assert_eq!(v["min_f"], ma + mb);
            }
        }
    }
}

#[test]
fn weyl_oracle() {
    let o = lierep(&["oracle-weyl", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("G2: min nontrivial degree 7"));
    let o = lierep(&["--json", "oracle-weyl", "B2", "--up-to", "10", "--roots"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([4, 5, 10]));
    assert_eq!(v["roots"]["positive_roots"].as_array().unwrap().len(), 4);
}

#[test]
fn nilbound() {
    assert_eq!(stdout(&lierep(&["nilbound", "6", "3"])), "41\n");
}

#[test]
fn prune_examples() {
    let o = lierep(&["prune", "A1+C^4", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("A1+C^4 in gl_4: proven-impossible"));
    let o = lierep(&["--json", "prune", "A1+C3+C^6", "--degree", "11"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outcome"], "inconclusive");
    assert_eq!(v["excluded"], serde_json::json!(["B5"]));
}

#[test]
fn prune_with_user_tables() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a1.json");
    std::fs::write(&file, r#"{ "host": "A1", "maximals": ["C^1"] }"#).unwrap();
    let f = file.to_str().unwrap();
    let o = lierep(&["prune", "C^3", "--degree", "2", "--tables", f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("proven-impossible"));

    let o = Command::new(env!("CARGO_BIN_EXE_lierep"))
        .args(["prune", "C^3", "--degree", "2"])
        .env("LIEREP_TABLES", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("proven-impossible"));
}
