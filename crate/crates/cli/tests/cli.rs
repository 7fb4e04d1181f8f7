use std::process::{Command, Output};

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atlas")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn root_counts() {
    for (name, n) in [("g2", "12"), ("f4", "48"), ("e6", "72"), ("e7", "126"), ("e8", "240")] {
        let o = atlas(&["roots", name, "--count"]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), n);
    }
}

#[test]
fn roots_json_schema() {
    let o = atlas(&["roots", "g2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["name"], "g2");
    assert_eq!(v["rank"], 2);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 12);
    assert!(roots.iter().all(|r| r.as_array().unwrap().len() == 8 && r[0].is_string()));
}

#[test]
fn decompose_json_has_tags() {
    let o = atlas(&["decompose", "f4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 48);
    assert_eq!(roots.iter().filter(|r| r["tag"] == "g0").count(), 6);
}

#[test]
fn tits_dump_schema() {
    let o = atlas(&["tits", "R", "O", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = &v.as_array().unwrap()[0];
    assert!(first["i"].is_u64() && first["j"].is_u64() && first["k"].is_u64() && first["c"].is_string());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(atlas(&["roots", "h9"]).status.code(), Some(2));
    assert_eq!(atlas(&["run-all", "NO-SUCH-CLAIM"]).status.code(), Some(2));
    assert_eq!(atlas(&["run-all", "--perturb", "root:g2:99:1:1"]).status.code(), Some(2));
    assert_eq!(atlas(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn prefix_run_passes() {
    let o = atlas(&["run-all", "G2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("AC01-G2-ROOT-COUNT"));
}

#[test]
fn perturbation_fixture_fails() {
    let o = atlas(&["run-all", "G2", "--perturb", "root:g2:0:5:1/2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  AC02-G2-AXIOMS"));
    let o = atlas(&["run-all", "MAGIC-JACOBI", "--perturb", "const:4:1:0:1:2:1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = atlas(&["octonion-check", "--seed", "7", "--samples", "30"]);
    let b = atlas(&["octonion-check", "--seed", "7", "--samples", "30"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn figures() {
    let dir = std::env::temp_dir().join(format!("atlas-fig-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let draw = |name: &str| {
        let p = dir.join(format!("{name}.svg"));
        assert!(atlas(&["figure", name, "--svg", p.to_str().unwrap()]).status.success());
        std::fs::read_to_string(p).unwrap()
    };
    let e8 = draw("e8");
    assert_eq!(e8, draw("e8"));
    assert_eq!(e8.matches("<circle").count(), 13);
    assert_eq!(e8.matches(">27</text>").count(), 6);
    assert!(e8.contains(">72+8</text>"));
    let g2 = draw("g2");
    assert_eq!(g2.matches("<circle").count(), 12);
    let f4 = draw("f4");
    assert_eq!(f4.matches(">6</text>").count(), 6);
    assert!(draw("c3").contains("Pi-"));
    let _ = std::fs::remove_dir_all(&dir);
}
