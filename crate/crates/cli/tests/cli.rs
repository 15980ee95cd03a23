use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

fn sepcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepcx")).args(args).env_remove("SEPCX_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_fvector() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ss4.json");
    let b = sepcx(&["build", "--n", "4", "--relation", "ss", "--out", path_str(&file)]);
    assert_eq!(b.status.code(), Some(0));
    let f = sepcx(&["fvector", path_str(&file)]);
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(stdout(&f), "8 16 8\n");
    let ws = sepcx(&["fvector", "--n", "4", "--relation", "ws"]);
    assert_eq!(stdout(&ws), "8 17 10\n");
}

#[test]
fn exported_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ws5.json");
    sepcx(&["build", "--n", "5", "--relation", "ws", "--out", path_str(&file)]);
    let from_file = sepcx(&["homology", path_str(&file), "--format", "json"]);
    let direct = sepcx(&["homology", "--n", "5", "--relation", "ws", "--format", "json"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&direct));
    let v: serde_json::Value = serde_json::from_str(&stdout(&direct)).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([22, 151, 452, 658, 460, 124]));

    // a sub-complex written out is itself loadable
    let link = dir.path().join("link.json");
    let l = sepcx(&["link", path_str(&file), "--face", "15,234", "--format", "json", "--out", path_str(&link)]);
    assert_eq!(l.status.code(), Some(0));
    assert_eq!(stdout(&sepcx(&["fvector", path_str(&link)])), "14 54 76 34\n");
}

#[test]
fn homology_text_output() {
    let o = sepcx(&["homology", "--n", "5", "--relation", "ss"]);
    assert_eq!(stdout(&o), "H~0 = 0\nH~1 = 0\nH~2 = Z\nH~3 = 0\nH~4 = 0\nH~5 = 0\n");
}

#[test]
fn free_form_labels_are_matched_literally() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("square.json");
    let square = r#"{"vertices":["a","b","c","d"],"facets":[[0,1],[1,2],[2,3],[0,3]]}"#;
    std::fs::write(&file, square).unwrap();
    let o = sepcx(&["link", path_str(&file), "--face", "a"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "f-vector (2)\n{b}\n{d}\n");
}

#[test]
fn verify_passes() {
    for name in ["complementary-extensions", "chain-condition", "pi-properties", "equivariance", "cross-polytope"] {
        let o = sepcx(&["verify", name, "--n", "5"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains(": PASS"));
        assert!(!stdout(&o).contains("FAIL\n"));
    }
    for name in ["ws-cover", "star-cover", "boundary-study"] {
        let o = sepcx(&["verify", name, "--n", "5"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
    assert_eq!(sepcx(&["verify", "boundary-study", "--n", "4"]).status.code(), Some(2));
    let o = sepcx(&["verify", "complementary-extensions", "--n", "5"]);
    assert!(stdout(&o).starts_with("faces of ss5 with pi' empty = 0 : PASS"));
}

#[test]
fn reproduce_small_is_fast_green_and_stable() {
    let start = Instant::now();
    let a = sepcx(&["reproduce-paper", "--n", "4"]);
    assert!(start.elapsed() < Duration::from_secs(5));
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains(" 0 FAIL"));
    let b = sepcx(&["reproduce-paper", "--n", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let j1 = sepcx(&["reproduce-paper", "--n", "4", "--format", "json"]);
    let j2 = sepcx(&["reproduce-paper", "--n", "4", "--format", "json"]);
    assert_eq!(j1.stdout, j2.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&j1.stdout).unwrap();
    assert!(parsed["checks"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn reproduce_five_reports_boundary_rank() {
    let o = sepcx(&["reproduce-paper", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H~3(boundary ss5) = Z^9 : PASS"));
}

#[test]
fn exit_codes() {
    assert_eq!(sepcx(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sepcx(&["fvector"]).status.code(), Some(2));
    assert_eq!(sepcx(&["fvector", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(sepcx(&["build", "--n", "4", "--relation", "xs"]).status.code(), Some(2));
    assert_eq!(sepcx(&["link", "--n", "4", "--relation", "ss", "--face", "999"]).status.code(), Some(2));
    assert_eq!(sepcx(&["build", "--n", "8", "--relation", "ss"]).status.code(), Some(3));
    assert_eq!(sepcx(&["build", "--n", "5", "--relation", "ss", "--cap", "4"]).status.code(), Some(3));
    assert_eq!(sepcx(&["boundary", "--n", "6", "--relation", "ss"]).status.code(), Some(3));
    assert_eq!(sepcx(&["reproduce-paper", "--n", "8"]).status.code(), Some(3));
    let env_cap = Command::new(env!("CARGO_BIN_EXE_sepcx"))
        .args(["fvector", "--n", "5", "--relation", "ss"])
        .env("SEPCX_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(env_cap.status.code(), Some(3));
}

#[test]
fn boundary_of_a_triangle_is_its_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.json");
    std::fs::write(&tri, r#"{"vertices":["x","y","z"],"facets":[[0,1,2]]}"#).unwrap();
    let o = sepcx(&["boundary", path_str(&tri)]);
    assert_eq!(stdout(&o), "f-vector (3,3)\n{x,y}\n{x,z}\n{y,z}\n");
}
