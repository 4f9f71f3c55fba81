use std::process::{Command, Output};

fn hschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hschur")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dims_of_the_end_piece() {
    let o = hschur(&["dims", "-n", "3", "--target", "3", "--source", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn dims_table_is_symmetric() {
    let o = hschur(&["dims", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<u64>> = stdout(&o).lines().map(|l| l.split('\t').skip(1).map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(rows[i][j], rows[j][i]);
        }
    }
    // (1⁴) ← (1⁴) is the group ring of S_4.
    assert_eq!(rows[4][4], 24);
}

#[test]
fn relations_hold() {
    let o = hschur(&["check", "relations", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("all relations hold"));
}

#[test]
fn quiver_presentation() {
    let o = hschur(&["quiver", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for arrow in ["s:", "t:", "p:", "q:", "x:", "y:"] {
        assert!(out.contains(arrow), "{arrow}");
    }
    assert!(out.contains("qp = e_(1^3) + s  [holds]"));
    assert!(out.contains("yx = e_(21) + ptq  [holds]"));
    assert!(!out.contains("FAILS"));
    assert_eq!(hschur(&["quiver", "-n", "4"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["check", "assoc", "-n", "4", "--samples", "20", "--seed", "7"];
    let a = hschur(&args);
    let b = hschur(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn checks_pass() {
    for args in [
        &["check", "oracle", "-n", "3"][..],
        &["check", "oracle", "-n", "5", "--samples", "10"],
        &["check", "schur", "-n", "3"],
        &["check", "stalks", "-n", "6"],
    ] {
        let o = hschur(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn multiply_inline_and_from_file() {
    let q = r#"{"source":"1 2|3","target":"1|2|3","stalks":[{"rep":"1,2,3","character":[["1|1|1",1]]}]}"#;
    let p = r#"{"source":"1|2|3","target":"1 2|3","stalks":[{"rep":"1,2,3","character":[["1|1|1",1]]}]}"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, p).unwrap();
    let o = hschur(&["multiply", "--left", q, "--right", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rewritten = stdout(&o);
    assert!(rewritten.contains(r#""rep":"1,2,3""#) && rewritten.contains(r#""rep":"2,1,3""#));
    let o = hschur(&["multiply", "--left", q, "--right", p, "--oracle"]);
    assert_eq!(stdout(&o), rewritten);
    assert_eq!(hschur(&["multiply", "--left", p, "--right", p]).status.code(), Some(2));
}

#[test]
fn phi_matrix() {
    let o = hschur(&["phi", "--lambda", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(2)⊠(1)"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn export_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r3.json");
    let o = hschur(&["export", "-n", "3", "--reduced", "--mod-p", "5", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["modulus"], 5);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 3);
    assert_eq!(hschur(&["export", "-n", "3", "--mod-p", "6", "--json", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(hschur(&["dims", "-n", "3", "--target", "2,2", "--source", "3"]).status.code(), Some(2));
    assert_eq!(hschur(&["dims", "-n", "3", "--target", "1,2", "--source", "3"]).status.code(), Some(2));
    assert_eq!(hschur(&["dims", "-n", "40"]).status.code(), Some(2));
    assert_eq!(hschur(&["frobnicate"]).status.code(), Some(2));
}
