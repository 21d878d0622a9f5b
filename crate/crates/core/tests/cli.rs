//! End-to-end checks of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wdrd"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wdrd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_then_attached_pipeline() {
    let digraph = scratch("c6.digraph");
    let out = bin()
        .args(["generate", "cycle", "6", "-o"])
        .arg(&digraph)
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = bin().args(["attached", "-i"]).arg(&digraph).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("6 5\n"));
    assert!(text.contains("labels: (0,0) (1,5) (2,4) (3,3) (4,2) (5,1)"));
}

#[test]
fn attached_reports_violation_with_exit_zero() {
    let digraph = scratch("z6-13.digraph");
    let mut body = String::from("6\n");
    for v in 0..6 {
        body.push_str(&format!("{v} {}\n{v} {}\n", (v + 1) % 6, (v + 3) % 6));
    }
    std::fs::write(&digraph, body).unwrap();

    let out = bin().args(["attached", "-i"]).arg(&digraph).output().unwrap();
    assert!(out.status.success(), "violation is a verdict, not a fault");
    let text = stdout(&out);
    assert!(text.starts_with("not weakly distance-regular"));
    assert!(text.contains("pair_a=(0,2) pair_b=(0,4) count_a=1 count_b=0"));
}

#[test]
fn check_ppoly_discovers_ordering() {
    let digraph = scratch("c6b.digraph");
    let scheme = scratch("c6b.scheme");
    bin().args(["generate", "cycle", "6", "-o"]).arg(&digraph).output().unwrap();
    bin()
        .args(["attached", "-i"])
        .arg(&digraph)
        .arg("-o")
        .arg(&scheme)
        .output()
        .unwrap();

    let out = bin().args(["check-ppoly", "-i"]).arg(&scheme).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("p_polynomial: true"));
    assert!(text.contains("ordering: 1,2,3,4,5"));
    assert!(text.contains("type: short"));
    assert!(text.contains("case=iii positions=1,2"));
}

#[test]
fn check_ppoly_rejects_bad_ordering() {
    let digraph = scratch("c6c.digraph");
    let scheme = scratch("c6c.scheme");
    bin().args(["generate", "cycle", "6", "-o"]).arg(&digraph).output().unwrap();
    bin()
        .args(["attached", "-i"])
        .arg(&digraph)
        .arg("-o")
        .arg(&scheme)
        .output()
        .unwrap();

    let out = bin()
        .args(["check-ppoly", "--ordering", "2,4,1,3,5", "-i"])
        .arg(&scheme)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("p_polynomial: false"));
}

#[test]
fn verify_theorem_on_lex_product() {
    let base = scratch("c4.digraph");
    let digraph = scratch("lex42.digraph");
    let scheme = scratch("lex42.scheme");
    bin().args(["generate", "cycle", "4", "-o"]).arg(&base).output().unwrap();
    bin()
        .args(["generate", "lexprod", "2", "empty", "-i"])
        .arg(&base)
        .arg("-o")
        .arg(&digraph)
        .output()
        .unwrap();
    bin()
        .args(["attached", "-i"])
        .arg(&digraph)
        .arg("-o")
        .arg(&scheme)
        .output()
        .unwrap();

    let out = bin().args(["verify-theorem", "-i"]).arg(&scheme).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("VERDICT\nmatch\n"), "unexpected report:\n{text}");
    assert!(text.contains("case=iv"));
}

#[test]
fn check_lemmas_reports_gate() {
    let digraph = scratch("c7.digraph");
    let scheme = scratch("c7.scheme");
    bin().args(["generate", "cycle", "7", "-o"]).arg(&digraph).output().unwrap();
    bin()
        .args(["attached", "-i"])
        .arg(&digraph)
        .arg("-o")
        .arg(&scheme)
        .output()
        .unwrap();

    let out = bin().args(["check-lemmas", "-i"]).arg(&scheme).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.ends_with("hypothesis_not_met")));
}

#[test]
fn parse_faults_exit_nonzero() {
    let bad = scratch("bad.digraph");
    std::fs::write(&bad, "3\n0 0\n").unwrap();
    let out = bin().args(["attached", "-i"]).arg(&bad).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let missing = scratch("does-not-exist");
    let out = bin().args(["attached", "-i"]).arg(&missing).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn enumeration_cap_is_a_fault() {
    let digraph = scratch("c6d.digraph");
    let scheme = scratch("c6d.scheme");
    bin().args(["generate", "cycle", "6", "-o"]).arg(&digraph).output().unwrap();
    bin()
        .args(["attached", "-i"])
        .arg(&digraph)
        .arg("-o")
        .arg(&scheme)
        .output()
        .unwrap();

    let out = bin()
        .args(["enumerate-unions", "--max-d", "3", "-i"])
        .arg(&scheme)
        .output()
        .unwrap();
    assert!(!out.status.success());

    let out = bin()
        .args(["enumerate-unions", "--jobs", "2", "-i"])
        .arg(&scheme)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("positions=1,2\n"));
}
