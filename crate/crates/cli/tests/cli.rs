use std::path::PathBuf;
use std::process::{Command, Output};

fn rdtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdtool")).args(args).output().expect("rdtool runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name).display().to_string()
}

#[test]
fn rd_of_petersen_is_four() {
    let out = rdtool(&["rd", "--family", "petersen", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn monochromatic_triangle_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.json");
    std::fs::write(&path, r#"{"k":1,"edges":[[0,1,1],[0,2,1],[1,2,1]]}"#).unwrap();
    let out = rdtool(&["verify", "--family", "complete:3", "--coloring", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"valid\":false"));
}

#[test]
fn scan_of_order_six_has_no_violations() {
    let out = rdtool(&["scan", &corpus("connected_n6.g6"), "--workers", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let summary: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(summary["summary"]["graphs"], 112);
    assert_eq!(summary["summary"]["violations"], 0);
    assert_eq!(text.lines().count(), 113);
}

#[test]
fn constructions_reverify() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["petersen", "wheel:7", "grid:3,4", "complete:5"] {
        for method in ["vertex-removal", "three-halves", "min-bound"] {
            for certificate in [false, true] {
                let path = dir.path().join("out.json");
                let mut args = vec!["construct", "--family", family, "--method", method, "-o", path.to_str().unwrap()];
                if certificate {
                    args.push("--certificate");
                }
                assert!(rdtool(&args).status.success(), "{family} {method}");
                let out = rdtool(&["verify", "--family", family, "--coloring", path.to_str().unwrap()]);
                assert!(out.status.success(), "{family} {method}: {}", stdout(&out));
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let path = corpus("connected_n5.g6");
    for args in [
        vec!["scan", path.as_str(), "--workers", "4"],
        vec!["bounds", path.as_str()],
        vec!["construct", "--family", "petersen", "--method", "three-halves", "--certificate"],
    ] {
        let first = stdout(&rdtool(&args));
        assert!(!first.is_empty());
        assert_eq!(first, stdout(&rdtool(&args)));
    }
    let one = stdout(&rdtool(&["scan", path.as_str(), "--workers", "1"]));
    let many = stdout(&rdtool(&["scan", path.as_str(), "--workers", "4"]));
    assert_eq!(one, many);
}

#[test]
fn stdin_and_file_input_agree() {
    use std::io::Write;
    use std::process::Stdio;
    let path = corpus("connected_n4.g6");
    let from_file = stdout(&rdtool(&["rd", path.as_str()]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_rdtool"))
        .args(["rd", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(std::fs::read_to_string(&path).unwrap().as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), from_file);
    assert_eq!(from_file.lines().count(), 6);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(rdtool(&["rd", "/nonexistent.g6"]).status.code(), Some(2));
    assert_eq!(rdtool(&["rd", "--family", "nosuch"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "???\n").unwrap();
    assert_eq!(rdtool(&["rd", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let out = rdtool(&["rd", "--family", "petersen", "--max-edges", "5"]);
    assert_eq!(out.status.code(), Some(3), "{}", stdout(&out));
    assert!(stdout(&out).contains("lower"));
}

#[test]
fn family_emits_graph6() {
    let out = rdtool(&["family", "petersen", "complete:3"]);
    assert_eq!(stdout(&out), "IheA@GUAo\nBw\n");
}
