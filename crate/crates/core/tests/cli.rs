use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twofactor")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn sharpness_passes() {
    let (code, out) = run(&["sharpness"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with("PASS")).count(), 7, "{out}");
}

#[test]
fn verify_small_corpus() {
    let (code, out) = run(&["verify", "--theorem", "main", "--k", "2", "--enumerate", "7", "--connected"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("853"), "{out}");
}

#[test]
fn solve_with_proof_engine() {
    let (_, k6) = run(&["generate", "kab", "3", "3", "--graph6"]);
    let (code, out) = run(&["solve", k6.trim(), "--k", "1", "--mode", "proof"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("C:"), "{out}");
    let (_, out) = run(&["solve", k6.trim(), "--k", "2"]);
    assert_eq!(out.trim(), "none");
}

#[test]
fn bad_input_exits_two() {
    let (code, _) = run(&["invariants", "not graph6!"]);
    assert_eq!(code, 2);
}
