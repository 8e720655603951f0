use std::io::Write;
use std::process::{Command, Output, Stdio};

fn debruijn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_debruijn"))
        .args(args)
        .env_remove("DEBRUIJN_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn generate_ccr2_order_five() {
    let out = debruijn(&["generate", "--construction", "ccr2", "--n", "5"]);
    assert_eq!(stdout(&out).trim(), "00000111110010011011000101110101");
}

#[test]
fn disc_weight_range_order_ten() {
    let out = debruijn(&["disc", "--construction", "weight-range", "--n", "10"]);
    let line = stdout(&out);
    assert!(line.starts_with("disc=131 "), "{line}");
    let parts: Vec<u64> = line
        .split_whitespace()
        .map(|kv| kv.split('=').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(parts[0], parts[1] + parts[2]);
}

#[test]
fn disc_of_unbalanced_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.txt");
    std::fs::write(&path, "1110\n").unwrap();
    let out = debruijn(&["disc", "--input", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "disc=3 d1=3 d0=0");
}

#[test]
fn lfsr_order_five_m_sequence() {
    let out = debruijn(&["lfsr", "--n", "5", "--poly", "1+x^2+x^5"]);
    assert_eq!(stdout(&out).trim(), "0000101011101100011111001101001");
    let out = debruijn(&["lfsr", "--n", "5", "--taps", "a1^a4", "--debruijn"]);
    assert_eq!(stdout(&out).trim(), "00000101011101100011111001101001");
}

#[test]
fn lfsr_sweep_csv() {
    let out = debruijn(&["lfsr", "--n", "10", "--sweep"]);
    assert_eq!(stdout(&out), "n,min,avg,max,lfsrs\n10,36,41,46,60\n");
}

#[test]
fn generate_then_validate_round_trip() {
    for c in [
        "ccr2",
        "ccr3",
        "pref-same",
        "pref-opposite",
        "prefer-1",
        "weight-range",
    ] {
        let seq = stdout(&debruijn(&["generate", "--construction", c, "--n", "9"]));
        let mut child = Command::new(env!("CARGO_BIN_EXE_debruijn"))
            .args(["validate", "--n", "9", "--input", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(seq.as_bytes())
            .unwrap();
        let out = child.wait_with_output().unwrap();
        let report = stdout(&out);
        assert!(report.contains("de_bruijn=true"), "{c}: {report}");
        assert!(report.contains("golomb=true"), "{c}: {report}");
    }
}

#[test]
fn validate_rejects_non_de_bruijn() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "00110011").unwrap();
    let out = debruijn(&["validate", "--n", "3", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("de_bruijn=false"));
}

#[test]
fn profile_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    let out = debruijn(&[
        "profile",
        "--construction",
        "prefer-1",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "index,diff");
    assert_eq!(lines.len(), 1 + 9);
    assert_eq!(lines[1], "0,0");
    assert_eq!(lines[9], "8,0");
}

#[test]
fn table_one_csv() {
    let out = debruijn(&[
        "table",
        "--which",
        "1",
        "--n-min",
        "10",
        "--n-max",
        "11",
        "--constructions",
        "ccr2,ccr3",
    ]);
    let csv = stdout(&out);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("construction,n,discrepancy,d1,d0"));
    let discs: Vec<&str> = lines.map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(discs, ["13", "14", "13", "15"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(debruijn(&["generate", "--n", "5"]).status.code(), Some(2));
    assert_eq!(
        debruijn(&["generate", "--construction", "nope", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(debruijn(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn module_errors_exit_one_with_message_on_stderr() {
    let out = debruijn(&["generate", "--construction", "prefer-1", "--n", "40"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn env_cap_lowers_maximum_order() {
    let out = Command::new(env!("CARGO_BIN_EXE_debruijn"))
        .args(["generate", "--construction", "ccr2", "--n", "8"])
        .env("DEBRUIJN_MAX_N", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DEBRUIJN_MAX_N=6"));
}
