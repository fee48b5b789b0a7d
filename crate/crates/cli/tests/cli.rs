use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ordram(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordram"))
        .args(args)
        .current_dir(dir)
        .env_remove("ORDRAM_LEDGER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn header(dir: &Path, file: &str) -> String {
    fs::read_to_string(dir.join(file))
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string()
}

#[test]
fn construct_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = ordram(
        d,
        &["construct", "monotone-cycle", "4", "4", "--out", "w.oc"],
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("N 13"));
    assert_eq!(header(d, "w.oc"), "oc 13 2");
    let o = ordram(d, &["construct", "alt-parity", "5", "--out", "p.oc"]);
    assert_eq!(code(&o), 0);
    assert_eq!(header(d, "p.oc"), "oc 7 2");
    let o = ordram(d, &["construct", "star", "2", "2", "--out", "s.oc"]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(d.join("s.oc")).unwrap(), "oc 1 2\n");
}

#[test]
fn construct_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        code(&ordram(d, &["construct", "nonsense", "--out", "x.oc"])),
        2
    );
    let o = ordram(d, &["construct", "alt-parity", "2", "--out", "x.oc"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("`n`"));
    assert!(!d.join("x.oc").exists());
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ordram(
        d,
        &["construct", "monotone-cycle", "4", "4", "--out", "w.oc"],
    );
    let o = ordram(
        d,
        &[
            "verify",
            "w.oc",
            "--avoid",
            "mon-cycle:4:1",
            "--avoid",
            "mon-cycle:4:2",
        ],
    );
    assert_eq!(code(&o), 0);

    fs::write(d.join("red.oc"), "oc 3 2\n1 2 1\n1 3 1\n2 3 1\n").unwrap();
    let o = ordram(d, &["verify", "red.oc", "--avoid", "complete:3:1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("[1, 2, 3]"));

    ordram(d, &["construct", "alt-parity", "6", "--out", "p.oc"]);
    let o = ordram(
        d,
        &[
            "verify",
            "p.oc",
            "--avoid",
            "alt-path:6:1",
            "--avoid",
            "alt-path:6:2",
        ],
    );
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_reads_pattern_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("tri.og"), "og 3 3\n1 2\n1 3\n2 3\n").unwrap();
    fs::write(d.join("red.oc"), "oc 3 2\n1 2 1\n1 3 1\n2 3 1\n").unwrap();
    assert_eq!(
        code(&ordram(
            d,
            &["verify", "red.oc", "--avoid", "file:tri.og:1"]
        )),
        1
    );
    assert_eq!(
        code(&ordram(
            d,
            &["verify", "red.oc", "--avoid", "file:tri.og:2"]
        )),
        0
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code(&ordram(d, &["frobnicate"])), 2);
    assert_eq!(
        code(&ordram(
            d,
            &["verify", "missing.oc", "--avoid", "mon-path:2:1"]
        )),
        3
    );
    fs::write(d.join("bad.oc"), "oc 3 2\n1 2 1\n").unwrap();
    assert_eq!(
        code(&ordram(d, &["verify", "bad.oc", "--avoid", "mon-path:2:1"])),
        2
    );
    fs::write(d.join("ok.oc"), "oc 2 2\n1 2 1\n").unwrap();
    assert_eq!(
        code(&ordram(d, &["verify", "ok.oc", "--avoid", "bogus:1"])),
        2
    );
    assert_eq!(code(&ordram(d, &["bound", "no-such-family"])), 2);
    assert_eq!(code(&ordram(d, &["analyze", "mon-path:x"])), 2);
}

#[test]
fn solve_examples_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let c4b = [
        "solve", "--avoid", "c4:B:1", "--avoid", "c4:B:2", "--ledger", "L",
    ];
    let o = ordram(d, &c4b);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("status exact 10"));
    let again = ordram(d, &c4b);
    assert!(stdout(&again).contains("status exact 10"));
    assert!(stdout(&again).contains("cached"));
    let ledger = fs::read_to_string(d.join("L/results.ledger")).unwrap();
    assert_eq!(ledger.lines().count(), 1);
    assert!(ledger.starts_with("result c1/n4/"));
    assert!(ledger.contains(" N=10 status=exact "));

    let o = ordram(
        d,
        &[
            "solve",
            "--avoid",
            "alt-path:3:1",
            "--avoid",
            "alt-path:3:2",
            "--ledger",
            "L",
        ],
    );
    assert!(stdout(&o).contains("status exact 4"));
    let o = ordram(
        d,
        &[
            "solve",
            "--avoid",
            "mon-path:2:1",
            "--avoid",
            "mon-path:2:2",
            "--ledger",
            "L",
        ],
    );
    assert!(stdout(&o).contains("status exact 2"));

    let forced = ordram(d, &[&c4b[..], &["--force"]].concat());
    assert!(!stdout(&forced).contains("cached"));
    let o = ordram(d, &["ledger", "check", "--ledger", "L"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("checked 4 entries, 0 failed"));
}

#[test]
fn solve_uses_env_ledger_and_reports_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = Command::new(env!("CARGO_BIN_EXE_ordram"))
        .args([
            "solve",
            "--avoid",
            "alt-path:6:1",
            "--avoid",
            "alt-path:6:2",
        ])
        .args(["--max-n", "10"])
        .current_dir(d)
        .env("ORDRAM_LEDGER", d.join("envledger"))
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("status bounds 11 <= R\n"));
    let ledger = fs::read_to_string(d.join("envledger/results.ledger")).unwrap();
    assert!(ledger.contains(" N=11 status=lo "));
}

#[test]
fn ledger_check_flags_bad_witness() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = ordram(
        d,
        &[
            "solve", "--avoid", "c4:B:1", "--avoid", "c4:B:2", "--ledger", "L",
        ],
    );
    assert_eq!(code(&o), 0);
    let witnesses: Vec<_> = fs::read_dir(d.join("L/witnesses")).unwrap().collect();
    assert_eq!(witnesses.len(), 1);
    let path = witnesses[0].as_ref().unwrap().path();
    // all red on 9 vertices contains the 4-cycle
    let mut text = String::from("oc 9 2\n");
    for i in 1..=9 {
        for j in i + 1..=9 {
            text.push_str(&format!("{i} {j} 1\n"));
        }
    }
    fs::write(path, text).unwrap();
    let o = ordram(d, &["ledger", "check", "--ledger", "L"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn bound_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let run = |args: &[&str]| stdout(&ordram(d, args));
    assert!(run(&["bound", "monotone-cycles", "5", "5"]).starts_with("exact 26"));
    assert!(run(&["bound", "probabilistic", "4", "6", "2"]).starts_with("lower 8"));
    assert!(run(&["bound", "hyperpath", "4", "2"]).starts_with("exact 7"));
    assert!(run(&["bound", "list"]).contains("monotone-paths"));
}

#[test]
fn analyze_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let run = |spec: &str| stdout(&ordram(d, &["analyze", spec]));
    let mon = run("mon-path:6");
    assert!(mon.contains("bandwidth 1\n"));
    assert!(mon.contains("degeneracy 1\n"));
    assert!(mon.contains("interval-chromatic-number 6\n"));
    assert!(run("alt-path:8").contains("interval-chromatic-number 2\n"));
    let cyc = run("mon-cycle:5");
    assert!(cyc.contains("degeneracy 2\n"));
    assert!(cyc.contains("bandwidth 4\n"));
    fs::write(d.join("g.og"), "og 3 2\n1 2\n2 3\n").unwrap();
    assert!(run("g.og").contains("pattern mon-path:3\n"));
}

#[test]
fn written_files_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for (name, params) in [
        ("monotone-cycle", vec!["3", "5"]),
        ("alt-parity", vec!["7"]),
        ("path-grid", vec!["3", "4"]),
        ("star-blowup", vec!["3", "2", "3"]),
        ("pentagon", vec![]),
    ] {
        let mut args = vec!["construct", name];
        args.extend(params);
        args.extend(["--out", "out.oc"]);
        assert_eq!(code(&ordram(d, &args)), 0, "{name}");
        let text = fs::read_to_string(d.join("out.oc")).unwrap();
        let parsed = ordram::format::parse_oc(&text).unwrap();
        assert_eq!(ordram::format::write_oc(&parsed), text);
    }
}
