use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

fn knotspan() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_knotspan"));
    cmd.env_remove("KNOTSPAN_CACHE");
    cmd
}

fn run(args: &[&str]) -> Output {
    knotspan().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn knots(c: usize) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../../data/knots/c{c:02}.pd")).display().to_string()
}

fn write_pd(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("in.pd");
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn jones_of_bare_pd_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, &format!("{TREFOIL}\n"));
    let o = run(&["jones", &f]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("t^-1 + t^-3 - t^-4"), "{}", stdout(&o));
}

#[test]
fn bracket_reads_stdin_and_emits_json() {
    let mut child = knotspan()
        .args(["--json", "bracket", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(format!("tre : {TREFOIL}\n").as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["name"], "tre");
}

#[test]
fn every_single_diagram_command_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, &format!("tre : {TREFOIL}\n"));
    for cmd in ["bracket", "jones", "kauffman", "states", "adequacy", "turaev-genus", "decompose", "extremal"] {
        for json in [false, true] {
            let mut args = vec![cmd, f.as_str()];
            if json {
                args.insert(0, "--json");
            }
            let o = run(&args);
            assert!(o.status.success(), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
            assert!(!o.stdout.is_empty(), "{cmd}");
        }
    }
}

#[test]
fn turaev_genus_of_trefoil_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, &format!("tre : {TREFOIL}\n"));
    let o = run(&["--json", "turaev-genus", &f]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 0);
}

#[test]
fn invalid_pd_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, "bad : X[1,2,3]\n");
    let o = run(&["jones", &f]);
    assert!(!o.status.success());
    assert!(!o.stderr.is_empty());
}

#[test]
fn max_crossings_is_enforced() {
    let o = run(&["--max-crossings", "8", "bracket", &knots(10)]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-crossings"));
    assert!(run(&["--max-crossings", "10", "bracket", &knots(10)]).status.success());
}

#[test]
fn verify_span_equivalence_on_ten_crossings() {
    let o = run(&["verify", "--theorem", "span-equivalence", &knots(10)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let lines: Vec<serde_json::Value> =
        stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 165);
    assert_eq!(lines.iter().filter(|r| r["status"] == "adequate-genus-one").count(), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("3 with span V = c - 1"));
}

#[test]
fn verify_other_checks_with_csv() {
    let dir = tempfile::tempdir().unwrap();
    for check in ["kauffman-span", "genus-one-degrees", "unit-extremes"] {
        let csv = dir.path().join(format!("{check}.csv"));
        let o = run(&["verify", "--theorem", check, &knots(10), "--csv", csv.to_str().unwrap()]);
        assert!(o.status.success(), "{check}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(std::fs::read_to_string(&csv).unwrap().lines().count() >= 2, "{check}");
    }
}

#[test]
fn non_minimal_declaration_is_an_error() {
    // Declared c=4 but the diagram has three crossings.
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, &format!("liar c=4 : {TREFOIL}\n"));
    let o = run(&["verify", "--theorem", "span-equivalence", &f]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn violation_exits_with_code_two() {
    // A non-minimal 5-crossing closure whose Jones span is c - 1 although the
    // diagram is not adequate; without a c= annotation it is checked as is.
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, "X[3,2,4,1] X[4,2,5,1] X[8,6,9,5] X[6,10,7,9] X[10,8,3,7]\n");
    let o = run(&["verify", "--theorem", "span-equivalence", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("VIOLATION"));
}

#[test]
fn unreadable_corpus_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, "nothing here\n");
    assert_eq!(run(&["verify", "--theorem", "span-equivalence", &f]).status.code(), Some(1));
}

#[test]
fn scan_table_counts() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/knots");
    let o = run(&["scan-table1", dir.to_str().unwrap(), "--c", "10,11"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "10\t3\n11\t15\n");
}

#[test]
fn random_is_deterministic_and_parses_back() {
    let a = run(&["random", "--seed", "42", "--width", "4", "--length", "9"]);
    let b = run(&["random", "--seed", "42", "--width", "4", "--length", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let f = write_pd(&dir, &stdout(&a));
    assert!(run(&["bracket", &f]).status.success());
    assert!(!run(&["random", "--seed", "1", "--width", "1", "--length", "3"]).status.success());
}

#[test]
fn concurrent_runs_share_one_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let spawn = || {
        knotspan()
            .env("KNOTSPAN_CACHE", &cache)
            .args(["--json", "kauffman", &knots(9)])
            .stdout(Stdio::piped())
            .spawn()
            .unwrap()
    };
    let (a, b) = (spawn(), spawn());
    let (a, b) = (a.wait_with_output().unwrap(), b.wait_with_output().unwrap());
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);

    // Every appended record is a whole JSON line, whatever the interleaving.
    let text = std::fs::read_to_string(&cache).unwrap();
    let records: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(records.len() >= 49);

    // A third run is served from the cache and adds nothing.
    let c = knotspan().env("KNOTSPAN_CACHE", &cache).args(["--json", "kauffman", &knots(9)]).output().unwrap();
    assert_eq!(c.stdout, a.stdout);
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), records.len());
}
