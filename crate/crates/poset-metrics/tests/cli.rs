//! End-to-end checks of the `posets` binary: file round-trips, exit codes,
//! and JSON stability.

use std::path::Path;
use std::process::{Command, Output};

fn posets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posets")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_render_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["chain:5", "antichain:3", "boolean:3", "grid:3x4", "pentagon", "prop4-witness", "chebyshev-witness", "random:8:0.3:42"] {
        let out = posets(&["gen", family]);
        assert!(out.status.success(), "{family}");
        let text = stdout(&out);
        // parse it back and re-render through the check/gen pipeline
        let file = write(dir.path(), "roundtrip.txt", &text);
        let reparsed = posets(&["gen", family, "-o", &file]);
        assert!(reparsed.status.success());
        assert_eq!(std::fs::read_to_string(&file).unwrap(), text, "{family}");
    }
}

#[test]
fn check_reports_pentagon_fails_jordan_dedekind() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p.txt", "");
    assert!(posets(&["gen", "pentagon", "-o", &file]).status.success());
    let out = posets(&["--json", "check", &file]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["jordan_dedekind"], false);
    assert_eq!(v["lattice"], true);
    assert_eq!(v["connected"], true);
}

#[test]
fn metric_violation_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "w.txt", "");
    assert!(posets(&["gen", "prop4-witness", "-o", &file]).status.success());
    let out = posets(&["metric", &file, "--kind", "updown"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("3 > 2"));
    let ok = posets(&["metric", &file, "--kind", "zigzag"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "a < b <\n");
    assert_eq!(posets(&["check", &bad]).status.code(), Some(2));
    let cyclic = write(dir.path(), "cyc.txt", "a < b\nb < a\n");
    assert_eq!(posets(&["check", &cyclic]).status.code(), Some(2));
    let good = write(dir.path(), "good.txt", "a < b\n");
    assert_eq!(posets(&["dist", &good, "--kind", "zigzag", "a", "nope"]).status.code(), Some(2));
    assert_eq!(posets(&["gen", "chain:0"]).status.code(), Some(2));
    assert_eq!(posets(&["enumerate", "--n", "9"]).status.code(), Some(2));
    // chebyshev undefined on a pair with no join
    let anti = write(dir.path(), "anti.txt", "element u\nelement v\n");
    assert_eq!(posets(&["dist", &anti, "--kind", "chebyshev", "u", "v"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    // propositions hold: exit 0
    let out = posets(&["verify", "--prop", "P3", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    // counterexample search succeeds: exit 1 (counterexample found)
    let out = posets(&["verify", "--prop", "cheb-search", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(1));
    // nothing found below n=6: exit 0
    let out = posets(&["verify", "--prop", "cheb-search", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compat_and_chains_commands() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p.txt", "");
    assert!(posets(&["gen", "pentagon", "-o", &file]).status.success());
    let chains = posets(&["chains", &file]);
    assert!(chains.status.success());
    assert_eq!(stdout(&chains), "0 < a < 1\n0 < b < c < 1\n");
    let compat = posets(&["compat", &file, "--kind", "zigzag"]);
    assert_eq!(compat.status.code(), Some(1));
    let chain_file = write(dir.path(), "c.txt", "");
    assert!(posets(&["gen", "chain:5", "-o", &chain_file]).status.success());
    for kind in ["zigzag", "updown", "downup", "chebyshev"] {
        assert_eq!(posets(&["compat", &chain_file, "--kind", kind]).status.code(), Some(0));
    }
}

#[test]
fn json_output_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p.txt", "");
    assert!(posets(&["gen", "boolean:3", "-o", &file]).status.success());
    for args in [
        vec!["--json", "check", &file],
        vec!["--json", "metric", &file, "--kind", "chebyshev"],
        vec!["--json", "enumerate", "--n", "5", "--count-only"],
        vec!["--json", "verify", "--prop", "P2", "--max-n", "4"],
    ] {
        let a = posets(&args);
        let b = posets(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        // and it parses as JSON
        serde_json::from_str::<serde_json::Value>(&stdout(&a)).unwrap();
    }
}

#[test]
fn gen_seed_override() {
    let with_flag = posets(&["gen", "random:8:0.3:0", "--seed", "42"]);
    let baked_in = posets(&["gen", "random:8:0.3:42"]);
    assert_eq!(with_flag.stdout, baked_in.stdout);
}

#[test]
fn kinship_command() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(dir.path(), "fam.txt", "ego < p\nsib < p\n");
    let out = posets(&["kinship", &fam, "--method", "canon", "ego", "sib"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
    let out = posets(&["kinship", &fam, "--method", "civil", "ego", "sib"]);
    assert_eq!(stdout(&out).trim(), "2");
    // not a tree order: exit 2
    let square = write(dir.path(), "sq.txt", "bot < l\nbot < r\nl < top\nr < top\n");
    assert_eq!(posets(&["kinship", &square, "--method", "canon", "l", "r"]).status.code(), Some(2));
}
