use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn quadflip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadflip"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name].iter().collect();
    p.display().to_string()
}

fn temp_json(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn hodge_examples() {
    let o = quadflip(&["hodge", "hilb2", "--builtin", "quartic-double-solid", "--column"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2 4 104 4 2 1\n");

    let o = quadflip(&["hodge", "hh0", "--builtin", "f1-quartic-double-solid"]);
    assert_eq!(stdout(&o), "222\n");

    let sym = quadflip(&["hodge", "sym2", "--builtin", "p1", "--json"]);
    let p2 = quadflip(&["hodge", "show", "--builtin", "p2", "--json"]);
    assert_eq!(stdout(&sym), stdout(&p2));
}

#[test]
fn expect_flag_sets_exit_code() {
    let args = ["hodge", "hh0", "--builtin", "quartic-double-solid", "--expect"];
    let o = quadflip(&[&args[..], &["4"]].concat());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = quadflip(&[&args[..], &["5"]].concat());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(expected 5)"));
}

#[test]
fn fano_examples() {
    let o = quadflip(&["fano", "dims", "--family", "gr25", "--n", "5"]);
    assert_eq!(stdout(&o), "(6, 4, 3, 0)\n");

    let o = quadflip(&["fano", "codim", "--family", "cubic", "--grid"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));

    let o = quadflip(&["fano", "splittings", "--n", "2", "--brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1 splitting type\nO(-1)\n"));

    let o = quadflip(&["fano", "classify", "--family", "gr25", "--n", "6", "--k", "2"]);
    assert_eq!(stdout(&o), "disjoint-union\n");

    let o = quadflip(&["fano", "taut", "--d", "-1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sod_examples() {
    let o = quadflip(&["sod", "conjecture-consistency", "--n-odd-max", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("n = 3   skipped"));
    assert!(text.contains("PASS n = 15"));

    let o = quadflip(&["sod", "obstruction", "--builtin", "quartic-double-solid"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("OBSTRUCTED (222 > 118)"));

    let o = quadflip(&["sod", "obstruction", "--builtin", "quartic-double-solid", "--expect", "inconclusive"]);
    assert_eq!(o.status.code(), Some(1));

    let o = quadflip(&["sod", "check", &example("degree2-surface.sod")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("INCONCLUSIVE (56 <= 65)"));

    let o = quadflip(&["sod", "check", &example("two-quadrics-5fold.sod")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn motive_examples() {
    let o = quadflip(&["motive", "check", &example("quartic-double-solid.mot")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = quadflip(&["motive", "eval", "Hilb2(2, 1 + L + L^2)"]);
    assert_eq!(stdout(&o), "1 + 2*L + 3*L^2 + 2*L^3 + L^4\n");
}

#[test]
fn failing_script_exits_one() {
    let f = temp_json("expect Sym2({Dpt:10}) == {Dpt:56}\n");
    let o = quadflip(&["sod", "check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL line 1"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(quadflip(&[]).status.code(), Some(2));
    assert_eq!(quadflip(&["hodge", "hh0"]).status.code(), Some(2));
    assert_eq!(quadflip(&["hodge", "hh0", "--builtin", "nothing"]).status.code(), Some(2));
    assert_eq!(quadflip(&["fano", "dims", "--family", "quintic", "--n", "3"]).status.code(), Some(2));
    assert_eq!(quadflip(&["motive", "eval", "1 +"]).status.code(), Some(2));

    let bad = temp_json(r#"{"dim": 1, "entries": [[0,0,1],[1,0,1],[1,1,1]]}"#);
    let path = bad.path().to_str().unwrap();
    assert_eq!(quadflip(&["hodge", "hh0", "--diamond", path]).status.code(), Some(2));
    let o = quadflip(&["hodge", "hh0", "--diamond", path, "--raw"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");

    let script = temp_json("expect {Dpt:1 == 2\n");
    let o = quadflip(&["sod", "check", script.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at 1:15"));
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let a = quadflip(&["verify-all"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).ends_with(" 0 failed\n"));
    let b = quadflip(&["verify-all"]);
    assert_eq!(a.stdout, b.stdout);

    let j = quadflip(&["verify-all", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.iter().all(|r| r["pass"] == true));
    let keys: Vec<&String> = reports[0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["computed", "expected", "inputs", "name", "pass", "provenance"]);
}

#[test]
fn corrupted_builtin_names_the_failing_check() {
    // h^{1,2} raised from 10 to 11
    let bad = temp_json(r#"{"dim":3,"entries":[[0,0,1],[1,1,1],[1,2,11],[2,1,11],[2,2,1],[3,3,1]]}"#);
    let arg = format!("quartic-double-solid={}", bad.path().display());
    let o = quadflip(&["verify-all", "--override-builtin", &arg]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL c1 hilb2 column"));
    assert!(text.contains("FAIL c1 hilb2 hh0"));

    let broken = temp_json("{");
    let arg = format!("f1-quartic-double-solid={}", broken.path().display());
    let o = quadflip(&["verify-all", "--criterion", "2", "--override-builtin", &arg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL c2 load f1-quartic-double-solid"));
}

#[test]
fn no_color_by_default_off_terminal() {
    let o = Command::new(env!("CARGO_BIN_EXE_quadflip"))
        .args(["sod", "conjecture-consistency"])
        .env_remove("NO_COLOR")
        .output()
        .unwrap();
    assert!(!stdout(&o).contains('\x1b'));
}

#[test]
fn builtins_listing() {
    let text = stdout(&quadflip(&["builtins"]));
    for name in ["point", "p1", "p2", "quartic-double-solid", "f1-quartic-double-solid", "curve-<g>"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}
