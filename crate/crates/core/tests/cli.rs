use std::path::PathBuf;
use std::process::{Command, Output};

use brown_kervaire::classify::ClassificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brown-kervaire")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn write(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn adem() {
    assert_eq!(stdout(&["adem", "normalize", "Sq2 Sq2"]), "Sq3 Sq1");
    assert_eq!(stdout(&["adem", "mul", "Sq1", "Sq2 Sq1"]), "Sq3 Sq1");
    assert_eq!(stdout(&["adem", "chi", "Sq4"]), "Sq4 + Sq3 Sq1");
    assert_eq!(stdout(&["adem", "phi-relation", "--n", "4"]), "0");
    assert_eq!(stdout(&["adem", "psi-relation", "--n", "2"]), "raw: Sq4 Sq1\nreduced: 0");
    assert_eq!(stdout(&["adem", "oracle", "Sq1", "--vars", "2"]), "x1^2 x2 + x1 x2^2");
}

#[test]
fn homotopy() {
    assert_eq!(stdout(&["homotopy", "em", "--n", "10", "--group", "Z+Z2"]), "Z4 + Z2^2");
    assert_eq!(stdout(&["homotopy", "cross", "Z", "Z4"]), "Z2");
    assert_eq!(stdout(&["homotopy", "so", "--n", "6"]), "0");
    assert_eq!(stdout(&["homotopy", "split-check", "Z4", "Z4", "--n", "7"]), "true");
}

#[test]
fn forms() {
    let a = write("a.json", r#"{"group":"Z","mu":[[0]],"phi":["1/4"]}"#);
    let b = write("b.json", r#"{"group":"Z","mu":[[0]],"phi":["3/4"]}"#);
    let c = write("c.json", r#"{"group":"Z","mu":[[0]],"phi":["1/2"]}"#);
    let q = write("q.json", r#"{"values":[1,1],"cross":[[0,1],[1,0]]}"#);
    assert_eq!(stdout(&["forms", "verify", &a]), "true");
    assert_eq!(stdout(&["forms", "eval", &a, "--at", "3"]), "3/4");
    assert_eq!(stdout(&["forms", "isometric", &a, &b]), "true");
    assert_eq!(stdout(&["forms", "isometric", &a, &c]), "false");
    assert_eq!(stdout(&["forms", "witt", &a, &b]), "true");
    assert_eq!(stdout(&["forms", "arf", &q]), "1");
    let gauss = stdout(&["forms", "gauss", &c]);
    assert!(gauss.ends_with("sum: 0"), "{gauss}");
}

#[test]
fn classify() {
    let text = stdout(&["classify", "enumerate", "--group", "Z", "--n", "10"]);
    assert!(text.contains("count: 3"), "{text}");
    assert_eq!(text, stdout(&["classify", "enumerate", "--group", "Z", "--n", "10"]));
    let json = stdout(&["classify", "enumerate", "--group", "Z2", "--n", "8", "--json"]);
    let report = ClassificationReport::from_json(&json).unwrap();
    assert_eq!(report.count, 4);
    assert_eq!(report.to_json(), json);
}

#[test]
fn exit_codes() {
    let out = run(&["adem", "normalize", "Sq0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(run(&["classify", "enumerate", "--group", "Z^8", "--n", "8"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "enumerate", "--group", "Z", "--n", "8", "--max-size", "2"]).status.code(), Some(1));
    assert_eq!(run(&["adem", "phi-relation", "--n", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["forms", "verify", "/nonexistent.json"]).status.code(), Some(1));
    assert_eq!(run(&["adem"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "enumerate", "--group", "Z", "--n", "x"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "enumerate", "--group", "Z", "--n", "8", "--delta", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
