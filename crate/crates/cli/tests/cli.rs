use std::path::Path;
use std::process::{Command, Output};

use hombimod::io::{load, Object};
use hombimod::{check_module, ModuleKind, Scalar};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hombimod")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn octonions_are_alternative() {
    let out = run(&["check", "algebra", "--builtin", "octonion", "--class", "alternative"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn octonions_are_not_associative() {
    let out = run(&["check", "algebra", "--builtin", "octonion", "--class", "associative"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("FAIL"));
    // witnesses carry the basis labels
    assert!(text.contains("at (i, j, l)"), "{text}");
}

#[test]
fn left_alternativity_holds_in_mat2() {
    let out = run(&["identity", "verify", "alg x y; as(x,x,y)=0", "--builtin", "mat2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["check", "algebra", "--class", "alternative"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["check", "algebra", "--builtin", "octonion", "--class", "lie"])), 2);
    assert_eq!(code(&run(&["check", "algebra", "--builtin", "sedenion", "--class", "jordan"])), 2);
    assert_eq!(code(&run(&["identity", "verify", "alg x; x.", "--builtin", "mat2"])), 2);
}

#[test]
fn json_report_mirrors_the_witnesses() {
    let out = run(&["check", "algebra", "--builtin", "octonion", "--class", "associative", "--json"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], Value::Bool(false));
    let witnesses = v["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 10);
    for w in witnesses {
        assert!(w["identity"].is_string());
        assert_eq!(w["tuple"].as_array().unwrap().len(), 3);
        let defect = w["defect"].as_array().unwrap();
        assert_eq!(defect.len(), 8);
        let parsed: Vec<Scalar> = defect.iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect();
        assert!(parsed.iter().any(|c| !c.is_zero()));
    }

    let all = run(&["check", "algebra", "--builtin", "octonion", "--class", "associative", "--json", "--all-witnesses"]);
    let v: Value = serde_json::from_str(&stdout(&all)).unwrap();
    assert!(v["witnesses"].as_array().unwrap().len() > 10);

    let pass = run(&["check", "bimodule", "--builtin", "regular:octonion", "--kind", "alt-bimodule", "--json"]);
    assert_eq!(code(&pass), 0);
    let v: Value = serde_json::from_str(&stdout(&pass)).unwrap();
    assert_eq!(v["ok"], Value::Bool(true));
    assert!(v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn corrupted_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("o.json");
    assert_eq!(code(&run(&["corpus", "emit", "octonion", "--out", path(&file)])), 0);
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    doc["mul"][0][0][0] = Value::String("one".into());
    std::fs::write(&file, doc.to_string()).unwrap();
    let out = run(&["check", "algebra", "--file", path(&file), "--class", "alternative"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn constructions_write_loadable_objects() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);

    let out = run(&["construct", "plus", "--builtin", "octonion", "--out", path(&p("plus.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["check", "algebra", "--file", path(&p("plus.json")), "--class", "jordan"])), 0);

    let out = run(&[
        "construct", "twist", "--builtin", "regular:octonion", "--map", "octonion-flip", "--vmap", "octonion-flip", "--out",
        path(&p("tw.json")),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&[
        "construct", "shift", "--file", path(&p("tw.json")), "--n", "2", "--class", "alternative", "--out",
        path(&p("shift.json")),
    ]);
    assert_eq!(code(&out), 0);
    match load(&p("shift.json")).unwrap() {
        Object::Bimodule(v) => assert!(check_module(&v, ModuleKind::AltBimodule).ok()),
        other => panic!("expected a bimodule, got {}", other.kind()),
    }

    let out = run(&["construct", "split-null", "--builtin", "regular:sym2-jordan", "--class", "jordan", "--out", path(&p("e.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["check", "algebra", "--file", path(&p("e.json")), "--class", "jordan"])), 0);

    let out = run(&["construct", "plus-bimodule", "--builtin", "regular:mat2", "--out", path(&p("pb.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["check", "bimodule", "--file", path(&p("pb.json")), "--kind", "jordan-bimodule"])), 0);

    let out = run(&["construct", "regular", "--builtin", "quaternion", "--out", path(&p("reg.json"))]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["check", "bimodule", "--file", path(&p("reg.json")), "--kind", "assoc-bimodule"])), 0);
}

#[test]
fn failed_hypotheses_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("x.json");
    let out = run(&["construct", "plus-bimodule", "--builtin", "regular:octonion", "--out", path(&out_path)]);
    assert_eq!(code(&out), 1);
    assert!(!out_path.exists());
    let missing = run(&["construct", "shift", "--builtin", "regular:octonion", "--out", path(&out_path)]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn module_identities_on_the_command_line() {
    let out = run(&["identity", "verify", "alg x; mod v; as(v, x, x) = 0", "--builtin", "regular:octonion"]);
    assert_eq!(code(&out), 0);
    let out = run(&["identity", "verify", "alg x; mod v; as(v, x, x) = 0", "--builtin", "octonion", "--module", "regular:octonion"]);
    assert_eq!(code(&out), 0);
    let out = run(&["identity", "verify", "alg x; mod v; as(v, x, x) = 0", "--builtin", "octonion"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corpus_list_and_search() {
    let list = stdout(&run(&["corpus", "list"]));
    for name in ["mat2", "octonion", "sym2-jordan", "octonion-flip", "regular:"] {
        assert!(list.contains(name), "{name}");
    }
    let out = run(&["search", "endos", "--builtin", "octonion", "--entries", "-1,1", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["diagonals"].as_array().unwrap().len(), 8);
    let out = run(&["search", "endos", "--builtin", "octonion", "--entries", "-2,-1,1,2"]);
    assert_eq!(code(&out), 2);
}
