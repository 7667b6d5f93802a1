use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TWO: &str = "\
graph Two
  object a
  object b
  arrow u : a -> b
end
category One
  object x
end
category Empty
end
functor p : One -> Two
  object x |-> a
end
functor bang : Two -> One
  object a |-> x
  object b |-> x
  arrow u |-> id_x
end
functor e : Empty -> One
end
";

fn laxorth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laxorth")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, src: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, src).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_lists_definitions() {
    let dir = TempDir::new().unwrap();
    let two = write(&dir, "two.txt", TWO);
    let o = laxorth(&["validate", s(&two)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("category Two: 2 objects, 1 non-identity arrow\n"), "{out}");
    assert!(out.contains("functor bang: Two -> One"));
}

#[test]
fn validate_reports_line_numbers() {
    let dir = TempDir::new().unwrap();
    let missing = write(&dir, "m.txt", "category C\n  object a\n  object b\n  arrow u : a -> b\n  arrow v : b -> a\nend\n");
    let o = laxorth(&["validate", s(&missing)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("line 1: missing composite u o v"), "{}", stdout(&o));

    let dup = write(&dir, "d.txt", "category C\n  object a\n  arrow u : a -> a\n  arrow u : a -> a\nend\n");
    let o = laxorth(&["validate", s(&dup)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL parse and validate") && out.contains("line 4:"), "{out}");
}

#[test]
fn factor_with_each_handle() {
    let dir = TempDir::new().unwrap();
    let two = write(&dir, "two.txt", TWO);
    let o = laxorth(&["factor", "--handle", "coropf", "--morphism", "p", "--input", s(&two)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Kf: 2 objects, 3 arrows"), "{out}");
    assert!(out.contains("object (x|id_a|a)") && out.contains("object (x|u|b)"));

    let o = laxorth(&["factor", "--handle", "init-completion", "--morphism", "e", "--input", s(&two)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Kf: 1 objects, 1 arrows"));

    let o = laxorth(&["factor", "--handle", "reflection:chain", "--morphism", "0<=1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Lf = 0<=1") && out.contains("Rf = id_1"), "{out}");

    let o = laxorth(&["factor", "--handle", "coropf", "--morphism", "nope", "--input", s(&two)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown functor `nope`"));
}

#[test]
fn check_suites() {
    let dir = TempDir::new().unwrap();
    let two = write(&dir, "two.txt", TWO);
    let o = laxorth(&["check", "--handle", "coropf", "--suite", "laws,kz", "--corpus", s(&two)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS monad KZ implies comonad KZ [coropf]"));

    let o = laxorth(&["check", "--handle", "init-completion", "--suite", "thm7,fibres,simplicity", "--corpus", s(&two)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = laxorth(&["check", "--handle", "reflection:chain", "--suite", "prop3,laws"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS simplicity matches T-Iso coreflectivity [chain]"));

    let o = laxorth(&["check", "--handle", "reflection:split-product", "--suite", "prop3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("UNSUPPORTED"));

    let o = laxorth(&["check", "--handle", "coropf", "--suite", "orthogonality", "--corpus", s(&two)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("idempotent pair: comonad false, monad false"));

    let o = laxorth(&["check", "--handle", "coropf", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counterexample_runs() {
    let o = laxorth(&["counterexample", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("NONSURJECTIVE\n"), "{out}");
    assert!(out.contains("witness ((a_dot,1)|"));

    let o = laxorth(&["counterexample", "--depth", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("witness ((a_dot,").count(), 3);

    let o = laxorth(&["counterexample", "--depth", "1", "--empty-dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SURJECTIVE\n"));

    assert_eq!(laxorth(&["counterexample", "--depth", "0"]).status.code(), Some(2));
}

#[test]
fn json_reports_parse() {
    let o = laxorth(&["--format", "json", "counterexample", "--depth", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["counterexample"]["surjective"], false);
    assert_eq!(v["counterexample"]["witnesses"].as_array().unwrap().len(), 2);
    assert_eq!(v["records"][0]["verdict"], "pass");
    assert_eq!(v["listing"][0], "NONSURJECTIVE");

    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "category C\n  object a\n  frobnicate\nend\n");
    let o = laxorth(&["--format", "json", "validate", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"][0]["verdict"], "fail");
    assert!(v["records"][0]["detail"].as_str().unwrap().starts_with("line 3:"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(laxorth(&["check", "--handle", "nope", "--suite", "laws"]).status.code(), Some(2));
    assert_eq!(laxorth(&["--limit", "0", "counterexample", "--depth", "1"]).status.code(), Some(2));
    assert_eq!(laxorth(&["validate", "/nonexistent/file.txt"]).status.code(), Some(1));
    // clap rejects a missing subcommand with its own exit code
    assert_eq!(laxorth(&[]).status.code(), Some(2));
}
