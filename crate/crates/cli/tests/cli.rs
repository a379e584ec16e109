use std::path::Path;
use std::process::{Command, Output};

fn ausrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ausrep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const E_IDENTITY: &str = r#"{"f": {"source": ["[1]_0", "[2]_0"], "target": ["[1]_0", "[2]_0"],
    "blocks": {"0": [[1,0,0],[0,1,0],[0,0,1]]}}, "mono": true}"#;
const ZERO_TO_E: &str = r#"{"f": {"source": [], "target": ["[1]_0", "[2]_0"], "blocks": {}}, "mono": true}"#;
const TOP_OF_PROJECTIVE: &str = r#"{"f": {"source": "[2]_0", "target": "[1]_0", "blocks": {"0": [[1, 0]]}}}"#;

fn total_dim(json: &str) -> usize {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    v["spaces"].as_object().unwrap().values().map(|d| d.as_u64().unwrap() as usize).sum()
}

#[test]
fn catalog_listings() {
    let o = ausrep(&["--algebra", "nakayama:4,3", "catalog"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 16);
    let o = ausrep(&["--algebra", "catalog:a3_sink.json", "catalog"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn gamma_summary_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let o = ausrep(&["--algebra", "nakayama:1,1", "gamma", "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "dim Γ = 5"));
    let d = std::fs::read_to_string(&dot).unwrap();
    assert!(d.starts_with("digraph"));
    assert_eq!(d.matches("->").count(), 2);
}

#[test]
fn stable_gamma_needs_a_self_injective_algebra() {
    assert_eq!(ausrep(&["--algebra", "catalog:a3_sink.json", "stable-gamma"]).status.code(), Some(3));
    let o = ausrep(&["--algebra", "nakayama:1,2", "stable-gamma"]);
    assert!(stdout(&o).lines().any(|l| l == "vertices = 2"));
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(ausrep(&["--algebra", "nakayama:x", "catalog"]).status.code(), Some(2));
    assert_eq!(ausrep(&["--prime", "91", "--algebra", "nakayama:1,1", "catalog"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{not json");
    assert_eq!(ausrep(&["--algebra", "nakayama:1,1", "apply", "alpha", "--input", &bad]).status.code(), Some(2));
    assert_eq!(ausrep(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn functors_on_generators() {
    let dir = tempfile::tempdir().unwrap();
    let ee = write(dir.path(), "ee.json", E_IDENTITY);
    let ze = write(dir.path(), "ze.json", ZERO_TO_E);
    let run = |f: &str, input: &str| {
        let o = ausrep(&["--algebra", "nakayama:1,1", "apply", f, "--input", input]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        total_dim(&stdout(&o))
    };
    assert_eq!(run("alpha", &ee), 0);
    assert_eq!(run("F", &ze), 1);
    assert_eq!(run("G", &ze), 0);
    assert_eq!(run("F", &ee), 0);
    let nm = write(dir.path(), "nm.json", TOP_OF_PROJECTIVE);
    assert_eq!(ausrep(&["--algebra", "nakayama:1,1", "apply", "F", "--input", &nm]).status.code(), Some(3));
}

#[test]
fn tilting_module_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let o = ausrep(&["--algebra", "nakayama:1,2", "apply", "T", "--check", "tilting", "--json", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "tilting: true, cotilting: true"));
    assert_eq!(total_dim(&std::fs::read_to_string(&out).unwrap()), 10);
}

#[test]
fn verify_examples_pass() {
    assert!(ausrep(&["verify", "thm2", "--algebra", "nakayama:1,2", "--seed", "7"]).status.success());
    let o = ausrep(&["verify", "thm3", "--algebra", "catalog:a3_sink.json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("720/720"));
    assert_eq!(ausrep(&["verify", "thm1", "--algebra", "catalog:a3_sink.json"]).status.code(), Some(3));
}

#[test]
fn verify_all_on_a_small_grid() {
    let o = ausrep(&["verify", "all", "--grid", "c<=2,N<=2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("10/10 suites passed\n"));
}

#[test]
fn verify_json_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = ausrep(&["verify", "prop2_6", "--grid", "1,1;2,1", "--seed", "3", "--json", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let (a, b) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["seed"], 3);
}
