use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const EXAMPLE: &str = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 4,
 "G": [[[1], [0, 1], [0], [0]], [[0], [0], [0, 1], [1]]]}"#;
const PAIR: &str = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 2, "G2": [[[1], [0, 1]]], "Gprime": [[[1], [0]]]}"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rankmetric"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    let s: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_report(v: &Value) {
    let errors: Vec<String> = schema("report.schema.json")
        .iter_errors(v)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        let dir = TempDir::new().unwrap();
        fs::write(dir.path().join("ex.json"), EXAMPLE).unwrap();
        fs::write(dir.path().join("pair.json"), PAIR).unwrap();
        Files(dir)
    }
    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_string_lossy().into_owned()
    }
    fn write(&self, name: &str, text: &str) -> String {
        fs::write(self.0.path().join(name), text).unwrap();
        self.path(name)
    }
    fn gen(&self, name: &str, args: &[&str]) -> String {
        let out = run(&[&["gen"], args].concat());
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let file = json(&out);
        assert!(schema("codefile.schema.json").is_valid(&file));
        let path: PathBuf = self.0.path().join(name);
        fs::write(&path, &out.stdout).unwrap();
        path.to_string_lossy().into_owned()
    }
}

#[test]
fn weights_of_the_worked_example() {
    let f = Files::new();
    let out = run(&["weights", "--code", &f.path("ex.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_report(&v);
    assert_eq!(v["command"], "weights");
    assert_eq!(v["results"]["d_R"], serde_json::json!([2, 4]));
    assert_eq!(v["results"]["dim_closure"], 4);
    assert_eq!(v["results"]["methods_agree"], true);
}

#[test]
fn digest_tracks_inputs() {
    let f = Files::new();
    let a = json(&run(&["weights", "--code", &f.path("ex.json")]));
    let spaced = f.write("spaced.json", &EXAMPLE.replace(", ", ",    "));
    let b = json(&run(&["weights", "--code", &spaced]));
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    let other = f.gen("g.json", &["gabidulin", "--m", "4", "--n", "4", "--k", "2"]);
    let c = json(&run(&["weights", "--code", &other]));
    assert_ne!(a["inputs_digest"], c["inputs_digest"]);
}

#[test]
fn every_command_emits_a_valid_report() {
    let f = Files::new();
    let ex = f.path("ex.json");
    let pair = f.path("pair.json");
    let l = f.write("L.json", "[[[1],[0],[0],[0]],[[0],[1],[0],[1]]]");
    let b = f.write("B.json", "[[[1],[0]]]");
    let g = f.gen("g.json", &["gabidulin", "--m", "4", "--n", "4", "--k", "1"]);
    let cases: Vec<Vec<&str>> = vec![
        vec!["weights", "--pair", &pair],
        vec!["bounds", "--code", &ex],
        vec!["bounds", "--pair", &pair],
        vec!["duality", "--code", &ex],
        vec!["puncture", "--code", &ex, "--L", &l],
        vec!["puncture", "--code", &ex, "--L", &l, "--shorten", "--compress"],
        vec!["puncture", "--code", &ex, "--L", &l, "--all-complements"],
        vec!["leakage", "--pair", &pair, "--B", &b],
        vec!["leakage", "--pair", &pair, "--all", "--profile"],
        vec![
            "simulate", "--code", &g, "--t", "1", "--rho", "1", "--trials", "50", "--seed", "3",
        ],
        vec!["verify", "--suite", "field"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_report(&json(&out));
    }
}

#[test]
fn leakage_of_one_coordinate() {
    let f = Files::new();
    let b = f.write("B.json", "[[[1],[0]]]");
    let v = json(&run(&["leakage", "--pair", &f.path("pair.json"), "--B", &b]));
    assert_eq!(v["results"]["leakage"], 0);
    assert_eq!(v["results"]["mutual_information"], "0");
}

#[test]
fn simulate_is_seeded() {
    let f = Files::new();
    let g = f.gen("g.json", &["gabidulin", "--m", "4", "--n", "4", "--k", "1"]);
    let args = [
        "simulate", "--code", &g, "--t", "1", "--rho", "1", "--trials", "100", "--seed", "9",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 9);
    assert_eq!(v["results"]["failures"], 0);
    assert_eq!(v["results"]["per_submatrix_agreement"], 100);
}

#[test]
fn simulate_beyond_the_guarantee_finds_the_converse() {
    let f = Files::new();
    let g = f.gen("g.json", &["gabidulin", "--m", "4", "--n", "4", "--k", "1"]);
    let out = run(&[
        "simulate", "--code", &g, "--t", "2", "--rho", "0", "--trials", "20", "--seed", "1",
    ]);
    let v = json(&out);
    assert_eq!(v["results"]["converse_verified"], true);
}

#[test]
fn non_coherent_mode_is_rejected() {
    let f = Files::new();
    let out = run(&[
        "simulate",
        "--code",
        &f.path("ex.json"),
        "--t",
        "0",
        "--mode",
        "non-coherent",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn equivalence_verdicts() {
    let f = Files::new();
    let ex = f.path("ex.json");
    let v = json(&run(&["equiv", "--code", &ex, "--other", &ex]));
    assert_eq!(v["results"]["verdict"], "equivalent");

    // the image under β = α, A = I is equivalent with a known witness
    let w = f.write(
        "w.json",
        r#"{"beta": [0, 1], "A": [[[1],[0],[0],[0]],[[0],[1],[0],[0]],[[0],[0],[1],[0]],[[0],[0],[0],[1]]]}"#,
    );
    let out = run(&["equiv", "--code", &ex, "--other", &ex, "--witness", &w]);
    assert_eq!(out.status.code(), Some(0));

    let plain = f.write(
        "plain.json",
        r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 4, "G": [[[1], [0], [0], [0]], [[0], [1], [0], [0]]]}"#,
    );
    let out = run(&["equiv", "--code", &ex, "--other", &plain]);
    let v = json(&out);
    assert_report(&v);
    assert_eq!(out.status.code(), Some(10));
    assert_eq!(v["results"]["verdict"], "inequivalent");

    let swap = f.write(
        "swap.json",
        r#"{"beta": [1], "A": [[[0],[1],[0],[0]],[[1],[0],[0],[0]],[[0],[0],[1],[0]],[[0],[0],[0],[1]]]}"#,
    );
    let out = run(&["equiv", "--code", &ex, "--other", &ex, "--witness", &swap]);
    assert_eq!(out.status.code(), Some(11));
    assert_eq!(json(&out)["results"]["verdict"], "witness_rejected");
}

#[test]
fn bad_inputs_exit_with_2() {
    let f = Files::new();
    let zero = f.write(
        "zero.json",
        r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 2, "G": [[[0],[0]]]}"#,
    );
    let extra = f.write(
        "extra.json",
        r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 1, "G": [[[1]]], "H": []}"#,
    );
    let bad_field = f.write(
        "bad.json",
        r#"{"field": {"p": 4, "e": 1, "m": 2}, "n": 1, "G": [[[1]]]}"#,
    );
    for path in [zero, extra, bad_field, f.path("missing.json")] {
        let out = run(&["weights", "--code", &path]);
        assert_eq!(out.status.code(), Some(2), "{path}");
        assert!(out.stdout.is_empty());
    }
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nothing"]).status.code(), Some(2));
}

#[test]
fn dependent_rows_warn_and_reduce() {
    let f = Files::new();
    let dup = f.write(
        "dup.json",
        r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 2, "G": [[[1], [0, 1]], [[0, 1], [1, 1]]]}"#,
    );
    let out = run(&["weights", "--code", &dup]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dependent"));
    assert_eq!(json(&out)["results"]["k"], 1);
}

#[test]
fn cap_is_enforced() {
    let f = Files::new();
    let out = run(&["--cap", "2", "weights", "--code", &f.path("ex.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn gen_kinds_load_back() {
    let f = Files::new();
    for (i, kind) in ["gabidulin", "random", "galois-closed", "nondegenerate"]
        .iter()
        .enumerate()
    {
        let path = f.gen(
            &format!("{kind}.json"),
            &[kind, "--m", "3", "--n", "3", "--k", "2", "--seed", "5"],
        );
        let v = json(&run(&["weights", "--code", &path]));
        assert_eq!(v["results"]["k"], 2, "{kind}");
        if i == 0 {
            assert_eq!(v["results"]["d_R"], serde_json::json!([2, 3]));
        }
    }
}
