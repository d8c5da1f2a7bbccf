use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const SQUARE_ADIC: &str = r#"{"vars":["x","y"],"base_ideal":["x^2","x*y","y^2"]}"#;
const SQUARE_PREFIX: &str =
    r#"{"vars":["x","y"],"base_ideal":["x^2","x*y","y^2"],"prefix":[["x","y"]]}"#;

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Self {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn cache_dir(&self) -> PathBuf {
        self.dir.path().join("cache")
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_hilbfilt"))
            .args(args)
            .env("HILBFILT_CACHE_DIR", self.cache_dir())
            .output()
            .unwrap()
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn coeffs_of_square_adic() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_ADIC);
    let o = s.run(&["coeffs", p(&f)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("e = [4, 1, 0], r = 0, n_post = 0"));
}

#[test]
fn coeffs_json_round_trips_hilbert_data() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_PREFIX);
    let o = s.run(&["coeffs", "--json", p(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["4", "3", "0"]));
    assert_eq!(v["reductionNumber"], 1);
    assert_eq!(v["dim"], 2);
}

#[test]
fn malformed_monomial_reports_position() {
    let s = Sandbox::new();
    let f = s.file(
        "bad.json",
        "{\"vars\":[\"x\",\"y\"],\n\"base_ideal\":[\"x^-1\"]}",
    );
    let o = s.run(&["coeffs", p(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2, column 18"), "{}", stderr(&o));
}

#[test]
fn zero_dimensional_module_is_operational_error() {
    let s = Sandbox::new();
    let f = s.file(
        "d0.json",
        r#"{"vars":["x","y"],"annihilator":["x","y^2"],"base_ideal":["x","y"]}"#,
    );
    let o = s.run(&["coeffs", p(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("dimension must be >= 1"));
}

#[test]
fn worked_pair_holds() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_PREFIX);
    let g = s.file("g.json", SQUARE_ADIC);
    let o = s.run(&["check-pair", p(&f), p(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("THM_3_3_E1[1]"));
    assert!(out.contains("93747"));
    assert!(out.contains("all 4 checks hold"));
}

#[test]
fn pair_json_follows_report_schema() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_PREFIX);
    let g = s.file("g.json", SQUARE_ADIC);
    let o = s.run(&["check-pair", "--json", p(&f), p(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = &v[0];
    for key in [
        "instance",
        "statementId",
        "lhs",
        "rhs",
        "holds",
        "slackLog2",
    ] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert_eq!(first["statementId"], "LEMMA_2_2");
    assert!(first["rhs"].is_string());
}

#[test]
fn mismatched_base_ideals_fail() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_ADIC);
    let g = s.file("g.json", r#"{"vars":["x","y"],"base_ideal":["x","y"]}"#);
    let o = s.run(&["check-pair", p(&f), p(&g)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn adic_and_parameter_checks() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_PREFIX);
    let o = s.run(&["check-cor34", p(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("COR_3_4[1]"));

    let e = s.file(
        "e.json",
        r#"{"vars":["x","y"],"base_ideal":["x^2","y^2"],"prefix":[["x^2","x*y","y^2"]]}"#,
    );
    let o = s.run(&["check-cor35", p(&e)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("LEMMA_2_6"));

    let not_ci = s.file(
        "n.json",
        r#"{"vars":["x","y"],"base_ideal":["x^2","x*y","y^2"],"prefix":[["x","y"]]}"#,
    );
    assert_eq!(s.run(&["check-cor35", p(&not_ci)]).status.code(), Some(1));
}

#[test]
fn cache_hits_match_fresh_results() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_PREFIX);
    let fresh = s.run(&["coeffs", "--json", "--no-cache", p(&f)]);
    let first = s.run(&["coeffs", "--json", p(&f)]);
    assert_eq!(fs::read_dir(s.cache_dir()).unwrap().count(), 1);
    let second = s.run(&["coeffs", "--json", p(&f)]);
    assert_eq!(stdout(&fresh), stdout(&first));
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn corrupted_cache_entry_is_replaced_on_verification() {
    let s = Sandbox::new();
    let f = s.file("f.json", SQUARE_ADIC);
    let good = s.run(&["coeffs", "--json", p(&f)]);
    let entry = fs::read_dir(s.cache_dir())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    let tampered = fs::read_to_string(&entry)
        .unwrap()
        .replace("\"4\"", "\"5\"");
    fs::write(&entry, tampered).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_hilbfilt"))
        .args(["coeffs", "--json", p(&f)])
        .env("HILBFILT_CACHE_DIR", s.cache_dir())
        .env("HILBFILT_CACHE_VERIFY", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), stdout(&good));
    assert!(stderr(&o).contains("stale cache entry"));
}

#[test]
fn corpus_default_two_variable_run() {
    let s = Sandbox::new();
    let spec = s.file("spec.json", r#"{"seed":42,"count":200,"ambient":[2,2]}"#);
    let out = s.dir.path().join("report.json");
    let csv = s.dir.path().join("slack.csv");
    let o = s.run(&["corpus", p(&spec), "--out", p(&out), "--csv", p(&csv)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["instances_checked"], 200);
    assert_eq!(report["violations"], serde_json::json!([]));
    assert!(report["timing"].is_object());
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.starts_with("instance,statement,index,lhs,rhs_digits,holds,slack_log2\n"));
    assert!(!table.contains(",false,"));
}

#[test]
fn corpus_payload_is_reproducible() {
    let s = Sandbox::new();
    let spec = s.file("spec.json", r#"{"count":30,"ambient":[2,3]}"#);
    let runs: Vec<serde_json::Value> = (0..2)
        .map(|_| {
            let o = s.run(&["corpus", "--json", "--seed", "7", p(&spec)]);
            assert_eq!(o.status.code(), Some(0));
            let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
            v.as_object_mut().unwrap().remove("timing");
            v
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0]["spec"]["seed"], 7);
}

#[test]
fn corpus_rejects_empty_count() {
    let s = Sandbox::new();
    let spec = s.file("spec.json", r#"{"count":0}"#);
    assert_eq!(s.run(&["corpus", p(&spec)]).status.code(), Some(1));
}

#[test]
fn fixtures_pass_list_and_detect_corruption() {
    let s = Sandbox::new();
    let o = s.run(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let listed = s.run(&["fixtures", "--list"]);
    assert_eq!(listed.status.code(), Some(0));
    assert!(stdout(&listed).lines().any(|l| l == "colength-staircase"));
    assert!(!stdout(&listed).contains("PASS"));

    let golden = fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/golden.json"),
    )
    .unwrap();
    let corrupted = golden.replacen("\"expected\": \"4\"", "\"expected\": \"5\"", 1);
    assert_ne!(golden, corrupted);
    let f = s.file("golden.json", &corrupted);
    let o = s.run(&["fixtures", "--file", p(&f)]);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("FAIL colength-staircase"));
    assert!(out.contains("- \"5\"") && out.contains("+ \"4\""));
}

#[test]
fn usage_errors_are_operational() {
    let s = Sandbox::new();
    assert_eq!(s.run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(s.run(&["--help"]).status.code(), Some(0));
}
