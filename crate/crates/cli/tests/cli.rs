use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn corpus(name: &str) -> String {
    root().join("corpus").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["wittkit"];
    argv.extend_from_slice(args);
    let out = wittkit_cli::run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", out.stdout));
    (out.code, v)
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schemas").join(format!("{name}.schema.json"))).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name} report violates its schema: {errors:#?}\n{v:#}");
}

#[test]
fn ih_on_suspended_torus() {
    let (code, v) = run(&["ih", &corpus("sigma_t2.json"), "--perversity", "lower-middle"]);
    assert_eq!(code, 0);
    assert_eq!(v["ranks"], serde_json::json!([1, 2, 0, 1]));
    assert_eq!(v["subdivisions"], 1);
    assert_valid("ih", &v);
}

#[test]
fn witt_failure_names_strata() {
    let (code, v) = run(&["witt", &corpus("sigma_t2.json")]);
    assert_eq!(code, 2);
    let failing = v["failing_strata"].as_array().unwrap();
    assert_eq!(failing.len(), 2);
    assert!(failing.iter().all(|f| f["middle_rank"] == 2));
    assert_valid("witt", &v);
    let (code, v) = run(&["witt", &corpus("sigma_s2.json")]);
    assert_eq!(code, 0);
    assert_valid("witt", &v);
}

#[test]
fn indicial_roots_of_harmonic_spectrum() {
    let (code, v) = run(&["indicial", &corpus("spectra/harmonic_f2.json"), "--weight", "0.5"]);
    assert_eq!(code, 0);
    let values: Vec<&str> = v["roots"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["-3", "-2", "-1", "0"]);
    assert_valid("indicial", &v);
}

#[test]
fn indicial_windows_set_the_exit_code() {
    let spec = corpus("spectra/harmonic_f2.json");
    for (alpha, eps, expected) in [("0", "0.4", 0), ("0.5", "0.3", 0), ("0", "0.6", 2)] {
        let (code, v) = run(&["indicial", &spec, "--weight", "1/2", "--alpha", alpha, "--epsilon", eps]);
        assert_eq!(code, expected, "alpha {alpha} epsilon {eps}");
        assert_valid("indicial", &v);
    }
    let (code, v) = run(&["indicial", &spec, "--alpha", "0", "--epsilon", "1"]);
    assert_eq!(code, 1);
    assert_valid("error", &v);
}

#[test]
fn gap_reports() {
    let (code, v) = run(&["gap", &corpus("spectra/gapped_f2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["certificate"]["verdict"], "PASS");
    assert_valid("gap", &v);
    let (code, v) = run(&["gap", &corpus("spectra/circle_4pi.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["max_scale"], "1/2");
    assert_eq!(v["certificate"]["reason"], "gap");
    assert_valid("gap", &v);
    let (code, v) = run(&["gap", &corpus("spectra/torus_like_f2.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["witt_spectral"], false);
    assert_valid("gap", &v);
    let (code, v) = run(&["gap", &corpus("spectra/harmonic_f2.json")]);
    assert_eq!((code, v["max_scale"].as_str()), (2, Some("inf")));
    assert_eq!(v["certificate"]["verdict"], "INCOMPLETE");
    assert_valid("gap", &v);
}

#[test]
fn signature_and_check_and_resolve() {
    let (code, v) = run(&["signature", &corpus("s2xs2.json"), "--subdivisions", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["signature"], 0);
    assert_eq!(v["middle_rank"], 2);
    assert_valid("signature", &v);

    let (code, v) = run(&["check", &corpus("sigma_sigma_t2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["depth"], 2);
    assert_valid("check", &v);

    let (code, v) = run(&["resolve", &corpus("sigma_sigma_t2.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["tree"]["depth"], 2);
    assert_eq!(v["round_trip"], true);
    assert_valid("resolve", &v);
}

#[test]
fn errors_are_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "dimension": 2, "facets": [[0, 1, 2], [2, 3]]}"#).unwrap();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["ih".into(), bad.display().to_string()], "NonPure"),
        (vec!["ih".into(), corpus("missing.json")], "MalformedInput"),
        (vec!["ih".into(), corpus("sigma_t2.json"), "--perversity".into(), "custom:0,2".into()], "InvalidPerversity"),
        (vec!["signature".into(), corpus("sigma_t2.json")], "WrongDimensionParity"),
        (vec!["frobnicate".into()], "UsageError"),
    ];
    for (args, code) in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (exit, v) = run(&refs);
        assert_eq!(exit, 1, "{args:?}");
        assert_eq!(v["error"], code, "{args:?}");
        assert_valid("error", &v);
    }
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ih.json");
    let out = wittkit_cli::run(["wittkit", "ih", &corpus("torus.json"), "--out", &path.display().to_string()]);
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["ranks"], serde_json::json!([1, 2, 1]));
}

#[test]
fn binary_is_deterministic_across_thread_counts() {
    let bin = env!("CARGO_BIN_EXE_wittkit");
    let args = ["witt", &corpus("sigma_sigma_t2.json")];
    let runs: Vec<(Option<i32>, Vec<u8>)> = ["1", "4", "1"]
        .iter()
        .map(|threads| {
            let o = Command::new(bin).args(args).env("WITTKIT_THREADS", threads).output().unwrap();
            (o.status.code(), o.stdout)
        })
        .collect();
    assert_eq!(runs[0].0, Some(2));
    assert!(runs.iter().all(|r| *r == runs[0]), "outputs differ between runs");
}
