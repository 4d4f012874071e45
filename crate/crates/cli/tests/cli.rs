use std::path::PathBuf;
use std::process::{Command, Output};

use lie2::linfty::check_linfty;
use lie2::quadratic::{double, string_lie2};
use lie2::catalog;

fn lie2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lie2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn construct_to_file(args: &[&str], name: &str) -> PathBuf {
    let o = lie2(args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    temp_file(name, &stdout(&o))
}

#[test]
fn verify_catalog_jacobi() {
    for alg in ["so3", "sl2", "heis3", "abelian:3", "gl:2", "so3+abelian:1"] {
        let o = lie2(&["verify", "--alg", alg, "--suite", "jacobi"]);
        assert_eq!(code(&o), 0, "{alg}");
        assert!(stdout(&o).contains("result: pass"));
    }
}

#[test]
fn broken_antisymmetry_is_reported_with_a_tuple() {
    // [e0,e1] = e2 and [e1,e0] = e2.
    let doc = r#"{"dim": 3, "basis": ["a","b","c"], "brackets": [
        {"i": 0, "j": 1, "coeffs": [[2, "1"]]},
        {"i": 1, "j": 0, "coeffs": [[2, "1"]]}]}"#;
    let path = temp_file("bad.json", doc);
    let o = lie2(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("[FAIL] jacobi/antisymmetry"), "{out}");
    assert!(out.contains("at [0, 1, 2]: 2"), "{out}");
}

#[test]
fn parse_and_usage_errors_exit_two() {
    let empty = temp_file("empty.json", "");
    let o = lie2(&["verify", "--file", empty.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    let truncated = temp_file("truncated.json", r#"{"dim": 2, "basis": ["a"#);
    assert_eq!(code(&lie2(&["verify", "--file", truncated.to_str().unwrap()])), 2);
    assert_eq!(code(&lie2(&["verify", "--alg", "so4"])), 2);
    assert_eq!(code(&lie2(&["verify"])), 2);
    assert_eq!(code(&lie2(&["construct", "nonsense"])), 2);
    assert_eq!(code(&lie2(&["construct", "string"])), 2);
    assert_eq!(code(&lie2(&["courant", "--mutation", "bogus"])), 2);
    assert_eq!(code(&lie2(&["verify", "--alg", "so3", "--suite", "rep"])), 2);
}

#[test]
fn constructed_string_algebra_passes_linfty() {
    let path = construct_to_file(&["construct", "string", "--alg", "so3"], "string.json");
    let o = lie2(&["verify", "--file", path.to_str().unwrap(), "--suite", "linfty"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn round_trip_matches_in_memory_verification() {
    let path = construct_to_file(&["construct", "string", "--alg", "sl2"], "string-sl2.json");
    let o = lie2(&["verify", "--file", path.to_str().unwrap(), "--suite", "linfty", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let direct = check_linfty(&string_lie2(&double(&catalog::sl2())).unwrap());
    let checks = parsed["checks"].as_array().unwrap();
    assert_eq!(checks.len(), direct.checks.len());
    for (file, mem) in checks.iter().zip(&direct.checks) {
        assert_eq!(file["name"], format!("linfty/{}", mem.name));
        assert_eq!(file["passed"], mem.passed);
        assert_eq!(file["evaluated"], mem.evaluated);
        assert_eq!(file["max_residual"], mem.max_residual.as_str());
    }
}

#[test]
fn constructed_omni_passes_rep_and_linfty() {
    let path = construct_to_file(&["construct", "omni", "--n", "2"], "omni.json");
    for suite in ["rep", "linfty", "all"] {
        let o = lie2(&["verify", "--file", path.to_str().unwrap(), "--suite", suite]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
    }
}

#[test]
fn double_of_abelian_is_abelian() {
    let o = lie2(&["construct", "double", "--alg", "abelian:2"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["dim"], 4);
    assert!(doc["brackets"].as_array().unwrap().is_empty());
    assert_eq!(doc["pairing"][0][2], "1/2");
}

#[test]
fn semidirect_documents_verify() {
    for args in [
        vec!["construct", "semidirect", "--seed", "4"],
        vec!["construct", "string-datum", "--alg", "heis3"],
    ] {
        let path = construct_to_file(&args, "semidirect.json");
        let o = lie2(&["verify", "--file", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn nonexact_prints_certificate() {
    let o = lie2(&["nonexact", "--alg", "so3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("rank D = 9, rank [D|nu] = 9"), "{out}");
    assert!(out.contains("primitive: phi[0, 3] = 1/2"), "{out}");
    let o = lie2(&["nonexact", "--alg", "abelian:3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("nu_tilde is exact"));
}

#[test]
fn courant_suite_and_mutation() {
    let o = lie2(&["courant", "--vars", "2", "--degree", "2", "--trials", "3", "--seed", "5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("seed: 5"));
    let o = lie2(&["courant", "--vars", "2", "--degree", "2", "--trials", "3", "--mutation", "drop-half-bracket"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn twogroup_commands() {
    let o = lie2(&["twogroup", "check", "--model", "heis3", "--samples", "16", "--seed", "2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("[PASS] pentagon"));
    let o = lie2(&["twogroup", "check", "--model", "heis3", "--samples", "16", "--float", "--tol", "1e-10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("mode: floating"));
    let o = lie2(&["twogroup", "integrate", "--alg", "heis3", "--samples", "8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1/4"));
    let o = lie2(&["twogroup", "differentiate", "--alg", "heis3", "--mode", "jet"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[0, 1, 5] -> (1/2)"));
    let o = lie2(&["twogroup", "differentiate", "--alg", "heis3", "--mode", "fd", "--step", "1e-3"]);
    assert_eq!(code(&o), 0);
    let o = lie2(&["twogroup", "transfer", "--alg", "abelian:3", "--trials", "2", "--samples", "8"]);
    assert_eq!(code(&o), 0);
    let o = lie2(&["twogroup", "cocycle", "--alg", "fil4", "--samples", "8"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn twogroup_rejects_unsupported_input() {
    assert_eq!(code(&lie2(&["twogroup", "check", "--model", "so3"])), 2);
    assert_eq!(code(&lie2(&["twogroup", "differentiate", "--mode", "fd", "--step", "0"])), 2);
    assert_eq!(code(&lie2(&["verify", "--alg", "sl2", "--suite", "group-rep"])), 2);
}

#[test]
fn verify_group_suites_from_catalog() {
    let o = lie2(&["verify", "--alg", "heis3", "--suite", "two-group", "--samples", "8", "--parallel"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("two-group/zigzag_second"));
}
