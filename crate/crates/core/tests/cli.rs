use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");

fn quasilin(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasilin"))
        .args(args)
        .current_dir(dir)
        .env_remove("QUASILIN_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn json(path: PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn factor_sample_matrix() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(dir.path(), &["factor", "--in", &data("sl3_z.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(dir.path().join("quasilin-out/factor.json"));
    assert_eq!(v["format"], "quasilin-factorization/1");
    assert_eq!(v["product_check"], true);
    assert_eq!(
        v["count"].as_u64().unwrap() as usize,
        v["factors"].as_array().unwrap().len()
    );
}

#[test]
fn factor_identity_has_no_factors() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "id.json",
        r#"{"format":"quasilin-matrix/1","ring":"Fp[x]:5","rows":[["[1]","[]"],["[]","[1]"]]}"#,
    );
    let out = quasilin(dir.path(), &["factor", "--in", &input, "--out", "f.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(dir.path().join("f.json"))["count"], 0);
}

#[test]
fn factor_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let det2 = write(
        &dir,
        "d.json",
        r#"{"format":"quasilin-matrix/1","ring":"Z","rows":[["2","0"],["0","1"]]}"#,
    );
    assert_eq!(quasilin(dir.path(), &["factor", "--in", &det2]).status.code(), Some(3));
    let junk = write(&dir, "j.json", "{ not json");
    assert_eq!(quasilin(dir.path(), &["factor", "--in", &junk]).status.code(), Some(2));
    let bad_elem = write(
        &dir,
        "b.json",
        r#"{"format":"quasilin-matrix/1","ring":"Z","rows":[["x","0"],["0","1"]]}"#,
    );
    assert_eq!(
        quasilin(dir.path(), &["factor", "--in", &bad_elem]).status.code(),
        Some(2)
    );
    assert_eq!(
        quasilin(dir.path(), &["factor", "--in", "missing.json"]).status.code(),
        Some(2)
    );
    assert_eq!(quasilin(dir.path(), &["factor", "--ring", "Q"]).status.code(), Some(2));
    assert_eq!(quasilin(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert!(!dir.path().join("quasilin-out").exists());
}

#[test]
fn sampled_factorization_and_cl_bound() {
    let dir = TempDir::new().unwrap();
    for ring in ["Z", "Zi", "Fp[x]:5", "Q[x]"] {
        let out = quasilin(
            dir.path(),
            &["factor", "--ring", ring, "--n", "3", "--length", "6", "--out", "f.json"],
        );
        assert_eq!(
            out.status.code(),
            Some(0),
            "{ring}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(json(dir.path().join("f.json"))["ring"], ring);
    }
    let out = quasilin(dir.path(), &["cl-bound", "--in", &data("sl3_z.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(dir.path().join("quasilin-out/cl-bound.json"));
    assert_eq!(v["format"], "quasilin-cl-bound/1");
}

#[test]
fn dv_from_file_and_sampled() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(dir.path(), &["dv", "--in", &data("dv_z.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(dir.path().join("quasilin-out/dv.json"));
    assert_eq!(v["shapes_ok"], true);
    assert_eq!(v["product_check"], true);
    assert_eq!(
        quasilin(dir.path(), &["dv", "--ring", "Zi", "--seed", "5"])
            .status
            .code(),
        Some(0)
    );
    // pqr != 1
    let bad = write(
        &dir,
        "bad.json",
        r#"{"format":"quasilin-dv-input/1","ring":"Z","p":[["1","0"],["0","1"]],"q":[["1","0"],["0","1"]],"r":[["1","1"],["0","1"]]}"#,
    );
    assert_eq!(quasilin(dir.path(), &["dv", "--in", &bad]).status.code(), Some(3));
}

#[test]
fn verify_proof_default_run_passes() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(dir.path(), &["verify-proof", "--instances", "20"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(dir.path().join("quasilin-out/certificates.json"));
    assert_eq!(v["passed"], true);
    assert!(v["certificates"].as_array().unwrap().len() >= 9);
}

#[test]
fn verify_proof_numeric_only_over_polynomials() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(
        dir.path(),
        &[
            "verify-proof",
            "--numeric-only",
            "--instances",
            "500",
            "--ring",
            "Fp[x]:101",
            "--out",
            "c.json",
        ],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(dir.path().join("c.json"));
    for c in v["certificates"].as_array().unwrap() {
        assert_eq!(c["mode"], "numeric");
        assert_eq!(c["instances"], 500);
    }
}

#[test]
fn verify_proof_mutation_fails() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(dir.path(), &["verify-proof", "--instances", "5", "--mutate", "X2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(dir.path().join("quasilin-out/certificates.json"));
    assert_eq!(v["passed"], false);
    assert_eq!(
        quasilin(dir.path(), &["verify-proof", "--mutate", "Q[1,1]"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_proof_term_limit_is_a_resource_error() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(dir.path(), &["verify-proof", "--instances", "1", "--term-limit", "3"]);
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn scl_reports() {
    let dir = TempDir::new().unwrap();
    let out = quasilin(
        dir.path(),
        &["scl", "--group", "SL2:F3", "--element", "-I", "--nmax", "4"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(dir.path().join("quasilin-out/scl.json"));
    assert_eq!(v["format"], "quasilin-scl/1");
    assert_eq!(v["commutator_subgroup_order"], 8);
    let table = data("q8.table");
    let group = format!("table:{table}");
    assert_eq!(
        quasilin(dir.path(), &["scl", "--group", &group, "--out", "q.json"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        quasilin(dir.path(), &["scl", "--group", "symmetric:5", "--element", "(1 2 3)"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        quasilin(dir.path(), &["scl", "--group", "cyclic:5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        quasilin(dir.path(), &["scl", "--group", "symmetric:5", "--element", "(1 1)"])
            .status
            .code(),
        Some(2)
    );
    let broken = format!("table:{}", data("broken.table"));
    assert_eq!(
        quasilin(dir.path(), &["scl", "--group", &broken]).status.code(),
        Some(2)
    );
    assert_eq!(
        quasilin(dir.path(), &["scl", "--group", "symmetric:6", "--cap", "100"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn ring_info() {
    let dir = TempDir::new().unwrap();
    for ring in ["Z", "Zi", "Fp[x]:7", "Q[x]"] {
        let out = quasilin(dir.path(), &["ring-info", "--ring", ring, "--out", "r.json"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(dir.path().join("r.json"));
        assert_eq!(v["format"], "quasilin-ring-info/1");
        assert_eq!(v["ring"], ring);
    }
    assert_eq!(
        quasilin(dir.path(), &["ring-info", "--ring", "Fp[x]:8"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_directory_from_environment() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("elsewhere");
    let out = Command::new(env!("CARGO_BIN_EXE_quasilin"))
        .args(["ring-info"])
        .current_dir(dir.path())
        .env("QUASILIN_OUT_DIR", &target)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(target.join("ring-info.json").exists());
    assert!(!dir.path().join("quasilin-out").exists());
}

#[test]
fn equal_seeds_give_identical_files() {
    let dir = TempDir::new().unwrap();
    let runs: [&[&str]; 5] = [
        &["factor", "--ring", "Zi", "--seed", "9"],
        &["dv", "--seed", "9"],
        &["verify-proof", "--instances", "10", "--seed", "9"],
        &["cl-bound", "--seed", "9"],
        &["scl", "--group", "SL2:F5", "--element", "[[1,1],[0,1]]"],
    ];
    for args in runs {
        let mut files = Vec::new();
        for tag in ["a", "b"] {
            let mut full: Vec<&str> = args.to_vec();
            let name = format!("{tag}.json");
            full.extend(["--out", &name]);
            assert_eq!(quasilin(dir.path(), &full).status.code(), Some(0), "{args:?}");
            files.push(std::fs::read(dir.path().join(&name)).unwrap());
        }
        assert_eq!(files[0], files[1], "{args:?}");
    }
}
