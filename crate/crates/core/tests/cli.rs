//! End-to-end runs of the `fusioncell` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusioncell"))
        .args(args)
        .env("RUST_LOG", "warn")
        .env_remove("FUSIONCELL_CACHE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn cellular_on_wreath_product() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wreath.json");
    std::fs::write(
        &path,
        r#"{"kind":"group-induced","ambient":{"kind":"semidirect","base":{"kind":"abelian","rank":2,"relations":[[9,0],[0,9]]},"actor":2,"action":[[0,1],[1,0]]},"p":3}"#,
    )
    .unwrap();
    let v = json(&["cellular", "--fusion", path.to_str().unwrap(), "--P", "cyclic:3", "--json"]);
    assert_eq!(v["cellular"], false);
    assert_eq!(v["closure_order"], 9);
    assert_eq!(v["normal_in_F"], true);
}

#[test]
fn census_reports_existence_flag() {
    let v = json(&["catalog", "b3r", "--r", "5", "--gamma", "1", "--census", "--l", "1", "--json"]);
    assert_eq!(v["exists_outside_N"], false);
    let v = json(&["catalog", "b3r", "--r", "4", "--gamma", "0", "--census", "--l", "1", "--json"]);
    assert_eq!(v["exists_outside_N"], true);
}

#[test]
fn named_elements_are_exported() {
    let v = json(&["catalog", "b3r", "--r", "4", "--gamma", "2", "--json"]);
    for key in ["s", "s1", "s2", "s3"] {
        assert!(v["named_elements"][key].is_u64(), "{key}");
    }
    assert_eq!(v["order"], 81);
}

#[test]
fn closure_of_full_cyclic_group_is_s() {
    let spec = r#"{"kind":"generated","S":{"kind":"abelian","rank":1,"relations":[[4]]},"p":2}"#;
    let v = json(&["closure", "--fusion", spec, "--P", "cyclic:4", "--json"]);
    assert_eq!(v["closure_order"], 4);
    assert_eq!(v["sylow_order"], 4);
}

#[test]
fn emitted_specs_reparse() {
    let out = run(&["group", "wreath:3,1,2", "--spec-only"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let spec = fusioncell::group::GroupSpec::from_json(&text).unwrap();
    assert_eq!(spec, fusioncell::catalog::wreath_spec(3, 1, 2).unwrap());

    let v = json(&["fusion", "--fusion", "sym:4@2", "--json"]);
    let back: fusioncell::fusion::FusionSpec = serde_json::from_value(v["spec"].clone()).unwrap();
    assert_eq!(back, fusioncell::fusion::FusionSpec::from_json(&back.to_json()).unwrap());
    assert_eq!(v["morphisms"], 28);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["group", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--cap", "50", "group", "sym:5"]).status.code(), Some(3));
    let axiomatized = r#"{"kind":"axiomatized","S":{"kind":"abelian","rank":1,"relations":[[9]]},"p":3,"strongly_closed":[]}"#;
    assert_eq!(run(&["hyperfocal", "--fusion", axiomatized]).status.code(), Some(4));
    assert_eq!(run(&["pi1", "--b3r", "4,1"]).status.code(), Some(4));
    assert_eq!(run(&["certificate", "--fusion", "sym:4@2", "--K", "[0,1]"]).status.code(), Some(2));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache-dir", d, "report", "--fusion", "wreath:3,1,2@3", "--P", "cyclic:3", "--json"];
    let cold = run(&args);
    assert!(cold.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let warm = run(&args);
    assert_eq!(cold.stdout, warm.stdout);

    let other = tempfile::tempdir().unwrap();
    let via_env = Command::new(env!("CARGO_BIN_EXE_fusioncell"))
        .args(&args)
        .env("RUST_LOG", "warn")
        .env("FUSIONCELL_CACHE", other.path())
        .output()
        .unwrap();
    assert_eq!(via_env.stdout, cold.stdout);
    assert_eq!(std::fs::read_dir(other.path()).unwrap().count(), 1);
}

#[test]
fn seed_file_extends_generated_spec() {
    let dir = tempfile::tempdir().unwrap();
    let seeds = dir.path().join("seeds.json");
    std::fs::write(&seeds, r#"[{"domain":[1,2],"map":{"1":2,"2":3}}]"#).unwrap();
    let spec = r#"{"kind":"generated","S":{"kind":"abelian","rank":2,"relations":[[2,0],[0,2]]},"p":2}"#;
    let v = json(&["--seed-file", seeds.to_str().unwrap(), "saturated", "--fusion", spec, "--json"]);
    assert_eq!(v["saturated"], true);
    let v = json(&["--seed-file", seeds.to_str().unwrap(), "m0", "--fusion", spec, "--json"]);
    assert_eq!(v["m0"], 1);
}
