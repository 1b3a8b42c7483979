use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tannakin_core::fixtures::{self, FixtureSpec};

const S3: &str = r#"{"degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]}"#;

fn tannakin(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tannakin"))
        .args(args)
        .current_dir(dir)
        .env_remove("TANNAKIN_FIXTURE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn with_s3() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("s3.json"), S3).unwrap();
    dir
}

#[test]
fn group_summary_of_s3() {
    let dir = with_s3();
    let o = tannakin(&["group", "s3.json", "--json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["conjugacy_classes"], 3);
    assert_eq!(v["normal_subgroups"].as_array().unwrap().len(), 3);
}

#[test]
fn trivial_group_from_a_table() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("one.json"), r#"{"table": [[0]]}"#).unwrap();
    let o = tannakin(&["group", "one.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order: 1"));
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.json"), r#"{"table": [[0, 1], [1, 1]]}"#).unwrap();
    fs::write(dir.path().join("junk.json"), "not json").unwrap();
    for args in [["group", "bad.json"], ["group", "junk.json"], ["group", "missing.json"]] {
        assert_eq!(tannakin(&args, dir.path()).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn quotient_by_a3_passes() {
    let dir = with_s3();
    let o = tannakin(&["quotient", "--group", "s3.json", "--subgroup", "(0 1 2)"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["subgroup"].as_array().unwrap().len(), 3);
    // sign lies in T^H and becomes trivial in the quotient.
    assert_eq!(v["membership"][1]["object"], "sign");
    assert_eq!(v["membership"][1]["trivial_in_q"], true);
    // End of the regular representation: |G|^2 / |H| = 12.
    assert_eq!(v["hom_q"][4][4], 12);
}

#[test]
fn non_normal_subgroup_exits_3() {
    let dir = with_s3();
    let o = tannakin(&["quotient", "--group", "s3.json", "--subgroup", "(0 1)"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not normal"));
}

#[test]
fn trivial_subgroup_keeps_all_linear_maps() {
    let dir = with_s3();
    let objects = r#"[
        {"name": "sign", "rep": {"group": "S3", "dim": 1, "generator_matrices": [[[-1, 1]], [[1, 1]]]}},
        {"name": "unit", "rep": {"group": "S3", "dim": 1, "generator_matrices": [[[1, 1]], [[1, 1]]]}}
    ]"#;
    fs::write(dir.path().join("objects.json"), objects).unwrap();
    let o = tannakin(&["quotient", "--group", "s3.json", "--subgroup", "0", "--objects", "objects.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hom_t"], serde_json::json!([[1, 0], [0, 1]]));
    assert_eq!(v["hom_q"], serde_json::json!([[1, 1], [1, 1]]));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    for suite in ["q3a", "cocycle"] {
        let o = tannakin(&["verify", suite], dir.path());
        assert_eq!(o.status.code(), Some(0), "{suite}");
        assert!(stdout(&o).contains("PASS"));
    }
    assert_eq!(tannakin(&["verify", "nope"], dir.path()).status.code(), Some(2));
    assert_eq!(tannakin(&["verify", "q3a", "--fixture", "nope"], dir.path()).status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for out in ["a.json", "b.json"] {
        let o = tannakin(&["verify", "oracle", "--fixture", "s3-a3", "--json", out], dir.path());
        assert_eq!(o.status.code(), Some(0));
    }
    let a = fs::read(dir.path().join("a.json")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.json")).unwrap());
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["fixtures"], serde_json::json!(["s3-a3"]));
}

#[test]
fn fixture_dir_overrides_builtin_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = FixtureSpec::from_fixture(&fixtures::s3());
    spec.objects.truncate(2);
    fs::write(dir.path().join("s3-a3.json"), serde_json::to_string(&spec).unwrap()).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_tannakin"))
        .args(["verify", "q3a", "--fixture", "s3-a3", "--json", "r.json"])
        .current_dir(dir.path())
        .env("TANNAKIN_FIXTURE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&fs::read(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
}
