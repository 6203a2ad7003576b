use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-factor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn construct(dir: &Path, file: &str, args: &[&str]) -> String {
    let out = dir.join(file);
    let path = out.to_str().unwrap().to_string();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn check_example_passes() {
    let o = run(&["check", "--example", "double:C2", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result     PASS"));
}

#[test]
fn constructed_bundles_check_clean() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str])] = &[
        ("double_c2.json", &["--kind", "double", "--group", "C2"]),
        ("double_s3.json", &["--kind", "double", "--group", "S3", "--field", "gf:101"]),
        ("reflective_c3.json", &["--kind", "reflective", "--group", "C3"]),
        ("group_s3.json", &["--kind", "group", "--group", "S3"]),
        ("dual_c3.json", &["--kind", "dual", "--group", "C3", "--field", "gf:7"]),
        ("sweedler0.json", &["--kind", "sweedler", "--lambda", "0"]),
        ("sweedler_half.json", &["--kind", "sweedler", "--lambda", "1/2"]),
    ];
    for (file, args) in cases {
        let path = construct(dir.path(), file, args);
        let o = run(&["check", &path, "--all"]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stdout(&o));
    }
}

#[test]
fn reflective_bundle_is_nine_dimensional() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "r.json", &["--kind", "reflective", "--group", "C3"]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["comodule"]["dim"], 9);
    assert_eq!(v["field"], "Q");
}

#[test]
fn broken_antipode_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "g.json", &["--kind", "group", "--group", "C3"]);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["hopf"]["antipode"][1][2] = serde_json::json!(5);
    std::fs::write(&path, v.to_string()).unwrap();
    let o = run(&["check", &path, "--hopf"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("antipode identity fails at basis index"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["check", "missing.json"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--example", "torus:C2"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "g.json", &["--kind", "group", "--group", "C2"]);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["colour"] = serde_json::json!("blue");
    std::fs::write(&path, v.to_string()).unwrap();
    let o = run(&["check", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn factorizability_reports() {
    let o = run(&["factorizable", "--example", "reflective-trivial:C2", "--level", "comodule"]);
    assert!(stdout(&o).contains("rank 4 / dim 4: FACTORIZABLE"));
    let o = run(&["factorizable", "--example", "subgroup:S3:C2", "--level", "comodule"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rank 1 / dim 6: NOT factorizable"));
    let o = run(&["factorizable", "--example", "regular:C2", "--level", "weak"]);
    assert!(stdout(&o).contains("source dim 2, target dim 2, rank 1: NOT weakly factorizable"));
    let o = run(&["factorizable", "--example", "double:C3", "--level", "hopf"]);
    assert!(stdout(&o).contains("rank 9 / dim 9: FACTORIZABLE"));
}

#[test]
fn simplicity_reports() {
    assert!(stdout(&run(&["simple", "--example", "reflective-trivial:C2"])).contains("Simple (operator algebra dim 16)"));
    assert!(stdout(&run(&["simple", "--example", "subgroup:S3:C3"])).contains("Simple"));
    let o = run(&["simple", "--example", "trivial-coaction:C2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "not-simple");
    assert_eq!(v["ideal"].as_array().unwrap().len(), 1);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["check", "--example", "double:S3", "--field", "gf:101", "--json"][..],
        &["factorizable", "--example", "sweedler:1", "--level", "weak"][..],
        &["simple", "--example", "double:C2", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "a.json", &["--kind", "double", "--group", "S3"]);
    let b = construct(dir.path(), "b.json", &["--kind", "double", "--group", "S3"]);
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn schema_lists_the_serialized_keys() {
    let schema_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/bundle.schema.json");
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "d.json", &["--kind", "double", "--group", "C2"]);
    let bundle: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    for (key, value) in bundle.as_object().unwrap() {
        assert!(schema["properties"].get(key).is_some(), "{key}");
        if let (Some(obj), Some(props)) = (value.as_object(), schema["properties"][key]["properties"].as_object()) {
            for k in obj.keys() {
                assert!(props.contains_key(k), "{key}.{k}");
            }
        }
    }
}
