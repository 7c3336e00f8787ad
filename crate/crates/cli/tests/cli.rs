use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.display().to_string()
}

fn hqft(args: &[&str]) -> (i32, Value) {
    let out: Output = Command::new(env!("CARGO_BIN_EXE_hqft")).args(args).output().expect("binary runs");
    let json = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().expect("exited"), json)
}

fn z(v: &Value, key: &str) -> (f64, f64) {
    (v[key][0].as_f64().unwrap(), v[key][1].as_f64().unwrap())
}

#[test]
fn check_algebra_accepts_and_rejects() {
    let (code, v) = hqft(&["check-algebra", &data("c2.json")]);
    assert_eq!((code, v["center_dim"].as_u64()), (0, Some(2)));
    for c in v["checks"].as_array().unwrap() {
        assert!(c["tolerance"].as_f64().unwrap() > 0.0);
    }
    let (code, v) = hqft(&["check-algebra", &data("dual_numbers.json")]);
    assert_eq!((code, v["error"].as_str()), (2, Some("SingularMetric")));
    let (code, _) = hqft(&[
        "check-algebra",
        &data("m2.json"),
        "--group",
        &data("z2.json"),
        "--action",
        &data("minus_identity.json"),
    ]);
    assert_eq!(code, 0);
}

#[test]
fn statesum_values() {
    let (code, v) = hqft(&["statesum", &data("sphere.json"), &data("ground.json"), "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(z(&v, "Z"), (1.0, 0.0));
    assert_eq!((v["chi"].as_i64(), v["genus"].as_i64()), (Some(2), Some(0)));

    let (_, v) = hqft(&["statesum", &data("torus.json"), &data("m2_plus_c.json")]);
    let (re, im) = z(&v, "Z");
    assert!((re - 2.0).abs() < 1e-10 && im.abs() < 1e-10);

    let (code, v) = hqft(&[
        "oracle",
        &data("torus_class3.json"),
        &data("ground.json"),
        "--group",
        &data("z4.json"),
        "--action",
        &data("phi_i.json"),
    ]);
    assert_eq!(code, 0);
    let (re, im) = z(&v, "Z");
    assert!(re.abs() < 1e-12 && (im + 1.0).abs() < 1e-12);
    assert_eq!(v["total_class"], serde_json::json!([[3]]));
}

#[test]
fn moves_write_surfaces_and_keep_z() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("refined.json");
    let out = out.to_str().unwrap();
    let (code, v) = hqft(&["move", &data("tetrahedron.json"), "1-3:2", "--out", out]);
    assert_eq!(code, 0);
    assert_eq!((v["triangles_before"].as_u64(), v["triangles_after"].as_u64()), (Some(4), Some(6)));
    let (_, before) = hqft(&["statesum", &data("tetrahedron.json"), &data("m2.json")]);
    let (_, after) = hqft(&["statesum", out, &data("m2.json")]);
    let (a, b) = (z(&before, "Z"), z(&after, "Z"));
    assert!((a.0 - b.0).abs() < 1e-8 * a.0.abs().max(1.0) && (a.1 - b.1).abs() < 1e-8);

    let (code, v) = hqft(&["move", &data("torus_class3.json"), "shift:0:1", "--group", &data("z4.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["total_class_before"], v["total_class_after"]);

    let (code, v) = hqft(&["move", &data("torus.json"), "2-2:0"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("MultiSharedEdge")));
}

#[test]
fn cobordism_words() {
    let (code, v) = hqft(&["cobord", "pants", &data("c2.json")]);
    assert_eq!(code, 0);
    assert_eq!((v["domain"].as_str(), v["codomain"].as_str()), (Some("++"), Some("+")));
    let m = v["matrix"].as_array().unwrap();
    assert_eq!((m.len(), m[0].as_array().unwrap().len()), (2, 4));

    let (code, v) = hqft(&["cobord", "eta ; eps", &data("ground.json")]);
    assert_eq!((code, v["error"].as_str()), (1, Some("TypeMismatch")));
    let (code, v) = hqft(&["cobord", "pants ;", &data("ground.json")]);
    assert_eq!((code, v["error"].as_str()), (1, Some("SyntaxError")));

    let (_, w) = hqft(&["cobord", "unit ; copants ; pants ; counit", &data("m2.json")]);
    let (_, s) = hqft(&["statesum", &data("torus.json"), &data("m2.json")]);
    let wz = w["matrix"][0][0][0].as_f64().unwrap();
    assert!((wz - z(&s, "Z").0).abs() < 1e-10);
}

#[test]
fn genus_compares_both_pipelines() {
    let (code, v) = hqft(&[
        "genus",
        "2",
        &data("ground.json"),
        "--group",
        &data("z4.json"),
        "--action",
        &data("phi_i.json"),
        "--class",
        "1",
    ]);
    assert_eq!(code, 0, "{v}");
    let (re, im) = z(&v, "Z_statesum");
    // Z = i^k on every genus over the ground field
    assert!(re.abs() < 1e-10 && (im - 1.0).abs() < 1e-10);
}

#[test]
fn serial_runs_are_reproducible() {
    let args = ["statesum", &data("tetrahedron.json"), &data("m2_plus_c.json")];
    let (_, a) = hqft(&args);
    let (_, b) = hqft(&args);
    assert_eq!(a["Z"], b["Z"]);
    assert_eq!(a["inputs"], b["inputs"]);
}

#[test]
fn acceptance_exit_codes() {
    let (code, v) = hqft(&["acceptance", "--parallel"]);
    assert_eq!(code, 0);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 8);
    let (code, v) = hqft(&["acceptance", "--negate-eta"]);
    assert_eq!(code, 3);
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failing.iter().any(|n| n.contains("triangle_plus")), "{failing:?}");
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, v) = hqft(&["check-algebra", "/nonexistent/algebra.json"]);
    assert_eq!((code, v["error"].as_str()), (1, Some("Read")));
}
