use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use simson::equidistant::{
    make_equidistant, verify_archimedes, verify_isogonal, verify_lambert_all, verify_optical,
    verify_parallel_chords, verify_simson, EquidistantConfig,
};
use simson::geom::{Point, Tolerance};
use simson::scene::SceneDocument;
use simson::VerificationReport;

fn simson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simson")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write_octagon(dir: &Path) -> String {
    let path = dir.join("octagon.json");
    let path = path.to_str().unwrap().to_owned();
    let out = simson(&["construct", "--equidistant", "--s", "1", "--delta", "1", "--n", "8", "--out", &path]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn polygon_vertices(scene: &Value) -> Vec<Value> {
    scene["entities"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["kind"] == "polygon")
        .unwrap()["vertices"]
        .as_array()
        .unwrap()
        .clone()
}

#[test]
fn construct_equidistant_octagon() {
    let out = simson(&["construct", "--equidistant", "--s", "1", "--delta", "1", "--n", "8"]);
    assert_eq!(code(&out), 0);
    let scene = json(&out);
    assert_eq!(scene["schema_version"], "1");
    let v = polygon_vertices(&scene);
    assert_eq!(v.len(), 8);
    assert_eq!(v[1], serde_json::json!([3.0, 2.0]));
}

#[test]
fn construct_from_feet() {
    let out = simson(&["construct", "--feet", "-1,0;0,0;1,0", "--simson-point", "0,1", "--simson-line", "y=0"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(polygon_vertices(&json(&out)).len(), 3);
}

#[test]
fn construct_exit_codes() {
    assert_eq!(code(&simson(&["construct", "--equidistant", "--s", "0", "--delta", "1", "--n", "8"])), 3);
    assert_eq!(code(&simson(&["construct", "--equidistant", "--s", "1", "--delta", "1"])), 2);
    assert_eq!(code(&simson(&["construct", "--feet", "0,0;1,0", "--simson-point", "0,1"])), 2);
    assert_eq!(code(&simson(&["construct", "--feet", "0,0;x,0;1,0", "--simson-point", "0,1", "--simson-line", "y=0"])), 2);
    let on_line = simson(&["construct", "--feet", "-1,0;0,0;1,0", "--simson-point", "5,0", "--simson-line", "y=0"]);
    assert_eq!(code(&on_line), 3);
    assert!(String::from_utf8_lossy(&on_line.stderr).contains("Simson line"));
    let dup = simson(&["construct", "--feet", "-1,0;1,0;1,0", "--simson-point", "0,1", "--simson-line", "y=0"]);
    assert_eq!(code(&dup), 3);
    assert_eq!(code(&simson(&["frobnicate"])), 2);
    assert_eq!(code(&simson(&["construct", "--tolerance", "-1", "--equidistant"])), 2);
}

#[test]
fn verify_octagon_passes() {
    let dir = tempfile::tempdir().unwrap();
    let scene = write_octagon(dir.path());
    let out = simson(&["verify", "--in", &scene, "--checks", "all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let report = json(&out);
    assert_eq!(report["overall"], true);
    for c in report["checks"].as_array().unwrap() {
        assert!(c["residual"].as_f64().unwrap() < 1e-9, "{c}");
    }
    let lambert = simson(&["verify", "--in", &scene, "--checks", "lambert", "--triple", "1,2,3"]);
    assert_eq!(code(&lambert), 0);
    assert_eq!(json(&lambert)["checks"].as_array().unwrap().len(), 1);
}

#[test]
fn negative_control_fails() {
    let dir = tempfile::tempdir().unwrap();
    let scene = write_octagon(dir.path());
    for check in ["simson", "parallel-chords", "optical", "archimedes", "lambert"] {
        let out = simson(&["verify", "--in", &scene, "--checks", check, "--negative-control"]);
        assert_eq!(code(&out), 4, "{check}");
        assert_eq!(json(&out)["overall"], false);
    }
}

#[test]
fn verify_pentagon_has_no_simson_point() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pentagon.json");
    let vertices: Vec<[f64; 2]> = (0..5)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / 5.0;
            [t.cos(), t.sin()]
        })
        .collect();
    let doc = serde_json::json!({"schema_version": "1", "entities": [
        {"id": "P", "kind": "polygon", "vertices": vertices}]});
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = simson(&["verify", "--in", path.to_str().unwrap(), "--checks", "simson"]);
    assert_eq!(code(&out), 4);
    let report = json(&out);
    assert_eq!(report["overall"], false);
    assert_eq!(report["checks"][0]["note"], "no common intersection of characterization circles");
}

#[test]
fn verify_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema_version\": \"1\", \"entities\": [").unwrap();
    assert_eq!(code(&simson(&["verify", "--in", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&simson(&["verify"])), 2);
    assert_eq!(code(&simson(&["verify", "--in", "/nonexistent/scene.json"])), 2);
    let scene = write_octagon(dir.path());
    assert_eq!(code(&simson(&["verify", "--in", &scene, "--checks", "lambert", "--triple", "1,2,9"])), 2);
    assert_eq!(code(&simson(&["verify", "--in", &scene, "--checks", "nonsense"])), 2);
    let flat = dir.path().join("flat.json");
    std::fs::write(&flat, r#"{"schema_version":"1","entities":[{"id":"P","kind":"polygon","vertices":[[0,0],[1,0],[2,0],[1,1]]}]}"#).unwrap();
    assert_eq!(code(&simson(&["verify", "--in", flat.to_str().unwrap(), "--checks", "simson"])), 3);
}

#[test]
fn scene_round_trip_reproduces_residuals() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heptagon.json");
    let path = path.to_str().unwrap();
    let out = simson(&[
        "construct", "--equidistant", "--s", "-0.7", "--delta", "0.3", "--n", "7", "--x0", "-1.1", "--out", path,
    ]);
    assert_eq!(code(&out), 0);

    let cfg = EquidistantConfig::new(-0.7, -1.1, 0.3, 7).unwrap();
    let sp = make_equidistant(&cfg).unwrap().simson;
    let read = SceneDocument::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    let (_, from_file) = simson::scene::polygon_of(read.polygon_entity(None).unwrap()).unwrap();
    assert_eq!(from_file.unwrap(), sp);

    let tol = Tolerance::DEFAULT;
    let mut expected = VerificationReport::new(tol);
    expected.merge(verify_simson(&sp.polygon, Some(sp.simson_point), tol).unwrap());
    for r in [
        verify_parallel_chords(&sp, tol),
        verify_isogonal(&sp, tol),
        verify_optical(&sp, tol),
        verify_archimedes(&sp, tol),
        verify_lambert_all(&sp, tol),
    ] {
        expected.merge(r);
    }
    let got: VerificationReport = serde_json::from_slice(&simson(&["verify", "--in", path]).stdout).unwrap();
    assert_eq!(got, expected);
}

#[test]
fn approx_outputs() {
    let out = simson(&["approx", "--s", "1", "--a", "0", "--b", "4", "--n", "4", "--compare-quadrature"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["knots"], serde_json::json!([0.0, 1.0, 2.0, 3.0, 4.0]));
    assert!((v["l1_error"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-12);
    assert!(v["quadrature"]["l1_relative_difference"].as_f64().unwrap() < 1e-12);

    let moved = simson(&["approx", "--s", "1", "--a", "0", "--b", "4", "--n", "4", "--perturb-knot", "2,0.001"]);
    assert_eq!(code(&moved), 0);
    assert!(json(&moved)["perturbation"]["objective_delta"].as_f64().unwrap() > 0.0);
    let back = simson(&["approx", "--s", "1", "--a", "0", "--b", "4", "--n", "4", "--perturb-knot", "2,-0.001"]);
    assert!(json(&back)["perturbation"]["objective_delta"].as_f64().unwrap() > 0.0);

    assert_eq!(code(&simson(&["approx", "--s", "1", "--a", "4", "--b", "0", "--n", "4"])), 2);
    assert_eq!(code(&simson(&["approx", "--s", "0", "--a", "0", "--b", "4", "--n", "4"])), 3);
    assert_eq!(code(&simson(&["approx", "--s", "1", "--a", "0", "--b", "4", "--n", "4", "--perturb-knot", "4,0.1"])), 2);
    assert_eq!(code(&simson(&["approx", "--s", "1", "--a", "0", "--b", "4", "--n", "4", "--perturb-knot", "2,5"])), 2);
}

#[test]
fn limit_table() {
    let out = simson(&["limit", "--s", "1", "--window", "4", "--m-max", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for w in rows.windows(2) {
        let ratio = w[0]["hausdorff"].as_f64().unwrap() / w[1]["hausdorff"].as_f64().unwrap();
        assert!((ratio - 4.0).abs() < 0.2);
    }
    let single = json(&simson(&["limit", "--s", "1", "--m-max", "0"]));
    assert_eq!(single["rows"].as_array().unwrap().len(), 1);
    assert!(single.get("min_order").is_none());
    let mirrored = json(&simson(&["limit", "--s", "-1", "--m-max", "3"]));
    for (a, b) in v["rows"].as_array().unwrap().iter().zip(mirrored["rows"].as_array().unwrap()) {
        assert_eq!(a["hausdorff"], b["hausdorff"]);
    }
    assert_eq!(code(&simson(&["limit", "--s", "0"])), 3);
    assert_eq!(code(&simson(&["limit", "--s", "1", "--window", "-1"])), 2);
}

#[test]
fn svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let render = |name: &str| {
        let path = dir.path().join(name);
        let out = simson(&[
            "construct", "--equidistant", "--s", "1", "--delta", "1", "--n", "5", "--svg", path.to_str().unwrap(), "--quiet",
        ]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
        std::fs::read_to_string(path).unwrap()
    };
    let (a, b) = (render("a.svg"), render("b.svg"));
    assert_eq!(a, b);
    assert!(a.contains("<svg") && a.contains("version=\"1.1\""));
    for label in [">S</text>", ">L</text>", "V<tspan", "X<tspan"] {
        assert!(a.contains(label), "{label}");
    }
    let approx_svg = dir.path().join("approx.svg");
    let out = simson(&["approx", "--s", "1", "--a", "0", "--b", "4", "--n", "4", "--svg", approx_svg.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(std::fs::read_to_string(approx_svg).unwrap().contains("<polyline"));
}

#[test]
fn negative_control_offset_is_relative() {
    let poly = simson::Polygon::regular(6, Point::ORIGIN, 2.0).unwrap();
    let (i, off) = simson::cli::negative_control_offset(&poly, 1e-3);
    assert_eq!(i, 3);
    assert!((off.norm() - 1e-3 * poly.scale()).abs() < 1e-15);
}
