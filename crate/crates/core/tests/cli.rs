use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ccgmap::document::MapDocument;
use ccgmap::export;
use ccgmap::four_colour::FaceColouring;
use ccgmap::growth::grow;
use ccgmap::oracle::ConjectureReport;
use ccgmap::rotation::validate_rotation_colouring;
use ccgmap::{fixtures, RotationMap};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn ccgmap(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccgmap"))
        .args(args)
        .arg("--input")
        .arg(input)
        .env_remove("CCG_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_temp(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn validate_exit_codes() {
    let o = ccgmap(&["validate"], &fixture("cube.json"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid");

    let dir = tempfile::tempdir().unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(fixtures::CUBE_JSON).unwrap();
    doc["vertex_edge"][0][0] = 0.into();
    let bad = write_temp(dir.path(), "bad.json", &doc.to_string());
    let o = ccgmap(&["validate"], &bad);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("vertex_edge row 0"), "{text}");
    assert!(text.contains("vertex_edge column 0"), "{text}");

    let o = ccgmap(&["validate"], &dir.path().join("missing.json"));
    assert_eq!(o.status.code(), Some(2));
    let garbage = write_temp(dir.path(), "garbage.json", "{not json");
    assert_eq!(ccgmap(&["validate"], &garbage).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let o = ccgmap(&["enumerate"], &fixture("cube.json"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "9 CCGs, 6 Hamiltonian, 4 labellings");
    let o = ccgmap(&["enumerate"], &fixture("theta.json"));
    assert_eq!(stdout(&o).trim(), "3 CCGs, 3 Hamiltonian, 1 labelling");

    let dir = tempfile::tempdir().unwrap();
    let bare = export::to_json(&fixtures::cube(), None);
    let p = write_temp(dir.path(), "bare.json", &bare);
    assert_eq!(ccgmap(&["enumerate"], &p).status.code(), Some(2));
}

#[test]
fn enumerate_writes_results() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = ccgmap(&["enumerate", "--out", out.to_str().unwrap()], &fixture("cube.json"));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["ccgs"].as_array().unwrap().len(), 9);
    assert_eq!(v["hamiltonian"].as_array().unwrap().len(), 6);
    assert_eq!(v["labellings"].as_array().unwrap().len(), 4);
}

#[test]
fn grow_trace_records() {
    let dir = tempfile::tempdir().unwrap();
    for (iterations, records) in [(4, 5), (0, 1)] {
        let trace = dir.path().join(format!("t{iterations}.jsonl"));
        let o = ccgmap(
            &["grow", "--iterations", &iterations.to_string(), "--seed", "11", "--trace", trace.to_str().unwrap()],
            &fixture("cube.json"),
        );
        assert_eq!(o.status.code(), Some(0));
        let text = std::fs::read_to_string(&trace).unwrap();
        assert_eq!(text.lines().count(), records);
        assert_eq!(stdout(&o).lines().count(), records);
        let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        assert_eq!(last["step"], iterations);
        assert_eq!(last["map"]["vertex_edge"].as_array().unwrap().len(), 8 + 2 * iterations);
    }
}

#[test]
fn grow_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.jsonl");
    ccgmap(&["grow", "--iterations", "3", "--seed", "5", "--trace", trace.to_str().unwrap()], &fixture("theta.json"));
    let lib = grow(&fixtures::theta(), &fixtures::theta_seed(), 3, 5).unwrap();
    assert_eq!(std::fs::read_to_string(trace).unwrap(), lib.to_json_lines());
}

#[test]
fn check_exit_codes() {
    let o = ccgmap(&["check"], &fixture("cube.json"));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("holds")).count(), 2);

    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("witness.json");
    let o = ccgmap(&["check", "--out", witness.to_str().unwrap()], &fixture("k33_planted_gap.json"));
    assert_eq!(o.status.code(), Some(1));
    let reports: Vec<ConjectureReport> = serde_json::from_str(&std::fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].witness.is_some());

    assert_eq!(ccgmap(&["check"], &fixture("cube_grown_gap.json")).status.code(), Some(1));
}

#[test]
fn check_cap_exceeded() {
    let trace = grow(&fixtures::theta(), &fixtures::theta_seed(), 19, 1).unwrap();
    let last = trace.steps.last().unwrap();
    assert_eq!(last.map.edge_count(), 60);
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(dir.path(), "big.json", &export::to_json(&last.map, Some(&last.seed)));
    assert_eq!(ccgmap(&["check"], &p).status.code(), Some(4));
    assert_eq!(ccgmap(&["four-colour"], &write_temp(dir.path(), "bare.json", &export::to_json(&last.map, None))).status.code(), Some(4));
    // the flag wins over the default
    let o = ccgmap(&["check", "--cap", "59"], &p);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let o = ccgmap(&["export", "--format", "dot"], &fixture("cube.json"));
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("graph "));
    for k in 0..3 {
        assert_eq!(dot.matches(&format!("class={k}")).count(), 4);
    }

    let o = ccgmap(&["export", "--format", "dot"], &fixture("theta.json"));
    let dot = stdout(&o);
    assert_eq!(dot.matches("v1 -- v2").count(), 3);
    assert!(dot.contains("key=1") && dot.contains("key=2") && dot.contains("key=3"));

    for name in ["cube.json", "theta.json", "tetrahedron.json", "k33_planted_gap.json", "cube_grown_gap.json"] {
        let o = ccgmap(&["export"], &fixture(name));
        let text = stdout(&o);
        let doc = MapDocument::from_json(&text).unwrap();
        let original = MapDocument::from_json(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        let map = doc.to_map().unwrap();
        assert_eq!(map, original.to_map().unwrap(), "{name}");
        assert_eq!(doc.seed_ccg(&map).unwrap(), original.seed_ccg(&map).unwrap(), "{name}");
        let p = write_temp(dir.path(), name, &text);
        assert_eq!(stdout(&ccgmap(&["export"], &p)), text, "{name}");
    }
}

#[test]
fn four_colour_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fc.json");
    let o = ccgmap(&["four-colour", "--out", out.to_str().unwrap()], &fixture("rot_pentagonal_pyramid.json"));
    assert_eq!(o.status.code(), Some(0));
    let fc: FaceColouring = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let rmap = RotationMap::from_json(fixtures::PENTAGONAL_PYRAMID_JSON).unwrap();
    assert!(validate_rotation_colouring(&rmap, &fc).unwrap());

    let o = ccgmap(&["four-colour"], &fixture("cube.json"));
    let fc: FaceColouring = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(ccgmap::four_colour::validate_four_colouring(&fixtures::cube(), &fc));
}

#[test]
fn deterministic_output() {
    let args = ["grow", "--iterations", "6", "--seed", "3"];
    let a = ccgmap(&args, &fixture("theta.json"));
    let b = ccgmap(&args, &fixture("theta.json"));
    assert_eq!(a.stdout, b.stdout);
}
