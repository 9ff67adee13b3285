use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilecheck"))
        .args(args)
        .output()
        .expect("spawn tilecheck")
}

fn run_file(cmd: &str, rel: &str, extra: &[&str]) -> Output {
    let path = data(rel);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Compare against tests/golden/<name>, rewriting it when UPDATE_GOLDEN is set.
fn assert_golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert!(actual == expected, "golden mismatch for {name}:\n--- expected\n{expected}\n--- actual\n{actual}");
}

#[test]
fn golden_json_reports() {
    let cases: &[(&str, &str, &str, &[&str], i32)] = &[
        ("classify_truncated_octahedron.json", "classify", "fedorov/truncated_octahedron.json", &[], 0),
        ("classify_tetrahedron.json", "classify", "raw/tetrahedron.json", &[], 1),
        ("analyze_octagonal_prism.json", "analyze", "fedorov/octagonal_prism.json", &[], 1),
        ("analyze_rhombic_dodecahedron.json", "analyze", "fedorov/rhombic_dodecahedron.json", &[], 0),
        ("dvcell_face_centered_cubic.json", "dvcell", "lattices/face_centered_cubic.json", &[], 0),
        ("multiplicity_cube_twofold.json", "multiplicity", "tilings/cube_twofold.json", &["--samples", "4"], 0),
        ("multiplicity_octagonal_prism.json", "multiplicity", "tilings/octagonal_prism_twofold.json", &["--samples", "2"], 1),
        ("wheels_square_twofold.json", "wheels", "planar/square_twofold.json", &[], 0),
        ("wheels_hexagon_onefold.json", "wheels", "planar/hexagon_onefold.json", &[], 0),
        ("lemma6_decagonal_prism.json", "lemma6", "fedorov/decagonal_prism.json", &["--include-boundary-index"], 0),
    ];
    for (golden, cmd, file, extra, code) in cases {
        let mut args = extra.to_vec();
        args.push("--json");
        let o = run_file(cmd, file, &args);
        assert_eq!(o.status.code(), Some(*code), "{golden}: {}", String::from_utf8_lossy(&o.stderr));
        assert_golden(golden, &stdout(&o));
    }
}

#[test]
fn golden_text_reports() {
    let o = run_file("analyze", "fedorov/octagonal_prism.json", &[]);
    assert_golden("analyze_octagonal_prism.txt", &stdout(&o));
    let o = run(&["params", "--max-m", "7"]);
    assert_golden("params_upto_7.txt", &stdout(&o));
    let o = run_file("wheels", "planar/square_onefold.json", &[]);
    assert_golden("wheels_square_onefold.txt", &stdout(&o));
}

#[test]
fn golden_suite() {
    let o = run(&["theorem1", "--json", "--samples", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_golden("theorem1_samples4.json", &stdout(&o));
}

#[test]
fn classify_truncated_octahedron_text() {
    let o = run_file("classify", "fedorov/truncated_octahedron.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "TruncatedOctahedron\n");
}

#[test]
fn octagonal_prism_fails_with_belt_of_eight() {
    let o = run_file("analyze", "fedorov/octagonal_prism.json", &["--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["belt_criterion"]["verdict"], "fail");
    assert_eq!(v["belt_criterion"]["witness"]["condition"], "belt_length");
    assert_eq!(v["belt_criterion"]["witness"]["length"], 8);
}

#[test]
fn params_single_m_has_one_row() {
    let o = run(&["params", "--m", "5", "--k", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["feasible"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["kappa"], 1);
    assert_eq!(rows[0]["ell"], 0);
    assert_eq!(rows[0]["varpi"], "2");
    assert_eq!(rows[0]["varphi"], 0);
}

#[test]
fn malformed_input_reports_field_and_exits_2() {
    let dir = std::env::temp_dir().join(format!("tilecheck-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("bad_rational.json", r#"{"kind":"zonotope","generators":[[1,0,0],[0,"x",0]]}"#, "generators[1][1]"),
        (
            "bad_nested.json",
            "{\"kind\":\"tiling3d\",\n\"polytope\":{\"kind\":\"zonotope\",\"generators\":[[1,0,\"1/0\"]]},\"base_translates\":[],\"k\":1}",
            "polytope.generators[0][2]",
        ),
        ("bad_kind.json", r#"{"kind":"cylinder"}"#, "kind"),
        ("not_json.json", "{", "line 1"),
    ];
    for (name, body, needle) in cases {
        let path = dir.join(name);
        fs::write(&path, body).unwrap();
        let o = run(&["analyze", path.to_str().unwrap(), "--json"]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(o.stdout.is_empty(), "{name}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert!(err.starts_with("error: "), "{name}: {err}");
        assert!(err.contains(needle), "{name}: {err}");
    }
    let o = run(&["analyze", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn wrong_document_kind_is_an_error() {
    let o = run_file("dvcell", "fedorov/cube.json", &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_file("wheels", "tilings/cube_onefold.json", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_is_repeatable_and_thread_independent() {
    let a = run_file("multiplicity", "tilings/hexagonal_prism.json", &["--json", "--samples", "5"]);
    let b = run_file("multiplicity", "tilings/hexagonal_prism.json", &["--json", "--samples", "5", "--threads", "1"]);
    let c = run_file("multiplicity", "tilings/hexagonal_prism.json", &["--json", "--samples", "5", "--threads", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
}

#[test]
fn sample_documents_parse() {
    let mut count = 0;
    for dir in ["fedorov", "raw", "lattices", "tilings", "planar"] {
        for entry in fs::read_dir(data(dir)).unwrap() {
            let path = entry.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            tilecheck::document::parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            count += 1;
        }
    }
    assert_eq!(count, 20);
}
