mod common;

use std::path::PathBuf;

use symgen::cli::run;

use common::{fixture_path, FIXTURES};

fn symgen(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["symgen"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path(name: &str) -> String {
    fixture_path(name).to_string_lossy().into_owned()
}

fn golden(file: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(file);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn enumerate_reports() {
    let (code, out, _) = symgen(&["enumerate", &path("l2_19")]);
    assert_eq!(code, 0);
    assert!(out.contains("index 57, order 3420, nodes 1/6/30/20"));
    let (code, out, _) = symgen(&["enumerate", &path("u3_3")]);
    assert_eq!(code, 0);
    assert!(out.contains("index 36, order 12096, nodes 1/14/21"));
    let (code, out, _) = symgen(&["enumerate", &path("5sq_d6")]);
    assert_eq!(code, 0);
    assert!(out.contains("index 50, order 300"));
    assert!(out.contains("14 double cosets"));
}

#[test]
fn graphs_match_golden_files() {
    for name in FIXTURES {
        for format in ["dot", "json"] {
            let (code, out, _) = symgen(&["graph", &path(name), "--format", format]);
            assert_eq!(code, 0);
            assert_eq!(out, golden(&format!("{name}.{format}")), "{name}.{format}");
            let (_, again, _) = symgen(&["graph", &path(name), "--format", format]);
            assert_eq!(out, again);
        }
    }
}

#[test]
fn graph_out_file() {
    let dir = std::env::temp_dir().join(format!("symgen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("l2_19.dot");
    let (code, out, _) = symgen(&["graph", &path("l2_19"), "--out", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(
        std::fs::read_to_string(&target).unwrap(),
        golden("l2_19.dot")
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn element_commands() {
    let u3 = path("u3_3");
    let (code, perm, _) = symgen(&["elt", &u3, "convert", "(id | 𝟎.0.𝟎)"]);
    assert_eq!(code, 0);
    let (_, back, _) = symgen(&["elt", &u3, "convert", perm.trim()]);
    assert_eq!(back.trim(), "(𝟎,0)(𝟏,1)(𝟐,2)(𝟑,3)(𝟒,4)(𝟓,5)(𝟔,6) |");
    let (_, twice, _) = symgen(&["elt", &u3, "convert", back.trim()]);
    assert_eq!(twice, perm);

    let (_, inv, _) = symgen(&["elt", &u3, "invert", "(id | 𝟎)"]);
    assert_eq!(inv.trim(), "id | 𝟎");

    let (_, pi, _) = symgen(&["elt", &u3, "convert", "id | 𝟐.3.𝟐"]);
    let (_, pi, _) = symgen(&["elt", &u3, "convert", pi.trim()]);
    let b = format!("{} 𝟓.6", pi.trim());
    let a = "(𝟎,0)(𝟏,1)(𝟐,2)(𝟑,3)(𝟒,4)(𝟓,5)(𝟔,6) | 𝟏.𝟐";
    for mode in ["rewrite", "image"] {
        let (code, prod, _) = symgen(&["elt", &u3, "mult", a, &b, "--mode", mode]);
        assert_eq!(code, 0);
        assert!(prod.trim_end().ends_with("| 𝟐.𝟏"), "{prod}");
    }

    let (code, cent, _) = symgen(&["elt", &u3, "centralize", "id |"]);
    assert_eq!(code, 0);
    assert!(cent.starts_with("order 12096\n"));
}

#[test]
fn exit_codes() {
    let u3 = path("u3_3");
    assert_eq!(symgen(&["elt", &u3, "convert", "id | 9"]).0, 2);
    assert_eq!(symgen(&["elt", &u3, "convert", "(1,2)"]).0, 5);
    assert_eq!(symgen(&["elt", &u3, "mult", "(𝟎,𝟏) |", "id |"]).0, 5);
    assert_eq!(symgen(&["enumerate", "/nonexistent/spec.json"]).0, 2);
    assert_eq!(symgen(&["frobnicate"]).0, 2);

    let dir = std::env::temp_dir().join(format!("symgen-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let text = std::fs::read_to_string(fixture_path("l2_19"))
        .unwrap()
        .replace("\"index\": 57", "\"index\": 58");
    assert!(text.contains("58"));
    let wrong = dir.join("wrong.json");
    std::fs::write(&wrong, text).unwrap();
    let (code, _, err) = symgen(&["enumerate", wrong.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("index: expected 58, got 57"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn coset_limit_from_environment() {
    std::env::set_var("SYMGEN_MAX_COSETS", "20");
    let limited = symgen(&["enumerate", &path("l2_19")]).0;
    std::env::set_var("SYMGEN_MAX_COSETS", "lots");
    let bad = symgen(&["enumerate", &path("l2_19")]).0;
    std::env::remove_var("SYMGEN_MAX_COSETS");
    assert_eq!(limited, 4);
    assert_eq!(bad, 2);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = symgen(&["selftest", "--jobs", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 3);
}
