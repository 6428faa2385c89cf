use std::process::{Command, Output};

use z3orbifold::{cli::parse_label, enumerate_irreducibles, Level};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z3orbifold")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fuse_level_one() {
    let o = run(&["fuse", "--level", "1", "u:0:1", "u:0:2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"u:0:0": 1}"#);
    assert!(o.stderr.is_empty());
}

#[test]
fn qdim_sqrt_two() {
    let o = run(&["qdim", "--level", "2", "u:1:0", "--digits", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1.4142135624");
}

#[test]
fn oracle_passes() {
    let o = run(&["verify", "--level", "1", "--suite", "oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["fuse", "--level", "2", "T1:1:0", "u:0:0"][..],
        &["fuse", "--level", "2", "u:3:0", "u:0:0"],
        &["fuse", "--level", "0", "u:0:0", "u:0:0"],
        &["dual", "u:0:0"],
        &["bogus"],
        &["verify", "--level", "20", "--suite", "assoc", "--samples", "0"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn fuse_output_is_order_independent() {
    let k = Level::new(3).unwrap();
    let labels: Vec<String> = enumerate_irreducibles(k).iter().map(|l| l.to_string()).collect();
    for (n, a) in labels.iter().enumerate() {
        for b in labels.iter().skip(n).step_by(5) {
            for format in ["json", "csv", "markdown"] {
                let ab = run(&["fuse", "--level", "3", a, b, "--format", format]);
                let ba = run(&["fuse", "--level", "3", b, a, "--format", format]);
                assert_eq!(ab.status.code(), Some(0));
                assert_eq!(ab.stdout, ba.stdout, "{a} {b} {format}");
            }
        }
    }
}

#[test]
fn catalog_labels_round_trip() {
    for level in ["1", "2", "5"] {
        let o = run(&["catalog", "--level", level]);
        assert_eq!(o.status.code(), Some(0));
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let k = Level::new(level.parse().unwrap()).unwrap();
        let modules = doc["modules"].as_array().unwrap();
        let expected = enumerate_irreducibles(k);
        assert_eq!(modules.len(), expected.len());
        for (m, want) in modules.iter().zip(&expected) {
            let text = m["label"].as_str().unwrap();
            assert_eq!(parse_label(text, k).unwrap(), *want);
            assert_eq!(parse_label(m["dual"].as_str().unwrap(), k).unwrap().to_string(), m["dual"]);
        }
    }
}

#[test]
fn catalog_weights_are_fractions() {
    let o = run(&["catalog", "--level", "1", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.contains("49/36"));
    assert!(!text.contains("1.361"));
}

#[test]
fn out_writes_file_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("glob.txt");
    let o = run(&["glob", "--level", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("18"));
}
