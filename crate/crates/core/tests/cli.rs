use std::path::PathBuf;
use std::process::{Command, Output};

use gcqc::cli::ReportDocument;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn gcqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcqc"))
        .args(args)
        .env("GCQC_WORKERS", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Value of a top-level scalar in a text report.
fn field(text: &str, key: &str) -> Option<String> {
    text.lines().find_map(|line| {
        let (k, v) = line.split_once(' ')?;
        (k == key).then(|| v.trim().to_string())
    })
}

fn temp_spec(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gcqc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn build_reports_for_fixtures() {
    let cases = [
        ("example1.spec", "[[8,3,2]]", "mu", "none"),
        ("example2.spec", "[[20,6,1]]", "mu", "1"),
        ("discussion.spec", "[[4,1,2]]", "bound", "1"),
        ("discussion_noswap.spec", "[[4,1,1]]", "bound", "1"),
    ];
    for (file, code, key, value) in cases {
        let path = fixture(file);
        let out = gcqc(&["build", path.to_str().unwrap(), "--verify-bound", "--verify-lemma1"]);
        assert!(out.status.success(), "{file}: {}", stderr(&out));
        let text = stdout(&out);
        assert_eq!(field(&text, "code").as_deref(), Some(code), "{file}");
        assert_eq!(field(&text, key).as_deref(), Some(value), "{file}");
        let verification: Vec<&str> = text.lines().skip_while(|l| *l != "verification:").collect();
        for key in ["bound", "block_weights"] {
            let line = verification.iter().find(|l| l.split_whitespace().next() == Some(key));
            assert_eq!(line.and_then(|l| l.split_whitespace().nth(1)), Some("yes"), "{file}:\n{text}");
        }
    }
}

#[test]
fn machine_output_matches_text() {
    let path = fixture("example1.spec");
    let path = path.to_str().unwrap();
    let text = gcqc(&["build", path, "--exact-distance"]);
    let machine = gcqc(&["--output", "machine", "build", path, "--exact-distance"]);
    assert!(text.status.success() && machine.status.success());
    let doc = ReportDocument::from_json(&stdout(&machine)).unwrap();
    assert_eq!(doc.to_text(), stdout(&text));
}

#[test]
fn reruns_are_byte_identical() {
    let path = fixture("example2.spec");
    let args = ["--output", "machine", "build", path.to_str().unwrap(), "--exact-distance"];
    assert_eq!(gcqc(&args).stdout, gcqc(&args).stdout);
}

#[test]
fn inspect_reports_codes() {
    let path = fixture("example1.spec");
    let out = gcqc(&["inspect", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let inner = text.lines().take_while(|l| !l.starts_with("chain")).collect::<Vec<_>>().join("\n");
    assert!(inner.contains("[[4,2]]"), "{text}");
    assert!(inner.contains("independent_generators  2"), "{text}");

    let trivial = temp_spec("trivial.spec", "[inner]\nn = 2\ngenerators =\n");
    let out = gcqc(&["inspect", trivial.to_str().unwrap()]);
    assert!(stdout(&out).contains("[[2,2]]"));
}

#[test]
fn inspect_rejects_anticommuting_generators() {
    let bad = temp_spec("bad.spec", "# header\n[inner]\nn = 2\ngenerators = XX ZZ ZI\n");
    let out = gcqc(&["inspect", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 2") && err.contains("XX") && err.contains("ZI"), "{err}");
}

#[test]
fn distance_command() {
    let five = fixture("five_qubit.spec");
    let out = gcqc(&["distance", five.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(field(&stdout(&out), "distance").as_deref(), Some("3"));

    let out = gcqc(&["distance", five.to_str().unwrap(), "--cap", "32"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("2^6"), "{}", stderr(&out));

    let ex1 = fixture("example1.spec");
    let out = gcqc(&["distance", ex1.to_str().unwrap(), "--cap", "2^14"]);
    assert_eq!(field(&stdout(&out), "code").as_deref(), Some("[[8,3,2]]"));
}

#[test]
fn overclaimed_distance_fails_only_under_verification() {
    let text = std::fs::read_to_string(fixture("example1.spec"))
        .unwrap()
        .replace("d = 1", "d = 2");
    let path = temp_spec("overclaim.spec", &text);
    let path = path.to_str().unwrap();

    let out = gcqc(&["build", path, "--exact-distance"]);
    assert!(out.status.success());
    // Unverified claims are trusted: the reported bound exceeds the distance.
    assert_eq!(field(&stdout(&out), "bound").as_deref(), Some("4"));
    assert_eq!(field(&stdout(&out), "distance").as_deref(), Some("2"));

    let out = gcqc(&["build", path, "--verify-bound"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("claimed outer distance 2 exceeds the true distance 1"), "{}", stderr(&out));
}

#[test]
fn bad_arguments() {
    let out = gcqc(&["distance", "/nonexistent.spec"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gcqc(&["build", fixture("example1.spec").to_str().unwrap(), "--cap", "2^x"]);
    assert!(!out.status.success());
}
