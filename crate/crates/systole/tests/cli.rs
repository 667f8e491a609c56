//! End-to-end checks of the `systole` binary: golden outputs, byte-for-byte
//! determinism across reruns, and the error/`--out` contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_systole"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn systole")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn line_value<'a>(text: &'a str, key: &str) -> &'a str {
    let prefix = format!("{key} = ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("missing key {key:?} in:\n{text}"))
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("systole-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write scratch file");
    path
}

#[test]
fn mahler_golden_ratio() {
    let text = stdout_of(&["mahler", "--coeffs", "1,-1,-1"]);
    assert_eq!(line_value(&text, "polynomial"), "x^2 - x - 1");
    assert_eq!(line_value(&text, "degree"), "2");
    let root: f64 = line_value(&text, "mahler_root_path").parse().unwrap();
    let graeffe: f64 = line_value(&text, "mahler_graeffe_path").parse().unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((root - phi).abs() < 1e-9);
    assert!((graeffe - phi).abs() < 1e-9);
}

#[test]
fn cyclotomic_decisions() {
    let yes = stdout_of(&["cyclotomic", "--coeffs", "1,1,1"]);
    assert_eq!(line_value(&yes, "cyclotomic_product"), "true");
    let no = stdout_of(&["cyclotomic", "--coeffs", "1,-1,-1"]);
    assert_eq!(line_value(&no, "cyclotomic_product"), "false");
}

#[test]
fn certificate_worked_example() {
    let text = stdout_of(&["certificate", "--vol", "100", "--systole", "0.5", "--dim", "2"]);
    assert_eq!(line_value(&text, "max_vertices"), "2037");
    assert_eq!(line_value(&text, "max_degree"), "25");
}

#[test]
fn homology_of_the_sphere() {
    let file = scratch_file(
        "sphere.txt",
        "# boundary of the 3-simplex\nvertices = 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n",
    );
    let text = stdout_of(&["homology", "--file", file.to_str().unwrap()]);
    assert_eq!(line_value(&text, "betti"), "[1, 0, 1]");
    assert_eq!(line_value(&text, "euler_characteristic"), "2");
    std::fs::remove_file(file).ok();
}

#[test]
fn translation_bound_example() {
    let file = scratch_file("sl2.txt", "2 1\n1 1\n");
    let text = stdout_of(&["translation-bound", "--file", file.to_str().unwrap()]);
    assert_eq!(line_value(&text, "char_poly"), "x^2 - 3x + 1");
    let bound: f64 = line_value(&text, "translation_lower_bound").parse().unwrap();
    assert!((bound - 0.9624236501192069).abs() < 1e-9);
    std::fs::remove_file(file).ok();
}

#[test]
fn reruns_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["mahler", "--coeffs", "1,1,0,-1,-1,-1,-1,-1,0,1,1"],
        &["certificate", "--vol", "100", "--systole", "0.5", "--dim", "2"],
        &["nerve", "--random-torus", "40", "--eps", "0.25", "--seed", "7"],
        &["bounds", "--vol", "1e20", "--degree", "16", "--covol", "22026.465794806718"],
    ];
    for args in cases {
        let first = stdout_of(args);
        let second = stdout_of(args);
        assert_eq!(first, second, "nondeterministic output for {args:?}");
        assert!(!first.is_empty());
    }
}

#[test]
fn seeds_change_random_clouds() {
    let a = stdout_of(&["net", "--random-torus", "40", "--eps", "0.25", "--seed", "1"]);
    let b = stdout_of(&["net", "--random-torus", "40", "--eps", "0.25", "--seed", "2"]);
    assert_ne!(a, b);
}

#[test]
fn out_file_matches_stdout_and_is_skipped_on_error() {
    let out_path = std::env::temp_dir()
        .join(format!("systole-cli-{}-report.txt", std::process::id()));
    std::fs::remove_file(&out_path).ok();

    let text = stdout_of(&[
        "ball-volume",
        "--dim",
        "3",
        "--radius",
        "1.5",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read_to_string(&out_path).unwrap(), text);
    std::fs::remove_file(&out_path).ok();

    // invalid input: nonzero exit, one-line diagnostic, no output file
    let failed = bin()
        .args(["mahler", "--coeffs", "2,1", "--out", out_path.to_str().unwrap()])
        .output()
        .expect("spawn systole");
    assert!(!failed.status.success());
    let stderr = String::from_utf8_lossy(&failed.stderr);
    assert!(stderr.starts_with("error: "), "diagnostic was: {stderr}");
    assert!(!out_path.exists(), "--out must not be written on failure");
}
