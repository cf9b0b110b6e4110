use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use mfact::schema::{FactorizationDoc, FactorizeOutput, PredictOutput, VerifyOutput};

fn mfact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfact"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .expect("binary runs")
}

fn mfact_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mfact"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

const PART_ONE: &str = r#"{ "terms": ["z*y"], "products": [["x*y^2+x^2*z+y*z^2", "x*y+z^2"]] }"#;

#[test]
fn factorize_refined_part_one() {
    let o = mfact(&["factorize", PART_ONE, "--format", "structured"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let out: FactorizeOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.factorization.size, 16);
    assert_eq!(out.method, "refined");
    assert_eq!(out.verification.mode, "exact");
    assert!(out.verification.passed);
    assert_eq!(out.predicted.refined.value, Some(16));
}

#[test]
fn factorize_improved_and_standard_text() {
    let o = mfact(&[
        "factorize",
        PART_ONE,
        "--method",
        "improved",
        "--format",
        "structured",
    ]);
    let out: FactorizeOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.factorization.size, 32);

    let o = mfact(&["factorize", "x^2+4", "--method", "standard"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("size = 2"), "{text}");
    assert!(text.contains("exact passed"), "{text}");
}

#[test]
fn factorize_reads_stdin_and_input_file() {
    let o = mfact_stdin(&["factorize", "--format", "structured"], PART_ONE);
    assert_eq!(code(&o), 0);
    let from_stdin = stdout(&o);

    let input = scratch("part_one.json");
    std::fs::write(&input, PART_ONE).unwrap();
    let o = mfact(&[
        "factorize",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert_eq!(stdout(&o), from_stdin);
}

#[test]
fn round_trip_through_verify() {
    let out = scratch("round_trip.json");
    let o = mfact(&[
        "factorize",
        PART_ONE,
        "--format",
        "structured",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let full: FactorizeOutput =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let doc = scratch("round_trip_doc.json");
    std::fs::write(&doc, serde_json::to_string(&full.factorization).unwrap()).unwrap();
    for mode in ["exact", "randomized", "auto"] {
        let o = mfact(&["verify", doc.to_str().unwrap(), "--verify", mode]);
        assert_eq!(code(&o), 0, "{mode}: {}", stdout(&o));
    }
}

#[test]
fn structured_output_is_deterministic() {
    let args = [
        "factorize",
        PART_ONE,
        "--method",
        "improved",
        "--format",
        "structured",
    ];
    assert_eq!(stdout(&mfact(&args)), stdout(&mfact(&args)));
    let args = ["predict", PART_ONE, "--format", "structured"];
    assert_eq!(stdout(&mfact(&args)), stdout(&mfact(&args)));
}

#[test]
fn verify_fixtures() {
    for name in [
        "intro_2.json",
        "rhg_16_corrected.json",
        "rgt_32_corrected.json",
    ] {
        let o = mfact(&[
            "verify",
            fixture(name).to_str().unwrap(),
            "--verify",
            "exact",
        ]);
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
    }
    let o = mfact(&[
        "verify",
        fixture("rhg_16.json").to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&o), 3);
    let out: VerifyOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!out.verification.passed);
}

#[test]
fn sign_flip_is_located() {
    let text = std::fs::read_to_string(fixture("rgt_32_corrected.json")).unwrap();
    let mut doc: FactorizationDoc = serde_json::from_str(&text).unwrap();
    let entry = doc.entry_mut("phi", 0, 0).unwrap();
    *entry = format!("-({entry})");
    let path = scratch("flipped.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = mfact(&[
        "verify",
        path.to_str().unwrap(),
        "--verify",
        "exact",
        "--format",
        "structured",
    ]);
    assert_eq!(code(&o), 3);
    let out: VerifyOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let failure = out.verification.failure.expect("failure reported");
    assert_eq!((failure.row, failure.col), (0, 0));
    assert!(failure.found.is_some() && failure.expected.is_some());

    let o = mfact(&[
        "verify",
        path.to_str().unwrap(),
        "--verify",
        "randomized",
        "--trials",
        "5",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn predict_two_products() {
    let input = r#"{ "terms": ["z*y"], "products": [
        ["x*y^2+x^2*z+y*z^2", "x*y+z^2"],
        ["y*z+x*y^2+x^2", "x^3*z^2+y*x+y^2"] ] }"#;
    let o = mfact(&["predict", input, "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let out: PredictOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let p = out.predicted;
    assert_eq!(
        (p.standard.exponent, p.improved.exponent, p.refined.exponent),
        (15, 11, 9)
    );
    assert_eq!(p.ratio_refined_vs_improved.value, Some(4));
    assert!(out.valid);
    let text = stdout(&mfact(&["predict", input]));
    assert!(text.contains("2^9 = 512"), "{text}");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&mfact(&["factorize", "x^^2"])), 2);
    assert_eq!(code(&mfact(&["factorize", "x^-1"])), 2);
    assert_eq!(code(&mfact(&["factorize", "{ \"terms\": 3 }"])), 2);
    assert_eq!(code(&mfact(&["factorize", "0"])), 2);
    let bad = scratch("bad_shape.json");
    std::fs::write(&bad, r#"{"f":"x","size":2,"phi":[["x"]],"psi":[["1"]]}"#).unwrap();
    assert_eq!(code(&mfact(&["verify", bad.to_str().unwrap()])), 2);
}

#[test]
fn missing_file_exits_1() {
    let o = mfact(&["verify", "/nonexistent/mfact/input.json"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn standard_cap_exits_4() {
    let o = mfact(&[
        "factorize",
        PART_ONE,
        "--method",
        "standard",
        "--max-standard-monomials",
        "6",
    ]);
    assert_eq!(code(&o), 4);
    let o = mfact(&[
        "factorize",
        PART_ONE,
        "--method",
        "standard",
        "--format",
        "structured",
    ]);
    assert_eq!(code(&o), 0);
    let out: FactorizeOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.factorization.size, 64);
}

#[test]
fn strict_validation_exits_5() {
    let non_example = r#"{ "terms": ["x^3", "-y^2"] }"#;
    assert_eq!(
        code(&mfact(&["predict", non_example, "--strict-validate"])),
        5
    );
    assert_eq!(code(&mfact(&["predict", non_example])), 0);
    assert_eq!(
        code(&mfact(&["factorize", non_example, "--strict-validate"])),
        5
    );
}

#[test]
fn variants_all_verify() {
    for yv in ["standard", "v1", "v2", "v3"] {
        for sv in ["standard", "v1", "v2"] {
            let o = mfact(&[
                "factorize",
                PART_ONE,
                "--yoshino-variant",
                yv,
                "--standard-variant",
                sv,
                "--verify",
                "exact",
            ]);
            assert_eq!(code(&o), 0, "{yv}/{sv}");
        }
    }
    assert_eq!(
        code(&mfact(&["factorize", "x", "--yoshino-variant", "v4"])),
        2
    );
}

#[test]
fn demo_passes_and_ignores_seed() {
    let a = mfact(&["demo", "--format", "structured"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    let b = mfact(&["demo", "--format", "structured", "--seed", "12345"]);
    assert_eq!(code(&b), 0);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn demo_names_corrupted_fixture() {
    let dir = scratch("corrupt_fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    for name in mfact::demo::FIXTURE_NAMES {
        std::fs::copy(fixture(name), dir.join(name)).unwrap();
    }
    let path = dir.join("hg_8.json");
    let mut doc: FactorizationDoc =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc.psi[2][3] = "x*y*z".into();
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let o = mfact(&["demo", "--fixtures", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    let text = stdout(&o);
    let line = text
        .lines()
        .find(|l| l.starts_with("FAIL"))
        .expect("a failing row");
    assert!(
        line.contains("reduced tensor blocks") && line.contains("hg_8.json"),
        "{line}"
    );
}
