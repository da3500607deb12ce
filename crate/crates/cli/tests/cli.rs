//! Black-box behavior of the `ep-scan` binary: exit codes, output formats,
//! determinism, and the agreement between the JSON document and what the
//! library computes in-process.

use std::path::Path;
use std::process::{Command, Output};

use epscan::{analyze, AffineFamily, Rational, SpectralValue};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn read_json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// A constant diagonal family with distinct eigenvalues: nothing ever collides.
const DIAGONAL_CONSTANT: &str = r#"{"n":2,"A":[[1,0],[0,2]],"B":[[0,0],[0,0]]}"#;
/// H(β) = βI: the discriminant vanishes identically.
const SCALED_IDENTITY: &str = r#"{"n":2,"A":[[0,0],[0,0]],"B":[[1,0],[0,1]]}"#;
/// The 3×3 identity, constant in β.
const IDENTITY_CONSTANT: &str =
    r#"{"n":3,"A":[[1,0,0],[0,1,0],[0,0,1]],"B":[[0,0,0],[0,0,0],[0,0,0]]}"#;

#[test]
fn exit_codes_distinguish_parse_math_and_io_failures() {
    // 0: success
    assert_eq!(code(&run(&["analyze", "--beta", "1"])), 0);
    // 2: malformed input of every stripe
    assert_eq!(code(&run(&["analyze", "--beta", "zzz"])), 2);
    assert_eq!(code(&run(&["analyze", "--beta", "1", "--family", "nonsense"])), 2);
    assert_eq!(code(&run(&["analyze", "--beta", "1", "--family", "{broken"])), 2);
    assert_eq!(code(&run(&["sweep", "--range", "2:-2"])), 2);
    assert_eq!(code(&run(&["sweep", "--range", "-2:2", "--steps", "1"])), 2);
    assert_eq!(code(&run(&["analyze", "--beta", "1", "--tol", "-1"])), 2);
    // 3: well-formed input the mathematics refuses
    assert_eq!(code(&run(&["critical", "--family", SCALED_IDENTITY])), 3);
    // 4: I/O failure
    assert_eq!(
        code(&run(&["sweep", "--range", "-2:2", "--csv", "/nonexistent-dir/x.csv"])),
        4
    );
    assert_eq!(
        code(&run(&["analyze", "--beta", "1", "--json", "/nonexistent-dir/x.json"])),
        4
    );
}

#[test]
fn collision_free_family_yields_an_empty_table_and_success() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("crit.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["critical", "--family", DIAGONAL_CONSTANT, "--json"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("none: the eigenvalues never collide"));
    assert_eq!(read_json(&json)["critical_points"].as_array().unwrap().len(), 0);
}

#[test]
fn scaled_identity_family_is_refused_with_an_explanation() {
    let out = run(&["critical", "--family", SCALED_IDENTITY]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("ep-scan:"), "diagnostic goes to stderr: {err}");
}

#[test]
fn identity_family_has_the_full_permutation_symmetry() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("sym.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["symmetry", "--family", IDENTITY_CONSTANT, "--beta", "0", "--json"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let doc = read_json(&json);
    assert_eq!(doc["order"], 6);
    assert_eq!(doc["label"], "S3");
}

#[test]
fn two_sample_sweep_is_the_minimal_valid_grid() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("two.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["sweep", "--range", "-2:2", "--steps", "2", "--csv"])
        .arg(&csv)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let body = std::fs::read_to_string(&csv).unwrap();
    let rows = body
        .lines()
        .skip_while(|l| *l != "beta,branch_id,re,im")
        .skip(1)
        .take_while(|l| !l.starts_with('['))
        .count();
    assert_eq!(rows, 6, "2 samples × 3 branches");
}

#[test]
fn critical_points_are_reported_even_outside_the_swept_range() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("sweep.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["sweep", "--range", "2:3", "--steps", "5", "--json"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let doc = read_json(&json);
    let betas: Vec<&str> = doc["critical_points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["beta_exact"].as_str().unwrap())
        .collect();
    assert_eq!(betas, ["-5/4", "1"], "the table comes from the discriminant, not the grid");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut artifacts: Vec<Vec<u8>> = Vec::new();
    for tag in ["first", "second"] {
        let csv = dir.path().join(format!("{tag}.csv"));
        let svg = dir.path().join(format!("{tag}.svg"));
        let json = dir.path().join(format!("{tag}.json"));
        let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
            .args(["sweep", "--range", "-2:2", "--steps", "101", "--csv"])
            .arg(&csv)
            .arg("--svg-re")
            .arg(&svg)
            .arg("--json")
            .arg(&json)
            .output()
            .unwrap();
        assert_eq!(code(&out), 0);
        // stdout and the json both embed the output paths, which differ by
        // tag; strip the tag before comparing
        artifacts.push(stdout(&out).replace(tag, "").into_bytes());
        artifacts.push(std::fs::read(&csv).unwrap());
        artifacts.push(std::fs::read(&svg).unwrap());
        let doc = std::fs::read_to_string(&json).unwrap().replace(tag, "");
        artifacts.push(doc.into_bytes());
    }
    for k in 0..4 {
        assert_eq!(artifacts[k], artifacts[k + 4], "artifact {k} differs between runs");
    }
}

#[test]
fn json_document_reparses_and_matches_the_in_process_analysis() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("analyze.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["analyze", "--beta", "1", "--json"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let doc = read_json(&json);

    let fam = AffineFamily::preset("paper").unwrap();
    let report = analyze(&fam.at(&Rational::from_int(1))).unwrap();

    assert_eq!(doc["family"], "paper");
    assert_eq!(doc["beta"], "1");
    assert_eq!(doc["dim"], 3);
    assert_eq!(doc["defective"], !report.diagonalizable);
    let rows = doc["eigenvalues"].as_array().unwrap();
    assert_eq!(rows.len(), report.eigenvalues.len());
    for (row, e) in rows.iter().zip(&report.eigenvalues) {
        let SpectralValue::Exact(v) = &e.value else {
            panic!("rational spectrum expected here");
        };
        assert_eq!(row["value"], v.to_string());
        assert_eq!(row["alg_mult"], e.alg_mult as u64);
        assert_eq!(row["geo_mult"], e.geo_mult as u64);
        assert_eq!(row["eigenspace"].as_array().unwrap().len(), e.eigenspace.len());
    }
}

#[test]
fn decimal_and_fraction_spellings_agree_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for (tag, beta) in [("dec", "-1.25"), ("frac", "-5/4")] {
        let json = dir.path().join(format!("{tag}.json"));
        let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
            .args(["analyze", "--beta", beta, "--json"])
            .arg(&json)
            .output()
            .unwrap();
        assert_eq!(code(&out), 0);
        bodies.push(std::fs::read(&json).unwrap());
    }
    assert_eq!(bodies[0], bodies[1], "the decimal parses to the same exact rational");
}

#[test]
fn jordan_subcommand_details_the_defective_block() {
    let out = run(&["jordan", "--beta", "-5/4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("1/2"), "defective eigenvalue shown: {text}");
    assert!(text.contains("block"), "block structure shown: {text}");

    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("jordan.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["jordan", "--beta", "-5/4", "--json"])
        .arg(&json)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let doc = read_json(&json);
    assert_eq!(doc["exact"], true);
    assert_eq!(doc["diagonal"], false);
    let blocks = doc["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0]["eigenvalue"], "-1");
    assert_eq!(blocks[0]["size"], 1);
    assert_eq!(blocks[1]["eigenvalue"], "1/2");
    assert_eq!(blocks[1]["size"], 2);
}

#[test]
fn tolerance_flag_reaches_the_numeric_backend() {
    // an honest tolerance still succeeds…
    assert_eq!(code(&run(&["analyze", "--beta", "0.3", "--tol", "1e-6"])), 0);
    // …and an absurdly strict one makes the residual gate refuse rather
    // than return uncertified vectors
    let out = run(&["analyze", "--beta", "0.3", "--tol", "1e-17"]);
    assert!(
        code(&out) == 0 || code(&out) == 3,
        "strict tolerance either passes or refuses, never lies"
    );
}

#[test]
fn family_file_and_inline_json_are_interchangeable() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"{"n":2,"A":[[0,1],[1,0]],"B":[[1,0],[0,-1]],"name":"demo"}"#;
    let fam = dir.path().join("demo.json");
    std::fs::write(&fam, body).unwrap();

    let from_file = dir.path().join("a.json");
    let out_file = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["critical", "--family"])
        .arg(&fam)
        .arg("--json")
        .arg(&from_file)
        .output()
        .unwrap();
    assert_eq!(code(&out_file), 0);

    let from_inline = dir.path().join("b.json");
    let out_inline = Command::new(env!("CARGO_BIN_EXE_ep-scan"))
        .args(["critical", "--family", body, "--json"])
        .arg(&from_inline)
        .output()
        .unwrap();
    assert_eq!(code(&out_inline), 0);

    assert_eq!(stdout(&out_file), stdout(&out_inline));
    assert_eq!(read_json(&from_file), read_json(&from_inline));

    // a path that names nothing is an input error with a pointed message
    let missing = run(&["critical", "--family", "/no/such/family.json"]);
    assert_eq!(code(&missing), 2);
    let err = String::from_utf8(missing.stderr).unwrap();
    assert!(err.contains("no such file"), "{err}");
}
