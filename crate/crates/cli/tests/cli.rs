use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn codezeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codezeta")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_codezeta"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let out = codezeta(args);
    assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

#[test]
fn we_families() {
    let tetracode = json_ok(&["we", "mds", "--n", "4", "--d", "3", "--q", "3"]);
    assert_eq!(strings(&tetracode["A"]), ["1", "0", "0", "8", "0"]);
    let simplex = json_ok(&["we", "simplex", "--r", "3", "--q", "2"]);
    assert_eq!(strings(&simplex["A"]), ["1", "0", "0", "0", "7", "0", "0", "0"]);
    let golay = json_ok(&["we", "golay", "--which", "g23"]);
    let a = strings(&golay["A"]);
    assert_eq!((a[7].as_str(), a[8].as_str(), a[11].as_str(), a[23].as_str()), ("253", "506", "1288", "1"));
    assert_eq!(golay["k"], 12);
    let same = json_ok(&["we", "--family", "golay", "--which", "g23"]);
    assert_eq!(golay, same);
}

#[test]
fn zeta_examples() {
    let mds = json_ok(&["zeta", "--family", "mds", "--n", "9", "--d", "3", "--q", "2", "--oracle", "--closed-form"]);
    assert_eq!(strings(&mds["coeffs"]), ["1"]);
    let g11 = json_ok(&["zeta", "--family", "golay", "--which", "g11", "--invariantize", "--oracle"]);
    assert_eq!(g11["genus"], "3/2");
    assert_eq!(strings(&g11["coeffs"])[2], "3/7");
    let ham = json_ok(&["zeta", "--family", "hamming", "--r", "3", "--q", "2", "--invariantize", "--closed-form", "--oracle"]);
    assert_eq!(
        strings(&ham["coeffs"]),
        ["-1/5+1/5*sqrt(2)", "0+1/5*sqrt(2)", "2/5", "4/5-2/5*sqrt(2)"]
    );
}

#[test]
fn check_rh_golay_is_proved() {
    let report = json_ok(&["check-rh", "--family", "golay", "--which", "g23"]);
    assert_eq!(report["verdict"]["status"], "proved_sign_scan");
    assert_eq!(report["enumerator"]["n"], 23);
    assert_eq!(report["normalized_coeffs"][0]["exact"], "1");
    assert!(report.get("timings").is_none());
}

fn table_values(args: &[&str]) -> (String, Vec<f64>) {
    let out = codezeta(args);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let values = text
        .lines()
        .filter(|l| l.strip_prefix("a_").is_some_and(|rest| rest.starts_with(|c: char| c.is_ascii_digit())))
        .map(|l| l.split_whitespace().nth(2).unwrap().parse().unwrap())
        .collect();
    (text, values)
}

#[test]
#[allow(clippy::approx_constant)]
fn hamming_tables() {
    // The published tables truncate some entries and round others, so allow
    // two units in the last printed digit.
    const TOL: f64 = 2e-9;
    let (text, a) = table_values(&["check-rh", "--family", "hamming", "--r", "4", "--q", "2", "--table"]);
    let published = [1.0, 1.414213562, 1.363636363, 1.028518954, 0.606060606, 0.317735799];
    assert_eq!(a.len(), published.len(), "{text}");
    for (x, y) in a.iter().zip(published) {
        assert!((x - y).abs() < TOL, "{x} vs {y}\n{text}");
    }
    assert!(text.contains("status numeric_pass"), "{text}");

    let (text, a) = table_values(&["check-rh", "--family", "hamming", "--r", "3", "--q", "3", "--table"]);
    let published = [1.0, 1.039230485, 0.6, 0.1732050808, 0.0];
    for (x, y) in a.iter().zip(published) {
        assert!((x - y).abs() < TOL, "{x} vs {y}\n{text}");
    }
    assert!(text.contains("a_2    = 0.6"), "{text}");
    assert!(text.contains("a_4    = 0"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&codezeta(&["we", "mds", "--n", "4", "--d", "9", "--q", "3"])), 2);
    assert_eq!(code(&codezeta(&["we", "mds", "--n", "4"])), 2);
    assert_eq!(code(&codezeta(&["we", "golay", "--which", "g7"])), 2);
    assert_eq!(code(&codezeta(&["zeta", "--family", "golay", "--which", "g23", "--closed-form"])), 2);
    assert_eq!(code(&codezeta(&["frobnicate"])), 2);
    assert_eq!(code(&codezeta(&["we", "file", "--file", "/nonexistent/we.json"])), 3);
    assert_eq!(code(&with_stdin(&["zeta", "--stdin"], b"{\"q\": 2")), 3);
    assert_eq!(code(&with_stdin(&["zeta", "--stdin"], b"{\"q\": 2, \"n\": 1, \"A\": [\"x\"]}")), 3);

    // roots of modulus 2 and 1/2 after normalization
    let off_circle = br#"{"q": 4, "coeffs": ["1", "-5", "4"], "genus": "1"}"#;
    let out = with_stdin(&["check-rh", "--stdin"], off_circle);
    assert_eq!(code(&out), 5);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"]["status"], "numeric_fail");
    assert!(report["enumerator"].is_null());
    let out = with_stdin(&["check-rh", "--stdin", "--tol", "0.02"], off_circle);
    assert_eq!(code(&out), 6);
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let simplex = dir.path().join("simplex.json");
    let hamming = dir.path().join("hamming.json");
    let bad = dir.path().join("bad.json");
    std::fs::write(&simplex, codezeta(&["we", "simplex", "--r", "3", "--q", "3"]).stdout).unwrap();
    std::fs::write(&hamming, codezeta(&["we", "hamming", "--r", "3", "--q", "3"]).stdout).unwrap();
    std::fs::write(&bad, r#"{"q": 3, "n": 13, "A": ["1", "2"]}"#).unwrap();
    let (s, h, b) = (simplex.to_str().unwrap(), hamming.to_str().unwrap(), bad.to_str().unwrap());

    let from_files = json_ok(&["zeta", "--family", "file", "--file", h, "--dual", s, "--invariantize", "--oracle"]);
    let known = json_ok(&["zeta", "--family", "hamming", "--r", "3", "--q", "3", "--invariantize"]);
    assert_eq!(from_files, known);

    let no_dual = codezeta(&["zeta", "--family", "file", "--file", h, "--invariantize"]);
    assert_eq!(code(&no_dual), 2);
    assert_eq!(code(&codezeta(&["zeta", "--family", "file", "--file", h, "--dual", h])), 2);
    assert_eq!(code(&codezeta(&["we", "file", "--file", b])), 3);

    let out_path = dir.path().join("report.json");
    let out = codezeta(&["check-rh", "--family", "file", "--file", s, "--dual", h, "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["verdict"]["status"], "proved_sign_scan");
}

#[test]
fn stdin_round_trip() {
    let cases: [&[&str]; 5] = [
        &["--family", "mds", "--n", "7", "--d", "3", "--q", "4"],
        &["--family", "hamming", "--r", "3", "--q", "2"],
        &["--family", "simplex", "--r", "3", "--q", "3"],
        &["--family", "golay", "--which", "g23"],
        &["--family", "golay", "--which", "g11_dual"],
    ];
    for args in cases {
        let we = codezeta(&[&["we"], args].concat());
        assert_eq!(code(&we), 0);
        for extra in [&[][..], &["--invariantize"][..]] {
            let piped = with_stdin(&[&["zeta", "--stdin"], extra].concat(), &we.stdout);
            let direct = codezeta(&[&["zeta"], args, extra].concat());
            assert_eq!(code(&piped), 0, "{}", String::from_utf8_lossy(&piped.stderr));
            assert_eq!(piped.stdout, direct.stdout, "{args:?} {extra:?}");
        }
    }
    let zeta = codezeta(&["zeta", "--family", "hamming", "--r", "4", "--q", "2", "--invariantize"]);
    let piped: Value = serde_json::from_slice(&with_stdin(&["check-rh", "--stdin"], &zeta.stdout).stdout).unwrap();
    let direct = json_ok(&["check-rh", "--family", "hamming", "--r", "4", "--q", "2"]);
    assert_eq!(piped["zeta"], direct["zeta"]);
}

#[test]
fn deterministic_output() {
    for args in [
        &["check-rh", "--family", "golay", "--which", "g11"][..],
        &["check-rh", "--family", "hamming", "--r", "3", "--q", "5", "--table"][..],
        &["scan", "--family", "mds", "--q-list", "3,2", "--n-max", "9"][..],
    ] {
        let first = codezeta(args);
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, codezeta(args).stdout, "{args:?}");
    }
    let timed = json_ok(&["check-rh", "--family", "golay", "--which", "g11", "--timings"]);
    assert!(timed["timings"]["verify"].is_number());
}

#[test]
fn scans() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("scan.csv");
    let json = dir.path().join("scan.json");
    let out = codezeta(&[
        "scan", "--family", "hamming", "--q-list", "2,3", "--r-max", "4",
        "--csv", csv.to_str().unwrap(), "--json-out", json.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,q,n_or_r,d,deg,status,max_deviation"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r[5] == "numeric_pass"), "{text}");
    assert_eq!(rows[1][..5], ["hamming", "2", "4", "3", "11"]);
    let parsed: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 4);

    let text = String::from_utf8(codezeta(&["scan", "--family", "hamming", "--q-list", "4,5", "--r-max", "3"]).stdout).unwrap();
    assert!(text.lines().skip(1).all(|l| l.contains(",proved_ek,")), "{text}");

    let mds = String::from_utf8(codezeta(&["scan", "--family", "mds", "--q-list", "2,5", "--n-max", "12"]).stdout).unwrap();
    assert!(mds.lines().skip(1).all(|l| l.contains(",proved_")), "{mds}");

    assert_eq!(code(&codezeta(&["scan", "--family", "mds", "--q-list", "2"])), 2);
    assert_eq!(code(&codezeta(&["scan", "--family", "hamming", "--q-list", "2", "--r-max", "2"])), 2);
}
