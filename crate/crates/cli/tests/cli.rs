use std::path::Path;
use std::process::{Command, Output};

use partfac_cli::report::{
    to_json, CheckReport, ChristoffelReport, DiagramReport, FrequencyReport, VarietyReport,
};
use serde::de::DeserializeOwned;

fn partfac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partfac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = partfac(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    partfac(args).status.code().expect("exited normally")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn round_trip<T: DeserializeOwned + serde::Serialize>(args: &[&str]) {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    let first = stdout_of(&args);
    let parsed: T = serde_json::from_str(&first).unwrap();
    assert_eq!(to_json(&parsed), first, "{args:?}");
}

#[test]
fn golden_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (&["christoffel", "5", "2"], "christoffel_5_2.txt"),
        (
            &["christoffel", "5", "3", "--bwt"],
            "christoffel_5_3_bwt.txt",
        ),
        (
            &["varieties", "--word", "aaabab", "-m", "3", "-P", "1,2"],
            "varieties_aaabab.txt",
        ),
        (
            &["varieties", "--slope", "5/2", "-m", "4", "-P", "1,2,1"],
            "varieties_5_2.txt",
        ),
        (
            &[
                "varieties",
                "--slope",
                "5/3",
                "-m",
                "4",
                "-P",
                "1,1,1,1",
                "--format",
                "csv",
            ],
            "varieties_5_3.csv",
        ),
        (
            &["frequencies", "--slope", "log2_3_2", "-m", "4", "-P", "1,3"],
            "frequencies_log2_1_3.txt",
        ),
        (
            &[
                "frequencies",
                "--slope",
                "log2_3_2",
                "-m",
                "4",
                "-P",
                "1,3",
                "--format",
                "json",
            ],
            "frequencies_log2_1_3.json",
        ),
        (
            &[
                "frequencies",
                "--slope",
                "log2_3_2",
                "-m",
                "1",
                "-P",
                "1",
                "--format",
                "csv",
            ],
            "frequencies_log2_letters.csv",
        ),
        (
            &["diagram", "--slope", "log2_3_2", "-m", "4"],
            "diagram_log2_4.txt",
        ),
        (
            &["diagram", "--slope", "log2_3_2", "-m", "4", "-P", "1,3"],
            "diagram_log2_1_3.txt",
        ),
        (
            &["diagram", "--slope", "golden", "-m", "1"],
            "diagram_golden_1.txt",
        ),
    ];
    for (args, file) in cases {
        assert_eq!(stdout_of(args), golden(file), "{args:?} vs {file}");
    }
}

#[test]
fn christoffel_words() {
    assert_eq!(stdout_of(&["christoffel", "1", "1"]), "ab\n");
    assert_eq!(
        stdout_of(&["christoffel", "5", "3", "--upper"]),
        "babaabaa\n"
    );
    let rows = stdout_of(&["christoffel", "5", "3", "--bwt"]);
    assert_eq!(rows.lines().count(), 8);
    assert_eq!(rows.lines().next(), Some("aabaabab"));
}

#[test]
fn variety_multiplicities() {
    let report: VarietyReport = serde_json::from_str(&stdout_of(&[
        "varieties",
        "--slope",
        "5/3",
        "-m",
        "4",
        "-P",
        "1,1,1,1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(report.multiplicities, [2, 2, 1, 2, 1]);
    assert_eq!(report.methods, ["brute force", "closed form"]);
    let report: VarietyReport = serde_json::from_str(&stdout_of(&[
        "varieties",
        "--word",
        "aaabab",
        "-m",
        "3",
        "-P",
        "1,2",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(report.rows.len(), 4);
    assert_eq!(report.multiplicities, [1, 3, 1, 1]);
}

#[test]
fn frequencies_and_empirical_agree() {
    let report: FrequencyReport = serde_json::from_str(&stdout_of(&[
        "frequencies",
        "--slope",
        "log2_3_2",
        "-m",
        "4",
        "-P",
        "1,3",
        "--empirical",
        "100000",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(report.rows.len(), 3);
    for row in &report.rows {
        assert!(row.deviation.unwrap() <= 1e-4, "{row:?}");
    }
    let letters: FrequencyReport = serde_json::from_str(&stdout_of(&[
        "frequencies",
        "--slope",
        "log2_3_2",
        "-m",
        "1",
        "-P",
        "1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert!((letters.rows[0].frequency - 0.415037).abs() < 1e-6);
    assert!((letters.rows[1].frequency - 0.584963).abs() < 1e-6);
}

#[test]
fn diagram_segments() {
    let count = |args: &[&str]| {
        let mut args = args.to_vec();
        args.extend(["--format", "json"]);
        serde_json::from_str::<DiagramReport>(&stdout_of(&args))
            .unwrap()
            .segments
            .len()
    };
    assert_eq!(count(&["diagram", "--slope", "log2_3_2", "-m", "4"]), 5);
    assert_eq!(
        count(&["diagram", "--slope", "log2_3_2", "-m", "4", "-P", "1,3"]),
        3
    );
    assert_eq!(count(&["diagram", "--slope", "golden", "-m", "1"]), 2);
}

#[test]
fn json_round_trips() {
    round_trip::<ChristoffelReport>(&["christoffel", "5", "3", "--bwt"]);
    round_trip::<ChristoffelReport>(&["christoffel", "8", "5", "--upper"]);
    round_trip::<VarietyReport>(&["varieties", "--slope", "5/2", "-m", "4", "-P", "1,2,1"]);
    round_trip::<VarietyReport>(&["varieties", "--word", "aabbab", "-m", "2"]);
    round_trip::<FrequencyReport>(&[
        "frequencies",
        "--slope",
        "sqrt2m1",
        "-m",
        "9",
        "-P",
        "2,3,4",
        "--empirical",
        "5000",
    ]);
    round_trip::<FrequencyReport>(&["frequencies", "--slope", "0.7071@1e-30", "-m", "5"]);
    round_trip::<DiagramReport>(&["diagram", "--slope", "golden", "-m", "7", "-P", "3,4"]);
    round_trip::<CheckReport>(&[
        "check",
        "all",
        "--max-n",
        "10",
        "--max-m",
        "5",
        "--max-part-m",
        "4",
    ]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["diagram", "--slope", "sqrt2m1", "-m", "20"][..],
        &[
            "frequencies",
            "--slope",
            "golden",
            "-m",
            "6",
            "-P",
            "1,2,3",
            "--format",
            "csv",
            "--empirical",
            "777",
        ],
        &["check", "sturmian", "--max-m", "8", "--format", "json"],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args));
    }
}

#[test]
fn checks_pass() {
    let out = stdout_of(&["check", "christoffel", "--max-n", "20", "--max-part-m", "6"]);
    assert!(out.lines().take(5).all(|l| l.starts_with("PASS")), "{out}");
    let out = stdout_of(&["check", "sturmian", "--max-m", "20"]);
    assert!(out.ends_with("all 3 properties hold\n"), "{out}");
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("word.txt");
    let out = partfac(&["christoffel", "5", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "aaabaab\n");
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["christoffel", "4", "2"]), 2);
    assert_eq!(exit_code(&["christoffel", "0", "3"]), 2);
    assert_eq!(exit_code(&["varieties", "--word", "abc", "-m", "1"]), 2);
    assert_eq!(exit_code(&["varieties", "--word", "aab", "-m", "3"]), 2);
    assert_eq!(
        exit_code(&["varieties", "--slope", "5/2", "-m", "4", "-P", "1,2"]),
        2
    );
    assert_eq!(exit_code(&["frequencies", "--slope", "2/7", "-m", "7"]), 2);
    assert_eq!(
        exit_code(&["frequencies", "--slope", "0.6", "-m", "3", "-P", "1,x"]),
        2
    );
    assert_eq!(
        exit_code(&["diagram", "--slope", "0.618@1e-3", "-m", "60"]),
        2
    );
    assert_eq!(
        exit_code(&[
            "frequencies",
            "--slope",
            "golden",
            "-m",
            "3",
            "--precision-cap",
            "8"
        ]),
        0
    );
    assert_eq!(exit_code(&["check", "christoffel", "--max-n", "8"]), 0);
    let err = partfac(&["christoffel", "4", "2"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("not coprime"));
    assert!(err.stdout.is_empty());
}
