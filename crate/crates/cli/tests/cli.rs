use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use multiarr_cli::report::{AnalyzeReport, ChainReport, Evidence, FlagsReport, RestrictReport, Status};
use serde::de::DeserializeOwned;
use serde::Serialize;
use tempfile::TempDir;

fn multiarr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multiarr")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn corpus() -> (TempDir, PathBuf) {
    let dir = TempDir::new().unwrap();
    let out = multiarr(&["examples", "--output-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let path = dir.path().to_path_buf();
    (dir, path)
}

fn file(dir: &Path, name: &str) -> String {
    dir.join(format!("{name}.json")).to_str().unwrap().to_string()
}

const EXPECTED_EXIT: [(&str, i32); 8] = [
    ("ex-thm12-free", 0),
    ("ex-thm12-nonfree", 1),
    ("ex-thm14-4dim", 1),
    ("ex-a3-m3", 2),
    ("ex-sec5-nonss", 1),
    ("ex-sec5-B", 0),
    ("boolean-3", 0),
    ("braid-a3", 0),
];

#[test]
fn analyze_matches_golden_reports() {
    let (_keep, dir) = corpus();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, code) in EXPECTED_EXIT {
        let out = multiarr(&["analyze", &file(&dir, name)]);
        assert_eq!(out.status.code(), Some(code), "{name}: {}", stderr(&out));
        let expected = std::fs::read_to_string(golden.join(format!("{name}.txt"))).unwrap();
        assert_eq!(stdout(&out), expected, "{name}");
    }
}

#[test]
fn sequential_flag_changes_nothing() {
    let (_keep, dir) = corpus();
    for name in ["ex-sec5-B", "ex-a3-m3"] {
        let par = multiarr(&["analyze", "--json", &file(&dir, name)]);
        let seq = multiarr(&["--sequential", "analyze", "--json", &file(&dir, name)]);
        assert_eq!(stdout(&par), stdout(&seq), "{name}");
    }
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(
    args: &[&str],
    render: impl Fn(&T) -> String,
) -> T {
    let mut json_args = args.to_vec();
    json_args.push("--json");
    let json = multiarr(&json_args);
    let text = multiarr(args);
    assert_eq!(json.status.code(), text.status.code());
    let report: T = serde_json::from_slice(&json.stdout).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
    assert_eq!(render(&report), stdout(&text));
    report
}

#[test]
fn json_reports_round_trip_and_render_the_text() {
    let (_keep, dir) = corpus();
    for (name, _) in EXPECTED_EXIT {
        round_trip::<AnalyzeReport>(&["analyze", &file(&dir, name)], AnalyzeReport::render);
    }

    let free = round_trip::<AnalyzeReport>(&["analyze", &file(&dir, "ex-thm12-free")], AnalyzeReport::render);
    assert_eq!(free.verdict.status, Status::Free);
    assert_eq!(free.verdict.exponents, Some(vec![7, 9, 16]));
    assert_eq!(free.b2.b2, 319);

    let b = round_trip::<AnalyzeReport>(&["analyze", &file(&dir, "ex-sec5-B")], AnalyzeReport::render);
    assert_eq!(b.verdict.exponents, Some(vec![1, 2, 3, 5]));
    match b.verdict.evidence {
        Some(Evidence::HeavyFlag { values, b2, .. }) => {
            assert_eq!(values, vec![1, 5, 3, 2]);
            assert_eq!(b2, 41);
        }
        other => panic!("{other:?}"),
    }

    let chain = round_trip::<ChainReport>(
        &["chain", &file(&dir, "ex-a3-m3"), "--hyperplane", "x"],
        ChainReport::render,
    );
    assert_eq!(
        (chain.reduced_b2, chain.away_b2, chain.ziegler_b2, chain.euler_b2),
        (62, 58, 56, 30)
    );

    let flags = round_trip::<FlagsReport>(&["flags", &file(&dir, "ex-sec5-B"), "--heavy-only"], FlagsReport::render);
    assert!(!flags.flags.is_empty());
    assert!(flags.flags.iter().all(|f| f.values == vec![1, 5, 3, 2] && f.heavy));

    let r = round_trip::<RestrictReport>(
        &["restrict", &file(&dir, "ex-thm12-free"), "--hyperplane", "z", "--mode", "euler"],
        RestrictReport::render,
    );
    let mut m = r.multiplicities.clone();
    m.sort_unstable();
    assert_eq!(m, vec![3, 4, 9]);
    assert_eq!(r.exponents, Some(vec![7, 9]));
}

#[test]
fn hyperplanes_by_index_or_form() {
    let (_keep, dir) = corpus();
    let f = file(&dir, "ex-thm12-free");
    let by_form = multiarr(&["restrict", &f, "--hyperplane", "z", "--json"]);
    let by_index = multiarr(&["restrict", &f, "--hyperplane", "2", "--json"]);
    assert_eq!(stdout(&by_form), stdout(&by_index));
    let scaled = multiarr(&["chain", &f, "--hyperplane=-2z", "--json"]);
    assert_eq!(scaled.status.code(), Some(0), "{}", stderr(&scaled));
}

#[test]
fn defining_polynomial_input() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("b.json");
    std::fs::write(
        &path,
        r#"{"variables": ["x", "y", "z", "w"],
            "defining_polynomial": "x y w (x-z) (y-z) (y-w) prod_{k=-2}^{2}(z-kw)"}"#,
    )
    .unwrap();
    let out = multiarr(&["chi", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("t^4 - 11t^3 + 41t^2 - 61t + 30"), "{}", stdout(&out));
}

#[test]
fn saito_exit_codes() {
    let (_keep, dir) = corpus();
    let f = file(&dir, "boolean-3");
    let tmp = TempDir::new().unwrap();
    let basis = tmp.path().join("basis.json");
    std::fs::write(&basis, r#"[["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]]"#).unwrap();
    let out = multiarr(&["saito", &f, "--derivations", basis.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let outside = tmp.path().join("outside.json");
    std::fs::write(&outside, r#"{"derivations": [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "1"]]}"#).unwrap();
    let out = multiarr(&["saito", &f, "--derivations", outside.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("z"), "{}", stdout(&out));
}

#[test]
fn errors_exit_three() {
    let (_keep, dir) = corpus();
    let tmp = TempDir::new().unwrap();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (vec!["bogus".into()], "unrecognized subcommand"),
        (vec!["examples".into(), "nope".into()], "valid names"),
        (vec!["analyze".into(), tmp.path().join("missing.json").to_str().unwrap().into()], "reading"),
        (
            vec![
                "restrict".into(),
                file(&dir, "ex-a3-m3"),
                "--hyperplane".into(),
                "x".into(),
                "--mode".into(),
                "euler-ziegler".into(),
            ],
            "not locally heavy",
        ),
        (
            vec!["chain".into(), file(&dir, "ex-a3-m3"), "--hyperplane".into(), "x + 7y".into()],
            "no hyperplane",
        ),
    ];
    for (args, needle) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = multiarr(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(stderr(&out).contains(needle), "{args:?}: {}", stderr(&out));
    }

    let bad = tmp.path().join("bad.json");
    std::fs::write(&bad, r#"{"variables": ["x", "y"], "hyperplanes": [{"coeffs": ["1", "q"], "mult": 1}]}"#).unwrap();
    let out = multiarr(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("hyperplanes[0].coeffs[1]"), "{}", stderr(&out));
}

#[test]
fn help_exits_zero() {
    assert_eq!(multiarr(&["--help"]).status.code(), Some(0));
    assert_eq!(multiarr(&["--version"]).status.code(), Some(0));
}
