use std::path::Path;
use std::process::Command;

use parti_dfo::bench::{read_profile_csv, read_trace_csv};
use parti_dfo::cli::run_with_env;

fn cli(args: &[&str]) -> (i32, String, String) {
    cli_env(args, None)
}

fn cli_env(args: &[&str], seed: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("parti-dfo").chain(args.iter().copied());
    let code = run_with_env(argv, seed, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn field(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .to_string()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_mono_from_pi() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.csv");
    let (code, out, _) = cli(&[
        "solve",
        "--problem",
        "mono",
        "--start",
        "3.14159265",
        "--seed",
        "1",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 0);
    let x: f64 = field(&out, "x_best").parse().unwrap();
    assert!(x.abs() <= 1e-8);
    assert_eq!(field(&out, "recovered"), "2 coordinates");
    assert!(!read_trace_csv(&trace).unwrap().is_empty());
}

#[test]
fn solve_nonlinear_from_e() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.csv");
    let (code, out, _) = cli(&[
        "solve",
        "--problem",
        "nonlinear",
        "--start",
        "2.718281828",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 0);
    let x: f64 = field(&out, "x_best").parse().unwrap();
    assert!((4.0 - 1e-7..=4.0).contains(&x), "{x}");
}

#[test]
fn solve_accepts_auto_starts() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.csv");
    let (code, out, _) = cli(&[
        "solve",
        "--problem",
        "radial",
        "--start",
        "auto:1",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 0);
    let x: f64 = field(&out, "x_best").parse().unwrap();
    assert!((x - 2f64.sqrt()).abs() <= 1e-8);
    let (code, _, _) = cli(&[
        "solve",
        "--problem",
        "heavy_mono",
        "--start",
        "auto:2",
        "--max_iters",
        "5",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 0);
}

#[test]
fn invalid_input_exits_with_two_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.csv");
    let (code, _, err) = cli(&[
        "solve",
        "--problem",
        "bogus",
        "--start",
        "1",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("heavy_dim2") && err.contains("mono"));
    for args in [
        vec!["solve", "--problem", "mono", "--start", "1,2"],
        vec!["solve", "--problem", "mono", "--start", "abc"],
        vec!["solve", "--problem", "mono", "--start", "auto:9"],
        vec![
            "solve",
            "--problem",
            "mono",
            "--start",
            "1",
            "--lambda",
            "1.5",
        ],
        vec!["solve", "--problem", "mono"],
    ] {
        let mut args = args;
        args.extend(["--out", s(&trace)]);
        assert_eq!(cli(&args).0, 2, "{args:?}");
    }
    assert!(!trace.exists());

    let out_dir = dir.path().join("p");
    let (code, _, _) = cli(&[
        "profile",
        "--problem",
        "heavy_mono",
        "--starts",
        "0",
        "--out_dir",
        s(&out_dir),
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["reproduce", "--table", "5", "--out_dir", s(&out_dir)]);
    assert_eq!(code, 2);
    assert!(!out_dir.exists());
    assert_eq!(cli_env(&["list-problems"], Some("seven")).0, 2);
}

#[test]
fn infeasible_start_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("t.csv");
    let (code, _, _) = cli(&[
        "solve",
        "--problem",
        "radial",
        "--start",
        "-1",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 3);
    let (code, _, _) = cli(&[
        "solve",
        "--problem",
        "nonlinear",
        "--start",
        "4",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 3);
    assert!(!trace.exists());
}

#[test]
fn unwritable_output_exits_with_four() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let trace = blocker.join("t.csv");
    let (code, _, err) = cli(&[
        "solve",
        "--problem",
        "mono",
        "--start",
        "1",
        "--out",
        s(&trace),
    ]);
    assert_eq!(code, 4, "{err}");
    let (code, _, _) = cli(&["reproduce", "--table", "1", "--out_dir", s(&blocker)]);
    assert_eq!(code, 4);
}

#[test]
fn reproduce_writes_traces_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = cli(&["reproduce", "--table", "2", "--out_dir", s(dir.path())]);
    assert_eq!(code, 0);
    assert!(out.starts_with("table 2 (radial)"));
    for i in 1..=8 {
        assert!(dir.path().join(format!("table2_row{i}.csv")).exists());
    }
    let mut summary = csv::Reader::from_path(dir.path().join("table2_summary.csv")).unwrap();
    let headers = summary.headers().unwrap().clone();
    assert_eq!(&headers[0], "start");
    let rows: Vec<csv::StringRecord> = summary.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    for r in rows {
        let x: f64 = r[6].parse().unwrap();
        assert!((x - 2f64.sqrt()).abs() <= 1e-8);
    }
}

#[test]
fn profile_writes_one_file_per_run_and_a_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "profile",
        "--problem",
        "heavy_mono",
        "--tau",
        "100",
        "--budget",
        "5000",
        "--starts",
        "6",
        "--seed",
        "7",
        "--baseline",
        "--out_dir",
        s(dir.path()),
    ];
    let (code, _, err) = cli(&args);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    let mut profiles = 0;
    for e in std::fs::read_dir(dir.path()).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "csv") {
            profiles += 1;
            let prof = read_profile_csv(&p).unwrap();
            assert!(prof.last().unwrap().cumulative_cost <= 5000.0);
        }
    }
    assert_eq!(profiles, 12);
    let sidecar = std::fs::read_to_string(dir.path().join("heavy_mono_runs.jsonl")).unwrap();
    assert_eq!(sidecar.lines().count(), 12);
}

#[test]
fn profile_heavy_radial_without_oracle_cost() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "profile",
        "--problem",
        "heavy_radial",
        "--tau",
        "0",
        "--budget",
        "1000",
        "--starts",
        "1",
        "--seed",
        "1",
        "--out_dir",
        s(dir.path()),
    ];
    assert_eq!(cli(&args).0, 0);
    let prof = read_profile_csv(dir.path().join("heavy_radial_reformulated_1.csv")).unwrap();
    let sidecar = std::fs::read_to_string(dir.path().join("heavy_radial_runs.jsonl")).unwrap();
    let meta: serde_json::Value = serde_json::from_str(sidecar.lines().next().unwrap()).unwrap();
    let x = meta["x_best"][0].as_f64().unwrap();
    assert!((x - 2f64.sqrt()).abs() <= 1e-8, "{x}");
    // |x - √2| ≤ 1e-8 bounds ε by √(2√2 · 1e-8) plus the sine term
    let bound = (2.0 * 2f64.sqrt() * 1e-8 + 1e-15).sqrt() + 1e-13;
    assert!(prof.last().unwrap().best_value.value() <= bound);
}

#[test]
fn profile_warns_on_desk_problems() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "profile",
        "--problem",
        "mono",
        "--budget",
        "100",
        "--starts",
        "1",
        "--out_dir",
        s(dir.path()),
    ];
    let (code, _, err) = cli(&args);
    assert_eq!(code, 0);
    assert!(err.starts_with("warning:"));
}

#[test]
fn list_problems_shows_the_catalog() {
    let (code, out, _) = cli(&["list-problems"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
    assert!(out.contains("heavy_dim2         100    10    0.75       2    10"));
}

#[test]
fn environment_seed_overrides_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let c = dir.path().join("c.csv");
    cli_env(
        &[
            "solve",
            "--problem",
            "mono",
            "--start",
            "2",
            "--seed",
            "5",
            "--out",
            s(&a),
        ],
        Some("9"),
    );
    cli_env(
        &[
            "solve",
            "--problem",
            "mono",
            "--start",
            "2",
            "--seed",
            "9",
            "--out",
            s(&b),
        ],
        None,
    );
    cli_env(
        &[
            "solve",
            "--problem",
            "mono",
            "--start",
            "2",
            "--seed",
            "5",
            "--out",
            s(&c),
        ],
        None,
    );
    let read = |p: &Path| std::fs::read(p).unwrap();
    assert_eq!(read(&a), read(&b));
    assert_ne!(read(&a), read(&c));
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_parti-dfo");
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(bin)
        .args(["solve", "--problem", "bogus", "--start", "1"])
        .current_dir(dir.path())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    let out = Command::new(bin)
        .args(["solve", "--problem", "mono", "--start", "1"])
        .env("PARTI_DFO_SEED", "3")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("mono_trace.csv").exists());
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
