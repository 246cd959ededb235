use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use shallow_well::format::CsvTable;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shallow-well"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn table(args: &[&str]) -> CsvTable {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    CsvTable::parse(&stdout(&out)).unwrap()
}

fn center_row(t: &CsvTable) -> &Vec<f64> {
    t.rows.iter().find(|r| r[0] == 0.0).expect("x = 0 row")
}

#[test]
fn potential_rows() {
    let t = table(&["potential", "--epsilon", "-1.10"]);
    assert_eq!(t.header, ["x", "V"]);
    assert_eq!(t.rows.len(), 4001);
    assert!((center_row(&t)[1] + 0.2).abs() < 1e-15);

    let t = table(&[
        "potential",
        "--epsilon",
        "-2.25",
        "--points",
        "101",
        "--x-max",
        "10",
    ]);
    assert_eq!(t.rows.len(), 101);
    assert_eq!(center_row(&t)[1], -2.5);
}

#[test]
fn invalid_epsilon_names_the_constraint() {
    let out = run(&["potential", "--epsilon", "-0.5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ε < -1"));
    assert!(out.stdout.is_empty());

    assert_eq!(run(&["classify", "--epsilon", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["potential"]).status.code(), Some(2));
    assert_eq!(
        run(&["potential", "--epsilon", "abc"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["potential", "--epsilon", "-1.5", "--points", "400"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn states_columns() {
    let t = table(&["states", "--epsilon", "-1.10"]);
    assert_eq!(t.header, ["x", "V", "psi0", "psi1", "rho0"]);
    let psi0 = t.column("psi0").unwrap();
    let psi1 = t.column("psi1").unwrap();
    let n = psi0.len();
    for i in 0..n {
        assert_eq!(psi0[i], psi0[n - 1 - i]);
        assert_eq!(psi1[i], -psi1[n - 1 - i]);
    }
    let h = 0.01;
    let norm = h
        * (psi0.iter().map(|v| v * v).sum::<f64>()
            - 0.5 * (psi0[0] * psi0[0] + psi0[n - 1] * psi0[n - 1]));
    assert!((norm - 1.0).abs() < 1e-10);

    let t = table(&["states", "--epsilon", "-2.25"]);
    let rho = t.column("rho0").unwrap();
    let xs = t.column("x").unwrap();
    let peak = rho
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap()
        .0;
    assert_eq!(xs[peak], 0.0);
}

#[test]
fn states_on_narrow_grid_exit_3() {
    let out = run(&["states", "--epsilon", "-1.1", "--x-max", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_reports_json() {
    for e in ["-1.5", "-2.25"] {
        let out = run(&["verify", "--epsilon", e]);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        for key in [
            "epsilon",
            "e0_analytic",
            "e1_analytic",
            "e0_numeric",
            "e1_numeric",
            "e0_error",
            "e1_error",
            "psi0_residual",
            "psi1_residual",
            "psi0_overlap",
            "psi1_overlap",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert!(v["e0_error"].as_f64().unwrap() < 1e-4);
        assert_eq!(v["pass"], Value::Bool(true));
    }
}

#[test]
fn verify_near_degenerate_gap() {
    let out = run(&["verify", "--epsilon", "-1.0001"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let gap = v["gap_numeric"].as_f64().unwrap();
    assert!((gap - 1e-4).abs() < 1e-5, "{gap}");
}

#[test]
fn verify_fails_on_coarse_grid() {
    let out = run(&["verify", "--epsilon", "-1.5", "--points", "201"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], Value::Bool(false));
}

#[test]
fn classify_lines() {
    let line = stdout(&run(&["classify", "--epsilon", "-1.10"]));
    assert!(
        line.starts_with("double well; ground BELOW separatrix; s=-0.2; maxima=2"),
        "{line}"
    );
    let line = stdout(&run(&["classify", "--epsilon", "-2.25"]));
    assert!(
        line.starts_with("double well; ground ABOVE separatrix; s=-2.5; maxima=1"),
        "{line}"
    );
    let line = stdout(&run(&["classify", "--epsilon", "-3.5"]));
    assert!(line.starts_with("not a double well"), "{line}");

    let v: Value = serde_json::from_str(&stdout(&run(&[
        "classify",
        "--epsilon",
        "-1.1",
        "--format",
        "json",
    ])))
    .unwrap();
    assert_eq!(v["kind"], "double_well_ground_below_separatrix");
    assert_eq!(v["density_maxima_count"], 2);
}

#[test]
fn evolve_crosses_half_four_times_in_two_periods() {
    let t = table(&["evolve", "--epsilon", "-1.05", "--frames", "401"]);
    assert_eq!(t.header, ["t", "P_left"]);
    assert_eq!(t.rows.len(), 401);
    let p = t.column("P_left").unwrap();
    let crossings = p
        .windows(2)
        .filter(|w| (w[0] - 0.5) * (w[1] - 0.5) < 0.0)
        .count();
    assert_eq!(crossings, 4);
    let footer = &t.trailing_comments[0];
    let period: f64 = footer
        .strip_prefix("analytic_period=")
        .unwrap()
        .parse()
        .unwrap();
    assert!((period - 2.0 * std::f64::consts::PI / 0.05).abs() < 1e-9);
    assert!(t.leading_comments.is_empty());
}

#[test]
fn evolve_two_frames_half_period() {
    let half = format!("{}", std::f64::consts::PI / 0.5);
    let t = table(&[
        "evolve",
        "--epsilon",
        "-1.5",
        "--frames",
        "2",
        "--t-max",
        &half,
    ]);
    let p = t.column("P_left").unwrap();
    assert!((p[0] + p[1] - 1.0).abs() < 1e-9);
}

#[test]
fn evolve_above_barrier_warns() {
    let t = table(&["evolve", "--epsilon", "-2.5", "--frames", "11"]);
    assert!(t.leading_comments[0].starts_with("warning:"));
    assert!(t
        .column("P_left")
        .unwrap()
        .iter()
        .all(|p| (0.0..=1.0).contains(p)));
}

#[test]
fn sweep_examples() {
    let t = table(&[
        "sweep",
        "--eps-start",
        "-2.9",
        "--eps-end",
        "-1.1",
        "--steps",
        "19",
        "--quantities",
        "curvature",
    ]);
    assert_eq!(t.header, ["epsilon", "curvature"]);
    assert_eq!(t.rows.len(), 19);
    assert!(t.rows.iter().all(|r| r[1] < 0.0));

    let t = table(&[
        "sweep",
        "--eps-start",
        "-2.1",
        "--eps-end",
        "-1.9",
        "--steps",
        "5",
        "--quantities",
        "maxima_count,gap",
    ]);
    let m = t.column("maxima_count").unwrap();
    assert_eq!(m, [1.0, 1.0, 1.0, 2.0, 2.0]);
    for r in &t.rows {
        assert_eq!(r[2], -1.0 - r[0]);
    }
}

#[test]
fn sweep_validation() {
    let bad = [
        vec!["sweep", "--eps-start", "-1.1", "--eps-end", "-2.9"],
        vec!["sweep", "--eps-start", "-2", "--eps-end", "-0.5"],
        vec![
            "sweep",
            "--eps-start",
            "-2",
            "--eps-end",
            "-1.5",
            "--quantities",
            "mass",
        ],
        vec![
            "sweep",
            "--eps-start",
            "-2",
            "--eps-end",
            "-1.5",
            "--steps",
            "1",
        ],
    ];
    for args in bad {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sweep_failed_rows_carry_nan() {
    // x_max = 14 is wide enough for ε = -3 but not for ε close to -1
    let out = run(&[
        "sweep",
        "--eps-start",
        "-3",
        "--eps-end",
        "-1.0001",
        "--steps",
        "3",
        "--quantities",
        "e0_error",
        "--x-max",
        "14",
        "--points",
        "1601",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let t = CsvTable::parse(&stdout(&out)).unwrap();
    let e = t.column("e0_error").unwrap();
    assert!(e[0].is_finite());
    assert!(e[2].is_nan());
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = dir.path().join("v.csv");
    fs::write(
        &cfg,
        format!(
            "epsilon = -2.25\npoints = 201\nx_max = 12\nout = {}\n",
            out.display()
        ),
    )
    .unwrap();
    let status = run(&["potential", "--config", cfg.to_str().unwrap()]);
    assert_eq!(status.status.code(), Some(0));
    let t = CsvTable::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(t.rows.len(), 201);
    assert_eq!(center_row(&t)[1], -2.5);

    let status = run(&[
        "potential",
        "--config",
        cfg.to_str().unwrap(),
        "--epsilon",
        "-1.5",
    ]);
    assert_eq!(status.status.code(), Some(0));
    let t = CsvTable::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(center_row(&t)[1], -1.0);

    let missing = run(&["potential", "--config", "/nonexistent/run.cfg"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn svg_side_output() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("v.svg");
    let out = dir.path().join("v.csv");
    let status = run(&[
        "potential",
        "--epsilon",
        "-1.1",
        "--out",
        out.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(0));
    let text = fs::read_to_string(svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("<polyline"));
    assert!(text.contains("width=\"800\" height=\"600\""));
}

#[test]
fn json_potential() {
    let out = run(&[
        "potential",
        "--epsilon",
        "-1.5",
        "--points",
        "11",
        "--x-max",
        "5",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["x"].as_array().unwrap().len(), 11);
    assert_eq!(v["V"][5], -1.0);
}
