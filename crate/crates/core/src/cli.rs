//! The `shallow-well` command line.
//!
//! Exit codes: `0` success, `1` verification failed, `2` bad arguments,
//! `3` grid too narrow, `4` eigensolver failure.
//!
//! Every subcommand also reads an optional `--config FILE` of `key = value`
//! lines (`#` starts a comment). Flags given on the command line win.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::darboux::{self, FactorizationEnergy, PotentialCurve};
use crate::dynamics::{analytic_period, evolve_series};
use crate::error::Error;
use crate::format::{svg_polyline, CsvTable};
use crate::grid::{Grid, RealWave};
use crate::oracle::{check_intertwining, verify_spectrum};
use crate::wells::{check_bimodality_relation, classify_on, WellKind};

pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const BAD_ARGUMENTS: i32 = 2;
    pub const GRID_ERROR: i32 = 3;
    pub const SOLVER_FAILURE: i32 = 4;
}

/// Tolerances `verify` gates its exit code on.
pub mod gates {
    pub const EIGENVALUE_ERROR: f64 = 1e-4;
    pub const OVERLAP_DEFICIT: f64 = 1e-8;
    pub const INTERTWINING: f64 = 1e-4;
    pub const ANNIHILATION: f64 = 1e-8;
    pub const BIMODALITY_REL: f64 = 1e-5;
    pub const BIMODALITY_DEGENERATE_ABS: f64 = 1e-6;
}

#[derive(Debug, Parser)]
#[command(
    name = "shallow-well",
    version,
    about = "Exactly soluble shallow double wells"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate V_ε on the grid (`x,V`).
    Potential {
        #[command(flatten)]
        common: Common,
        /// Also write an SVG polyline of V(x).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Tabulate the analytic bound states (`x,V,psi0,psi1,rho0`).
    States {
        #[command(flatten)]
        common: Common,
    },
    /// Compare the analytic spectrum against the finite-difference oracle.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Classify V_ε.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Left-well probability of the two-level superposition (`t,P_left`).
    Evolve {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        t_max: Option<f64>,
        #[arg(long)]
        frames: Option<usize>,
        /// Also write an SVG polyline of P_left(t).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Tabulate chosen quantities over a range of ε.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        eps_start: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        eps_end: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        /// Comma-separated: separatrix,curvature,gap,maxima_count,e0_error,e1_error
        #[arg(long)]
        quantities: Option<String>,
    },
}

#[derive(Debug, Clone, Args)]
struct Common {
    #[arg(long, allow_negative_numbers = true)]
    epsilon: Option<f64>,
    #[arg(long)]
    x_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// `key = value` file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Resolved settings shared by the single-ε subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub epsilon: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Separatrix,
    Curvature,
    Gap,
    MaximaCount,
    E0Error,
    E1Error,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Separatrix => "separatrix",
            Quantity::Curvature => "curvature",
            Quantity::Gap => "gap",
            Quantity::MaximaCount => "maxima_count",
            Quantity::E0Error => "e0_error",
            Quantity::E1Error => "e1_error",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s.trim() {
            "separatrix" => Quantity::Separatrix,
            "curvature" => Quantity::Curvature,
            "gap" => Quantity::Gap,
            "maxima_count" => Quantity::MaximaCount,
            "e0_error" => Quantity::E0Error,
            "e1_error" => Quantity::E1Error,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub eps_start: f64,
    pub eps_end: f64,
    pub steps: usize,
    pub quantities: Vec<Quantity>,
}

impl SweepConfig {
    pub fn epsilons(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|k| {
                if k + 1 == n {
                    self.eps_end
                } else {
                    self.eps_start + (self.eps_end - self.eps_start) * k as f64 / (n - 1) as f64
                }
            })
            .collect()
    }
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn bad(message: impl Into<String>) -> Self {
        Failure {
            code: exit::BAD_ARGUMENTS,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidEpsilon(_) | Error::InvalidGrid(_) | Error::TooManyEigenpairs { .. } => {
                exit::BAD_ARGUMENTS
            }
            Error::GridTooNarrow { .. } => exit::GRID_ERROR,
            Error::ConvergenceFailure { .. } => exit::SOLVER_FAILURE,
            Error::BoundStateCountMismatch { .. } => exit::VERIFICATION_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses `key = value` lines. Keys may use `-` or `_`.
fn read_config_file(path: &Path) -> CliResult<HashMap<String, String>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::bad(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Failure::bad(format!(
                "{}:{}: expected key = value",
                path.display(),
                n + 1
            ))
        })?;
        let v = v.trim().trim_matches('"');
        map.insert(k.trim().replace('-', "_"), v.to_owned());
    }
    Ok(map)
}

struct Settings {
    file: HashMap<String, String>,
}

impl Settings {
    fn load(config: Option<&Path>) -> CliResult<Self> {
        let file = match config {
            Some(p) => read_config_file(p)?,
            None => HashMap::new(),
        };
        Ok(Settings { file })
    }

    fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str) -> CliResult<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|_| Failure::bad(format!("config: cannot parse {key} = {raw:?}"))),
        }
    }
}

fn resolve_run(common: &Common, settings: &Settings) -> CliResult<RunConfig> {
    let epsilon = settings
        .pick(common.epsilon, "epsilon")?
        .ok_or_else(|| Failure::bad("--epsilon is required (ε < -1)"))?;
    let format = match settings.pick::<String>(None, "format")? {
        _ if common.format.is_some() => common.format.unwrap(),
        Some(f) if f == "json" => OutputFormat::Json,
        Some(f) if f == "csv" => OutputFormat::Csv,
        Some(f) => return Err(Failure::bad(format!("config: unknown format {f:?}"))),
        None => OutputFormat::Csv,
    };
    Ok(RunConfig {
        epsilon,
        x_max: settings
            .pick(common.x_max, "x_max")?
            .unwrap_or(Grid::DEFAULT_X_MAX),
        n_points: settings
            .pick(common.points, "points")?
            .unwrap_or(Grid::DEFAULT_POINTS),
        output_path: settings.pick(common.out.clone(), "out")?,
        format,
    })
}

impl RunConfig {
    fn epsilon(&self) -> CliResult<FactorizationEnergy> {
        Ok(FactorizationEnergy::new(self.epsilon)?)
    }

    fn grid(&self) -> CliResult<Grid> {
        Ok(Grid::new(self.x_max, self.n_points)?)
    }
}

fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure {
            code: exit::BAD_ARGUMENTS,
            message: format!("cannot write {}: {e}", p.display()),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure {
                    code: exit::BAD_ARGUMENTS,
                    message: format!("cannot write to stdout: {e}"),
                })
        }
    }
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_potential(cfg: &RunConfig, svg: Option<&Path>) -> CliResult<i32> {
    let eps = cfg.epsilon()?;
    let grid = cfg.grid()?;
    let pot = PotentialCurve::darboux(eps, grid);
    let xs: Vec<f64> = grid.nodes().collect();
    let text = match cfg.format {
        OutputFormat::Csv => {
            let mut t = CsvTable::new(["x", "V"]);
            for (&x, &v) in xs.iter().zip(pot.values()) {
                t.push_row(vec![x, v]);
            }
            t.render()
        }
        OutputFormat::Json => to_json(&json!({
            "epsilon": cfg.epsilon,
            "x": xs,
            "V": pot.values(),
        })),
    };
    emit(cfg.output_path.as_deref(), &text)?;
    if let Some(p) = svg {
        emit(Some(p), &svg_polyline(&xs, pot.values()))?;
    }
    Ok(exit::OK)
}

fn cmd_states(cfg: &RunConfig) -> CliResult<i32> {
    let eps = cfg.epsilon()?;
    let grid = cfg.grid()?;
    let pot = PotentialCurve::darboux(eps, grid);
    let psi0 = darboux::ground_state(eps, grid)?;
    let psi1 = darboux::excited_state(eps, grid)?;
    let rho0 = psi0.squared();
    let xs: Vec<f64> = grid.nodes().collect();
    let text = match cfg.format {
        OutputFormat::Csv => {
            let mut t = CsvTable::new(["x", "V", "psi0", "psi1", "rho0"]);
            for (i, &x) in xs.iter().enumerate() {
                t.push_row(vec![
                    x,
                    pot.values()[i],
                    psi0.samples()[i],
                    psi1.samples()[i],
                    rho0.samples()[i],
                ]);
            }
            t.render()
        }
        OutputFormat::Json => to_json(&json!({
            "epsilon": cfg.epsilon,
            "e0": cfg.epsilon,
            "e1": -1.0,
            "x": xs,
            "V": pot.values(),
            "psi0": psi0.samples(),
            "psi1": psi1.samples(),
            "rho0": rho0.samples(),
        })),
    };
    emit(cfg.output_path.as_deref(), &text)?;
    Ok(exit::OK)
}

/// Deterministic family of Gaussian test bumps for the intertwining check.
pub fn gaussian_bumps(grid: Grid) -> Vec<RealWave> {
    (0..10)
        .map(|k| {
            let center = -3.0 + 6.0 * k as f64 / 9.0;
            let width = 0.5 + 1.5 * ((k * 7) % 10) as f64 / 9.0;
            RealWave::from_fn(grid, |x| (-((x - center) / width).powi(2)).exp())
        })
        .collect()
}

/// `max|A†(1/u)| / max|1/u|` away from the two outermost nodes per side.
pub fn annihilation_residual(eps: FactorizationEnergy, grid: Grid) -> f64 {
    let f = RealWave::from_fn(grid, |x| {
        let (m, s) = darboux::seed_function_scaled(eps, x);
        (-s).exp() / m
    });
    let out = darboux::apply_a_dagger(eps, &f);
    let n = grid.n_points();
    let worst = out.samples()[2..n - 2]
        .iter()
        .fold(0.0_f64, |m, v| m.max(v.abs()));
    worst / f.max_abs()
}

fn cmd_verify(cfg: &RunConfig, format_given: bool) -> CliResult<i32> {
    let eps = cfg.epsilon()?;
    let grid = cfg.grid()?;
    let report = verify_spectrum(eps, grid)?;
    let intertwining = gaussian_bumps(grid)
        .iter()
        .map(|f| check_intertwining(eps, f))
        .fold(0.0, f64::max);
    let annihilation = annihilation_residual(eps, grid);
    let bimodality = check_bimodality_relation(eps, grid)?;
    let bimodality_ok = if bimodality.rhs == 0.0 {
        bimodality.lhs.abs() < gates::BIMODALITY_DEGENERATE_ABS
    } else {
        bimodality.rel_err < gates::BIMODALITY_REL
    };
    let pass = report.e0_error < gates::EIGENVALUE_ERROR
        && report.e1_error < gates::EIGENVALUE_ERROR
        && 1.0 - report.psi0_overlap < gates::OVERLAP_DEFICIT
        && 1.0 - report.psi1_overlap < gates::OVERLAP_DEFICIT
        && intertwining < gates::INTERTWINING
        && annihilation < gates::ANNIHILATION
        && bimodality_ok;

    let mut obj = serde_json::to_value(&report).expect("serializable");
    let extra = json!({
        "gap_analytic": report.analytic_gap(),
        "gap_numeric": report.numeric_gap(),
        "intertwining_residual": intertwining,
        "annihilation_residual": annihilation,
        "bimodality_lhs": bimodality.lhs,
        "bimodality_rhs": bimodality.rhs,
        "bimodality_rel_err": bimodality.rel_err,
        "x_max": cfg.x_max,
        "n_points": cfg.n_points,
        "pass": pass,
    });
    obj.as_object_mut()
        .expect("object")
        .extend(extra.as_object().expect("object").clone());

    let text = if format_given && cfg.format == OutputFormat::Csv {
        let mut s = String::from("key,value\n");
        for (k, v) in obj.as_object().expect("object") {
            s.push_str(&format!("{k},{v}\n"));
        }
        s
    } else {
        to_json(&obj)
    };
    emit(cfg.output_path.as_deref(), &text)?;
    Ok(if pass {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}

fn cmd_classify(cfg: &RunConfig) -> CliResult<i32> {
    let eps = cfg.epsilon()?;
    let c = classify_on(eps, cfg.grid()?)?;
    let text = match cfg.format {
        OutputFormat::Csv => format!("{}\n", c.verdict()),
        OutputFormat::Json => to_json(&serde_json::to_value(&c).expect("serializable")),
    };
    emit(cfg.output_path.as_deref(), &text)?;
    Ok(exit::OK)
}

fn cmd_evolve(
    cfg: &RunConfig,
    t_max: Option<f64>,
    frames: usize,
    svg: Option<&Path>,
) -> CliResult<i32> {
    let eps = cfg.epsilon()?;
    let grid = cfg.grid()?;
    if frames < 2 {
        return Err(Failure::bad("--frames must be at least 2"));
    }
    let period = analytic_period(eps);
    let t_max = t_max.unwrap_or(2.0 * period);
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Failure::bad("--t-max must be positive"));
    }
    let series = evolve_series(eps, grid, t_max, frames)?;
    let above = WellKind::of(eps) != WellKind::DoubleWellGroundBelowSeparatrix;
    let warning = "warning: ground level is not below the barrier top; \
                   no low-lying two-level system, oscillation shown for reference only";
    let text = match cfg.format {
        OutputFormat::Csv => {
            let mut t = CsvTable::new(["t", "P_left"]);
            if above {
                t.leading_comments.push(warning.to_owned());
            }
            for (&time, &p) in series.times.iter().zip(&series.left_probability) {
                t.push_row(vec![time, p]);
            }
            t.trailing_comments.push(format!(
                "analytic_period={}",
                crate::format::format_f64(period)
            ));
            t.render()
        }
        OutputFormat::Json => to_json(&json!({
            "epsilon": cfg.epsilon,
            "analytic_period": period,
            "t": series.times,
            "P_left": series.left_probability,
            "warning": if above { Some(warning) } else { None },
        })),
    };
    emit(cfg.output_path.as_deref(), &text)?;
    if let Some(p) = svg {
        emit(
            Some(p),
            &svg_polyline(&series.times, &series.left_probability),
        )?;
    }
    Ok(exit::OK)
}

fn sweep_row(eps: f64, grid: Grid, quantities: &[Quantity]) -> (Vec<f64>, Vec<String>) {
    let mut warnings = Vec::new();
    let e = match FactorizationEnergy::new(eps) {
        Ok(e) => e,
        Err(err) => return (vec![f64::NAN; quantities.len()], vec![err.to_string()]),
    };
    let needs_oracle = quantities
        .iter()
        .any(|q| matches!(q, Quantity::E0Error | Quantity::E1Error));
    let report = if needs_oracle {
        verify_spectrum(e, grid)
            .map_err(|err| warnings.push(format!("ε={eps}: oracle failed: {err}")))
            .ok()
    } else {
        None
    };
    let maxima = if quantities.contains(&Quantity::MaximaCount) {
        classify_on(e, grid)
            .map_err(|err| warnings.push(format!("ε={eps}: {err}")))
            .ok()
            .map(|c| c.density_maxima_count as f64)
    } else {
        None
    };
    let row = quantities
        .iter()
        .map(|q| match q {
            Quantity::Separatrix => darboux::separatrix_energy(e),
            Quantity::Curvature => darboux::curvature_at_origin(e),
            Quantity::Gap => -1.0 - eps,
            Quantity::MaximaCount => maxima.unwrap_or(f64::NAN),
            Quantity::E0Error => report.as_ref().map_or(f64::NAN, |r| r.e0_error),
            Quantity::E1Error => report.as_ref().map_or(f64::NAN, |r| r.e1_error),
        })
        .collect();
    (row, warnings)
}

fn resolve_sweep(
    eps_start: Option<f64>,
    eps_end: Option<f64>,
    steps: Option<usize>,
    quantities: Option<String>,
    settings: &Settings,
) -> CliResult<SweepConfig> {
    let eps_start = settings
        .pick(eps_start, "eps_start")?
        .ok_or_else(|| Failure::bad("--eps-start is required"))?;
    let eps_end = settings
        .pick(eps_end, "eps_end")?
        .ok_or_else(|| Failure::bad("--eps-end is required"))?;
    let steps = settings.pick(steps, "steps")?.unwrap_or(101);
    let quantities = settings
        .pick(quantities, "quantities")?
        .unwrap_or_else(|| "separatrix,curvature,gap,maxima_count".to_owned());
    let quantities = quantities
        .split(',')
        .map(|q| Quantity::parse(q).ok_or_else(|| Failure::bad(format!("unknown quantity {q:?}"))))
        .collect::<CliResult<Vec<_>>>()?;
    if !(eps_start < eps_end && eps_end <= FactorizationEnergy::UPPER_LIMIT) {
        return Err(Failure::bad(
            "sweep needs eps_start < eps_end <= -1 - 1e-9 (the transform requires ε < -1)",
        ));
    }
    if steps < 2 {
        return Err(Failure::bad("--steps must be at least 2"));
    }
    if quantities.is_empty() {
        return Err(Failure::bad("--quantities is empty"));
    }
    Ok(SweepConfig {
        eps_start,
        eps_end,
        steps,
        quantities,
    })
}

fn cmd_sweep(
    sweep: &SweepConfig,
    grid: Grid,
    cfg_out: Option<&Path>,
    format: OutputFormat,
) -> CliResult<i32> {
    let epsilons = sweep.epsilons();
    let rows: Vec<(Vec<f64>, Vec<String>)> = epsilons
        .par_iter()
        .map(|&e| sweep_row(e, grid, &sweep.quantities))
        .collect();
    let mut failed = 0;
    for (row, warnings) in &rows {
        for w in warnings {
            eprintln!("warning: {w}");
        }
        if row.iter().any(|v| v.is_nan()) {
            failed += 1;
        }
    }
    let mut header = vec!["epsilon".to_owned()];
    header.extend(sweep.quantities.iter().map(|q| q.name().to_owned()));
    let text = match format {
        OutputFormat::Csv => {
            let mut t = CsvTable::new(header);
            for (&e, (row, _)) in epsilons.iter().zip(&rows) {
                let mut r = vec![e];
                r.extend(row);
                t.push_row(r);
            }
            t.render()
        }
        OutputFormat::Json => {
            let data: Vec<Vec<Value>> = epsilons
                .iter()
                .zip(&rows)
                .map(|(&e, (row, _))| {
                    std::iter::once(json!(e))
                        .chain(row.iter().map(|&v| json!(v)))
                        .collect()
                })
                .collect();
            to_json(&json!({ "columns": header, "rows": data }))
        }
    };
    emit(cfg_out, &text)?;
    Ok(if failed == rows.len() {
        exit::SOLVER_FAILURE
    } else {
        exit::OK
    })
}

fn dispatch(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Potential { common, svg } => {
            let s = Settings::load(common.config.as_deref())?;
            cmd_potential(&resolve_run(&common, &s)?, svg.as_deref())
        }
        Command::States { common } => {
            let s = Settings::load(common.config.as_deref())?;
            cmd_states(&resolve_run(&common, &s)?)
        }
        Command::Verify { common } => {
            let s = Settings::load(common.config.as_deref())?;
            let format_given = common.format.is_some() || s.file.contains_key("format");
            cmd_verify(&resolve_run(&common, &s)?, format_given)
        }
        Command::Classify { common } => {
            let s = Settings::load(common.config.as_deref())?;
            cmd_classify(&resolve_run(&common, &s)?)
        }
        Command::Evolve {
            common,
            t_max,
            frames,
            svg,
        } => {
            let s = Settings::load(common.config.as_deref())?;
            let cfg = resolve_run(&common, &s)?;
            let t_max = s.pick(t_max, "t_max")?;
            let frames = s.pick(frames, "frames")?.unwrap_or(201);
            cmd_evolve(&cfg, t_max, frames, svg.as_deref())
        }
        Command::Sweep {
            common,
            eps_start,
            eps_end,
            steps,
            quantities,
        } => {
            let s = Settings::load(common.config.as_deref())?;
            let sweep = resolve_sweep(eps_start, eps_end, steps, quantities, &s)?;
            let x_max = s
                .pick(common.x_max, "x_max")?
                .unwrap_or(Grid::DEFAULT_X_MAX);
            let points = s
                .pick(common.points, "points")?
                .unwrap_or(Grid::DEFAULT_POINTS);
            let grid = Grid::new(x_max, points)?;
            let out = s.pick(common.out.clone(), "out")?;
            let format = common.format.unwrap_or(OutputFormat::Csv);
            cmd_sweep(&sweep, grid, out.as_deref(), format)
        }
    }
}

/// Runs the CLI on explicit arguments (the first is the program name) and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
