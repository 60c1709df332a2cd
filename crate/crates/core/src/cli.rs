//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 on solver or oracle failure, 2 on invalid
//! arguments, 3 on an infeasible or inadmissible start, 4 on I/O failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bench::{
    convergence_profile, generate_starts, solve_reformulated_from, write_metadata_jsonl,
    write_profile_csv, write_trace_csv, CostModel, Method, MultistartPlan, RunMetadata,
    DEFAULT_BUDGET,
};
use crate::error::Error;
use crate::ext_real::format_f64;
use crate::problems::{make_problem, ProblemId};
use crate::solver::SolverConfig;
use crate::tables::{builtin_start, TableSpec};

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "PARTI_DFO_SEED";

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "parti-dfo",
    version,
    about = "Partitioned derivative-free optimization with a covering direct search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve the reformulated problem from one start and write its trace.
    Solve(SolveArgs),
    /// Rerun one of the four desk-scale tables.
    Reproduce(ReproduceArgs),
    /// Multistart convergence profiles, optionally against the full-space baseline.
    Profile(ProfileArgs),
    /// Print the problem catalog.
    ListProblems,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    problem: String,
    /// Comma-separated index coordinates, or `auto:<i>` for the i-th built-in start.
    #[arg(long, allow_hyphen_values = true)]
    start: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    upsilon: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    delta0: f64,
    /// Stop once the poll radius drops below this.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long = "max_iters", default_value_t = 100_000)]
    max_iters: usize,
    /// Trace CSV path; defaults to `<problem>_trace.csv`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ReproduceArgs {
    #[arg(long)]
    table: u8,
    #[arg(long = "out_dir", default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[arg(long)]
    problem: String,
    /// Relative oracle cost; defaults to the problem's benchmark value.
    #[arg(long)]
    tau: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: f64,
    #[arg(long, default_value_t = 6)]
    starts: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Also run the full-space direct search on every start.
    #[arg(long)]
    baseline: bool,
    #[arg(long = "out_dir", default_value = ".")]
    out_dir: PathBuf,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reads the seed override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_seed = std::env::var(SEED_ENV).ok();
    run_with_env(args, env_seed.as_deref(), out, err)
}

/// Like [`run`], with the seed override passed explicitly.
pub fn run_with_env<I, T>(
    args: I,
    env_seed: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let env_seed = match env_seed.map(str::parse::<u64>).transpose() {
        Ok(s) => s,
        Err(_) => {
            let _ = writeln!(err, "error: {SEED_ENV} must be an unsigned integer");
            return 2;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a, env_seed, out, err),
        Command::Reproduce(a) => cmd_reproduce(a, env_seed, out),
        Command::Profile(a) => cmd_profile(a, env_seed, out, err),
        Command::ListProblems => cmd_list(out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidConfig(_) | Error::DimensionMismatch { .. } | Error::Domain(_) => 2,
        Error::InfeasibleStart | Error::StartOutsideBox(_) => 3,
        Error::Io { .. } | Error::Format { .. } => 4,
        Error::NaN(_) | Error::OracleInfeasible(_) | Error::Oracle(_) => 1,
    }
}

fn parse_problem(s: &str) -> Result<ProblemId, Error> {
    s.parse().map_err(Error::InvalidConfig)
}

fn parse_start(problem: ProblemId, start: &str, seed: u64) -> Result<Vec<f64>, Error> {
    if let Some(i) = start.strip_prefix("auto:") {
        let i: usize = i
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("bad start index {i:?}")))?;
        if problem.is_heavy() {
            if i == 0 {
                return Err(Error::InvalidConfig("start index is 1-based".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let y0 = generate_starts(problem, i, &mut rng).pop().expect("i >= 1");
            return Ok(make_problem(problem).chi(&y0));
        }
        return builtin_start(problem, i);
    }
    start
        .split(',')
        .map(|v| {
            let v = v.trim();
            match v.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(Error::InvalidConfig(format!("bad start coordinate {v:?}"))),
            }
        })
        .collect()
}

fn joined(v: &[f64]) -> String {
    v.iter()
        .map(|x| format_f64(*x))
        .collect::<Vec<_>>()
        .join(",")
}

fn create_dir(dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn cmd_solve(
    a: SolveArgs,
    env_seed: Option<u64>,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<(), Error> {
    let id = parse_problem(&a.problem)?;
    let seed = env_seed.unwrap_or(a.seed);
    let (l, u) = id.default_factors();
    let config = SolverConfig {
        delta0: a.delta0,
        lambda: a.lambda.unwrap_or(l),
        upsilon: a.upsilon.unwrap_or(u),
        delta_min: a.tol,
        max_iterations: a.max_iters,
        seed,
        ..SolverConfig::default()
    };
    config.validate()?;
    let problem = make_problem(id);
    let x0 = parse_start(id, &a.start, seed)?;
    if x0.len() != problem.dim_x() {
        return Err(Error::DimensionMismatch {
            expected: problem.dim_x(),
            actual: x0.len(),
        });
    }
    let path = a
        .out
        .unwrap_or_else(|| PathBuf::from(format!("{id}_trace.csv")));

    let trace =
        solve_reformulated_from(problem.as_ref(), &x0, &config, CostModel::new(0.0)?, None)?;
    write_trace_csv(&path, &trace)?;

    let s = &trace.summary;
    let recovered = s.recovered.as_ref().map_or(0, Vec::len);
    let _ = writeln!(out, "problem: {id}");
    let _ = writeln!(out, "x_best: {}", joined(&s.x_best));
    let _ = writeln!(out, "value: {}", s.value_best);
    let _ = writeln!(out, "iterations: {}", s.iterations);
    let _ = writeln!(out, "evaluations: {}", trace.evaluations());
    let _ = writeln!(out, "stop: {}", s.stop_reason);
    let _ = writeln!(out, "recovered: {recovered} coordinates");
    let _ = writeln!(out, "trace: {}", path.display());
    Ok(())
}

fn cmd_reproduce(
    a: ReproduceArgs,
    env_seed: Option<u64>,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let spec = TableSpec::get(a.table).ok_or_else(|| {
        Error::InvalidConfig(format!("table must be 1, 2, 3 or 4, got {}", a.table))
    })?;
    let seed = env_seed.unwrap_or(a.seed);
    let rows = spec.run(seed)?;

    create_dir(&a.out_dir)?;
    for (i, row) in rows.iter().enumerate() {
        write_trace_csv(
            a.out_dir
                .join(format!("table{}_row{}.csv", spec.table, i + 1)),
            &row.trace,
        )?;
    }
    let path = a.out_dir.join(format!("table{}_summary.csv", spec.table));
    let mut w = csv::Writer::from_path(&path).map_err(|e| Error::Format {
        path: path.clone(),
        message: e.to_string(),
    })?;
    let t = spec.thresholds.map(format_f64);
    let header = [
        "start".to_string(),
        format!("first_k_{}", t[0]),
        format!("first_k_{}", t[1]),
        format!("first_k_{}", t[2]),
        "returned_k".to_string(),
        "returned_error".to_string(),
        "returned_x".to_string(),
    ];
    let csv_err = |e: csv::Error| Error::Format {
        path: path.clone(),
        message: e.to_string(),
    };
    w.write_record(&header).map_err(csv_err)?;
    let _ = writeln!(out, "table {} ({})", spec.table, spec.problem);
    let _ = writeln!(out, "{}", header.join("  "));
    for row in &rows {
        let first = row
            .first_below
            .map(|k| k.map_or(String::new(), |k| k.to_string()));
        let record = [
            row.label.to_string(),
            first[0].clone(),
            first[1].clone(),
            first[2].clone(),
            row.returned_k.to_string(),
            format_f64(row.returned_error),
            row.returned_x
                .iter()
                .map(|v| format_f64(*v))
                .collect::<Vec<_>>()
                .join(";"),
        ];
        w.write_record(&record).map_err(csv_err)?;
        let shown = record.map(|f| if f.is_empty() { "/".to_string() } else { f });
        let _ = writeln!(out, "{}", shown.join("  "));
    }
    w.flush().map_err(|e| Error::io(&path, e))?;
    Ok(())
}

fn cmd_profile(
    a: ProfileArgs,
    env_seed: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Error> {
    let id = parse_problem(&a.problem)?;
    if a.starts == 0 {
        return Err(Error::InvalidConfig("--starts must be at least 1".into()));
    }
    if !(a.budget > 0.0 && a.budget.is_finite()) {
        return Err(Error::InvalidConfig("--budget must be positive".into()));
    }
    let tau = a.tau.unwrap_or_else(|| id.default_tau());
    let model = CostModel::new(tau)?;
    if !id.is_heavy() {
        let _ = writeln!(
            err,
            "warning: {id} is a desk-scale problem; profiles are meant for the heavy ones"
        );
    }
    let seed = env_seed.unwrap_or(a.seed);
    let (l, u) = id.default_factors();
    let config = SolverConfig::with_factors(l, u);

    let plan = MultistartPlan::generate(id, a.starts, seed, a.budget, model.tau);
    let runs = plan.run(&config, a.baseline)?;

    create_dir(&a.out_dir)?;
    let mut meta = Vec::with_capacity(runs.len());
    for run in &runs {
        let name = format!("{id}_{}_{}.csv", run.method.as_str(), run.start_index + 1);
        write_profile_csv(a.out_dir.join(&name), &convergence_profile(&run.trace))?;
        let config = SolverConfig {
            seed: run.seed,
            covering: run.method == Method::Reformulated,
            ..config.clone()
        };
        meta.push(RunMetadata::new(
            id.as_str(),
            run.method,
            run.start_index,
            &config,
            tau,
            Some(a.budget),
            &run.trace,
        ));
        let _ = writeln!(
            out,
            "{id} start {} {}: best {} after {} units ({} evaluations) -> {name}",
            run.start_index + 1,
            run.method.as_str(),
            run.trace.summary.value_best,
            format_f64(run.trace.final_cost()),
            run.trace.evaluations(),
        );
    }
    write_metadata_jsonl(a.out_dir.join(format!("{id}_runs.jsonl")), &meta)?;
    Ok(())
}

fn cmd_list(out: &mut dyn Write) -> Result<(), Error> {
    let _ = writeln!(
        out,
        "{:<16} {:>5} {:>5} {:>7} {:>7} {:>5}",
        "id", "dim_y", "dim_x", "lambda", "upsilon", "tau"
    );
    for id in ProblemId::ALL {
        let p = make_problem(id);
        let (l, u) = id.default_factors();
        let _ = writeln!(
            out,
            "{:<16} {:>5} {:>5} {:>7} {:>7} {:>5}",
            id.as_str(),
            p.dim_y(),
            p.dim_x(),
            l,
            u,
            id.default_tau()
        );
    }
    Ok(())
}
