//! Writes a trace CSV, a convergence profile CSV and a run metadata sidecar.
//!
//! Usage: `cargo run --example export_results -- [out_dir]`

use std::path::PathBuf;

use parti_dfo::bench::{
    convergence_profile, read_trace_csv, run_reformulated, write_metadata_jsonl, write_profile_csv,
    write_trace_csv, CostModel, Method, RunMetadata,
};
use parti_dfo::problems::{make_problem, ProblemId};
use parti_dfo::solver::SolverConfig;

fn main() -> parti_dfo::error::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(std::env::temp_dir, PathBuf::from);
    std::fs::create_dir_all(&dir).map_err(|e| parti_dfo::error::Error::Io {
        path: dir.clone(),
        source: e,
    })?;

    let id = ProblemId::HeavyRadial;
    let problem = make_problem(id);
    let y0 = vec![3.0; problem.dim_y()];
    let (lambda, upsilon) = id.default_factors();
    let config = SolverConfig {
        seed: 42,
        ..SolverConfig::with_factors(lambda, upsilon)
    };
    let tau = id.default_tau();
    let trace = run_reformulated(
        problem.as_ref(),
        &y0,
        &config,
        CostModel::new(tau)?,
        Some(20_000.0),
    )?;

    let trace_path = dir.join("heavy_radial_trace.csv");
    let profile_path = dir.join("heavy_radial_profile.csv");
    let meta_path = dir.join("heavy_radial_runs.jsonl");
    write_trace_csv(&trace_path, &trace)?;
    write_profile_csv(&profile_path, &convergence_profile(&trace))?;
    let meta = RunMetadata::new(
        id.as_str(),
        Method::Reformulated,
        0,
        &config,
        tau,
        Some(20_000.0),
        &trace,
    );
    write_metadata_jsonl(&meta_path, &[meta])?;

    assert_eq!(read_trace_csv(&trace_path)?, trace.records);
    for p in [trace_path, profile_path, meta_path] {
        println!("wrote {}", p.display());
    }
    println!(
        "best {} after {} units",
        trace.summary.value_best,
        trace.final_cost()
    );
    Ok(())
}
