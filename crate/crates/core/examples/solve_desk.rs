//! Solves the two-variable `mono` problem through its one-dimensional index
//! and recovers the full-space minimizer.

use std::f64::consts::PI;

use parti_dfo::bench::{solve_reformulated_from, CostModel};
use parti_dfo::problems::{make_problem, ProblemId};
use parti_dfo::solver::SolverConfig;

fn main() -> parti_dfo::error::Result<()> {
    let id = ProblemId::Mono;
    let problem = make_problem(id);
    let (lambda, upsilon) = id.default_factors();
    let config = SolverConfig {
        seed: 1,
        ..SolverConfig::with_factors(lambda, upsilon)
    };

    let trace =
        solve_reformulated_from(problem.as_ref(), &[PI], &config, CostModel::new(0.0)?, None)?;
    let s = &trace.summary;
    println!("x_best     {:e}", s.x_best[0]);
    println!("Phi(x)     {}", s.value_best);
    println!(
        "iterations {} ({} evaluations, stop: {})",
        s.iterations,
        trace.evaluations(),
        s.stop_reason
    );
    println!(
        "gamma(x)   {:?}",
        s.recovered.as_deref().unwrap_or_default()
    );

    println!("\n  k  delta        x");
    for st in trace.states.iter().step_by(8) {
        println!("{:>3}  {:<11.3e}  {:e}", st.k, st.delta, st.x[0]);
    }
    Ok(())
}
