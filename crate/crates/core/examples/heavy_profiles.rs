//! Compares the reformulated search against the full-space baseline on the
//! 101-variable `heavy_mono` problem under a shared cost budget.
//!
//! Usage: `cargo run --release --example heavy_profiles -- [problem] [budget]`

use parti_dfo::bench::{convergence_profile, Method, MultistartPlan};
use parti_dfo::problems::ProblemId;
use parti_dfo::solver::SolverConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let id: ProblemId = args.next().as_deref().unwrap_or("heavy_mono").parse()?;
    let budget: f64 = args.next().as_deref().unwrap_or("5000").parse()?;
    let (lambda, upsilon) = id.default_factors();
    let tau = id.default_tau();

    let plan = MultistartPlan::generate(id, 6, 7, budget, tau);
    let runs = plan.run(&SolverConfig::with_factors(lambda, upsilon), true)?;

    println!("{id}: tau = {tau}, budget = {budget}");
    for run in &runs {
        let profile = convergence_profile(&run.trace);
        let at = |frac: f64| {
            profile
                .iter()
                .take_while(|p| p.cumulative_cost <= frac * budget)
                .last()
                .map_or("-".to_string(), |p| format!("{:.3e}", p.best_value.value()))
        };
        let tag = match run.method {
            Method::Reformulated => "reformulated",
            Method::Baseline => "baseline    ",
        };
        println!(
            "  start {} {tag}  25%: {:>10}  50%: {:>10}  100%: {:>10}  ({} evaluations)",
            run.start_index + 1,
            at(0.25),
            at(0.5),
            at(1.0),
            run.trace.evaluations()
        );
    }
    Ok(())
}
