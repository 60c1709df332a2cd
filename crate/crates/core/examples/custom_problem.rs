//! Plugs a user-defined problem into the framework.
//!
//! `φ(y) = ‖y‖² + ε(y₁ + y₂ + y₃)` on `R³`, where `ε` is an expensive
//! blackbox of the sum only. Partitioning by the level sets of the sum gives
//! the closed-form fiber minimizer `γ(x) = (x/3, x/3, x/3)` and the
//! one-dimensional reformulation `Φ(x) = x²/3 + ε(x)`.

use parti_dfo::bench::{run_baseline, run_reformulated, CostModel};
use parti_dfo::error::Result;
use parti_dfo::ext_real::ExtendedReal;
use parti_dfo::pof::{BoxBounds, KnownOptimum, OracleResult, PartitionedProblem};
use parti_dfo::solver::SolverConfig;

fn blackbox(x: f64) -> f64 {
    (3.0 * (x - 1.0)).sin().powi(2) + 0.1 * (x - 1.0).abs()
}

struct SumPartitioned;

impl PartitionedProblem for SumPartitioned {
    fn name(&self) -> &str {
        "sum_partitioned"
    }
    fn dim_y(&self) -> usize {
        3
    }
    fn dim_x(&self) -> usize {
        1
    }
    fn phi(&self, y: &[f64]) -> f64 {
        y.iter().map(|v| v * v).sum::<f64>() + blackbox(y.iter().sum())
    }
    fn in_omega(&self, _y: &[f64]) -> bool {
        true
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        vec![y.iter().sum()]
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        let y = vec![x[0] / 3.0; 3];
        let value = ExtendedReal::checked(self.phi(&y), "sum_partitioned")?;
        Ok(OracleResult::Feasible { y, value })
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::uniform(3, -5.0, 5.0)
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(1, -15.0, 15.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        None
    }
}

fn main() -> Result<()> {
    let p = SumPartitioned;
    let y0 = [4.0, -2.5, 3.0];
    let config = SolverConfig::with_factors(0.5, 2.0);
    let model = CostModel::new(0.0)?;

    let re = run_reformulated(&p, &y0, &config, model, Some(500.0))?;
    let ba = run_baseline(&p, &y0, &config, model, Some(500.0))?;
    println!(
        "reformulated: Phi = {} at x = {:.9}",
        re.summary.value_best, re.summary.x_best[0]
    );
    println!(
        "  gamma(x) = {:?}",
        re.summary.recovered.as_deref().unwrap_or_default()
    );
    println!(
        "full space:   phi = {} at y = {:?}",
        ba.summary.value_best, ba.summary.x_best
    );
    Ok(())
}
