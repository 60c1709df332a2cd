//! Supplies a custom search step: a quadratic fit through the three best
//! points of the history, tried before the poll.

use parti_dfo::error::Result;
use parti_dfo::ext_real::ExtendedReal;
use parti_dfo::solver::{solve, solve_with_search, History, IterationState, SolverConfig};

fn objective(x: &[f64]) -> Result<ExtendedReal> {
    ExtendedReal::checked(
        (x[0] - 2.5).powi(2) + 0.1 * (5.0 * x[0]).sin().powi(2),
        "objective",
    )
}

fn main() -> Result<()> {
    let config = SolverConfig {
        covering: false,
        ..SolverConfig::with_factors(0.5, 2.0)
    };
    let plain = solve(objective, &[-7.0], &config, 1.0, None)?;

    let mut hook = |s: &IterationState, h: &History| {
        let mut pts: Vec<(f64, f64)> = h
            .points()
            .iter()
            .map(|p| (p[0], objective(p).map_or(f64::INFINITY, |v| v.value())))
            .collect();
        pts.sort_by(|a, b| a.1.total_cmp(&b.1));
        pts.dedup_by(|a, b| a.0 == b.0);
        if pts.len() < 3 {
            return Vec::new();
        }
        let [(x0, f0), (x1, f1), (x2, f2)] = [pts[0], pts[1], pts[2]];
        let den = (x0 - x1) * (x0 - x2) * (x1 - x2);
        let a = (x2 * (f1 - f0) + x1 * (f0 - f2) + x0 * (f2 - f1)) / den;
        let b = (x2 * x2 * (f0 - f1) + x1 * x1 * (f2 - f0) + x0 * x0 * (f1 - f2)) / den;
        if a > 0.0 && (-b / (2.0 * a) - s.x[0]).abs() > 1e-12 {
            vec![vec![-b / (2.0 * a)]]
        } else {
            Vec::new()
        }
    };
    let fitted = solve_with_search(objective, &[-7.0], &config, 1.0, None, Some(&mut hook))?;

    for (name, t) in [("poll only", &plain), ("with search", &fitted)] {
        println!(
            "{name:<12} x = {:.10}  f = {}  {} evaluations",
            t.summary.x_best[0],
            t.summary.value_best,
            t.evaluations()
        );
    }
    Ok(())
}
