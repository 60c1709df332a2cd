//! Three-variable problem with a two-dimensional index and a bisection oracle.

use std::f64::consts::PI;

use super::{bisect, fiber_result, overflow_as_infinite, BisectionSpec, Interval};
use crate::error::{OracleError, Result};
use crate::pof::{BoxBounds, KnownOptimum, OracleResult, PartitionedProblem};

/// `(sin(10π(x₂−x₁³))/5 + sin(6π(x₂−e^{−x₁}+1))/7 + sin(12π‖x‖)/11)²`.
///
/// NaN when a sine argument overflows (for instance `x₁ < −709`).
pub fn dim2_epsilon(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let s = (10.0 * PI * (x2 - x1.powi(3))).sin() / 5.0
        + (6.0 * PI * (x2 - (-x1).exp() + 1.0)).sin() / 7.0
        + (12.0 * PI * x1.hypot(x2)).sin() / 11.0;
    s * s
}

/// `f(y) = (y₂ − y₁³, y₁ − y₃³)`.
pub fn dim2_f(y: &[f64]) -> [f64; 2] {
    [y[1] - y[0].powi(3), y[0] - y[2].powi(3)]
}

/// Point of the fiber `f⁻¹(x)` with first coordinate `t`.
pub fn dim2_fiber_point(x: &[f64], t: f64) -> [f64; 3] {
    [t, t.powi(3) + x[0], (t - x[1]).cbrt()]
}

/// Parameters `t` for which every coordinate of the fiber point is at most
/// `m` in absolute value.
pub fn dim2_intervals(x: &[f64], m: f64) -> Interval {
    Interval::intersection(&[
        (-m, m),
        ((-m - x[0]).cbrt(), (m - x[0]).cbrt()),
        (-m.powi(3) + x[1], m.powi(3) + x[1]),
    ])
}

/// Output of [`dim2_oracle`].
#[derive(Debug, Clone, PartialEq)]
pub struct Dim2Solution {
    /// Approximation of the smallest `M` with a nonempty interval.
    pub m_hat: f64,
    pub t_hat: f64,
    pub y_hat: [f64; 3],
}

/// Approximates the fiber minimizer of `‖y‖∞` over `f⁻¹(x)`.
///
/// Scans `M = 0, 1, 2, …` for the first integer with a nonempty interval,
/// then bisects on the unit bracket below it.
pub fn dim2_oracle(x: &[f64], spec: BisectionSpec) -> Result<Dim2Solution> {
    if !x.iter().all(|v| v.is_finite()) {
        return Err(OracleError::NonFiniteIndex(x.to_vec()).into());
    }
    let feasible = |m: f64| !dim2_intervals(x, m).empty;
    let m_int = (0..=spec.max_bracket_scan)
        .find(|&m| feasible(m as f64))
        .ok_or_else(|| OracleError::BracketScan {
            x: x.to_vec(),
            limit: spec.max_bracket_scan,
        })?;
    let m_hat = if m_int == 0 {
        0.0
    } else {
        let hi = m_int as f64;
        bisect(hi - 1.0, hi, spec.tolerance, feasible).midpoint()
    };
    let t_hat = dim2_intervals(x, m_hat).midpoint();
    Ok(Dim2Solution {
        m_hat,
        t_hat,
        y_hat: dim2_fiber_point(x, t_hat),
    })
}

/// `φ(y) = ‖y‖∞ + ε(f(y))` on `R³`, partitioned by the level sets of `f`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dim2 {
    pub spec: BisectionSpec,
}

impl PartitionedProblem for Dim2 {
    fn name(&self) -> &str {
        "dim2"
    }
    fn dim_y(&self) -> usize {
        3
    }
    fn dim_x(&self) -> usize {
        2
    }
    fn phi(&self, y: &[f64]) -> f64 {
        let norm = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        norm + overflow_as_infinite(dim2_epsilon(&dim2_f(y)))
    }
    fn in_omega(&self, _y: &[f64]) -> bool {
        true
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        dim2_f(y).to_vec()
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        let sol = dim2_oracle(x, self.spec)?;
        fiber_result(
            sol.y_hat.to_vec(),
            overflow_as_infinite(dim2_epsilon(x)) + sol.m_hat,
        )
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::uniform(3, -10.0, 10.0)
    }
    fn index_box(&self) -> BoxBounds {
        // χ-image of the full-space box
        BoxBounds::uniform(2, -1010.0, 1010.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![0.0, 0.0],
            y: vec![0.0, 0.0, 0.0],
            value: 0.0,
            attained: true,
        })
    }
}
