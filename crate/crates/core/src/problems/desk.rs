//! Two-variable problems with a one-dimensional index.

use std::f64::consts::{PI, SQRT_2, TAU};

use super::{fiber_result, floorceil, mod_2pi};
use crate::error::{Error, Result};
use crate::pof::{BoxBounds, KnownOptimum, OracleResult, PartitionedProblem};

pub fn mono_sigma(x: f64) -> f64 {
    2.0 * floorceil(x)
}

/// `|x| (1 + sin(2π/x)²)^½ + |⌊x⌉|`, and `0` at the origin.
pub fn mono_epsilon(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let s = (TAU / x).sin();
    x.abs() * (1.0 + s * s).sqrt() + floorceil(x).abs()
}

/// `φ(y) = (y₂ − σ(y₁))² + ε(y₁)` on `R²`, partitioned by `y₁`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Mono;

impl Mono {
    fn fiber_value(y: &[f64], x: f64) -> f64 {
        let r = y[1] - mono_sigma(x);
        r * r + mono_epsilon(x)
    }
}

impl PartitionedProblem for Mono {
    fn name(&self) -> &str {
        "mono"
    }
    fn dim_y(&self) -> usize {
        2
    }
    fn dim_x(&self) -> usize {
        1
    }
    fn phi(&self, y: &[f64]) -> f64 {
        Self::fiber_value(y, y[0])
    }
    fn in_omega(&self, _y: &[f64]) -> bool {
        true
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        vec![y[0]]
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        let y = vec![x[0], mono_sigma(x[0])];
        let v = Self::fiber_value(&y, x[0]);
        fiber_result(y, v)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::new(vec![-30.0, -60.0], vec![30.0, 60.0])
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(1, -30.0, 30.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![0.0],
            y: vec![0.0, 0.0],
            value: 0.0,
            attained: true,
        })
    }
}

/// `π − 2π log₂(x)` for `x > 0`, `0` at the origin.
pub fn radial_sigma(x: f64) -> f64 {
    if x > 0.0 {
        PI - TAU * x.log2()
    } else {
        0.0
    }
}

pub fn radial_epsilon(x: f64) -> f64 {
    let s = (10.0 * PI * (x - SQRT_2)).sin();
    (x * x - 2.0).abs().sqrt() + s * s / 10.0
}

/// `(σ(x), ε(x))` of the radial problem; `x` must be nonnegative.
pub fn radial_components(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!(
            "radius must be nonnegative, got {x}"
        )));
    }
    Ok((radial_sigma(x), radial_epsilon(x)))
}

/// Polar coordinates `(r, θ) ∈ R₊ × [0, 2π)`,
/// `φ(r, θ) = √r sin((θ − σ(r))/2)² + ε(r)`, partitioned by `r`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Radial;

impl Radial {
    fn fiber_value(y: &[f64], x: f64) -> f64 {
        let s = ((y[1] - radial_sigma(x)) / 2.0).sin();
        y[0].sqrt() * s * s + radial_epsilon(x)
    }
}

impl PartitionedProblem for Radial {
    fn name(&self) -> &str {
        "radial"
    }
    fn dim_y(&self) -> usize {
        2
    }
    fn dim_x(&self) -> usize {
        1
    }
    fn phi(&self, y: &[f64]) -> f64 {
        if y[0] < 0.0 {
            return f64::INFINITY;
        }
        Self::fiber_value(y, y[0])
    }
    fn in_omega(&self, y: &[f64]) -> bool {
        y[0] >= 0.0 && (0.0..TAU).contains(&y[1])
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        vec![y[0]]
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        if x[0] < 0.0 {
            return Ok(OracleResult::Infeasible);
        }
        let y = vec![x[0], mod_2pi(radial_sigma(x[0]))];
        let v = Self::fiber_value(&y, x[0]);
        fiber_result(y, v)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::new(vec![0.0, 0.0], vec![30.0, TAU])
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(1, 0.0, 30.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![SQRT_2],
            y: vec![SQRT_2, 0.0],
            value: 0.0,
            attained: true,
        })
    }
}

/// `exp(1/(x−4)) + √|x−4| / 5`, and `+inf` at 4.
pub fn nonlinear_epsilon(x: f64) -> f64 {
    if x == 4.0 {
        return f64::INFINITY;
    }
    (1.0 / (x - 4.0)).exp() + (x - 4.0).abs().sqrt() / 5.0
}

/// Minimizer of `ln(1 + (y₁²/(y₂²+1) − 1)²)` on `{y₁ y₂ = x, y₁ ≥ 0}`.
pub fn nonlinear_gamma(x: f64) -> [f64; 2] {
    let s = 1.0 + (1.0 + 4.0 * x * x).sqrt();
    [(s / 2.0).sqrt(), x * (2.0 / s).sqrt()]
}

/// `φ(y) = ln(1 + (y₁²/(y₂²+1) − 1)²) + ε(y₁y₂)` on `Ω = R₊ × R`,
/// partitioned by `y₁y₂`. No global minimizer; `γ(4)` is a generalized one.
#[derive(Debug, Clone, Copy, Default)]
pub struct Nonlinear;

impl Nonlinear {
    fn fiber_value(y: &[f64], x: f64) -> f64 {
        let t = y[0] * y[0] / (y[1] * y[1] + 1.0) - 1.0;
        (1.0 + t * t).ln() + nonlinear_epsilon(x)
    }
}

impl PartitionedProblem for Nonlinear {
    fn name(&self) -> &str {
        "nonlinear"
    }
    fn dim_y(&self) -> usize {
        2
    }
    fn dim_x(&self) -> usize {
        1
    }
    fn phi(&self, y: &[f64]) -> f64 {
        Self::fiber_value(y, y[0] * y[1])
    }
    fn in_omega(&self, y: &[f64]) -> bool {
        y[0] >= 0.0
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        vec![y[0] * y[1]]
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        let y = nonlinear_gamma(x[0]).to_vec();
        let v = Self::fiber_value(&y, x[0]);
        fiber_result(y, v)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::new(vec![0.0, -20.0], vec![20.0, 20.0])
    }
    fn index_box(&self) -> BoxBounds {
        // χ-image of the full-space box
        BoxBounds::uniform(1, -400.0, 400.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![4.0],
            y: nonlinear_gamma(4.0).to_vec(),
            value: 0.0,
            attained: false,
        })
    }
}
