//! Large-dimensional variants with a one-dimensional index.

use std::f64::consts::{PI, TAU};

use super::desk::{mono_epsilon, nonlinear_epsilon, radial_epsilon};
use super::{fiber_result, floorceil, mod_2pi};
use crate::error::Result;
use crate::pof::{BoxBounds, KnownOptimum, OracleResult, PartitionedProblem};

const HEAVY_DIM: usize = 101;
const BLOCKS: usize = 20;
const BLOCK_LEN: usize = 5;

/// The 101-component blackbox: `x`, then four blocks of 25 components
/// (scaled `⌊x/i⌉`, sines, `x − 10/i`, constants `i/10`).
pub fn heavy_mono_sigma(x: f64) -> Vec<f64> {
    let mut s = Vec::with_capacity(HEAVY_DIM);
    s.push(x);
    for i in 1..=100 {
        let fi = i as f64;
        s.push(match i {
            1..=25 => 2.0 * (1.0 + (fi - 1.0) / 5.0) * floorceil(x / fi),
            26..=50 => 25.0 * ((fi - 25.0) / 5.0 * PI * x).sin(),
            51..=75 => x - 10.0 / fi,
            _ => fi / 10.0,
        });
    }
    s
}

/// `φ(y) = ‖y − σ(y₀)‖² + ε(y₀)` on `R¹⁰¹`, partitioned by `y₀`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HeavyMono;

impl HeavyMono {
    fn fiber_value(y: &[f64], x: f64) -> f64 {
        let s = heavy_mono_sigma(x);
        let d: f64 = y.iter().zip(&s).map(|(a, b)| (a - b) * (a - b)).sum();
        d + mono_epsilon(x)
    }
}

impl PartitionedProblem for HeavyMono {
    fn name(&self) -> &str {
        "heavy_mono"
    }
    fn dim_y(&self) -> usize {
        HEAVY_DIM
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
        let y = heavy_mono_sigma(x[0]);
        let v = Self::fiber_value(&y, x[0]);
        fiber_result(y, v)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::uniform(HEAVY_DIM, -30.0, 30.0)
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(1, -30.0, 30.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![0.0],
            y: heavy_mono_sigma(0.0),
            value: 0.0,
            attained: true,
        })
    }
}

/// `(2π log_{i+1}(x))` for `i = 1..100` when `x > 0`, zero otherwise.
pub fn heavy_radial_sigma(x: f64) -> Vec<f64> {
    if x > 0.0 {
        let l = x.ln();
        (1..=100).map(|i| TAU * l / ((i + 1) as f64).ln()).collect()
    } else {
        vec![0.0; 100]
    }
}

/// Polar-like coordinates `(r, θ₁, …, θ₁₀₀)`,
/// `φ = (√r/100) Σ sin((θᵢ − σᵢ(r))/2)² + ε(r)`, partitioned by `r`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HeavyRadial;

impl HeavyRadial {
    fn fiber_value(y: &[f64], x: f64) -> f64 {
        let s = heavy_radial_sigma(x);
        let sum: f64 = y[1..]
            .iter()
            .zip(&s)
            .map(|(t, si)| ((t - si) / 2.0).sin().powi(2))
            .sum();
        y[0].sqrt() / 100.0 * sum + radial_epsilon(x)
    }
}

impl PartitionedProblem for HeavyRadial {
    fn name(&self) -> &str {
        "heavy_radial"
    }
    fn dim_y(&self) -> usize {
        HEAVY_DIM
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
        y[0] >= 0.0 && y[1..].iter().all(|t| (0.0..TAU).contains(t))
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        vec![y[0]]
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        if x[0] < 0.0 {
            return Ok(OracleResult::Infeasible);
        }
        let mut y = Vec::with_capacity(HEAVY_DIM);
        y.push(x[0]);
        y.extend(heavy_radial_sigma(x[0]).into_iter().map(mod_2pi));
        let v = Self::fiber_value(&y, x[0]);
        fiber_result(y, v)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::uniform(HEAVY_DIM, 0.0, TAU)
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(1, 0.0, 30.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        let x = std::f64::consts::SQRT_2;
        let mut y = vec![x];
        y.extend(heavy_radial_sigma(x).into_iter().map(mod_2pi));
        Some(KnownOptimum {
            x: vec![x],
            y,
            value: 0.0,
            attained: true,
        })
    }
}

/// Products of the twenty consecutive blocks of five coordinates.
pub fn heavy_nonlinear_block_products(y: &[f64]) -> [f64; BLOCKS] {
    let mut p = [1.0; BLOCKS];
    for (l, chunk) in y.chunks_exact(BLOCK_LEN).enumerate() {
        p[l] = chunk.iter().product();
    }
    p
}

/// `(1/5) Σ πₗ(y)`.
pub fn heavy_nonlinear_f(y: &[f64]) -> f64 {
    heavy_nonlinear_block_products(y).iter().sum::<f64>() / 5.0
}

/// `φ(y) = Σ_{ℓ,p} ln(1 + (πₗ/πₚ − 1)²) + ε(f(y))` on
/// `Ω = {0 < y₁ ≤ y₂ ≤ … ≤ y₁₀₀}`, partitioned by `f`.
/// No global minimizer; `𝟙` is a generalized one.
#[derive(Debug, Clone, Copy, Default)]
pub struct HeavyNonlinear;

impl HeavyNonlinear {
    fn fiber_value(y: &[f64], x: f64) -> f64 {
        let p = heavy_nonlinear_block_products(y);
        if p.iter().any(|v| *v == 0.0 || !v.is_finite()) {
            return f64::INFINITY;
        }
        let mut sum = 0.0;
        for a in &p {
            for b in &p {
                let r = a / b - 1.0;
                sum += (1.0 + r * r).ln();
            }
        }
        sum + nonlinear_epsilon(x)
    }

    fn alpha(x: f64) -> f64 {
        (x / 4.0).powf(0.2)
    }
}

impl PartitionedProblem for HeavyNonlinear {
    fn name(&self) -> &str {
        "heavy_nonlinear"
    }
    fn dim_y(&self) -> usize {
        100
    }
    fn dim_x(&self) -> usize {
        1
    }
    fn phi(&self, y: &[f64]) -> f64 {
        Self::fiber_value(y, heavy_nonlinear_f(y))
    }
    fn in_omega(&self, y: &[f64]) -> bool {
        y[0] > 0.0 && y.windows(2).all(|w| w[1] >= w[0])
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        vec![heavy_nonlinear_f(y)]
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        if x[0].is_nan() || x[0] <= 0.0 {
            return Ok(OracleResult::Infeasible);
        }
        let y = vec![Self::alpha(x[0]); 100];
        let v = Self::fiber_value(&y, x[0]);
        fiber_result(y, v)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::uniform(100, 1e-6, 3.0)
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(1, 0.0, 130.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![4.0],
            y: vec![1.0; 100],
            value: 0.0,
            attained: false,
        })
    }
}
