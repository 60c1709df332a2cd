//! 100-variable problem with a ten-dimensional index and a bisection oracle.

use std::f64::consts::PI;

use super::{fiber_result, overflow_as_infinite, BisectionSpec};
use crate::error::{OracleError, Result};
use crate::pof::{BoxBounds, KnownOptimum, OracleResult, PartitionedProblem};

const DIM_Y: usize = 100;
const DIM_X: usize = 10;
const MAX_DOUBLINGS: u32 = 200;

/// Default bisection for `g_j⁻¹`: narrow enough that `f(γ̂(x))` reproduces
/// `x` to about `1e-12` over the index box.
pub const HEAVY_DIM2_BISECTION: BisectionSpec = BisectionSpec {
    tolerance: 2.842170943040401e-14, // 2^-45
    max_bracket_scan: 1 << 20,
};

/// `g_j(z) = z + (1 + j/10)^z − 1`, strictly increasing in `z`.
pub fn heavy_dim2_g(j: usize, z: f64) -> f64 {
    debug_assert!((1..=DIM_X).contains(&j));
    z + (1.0 + j as f64 / 10.0).powf(z) - 1.0
}

/// Solves `g_j(z) = w` by doubling a symmetric bracket `[−B, B]` from
/// `B = 1`, then bisecting it.
pub fn heavy_dim2_g_inverse(j: usize, w: f64, spec: BisectionSpec) -> Result<f64, OracleError> {
    let g = |z| heavy_dim2_g(j, z);
    let fail = || OracleError::BracketDoubling {
        j,
        w,
        doublings: MAX_DOUBLINGS,
    };
    if !w.is_finite() {
        return Err(fail());
    }
    let mut b = 1.0f64;
    let mut doublings = 0;
    while !(g(-b) <= w && w <= g(b)) {
        if doublings == MAX_DOUBLINGS {
            return Err(fail());
        }
        b *= 2.0;
        doublings += 1;
    }
    let (mut lo, mut hi) = (-b, b);
    while hi - lo > spec.tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = g(mid);
        if v == w {
            return Ok(mid);
        }
        if v > w {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Squared sum of four sine terms in the ten index coordinates; NaN when a
/// sine argument overflows.
pub fn heavy_dim2_epsilon(z: &[f64]) -> f64 {
    let s = (5.0 * PI * (z[1] - z[0].powi(3))).sin() / 5.0
        + (6.0 * PI * (z[3] - (-z[1] - z[2]).exp() + 1.0)).sin() / 7.0
        + (7.0 * PI * (z[4] * z[4] + z[5] * z[5] + z[6] * z[6]).sqrt()).sin() / 11.0
        + (8.0 * PI * z[7] * z[8] * z[9]).sin() / 13.0;
    s * s
}

/// `f_j(y) = g_j(y_{10j}) − Σ` of the nine preceding coordinates of block `j`.
pub fn heavy_dim2_f(y: &[f64]) -> Vec<f64> {
    y.chunks_exact(10)
        .enumerate()
        .map(|(b, block)| heavy_dim2_g(b + 1, block[9]) - block[..9].iter().sum::<f64>())
        .collect()
}

/// `φ(y) = ‖y‖₁ + ε(f(y))` on `R¹⁰⁰`, partitioned by the level sets of `f`.
#[derive(Debug, Clone, Copy)]
pub struct HeavyDim2 {
    pub spec: BisectionSpec,
}

impl Default for HeavyDim2 {
    fn default() -> Self {
        HeavyDim2 {
            spec: HEAVY_DIM2_BISECTION,
        }
    }
}

impl PartitionedProblem for HeavyDim2 {
    fn name(&self) -> &str {
        "heavy_dim2"
    }
    fn dim_y(&self) -> usize {
        DIM_Y
    }
    fn dim_x(&self) -> usize {
        DIM_X
    }
    fn phi(&self, y: &[f64]) -> f64 {
        y.iter().map(|v| v.abs()).sum::<f64>()
            + overflow_as_infinite(heavy_dim2_epsilon(&heavy_dim2_f(y)))
    }
    fn in_omega(&self, _y: &[f64]) -> bool {
        true
    }
    fn chi(&self, y: &[f64]) -> Vec<f64> {
        heavy_dim2_f(y)
    }
    fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
        if !x.iter().all(|v| v.is_finite()) {
            return Err(OracleError::NonFiniteIndex(x.to_vec()).into());
        }
        let mut y = vec![0.0; DIM_Y];
        let mut norm = 0.0;
        for (j, &xj) in x.iter().enumerate() {
            let z = heavy_dim2_g_inverse(j + 1, xj, self.spec)?;
            y[10 * j + 9] = z;
            norm += z.abs();
        }
        fiber_result(y, overflow_as_infinite(heavy_dim2_epsilon(x)) + norm)
    }
    fn box_y(&self) -> BoxBounds {
        BoxBounds::uniform(DIM_Y, -5.0, 5.0)
    }
    fn index_box(&self) -> BoxBounds {
        BoxBounds::uniform(DIM_X, -100.0, 100.0)
    }
    fn known_optimum(&self) -> Option<KnownOptimum> {
        Some(KnownOptimum {
            x: vec![0.0; DIM_X],
            y: vec![0.0; DIM_Y],
            value: 0.0,
            attained: true,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_examples() {
        for j in 1..=10 {
            assert_eq!(heavy_dim2_g(j, 0.0), 0.0);
        }
        assert!((heavy_dim2_g(1, 1.0) - 1.1).abs() < 1e-15);
        assert_eq!(heavy_dim2_g(10, 1.0), 2.0);
    }

    #[test]
    fn g_inverse_examples() {
        let spec = HEAVY_DIM2_BISECTION;
        for j in 1..=10 {
            assert_eq!(heavy_dim2_g_inverse(j, 0.0, spec).unwrap(), 0.0);
        }
        assert!((heavy_dim2_g_inverse(1, 1.1, spec).unwrap() - 1.0).abs() < 1e-6);
        let z = heavy_dim2_g_inverse(5, 3.7, spec).unwrap();
        assert!((heavy_dim2_g(5, z) - 3.7).abs() < 1e-6);
        assert!(heavy_dim2_g_inverse(5, f64::INFINITY, spec).is_err());
    }

    #[test]
    fn g_inverse_with_coarse_tolerance() {
        let z = heavy_dim2_g_inverse(3, -40.0, BisectionSpec::default()).unwrap();
        assert!((heavy_dim2_g(3, z) + 40.0).abs() < 1e-6);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(heavy_dim2_epsilon(&[0.0; 10]), 0.0);
        let bound = (1.0f64 / 5.0 + 1.0 / 7.0 + 1.0 / 11.0 + 1.0 / 13.0).powi(2);
        let z: Vec<f64> = (0..10).map(|i| 0.37 * i as f64 - 1.1).collect();
        let e = heavy_dim2_epsilon(&z);
        assert!((0.0..=bound).contains(&e));
    }

    #[test]
    fn optimum_is_exact() {
        let p = HeavyDim2::default();
        assert_eq!(p.phi(&[0.0; 100]), 0.0);
        match p.oracle(&[0.0; 10]).unwrap() {
            OracleResult::Feasible { y, value } => {
                assert_eq!(value.value(), 0.0);
                assert_eq!(y, vec![0.0; 100]);
            }
            OracleResult::Infeasible => panic!(),
        }
    }

    #[test]
    fn f_reads_blocks() {
        let mut y = vec![0.0; 100];
        y[0] = 1.0;
        y[9] = 1.0;
        y[19] = 1.0;
        let fx = heavy_dim2_f(&y);
        assert!((fx[0] - 0.1).abs() < 1e-15);
        assert!((fx[1] - 1.2).abs() < 1e-15);
        assert!(fx[2..].iter().all(|v| *v == 0.0));
    }
}
