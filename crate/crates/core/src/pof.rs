//! The partitioned optimization framework.
//!
//! A problem `min φ(y) s.t. y ∈ Ω` over a large space `Y` is split into fibers
//! `Y(x)` indexed by a low-dimensional `x`. The oracle `γ(x)` returns a global
//! minimizer of `φ` on `Y(x) ∩ Ω`, and the index function `χ` maps each `y` to
//! the index of the fiber that contains it. The reformulated problem minimizes
//! `Φ(x) = φ(γ(x))` (or `+inf` when the fiber is infeasible) over the index
//! space only.

use crate::error::{Error, Result};
use crate::ext_real::ExtendedReal;

/// Outcome of an oracle call.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleResult {
    /// A minimizer of the fiber subproblem and its (finite) objective value.
    Feasible { y: Vec<f64>, value: ExtendedReal },
    /// The fiber has no point of `Ω` with finite objective.
    Infeasible,
}

impl OracleResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OracleResult::Feasible { .. })
    }
}

/// Per-coordinate closed bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxBounds {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl BoxBounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Self {
        assert_eq!(lower.len(), upper.len());
        debug_assert!(lower.iter().zip(&upper).all(|(l, u)| l <= u));
        BoxBounds { lower, upper }
    }

    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Self {
        BoxBounds::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, v: &[f64]) -> bool {
        v.len() == self.dim()
            && v.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&x, (&l, &u))| l <= x && x <= u)
    }
}

/// Known solution of a catalog problem.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownOptimum {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub value: f64,
    /// `false` for generalized solutions, where `φ(y*)` itself is `+inf`.
    pub attained: bool,
}

/// A problem cast in the partitioned framework.
///
/// Implementations must be pure: every method is a function of its inputs.
pub trait PartitionedProblem: Send + Sync {
    fn name(&self) -> &str;

    /// Dimension of the full space `Y`.
    fn dim_y(&self) -> usize;

    /// Dimension of the index space `X`.
    fn dim_x(&self) -> usize;

    /// Objective `φ`. May return `±inf`; must not return NaN.
    fn phi(&self, y: &[f64]) -> f64;

    /// Membership in the feasible set `Ω`.
    fn in_omega(&self, y: &[f64]) -> bool;

    /// Index function `χ`.
    fn chi(&self, y: &[f64]) -> Vec<f64>;

    /// Oracle `γ`, possibly a numerical approximation.
    fn oracle(&self, x: &[f64]) -> Result<OracleResult>;

    /// Bounds used by full-space solvers.
    fn box_y(&self) -> BoxBounds;

    /// Bounds that admissible starting indices must satisfy.
    fn index_box(&self) -> BoxBounds;

    fn known_optimum(&self) -> Option<KnownOptimum> {
        None
    }
}

/// `φ(y)` checked for NaN.
pub fn evaluate_phi<P: PartitionedProblem + ?Sized>(
    problem: &P,
    y: &[f64],
) -> Result<ExtendedReal> {
    check_len(problem.dim_y(), y)?;
    ExtendedReal::checked(problem.phi(y), "phi")
}

/// Extreme barrier of `φ` over `Ω ∩ box`; `φ` is only evaluated at feasible points.
pub fn barrier_objective<P: PartitionedProblem + ?Sized>(
    problem: &P,
    bounds: &BoxBounds,
    y: &[f64],
) -> Result<ExtendedReal> {
    check_len(problem.dim_y(), y)?;
    if bounds.contains(y) && problem.in_omega(y) {
        evaluate_phi(problem, y)
    } else {
        Ok(ExtendedReal::INFINITY)
    }
}

/// The reformulated objective `Φ(x)` together with `γ(x)` when it exists.
///
/// Oracle failures are returned as errors and never collapse to `+inf`.
pub fn reformulated_objective<P: PartitionedProblem + ?Sized>(
    problem: &P,
    x: &[f64],
) -> Result<(ExtendedReal, Option<Vec<f64>>)> {
    check_len(problem.dim_x(), x)?;
    if x.iter().any(|v| v.is_nan()) {
        return Err(Error::NaN("index"));
    }
    match problem.oracle(x)? {
        OracleResult::Feasible { y, value } => {
            if !value.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "oracle of {} returned a feasible point with value {value}",
                    problem.name()
                )));
            }
            Ok((value, Some(y)))
        }
        OracleResult::Infeasible => Ok((ExtendedReal::INFINITY, None)),
    }
}

/// `‖χ(γ(x)) − x‖∞`.
pub fn index_roundtrip<P: PartitionedProblem + ?Sized>(problem: &P, x: &[f64]) -> Result<f64> {
    check_len(problem.dim_x(), x)?;
    match problem.oracle(x)? {
        OracleResult::Feasible { y, .. } => Ok(max_abs_diff(&problem.chi(&y), x)),
        OracleResult::Infeasible => Err(Error::OracleInfeasible(x.to_vec())),
    }
}

pub(crate) fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max)
}

pub(crate) fn check_len(expected: usize, v: &[f64]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            actual: v.len(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `φ(y) = (y1 - 1)² + y2²` partitioned by `y1`, with `Ω = {y1 ≠ 3}`.
    struct Toy;

    impl PartitionedProblem for Toy {
        fn name(&self) -> &str {
            "toy"
        }
        fn dim_y(&self) -> usize {
            2
        }
        fn dim_x(&self) -> usize {
            1
        }
        fn phi(&self, y: &[f64]) -> f64 {
            if y[0] == 7.0 {
                f64::NAN
            } else {
                (y[0] - 1.0).powi(2) + y[1] * y[1]
            }
        }
        fn in_omega(&self, y: &[f64]) -> bool {
            y[0] != 3.0
        }
        fn chi(&self, y: &[f64]) -> Vec<f64> {
            vec![y[0]]
        }
        fn oracle(&self, x: &[f64]) -> Result<OracleResult> {
            if x[0] == 3.0 {
                return Ok(OracleResult::Infeasible);
            }
            let y = vec![x[0], 0.0];
            let value = evaluate_phi(self, &y)?;
            Ok(OracleResult::Feasible { y, value })
        }
        fn box_y(&self) -> BoxBounds {
            BoxBounds::uniform(2, -10.0, 10.0)
        }
        fn index_box(&self) -> BoxBounds {
            BoxBounds::uniform(1, -10.0, 10.0)
        }
    }

    #[test]
    fn reformulated_objective_follows_the_oracle() {
        let (v, y) = reformulated_objective(&Toy, &[2.0]).unwrap();
        assert_eq!(v.value(), 1.0);
        assert_eq!(y, Some(vec![2.0, 0.0]));

        let (v, y) = reformulated_objective(&Toy, &[3.0]).unwrap();
        assert!(v.is_pos_infinity());
        assert!(y.is_none());
    }

    #[test]
    fn nan_from_user_code_is_an_error() {
        assert!(matches!(
            reformulated_objective(&Toy, &[7.0]),
            Err(Error::NaN("phi"))
        ));
        assert!(matches!(
            reformulated_objective(&Toy, &[f64::NAN]),
            Err(Error::NaN(_))
        ));
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert!(matches!(
            reformulated_objective(&Toy, &[1.0, 2.0]),
            Err(Error::DimensionMismatch {
                expected: 1,
                actual: 2
            })
        ));
    }

    #[test]
    fn roundtrip_requires_feasibility() {
        assert_eq!(index_roundtrip(&Toy, &[0.5]).unwrap(), 0.0);
        assert!(matches!(
            index_roundtrip(&Toy, &[3.0]),
            Err(Error::OracleInfeasible(_))
        ));
    }

    #[test]
    fn barrier_objective_skips_phi_outside() {
        let b = Toy.box_y();
        assert!(barrier_objective(&Toy, &b, &[3.0, 0.0])
            .unwrap()
            .is_pos_infinity());
        assert!(barrier_objective(&Toy, &b, &[11.0, 0.0])
            .unwrap()
            .is_pos_infinity());
        assert_eq!(
            barrier_objective(&Toy, &b, &[1.0, 2.0]).unwrap().value(),
            4.0
        );
    }
}
