//! Catalog of composite greybox benchmark problems.
//!
//! Every problem has the form `φ(y) = φ̃(y, σ(f(y))) + ε(f(y))` where `f` is an
//! explicit map into a small index space and `σ`, `ε` are treated as
//! blackboxes. Partitioning by the level sets of `f` (so `χ = f`) turns each
//! fiber subproblem into the minimization of the simple part `φ̃`.
//!
//! | id                | dim Y | dim X | oracle                    |
//! |-------------------|-------|-------|---------------------------|
//! | `mono`            | 2     | 1     | closed form               |
//! | `radial`          | 2     | 1     | closed form               |
//! | `nonlinear`       | 2     | 1     | closed form               |
//! | `dim2`            | 3     | 2     | bisection on `M(x)`       |
//! | `heavy_mono`      | 101   | 1     | closed form               |
//! | `heavy_radial`    | 101   | 1     | closed form               |
//! | `heavy_nonlinear` | 100   | 1     | closed form               |
//! | `heavy_dim2`      | 100   | 10    | bisection on `g_j⁻¹`      |
//!
//! The catalog oracles report `Φ(x) = φ̃(γ(x), σ(x)) + ε(x)`, evaluating the
//! blackboxes at the index itself. A fiber whose value is `+inf` is reported
//! as infeasible.

mod desk;
mod dim2;
mod heavy;
mod heavy_dim2;

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::ext_real::ExtendedReal;
use crate::pof::{OracleResult, PartitionedProblem};

pub use desk::{
    mono_epsilon, mono_sigma, nonlinear_epsilon, nonlinear_gamma, radial_components,
    radial_epsilon, radial_sigma, Mono, Nonlinear, Radial,
};
pub use dim2::{
    dim2_epsilon, dim2_f, dim2_fiber_point, dim2_intervals, dim2_oracle, Dim2, Dim2Solution,
};
pub use heavy::{
    heavy_mono_sigma, heavy_nonlinear_block_products, heavy_nonlinear_f, heavy_radial_sigma,
    HeavyMono, HeavyNonlinear, HeavyRadial,
};
pub use heavy_dim2::{
    heavy_dim2_epsilon, heavy_dim2_f, heavy_dim2_g, heavy_dim2_g_inverse, HeavyDim2,
    HEAVY_DIM2_BISECTION,
};

/// Identifier of a catalog problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemId {
    Mono,
    Radial,
    Nonlinear,
    Dim2,
    HeavyMono,
    HeavyRadial,
    HeavyNonlinear,
    HeavyDim2,
}

impl ProblemId {
    pub const ALL: [ProblemId; 8] = [
        ProblemId::Mono,
        ProblemId::Radial,
        ProblemId::Nonlinear,
        ProblemId::Dim2,
        ProblemId::HeavyMono,
        ProblemId::HeavyRadial,
        ProblemId::HeavyNonlinear,
        ProblemId::HeavyDim2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProblemId::Mono => "mono",
            ProblemId::Radial => "radial",
            ProblemId::Nonlinear => "nonlinear",
            ProblemId::Dim2 => "dim2",
            ProblemId::HeavyMono => "heavy_mono",
            ProblemId::HeavyRadial => "heavy_radial",
            ProblemId::HeavyNonlinear => "heavy_nonlinear",
            ProblemId::HeavyDim2 => "heavy_dim2",
        }
    }

    pub fn is_heavy(self) -> bool {
        matches!(
            self,
            ProblemId::HeavyMono
                | ProblemId::HeavyRadial
                | ProblemId::HeavyNonlinear
                | ProblemId::HeavyDim2
        )
    }

    /// Default `(λ, υ)` shrink and expand factors.
    pub fn default_factors(self) -> (f64, f64) {
        match self {
            ProblemId::Mono
            | ProblemId::Radial
            | ProblemId::Nonlinear
            | ProblemId::HeavyMono
            | ProblemId::HeavyRadial => (0.5, 1.0),
            ProblemId::HeavyNonlinear => (0.5, 2.0),
            ProblemId::Dim2 | ProblemId::HeavyDim2 => (0.75, 2.0),
        }
    }

    /// Default relative oracle cost used by the benchmark harness.
    pub fn default_tau(self) -> f64 {
        match self {
            ProblemId::HeavyMono | ProblemId::HeavyRadial | ProblemId::HeavyNonlinear => 100.0,
            ProblemId::HeavyDim2 => 10.0,
            _ => 0.0,
        }
    }

    pub fn catalog_listing() -> String {
        ProblemId::ALL.map(ProblemId::as_str).join(", ")
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ProblemId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                format!(
                    "unknown problem {s:?}; available problems: {}",
                    ProblemId::catalog_listing()
                )
            })
    }
}

/// Builds the catalog problem `id`.
pub fn make_problem(id: ProblemId) -> Arc<dyn PartitionedProblem> {
    match id {
        ProblemId::Mono => Arc::new(Mono),
        ProblemId::Radial => Arc::new(Radial),
        ProblemId::Nonlinear => Arc::new(Nonlinear),
        ProblemId::Dim2 => Arc::new(Dim2::default()),
        ProblemId::HeavyMono => Arc::new(HeavyMono),
        ProblemId::HeavyRadial => Arc::new(HeavyRadial),
        ProblemId::HeavyNonlinear => Arc::new(HeavyNonlinear),
        ProblemId::HeavyDim2 => Arc::new(HeavyDim2::default()),
    }
}

/// Closed real interval, possibly empty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub empty: bool,
}

impl Interval {
    /// Intersection of closed intervals given by their bounds.
    pub fn intersection(bounds: &[(f64, f64)]) -> Interval {
        let lo = bounds.iter().map(|b| b.0).fold(f64::NEG_INFINITY, f64::max);
        let hi = bounds.iter().map(|b| b.1).fold(f64::INFINITY, f64::min);
        Interval {
            lo,
            hi,
            empty: lo > hi,
        }
    }

    pub fn contains(&self, t: f64) -> bool {
        !self.empty && self.lo <= t && t <= self.hi
    }

    /// `(lo + hi) / 2`, computed from the bounds even when empty.
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Stopping rule of a dichotomic search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectionSpec {
    /// Stop once the bracket is at most this wide.
    pub tolerance: f64,
    /// Bound on the integer scan used to bracket the root.
    pub max_bracket_scan: u64,
}

impl Default for BisectionSpec {
    fn default() -> Self {
        BisectionSpec {
            tolerance: (-30f64).exp2(),
            max_bracket_scan: 1 << 20,
        }
    }
}

/// Result of [`bisect`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    /// Number of halvings performed.
    pub steps: u32,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Dichotomic search on a predicate that is false below some threshold and
/// true above it. Keeps `pred(hi)` true and `pred(lo)` false (unless the
/// initial `lo` already satisfies it) while halving until the width is at
/// most `tolerance`.
pub fn bisect(
    mut lo: f64,
    mut hi: f64,
    tolerance: f64,
    mut pred: impl FnMut(f64) -> bool,
) -> Bracket {
    debug_assert!(lo <= hi);
    let mut steps = 0;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        steps += 1;
    }
    Bracket { lo, hi, steps }
}

/// Wraps a fiber minimizer; a `+inf` value means the fiber is infeasible.
pub(crate) fn fiber_result(y: Vec<f64>, value: f64) -> Result<OracleResult> {
    let value = ExtendedReal::checked(value, "oracle")?;
    if value.is_pos_infinity() {
        Ok(OracleResult::Infeasible)
    } else {
        Ok(OracleResult::Feasible { y, value })
    }
}

/// Maps a NaN produced by floating-point overflow inside a blackbox to `+inf`,
/// so points where the blackbox cannot be evaluated act as infeasible.
pub(crate) fn overflow_as_infinite(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// `⌊x⌋` for `x ≤ 0` and `⌈x⌉ − 1` for `x > 0`. Returns an integral value.
pub fn floorceil(x: f64) -> f64 {
    if x > 0.0 {
        x.ceil() - 1.0
    } else {
        x.floor()
    }
}

/// Residual of `theta` modulo `2π`, in `[0, 2π)`.
pub fn mod_2pi(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}
