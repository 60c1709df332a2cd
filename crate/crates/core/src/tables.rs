//! The four desk-scale experiments: eight hard-coded starts per problem,
//! each solved with the cDSM and summarized by the first iterations at which
//! the error drops below three thresholds.

use std::f64::consts::{E, PI, SQRT_2};

use rayon::prelude::*;

use crate::bench::{run_seed, solve_reformulated_from, CostModel};
use crate::error::{Error, Result};
use crate::problems::{make_problem, ProblemId};
use crate::solver::{RunTrace, SolverConfig};

/// Iteration cap of the third table, whose last rows stall at a local minimum.
pub const TABLE3_MAX_ITERATIONS: usize = 201;

/// Definition of one table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub table: u8,
    pub problem: ProblemId,
    /// Row labels and starting indices.
    pub starts: Vec<(&'static str, Vec<f64>)>,
    pub thresholds: [f64; 3],
    pub max_iterations: Option<usize>,
}

impl TableSpec {
    pub fn get(table: u8) -> Option<TableSpec> {
        let one = |v: f64| vec![v];
        let (problem, starts, thresholds, max_iterations) = match table {
            1 => (
                ProblemId::Mono,
                vec![
                    ("+9.753", one(9.753)),
                    ("+pi", one(PI)),
                    ("+sqrt2", one(SQRT_2)),
                    ("+e+1", one(E + 1.0)),
                    ("-9.753", one(-9.753)),
                    ("-pi", one(-PI)),
                    ("-sqrt2", one(-SQRT_2)),
                    ("-e-1", one(-E - 1.0)),
                ],
                [5e-3, 5e-6, 5e-9],
                None,
            ),
            2 => (
                ProblemId::Radial,
                vec![
                    ("0", one(0.0)),
                    ("2^-5", one(1.0 / 32.0)),
                    ("3sqrt2", one(3.0 * SQRT_2)),
                    ("4pi", one(4.0 * PI)),
                    ("5", one(5.0)),
                    ("e", one(E)),
                    ("e^2", one(E * E)),
                    ("e^3", one(E.powi(3))),
                ],
                [5e-3, 5e-6, 5e-9],
                None,
            ),
            3 => (
                ProblemId::Nonlinear,
                vec![
                    ("-e^2", one(-E * E)),
                    ("-pi", one(-PI)),
                    ("-sqrt2", one(-SQRT_2)),
                    ("+e", one(E)),
                    ("+3sqrt2", one(3.0 * SQRT_2)),
                    ("+2e^2", one(2.0 * E * E)),
                    ("+4pi", one(4.0 * PI)),
                    ("+e^3", one(E.powi(3))),
                ],
                [5e-3, 5e-6, 5e-9],
                Some(TABLE3_MAX_ITERATIONS),
            ),
            4 => (
                ProblemId::Dim2,
                vec![
                    ("(-2,2)", vec![-2.0, 2.0]),
                    ("(-1/100,e^2)", vec![-0.01, E * E]),
                    ("(-pi/2,7/4)", vec![-PI / 2.0, 1.75]),
                    ("(-pi/4,e^1/2)", vec![-PI / 4.0, E.sqrt()]),
                    ("(1/4,1/4)", vec![0.25, 0.25]),
                    ("(3pi/2,1/sqrt8)", vec![1.5 * PI, 1.0 / 8f64.sqrt()]),
                    ("(e^2,2pi)", vec![E * E, 2.0 * PI]),
                    ("(e^2,-1/11)", vec![E * E, -1.0 / 11.0]),
                ],
                [5e-2, 5e-5, 5e-8],
                None,
            ),
            _ => return None,
        };
        Some(TableSpec {
            table,
            problem,
            starts,
            thresholds,
            max_iterations,
        })
    }

    /// Signed error reported in the table: `x`, `x − √2`, `x − 4` or `‖x‖∞`.
    pub fn error_of(&self, x: &[f64]) -> f64 {
        match self.table {
            1 => x[0],
            2 => x[0] - SQRT_2,
            3 => x[0] - 4.0,
            _ => x.iter().fold(0.0f64, |m, v| m.max(v.abs())),
        }
    }

    /// Solver settings for this table, seeded with `seed`.
    pub fn config(&self, seed: u64) -> SolverConfig {
        let (lambda, upsilon) = self.problem.default_factors();
        let mut c = SolverConfig::with_factors(lambda, upsilon);
        c.seed = seed;
        if let Some(m) = self.max_iterations {
            c.max_iterations = m;
        }
        c
    }

    /// Runs every row, concurrently; row `i` uses `run_seed(seed, i)`.
    pub fn run(&self, seed: u64) -> Result<Vec<TableRow>> {
        let problem = make_problem(self.problem);
        let model = CostModel::new(0.0)?;
        self.starts
            .par_iter()
            .enumerate()
            .map(|(i, (label, x0))| {
                let config = self.config(run_seed(seed, i));
                let trace = solve_reformulated_from(problem.as_ref(), x0, &config, model, None)?;
                Ok(self.row(label, x0, trace))
            })
            .collect()
    }

    fn row(&self, label: &'static str, x0: &[f64], trace: RunTrace) -> TableRow {
        let errors: Vec<f64> = trace.states.iter().map(|s| self.error_of(&s.x)).collect();
        let first_below = self
            .thresholds
            .map(|t| errors.iter().position(|e| e.abs() <= t));
        let last = trace.states.last().expect("at least the initial state");
        TableRow {
            label,
            start: x0.to_vec(),
            first_below,
            returned_k: last.k,
            returned_x: last.x.clone(),
            returned_error: self.error_of(&last.x),
            errors,
            trace,
        }
    }
}

/// One row of a reproduced table.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub label: &'static str,
    pub start: Vec<f64>,
    /// First iteration whose error is within each threshold.
    pub first_below: [Option<usize>; 3],
    pub returned_k: usize,
    pub returned_x: Vec<f64>,
    pub returned_error: f64,
    /// Error of every incumbent `x^0, …, x^K`.
    pub errors: Vec<f64>,
    pub trace: RunTrace,
}

/// Starting index number `i` (1-based) of the table for `problem`.
pub fn builtin_start(problem: ProblemId, i: usize) -> Result<Vec<f64>> {
    let table = match problem {
        ProblemId::Mono => 1,
        ProblemId::Radial => 2,
        ProblemId::Nonlinear => 3,
        ProblemId::Dim2 => 4,
        _ => {
            return Err(Error::InvalidConfig(format!(
                "{problem} has no hard-coded starts"
            )))
        }
    };
    let spec = TableSpec::get(table).expect("tables 1 to 4 exist");
    let n = spec.starts.len();
    i.checked_sub(1)
        .and_then(|j| spec.starts.get(j))
        .map(|(_, x)| x.clone())
        .ok_or_else(|| Error::InvalidConfig(format!("start index must be in 1..={n}, got {i}")))
}
