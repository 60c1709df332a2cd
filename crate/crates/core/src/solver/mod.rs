//! Covering direct search method (cDSM).
//!
//! Each iteration runs, in order:
//!
//! 1. a **covering** step probing the point of the unit ball around the
//!    incumbent farthest from the history;
//! 2. an optional **search** step on user-supplied points;
//! 3. a **poll** step on a random orthogonal positive basis of length `δᵏ`;
//! 4. an **update**: move and expand `δ` by `υ` on strict improvement,
//!    stay and shrink `δ` by `λ` otherwise.
//!
//! The first step finding a strictly better point ends the iteration early.

mod basis;
mod covering;
mod trace;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext_real::ExtendedReal;

pub use basis::{haar_orthogonal, random_orthogonal_positive_basis};
pub use covering::{covering_candidate, covering_candidate_from, sample_in_ball};
pub use trace::{
    argmin_first, EvalRecord, History, IterationOutcome, IterationState, RunSummary, RunTrace,
    StepKind, StopReason,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Initial poll radius.
    pub delta0: f64,
    /// Shrink factor, in `(0, 1)`.
    pub lambda: f64,
    /// Expand factor, at least 1.
    pub upsilon: f64,
    /// Stop once the poll radius drops below this.
    pub delta_min: f64,
    pub max_iterations: usize,
    /// Candidates sampled per covering step.
    pub covering_samples: usize,
    /// Disable to get a plain direct search (poll and update only).
    pub covering: bool,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            delta0: 1.0,
            lambda: 0.5,
            upsilon: 2.0,
            delta_min: 1e-10,
            max_iterations: 100_000,
            covering_samples: 64,
            covering: true,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn with_factors(lambda: f64, upsilon: f64) -> Self {
        SolverConfig {
            lambda,
            upsilon,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_string()));
        if !(self.delta0 > 0.0 && self.delta0.is_finite()) {
            return bad("delta0 must be a positive finite number");
        }
        if !(self.lambda > 0.0 && self.lambda < 1.0) {
            return bad("lambda must lie in (0, 1)");
        }
        if !(self.upsilon >= 1.0 && self.upsilon.is_finite()) {
            return bad("upsilon must be at least 1");
        }
        if !(self.delta_min > 0.0 && self.delta_min < self.delta0) {
            return bad("delta_min must lie in (0, delta0)");
        }
        if self.max_iterations == 0 {
            return bad("max_iterations must be positive");
        }
        if self.covering_samples == 0 {
            return bad("covering_samples must be positive");
        }
        Ok(())
    }
}

/// A trial point and its objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Trial {
    pub x: Vec<f64>,
    pub value: ExtendedReal,
}

/// Update step: on improvement move to the trial point and expand the radius,
/// otherwise keep the incumbent and shrink it.
pub fn update_step(
    state: &IterationState,
    trial: &Trial,
    improved: bool,
    config: &SolverConfig,
) -> IterationState {
    debug_assert_eq!(improved, trial.value < state.value);
    if improved {
        IterationState {
            k: state.k + 1,
            x: trial.x.clone(),
            value: trial.value,
            delta: config.upsilon * state.delta,
        }
    } else {
        IterationState {
            k: state.k + 1,
            x: state.x.clone(),
            value: state.value,
            delta: config.lambda * state.delta,
        }
    }
}

/// Supplies search-step points given the current state and history.
pub type SearchHook<'a> = dyn FnMut(&IterationState, &History) -> Vec<Vec<f64>> + 'a;

/// Evaluation bookkeeping shared by all steps.
struct Evaluator<F> {
    objective: F,
    cost_per_eval: f64,
    budget: Option<f64>,
    records: Vec<EvalRecord>,
    history: History,
    best: ExtendedReal,
}

impl<F> Evaluator<F>
where
    F: FnMut(&[f64]) -> Result<ExtendedReal>,
{
    /// Evaluates `x`, or returns `None` when the budget forbids it.
    fn eval(&mut self, x: Vec<f64>, step: StepKind) -> Result<Option<ExtendedReal>> {
        let n = self.records.len() + 1;
        let cost = n as f64 * self.cost_per_eval;
        if self.budget.is_some_and(|b| cost > b) {
            return Ok(None);
        }
        let value = (self.objective)(&x)?;
        if value < self.best {
            self.best = value;
        }
        self.history.push(x.clone());
        self.records.push(EvalRecord {
            eval_index: n - 1,
            step,
            x,
            value,
            cumulative_cost: cost,
            best_so_far: self.best,
        });
        Ok(Some(value))
    }
}

/// Runs the covering direct search from `x0` with an empty search step.
pub fn solve<F>(
    objective: F,
    x0: &[f64],
    config: &SolverConfig,
    cost_per_eval: f64,
    budget: Option<f64>,
) -> Result<RunTrace>
where
    F: FnMut(&[f64]) -> Result<ExtendedReal>,
{
    solve_with_search(objective, x0, config, cost_per_eval, budget, None)
}

/// Runs the covering direct search from `x0`.
///
/// `cost_per_eval` is charged for every objective call, and no call is made
/// that would push the cumulative cost past `budget`.
pub fn solve_with_search<F>(
    objective: F,
    x0: &[f64],
    config: &SolverConfig,
    cost_per_eval: f64,
    budget: Option<f64>,
    mut search: Option<&mut SearchHook<'_>>,
) -> Result<RunTrace>
where
    F: FnMut(&[f64]) -> Result<ExtendedReal>,
{
    config.validate()?;
    if !(cost_per_eval > 0.0 && cost_per_eval.is_finite()) {
        return Err(Error::InvalidConfig(
            "cost per evaluation must be positive".into(),
        ));
    }
    if x0.is_empty() {
        return Err(Error::InvalidConfig("starting point is empty".into()));
    }
    let n = x0.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut ev = Evaluator {
        objective,
        cost_per_eval,
        budget,
        records: Vec::new(),
        history: History::new(),
        best: ExtendedReal::INFINITY,
    };

    let value0 = ev
        .eval(x0.to_vec(), StepKind::Initial)?
        .ok_or_else(|| Error::InvalidConfig("budget does not cover a single evaluation".into()))?;
    if value0.is_pos_infinity() {
        return Err(Error::InfeasibleStart);
    }

    let mut state = IterationState {
        k: 0,
        x: x0.to_vec(),
        value: value0,
        delta: config.delta0,
    };
    let mut states = vec![state.clone()];
    let mut outcomes = Vec::new();

    let stop_reason = 'outer: loop {
        if state.delta < config.delta_min {
            break StopReason::Radius;
        }
        if state.k >= config.max_iterations {
            break StopReason::Iterations;
        }

        let mut found: Option<(Trial, StepKind)> = None;

        if config.covering {
            let cand = covering_candidate(
                &state.x,
                &ev.history,
                1.0,
                &mut rng,
                config.covering_samples,
            );
            let Some(v) = ev.eval(cand.clone(), StepKind::Covering)? else {
                break StopReason::Budget;
            };
            if v < state.value {
                found = Some((Trial { x: cand, value: v }, StepKind::Covering));
            }
        }

        if found.is_none() {
            if let Some(hook) = search.as_deref_mut() {
                let points = hook(&state, &ev.history);
                if !points.is_empty() {
                    let mut values = Vec::with_capacity(points.len());
                    for p in &points {
                        let Some(v) = ev.eval(p.clone(), StepKind::Search)? else {
                            break 'outer StopReason::Budget;
                        };
                        values.push(v);
                    }
                    let i = argmin_first(&values);
                    if values[i] < state.value {
                        let t = Trial {
                            x: points[i].clone(),
                            value: values[i],
                        };
                        found = Some((t, StepKind::Search));
                    }
                }
            }
        }

        if found.is_none() {
            let dirs = random_orthogonal_positive_basis(n, state.delta, &mut rng);
            let mut points = Vec::with_capacity(dirs.len());
            let mut values = Vec::with_capacity(dirs.len());
            for d in dirs {
                let p: Vec<f64> = state.x.iter().zip(&d).map(|(a, b)| a + b).collect();
                let Some(v) = ev.eval(p.clone(), StepKind::Poll)? else {
                    break 'outer StopReason::Budget;
                };
                points.push(p);
                values.push(v);
            }
            let i = argmin_first(&values);
            if values[i] < state.value {
                let t = Trial {
                    x: points.swap_remove(i),
                    value: values[i],
                };
                found = Some((t, StepKind::Poll));
            }
        }

        let (trial, improved_by) = match found {
            Some((t, step)) => (t, Some(step)),
            None => (
                Trial {
                    x: state.x.clone(),
                    value: state.value,
                },
                None,
            ),
        };
        state = update_step(&state, &trial, improved_by.is_some(), config);
        states.push(state.clone());
        outcomes.push(IterationOutcome {
            improved_by,
            history_len: ev.history.len(),
        });
    };

    let best = ev
        .records
        .iter()
        .fold(&ev.records[0], |b, r| if r.value < b.value { r } else { b });
    let summary = RunSummary {
        x_best: best.x.clone(),
        value_best: best.value,
        iterations: state.k,
        stop_reason,
        recovered: None,
    };
    Ok(RunTrace {
        records: ev.records,
        states,
        outcomes,
        summary,
    })
}
