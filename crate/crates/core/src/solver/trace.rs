use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ext_real::ExtendedReal;

/// Which step of an iteration produced an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Initial,
    Covering,
    Search,
    Poll,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::Initial => "initial",
            StepKind::Covering => "covering",
            StepKind::Search => "search",
            StepKind::Poll => "poll",
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "initial" => Ok(StepKind::Initial),
            "covering" => Ok(StepKind::Covering),
            "search" => Ok(StepKind::Search),
            "poll" => Ok(StepKind::Poll),
            other => Err(format!("unknown step kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StopReason {
    /// The poll radius fell below `delta_min`.
    Radius,
    /// `max_iterations` iterations were completed.
    Iterations,
    /// The next evaluation would have exceeded the budget.
    Budget,
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StopReason::Radius => "radius",
            StopReason::Iterations => "iterations",
            StopReason::Budget => "budget",
        })
    }
}

/// Append-only set of evaluated points.
#[derive(Debug, Clone, Default)]
pub struct History {
    points: Vec<Vec<f64>>,
}

impl History {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: Vec<f64>) {
        self.points.push(x);
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Squared Euclidean distance from `x` to the closest point.
    pub fn squared_distance(&self, x: &[f64]) -> f64 {
        self.points
            .iter()
            .map(|p| p.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Incumbent data at the start of iteration `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationState {
    pub k: usize,
    pub x: Vec<f64>,
    pub value: ExtendedReal,
    pub delta: f64,
}

/// What happened during one iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationOutcome {
    /// Step that found a strictly better point, if any.
    pub improved_by: Option<StepKind>,
    /// History size at the end of the iteration.
    pub history_len: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRecord {
    pub eval_index: usize,
    pub step: StepKind,
    pub x: Vec<f64>,
    pub value: ExtendedReal,
    pub cumulative_cost: f64,
    pub best_so_far: ExtendedReal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub x_best: Vec<f64>,
    pub value_best: ExtendedReal,
    pub iterations: usize,
    pub stop_reason: StopReason,
    /// Full-space point `γ(x_best)`, filled in by reformulated runs.
    pub recovered: Option<Vec<f64>>,
}

/// Everything a solver run evaluated, in order.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    pub records: Vec<EvalRecord>,
    /// Incumbent states `x^0, …, x^K`.
    pub states: Vec<IterationState>,
    /// One entry per completed iteration.
    pub outcomes: Vec<IterationOutcome>,
    pub summary: RunSummary,
}

impl RunTrace {
    pub fn evaluations(&self) -> usize {
        self.records.len()
    }

    pub fn final_cost(&self) -> f64 {
        self.records.last().map_or(0.0, |r| r.cumulative_cost)
    }
}

/// Index of the smallest value; ties go to the smallest index.
///
/// # Panics
///
/// Panics on an empty slice.
pub fn argmin_first(values: &[ExtendedReal]) -> usize {
    assert!(!values.is_empty(), "argmin_first of an empty sequence");
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v < values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ers(v: &[f64]) -> Vec<ExtendedReal> {
        v.iter().map(|&x| ExtendedReal::new(x).unwrap()).collect()
    }

    #[test]
    fn argmin_first_examples() {
        assert_eq!(argmin_first(&ers(&[3.0, 1.0, 2.0])), 1);
        assert_eq!(argmin_first(&ers(&[f64::INFINITY, f64::INFINITY])), 0);
        assert_eq!(argmin_first(&ers(&[5.0, 5.0, 4.0, 4.0])), 2);
    }

    #[test]
    fn step_kind_parses_its_display() {
        for s in [
            StepKind::Initial,
            StepKind::Covering,
            StepKind::Search,
            StepKind::Poll,
        ] {
            assert_eq!(s.to_string().parse::<StepKind>().unwrap(), s);
        }
    }

    #[test]
    fn history_distance() {
        let mut h = History::new();
        assert_eq!(h.squared_distance(&[0.0]), f64::INFINITY);
        h.push(vec![0.0, 0.0]);
        h.push(vec![1.0, 0.0]);
        assert_eq!(h.squared_distance(&[1.0, 2.0]), 4.0);
    }
}
