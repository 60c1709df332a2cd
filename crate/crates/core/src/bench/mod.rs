//! Benchmark harness: cost accounting, multistart runs, a full-space
//! baseline and convergence profiles.
//!
//! Costs are counted in units where one evaluation of `φ` costs 1 and one
//! evaluation of the reformulated objective `Φ` costs `1 + τ`.

mod export;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ext_real::ExtendedReal;
use crate::pof::{barrier_objective, reformulated_objective, PartitionedProblem};
use crate::problems::{make_problem, ProblemId};
use crate::solver::{solve, RunTrace, SolverConfig, StopReason};

pub use export::{
    read_profile_csv, read_trace_csv, write_metadata_jsonl, write_profile_csv, write_trace_csv,
    PROFILE_HEADER, TRACE_HEADER,
};

/// Default budget, in cost units.
pub const DEFAULT_BUDGET: f64 = 5000.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostModel {
    pub tau: f64,
}

impl CostModel {
    pub fn new(tau: f64) -> Result<Self> {
        if !(tau >= 0.0 && tau.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tau must be a nonnegative number, got {tau}"
            )));
        }
        Ok(CostModel { tau })
    }

    /// Cost of one evaluation of `φ`.
    pub fn phi_cost(&self) -> f64 {
        1.0
    }

    /// Cost of one evaluation of `Φ`, which includes an oracle call.
    pub fn reformulated_cost(&self) -> f64 {
        1.0 + self.tau
    }
}

/// One step of a convergence profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint {
    pub cumulative_cost: f64,
    pub best_value: ExtendedReal,
}

/// Seed of run `index` in a plan seeded with `base`.
pub fn run_seed(base: u64, index: usize) -> u64 {
    // splitmix64 finalizer
    let mut z = base.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Full-space starting points for `problem`.
///
/// Heavy problems follow their benchmark protocols: uniform draws over the
/// full-space box, except for `heavy_nonlinear` whose first three starts are
/// `(i/100)ᵢ`, `0.5·𝟙` and `(2i/100)ᵢ`, and whose later starts draw
/// coordinate `j` in `[(j−1)/100, j/100]`. Desk problems draw uniformly in
/// their full-space box.
pub fn generate_starts<R: Rng + ?Sized>(
    problem: ProblemId,
    count: usize,
    rng: &mut R,
) -> Vec<Vec<f64>> {
    let bounds = make_problem(problem).box_y();
    (0..count)
        .map(|k| match problem {
            ProblemId::HeavyNonlinear => {
                let n = bounds.dim();
                match k {
                    0 => (1..=n).map(|i| i as f64 / 100.0).collect(),
                    1 => vec![0.5; n],
                    2 => (1..=n).map(|i| 2.0 * i as f64 / 100.0).collect(),
                    _ => (1..=n)
                        .map(|j| {
                            let lo = (j - 1) as f64 / 100.0;
                            rng.random_range(lo..=j as f64 / 100.0)
                                .max(bounds.lower[j - 1])
                        })
                        .collect(),
                }
            }
            _ => bounds
                .lower
                .iter()
                .zip(&bounds.upper)
                .map(|(&l, &u)| rng.random_range(l..=u))
                .collect(),
        })
        .collect()
}

/// Solves the reformulated problem from the index `χ(y0)`.
///
/// Each evaluation costs `model.reformulated_cost()`. The summary's
/// `recovered` field holds `γ(x_best)`.
pub fn run_reformulated(
    problem: &dyn PartitionedProblem,
    y0: &[f64],
    config: &SolverConfig,
    model: CostModel,
    budget: Option<f64>,
) -> Result<RunTrace> {
    let x0 = problem.chi(y0);
    solve_reformulated_from(problem, &x0, config, model, budget)
}

/// Solves the reformulated problem from the index `x0`.
pub fn solve_reformulated_from(
    problem: &dyn PartitionedProblem,
    x0: &[f64],
    config: &SolverConfig,
    model: CostModel,
    budget: Option<f64>,
) -> Result<RunTrace> {
    if x0.len() != problem.dim_x() {
        return Err(Error::DimensionMismatch {
            expected: problem.dim_x(),
            actual: x0.len(),
        });
    }
    if !problem.index_box().contains(x0) {
        return Err(Error::StartOutsideBox(x0.to_vec()));
    }
    let objective = |x: &[f64]| reformulated_objective(problem, x).map(|(v, _)| v);
    let mut trace = solve(objective, x0, config, model.reformulated_cost(), budget)?;
    trace.summary.recovered = reformulated_objective(problem, &trace.summary.x_best)?.1;
    Ok(trace)
}

/// Plain direct search (no covering step) on the extreme barrier of `φ` over
/// `Ω ∩ box_Y`, charging `model.phi_cost()` per evaluation.
pub fn run_baseline(
    problem: &dyn PartitionedProblem,
    y0: &[f64],
    config: &SolverConfig,
    model: CostModel,
    budget: Option<f64>,
) -> Result<RunTrace> {
    let bounds = problem.box_y();
    if y0.len() != problem.dim_y() {
        return Err(Error::DimensionMismatch {
            expected: problem.dim_y(),
            actual: y0.len(),
        });
    }
    if !bounds.contains(y0) {
        return Err(Error::StartOutsideBox(y0.to_vec()));
    }
    let config = SolverConfig {
        covering: false,
        ..config.clone()
    };
    let objective = |y: &[f64]| barrier_objective(problem, &bounds, y);
    solve(objective, y0, &config, model.phi_cost(), budget)
}

/// Best value found versus cumulative cost, one point per distinct cost.
pub fn convergence_profile(trace: &RunTrace) -> Vec<ProfilePoint> {
    let mut out: Vec<ProfilePoint> = Vec::with_capacity(trace.records.len());
    for r in &trace.records {
        let p = ProfilePoint {
            cumulative_cost: r.cumulative_cost,
            best_value: r.best_so_far,
        };
        match out.last_mut() {
            Some(last) if last.cumulative_cost == p.cumulative_cost => *last = p,
            _ => out.push(p),
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Reformulated,
    Baseline,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Reformulated => "reformulated",
            Method::Baseline => "baseline",
        }
    }
}

/// Starting points and budget of a multistart comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct MultistartPlan {
    pub problem: ProblemId,
    pub starts: Vec<Vec<f64>>,
    pub base_seed: u64,
    pub budget: f64,
    pub tau: f64,
}

/// One finished run of a plan.
#[derive(Debug, Clone)]
pub struct PlanRun {
    pub start_index: usize,
    pub method: Method,
    pub seed: u64,
    pub trace: RunTrace,
}

impl MultistartPlan {
    /// Draws `count` starts with a stream seeded by `base_seed`.
    pub fn generate(
        problem: ProblemId,
        count: usize,
        base_seed: u64,
        budget: f64,
        tau: f64,
    ) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(base_seed);
        MultistartPlan {
            problem,
            starts: generate_starts(problem, count, &mut rng),
            base_seed,
            budget,
            tau,
        }
    }

    /// Runs the reformulated solver on every start, and the baseline too
    /// when `baseline` is set. Runs execute concurrently; the result is
    /// ordered by start, reformulated first.
    ///
    /// `config.seed` is ignored: run `i` uses `run_seed(base_seed, i)` for
    /// both methods.
    pub fn run(&self, config: &SolverConfig, baseline: bool) -> Result<Vec<PlanRun>> {
        let model = CostModel::new(self.tau)?;
        let problem = make_problem(self.problem);
        let methods: &[Method] = if baseline {
            &[Method::Reformulated, Method::Baseline]
        } else {
            &[Method::Reformulated]
        };
        let jobs: Vec<(usize, Method)> = (0..self.starts.len())
            .flat_map(|i| methods.iter().map(move |&m| (i, m)))
            .collect();
        jobs.into_par_iter()
            .map(|(i, method)| {
                let seed = run_seed(self.base_seed, i);
                let config = SolverConfig {
                    seed,
                    ..config.clone()
                };
                let y0 = &self.starts[i];
                let trace = match method {
                    Method::Reformulated => {
                        run_reformulated(problem.as_ref(), y0, &config, model, Some(self.budget))
                    }
                    Method::Baseline => {
                        run_baseline(problem.as_ref(), y0, &config, model, Some(self.budget))
                    }
                }?;
                Ok(PlanRun {
                    start_index: i,
                    method,
                    seed,
                    trace,
                })
            })
            .collect()
    }
}

/// One line of the run metadata sidecar.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMetadata {
    pub problem: String,
    pub method: Method,
    pub start_index: usize,
    pub seed: u64,
    pub config: SolverConfig,
    pub tau: f64,
    pub budget: Option<f64>,
    pub evaluations: usize,
    pub final_cost: f64,
    pub iterations: usize,
    pub stop_reason: StopReason,
    pub best_value: ExtendedReal,
    pub x_best: Vec<f64>,
}

impl RunMetadata {
    pub fn new(
        problem: &str,
        method: Method,
        start_index: usize,
        config: &SolverConfig,
        tau: f64,
        budget: Option<f64>,
        trace: &RunTrace,
    ) -> Self {
        RunMetadata {
            problem: problem.to_string(),
            method,
            start_index,
            seed: config.seed,
            config: config.clone(),
            tau,
            budget,
            evaluations: trace.evaluations(),
            final_cost: trace.final_cost(),
            iterations: trace.summary.iterations,
            stop_reason: trace.summary.stop_reason,
            best_value: trace.summary.value_best,
            x_best: trace.summary.x_best.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{EvalRecord, RunSummary, StepKind};

    fn fake_trace(values: &[f64], cost: f64) -> RunTrace {
        let mut best = ExtendedReal::INFINITY;
        let records: Vec<EvalRecord> = values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let v = ExtendedReal::new(v).unwrap();
                best = best.min(v);
                EvalRecord {
                    eval_index: i,
                    step: StepKind::Poll,
                    x: vec![i as f64],
                    value: v,
                    cumulative_cost: (i + 1) as f64 * cost,
                    best_so_far: best,
                }
            })
            .collect();
        RunTrace {
            summary: RunSummary {
                x_best: vec![0.0],
                value_best: best,
                iterations: 0,
                stop_reason: StopReason::Radius,
                recovered: None,
            },
            records,
            states: Vec::new(),
            outcomes: Vec::new(),
        }
    }

    #[test]
    fn profile_is_a_prefix_minimum() {
        let p = convergence_profile(&fake_trace(&[5.0, 3.0, 4.0], 1.0));
        let best: Vec<f64> = p.iter().map(|q| q.best_value.value()).collect();
        assert_eq!(best, vec![5.0, 3.0, 3.0]);
        assert_eq!(convergence_profile(&fake_trace(&[1.0], 1.0)).len(), 1);
        let costs: Vec<f64> = convergence_profile(&fake_trace(&[1.0, 1.0, 1.0], 101.0))
            .iter()
            .map(|q| q.cumulative_cost)
            .collect();
        assert_eq!(costs, vec![101.0, 202.0, 303.0]);
    }

    #[test]
    fn cost_model_rejects_negative_tau() {
        assert!(CostModel::new(-1.0).is_err());
        assert!(CostModel::new(f64::NAN).is_err());
        assert_eq!(CostModel::new(100.0).unwrap().reformulated_cost(), 101.0);
    }

    #[test]
    fn run_seeds_differ() {
        let s: Vec<u64> = (0..6).map(|i| run_seed(7, i)).collect();
        for i in 0..6 {
            for j in 0..i {
                assert_ne!(s[i], s[j]);
            }
        }
        assert_ne!(run_seed(7, 0), run_seed(8, 0));
    }

    #[test]
    fn heavy_nonlinear_fixed_starts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = generate_starts(ProblemId::HeavyNonlinear, 6, &mut rng);
        assert_eq!(s[0][0], 0.01);
        assert_eq!(s[0][99], 1.0);
        assert_eq!(s[1], vec![0.5; 100]);
        assert_eq!(s[2][99], 2.0);
        let p = make_problem(ProblemId::HeavyNonlinear);
        for y in &s[3..] {
            for (j, v) in y.iter().enumerate() {
                assert!(*v >= j as f64 / 100.0 && *v <= (j + 1) as f64 / 100.0);
            }
            assert!(p.in_omega(y) && p.box_y().contains(y));
        }
    }

    #[test]
    fn uniform_starts_stay_in_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for id in [
            ProblemId::HeavyMono,
            ProblemId::HeavyRadial,
            ProblemId::HeavyDim2,
        ] {
            let b = make_problem(id).box_y();
            for y in generate_starts(id, 6, &mut rng) {
                assert!(b.contains(&y));
            }
        }
    }

    #[test]
    fn reformulated_start_must_lie_in_index_box() {
        let p = make_problem(ProblemId::Mono);
        let model = CostModel::new(0.0).unwrap();
        let err = run_reformulated(
            p.as_ref(),
            &[40.0, 0.0],
            &SolverConfig::default(),
            model,
            None,
        );
        assert!(matches!(err, Err(Error::StartOutsideBox(_))));
    }
}
