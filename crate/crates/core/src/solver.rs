//! End-to-end resolution: feasibility gate, candidate enumeration, dominance
//! pruning and objective comparison.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::Result;
use crate::feasibility::{compute_index_sets, verdict_from, FeasibilityVerdict, IndexSets};
use crate::objective::{Objective, ObjectiveValue};
use crate::relation::Instance;
use crate::structure::{
    cell_decomposition, prune_to_minimal, Candidate, Cell, SelectorSpace, DEFAULT_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest `|E|` the solver will enumerate.
    pub cap: u64,
    /// Evaluate candidates on the rayon thread pool.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: DEFAULT_CAP,
            parallel: false,
        }
    }
}

/// Wall-clock time spent in each stage.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StageTimings {
    pub feasibility: Duration,
    pub enumeration: Duration,
    pub pruning: Duration,
    pub selection: Duration,
}

impl StageTimings {
    pub fn total(&self) -> Duration {
        self.feasibility + self.enumeration + self.pruning + self.selection
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub verdict: FeasibilityVerdict,
    pub index_sets: IndexSets,
    /// `|E|`; zero when infeasible.
    pub candidates_enumerated: u64,
    /// Pruned candidates in selector order; empty for [`solve_unpruned`].
    pub minimal_solutions: Vec<Candidate>,
    pub optimizer: Option<Candidate>,
    pub optimal_value: Option<ObjectiveValue>,
    pub cells: Vec<Cell>,
    /// Whether `minimal_solutions` and `cells` were computed.
    pub pruned: bool,
    pub timings: StageTimings,
}

/// Lower objective value wins, then the lexicographically smaller selector.
/// Total and associative, so the reduction order does not matter.
fn better(a: (f64, Candidate), b: (f64, Candidate)) -> (f64, Candidate) {
    match a
        .0
        .total_cmp(&b.0)
        .then_with(|| a.1.selector.cmp(&b.1.selector))
    {
        Ordering::Greater => b,
        _ => a,
    }
}

fn infeasible_report(
    verdict: FeasibilityVerdict,
    index_sets: IndexSets,
    timings: StageTimings,
    pruned: bool,
) -> SolveReport {
    SolveReport {
        verdict,
        index_sets,
        candidates_enumerated: 0,
        minimal_solutions: Vec::new(),
        optimizer: None,
        optimal_value: None,
        cells: Vec::new(),
        pruned,
        timings,
    }
}

/// Solve with the full structure: enumerate every `x(e)`, keep the minimal
/// ones, and return the best of them together with the cell decomposition.
///
/// An infeasible system is not an error; the report carries the verdict and
/// no optimizer.
pub fn solve(
    inst: &Instance,
    objective: &dyn Objective,
    options: &SolveOptions,
) -> Result<SolveReport> {
    let mut timings = StageTimings::default();
    let t = Instant::now();
    let idx = compute_index_sets(inst);
    let verdict = verdict_from(inst, &idx);
    timings.feasibility = t.elapsed();
    if !verdict.feasible {
        return Ok(infeasible_report(verdict, idx, timings, true));
    }

    let t = Instant::now();
    let space = SelectorSpace::new(inst, &idx, options.cap)?;
    let candidates: Vec<Candidate> = if options.parallel {
        (0..space.len())
            .into_par_iter()
            .map(|k| space.candidate_at(k))
            .collect()
    } else {
        space.iter().collect()
    };
    timings.enumeration = t.elapsed();

    let t = Instant::now();
    let minimal = prune_to_minimal(candidates);
    timings.pruning = t.elapsed();

    let t = Instant::now();
    let best = minimal
        .iter()
        .map(|c| (objective.evaluate(c.point.coords()), c.clone()))
        .reduce(better)
        .expect("a feasible system has at least one minimal solution");
    let cells = cell_decomposition(&minimal);
    timings.selection = t.elapsed();

    Ok(SolveReport {
        verdict,
        index_sets: idx,
        candidates_enumerated: space.len(),
        minimal_solutions: minimal,
        optimizer: Some(best.1),
        optimal_value: Some(ObjectiveValue(best.0)),
        cells,
        pruned: true,
        timings,
    })
}

/// Solve by a single streaming minimum over all candidates.
///
/// Every `x(e)` is feasible and the minimal solutions are among them, so the
/// optimal value equals that of [`solve`]; the quadratic pruning pass is
/// skipped and `minimal_solutions` is left empty.
pub fn solve_unpruned(
    inst: &Instance,
    objective: &dyn Objective,
    options: &SolveOptions,
) -> Result<SolveReport> {
    let mut timings = StageTimings::default();
    let t = Instant::now();
    let idx = compute_index_sets(inst);
    let verdict = verdict_from(inst, &idx);
    timings.feasibility = t.elapsed();
    if !verdict.feasible {
        return Ok(infeasible_report(verdict, idx, timings, false));
    }

    let t = Instant::now();
    let space = SelectorSpace::new(inst, &idx, options.cap)?;
    let score = |c: Candidate| (objective.evaluate(c.point.coords()), c);
    let best = if options.parallel {
        (0..space.len())
            .into_par_iter()
            .map(|k| score(space.candidate_at(k)))
            .reduce_with(better)
    } else {
        space.iter().map(score).reduce(better)
    }
    .expect("a feasible system has at least one candidate");
    timings.enumeration = t.elapsed();

    Ok(SolveReport {
        verdict,
        index_sets: idx,
        candidates_enumerated: space.len(),
        minimal_solutions: Vec::new(),
        optimizer: Some(best.1),
        optimal_value: Some(ObjectiveValue(best.0)),
        cells: Vec::new(),
        pruned: false,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::objective::{LogSumExp, MaxCoordinate, SumCoordinates};
    use crate::relation::{is_member, Point};
    use crate::testutil::{example_one, feasible_strategy, sample_feasible};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const X_E4: [f64; 7] = [0.9751, 0.0, 0.9892, 0.0, 0.7755, 0.0, 0.0];

    #[test]
    fn example_one_solution() {
        let inst = example_one();
        let r = solve(&inst, &LogSumExp, &SolveOptions::default()).unwrap();
        assert!(r.verdict.feasible);
        assert_eq!(r.candidates_enumerated, 4);
        assert_eq!(r.minimal_solutions.len(), 2);
        let opt = r.optimizer.as_ref().unwrap();
        assert_eq!(opt.selector.to_string(), "[1, 3, 3, 5, 3]");
        for (a, e) in opt.point.coords().iter().zip(X_E4) {
            assert!((a - e).abs() < 1e-12);
        }
        assert!((r.optimal_value.unwrap().value() - 2.4434).abs() <= 5e-4);
        assert!(r.minimal_solutions.contains(opt));
        assert_eq!(r.cells.len(), 2);

        let u = solve_unpruned(&inst, &LogSumExp, &SolveOptions::default()).unwrap();
        assert_eq!(u.optimizer.as_ref().unwrap().point, opt.point);
        assert_eq!(u.optimal_value, r.optimal_value);
        assert!(u.minimal_solutions.is_empty());
        assert_eq!(u.candidates_enumerated, 4);
    }

    #[test]
    fn max_objective_ties_break_on_selector() {
        // x(e2) and x(e4) share the largest coordinate 0.9892
        let r = solve(&example_one(), &MaxCoordinate, &SolveOptions::default()).unwrap();
        assert_eq!(r.optimizer.unwrap().selector.to_string(), "[1, 3, 3, 4, 3]");
        assert!((r.optimal_value.unwrap().value() - 0.9892).abs() < 1e-12);
    }

    #[test]
    fn infeasible_instance_has_no_optimizer() {
        let inst = Instance::new(vec![vec![0.3, 0.6]], vec![0.7]).unwrap();
        for r in [
            solve(&inst, &LogSumExp, &SolveOptions::default()).unwrap(),
            solve_unpruned(&inst, &LogSumExp, &SolveOptions::default()).unwrap(),
        ] {
            assert!(!r.verdict.feasible);
            assert_eq!(r.verdict.empty_rows, vec![0]);
            assert!(r.optimizer.is_none());
            assert!(r.optimal_value.is_none());
            assert_eq!(r.candidates_enumerated, 0);
        }
    }

    #[test]
    fn zero_rhs_optimum_is_origin() {
        let inst = Instance::new(
            vec![vec![0.4, 0.7, 0.1], vec![0.9, 0.0, 0.3]],
            vec![0.0, 0.0],
        )
        .unwrap();
        let r = solve(&inst, &LogSumExp, &SolveOptions::default()).unwrap();
        let opt = r.optimizer.unwrap();
        assert_eq!(opt.point, Point::zeros(3));
        assert_eq!(opt.selector.to_string(), "[-, -]");
        assert!((r.optimal_value.unwrap().value() - 3f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn singleton_selector_space() {
        let inst = Instance::new(vec![vec![0.9, 0.1], vec![0.2, 0.8]], vec![0.5, 0.5]).unwrap();
        let r = solve_unpruned(&inst, &SumCoordinates, &SolveOptions::default()).unwrap();
        assert_eq!(r.candidates_enumerated, 1);
        assert_eq!(r.optimizer.unwrap().selector.to_string(), "[1, 2]");
    }

    #[test]
    fn cap_is_propagated() {
        let opts = SolveOptions {
            cap: 2,
            parallel: false,
        };
        let err = solve(&example_one(), &LogSumExp, &opts).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                size: Some(4),
                cap: 2
            }
        );
        assert!(solve_unpruned(&example_one(), &LogSumExp, &opts).is_err());
    }

    fn strip_timings(mut r: SolveReport) -> SolveReport {
        r.timings = StageTimings::default();
        r
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn paths_agree(inst in feasible_strategy(5, 5)) {
            let serial = SolveOptions::default();
            let par = SolveOptions { parallel: true, ..serial };
            let a = solve(&inst, &LogSumExp, &serial).unwrap();
            let b = solve_unpruned(&inst, &LogSumExp, &serial).unwrap();
            prop_assert_eq!(a.optimal_value, b.optimal_value);
            let opt = a.optimizer.clone().unwrap();
            prop_assert!(is_member(&inst, &opt.point).unwrap());
            prop_assert!(a.minimal_solutions.contains(&opt));
            prop_assert_eq!(a.optimal_value.unwrap().value(), LogSumExp.evaluate(opt.point.coords()));
            prop_assert!(is_member(&inst, &b.optimizer.clone().unwrap().point).unwrap());

            let c = solve(&inst, &LogSumExp, &par).unwrap();
            let d = solve_unpruned(&inst, &LogSumExp, &par).unwrap();
            prop_assert_eq!(strip_timings(a), strip_timings(c));
            prop_assert_eq!(strip_timings(b), strip_timings(d));
        }

        #[test]
        fn value_bounds_sampled_feasible_points(inst in feasible_strategy(4, 4), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for objective in [&LogSumExp as &dyn Objective, &MaxCoordinate, &SumCoordinates] {
                let r = solve(&inst, objective, &SolveOptions::default()).unwrap();
                let best = r.optimal_value.unwrap().value();
                for x in sample_feasible(&inst, &mut rng, 100) {
                    prop_assert!(best <= objective.evaluate(&x));
                }
            }
        }
    }
}
