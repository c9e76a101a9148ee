//! Exact minimization of the log-sum-exp function over systems of
//! max-Lukasiewicz fuzzy relational inequalities `A ∘ x ≥ b`, `x ∈ [0,1]^n`.
//!
//! The feasible region is non-convex but has a finite description: it is
//! nonempty iff every row has a column with `a_ij >= b_i`, its maximum is the
//! all-ones vector, and it is the union of boxes `[x(e), 1]` over a finite
//! family of candidate points. Since the objective is increasing, its minimum
//! is attained at one of the minimal candidates.
//!
//! ```
//! use lukfri::{solve, Instance, LogSumExp, SolveOptions};
//!
//! let inst = Instance::new(vec![vec![0.9, 0.8], vec![0.7, 0.95]], vec![0.6, 0.5]).unwrap();
//! let report = solve(&inst, &LogSumExp, &SolveOptions::default()).unwrap();
//! assert!(report.verdict.feasible);
//! assert_eq!(report.minimal_solutions.len(), 3);
//! ```

pub mod error;
pub mod feasibility;
pub mod generate;
pub mod objective;
pub mod oracle;
pub mod relation;
pub mod solver;
pub mod structure;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use feasibility::{check_feasibility, compute_index_sets, FeasibilityVerdict, IndexSets};
pub use objective::{
    log_sum_exp, LogSumExp, MaxCoordinate, Objective, ObjectiveValue, SumCoordinates,
};
pub use relation::{compose, compose_row, is_member, luk_tnorm, Instance, Point};
pub use solver::{solve, solve_unpruned, SolveOptions, SolveReport, StageTimings};
pub use structure::{
    candidate_from_selector, cell_decomposition, enumerate_candidates, prune_to_minimal,
    row_minimal, Candidate, Cell, Selector, SelectorSpace, DEFAULT_CAP,
};
