//! Consistency of `A ∘ x ≥ b` and the index sets `J(i)` that drive
//! enumeration.

use crate::relation::{Instance, Point};

/// The family `J(i) = { j : a_ij >= b_i - epsilon }` together with the rows
/// that constrain nothing (`b_i <= epsilon`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSets {
    sets: Vec<Vec<usize>>,
    vacuous: Vec<bool>,
}

impl IndexSets {
    /// `J(i)`, sorted ascending, 0-based.
    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn is_vacuous(&self, i: usize) -> bool {
        self.vacuous[i]
    }

    pub fn vacuous(&self) -> &[bool] {
        &self.vacuous
    }

    pub fn rows(&self) -> usize {
        self.sets.len()
    }

    /// Rows that take part in enumeration.
    pub fn active_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.sets.len()).filter(|&i| !self.vacuous[i])
    }

    pub fn empty_rows(&self) -> Vec<usize> {
        (0..self.sets.len())
            .filter(|&i| self.sets[i].is_empty())
            .collect()
    }

    /// `|E| = ∏ |J(i)|` over non-vacuous rows; `None` on `u128` overflow.
    pub fn selector_count(&self) -> Option<u128> {
        self.active_rows()
            .try_fold(1u128, |acc, i| acc.checked_mul(self.sets[i].len() as u128))
    }
}

/// Outcome of the consistency test.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    /// Rows with an empty `J(i)`; nonempty only when infeasible.
    pub empty_rows: Vec<usize>,
    /// The all-ones vector when feasible.
    pub maximum_solution: Option<Point>,
}

pub fn compute_index_sets(inst: &Instance) -> IndexSets {
    let mut sets = Vec::with_capacity(inst.rows());
    let mut vacuous = Vec::with_capacity(inst.rows());
    for i in 0..inst.rows() {
        let t = inst.threshold(i);
        sets.push(
            inst.row(i)
                .iter()
                .enumerate()
                .filter(|&(_, &a)| a >= t)
                .map(|(j, _)| j)
                .collect(),
        );
        vacuous.push(t <= 0.0);
    }
    IndexSets { sets, vacuous }
}

/// The system is consistent iff every `J(i)` is nonempty, in which case the
/// all-ones vector is its maximum solution.
pub fn check_feasibility(inst: &Instance) -> FeasibilityVerdict {
    verdict_from(inst, &compute_index_sets(inst))
}

pub(crate) fn verdict_from(inst: &Instance, idx: &IndexSets) -> FeasibilityVerdict {
    let empty_rows = idx.empty_rows();
    let feasible = empty_rows.is_empty();
    FeasibilityVerdict {
        feasible,
        empty_rows,
        maximum_solution: feasible.then(|| Point::ones(inst.cols())),
    }
}
