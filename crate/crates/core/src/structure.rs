//! Minimal solutions of single rows, the candidate points `x(e)` over all
//! selectors, dominance pruning, and the resulting cell decomposition of the
//! feasible region.
//!
//! For a non-vacuous row `i` and a column `j ∈ J(i)` the row's minimal
//! solution is zero everywhere except coordinate `j`, which holds the
//! smallest value activating the row through that column (`1 + b_i - a_ij`
//! up to rounding). A selector picks one column per non-vacuous row, and the
//! candidate `x(e)` is the componentwise maximum of the picked row minima.
//! Every candidate is feasible and every minimal solution of the system is a
//! candidate, so the feasible region is the union of the boxes `[x(e), 1]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::feasibility::IndexSets;
use crate::relation::{smallest_activation, Instance, Point};

/// Default bound on `|E|` before enumeration refuses to start.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// A choice of one column `e(i) ∈ J(i)` per non-vacuous row; vacuous rows
/// hold `None`. Ordering is lexicographic over rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Selector(Vec<Option<usize>>);

impl Selector {
    pub fn new(choices: Vec<Option<usize>>) -> Self {
        Selector(choices)
    }

    pub fn choices(&self) -> &[Option<usize>] {
        &self.0
    }

    pub fn choice(&self, i: usize) -> Option<usize> {
        self.0[i]
    }
}

/// Bracket form `[j1, ..., jm]`, 1-based, vacuous rows as `-`.
impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            match c {
                Some(j) => write!(f, "{}", j + 1)?,
                None => f.write_str("-")?,
            }
        }
        f.write_str("]")
    }
}

/// A candidate minimal solution `x(e)` and the selector that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub selector: Selector,
    pub point: Point,
    /// Set by [`prune_to_minimal`].
    pub is_minimal: Option<bool>,
}

/// A closed box `[lower, upper]` of the feasible region.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub lower: Point,
    pub upper: Point,
}

/// The minimal solution of row `i` alone that activates it through column
/// `j0`.
pub fn row_minimal(inst: &Instance, i: usize, j0: usize) -> Result<Point> {
    if i >= inst.rows() || j0 >= inst.cols() {
        return Err(Error::DimensionMismatch {
            expected: inst.rows().max(inst.cols()),
            found: i.max(j0),
        });
    }
    let t = inst.threshold(i);
    if t <= 0.0 {
        return Err(Error::VacuousRow { row: i });
    }
    let a = inst.entry(i, j0);
    if a < t {
        return Err(Error::NotInIndexSet { row: i, col: j0 });
    }
    let v = smallest_activation(a, t).ok_or(Error::NotInIndexSet { row: i, col: j0 })?;
    let mut x = vec![0.0; inst.cols()];
    x[j0] = v;
    Ok(Point::from_unchecked(x))
}

/// The finite selector set `E` of a feasible system, with each row minimum
/// precomputed.
///
/// Selectors are numbered in lexicographic order: the last non-vacuous row
/// varies fastest.
#[derive(Debug, Clone)]
pub struct SelectorSpace {
    rows: usize,
    cols: usize,
    // (row, [(column, activation value)]) for every non-vacuous row
    active: Vec<(usize, Vec<(usize, f64)>)>,
    len: u64,
}

impl SelectorSpace {
    /// Fails when the system is infeasible or when `|E|` exceeds `cap`.
    pub fn new(inst: &Instance, idx: &IndexSets, cap: u64) -> Result<Self> {
        let empty = idx.empty_rows();
        if !empty.is_empty() {
            return Err(Error::Infeasible { empty_rows: empty });
        }
        let size = idx.selector_count();
        let len = match size {
            Some(s) if s <= u128::from(cap) => s as u64,
            _ => return Err(Error::CapExceeded { size, cap }),
        };
        let active = idx
            .active_rows()
            .map(|i| {
                let t = inst.threshold(i);
                let choices = idx
                    .set(i)
                    .iter()
                    .map(|&j| {
                        let v = smallest_activation(inst.entry(i, j), t)
                            .expect("column in J(i) activates its row");
                        (j, v)
                    })
                    .collect();
                (i, choices)
            })
            .collect();
        Ok(SelectorSpace {
            rows: inst.rows(),
            cols: inst.cols(),
            active,
            len,
        })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Candidate number `index` in lexicographic order.
    pub fn candidate_at(&self, index: u64) -> Candidate {
        assert!(index < self.len, "selector index out of range");
        let mut digits = vec![0usize; self.active.len()];
        let mut rest = index;
        for (k, (_, choices)) in self.active.iter().enumerate().rev() {
            let radix = choices.len() as u64;
            digits[k] = (rest % radix) as usize;
            rest /= radix;
        }
        self.build(&digits)
    }

    fn build(&self, digits: &[usize]) -> Candidate {
        let mut choices = vec![None; self.rows];
        let mut x = vec![0.0f64; self.cols];
        for ((row, options), &d) in self.active.iter().zip(digits) {
            let (j, v) = options[d];
            choices[*row] = Some(j);
            if v > x[j] {
                x[j] = v;
            }
        }
        Candidate {
            selector: Selector(choices),
            point: Point::from_unchecked(x),
            is_minimal: None,
        }
    }

    pub fn iter(&self) -> Candidates<'_> {
        Candidates {
            space: self,
            digits: vec![0; self.active.len()],
            remaining: self.len,
        }
    }
}

/// Lazy lexicographic walk over `E`.
#[derive(Debug, Clone)]
pub struct Candidates<'a> {
    space: &'a SelectorSpace,
    digits: Vec<usize>,
    remaining: u64,
}

impl Iterator for Candidates<'_> {
    type Item = Candidate;

    fn next(&mut self) -> Option<Candidate> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.space.build(&self.digits);
        self.remaining -= 1;
        for k in (0..self.digits.len()).rev() {
            self.digits[k] += 1;
            if self.digits[k] < self.space.active[k].1.len() {
                break;
            }
            self.digits[k] = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

/// `x(e)`: the componentwise maximum of the row minima picked by `e`.
pub fn candidate_from_selector(
    inst: &Instance,
    idx: &IndexSets,
    e: &Selector,
) -> Result<Candidate> {
    if e.0.len() != inst.rows() {
        return Err(Error::InvalidSelector(format!(
            "expected {} entries, got {}",
            inst.rows(),
            e.0.len()
        )));
    }
    let mut x = vec![0.0f64; inst.cols()];
    for (i, choice) in e.0.iter().enumerate() {
        match (idx.is_vacuous(i), choice) {
            (true, None) => {}
            (true, Some(_)) => {
                return Err(Error::InvalidSelector(format!(
                    "row {} is vacuous and takes no column",
                    i + 1
                )))
            }
            (false, None) => {
                return Err(Error::InvalidSelector(format!(
                    "row {} has no column",
                    i + 1
                )))
            }
            (false, Some(j)) => {
                if !idx.set(i).contains(j) {
                    return Err(Error::NotInIndexSet { row: i, col: *j });
                }
                let v = row_minimal(inst, i, *j)?[*j];
                if v > x[*j] {
                    x[*j] = v;
                }
            }
        }
    }
    Ok(Candidate {
        selector: e.clone(),
        point: Point::from_unchecked(x),
        is_minimal: None,
    })
}

/// Lazily enumerate `x(e)` for every `e ∈ E` in lexicographic selector
/// order. Refuses up front when `|E|` exceeds `cap` (default
/// [`DEFAULT_CAP`]).
pub fn enumerate_candidates(
    inst: &Instance,
    idx: &IndexSets,
    cap: Option<u64>,
) -> Result<SelectorSpace> {
    SelectorSpace::new(inst, idx, cap.unwrap_or(DEFAULT_CAP))
}

/// Drop every candidate strictly dominated by another and collapse exact
/// duplicates onto the lexicographically smallest selector.
///
/// Survivors come back in selector order with `is_minimal = Some(true)`.
pub fn prune_to_minimal(mut candidates: Vec<Candidate>) -> Vec<Candidate> {
    // Ascending coordinate sum: a dominator never has a larger sum, so most
    // dominated points are rejected against an already kept one.
    let sums: Vec<f64> = candidates
        .iter()
        .map(|c| c.point.coords().iter().sum())
        .collect();
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&p, &q| {
        sums[p]
            .total_cmp(&sums[q])
            .then_with(|| cmp_coords(&candidates[p].point, &candidates[q].point))
            .then_with(|| candidates[p].selector.cmp(&candidates[q].selector))
    });

    let mut kept: Vec<usize> = Vec::new();
    for &c in &order {
        let x = &candidates[c].point;
        if kept.iter().any(|&k| candidates[k].point.le(x)) {
            continue;
        }
        // equal sums can hide a strict dominator that arrives later
        kept.retain(|&k| !x.strictly_below(&candidates[k].point));
        kept.push(c);
    }

    kept.sort_by(|&p, &q| candidates[p].selector.cmp(&candidates[q].selector));
    let mut slots: Vec<Option<Candidate>> = candidates.drain(..).map(Some).collect();
    kept.into_iter()
        .map(|k| {
            let mut c = slots[k].take().expect("each survivor taken once");
            c.is_minimal = Some(true);
            c
        })
        .collect()
}

fn cmp_coords(a: &Point, b: &Point) -> Ordering {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// One box `[x, 1]` per minimal candidate.
pub fn cell_decomposition(minimal: &[Candidate]) -> Vec<Cell> {
    minimal
        .iter()
        .map(|c| Cell {
            lower: c.point.clone(),
            upper: Point::ones(c.point.len()),
        })
        .collect()
}
