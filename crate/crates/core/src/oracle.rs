//! Brute-force verification on small instances.
//!
//! A minimal solution can only have coordinates that are either 0 or the
//! exact activation value of some row through that column (`1 + b_i - a_ij`
//! up to rounding): any larger coordinate could be lowered to the nearest
//! such value without breaking a row. Enumerating the product of these
//! per-column value sets therefore finds every minimal solution, whereas a
//! uniform discretization of `[0,1]^n` would miss them.
//!
//! Nothing here touches the selector machinery of [`crate::structure`]; the
//! activation values are found by bisection on the float bit pattern rather
//! than by the closed form.

use crate::error::{Error, Result};
use crate::objective::{Objective, ObjectiveValue};
use crate::relation::{luk_tnorm, Instance, Point};

/// Default bound on the number of grid points.
pub const DEFAULT_LIMIT: u64 = 1_000_000;

/// Per-column candidate coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeGrid {
    coords: Vec<Vec<f64>>,
}

impl LatticeGrid {
    pub fn build(inst: &Instance) -> Self {
        let mut coords = vec![vec![0.0, 1.0]; inst.cols()];
        for i in 0..inst.rows() {
            let t = inst.threshold(i);
            if t <= 0.0 {
                continue;
            }
            for (j, &a) in inst.row(i).iter().enumerate() {
                if let Some(v) = bisect_activation(a, t) {
                    coords[j].push(v);
                }
            }
        }
        for c in &mut coords {
            c.sort_by(f64::total_cmp);
            c.dedup();
        }
        LatticeGrid { coords }
    }

    pub fn coords(&self) -> &[Vec<f64>] {
        &self.coords
    }

    /// `∏_j |coords_j|`, `None` on overflow.
    pub fn total_points(&self) -> Option<u128> {
        self.coords
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
    }

    pub fn contains(&self, x: &Point) -> bool {
        x.len() == self.coords.len()
            && x.coords()
                .iter()
                .zip(&self.coords)
                .all(|(v, c)| c.contains(v))
    }

    fn check_limit(&self, limit: u64) -> Result<u64> {
        match self.total_points() {
            Some(s) if s <= u128::from(limit) => Ok(s as u64),
            size => Err(Error::GridTooLarge { size, limit }),
        }
    }

    /// Visit every grid point as index digits plus coordinates.
    fn for_each(&self, mut f: impl FnMut(&[usize], &[f64])) {
        let n = self.coords.len();
        let mut digits = vec![0usize; n];
        let mut x: Vec<f64> = self.coords.iter().map(|c| c[0]).collect();
        loop {
            f(&digits, &x);
            let mut k = n;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < self.coords[k].len() {
                    x[k] = self.coords[k][digits[k]];
                    break;
                }
                digits[k] = 0;
                x[k] = self.coords[k][0];
            }
        }
    }
}

/// Smallest `x` in `[0,1]` with `T(a, x) >= t`, by bisection over the
/// ordered bit patterns of non-negative floats.
fn bisect_activation(a: f64, t: f64) -> Option<f64> {
    if luk_tnorm(a, 1.0) < t {
        return None;
    }
    // invariant: T(a, from_bits(hi)) >= t, T(a, from_bits(lo)) < t or lo == 0
    let (mut lo, mut hi) = (0u64, 1.0f64.to_bits());
    if luk_tnorm(a, 0.0) >= t {
        return Some(0.0);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if luk_tnorm(a, f64::from_bits(mid)) >= t {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(f64::from_bits(hi))
}

/// Every minimal solution of the system, found by exhaustive search over the
/// lattice grid. Points come back in lexicographic coordinate order; an
/// infeasible system gives an empty list.
///
/// A feasible grid point is minimal iff lowering any single coordinate to the
/// next grid value below it leaves the feasible region (the region is closed
/// upwards, so any smaller feasible grid point would be reachable that way).
pub fn brute_force_minimal(inst: &Instance, limit: u64) -> Result<Vec<Point>> {
    let grid = LatticeGrid::build(inst);
    grid.check_limit(limit)?;
    let mut out = Vec::new();
    let mut probe = vec![0.0; inst.cols()];
    grid.for_each(|digits, x| {
        if !inst.is_member_unchecked(x) {
            return;
        }
        probe.copy_from_slice(x);
        for (j, &d) in digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            probe[j] = grid.coords[j][d - 1];
            let lowered_feasible = inst.is_member_unchecked(&probe);
            probe[j] = x[j];
            if lowered_feasible {
                return;
            }
        }
        out.push(Point::new(x.to_vec()).expect("grid coordinates lie in [0,1]"));
    });
    Ok(out)
}

/// Minimum of `objective` over all feasible grid points, with the
/// lexicographically smallest minimizer. `None` when infeasible.
///
/// For a monotone objective this is the global minimum over the whole
/// feasible region.
pub fn brute_force_optimum(
    inst: &Instance,
    objective: &dyn Objective,
    limit: u64,
) -> Result<Option<(Point, ObjectiveValue)>> {
    let grid = LatticeGrid::build(inst);
    grid.check_limit(limit)?;
    let mut best: Option<(Vec<f64>, f64)> = None;
    grid.for_each(|_, x| {
        if !inst.is_member_unchecked(x) {
            return;
        }
        let v = objective.evaluate(x);
        // grid order is lexicographic, so keeping the first strict improvement
        // keeps the smallest minimizer
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some((x.to_vec(), v));
        }
    });
    Ok(best.map(|(x, v)| {
        (
            Point::new(x).expect("grid coordinates lie in [0,1]"),
            ObjectiveValue(v),
        )
    }))
}
