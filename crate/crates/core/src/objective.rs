//! Objectives minimized over the feasible region.
//!
//! The solver only compares objective values at candidate points, so it can
//! minimize anything that is nondecreasing in each coordinate: if `x <= y`
//! componentwise then `f(x) <= f(y)`. Every feasible point lies above some
//! minimal solution, so the best minimal solution is then a global minimizer.
//! Plugging in a function that is not monotone voids that guarantee.

use std::fmt;

use crate::error::{Error, Result};
use crate::relation::Point;

/// An objective value, kept at full precision.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ObjectiveValue(pub f64);

impl ObjectiveValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for ObjectiveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// A coordinatewise nondecreasing function on `[0,1]^n`.
pub trait Objective: Sync {
    /// Short identifier used in reports.
    fn name(&self) -> &'static str;

    /// Evaluate at `x`, which is nonempty.
    fn evaluate(&self, x: &[f64]) -> f64;
}

/// `log Σ_j exp(x_j)`, the default objective.
#[derive(Debug, Clone, Copy, Default)]
pub struct LogSumExp;

/// `max_j x_j`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxCoordinate;

/// `Σ_j x_j`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SumCoordinates;

impl Objective for LogSumExp {
    fn name(&self) -> &'static str {
        "lse"
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        lse(x)
    }
}

impl Objective for MaxCoordinate {
    fn name(&self) -> &'static str {
        "max"
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        x.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

impl Objective for SumCoordinates {
    fn name(&self) -> &'static str {
        "sum"
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        x.iter().sum()
    }
}

fn lse(x: &[f64]) -> f64 {
    let shift = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if shift == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    shift + x.iter().map(|&v| (v - shift).exp()).sum::<f64>().ln()
}

/// Log-sum-exp evaluated in max-shifted form `M + log Σ exp(x_j - M)`.
pub fn log_sum_exp(x: &Point) -> Result<ObjectiveValue> {
    if x.is_empty() {
        return Err(Error::EmptyPoint);
    }
    Ok(ObjectiveValue(lse(x.coords())))
}
