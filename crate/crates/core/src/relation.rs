//! Instances of the max-Lukasiewicz relational system `A ∘ x ≥ b` and the
//! composition that defines it.
//!
//! Grades are plain `f64` values in `[0,1]`. The t-norm is evaluated so that
//! its result is the correctly rounded value of `a + x - 1`, which makes it
//! exactly commutative, exactly monotone and gives `T(a, 1) = a`,
//! `T(1, x) = x` bit for bit. Membership is always decided by comparing that
//! rounded value against the row threshold, so every module agrees on which
//! points are feasible.

use crate::error::{Error, Field, Result};

/// The Lukasiewicz t-norm `max(a + x - 1, 0)`.
///
/// The larger argument `hi` satisfies `hi >= 1/2` whenever the result is
/// positive, so `hi - 1` is exact and the single remaining addition rounds
/// once.
#[inline]
pub fn luk_tnorm(a: f64, x: f64) -> f64 {
    let (hi, lo) = if a >= x { (a, x) } else { (x, a) };
    let v = (hi - 1.0) + lo;
    if v > 0.0 {
        v
    } else {
        0.0
    }
}

/// A point of the unit hypercube.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        for (index, &value) in coords.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::PointOutOfRange { index, value });
            }
        }
        Ok(Point(coords))
    }

    pub(crate) fn from_unchecked(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|v| (0.0..=1.0).contains(v)));
        Point(coords)
    }

    /// The all-ones vector, maximum solution of every consistent system.
    pub fn ones(n: usize) -> Self {
        Point(vec![1.0; n])
    }

    pub fn zeros(n: usize) -> Self {
        Point(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// Componentwise `self <= other`. Points of different length are never
    /// comparable.
    pub fn le(&self, other: &Point) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self <= other` and `self != other`.
    pub fn strictly_below(&self, other: &Point) -> bool {
        self.le(other) && self.0 != other.0
    }
}

impl std::ops::Index<usize> for Point {
    type Output = f64;

    fn index(&self, j: usize) -> &f64 {
        &self.0[j]
    }
}

/// A system `A ∘ x ≥ b` with `A` an `m × n` fuzzy matrix and `b` a fuzzy
/// vector, plus a comparison tolerance `epsilon` (default 0).
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    rows: usize,
    cols: usize,
    // row-major
    matrix: Vec<f64>,
    rhs: Vec<f64>,
    epsilon: f64,
}

impl Instance {
    pub fn new(a: Vec<Vec<f64>>, b: Vec<f64>) -> Result<Self> {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInstance);
        }
        if b.len() != rows {
            return Err(Error::RhsLength {
                expected: rows,
                found: b.len(),
            });
        }
        let mut matrix = Vec::with_capacity(rows * cols);
        for (i, row) in a.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, &value) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&value) {
                    return Err(Error::OutOfRange {
                        field: Field::Matrix,
                        row: i,
                        col: j,
                        value,
                    });
                }
            }
            matrix.extend(row);
        }
        for (i, &value) in b.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfRange {
                    field: Field::Rhs,
                    row: i,
                    col: 0,
                    value,
                });
            }
        }
        Ok(Instance {
            rows,
            cols,
            matrix,
            rhs: b,
            epsilon: 0.0,
        })
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon < 0.0 {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        self.epsilon = epsilon;
        Ok(self)
    }

    /// Number of constraint rows `m`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of variables `n`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.matrix[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.matrix[i * self.cols + j]
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The value row `i` of `A ∘ x` has to reach: `b_i - epsilon`.
    pub fn threshold(&self, i: usize) -> f64 {
        self.rhs[i] - self.epsilon
    }

    /// Rows as owned vectors, for serialization.
    pub fn matrix_rows(&self) -> Vec<Vec<f64>> {
        self.matrix.chunks(self.cols).map(<[f64]>::to_vec).collect()
    }

    fn check_len(&self, x: &Point) -> Result<()> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn row_satisfied(&self, i: usize, x: &[f64]) -> bool {
        let t = self.threshold(i);
        self.row(i)
            .iter()
            .zip(x)
            .any(|(&a, &xj)| luk_tnorm(a, xj) >= t)
    }

    pub(crate) fn is_member_unchecked(&self, x: &[f64]) -> bool {
        (0..self.rows).all(|i| self.row_satisfied(i, x))
    }
}

/// `a_i ∘ x = max_j T(a_ij, x_j)`.
pub fn compose_row(row: &[f64], x: &Point) -> Result<f64> {
    if row.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: row.len(),
            found: x.len(),
        });
    }
    Ok(row
        .iter()
        .zip(x.coords())
        .map(|(&a, &xj)| luk_tnorm(a, xj))
        .fold(0.0, f64::max))
}

/// `A ∘ x`, one grade per row.
pub fn compose(inst: &Instance, x: &Point) -> Result<Vec<f64>> {
    inst.check_len(x)?;
    (0..inst.rows())
        .map(|i| compose_row(inst.row(i), x))
        .collect()
}

/// Whether `x` lies in the feasible region, i.e. `(A ∘ x)_i >= b_i - epsilon`
/// for every row.
pub fn is_member(inst: &Instance, x: &Point) -> Result<bool> {
    inst.check_len(x)?;
    Ok(inst.is_member_unchecked(x.coords()))
}

/// Smallest `x` in `[0,1]` with `T(a, x) >= threshold`, or `None` when even
/// `x = 1` falls short (`a < threshold`).
///
/// Starts from `1 + threshold - a` and walks to the exact float boundary;
/// the result is never more than a few ulps away from the closed form.
pub(crate) fn smallest_activation(a: f64, threshold: f64) -> Option<f64> {
    if threshold <= 0.0 {
        return Some(0.0);
    }
    if luk_tnorm(a, 1.0) < threshold {
        return None;
    }
    let mut x = ((1.0 - a) + threshold).clamp(0.0, 1.0);
    while luk_tnorm(a, x) < threshold {
        x = x.next_up().min(1.0);
    }
    while x > 0.0 {
        let below = x.next_down().max(0.0);
        if luk_tnorm(a, below) >= threshold {
            x = below;
        } else {
            break;
        }
    }
    Some(x)
}
