//! Seeded random instances for tests, benchmarks and the `generate` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::relation::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every row keeps at least one column with `a_ij >= b_i`.
    Feasible,
    /// At least one row has `b_i` strictly above its largest entry.
    Infeasible,
}

/// Draw an `m × n` instance with `A` uniform on `[0,1]`.
///
/// Rows get `b_i = u_i · max_j a_ij` with `u_i = U^density`, `U` uniform on
/// `[0,1]`: `density = 1` makes `u_i` uniform, larger values push `b_i` down
/// and enlarge `J(i)`, smaller values shrink it. In infeasible mode one row,
/// chosen at random, instead gets a threshold strictly between its largest
/// entry and 1. The same arguments always give the same instance.
pub fn generate(m: usize, n: usize, mode: Mode, seed: u64, density: f64) -> Result<Instance> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(format!(
            "dimensions must be at least 1, got {m} x {n}"
        )));
    }
    if !density.is_finite() || density <= 0.0 {
        return Err(Error::InvalidParameters(format!(
            "density must be finite and positive, got {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a: Vec<Vec<f64>> = (0..m)
        .map(|_| (0..n).map(|_| rng.random::<f64>()).collect())
        .collect();
    let mut b: Vec<f64> = a
        .iter()
        .map(|row| rng.random::<f64>().powf(density) * row_max(row))
        .collect();

    if mode == Mode::Infeasible {
        let r = rng.random_range(0..m);
        // a row whose maximum is exactly 1 cannot be made infeasible
        while row_max(&a[r]) >= 1.0 {
            a[r] = (0..n).map(|_| rng.random::<f64>()).collect();
        }
        let top = row_max(&a[r]);
        let mut t = top + (1.0 - top) * rng.random_range(0.5..=1.0);
        if t <= top {
            t = top.next_up();
        }
        b[r] = t.min(1.0);
    }
    Instance::new(a, b)
}

fn row_max(row: &[f64]) -> f64 {
    row.iter().copied().fold(0.0, f64::max)
}
