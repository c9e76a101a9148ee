use proptest::prelude::*;

use crate::relation::Instance;

pub(crate) fn example_one() -> Instance {
    Instance::new(
        vec![
            vec![0.8147, 0.0975, 0.1576, 0.1418, 0.6557, 0.7577, 0.7060],
            vec![0.2784, 0.9058, 0.9705, 0.4217, 0.0357, 0.7431, 0.0318],
            vec![0.1270, 0.5468, 0.9571, 0.9157, 0.8491, 0.3922, 0.2769],
            vec![0.5134, 0.3575, 0.4853, 0.7922, 0.9339, 0.6554, 0.0461],
            vec![0.6323, 0.4648, 0.8002, 0.6594, 0.6787, 0.1711, 0.0971],
        ],
        vec![0.7898, 0.8456, 0.9463, 0.7094, 0.7547],
    )
    .unwrap()
}

/// Grades mixing continuous values with a coarse lattice so ties show up.
pub(crate) fn grade() -> impl Strategy<Value = f64> {
    prop_oneof![
        3 => 0.0..=1.0f64,
        2 => (0u32..=10).prop_map(|k| f64::from(k) / 10.0),
    ]
}

/// Arbitrary instances, feasible or not, with `m <= max_m` and `n <= max_n`.
pub(crate) fn instance_strategy(max_m: usize, max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_m, 1..=max_n)
        .prop_flat_map(|(m, n)| {
            (
                prop::collection::vec(prop::collection::vec(grade(), n), m),
                prop::collection::vec(grade(), m),
            )
        })
        .prop_map(|(a, b)| Instance::new(a, b).unwrap())
}

/// Feasible instances: each `b_i` is scaled below the row maximum.
pub(crate) fn feasible_strategy(max_m: usize, max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_m, 1..=max_n)
        .prop_flat_map(|(m, n)| {
            (
                prop::collection::vec(prop::collection::vec(grade(), n), m),
                prop::collection::vec(
                    prop_oneof![4 => 0.0..=1.0f64, 1 => Just(0.0), 1 => Just(1.0)],
                    m,
                ),
            )
        })
        .prop_map(|(a, u)| {
            let b = a
                .iter()
                .zip(&u)
                .map(|(row, u)| u * row.iter().copied().fold(0.0, f64::max))
                .collect();
            Instance::new(a, b).unwrap()
        })
}

/// Rejection sampling of feasible points. Coordinates are uniform on [0,1]
/// with an atom at 1 so rows with `b_i = max_j a_ij` stay reachable.
pub(crate) fn sample_feasible<R: rand::Rng>(
    inst: &Instance,
    rng: &mut R,
    count: usize,
) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x: Vec<f64> = (0..inst.cols())
            .map(|_| {
                if rng.random_bool(0.2) {
                    1.0
                } else {
                    rng.random::<f64>()
                }
            })
            .collect();
        if inst.is_member_unchecked(&x) {
            out.push(x);
        }
    }
    out
}
