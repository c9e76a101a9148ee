use lukfri::generate::{generate, Mode};
use lukfri::oracle::{brute_force_minimal, brute_force_optimum, LatticeGrid, DEFAULT_LIMIT};
use lukfri::{
    compute_index_sets, enumerate_candidates, solve, solve_unpruned, Instance, LogSumExp,
    MaxCoordinate, Objective, Point, SolveOptions, SumCoordinates,
};
use proptest::prelude::*;

fn sorted_points(mut pts: Vec<Point>) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = pts.drain(..).map(Point::into_inner).collect();
    out.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

fn check_agreement(inst: &Instance) {
    let report = solve(inst, &LogSumExp, &SolveOptions::default()).unwrap();
    let solver_min = sorted_points(
        report
            .minimal_solutions
            .iter()
            .map(|c| c.point.clone())
            .collect(),
    );
    let oracle_min = sorted_points(brute_force_minimal(inst, DEFAULT_LIMIT).unwrap());
    assert_eq!(solver_min, oracle_min, "minimal sets differ for {inst:?}");

    for objective in [
        &LogSumExp as &dyn Objective,
        &MaxCoordinate,
        &SumCoordinates,
    ] {
        let solved = solve(inst, objective, &SolveOptions::default()).unwrap();
        let oracle = brute_force_optimum(inst, objective, DEFAULT_LIMIT).unwrap();
        match oracle {
            None => assert!(!solved.verdict.feasible),
            Some((_, v)) => assert_eq!(
                solved.optimal_value.unwrap(),
                v,
                "{} on {inst:?}",
                objective.name()
            ),
        }
        let unpruned = solve_unpruned(inst, objective, &SolveOptions::default()).unwrap();
        assert_eq!(unpruned.optimal_value, solved.optimal_value);
    }

    if report.verdict.feasible {
        let grid = LatticeGrid::build(inst);
        let idx = compute_index_sets(inst);
        for c in enumerate_candidates(inst, &idx, None).unwrap().iter() {
            assert!(grid.contains(&c.point));
        }
    }
}

#[test]
fn generated_instances_agree_with_oracle() {
    for seed in 0..200 {
        let m = 1 + (seed as usize % 5);
        let n = 1 + (seed as usize / 5 % 5);
        for density in [0.5, 1.0, 3.0] {
            check_agreement(&generate(m, n, Mode::Feasible, seed, density).unwrap());
        }
        check_agreement(&generate(m, n, Mode::Infeasible, seed, 1.0).unwrap());
    }
}

fn coarse_grade() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => 0.0..=1.0f64,
        2 => (0u32..=8).prop_map(|k| f64::from(k) / 8.0),
        1 => (0u32..=10).prop_map(|k| f64::from(k) / 10.0),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    // coarse grades produce ties, duplicate candidates and zero thresholds
    #[test]
    fn tie_heavy_instances_agree_with_oracle(
        (a, b) in (1..=5usize, 1..=5usize).prop_flat_map(|(m, n)| (
            prop::collection::vec(prop::collection::vec(coarse_grade(), n), m),
            prop::collection::vec(coarse_grade(), m),
        ))
    ) {
        check_agreement(&Instance::new(a, b).unwrap());
    }
}
