use proptest::prelude::*;
use qmc_core::graphs::{complete_graph, complete_multipartite};
use qmc_core::oracle::{
    apply_swap, full_spectrum, max_eigenvalue, HamiltonianOperator, PowerOptions, StateVector,
};
use qmc_core::Graph;

proptest! {
    #[test]
    fn swap_is_an_isometric_involution(
        d in 2usize..4,
        n in 2usize..6,
        seed in any::<u64>(),
        (i, j) in (0usize..6, 0usize..6),
    ) {
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let v = StateVector::random(d, n, seed).unwrap();
        let once = apply_swap(&v, i, j).unwrap();
        prop_assert!((once.norm() - v.norm()).abs() <= 1e-12 * v.norm());
        prop_assert_eq!(apply_swap(&once, i, j).unwrap(), v);
    }

    #[test]
    fn hamiltonian_is_symmetric_and_psd(d in 2usize..4, n in 2usize..6, seed in any::<u64>()) {
        let h = HamiltonianOperator::new(complete_graph(n), d).unwrap();
        let u = StateVector::random(d, n, seed).unwrap();
        let v = StateVector::random(d, n, seed.wrapping_add(1)).unwrap();
        let uhv = u.dot(&h.apply(&v).unwrap());
        let hu_v = h.apply(&u).unwrap().dot(&v);
        prop_assert!((uhv - hu_v).abs() <= 1e-10 * uhv.abs().max(1.0));
        let rq = u.dot(&h.apply(&u).unwrap()) / u.dot(&u);
        prop_assert!(rq >= -1e-10);
    }
}

#[test]
fn trace_matches_analytic_value() {
    let graphs: Vec<Graph> = vec![
        complete_graph(3),
        complete_graph(5),
        complete_multipartite(&[2, 2, 1]).unwrap(),
        complete_multipartite(&[3, 1, 1]).unwrap(),
    ];
    for g in graphs {
        for d in 2..=3 {
            let edges = g.edge_count() as f64;
            let h = HamiltonianOperator::new(g.clone(), d).unwrap();
            if h.dim() > 4096 {
                continue;
            }
            let dim = h.dim() as f64;
            let sum: f64 = full_spectrum(&h).unwrap().iter().sum();
            let trace = 2.0 * edges * dim * (1.0 - 1.0 / d as f64);
            assert!((sum - trace).abs() <= 1e-6 * trace.max(1.0), "{sum} vs {trace}");
        }
    }
}

#[test]
fn power_iteration_matches_dense_top_eigenvalue() {
    for parts in [vec![2, 2, 1], vec![3, 2, 1], vec![4, 1, 1], vec![2, 2, 2, 1]] {
        for d in 2..=3 {
            let h = HamiltonianOperator::new(complete_multipartite(&parts).unwrap(), d).unwrap();
            if h.dim() > 1024 {
                continue;
            }
            let dense_top = *full_spectrum(&h).unwrap().last().unwrap();
            let power = max_eigenvalue(&h, &PowerOptions::default()).unwrap();
            assert!((dense_top - power.value).abs() < 1e-6, "{parts:?} d={d}");
            assert!(power.value <= 4.0 * h.graph().edge_count() as f64 + 1e-9);
        }
    }
}

#[test]
fn seeds_give_the_same_value() {
    let h = HamiltonianOperator::new(complete_multipartite(&[3, 3, 1]).unwrap(), 2).unwrap();
    let values: Vec<f64> = [1, 42, 12345]
        .into_iter()
        .map(|seed| {
            let opts = PowerOptions { seed, ..PowerOptions::default() };
            max_eigenvalue(&h, &opts).unwrap().value
        })
        .collect();
    assert!(values.iter().all(|v| (v - values[0]).abs() < 1e-6));
}
