//! The engine must agree with exhaustive search on every small instance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vardegen_core::degeneracy::{validate_partition, VectorFunction};
use vardegen_core::oracle::{
    enumerate_digraphs, oracle_solve, sample_digraphs, EnumerationConstraints, DEFAULT_BUDGET,
};
use vardegen_core::{solve, validate_certificate, Digraph};

/// Every function `V -> [0, max]^p` meeting the degree condition.
fn functions(d: &Digraph, p: usize, max: usize) -> Vec<VectorFunction> {
    let n = d.vertex_count();
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let mut rows = vec![vec![]];
            for _ in 0..p {
                rows = rows
                    .into_iter()
                    .flat_map(|r| (0..=max).map(move |x| [r.clone(), vec![x]].concat()))
                    .collect();
            }
            rows.retain(|r| r.iter().sum::<usize>() >= d.max_degree_at(v));
            rows
        })
        .collect();
    let mut out = vec![vec![]];
    for rows in &per_vertex {
        out = out
            .into_iter()
            .flat_map(|acc: Vec<Vec<usize>>| {
                rows.iter()
                    .map(move |r| [acc.clone(), vec![r.clone()]].concat())
            })
            .collect();
    }
    out.into_iter()
        .map(|rows| VectorFunction::new(p, rows).unwrap())
        .collect()
}

fn agree(d: &Digraph, f: &VectorFunction) {
    let outcome =
        solve(d, f).unwrap_or_else(|e| panic!("{e} on {:?} {:?}", d.arcs().collect::<Vec<_>>(), f));
    let oracle = oracle_solve(d, f, DEFAULT_BUDGET).unwrap();
    assert_eq!(
        outcome.is_partitionable(),
        oracle.is_feasible(),
        "{:?} {:?}",
        d.arcs().collect::<Vec<_>>(),
        f
    );
    if let Some(part) = outcome.partition() {
        assert!(validate_partition(d, f, &part).is_ok());
    }
    for cert in outcome.certificates() {
        assert!(validate_certificate(d, f, cert).is_ok());
    }
}

#[test]
fn all_digraphs_up_to_four_vertices() {
    let iso = EnumerationConstraints {
        up_to_isomorphism: true,
        ..Default::default()
    };
    for n in 1..=4 {
        for d in enumerate_digraphs(n, iso).unwrap() {
            for f in functions(&d, 2, 2) {
                agree(&d, &f);
            }
        }
    }
}

#[test]
fn random_instances_up_to_seven_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..300u64 {
        let n = 2 + (seed as usize % 6);
        let eulerian = seed % 2 == 0;
        let c = EnumerationConstraints {
            connected: true,
            eulerian,
            ..Default::default()
        };
        for d in sample_digraphs(n, c, seed, 4) {
            let p = rng.random_range(1..=3);
            for _ in 0..10 {
                // Split each vertex's degree at random, sometimes with slack.
                let rows = (0..n)
                    .map(|v| {
                        let mut row = vec![0; p];
                        for _ in 0..d.max_degree_at(v) + usize::from(rng.random_bool(0.1)) {
                            row[rng.random_range(0..p)] += 1;
                        }
                        row
                    })
                    .collect();
                agree(&d, &VectorFunction::new(p, rows).unwrap());
            }
        }
    }
}
