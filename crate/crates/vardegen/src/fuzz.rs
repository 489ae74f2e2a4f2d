//! Differential testing of the solver against exhaustive search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vardegen_core::degeneracy::{validate_partition, VectorFunction};
use vardegen_core::engine::{Engine, EngineError, SolverOptions};
use vardegen_core::oracle::{oracle_solve, random_digraph, random_eulerian_digraph, OracleError};
use vardegen_core::{validate_certificate, Digraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub n_max: usize,
    pub p: usize,
    pub cases: usize,
    pub seed: u64,
    pub budget: u64,
    pub check_shift_states: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct FuzzSummary {
    pub cases: usize,
    pub partitionable: usize,
    pub hard: usize,
    /// Cases whose assignment space exceeded the oracle budget.
    pub skipped: usize,
    pub failures: Vec<FuzzFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FuzzFailure {
    pub case: usize,
    pub arcs: Vec<(usize, usize)>,
    pub function: Vec<Vec<usize>>,
    pub reason: String,
}

/// One random instance: half the time a connected Eulerian digraph with
/// `sum f = d+ = d-`, otherwise an arbitrary digraph whose function meets
/// the degree condition with occasional slack.
pub fn random_instance<R: Rng>(rng: &mut R, n_max: usize, p: usize) -> (Digraph, VectorFunction) {
    let n = rng.random_range(1..=n_max.max(1));
    let tight = rng.random_bool(0.5);
    let d = if tight {
        let extra = rng.random_range(0..=n);
        random_eulerian_digraph(rng.random(), n, extra)
    } else {
        let density = rng.random_range(0.1..0.8);
        random_digraph(rng, n, density)
    };
    let rows = (0..n)
        .map(|v| {
            let slack = usize::from(!tight && rng.random_bool(0.3));
            let mut row = vec![0; p];
            for _ in 0..d.max_degree_at(v) + slack {
                row[rng.random_range(0..p)] += 1;
            }
            row
        })
        .collect();
    (d, VectorFunction::new(p, rows).expect("p >= 1"))
}

/// Checks one instance: the solver's output validates, and its verdict
/// matches exhaustive search.
pub fn check_instance(
    d: &Digraph,
    f: &VectorFunction,
    budget: u64,
    options: SolverOptions,
) -> Result<Option<bool>, String> {
    let outcome = Engine::new(options)
        .solve(d, f)
        .map_err(|e: EngineError| e.to_string())?;
    if let Some(part) = outcome.partition() {
        validate_partition(d, f, &part)
            .map_err(|e| format!("returned partition is invalid: {e}"))?;
    }
    for cert in outcome.certificates() {
        validate_certificate(d, f, cert)
            .map_err(|e| format!("returned certificate is invalid: {e}"))?;
    }
    match oracle_solve(d, f, budget) {
        Ok(verdict) if verdict.is_feasible() != outcome.is_partitionable() => Err(format!(
            "solver says {}, exhaustive search says {}",
            if outcome.is_partitionable() {
                "partitionable"
            } else {
                "hard"
            },
            if verdict.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            }
        )),
        Ok(_) => Ok(Some(outcome.is_partitionable())),
        Err(OracleError::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

pub fn fuzz(config: &FuzzConfig) -> FuzzSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let options = SolverOptions {
        check_shift_states: config.check_shift_states,
    };
    let mut summary = FuzzSummary {
        cases: config.cases,
        ..Default::default()
    };
    for case in 0..config.cases {
        let (d, f) = random_instance(&mut rng, config.n_max, config.p);
        match check_instance(&d, &f, config.budget, options) {
            Ok(Some(true)) => summary.partitionable += 1,
            Ok(Some(false)) => summary.hard += 1,
            Ok(None) => summary.skipped += 1,
            Err(reason) => summary.failures.push(FuzzFailure {
                case,
                arcs: d.arcs().map(|(u, v)| (u + 1, v + 1)).collect(),
                function: f.rows().map(<[usize]>::to_vec).collect(),
                reason,
            }),
        }
    }
    summary
}
