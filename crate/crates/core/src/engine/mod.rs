//! The constructive solver.
//!
//! [`solve`] returns, for every component of the input, either an
//! f-partition or a certificate that the component with its function is a
//! hard pair. The work is split as follows:
//!
//! * [`Engine::greedy_partition`] handles components where some vertex has
//!   slack, i.e. `sum f(v) > min(d+(v), d-(v))`.
//! * Otherwise the component is Eulerian with `sum f(v) = d+(v) = d-(v)`.
//!   End-blocks are detached one by one with a block function and handed to
//!   [`Engine::block_partition`], which dispatches to
//!   [`Engine::cycle_partition`], [`Engine::complete_partition`] or a
//!   shifting procedure along an even cycle.
//! * A partition found for one block extends greedily to the blocks detached
//!   before it. If every block is hard, their certificates are glued.
//!
//! The shifting loops have provable bounds. They are still capped, and
//! running past a cap is reported as [`InternalFailure::ShiftCap`].

mod block;
mod complete;
mod cycle;
mod greedy;
mod paths;
mod shift;
mod solve;

use alloc::vec;
use alloc::vec::Vec;

pub use shift::ShiftState;

use crate::degeneracy::{FunctionError, Partition, PartitionViolation, VectorFunction};
use crate::digraph::Digraph;
use crate::hard_pair::{BlockType, HardPairCertificate};

/// Switches for extra runtime checking.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Validate the partial partition after every shift.
    pub check_shift_states: bool,
}

/// Counters collected while solving.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Shifts that moved the uncoloured vertex.
    pub shifts: usize,
    /// Longest run of shifts inside a single loop.
    pub longest_shift_run: usize,
    /// Intermediate states validated because of `check_shift_states`.
    pub validated_states: usize,
    /// Times an unbalanced split at a cut vertex was resolved by shifting.
    pub split_repairs: usize,
}

/// Failures of the solver's own invariants. Any of these is a defect.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InternalFailure {
    #[error("shifting loop in {context} exceeded its cap of {cap} steps")]
    ShiftCap { context: &'static str, cap: usize },
    #[error("no admissible class for vertex {0} during greedy colouring")]
    GreedyStuck(usize),
    #[error("vertex {vertex} cannot be added, yet its class-{class} degrees differ from f")]
    Unbalanced { vertex: usize, class: usize },
    #[error("a produced partition is invalid: {0}")]
    InvalidResult(PartitionViolation),
    #[error("{0}")]
    Unreachable(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("degree condition fails at vertices {0:?}")]
    DegreeCondition(Vec<usize>),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error("invalid partial partition: {0}")]
    InvalidPartition(PartitionViolation),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("internal failure: {0}")]
    Internal(#[from] InternalFailure),
}

impl EngineError {
    /// True for solver defects, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, EngineError::Internal(_))
    }
}

/// Result for one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentResult {
    /// Classes of the component's vertices, aligned with
    /// [`ComponentOutcome::vertices`].
    Partition(Vec<usize>),
    /// Certificate in the input digraph's vertex numbering.
    Hard(HardPairCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentOutcome {
    /// Vertices of the component, ascending.
    pub vertices: Vec<usize>,
    pub result: ComponentResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub p: usize,
    pub vertex_count: usize,
    pub components: Vec<ComponentOutcome>,
}

impl SolveOutcome {
    /// True iff every component received a partition.
    pub fn is_partitionable(&self) -> bool {
        self.components
            .iter()
            .all(|c| matches!(c.result, ComponentResult::Partition(_)))
    }

    /// The combined partition when every component is partitionable.
    pub fn partition(&self) -> Option<Partition> {
        let mut class_of = vec![0; self.vertex_count];
        for c in &self.components {
            let ComponentResult::Partition(classes) = &c.result else {
                return None;
            };
            for (&v, &k) in c.vertices.iter().zip(classes) {
                class_of[v] = k;
            }
        }
        Some(Partition::new(self.p, class_of).expect("classes below p"))
    }

    pub fn certificates(&self) -> impl Iterator<Item = &HardPairCertificate> {
        self.components.iter().filter_map(|c| match &c.result {
            ComponentResult::Hard(cert) => Some(cert),
            ComponentResult::Partition(_) => None,
        })
    }
}

/// Result of partitioning a single block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockOutcome {
    Partition(Partition),
    Hard(BlockType),
}

/// Runs the algorithms and keeps statistics across calls.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    options: SolverOptions,
    stats: EngineStats,
}

impl Engine {
    pub fn new(options: SolverOptions) -> Self {
        Engine {
            options,
            stats: EngineStats::default(),
        }
    }

    pub fn options(&self) -> SolverOptions {
        self.options
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    /// Step budget for one shifting loop on `n` vertices with `p` classes.
    pub fn shift_cap(n: usize, p: usize) -> usize {
        4 * n * (n + p)
    }
}

/// Solves `(D, f)` with default options.
pub fn solve(d: &Digraph, f: &VectorFunction) -> Result<SolveOutcome, EngineError> {
    Engine::default().solve(d, f)
}

fn check_function(d: &Digraph, f: &VectorFunction) -> Result<(), EngineError> {
    if f.len() != d.vertex_count() {
        return Err(FunctionError::VertexCountMismatch {
            expected: d.vertex_count(),
            found: f.len(),
        }
        .into());
    }
    Ok(())
}

fn check_degree_condition(d: &Digraph, f: &VectorFunction) -> Result<(), EngineError> {
    check_function(d, f)?;
    let bad = f.degree_condition_violations(d);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(EngineError::DegreeCondition(bad))
    }
}

/// `sum f(v) = d+(v) = d-(v)` everywhere.
fn check_tight(d: &Digraph, f: &VectorFunction) -> Result<(), EngineError> {
    check_function(d, f)?;
    let tight =
        (0..d.vertex_count()).all(|v| f.sum(v) == d.out_degree(v) && f.sum(v) == d.in_degree(v));
    if tight {
        Ok(())
    } else {
        Err(EngineError::Precondition(
            "f must sum to the in- and out-degree at every vertex",
        ))
    }
}

fn check_block(d: &Digraph) -> Result<(), EngineError> {
    let ok = d.vertex_count() >= 1
        && d.is_connected()
        && crate::blocks::BlockDecomposition::new(d).block_count() == 1;
    if ok {
        Ok(())
    } else {
        Err(EngineError::Precondition("digraph must be a block"))
    }
}

/// Per-class `(out, in)` degrees of `v` towards coloured vertices.
pub(crate) fn class_degrees(
    d: &Digraph,
    p: usize,
    colors: &[Option<usize>],
    v: usize,
) -> Vec<(usize, usize)> {
    let mut deg = vec![(0, 0); p];
    for &w in d.out_neighbors(v) {
        if let Some(c) = colors[w] {
            deg[c].0 += 1;
        }
    }
    for &w in d.in_neighbors(v) {
        if let Some(c) = colors[w] {
            deg[c].1 += 1;
        }
    }
    deg
}

/// The first class `v` can join: `min(out, in) < f_i(v)` towards class `i`.
pub(crate) fn addable_class(
    d: &Digraph,
    f: &VectorFunction,
    colors: &[Option<usize>],
    v: usize,
) -> Option<usize> {
    let fv = f.get(v);
    class_degrees(d, f.p(), colors, v)
        .into_iter()
        .enumerate()
        .find(|&(c, (o, i))| o.min(i) < fv[c])
        .map(|(c, _)| c)
}

fn complete_colors(colors: Vec<Option<usize>>, p: usize) -> Result<Partition, EngineError> {
    let class_of = colors
        .into_iter()
        .collect::<Option<Vec<usize>>>()
        .ok_or(InternalFailure::Unreachable("a vertex was left uncoloured"))?;
    Ok(Partition::new(p, class_of)?)
}
