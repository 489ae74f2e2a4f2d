//! Partitions of digraphs into weakly degenerate induced subdigraphs.
//!
//! A digraph `D` is weakly `h`-degenerate when every non-empty subdigraph has
//! a vertex `v` with `min(d+(v), d-(v)) < h(v)`. Given a vector function
//! `f: V(D) -> N^p` with `f_1(v) + ... + f_p(v) >= max(d+(v), d-(v))`, the
//! [`engine`] either splits `V(D)` into `p` classes where class `i` is weakly
//! `f_i`-degenerate, or returns a [`hard_pair::HardPairCertificate`] proving
//! that no such split exists.
//!
//! The crate is `no_std` and needs only `alloc`. File formats and the
//! command-line driver live in the companion `vardegen` crate.
//!
//! Vertices are dense indices `0..n` and class/color indices are 0-based.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod blocks;
pub mod degeneracy;
pub mod digraph;
pub mod engine;
pub mod hard_pair;
pub mod oracle;
pub mod reductions;

pub use blocks::BlockDecomposition;
pub use degeneracy::{
    is_weakly_degenerate, validate_partition, weak_core, DegeneracyFunction, Partition,
    PartitionViolation, VectorFunction,
};
pub use digraph::{components, Digraph, GraphError, Induced, UnderlyingGraph};
pub use engine::{solve, ComponentResult, EngineError, SolveOutcome, SolverOptions};
pub use hard_pair::{
    check_block_type, recognize_hard_pair, validate_certificate, BlockType, HardPairCertificate,
};
pub use oracle::{enumerate_digraphs, oracle_solve, EnumerationConstraints, OracleVerdict};
pub use reductions::{
    list_color, lists_to_vector_function, ColorMap, ListAssignment, ListColoring,
};
