//! Weak degeneracy by peeling, vector functions and partition validation.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::Digraph;

/// Marks a vertex as outside every class during peeling.
pub(crate) const NO_CLASS: usize = usize::MAX;

/// Errors raised when building functions and partitions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FunctionError {
    #[error("a vector function needs p >= 1")]
    ZeroDimension,
    #[error("vector for vertex {vertex} has length {found}, expected {expected}")]
    WrongLength {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex} assigned class {class}, but only {p} classes exist")]
    ClassOutOfRange {
        vertex: usize,
        class: usize,
        p: usize,
    },
    #[error("function defined on {found} vertices, digraph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
}

/// A per-vertex threshold `h(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegeneracyFunction(pub Vec<usize>);

impl DegeneracyFunction {
    pub fn constant(n: usize, value: usize) -> Self {
        DegeneracyFunction(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A function `f: V -> N^p`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorFunction {
    p: usize,
    values: Vec<usize>,
}

impl VectorFunction {
    /// Builds a function from one vector per vertex.
    pub fn new(p: usize, rows: Vec<Vec<usize>>) -> Result<Self, FunctionError> {
        if p == 0 {
            return Err(FunctionError::ZeroDimension);
        }
        let mut values = Vec::with_capacity(rows.len() * p);
        for (vertex, row) in rows.into_iter().enumerate() {
            if row.len() != p {
                return Err(FunctionError::WrongLength {
                    vertex,
                    expected: p,
                    found: row.len(),
                });
            }
            values.extend(row);
        }
        Ok(VectorFunction { p, values })
    }

    /// The same vector at each of `n` vertices.
    ///
    /// # Panics
    /// If `vector` is empty.
    pub fn constant(n: usize, vector: &[usize]) -> Self {
        assert!(!vector.is_empty(), "a vector function needs p >= 1");
        VectorFunction {
            p: vector.len(),
            values: vector.repeat(n),
        }
    }

    /// The all-zero function.
    ///
    /// # Panics
    /// If `p == 0`.
    pub fn zeros(n: usize, p: usize) -> Self {
        assert!(p >= 1, "a vector function needs p >= 1");
        VectorFunction {
            p,
            values: vec![0; n * p],
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of vertices the function is defined on.
    pub fn len(&self) -> usize {
        self.values.len() / self.p
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> &[usize] {
        &self.values[v * self.p..(v + 1) * self.p]
    }

    pub fn get_mut(&mut self, v: usize) -> &mut [usize] {
        &mut self.values[v * self.p..(v + 1) * self.p]
    }

    pub fn set(&mut self, v: usize, vector: &[usize]) {
        self.get_mut(v).copy_from_slice(vector);
    }

    /// `f_1(v) + ... + f_p(v)`.
    pub fn sum(&self, v: usize) -> usize {
        self.get(v).iter().sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.values.chunks(self.p)
    }

    /// The function restricted to `vertices`, in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        let mut values = Vec::with_capacity(vertices.len() * self.p);
        for &v in vertices {
            values.extend_from_slice(self.get(v));
        }
        VectorFunction { p: self.p, values }
    }

    /// The coordinate `f_i` as a degeneracy function.
    pub fn coordinate(&self, i: usize) -> DegeneracyFunction {
        DegeneracyFunction(self.rows().map(|row| row[i]).collect())
    }

    /// Vertices where `sum f(v) < max(d+(v), d-(v))`.
    pub fn degree_condition_violations(&self, d: &Digraph) -> Vec<usize> {
        (0..d.vertex_count())
            .filter(|&v| self.sum(v) < d.max_degree_at(v))
            .collect()
    }
}

/// An assignment of each vertex to a class in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    p: usize,
    class_of: Vec<usize>,
}

impl Partition {
    pub fn new(p: usize, class_of: Vec<usize>) -> Result<Self, FunctionError> {
        if p == 0 {
            return Err(FunctionError::ZeroDimension);
        }
        if let Some((vertex, &class)) = class_of.iter().enumerate().find(|(_, &c)| c >= p) {
            return Err(FunctionError::ClassOutOfRange { vertex, class, p });
        }
        Ok(Partition { p, class_of })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes_of(&self) -> &[usize] {
        &self.class_of
    }

    /// Members of class `i`, ascending.
    pub fn members(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.class_of[v] == i).collect()
    }
}

/// Why a partition failed validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionViolation {
    #[error("partition has {partition} classes but the function has {function} coordinates")]
    ClassCount { partition: usize, function: usize },
    #[error("partition covers {found} vertices, digraph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("class {class} is not weakly degenerate; core {core:?}")]
    NotDegenerate { class: usize, core: Vec<usize> },
}

/// Peels every labelled class at once. A vertex survives iff it lies in the
/// weak core of its class, where `threshold(v, class)` gives the bound.
pub(crate) fn peel_classes<T>(d: &Digraph, label: &[usize], threshold: T) -> Vec<bool>
where
    T: Fn(usize, usize) -> usize,
{
    let n = d.vertex_count();
    let mut alive: Vec<bool> = label.iter().map(|&c| c != NO_CLASS).collect();
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    for (u, v) in d.arcs() {
        if alive[u] && label[u] == label[v] {
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
    }
    let violates =
        |v: usize, out: &[usize], inn: &[usize]| out[v].min(inn[v]) < threshold(v, label[v]);
    let mut queued = vec![false; n];
    let mut work = VecDeque::new();
    for v in 0..n {
        if alive[v] && violates(v, &out_deg, &in_deg) {
            queued[v] = true;
            work.push_back(v);
        }
    }
    while let Some(v) = work.pop_front() {
        alive[v] = false;
        for &w in d.out_neighbors(v) {
            if alive[w] && label[w] == label[v] {
                in_deg[w] -= 1;
                if !queued[w] && violates(w, &out_deg, &in_deg) {
                    queued[w] = true;
                    work.push_back(w);
                }
            }
        }
        for &w in d.in_neighbors(v) {
            if alive[w] && label[w] == label[v] {
                out_deg[w] -= 1;
                if !queued[w] && violates(w, &out_deg, &in_deg) {
                    queued[w] = true;
                    work.push_back(w);
                }
            }
        }
    }
    alive
}

/// The largest vertex set `X` such that every `v` in `D[X]` has
/// `min(d+(v), d-(v)) >= h(v)`. Empty iff `D` is weakly `h`-degenerate.
///
/// # Panics
/// If `h` is not defined on exactly the vertices of `d`.
pub fn weak_core(d: &Digraph, h: &DegeneracyFunction) -> Vec<usize> {
    assert_eq!(h.len(), d.vertex_count(), "h must be defined on V(D)");
    let alive = peel_classes(d, &vec![0; d.vertex_count()], |v, _| h.0[v]);
    (0..d.vertex_count()).filter(|&v| alive[v]).collect()
}

pub fn is_weakly_degenerate(d: &Digraph, h: &DegeneracyFunction) -> bool {
    weak_core(d, h).is_empty()
}

/// Checks that class `i` of `partition` induces a weakly `f_i`-degenerate
/// subdigraph for every `i`. On failure the first offending class and its
/// weak core are reported.
pub fn validate_partition(
    d: &Digraph,
    f: &VectorFunction,
    partition: &Partition,
) -> Result<(), PartitionViolation> {
    if partition.p() != f.p() {
        return Err(PartitionViolation::ClassCount {
            partition: partition.p(),
            function: f.p(),
        });
    }
    let n = d.vertex_count();
    for found in [partition.len(), f.len()] {
        if found != n {
            return Err(PartitionViolation::VertexCount { expected: n, found });
        }
    }
    check_labels(d, f, partition.classes_of())
}

/// Validates a partial assignment: vertices labelled `None` are ignored, the
/// rest must form an f-partition of the subdigraph they induce.
pub fn validate_partial(
    d: &Digraph,
    f: &VectorFunction,
    colors: &[Option<usize>],
) -> Result<(), PartitionViolation> {
    let label: Vec<usize> = colors.iter().map(|c| c.unwrap_or(NO_CLASS)).collect();
    check_labels(d, f, &label)
}

fn check_labels(
    d: &Digraph,
    f: &VectorFunction,
    label: &[usize],
) -> Result<(), PartitionViolation> {
    let alive = peel_classes(d, label, |v, c| f.get(v)[c]);
    match (0..d.vertex_count()).find(|&v| alive[v]) {
        None => Ok(()),
        Some(first) => {
            let class = label[first];
            let core = (0..d.vertex_count())
                .filter(|&v| alive[v] && label[v] == class)
                .collect();
            Err(PartitionViolation::NotDegenerate { class, core })
        }
    }
}
