//! Exhaustive reference solver and digraph enumeration for small cases.
//!
//! [`oracle_solve`] tries class assignments in lexicographic order and
//! relies only on [`validate_partition`], so it shares no logic with the
//! engine. [`enumerate_digraphs`] lists all labelled digraphs on up to six
//! vertices, optionally one per isomorphism class. [`sample_digraphs`] and
//! [`random_eulerian_digraph`] produce seeded random inputs beyond that.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degeneracy::{
    validate_partial, validate_partition, FunctionError, Partition, VectorFunction,
};
use crate::digraph::Digraph;

/// `3^8`: admits `n <= 12` for two classes and `n <= 8` for three.
pub const DEFAULT_BUDGET: u64 = 6561;

/// Above this many assignments the search prunes partial assignments.
pub const PRUNING_THRESHOLD: u64 = 1_000_000;

/// Largest `n` for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// The lexicographically first valid partition.
    Feasible(Partition),
    Infeasible,
}

impl OracleVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OracleVerdict::Feasible(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{p}^{n} assignments exceed the budget of {budget}")]
    BudgetExceeded { n: usize, p: usize, budget: u64 },
    #[error(transparent)]
    Function(#[from] FunctionError),
}

/// Searches all `p^n` class assignments for an f-partition.
pub fn oracle_solve(
    d: &Digraph,
    f: &VectorFunction,
    budget: u64,
) -> Result<OracleVerdict, OracleError> {
    let n = d.vertex_count();
    let p = f.p();
    if f.len() != n {
        return Err(FunctionError::VertexCountMismatch {
            expected: n,
            found: f.len(),
        }
        .into());
    }
    let total = u32::try_from(n)
        .ok()
        .and_then(|e| (p as u64).checked_pow(e));
    let total = match total {
        Some(t) if t <= budget => t,
        _ => return Err(OracleError::BudgetExceeded { n, p, budget }),
    };
    if total > PRUNING_THRESHOLD {
        return Ok(pruned(d, f));
    }
    let mut classes = vec![0; n];
    loop {
        let part = Partition::new(p, classes.clone()).expect("classes below p");
        if validate_partition(d, f, &part).is_ok() {
            return Ok(OracleVerdict::Feasible(part));
        }
        // Next assignment; vertex 0 is the most significant digit.
        let Some(k) = (0..n).rev().find(|&k| classes[k] + 1 < p) else {
            return Ok(OracleVerdict::Infeasible);
        };
        classes[k] += 1;
        for c in &mut classes[k + 1..] {
            *c = 0;
        }
    }
}

/// Depth-first search in the same order, cutting a branch once an assigned
/// prefix already violates. Adding vertices to a class never shrinks its
/// weak core, so the cut loses no solutions.
fn pruned(d: &Digraph, f: &VectorFunction) -> OracleVerdict {
    let n = d.vertex_count();
    let p = f.p();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut k = 0;
    loop {
        if k == n {
            let classes = colors.iter().map(|c| c.expect("assigned")).collect();
            return OracleVerdict::Feasible(Partition::new(p, classes).expect("classes below p"));
        }
        let next = colors[k].map_or(0, |c| c + 1);
        if next >= p {
            colors[k] = None;
            if k == 0 {
                return OracleVerdict::Infeasible;
            }
            k -= 1;
            continue;
        }
        colors[k] = Some(next);
        if validate_partial(d, f, &colors).is_ok() {
            k += 1;
        }
    }
}

/// Filters for [`enumerate_digraphs`] and [`sample_digraphs`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationConstraints {
    pub connected: bool,
    pub eulerian: bool,
    pub bidirected: bool,
    /// Keep only the representative with the smallest arc code in each
    /// isomorphism class.
    pub up_to_isomorphism: bool,
}

impl EnumerationConstraints {
    fn accepts(&self, d: &Digraph) -> bool {
        (!self.connected || d.is_connected())
            && (!self.eulerian || d.is_eulerian())
            && (!self.bidirected || d.is_bidirected())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("exhaustive enumeration supports at most {max} vertices, got {n}")]
pub struct EnumerationError {
    pub n: usize,
    pub max: usize,
}

/// Iterator over labelled digraphs on `n` vertices.
///
/// Each unordered pair `{i, j}`, `i < j`, has four states: no arc, `i -> j`,
/// `j -> i`, or both. Digraphs are listed by their state vector in
/// increasing order, with the pair `(0, 1)` varying slowest.
pub struct Digraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    constraints: EnumerationConstraints,
    digits: Vec<u8>,
    done: bool,
    permutations: Vec<Vec<usize>>,
}

pub fn enumerate_digraphs(
    n: usize,
    constraints: EnumerationConstraints,
) -> Result<Digraphs, EnumerationError> {
    if n > MAX_EXHAUSTIVE_VERTICES {
        return Err(EnumerationError {
            n,
            max: MAX_EXHAUSTIVE_VERTICES,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let permutations = if constraints.up_to_isomorphism {
        permutations(n)
    } else {
        Vec::new()
    };
    Ok(Digraphs {
        n,
        digits: vec![0; pairs.len()],
        pairs,
        constraints,
        done: false,
        permutations,
    })
}

impl Digraphs {
    fn advance(&mut self) {
        for k in (0..self.digits.len()).rev() {
            // Bidirected pairs only take the states 0 and 3.
            let next = match (self.constraints.bidirected, self.digits[k]) {
                (true, 0) => 3,
                (true, _) => 0,
                (false, 3) => 0,
                (false, d) => d + 1,
            };
            self.digits[k] = next;
            if next != 0 {
                return;
            }
        }
        self.done = true;
    }

    fn build(&self) -> Digraph {
        let arcs = self
            .pairs
            .iter()
            .zip(&self.digits)
            .flat_map(|(&(i, j), &d)| {
                let mut out = Vec::new();
                if d & 1 != 0 {
                    out.push((i, j));
                }
                if d & 2 != 0 {
                    out.push((j, i));
                }
                out
            });
        Digraph::from_arcs(self.n, arcs).expect("enumerated digraphs are simple")
    }

    /// True iff no relabelling yields a smaller state vector.
    fn is_canonical(&self) -> bool {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for (&(i, j), &d) in self.pairs.iter().zip(&self.digits) {
            adj[i * n + j] = d & 1 != 0;
            adj[j * n + i] = d & 2 != 0;
        }
        'perm: for perm in &self.permutations {
            for (k, &(i, j)) in self.pairs.iter().enumerate() {
                let (a, b) = (perm[i], perm[j]);
                let d = u8::from(adj[a * n + b]) | (u8::from(adj[b * n + a]) << 1);
                match d.cmp(&self.digits[k]) {
                    core::cmp::Ordering::Less => return false,
                    core::cmp::Ordering::Greater => continue 'perm,
                    core::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }
}

impl Iterator for Digraphs {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        while !self.done {
            let keep = !self.constraints.up_to_isomorphism || self.is_canonical();
            let d = keep.then(|| self.build());
            self.advance();
            if let Some(d) = d {
                if self.constraints.accepts(&d) {
                    return Some(d);
                }
            }
        }
        None
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(current.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, current, out);
            let j = if k % 2 == 0 { i } else { 0 };
            current.swap(j, k - 1);
        }
    }
    heap(n, &mut current, &mut out);
    out
}

/// A random digraph where each ordered pair is an arc with probability
/// `arc_probability`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, arc_probability: f64) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.random_bool(arc_probability))
        .collect();
    Digraph::from_arcs(n, arcs).expect("simple arcs")
}

/// `count` seeded random digraphs on `n` vertices meeting `constraints`
/// (isomorphism reduction is ignored). Eulerian and bidirected requests are
/// built directly rather than by rejection.
pub fn sample_digraphs(
    n: usize,
    constraints: EnumerationConstraints,
    seed: u64,
    count: usize,
) -> Vec<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count && attempts < count.saturating_mul(1000).max(1000) {
        attempts += 1;
        let density = rng.random_range(0.15..0.7);
        let d = if constraints.bidirected {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect::<Vec<_>>()
                .into_iter()
                .filter(|_| rng.random_bool(density))
                .collect();
            Digraph::bidirected(n, edges).expect("simple edges")
        } else if constraints.eulerian {
            {
                let extra = rng.random_range(0..=2 * n);
                random_cycle_union(&mut rng, n, extra, constraints.connected)
            }
        } else {
            random_digraph(&mut rng, n, density)
        };
        if constraints.accepts(&d) {
            out.push(d);
        }
    }
    out
}

/// A connected Eulerian digraph: a directed Hamiltonian cycle plus
/// `extra_cycles` random directed cycles whose arcs are new.
pub fn random_eulerian_digraph(seed: u64, n: usize, extra_cycles: usize) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cycle_union(&mut rng, n, extra_cycles, true)
}

fn random_cycle_union<R: Rng>(
    rng: &mut R,
    n: usize,
    extra_cycles: usize,
    spanning: bool,
) -> Digraph {
    let mut has = vec![false; n * n];
    let mut arcs = Vec::new();
    let add_cycle = |cycle: &[usize], has: &mut Vec<bool>, arcs: &mut Vec<(usize, usize)>| {
        let len = cycle.len();
        let new: Vec<(usize, usize)> = (0..len).map(|i| (cycle[i], cycle[(i + 1) % len])).collect();
        if new.iter().all(|&(u, v)| !has[u * n + v]) {
            for &(u, v) in &new {
                has[u * n + v] = true;
                arcs.push((u, v));
            }
        }
    };
    let shuffled = |rng: &mut R| {
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        order
    };
    if spanning && n >= 2 {
        let order = shuffled(rng);
        add_cycle(&order, &mut has, &mut arcs);
    }
    if n >= 2 {
        for _ in 0..extra_cycles {
            let len = rng.random_range(2..=n.min(8));
            let order = shuffled(rng);
            add_cycle(&order[..len], &mut has, &mut arcs);
        }
    }
    Digraph::from_arcs(n, arcs).expect("arcs are new")
}
