//! Digraphs without loops or parallel arcs, their underlying graphs and
//! connectivity.
//!
//! Opposite arcs `(u, v)` and `(v, u)` may coexist. A pair of opposite arcs
//! is called a digon; a digraph in which every arc has its opposite is
//! bidirected.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Errors raised while building digraphs or subdigraphs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
}

/// A loop-free digraph on the vertices `0..n` with sorted adjacency lists in
/// both directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    /// The digraph on `n` vertices without arcs.
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    /// Builds a digraph from an arc list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            d.out_adj[u].push(v);
            d.in_adj[v].push(u);
            d.arc_count += 1;
        }
        for v in 0..n {
            d.out_adj[v].sort_unstable();
            d.in_adj[v].sort_unstable();
            if let Some(w) = d.out_adj[v].windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateArc(v, w[0]));
            }
        }
        Ok(d)
    }

    /// Builds a bidirected digraph: every undirected edge becomes a digon.
    pub fn bidirected<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Digraph::from_arcs(n, edges.into_iter().flat_map(|(u, v)| [(u, v), (v, u)]))
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`. For `n = 2` this is a
    /// digon.
    ///
    /// # Panics
    /// If `n < 2`.
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 2, "a directed cycle needs at least two vertices");
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// The bidirected cycle on `n >= 3` vertices.
    ///
    /// # Panics
    /// If `n < 3`.
    pub fn bidirected_cycle(n: usize) -> Self {
        assert!(n >= 3, "a bidirected cycle needs at least three vertices");
        Digraph::bidirected(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// The bidirected complete digraph on `n` vertices.
    pub fn bidirected_complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Digraph::bidirected(n, edges).expect("valid complete digraph")
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Out-neighbors of `v` in ascending order.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// In-neighbors of `v` in ascending order.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// `max(d+(v), d-(v))`.
    pub fn max_degree_at(&self, v: usize) -> usize {
        self.out_degree(v).max(self.in_degree(v))
    }

    /// `min(d+(v), d-(v))`.
    pub fn min_degree_at(&self, v: usize) -> usize {
        self.out_degree(v).min(self.in_degree(v))
    }

    /// `max(Δ+(D), Δ-(D))`, zero for the empty digraph.
    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.max_degree_at(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj
            .get(u)
            .is_some_and(|out| out.binary_search(&v).is_ok())
    }

    /// Neighbors of `v` in the underlying graph, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        merge_sorted(&self.out_adj[v], &self.in_adj[v])
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |&v| (u, v)))
    }

    pub fn is_eulerian_at(&self, v: usize) -> bool {
        self.out_degree(v) == self.in_degree(v)
    }

    /// True iff `d+(v) = d-(v)` for every vertex.
    pub fn is_eulerian(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.is_eulerian_at(v))
    }

    /// True iff every arc has its opposite arc.
    pub fn is_bidirected(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// The digraph with every arc reversed.
    pub fn reversed(&self) -> Self {
        Digraph {
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            arc_count: self.arc_count,
        }
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() == 1
    }

    /// True iff the digraph is a directed cycle of length at least two (a
    /// digon counts).
    pub fn is_directed_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 2
            && self.arc_count == n
            && (0..n).all(|v| self.out_degree(v) == 1 && self.in_degree(v) == 1)
            && self.is_connected()
    }

    /// True iff every pair of distinct vertices is joined by a digon.
    pub fn is_bidirected_complete(&self) -> bool {
        let n = self.vertex_count();
        n >= 1 && self.arc_count == n * (n - 1)
    }

    /// True iff the digraph is bidirected and its underlying graph is a cycle
    /// of length at least three.
    pub fn is_bidirected_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.is_bidirected() && self.underlying().is_cycle()
    }

    pub fn is_bidirected_odd_cycle(&self) -> bool {
        self.vertex_count() % 2 == 1 && self.is_bidirected_cycle()
    }

    /// The subdigraph induced by `vertices`. The input is treated as a set:
    /// duplicates are ignored and the new indices follow ascending original
    /// order.
    pub fn induced_subdigraph(&self, vertices: &[usize]) -> Result<Induced, GraphError> {
        let n = self.vertex_count();
        let mut original = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        if let Some(&bad) = original.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let mut local = vec![usize::MAX; n];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = Digraph::empty(original.len());
        for (i, &v) in original.iter().enumerate() {
            for &w in &self.out_adj[v] {
                let j = local[w];
                if j != usize::MAX {
                    graph.out_adj[i].push(j);
                    graph.in_adj[j].push(i);
                    graph.arc_count += 1;
                }
            }
        }
        // Increasing original order keeps the lists sorted already.
        Ok(Induced { graph, original })
    }

    /// The simple undirected graph with an edge wherever an arc exists.
    pub fn underlying(&self) -> UnderlyingGraph {
        let adj = (0..self.vertex_count())
            .map(|v| self.neighbors(v))
            .collect();
        UnderlyingGraph { adj }
    }
}

/// An induced subdigraph together with its map back to the parent digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Digraph,
    /// `original[i]` is the parent vertex of local vertex `i`; ascending.
    pub original: Vec<usize>,
}

impl Induced {
    pub fn to_original(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn to_local(&self, original: usize) -> Option<usize> {
        self.original.binary_search(&original).ok()
    }
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingGraph {
    adj: Vec<Vec<usize>>,
}

impl UnderlyingGraph {
    /// Builds a graph from adjacency lists, symmetrizing and sorting them.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        UnderlyingGraph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && bfs_order(n, 0, |v| self.adj[v].iter().copied(), |_| true).len() == n
    }

    /// True iff the graph is a single cycle of length at least three.
    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// True iff every two distinct vertices are adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n >= 1 && self.adj.iter().all(|a| a.len() == n - 1)
    }
}

/// Connected components of the underlying graph, each sorted, ordered by
/// smallest vertex.
pub fn components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = bfs_order(
            n,
            s,
            |v| d.out_adj[v].iter().chain(&d.in_adj[v]).copied(),
            |_| true,
        );
        for &v in &comp {
            seen[v] = true;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Vertices reachable from `start` inside the vertex set accepted by
/// `allowed`, in breadth-first order.
pub(crate) fn bfs_order<N, I, A>(n: usize, start: usize, neighbors: N, allowed: A) -> Vec<usize>
where
    N: Fn(usize) -> I,
    I: Iterator<Item = usize>,
    A: Fn(usize) -> bool,
{
    let mut seen = vec![false; n];
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        for w in neighbors(v) {
            if !seen[w] && allowed(w) {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    order
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (_, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Digraph::from_arcs(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Digraph::from_arcs(2, [(0, 1), (0, 1)]),
            Err(GraphError::DuplicateArc(0, 1))
        );
        assert!(Digraph::from_arcs(2, [(0, 1), (1, 0)]).is_ok());
        assert_eq!(
            Digraph::from_arcs(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn induced_arc_of_triangle() {
        let c3 = Digraph::directed_cycle(3);
        let sub = c3.induced_subdigraph(&[0, 1]).unwrap();
        assert_eq!(sub.graph.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        let all = c3.induced_subdigraph(&[2, 0, 1]).unwrap();
        assert_eq!(all.graph, c3);
        assert!(c3.induced_subdigraph(&[3]).is_err());
    }

    #[test]
    fn component_order() {
        assert!(components(&Digraph::empty(0)).is_empty());
        let d = Digraph::from_arcs(4, [(2, 3), (3, 2), (0, 1), (1, 0)]).unwrap();
        assert_eq!(components(&d), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn shapes() {
        assert!(Digraph::directed_cycle(4).is_eulerian());
        assert!(!Digraph::from_arcs(2, [(0, 1)]).unwrap().is_eulerian());
        assert!(Digraph::bidirected_complete(4).is_eulerian());
        assert!(Digraph::directed_cycle(2).is_directed_cycle());
        assert!(Digraph::directed_cycle(2).is_bidirected_complete());
        assert!(Digraph::bidirected_cycle(5).is_bidirected_odd_cycle());
        assert!(!Digraph::bidirected_cycle(4).is_bidirected_odd_cycle());
        assert!(Digraph::bidirected_complete(3).is_bidirected_odd_cycle());
        assert!(!Digraph::directed_cycle(3).is_bidirected_cycle());
    }
}
