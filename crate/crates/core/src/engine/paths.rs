//! Path and cycle searches in undirected graphs used by the general block
//! procedure.
//!
//! * [`disjoint_paths`]: vertex-disjoint paths from sources to a target set,
//!   found with unit-capacity augmenting paths on a split-vertex network.
//! * [`even_cycle_with_free_vertex`]: an even cycle through a vertex `v`
//!   such that `v` has no chord to the cycle.
//!
//! The even-cycle search is exhaustive over `(v, a, b)` with `a, b` two
//! neighbours of `v`. It asks for an even `a`-`b` path avoiding `v` and the
//! rest of `N(v)`. Parity along the blocks of the remaining graph decides
//! this exactly: bipartite blocks fix the parity of every crossing path,
//! and a 2-connected non-bipartite block offers both parities.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::BlockDecomposition;
use crate::digraph::UnderlyingGraph;

struct Edge {
    to: usize,
    cap: usize,
}

struct Network {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            edges: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        self.adj[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    /// One shortest augmenting path of one unit; false when none is left.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.adj[x] {
                let y = self.edges[e].to;
                if self.edges[e].cap > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut y = t;
        while y != s {
            let e = via[y];
            self.edges[e].cap -= 1;
            self.edges[e ^ 1].cap += 1;
            y = self.edges[e ^ 1].to;
        }
        true
    }
}

/// `count` paths starting at the given sources (a source may start several
/// paths if listed with a larger multiplicity) and ending at pairwise
/// distinct targets. Paths are internally disjoint, use only `allowed`
/// vertices and stop at the first target they meet. A source that is a
/// target yields the one-vertex path.
pub(super) fn disjoint_paths(
    g: &UnderlyingGraph,
    allowed: &[bool],
    sources: &[(usize, usize)],
    targets: &[usize],
    count: usize,
) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut is_target = vec![false; n];
    for &x in targets {
        is_target[x] = true;
    }
    let mut capacity = vec![1; n];
    for &(x, k) in sources {
        capacity[x] = k;
    }
    let mut net = Network::new(2 * n + 2);
    for x in 0..n {
        if !allowed[x] {
            continue;
        }
        if is_target[x] {
            net.add(2 * x, t, 1);
            continue;
        }
        net.add(2 * x, 2 * x + 1, capacity[x]);
        for &y in g.neighbors(x) {
            if allowed[y] {
                net.add(2 * x + 1, 2 * y, 1);
            }
        }
    }
    for &(x, k) in sources {
        net.add(s, 2 * x, k);
    }
    for _ in 0..count {
        if !net.augment(s, t) {
            return None;
        }
    }

    // Flow on an original edge = capacity moved to its reverse twin.
    let mut flow: Vec<usize> = (0..net.edges.len())
        .map(|e| if e % 2 == 0 { net.edges[e + 1].cap } else { 0 })
        .collect();
    let mut paths = Vec::with_capacity(count);
    for _ in 0..count {
        let mut path = Vec::new();
        let mut node = s;
        while node != t {
            let e = net.adj[node]
                .iter()
                .copied()
                .find(|&e| e % 2 == 0 && flow[e] > 0)?;
            flow[e] -= 1;
            node = net.edges[e].to;
            if node < 2 * n && node % 2 == 0 {
                path.push(node / 2);
            }
        }
        paths.push(path);
    }
    Some(paths)
}

/// Shortest path from `a` to `b` inside `allowed`.
fn bfs_path(g: &UnderlyingGraph, allowed: &[bool], a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            if allowed[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    Some(path)
}

/// An odd cycle inside `allowed`, found from a breadth-first layering
/// started at `root`.
fn odd_cycle(g: &UnderlyingGraph, allowed: &[bool], root: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut order = Vec::new();
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in g.neighbors(x) {
            if allowed[y] && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let (x, y) = order
        .iter()
        .flat_map(|&x| g.neighbors(x).iter().map(move |&y| (x, y)))
        .find(|&(x, y)| allowed[y] && dist[x] == dist[y])?;
    let (mut left, mut right) = (vec![x], vec![y]);
    let (mut a, mut b) = (x, y);
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    Some(left)
}

/// A path from `x` to `y` with `len % 2 == parity` edges, inside a
/// 2-connected non-bipartite vertex set.
fn path_with_parity(
    g: &UnderlyingGraph,
    allowed: &[bool],
    x: usize,
    y: usize,
    parity: usize,
) -> Option<Vec<usize>> {
    let cycle = odd_cycle(g, allowed, x)?;
    let paths = disjoint_paths(g, allowed, &[(x, 1), (y, 1)], &cycle, 2)?;
    let (px, py) = if paths[0][0] == x {
        (&paths[0], &paths[1])
    } else {
        (&paths[1], &paths[0])
    };
    let a = *px.last()?;
    let b = *py.last()?;
    let len = cycle.len();
    let ia = cycle.iter().position(|&c| c == a)?;
    let ib = cycle.iter().position(|&c| c == b)?;
    let forward: Vec<usize> = (0..=(ib + len - ia) % len)
        .map(|k| cycle[(ia + k) % len])
        .collect();
    let backward: Vec<usize> = (0..=(ia + len - ib) % len)
        .map(|k| cycle[(ia + len - k) % len])
        .collect();
    let base = px.len() - 1 + py.len() - 1;
    let arc = if (base + forward.len() - 1) % 2 == parity {
        forward
    } else {
        backward
    };
    let mut path = px.clone();
    path.extend_from_slice(&arc[1..]);
    path.extend(py.iter().rev().skip(1));
    Some(path)
}

fn is_bipartite(g: &UnderlyingGraph, allowed: &[bool], root: usize) -> bool {
    odd_cycle(g, allowed, root).is_none()
}

/// A path from `a` to `b` with an even number of edges inside `allowed`.
fn even_path(g: &UnderlyingGraph, allowed: &[bool], a: usize, b: usize) -> Option<Vec<usize>> {
    let shortest = bfs_path(g, allowed, a, b)?;
    if (shortest.len() - 1) % 2 == 0 {
        return Some(shortest);
    }

    // Build the allowed subgraph and walk its block-cut tree from a to b.
    let n = g.vertex_count();
    let local_edges = (0..n)
        .filter(|&x| allowed[x])
        .flat_map(|x| g.neighbors(x).iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| allowed[y] && x < y);
    let sub = UnderlyingGraph::from_edges(n, local_edges);
    let bd = BlockDecomposition::from_underlying(&sub);
    let nb = bd.block_count();
    // Tree nodes: vertices 0..n, blocks n..n+nb.
    let mut parent = vec![usize::MAX; n + nb];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(node) = queue.pop_front() {
        let next: Vec<usize> = if node < n {
            bd.blocks_containing(node).iter().map(|&i| n + i).collect()
        } else {
            bd.block(node - n).to_vec()
        };
        for m in next {
            if parent[m] == usize::MAX {
                parent[m] = node;
                queue.push_back(m);
            }
        }
    }
    let mut chain = vec![b];
    let mut node = b;
    while node != a {
        node = parent[node];
        chain.push(node);
    }
    chain.reverse();

    // chain = a, B1, c1, B2, ..., Bk, b
    let mut pieces = Vec::new();
    let mut flexible = None;
    for k in (1..chain.len()).step_by(2) {
        let (x, block, y) = (chain[k - 1], chain[k] - n, chain[k + 1]);
        let mut inside = vec![false; n];
        for &v in bd.block(block) {
            inside[v] = true;
        }
        let piece = bfs_path(&sub, &inside, x, y)?;
        if flexible.is_none() && !is_bipartite(&sub, &inside, x) {
            flexible = Some((pieces.len(), inside, x, y));
        }
        pieces.push(piece);
    }
    let total: usize = pieces.iter().map(|p| p.len() - 1).sum();
    if total % 2 == 1 {
        let (idx, inside, x, y) = flexible?;
        let want = (pieces[idx].len() - 1 + 1) % 2;
        pieces[idx] = path_with_parity(&sub, &inside, x, y, want)?;
    }
    let mut path = vec![a];
    for piece in pieces {
        path.extend_from_slice(&piece[1..]);
    }
    Some(path)
}

/// An even cycle `[v, c1, ..., c_{L-1}]` such that `v` is adjacent to no
/// cycle vertex other than `c1` and `c_{L-1}`.
pub(super) fn even_cycle_with_free_vertex(g: &UnderlyingGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nv = g.neighbors(v);
        for (ia, &a) in nv.iter().enumerate() {
            for &b in &nv[ia + 1..] {
                let mut allowed = vec![true; n];
                allowed[v] = false;
                for &x in nv {
                    if x != a && x != b {
                        allowed[x] = false;
                    }
                }
                if let Some(path) = even_path(g, &allowed, a, b) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}
