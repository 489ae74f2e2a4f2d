//! Greedy colouring from a vertex with slack.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    check_degree_condition, class_degrees, complete_colors, Engine, EngineError, InternalFailure,
};
use crate::degeneracy::{Partition, VectorFunction};
use crate::digraph::{bfs_order, Digraph};

/// Colours the vertices reachable from `root` inside `scope`, in reverse
/// breadth-first order so every vertex still has an uncoloured neighbour
/// when it is coloured, except `root` which relies on its slack.
pub(super) fn greedy_fill(
    d: &Digraph,
    f: &VectorFunction,
    scope: &[bool],
    root: usize,
    colors: &mut [Option<usize>],
) -> Result<(), EngineError> {
    let order = bfs_order(
        d.vertex_count(),
        root,
        |v| d.out_neighbors(v).iter().chain(d.in_neighbors(v)).copied(),
        |w| scope[w],
    );
    for &x in order.iter().rev() {
        let fx = f.get(x);
        let deg = class_degrees(d, f.p(), colors, x);
        let class = (0..f.p())
            .find(|&j| fx[j] > deg[j].0.min(deg[j].1))
            .ok_or(InternalFailure::GreedyStuck(x))?;
        colors[x] = Some(class);
    }
    Ok(())
}

impl Engine {
    /// Colours a connected digraph greedily, finishing at `root`, which must
    /// have slack: `sum f(root) > min(d+(root), d-(root))`.
    pub fn greedy_partition(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
        root: usize,
    ) -> Result<Partition, EngineError> {
        check_degree_condition(d, f)?;
        if root >= d.vertex_count() || !d.is_connected() {
            return Err(EngineError::Precondition(
                "digraph must be connected and contain the root",
            ));
        }
        if f.sum(root) <= d.min_degree_at(root) {
            return Err(EngineError::Precondition("the root has no slack"));
        }
        let mut colors = vec![None; d.vertex_count()];
        greedy_fill(d, f, &vec![true; d.vertex_count()], root, &mut colors)?;
        complete_colors(colors, f.p())
    }

    /// Colours `D - v` greedily, one component at a time. Each component
    /// starts from its smallest vertex adjacent to `v` that has slack in
    /// `D - v`. The entry for `v` stays `None`.
    pub fn greedy_partition_minus(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
        v: usize,
    ) -> Result<Vec<Option<usize>>, EngineError> {
        check_degree_condition(d, f)?;
        if v >= d.vertex_count() || !d.is_connected() {
            return Err(EngineError::Precondition(
                "digraph must be connected and contain v",
            ));
        }
        greedy_minus(d, f, v)
    }
}

/// [`Engine::greedy_partition_minus`] without input checks.
pub(super) fn greedy_minus(
    d: &Digraph,
    f: &VectorFunction,
    v: usize,
) -> Result<Vec<Option<usize>>, EngineError> {
    let n = d.vertex_count();
    let mut scope = vec![true; n];
    scope[v] = false;
    let mut colors = vec![None; n];
    let slack = |x: usize| {
        let out = d.out_degree(x) - usize::from(d.has_arc(x, v));
        let inn = d.in_degree(x) - usize::from(d.has_arc(v, x));
        f.sum(x) > out.min(inn)
    };
    let mut done = vec![false; n];
    done[v] = true;
    for start in 0..n {
        if done[start] {
            continue;
        }
        let comp: Vec<usize> = bfs_order(
            n,
            start,
            |x| d.out_neighbors(x).iter().chain(d.in_neighbors(x)).copied(),
            |w| scope[w],
        );
        for &x in &comp {
            done[x] = true;
        }
        let mut sorted = comp.clone();
        sorted.sort_unstable();
        let adjacent = |x: &&usize| d.has_arc(**x, v) || d.has_arc(v, **x);
        let root = sorted
            .iter()
            .filter(adjacent)
            .find(|&&x| slack(x))
            .or_else(|| sorted.iter().find(|&&x| slack(x)))
            .copied()
            .ok_or(EngineError::Precondition(
                "a component of D - v has no vertex with slack",
            ))?;
        greedy_fill(d, f, &scope, root, &mut colors)?;
    }
    Ok(colors)
}
