//! Partitioning a single Eulerian block.

use alloc::vec;
use alloc::vec::Vec;

use super::greedy::greedy_minus;
use super::paths::{disjoint_paths, even_cycle_with_free_vertex};
use super::shift::Budget;
use super::{
    addable_class, check_block, check_tight, complete_colors, BlockOutcome, Engine, EngineError,
    InternalFailure, ShiftState,
};
use crate::degeneracy::{Partition, VectorFunction};
use crate::digraph::{Digraph, UnderlyingGraph};
use crate::hard_pair::check_block_type;

impl Engine {
    /// Partitions an Eulerian block `B` with `sum g(v) = d+(v) = d-(v)`, or
    /// reports the type of hard pair it forms.
    pub fn block_partition(
        &mut self,
        d: &Digraph,
        g: &VectorFunction,
    ) -> Result<BlockOutcome, EngineError> {
        check_tight(d, g)?;
        check_block(d)?;
        self.block_unchecked(d, g)
    }

    pub(super) fn block_unchecked(
        &mut self,
        d: &Digraph,
        g: &VectorFunction,
    ) -> Result<BlockOutcome, EngineError> {
        if let Some(kind) = check_block_type(d, g)? {
            return Ok(BlockOutcome::Hard(kind));
        }
        let ug = d.underlying();
        let partition = if ug.is_cycle() {
            self.cycle_unchecked(d, g)?
        } else if ug.is_complete() {
            self.complete_unchecked(d, g)?
        } else {
            self.general_block(d, g, &ug)?
        };
        Ok(BlockOutcome::Partition(partition))
    }

    /// Blocks that are neither cycles nor complete. Such a block has an even
    /// cycle `C` through a vertex `v` with no chord at `v`. After a greedy
    /// colouring of `B - v`, shifting along an auxiliary cycle first gives
    /// the two `C`-neighbours of `v` different classes; shifting around `C`
    /// then ends with `v` addable.
    fn general_block(
        &mut self,
        d: &Digraph,
        g: &VectorFunction,
        ug: &UnderlyingGraph,
    ) -> Result<Partition, EngineError> {
        let n = d.vertex_count();
        let p = g.p();
        let cycle = even_cycle_with_free_vertex(ug).ok_or(InternalFailure::Unreachable(
            "a block that is neither a cycle nor complete has an even cycle",
        ))?;
        let (v, w, u) = (cycle[0], cycle[1], cycle[cycle.len() - 1]);
        let mut state = ShiftState {
            uncolored: v,
            colors: greedy_minus(d, g, v)?,
        };
        if let Some(i) = addable_class(d, g, &state.colors, v) {
            state.colors[v] = Some(i);
            return complete_colors(state.colors, p);
        }

        let mut used = vec![false; p];
        for c in state.colors.iter().flatten() {
            used[*c] = true;
        }
        if used.iter().filter(|&&x| x).count() == 1 {
            let i = used.iter().position(|&x| x).expect("one class in use");
            let (x, j) = (0..n)
                .filter(|&x| x != v)
                .flat_map(|x| (0..p).map(move |j| (x, j)))
                .find(|&(x, j)| j != i && g.get(x)[j] > 0)
                .ok_or(InternalFailure::Unreachable(
                    "single-class pair should be hard",
                ))?;
            state.colors[x] = Some(j);
        }

        let cap = Engine::shift_cap(n, p);
        if state.colors[u] == state.colors[w] {
            let z = (0..n)
                .find(|&z| state.colors[z].is_some() && state.colors[z] != state.colors[u])
                .ok_or(InternalFailure::Unreachable("two classes are in use"))?;
            let aux = auxiliary_cycle(ug, v, u, w, z).ok_or(InternalFailure::Unreachable(
                "a block has a fan from z to three vertices",
            ))?;
            let mut budget = Budget::new("general block, auxiliary cycle", cap);
            loop {
                if state.uncolored == v && state.colors[u] != state.colors[w] {
                    self.note_run(budget.used);
                    break;
                }
                let at = aux.iter().position(|&x| x == state.uncolored).ok_or(
                    InternalFailure::Unreachable("uncoloured vertex left the auxiliary cycle"),
                )?;
                if self.shift_step(d, g, &mut state, aux[(at + 1) % aux.len()])? {
                    self.note_run(budget.used);
                    return complete_colors(state.colors, p);
                }
                budget.tick()?;
            }
        }

        let mut budget = Budget::new("general block, even cycle", cap);
        self.shift_around(d, g, &mut state, &cycle, &mut budget)?;
        complete_colors(state.colors, p)
    }
}

/// A cycle through `z` and `v` that uses the edge `vu` or `vw`, returned
/// starting at `v`. It joins two internally disjoint paths from `z` to two
/// of `u, v, w` whose inner vertices avoid all three.
fn auxiliary_cycle(
    g: &UnderlyingGraph,
    v: usize,
    u: usize,
    w: usize,
    z: usize,
) -> Option<Vec<usize>> {
    let allowed = vec![true; g.vertex_count()];
    let paths = disjoint_paths(g, &allowed, &[(z, 2)], &[u, v, w], 2)?;
    let (first, second) = (&paths[0], &paths[1]);
    let (e1, e2) = (*first.last()?, *second.last()?);
    let mut cycle = first.clone();
    if e1 != v && e2 != v {
        cycle.push(v);
    }
    cycle.extend(second.iter().rev().take(second.len() - 1));
    let at = cycle.iter().position(|&x| x == v)?;
    cycle.rotate_left(at);
    Some(cycle)
}
