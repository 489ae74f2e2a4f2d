//! Blocks whose underlying graph is a cycle.

use alloc::vec::Vec;

use super::greedy::greedy_minus;
use super::shift::Budget;
use super::{check_block, check_tight, complete_colors, Engine, EngineError, ShiftState};
use crate::degeneracy::{Partition, VectorFunction};
use crate::digraph::Digraph;
use crate::hard_pair::check_block_type;

impl Engine {
    /// Partitions a non-hard Eulerian block whose underlying graph is a
    /// cycle. Shifting starts between two neighbours with different
    /// function values when such a pair exists, which bounds the loop by
    /// `length + 1` steps.
    pub fn cycle_partition(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
    ) -> Result<Partition, EngineError> {
        check_tight(d, f)?;
        check_block(d)?;
        if !d.underlying().is_cycle() {
            return Err(EngineError::Precondition(
                "underlying graph must be a cycle",
            ));
        }
        if check_block_type(d, f)?.is_some() {
            return Err(EngineError::Precondition("the pair is hard"));
        }
        self.cycle_unchecked(d, f)
    }

    pub(super) fn cycle_unchecked(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
    ) -> Result<Partition, EngineError> {
        let g = d.underlying();
        let n = d.vertex_count();
        // An even bidirected cycle with constant f has no differing pair; any
        // start works there.
        let (v, w) = (0..n)
            .flat_map(|v| g.neighbors(v).iter().map(move |&w| (v, w)))
            .find(|&(v, w)| f.get(v) != f.get(w))
            .unwrap_or((0, g.neighbors(0)[0]));
        let cycle = cycle_order(&g, v, w);
        let mut state = ShiftState {
            uncolored: v,
            colors: greedy_minus(d, f, v)?,
        };
        let mut budget = Budget::new("cycle partition", Engine::shift_cap(n, f.p()));
        self.shift_around(d, f, &mut state, &cycle, &mut budget)?;
        complete_colors(state.colors, f.p())
    }
}

/// The cycle's vertices starting `v, w, ...`.
fn cycle_order(g: &crate::digraph::UnderlyingGraph, v: usize, w: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.vertex_count());
    order.push(v);
    let (mut prev, mut cur) = (v, w);
    while cur != v {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&x| x != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
    }
    order
}
