//! Blocks whose underlying graph is complete.

use alloc::vec;

use super::greedy::greedy_minus;
use super::shift::Budget;
use super::{
    addable_class, check_block, check_tight, complete_colors, Engine, EngineError, InternalFailure,
    ShiftState,
};
use crate::degeneracy::{Partition, VectorFunction};
use crate::digraph::Digraph;
use crate::hard_pair::check_block_type;

impl Engine {
    /// Partitions a non-hard Eulerian block whose underlying graph is
    /// complete.
    pub fn complete_partition(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
    ) -> Result<Partition, EngineError> {
        check_tight(d, f)?;
        check_block(d)?;
        if !d.underlying().is_complete() {
            return Err(EngineError::Precondition(
                "underlying graph must be complete",
            ));
        }
        if check_block_type(d, f)?.is_some() {
            return Err(EngineError::Precondition("the pair is hard"));
        }
        self.complete_unchecked(d, f)
    }

    pub(super) fn complete_unchecked(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
    ) -> Result<Partition, EngineError> {
        let n = d.vertex_count();
        let p = f.p();
        let one_way = d.arcs().find(|&(v, u)| !d.has_arc(u, v));
        let Some((v, u)) = one_way else {
            return self.bidirected_complete(d, f);
        };

        let mut state = ShiftState {
            uncolored: v,
            colors: greedy_minus(d, f, v)?,
        };
        if let Some(i) = addable_class(d, f, &state.colors, v) {
            state.colors[v] = Some(i);
            return complete_colors(state.colors, p);
        }

        let mut used = vec![false; p];
        for c in state.colors.iter().flatten() {
            used[*c] = true;
        }
        if used.iter().filter(|&&x| x).count() == 1 {
            let i = used.iter().position(|&x| x).expect("one class in use");
            // v itself would have been addable to an empty class, so the
            // vertex found here is never v.
            let (w, j) = (0..n)
                .flat_map(|w| (0..p).map(move |j| (w, j)))
                .find(|&(w, j)| j != i && f.get(w)[j] > 0)
                .ok_or(InternalFailure::Unreachable(
                    "single-class pair should be hard",
                ))?;
            state.colors[v] = Some(i);
            state.colors[w] = Some(j);
            return complete_colors(state.colors, p);
        }

        let i = state.colors[u].expect("u is coloured");
        let w = (0..n)
            .find(|&w| state.colors[w].is_some_and(|c| c != i))
            .ok_or(InternalFailure::Unreachable("two classes are in use"))?;
        let triangle = [v, u, w];
        let mut budget = Budget::new("complete partition", Engine::shift_cap(n, p));
        self.shift_around(d, f, &mut state, &triangle, &mut budget)?;
        complete_colors(state.colors, p)
    }

    /// The bidirected case. With class sizes `n_i` from a greedy colouring
    /// of `D - v`, a class `i` with `f_i(v) > n_i` or containing a vertex `w`
    /// with `f_i(w) > n_i` can take `v`. Otherwise some `w` of class `i` has
    /// `f_j(w) > n_j` for another `j`; `w` moves to `j` and `v` takes its
    /// place.
    fn bidirected_complete(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
    ) -> Result<Partition, EngineError> {
        let n = d.vertex_count();
        let p = f.p();
        let v = 0;
        let mut colors = greedy_minus(d, f, v)?;
        let mut sizes = vec![0; p];
        for c in colors.iter().flatten() {
            sizes[*c] += 1;
        }
        let fv = f.get(v);
        if let Some(i) = (0..p).find(|&i| fv[i] > sizes[i]) {
            colors[v] = Some(i);
            return complete_colors(colors, p);
        }
        let roomy = (0..n).find_map(|w| colors[w].filter(|&i| f.get(w)[i] > sizes[i]));
        if let Some(i) = roomy {
            colors[v] = Some(i);
            return complete_colors(colors, p);
        }
        let (w, j) = (0..n)
            .filter_map(|w| colors[w].map(|i| (w, i)))
            .flat_map(|(w, i)| (0..p).filter(move |&j| j != i).map(move |j| (w, j)))
            .find(|&(w, j)| f.get(w)[j] > sizes[j])
            .ok_or(InternalFailure::Unreachable(
                "bidirected complete pair should be hard",
            ))?;
        colors[v] = colors[w];
        colors[w] = Some(j);
        complete_colors(colors, p)
    }
}
