//! Shifting: moving the single uncoloured vertex to a neighbour.
//!
//! With a valid partition of `D - v`, either `v` can join some class
//! directly, or every class `i` sees `v` with exactly `f_i(v)` in- and
//! out-neighbours. In the second case `v` may take the class of any
//! neighbour `w`, which then becomes the uncoloured vertex, and the result is
//! again a valid partition of `D - w`.

use alloc::vec::Vec;

use super::{
    addable_class, check_degree_condition, class_degrees, complete_colors, Engine, EngineError,
    InternalFailure,
};
use crate::degeneracy::{validate_partial, Partition, VectorFunction};
use crate::digraph::Digraph;

/// A partition of `D - uncolored`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftState {
    pub uncolored: usize,
    /// `colors[uncolored]` is `None`, every other entry is `Some`.
    pub colors: Vec<Option<usize>>,
}

impl ShiftState {
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }
}

/// Tracks the length of one shifting loop against its cap.
pub(super) struct Budget {
    pub context: &'static str,
    pub cap: usize,
    pub used: usize,
}

impl Budget {
    pub fn new(context: &'static str, cap: usize) -> Self {
        Budget {
            context,
            cap,
            used: 0,
        }
    }

    pub fn tick(&mut self) -> Result<(), EngineError> {
        self.used += 1;
        if self.used > self.cap {
            Err(InternalFailure::ShiftCap {
                context: self.context,
                cap: self.cap,
            }
            .into())
        } else {
            Ok(())
        }
    }
}

impl Engine {
    /// One shifting step with input validation. Returns the full partition
    /// when the uncoloured vertex could be added, otherwise moves it to `w`
    /// and returns `None`.
    pub fn shift(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
        state: &mut ShiftState,
        w: usize,
    ) -> Result<Option<Partition>, EngineError> {
        check_degree_condition(d, f)?;
        let v = state.uncolored;
        let n = d.vertex_count();
        let shape_ok = state.colors.len() == n
            && v < n
            && state.colors[v].is_none()
            && state
                .colors
                .iter()
                .enumerate()
                .all(|(x, c)| x == v || c.is_some_and(|c| c < f.p()));
        if !shape_ok {
            return Err(EngineError::Precondition(
                "state must colour every vertex except the uncoloured one",
            ));
        }
        if w >= n || !(d.has_arc(v, w) || d.has_arc(w, v)) {
            return Err(EngineError::Precondition(
                "w must be a neighbour of the uncoloured vertex",
            ));
        }
        validate_partial(d, f, &state.colors).map_err(EngineError::InvalidPartition)?;
        if self.shift_step(d, f, state, w)? {
            Ok(Some(complete_colors(state.colors.clone(), f.p())?))
        } else {
            Ok(None)
        }
    }

    /// Adds the uncoloured vertex if possible (returns `true`), otherwise
    /// swaps it with `w`.
    pub(super) fn shift_step(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
        state: &mut ShiftState,
        w: usize,
    ) -> Result<bool, EngineError> {
        let v = state.uncolored;
        if let Some(i) = addable_class(d, f, &state.colors, v) {
            state.colors[v] = Some(i);
            return Ok(true);
        }
        let fv = f.get(v);
        for (class, (out, inn)) in class_degrees(d, f.p(), &state.colors, v)
            .into_iter()
            .enumerate()
        {
            if out != fv[class] || inn != fv[class] {
                return Err(InternalFailure::Unbalanced { vertex: v, class }.into());
            }
        }
        let class =
            state.colors[w].ok_or(InternalFailure::Unreachable("shift target is uncoloured"))?;
        state.colors[v] = Some(class);
        state.colors[w] = None;
        state.uncolored = w;
        self.stats.shifts += 1;
        if self.options.check_shift_states {
            validate_partial(d, f, &state.colors).map_err(InternalFailure::InvalidResult)?;
            self.stats.validated_states += 1;
        }
        Ok(false)
    }

    /// Shifts around `cycle` (a cyclic vertex order containing the
    /// uncoloured vertex) until the uncoloured vertex can be added.
    pub(super) fn shift_around(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
        state: &mut ShiftState,
        cycle: &[usize],
        budget: &mut Budget,
    ) -> Result<(), EngineError> {
        loop {
            let at = cycle.iter().position(|&x| x == state.uncolored).ok_or(
                InternalFailure::Unreachable("uncoloured vertex left the cycle"),
            )?;
            let next = cycle[(at + 1) % cycle.len()];
            if self.shift_step(d, f, state, next)? {
                self.note_run(budget.used);
                return Ok(());
            }
            budget.tick()?;
        }
    }

    pub(super) fn note_run(&mut self, used: usize) {
        self.stats.longest_shift_run = self.stats.longest_shift_run.max(used);
    }
}
