//! The top-level loop: slack check, end-block detachment, reassembly.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::greedy::{greedy_fill, greedy_minus};
use super::shift::Budget;
use super::{
    addable_class, check_degree_condition, class_degrees, BlockOutcome, ComponentOutcome,
    ComponentResult, Engine, EngineError, InternalFailure, ShiftState, SolveOutcome,
};
use crate::blocks::BlockDecomposition;
use crate::degeneracy::{validate_partial, VectorFunction};
use crate::digraph::{components, Digraph};
use crate::hard_pair::{
    assemble_certificate, validate_certificate, CertificateBlock, HardPairCertificate, PeeledBlock,
};

enum Connected {
    Partition(Vec<usize>),
    Hard(HardPairCertificate),
}

/// A hard block removed from the digraph, kept for reassembly.
struct Detached {
    vertices: Vec<usize>,
    cut: usize,
    function: VectorFunction,
    block: CertificateBlock,
}

impl Engine {
    /// Solves every component of `D`. Partitions are validated and
    /// certificates checked before they are returned.
    pub fn solve(&mut self, d: &Digraph, f: &VectorFunction) -> Result<SolveOutcome, EngineError> {
        check_degree_condition(d, f)?;
        let mut out = Vec::new();
        for comp in components(d) {
            let sub = d
                .induced_subdigraph(&comp)
                .expect("component vertices in range");
            let local_f = f.restrict(&comp);
            let result = match self.solve_connected(&sub.graph, &local_f)? {
                Connected::Partition(classes) => {
                    let colors: Vec<Option<usize>> = classes.iter().map(|&c| Some(c)).collect();
                    validate_partial(&sub.graph, &local_f, &colors)
                        .map_err(InternalFailure::InvalidResult)?;
                    ComponentResult::Partition(classes)
                }
                Connected::Hard(cert) => {
                    let cert = cert.relabel(|x| comp[x]);
                    if validate_certificate(d, f, &cert).is_err() {
                        return Err(InternalFailure::Unreachable(
                            "produced certificate does not validate",
                        )
                        .into());
                    }
                    ComponentResult::Hard(cert)
                }
            };
            out.push(ComponentOutcome {
                vertices: comp,
                result,
            });
        }
        Ok(SolveOutcome {
            p: f.p(),
            vertex_count: d.vertex_count(),
            components: out,
        })
    }

    fn solve_connected(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
    ) -> Result<Connected, EngineError> {
        let n = d.vertex_count();
        let p = f.p();
        if let Some(root) = (0..n).find(|&v| f.sum(v) > d.min_degree_at(v)) {
            let mut colors = vec![None; n];
            greedy_fill(d, f, &vec![true; n], root, &mut colors)?;
            return Ok(Connected::Partition(finish(colors)?));
        }

        // From here on sum f(v) = d+(v) = d-(v) for every vertex.
        let mut alive = vec![true; n];
        let mut current = f.clone();
        let mut detached: Vec<Detached> = Vec::new();
        let mut colors = loop {
            let verts: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            let sub = d.induced_subdigraph(&verts).expect("in range");
            let g = current.restrict(&verts);
            let bd = BlockDecomposition::new(&sub.graph);

            if bd.block_count() == 1 {
                match self.block_unchecked(&sub.graph, &g)? {
                    BlockOutcome::Partition(part) => {
                        let mut colors = vec![None; n];
                        for (k, &x) in verts.iter().enumerate() {
                            colors[x] = Some(part.class(k));
                        }
                        break colors;
                    }
                    BlockOutcome::Hard(kind) => {
                        let mut peeled: Vec<PeeledBlock> = detached
                            .into_iter()
                            .map(|x| PeeledBlock {
                                block: x.block,
                                cut: Some(x.cut),
                            })
                            .collect();
                        let last = CertificateBlock {
                            vertices: verts,
                            function: g,
                            kind,
                        };
                        peeled.push(PeeledBlock {
                            block: last,
                            cut: None,
                        });
                        return Ok(Connected::Hard(assemble_certificate(p, peeled)));
                    }
                }
            }

            let (bi, cut_local) = bd
                .detachable_end_block()
                .expect("a block tree has an end-block");
            let block_local = bd.block(bi).to_vec();
            let mut state = ShiftState {
                uncolored: cut_local,
                colors: greedy_minus(&sub.graph, &g, cut_local)?,
            };
            let widen = |local: &[Option<usize>]| {
                let mut colors = vec![None; n];
                for (k, &x) in verts.iter().enumerate() {
                    colors[x] = local[k];
                }
                colors
            };
            if let Some(i) = addable_class(&sub.graph, &g, &state.colors, cut_local) {
                state.colors[cut_local] = Some(i);
                break widen(&state.colors);
            }

            let mut in_block = vec![false; verts.len()];
            for &x in &block_local {
                in_block[x] = true;
            }
            let block_colors: Vec<Option<usize>> = state
                .colors
                .iter()
                .enumerate()
                .map(|(x, &c)| if in_block[x] { c } else { None })
                .collect();
            let split = class_degrees(&sub.graph, p, &block_colors, cut_local);
            if let Some(class) = split.iter().position(|&(o, i)| o != i) {
                self.repair_split(&sub.graph, &g, &mut state, class)?;
                break widen(&state.colors);
            }

            let block = sub
                .graph
                .induced_subdigraph(&block_local)
                .expect("in range")
                .graph;
            let cut_pos = block_local.binary_search(&cut_local).expect("cut in block");
            let mut g_block = g.restrict(&block_local);
            let cut_value: Vec<usize> = split.iter().map(|&(o, _)| o).collect();
            g_block.set(cut_pos, &cut_value);
            match self.block_unchecked(&block, &g_block)? {
                BlockOutcome::Partition(part) => {
                    for (k, &x) in block_local.iter().enumerate() {
                        state.colors[x] = Some(part.class(k));
                    }
                    break widen(&state.colors);
                }
                BlockOutcome::Hard(kind) => {
                    let vertices: Vec<usize> = block_local.iter().map(|&x| verts[x]).collect();
                    let cut = verts[cut_local];
                    for (have, take) in current.get_mut(cut).iter_mut().zip(&cut_value) {
                        *have -= take;
                    }
                    for &x in &vertices {
                        if x != cut {
                            alive[x] = false;
                        }
                    }
                    let block = CertificateBlock {
                        vertices: vertices.clone(),
                        function: g_block.clone(),
                        kind,
                    };
                    detached.push(Detached {
                        vertices,
                        cut,
                        function: g_block,
                        block,
                    });
                }
            }
        };

        // Blocks detached before the one that got partitioned are hard, so
        // the function is tight at their cut vertex and a greedy colouring
        // of the block minus the cut vertex extends the partition.
        for piece in detached.iter().rev() {
            let block = d
                .induced_subdigraph(&piece.vertices)
                .expect("in range")
                .graph;
            let cut_pos = piece
                .vertices
                .binary_search(&piece.cut)
                .expect("cut in block");
            let local = greedy_minus(&block, &piece.function, cut_pos)?;
            for (k, &x) in piece.vertices.iter().enumerate() {
                if k != cut_pos {
                    colors[x] = local[k];
                }
            }
        }
        Ok(Connected::Partition(finish(colors)?))
    }

    /// The uncoloured cut vertex `v` cannot be added, yet its class-`class`
    /// neighbours inside the end-block are unbalanced. Then the component
    /// of `D[D_class + v]` containing `v` has a vertex `x` whose in- or
    /// out-degree there differs from `f_class(x)`. Shifting along a path to
    /// `x` inside that component keeps class `class` equal to the component
    /// minus the uncoloured vertex, so `x` becomes addable at the latest.
    fn repair_split(
        &mut self,
        d: &Digraph,
        f: &VectorFunction,
        state: &mut ShiftState,
        class: usize,
    ) -> Result<(), EngineError> {
        let n = d.vertex_count();
        let v = state.uncolored;
        let member: Vec<bool> = (0..n)
            .map(|x| x == v || state.colors[x] == Some(class))
            .collect();
        let mut parent = vec![usize::MAX; n];
        parent[v] = v;
        let mut queue = VecDeque::from([v]);
        let mut target = None;
        while let Some(x) = queue.pop_front() {
            let out = d.out_neighbors(x).iter().filter(|&&y| member[y]).count();
            let inn = d.in_neighbors(x).iter().filter(|&&y| member[y]).count();
            let fx = f.get(x)[class];
            if x != v && (out != fx || inn != fx) {
                target = Some(x);
                break;
            }
            for &y in d.out_neighbors(x).iter().chain(d.in_neighbors(x)) {
                if member[y] && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let target = target.ok_or(InternalFailure::Unbalanced { vertex: v, class })?;
        let mut path = vec![target];
        let mut x = target;
        while x != v {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        self.stats.split_repairs += 1;
        let mut budget = Budget::new("split repair", path.len());
        for &next in &path[1..] {
            if self.shift_step(d, f, state, next)? {
                self.note_run(budget.used);
                return Ok(());
            }
            budget.tick()?;
        }
        self.note_run(budget.used);
        let i = addable_class(d, f, &state.colors, target).ok_or(InternalFailure::Unbalanced {
            vertex: target,
            class,
        })?;
        state.colors[target] = Some(i);
        Ok(())
    }
}

fn finish(colors: Vec<Option<usize>>) -> Result<Vec<usize>, EngineError> {
    colors
        .into_iter()
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| InternalFailure::Unreachable("a vertex was left uncoloured").into())
}
