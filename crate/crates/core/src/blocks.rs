//! Blocks (maximal subdigraphs without a separating vertex) and the
//! block-cut structure.
//!
//! Blocks are computed on the underlying graph with the usual lowpoint DFS,
//! run iteratively so deep digraphs do not exhaust the stack. An isolated
//! vertex forms a block on its own.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{Digraph, UnderlyingGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
    blocks_of: Vec<Vec<usize>>,
}

struct Frame {
    v: usize,
    parent: usize,
    next: usize,
}

impl BlockDecomposition {
    pub fn new(d: &Digraph) -> Self {
        BlockDecomposition::from_underlying(&d.underlying())
    }

    /// Blocks of an undirected graph.
    pub fn from_underlying(g: &UnderlyingGraph) -> Self {
        let n = g.vertex_count();
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut stack: Vec<Frame> = Vec::new();

        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            if g.degree(root) == 0 {
                blocks.push(vec![root]);
                continue;
            }
            stack.push(Frame {
                v: root,
                parent: UNSEEN,
                next: 0,
            });
            while let Some(frame) = stack.last_mut() {
                let v = frame.v;
                if let Some(&w) = g.neighbors(v).get(frame.next) {
                    frame.next += 1;
                    if disc[w] == UNSEEN {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        edges.push((v, w));
                        stack.push(Frame {
                            v: w,
                            parent: v,
                            next: 0,
                        });
                    } else if w != frame.parent && disc[w] < disc[v] {
                        edges.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                    continue;
                }
                stack.pop();
                let Some(parent) = stack.last() else { continue };
                let u = parent.v;
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edges.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }

        blocks.sort();
        let mut blocks_of = vec![Vec::new(); n];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                blocks_of[v].push(i);
            }
        }
        BlockDecomposition { blocks, blocks_of }
    }

    /// Blocks as sorted vertex lists, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_containing(&self, v: usize) -> &[usize] {
        &self.blocks_of[v]
    }

    /// A vertex is separating iff it lies in at least two blocks.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.blocks_of[v].len() >= 2
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (0..self.blocks_of.len())
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Cut vertices lying in block `i`.
    pub fn cut_vertices_of(&self, i: usize) -> Vec<usize> {
        self.blocks[i]
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    /// Blocks containing at most one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.cut_vertices_of(i).len() <= 1)
            .collect()
    }

    /// Edges of the block-cut tree as `(block, cut vertex)` pairs.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, bs) in self.blocks_of.iter().enumerate() {
            if bs.len() >= 2 {
                out.extend(bs.iter().map(|&b| (b, v)));
            }
        }
        out.sort_unstable();
        out
    }

    /// Within one component with at least two blocks, the end-block used for
    /// detachment: the one containing the smallest vertex that is not a cut
    /// vertex, together with its cut vertex.
    pub fn detachable_end_block(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in self.end_blocks() {
            let cuts = self.cut_vertices_of(i);
            let [cut] = cuts[..] else { continue };
            let key = self.blocks[i].iter().copied().find(|&v| v != cut)?;
            if best.is_none_or(|(k, _, _)| key < k) {
                best = Some((key, i, cut));
            }
        }
        best.map(|(_, i, cut)| (i, cut))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangles_sharing_a_vertex() {
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let bd = BlockDecomposition::new(&d);
        assert_eq!(bd.blocks(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bd.cut_vertices(), vec![2]);
        assert_eq!(bd.detachable_end_block(), Some((0, 2)));
    }

    #[test]
    fn complete_is_one_block() {
        let bd = BlockDecomposition::new(&Digraph::bidirected_complete(4));
        assert_eq!(bd.block_count(), 1);
        assert!(bd.cut_vertices().is_empty());
    }

    #[test]
    fn path_and_isolated_vertex() {
        let d = Digraph::from_arcs(4, [(0, 1), (2, 1)]).unwrap();
        let bd = BlockDecomposition::new(&d);
        assert_eq!(bd.blocks(), &[vec![0, 1], vec![1, 2], vec![3]]);
        assert_eq!(bd.cut_vertices(), vec![1]);
        assert_eq!(bd.tree_edges(), vec![(0, 1), (1, 1)]);
    }
}
