//! Random hard pairs for testing, built by gluing random `M`, `K` and `C`
//! blocks at single vertices.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    assemble_certificate, check_block_type, CertificateBlock, HardPairCertificate, PeeledBlock,
};
use crate::degeneracy::VectorFunction;
use crate::digraph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Number of colours.
    pub p: usize,
    /// Number of blocks to glue together.
    pub block_budget: usize,
    /// Upper bound on the number of vertices of the result.
    pub max_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("p must be at least 1")]
    NoColors,
    #[error("block budget must be at least 1")]
    NoBlocks,
    #[error("{blocks} blocks need at least {needed} vertices, limit is {limit}")]
    TooFewVertices {
        blocks: usize,
        needed: usize,
        limit: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedHardPair {
    pub digraph: Digraph,
    pub function: VectorFunction,
    pub certificate: HardPairCertificate,
}

/// A hard pair with `block_budget` blocks on at most ten vertices.
pub fn generate_hard_pair(
    seed: u64,
    p: usize,
    block_budget: usize,
) -> Result<GeneratedHardPair, GenerateError> {
    generate_hard_pair_with(
        seed,
        &GeneratorConfig {
            p,
            block_budget,
            max_vertices: 10,
        },
    )
}

/// A random hard pair; the same seed and configuration give the same pair.
pub fn generate_hard_pair_with(
    seed: u64,
    config: &GeneratorConfig,
) -> Result<GeneratedHardPair, GenerateError> {
    let GeneratorConfig {
        p,
        block_budget,
        max_vertices,
    } = *config;
    if p == 0 {
        return Err(GenerateError::NoColors);
    }
    if block_budget == 0 {
        return Err(GenerateError::NoBlocks);
    }
    if max_vertices < block_budget + 1 {
        return Err(GenerateError::TooFewVertices {
            blocks: block_budget,
            needed: block_budget + 1,
            limit: max_vertices,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 0;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    // Per block: global vertices (block-local order) and f_B rows.
    let mut blocks: Vec<(Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
    let mut merges: Vec<(usize, usize)> = Vec::new();

    for b in 0..block_budget {
        let later = block_budget - b - 1;
        let shared = usize::from(b > 0);
        let max_size = max_vertices - n - later + shared;
        let shape = random_shape(&mut rng, max_size, p);
        let rows = random_function(&mut rng, &shape, p);
        let shape_n = shape.size;

        let attach_local = rng.random_range(0..shape_n);
        let mut map = vec![0; shape_n];
        if b > 0 {
            let attach = rng.random_range(0..n);
            map[attach_local] = attach;
            let owner = blocks
                .iter()
                .position(|(vs, _)| vs.contains(&attach))
                .expect("vertex has a block");
            merges.push((attach, owner));
        }
        for (i, slot) in map.iter_mut().enumerate() {
            if b == 0 || i != attach_local {
                *slot = n;
                n += 1;
            }
        }
        arcs.extend(shape.arcs.iter().map(|&(u, v)| (map[u], map[v])));
        blocks.push((map, rows));
    }

    let digraph = Digraph::from_arcs(n, arcs).expect("glued blocks form a digraph");
    let mut function = VectorFunction::zeros(n, p);
    let mut peeled = Vec::new();
    for (vs, rows) in &blocks {
        for (&v, row) in vs.iter().zip(rows) {
            for (acc, x) in function.get_mut(v).iter_mut().zip(row) {
                *acc += x;
            }
        }
        let mut order: Vec<usize> = (0..vs.len()).collect();
        order.sort_by_key(|&i| vs[i]);
        let vertices: Vec<usize> = order.iter().map(|&i| vs[i]).collect();
        let block_fn = VectorFunction::new(p, order.iter().map(|&i| rows[i].clone()).collect())
            .expect("rows have length p");
        let graph = digraph
            .induced_subdigraph(&vertices)
            .expect("in range")
            .graph;
        let kind = check_block_type(&graph, &block_fn)
            .expect("shape matches")
            .expect("generated blocks are hard");
        peeled.push(PeeledBlock {
            block: CertificateBlock {
                vertices,
                function: block_fn,
                kind,
            },
            cut: None,
        });
    }
    let mut certificate = assemble_certificate(p, peeled);
    certificate.merges = merges
        .iter()
        .enumerate()
        .map(|(i, &(vertex, owner))| super::MergeEdge {
            vertex,
            blocks: (owner, i + 1),
        })
        .collect();
    Ok(GeneratedHardPair {
        digraph,
        function,
        certificate,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Mono,
    Complete,
    OddCycle,
}

struct Shape {
    kind: Kind,
    size: usize,
    arcs: Vec<(usize, usize)>,
}

/// Draws a block shape on at most `max_size >= 2` vertices.
fn random_shape(rng: &mut ChaCha8Rng, max_size: usize, p: usize) -> Shape {
    let mut kinds = vec![Kind::Mono];
    if p >= 2 && max_size >= 3 {
        kinds.extend([Kind::Complete, Kind::OddCycle]);
    }
    let kind = kinds[rng.random_range(0..kinds.len())];
    let max_size = max_size.min(7);
    match kind {
        Kind::Mono => {
            let size = rng.random_range(2..=max_size.min(5));
            let arcs = match rng.random_range(0..4) {
                1 if size >= 3 => bidirected(&cycle_edges(size)),
                2 => bidirected(&complete_edges(size)),
                3 if size >= 4 => {
                    let mut arcs = cycle_edges(size);
                    let k = rng.random_range(2..=size - 2);
                    arcs.extend([(0, k), (k, 0)]);
                    arcs
                }
                _ => cycle_edges(size),
            };
            Shape { kind, size, arcs }
        }
        Kind::Complete => {
            let size = rng.random_range(3..=max_size.min(5));
            Shape {
                kind,
                size,
                arcs: bidirected(&complete_edges(size)),
            }
        }
        Kind::OddCycle => {
            let options: Vec<usize> = [3, 5, 7].into_iter().filter(|&s| s <= max_size).collect();
            let size = options[rng.random_range(0..options.len())];
            Shape {
                kind,
                size,
                arcs: bidirected(&cycle_edges(size)),
            }
        }
    }
}

/// Draws the block function `f_B` fitting the shape's kind.
fn random_function(rng: &mut ChaCha8Rng, shape: &Shape, p: usize) -> Vec<Vec<usize>> {
    match shape.kind {
        Kind::Mono => {
            let j = rng.random_range(0..p);
            let mut out_deg = vec![0; shape.size];
            for &(u, _) in &shape.arcs {
                out_deg[u] += 1;
            }
            out_deg
                .into_iter()
                .map(|d| {
                    let mut row = vec![0; p];
                    row[j] = d;
                    row
                })
                .collect()
        }
        Kind::Complete => {
            let (a, b) = two_colors(rng, p);
            let mut sizes = vec![0; p];
            sizes[a] = 1;
            sizes[b] = 1;
            for _ in 0..shape.size - 3 {
                sizes[rng.random_range(0..p)] += 1;
            }
            vec![sizes; shape.size]
        }
        Kind::OddCycle => {
            let (a, b) = two_colors(rng, p);
            let mut row = vec![0; p];
            row[a] = 1;
            row[b] = 1;
            vec![row; shape.size]
        }
    }
}

fn two_colors(rng: &mut ChaCha8Rng, p: usize) -> (usize, usize) {
    let a = rng.random_range(0..p);
    let b = (a + rng.random_range(1..p)) % p;
    (a, b)
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn bidirected(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect()
}
