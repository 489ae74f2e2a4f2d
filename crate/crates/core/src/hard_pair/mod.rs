//! Hard pairs: the pairs `(D, f)` that satisfy the degree condition with
//! equality yet admit no f-partition.
//!
//! Every block of a hard pair carries its own function `f_B` and is of one
//! of three kinds:
//!
//! * `M`: an Eulerian block with `f_B(v) = d+(v) * e_j` for a fixed colour
//!   `j`;
//! * `K`: a bidirected complete digraph with a constant `f_B = (n_1, ..., n_p)`
//!   summing to `|B| - 1` with at least two non-zero entries;
//! * `C`: a bidirected odd cycle with `f_B` the constant indicator of two
//!   distinct colours.
//!
//! Larger hard pairs arise by gluing such blocks at single vertices and
//! adding their functions there. A [`HardPairCertificate`] lists the blocks
//! with their functions and records the gluing as a tree.

mod generate;

pub use generate::{
    generate_hard_pair, generate_hard_pair_with, GenerateError, GeneratedHardPair, GeneratorConfig,
};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::blocks::BlockDecomposition;
use crate::degeneracy::{FunctionError, VectorFunction};
use crate::digraph::{components, Digraph};

/// The kind of a hard block, with its parameters (0-based colours).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BlockType {
    /// Eulerian block whose function is concentrated on `color`.
    Mono { color: usize },
    /// Bidirected complete digraph with the constant function `sizes`.
    Complete { sizes: Vec<usize> },
    /// Bidirected odd cycle with the indicator of `colors` (ascending).
    OddCycle { colors: [usize; 2] },
}

impl BlockType {
    /// One-letter tag: `M`, `K` or `C`.
    pub fn tag(&self) -> char {
        match self {
            BlockType::Mono { .. } => 'M',
            BlockType::Complete { .. } => 'K',
            BlockType::OddCycle { .. } => 'C',
        }
    }
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockType::Mono { color } => write!(f, "M(j={})", color + 1),
            BlockType::Complete { sizes } => {
                write!(f, "K(n=")?;
                for (i, s) in sizes.iter().enumerate() {
                    write!(f, "{}{}", if i == 0 { "(" } else { "," }, s)?;
                }
                write!(f, "))")
            }
            BlockType::OddCycle { colors } => {
                write!(f, "C(k={},l={})", colors[0] + 1, colors[1] + 1)
            }
        }
    }
}

/// One block of a certificate. `function` is aligned with `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CertificateBlock {
    /// Vertices of the block in ascending order.
    pub vertices: Vec<usize>,
    pub function: VectorFunction,
    pub kind: BlockType,
}

impl CertificateBlock {
    /// `f_B(v)` for a vertex of the block.
    pub fn value_at(&self, v: usize) -> Option<&[usize]> {
        self.vertices
            .binary_search(&v)
            .ok()
            .map(|i| self.function.get(i))
    }
}

/// Records that `blocks.0` and `blocks.1` were glued at `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MergeEdge {
    pub vertex: usize,
    pub blocks: (usize, usize),
}

/// A witness that a connected `(D, f)` has no f-partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HardPairCertificate {
    pub p: usize,
    pub blocks: Vec<CertificateBlock>,
    /// Tree on the block indices; `blocks.len() - 1` edges.
    pub merges: Vec<MergeEdge>,
}

impl HardPairCertificate {
    /// Vertices covered by the certificate, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .blocks
            .iter()
            .flat_map(|b| b.vertices.iter().copied())
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Renames every vertex through `map`, keeping block vertex lists sorted.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut pairs: Vec<(usize, usize)> = b
                    .vertices
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (map(v), i))
                    .collect();
                pairs.sort_unstable();
                let vertices = pairs.iter().map(|&(v, _)| v).collect();
                let order: Vec<usize> = pairs.iter().map(|&(_, i)| i).collect();
                CertificateBlock {
                    vertices,
                    function: b.function.restrict(&order),
                    kind: b.kind.clone(),
                }
            })
            .collect();
        let merges = self
            .merges
            .iter()
            .map(|m| MergeEdge {
                vertex: map(m.vertex),
                blocks: m.blocks,
            })
            .collect();
        HardPairCertificate {
            p: self.p,
            blocks,
            merges,
        }
    }
}

/// A block peeled during recognition or solving, with the cut vertex it was
/// detached at (none for the last block).
pub(crate) struct PeeledBlock {
    pub block: CertificateBlock,
    pub cut: Option<usize>,
}

/// Builds the certificate from blocks listed in detachment order. Each
/// detached block is merged with the first later block containing its cut
/// vertex.
pub(crate) fn assemble_certificate(p: usize, peeled: Vec<PeeledBlock>) -> HardPairCertificate {
    let mut merges = Vec::new();
    for (i, leaf) in peeled.iter().enumerate() {
        if let Some(cut) = leaf.cut {
            let later = (i + 1..peeled.len())
                .find(|&j| peeled[j].block.vertices.binary_search(&cut).is_ok())
                .expect("cut vertex survives in a later block");
            merges.push(MergeEdge {
                vertex: cut,
                blocks: (i, later),
            });
        }
    }
    HardPairCertificate {
        p,
        blocks: peeled.into_iter().map(|l| l.block).collect(),
        merges,
    }
}

/// Errors from [`recognize_hard_pair`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HardPairError {
    #[error("digraph is not connected")]
    Disconnected,
    #[error(transparent)]
    Function(#[from] FunctionError),
}

fn check_shape(d: &Digraph, g: &VectorFunction) -> Result<(), FunctionError> {
    if g.len() != d.vertex_count() {
        return Err(FunctionError::VertexCountMismatch {
            expected: d.vertex_count(),
            found: g.len(),
        });
    }
    Ok(())
}

/// The non-zero coordinates of a vector.
fn support(x: &[usize]) -> impl Iterator<Item = usize> + '_ {
    x.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i)
}

fn constant_value(g: &VectorFunction) -> Option<&[usize]> {
    let first = g.get(0);
    g.rows().all(|r| r == first).then_some(first)
}

pub(crate) fn is_mono(b: &Digraph, g: &VectorFunction, color: usize) -> bool {
    b.is_eulerian()
        && (0..b.vertex_count()).all(|v| {
            g.get(v)
                .iter()
                .enumerate()
                .all(|(i, &x)| x == if i == color { b.out_degree(v) } else { 0 })
        })
}

fn is_complete_type(b: &Digraph, g: &VectorFunction, sizes: &[usize]) -> bool {
    let n = b.vertex_count();
    n >= 3
        && b.is_bidirected_complete()
        && sizes.iter().sum::<usize>() == n - 1
        && support(sizes).count() >= 2
        && g.rows().all(|r| r == sizes)
}

fn is_odd_cycle_type(b: &Digraph, g: &VectorFunction, colors: [usize; 2]) -> bool {
    colors[0] != colors[1]
        && b.is_bidirected_odd_cycle()
        && g.rows().all(|r| {
            r.iter()
                .enumerate()
                .all(|(i, &x)| x == usize::from(i == colors[0] || i == colors[1]))
        })
}

/// Whether `(b, g)` satisfies the equations of `kind`.
pub fn satisfies_type(b: &Digraph, g: &VectorFunction, kind: &BlockType) -> bool {
    if g.len() != b.vertex_count() || b.vertex_count() == 0 {
        return false;
    }
    match kind {
        BlockType::Mono { color } => *color < g.p() && is_mono(b, g, *color),
        BlockType::Complete { sizes } => sizes.len() == g.p() && is_complete_type(b, g, sizes),
        BlockType::OddCycle { colors } => {
            colors.iter().all(|&c| c < g.p()) && is_odd_cycle_type(b, g, *colors)
        }
    }
}

/// Classifies a block with its function as `M`, `K` or `C`, trying them in
/// that order, or returns `None` if it is not hard.
pub fn check_block_type(
    b: &Digraph,
    g: &VectorFunction,
) -> Result<Option<BlockType>, FunctionError> {
    check_shape(b, g)?;
    if b.vertex_count() == 0 {
        return Ok(None);
    }
    let mut colors = g.rows().flat_map(support);
    let color = colors.next().unwrap_or(0);
    if is_mono(b, g, color) {
        return Ok(Some(BlockType::Mono { color }));
    }
    let Some(value) = constant_value(g) else {
        return Ok(None);
    };
    if is_complete_type(b, g, value) {
        return Ok(Some(BlockType::Complete {
            sizes: value.to_vec(),
        }));
    }
    let sup: Vec<usize> = support(value).collect();
    if let [k, l] = sup[..] {
        if is_odd_cycle_type(b, g, [k, l]) {
            return Ok(Some(BlockType::OddCycle { colors: [k, l] }));
        }
    }
    Ok(None)
}

/// Decides whether a connected `(D, f)` is a hard pair, returning a
/// certificate if so.
///
/// End-blocks are detached one at a time. For a detached block the value
/// of `f_B` at its cut vertex is inferred from the other block vertices, the
/// block is type-checked, and `f_B` is subtracted at the cut vertex.
pub fn recognize_hard_pair(
    d: &Digraph,
    f: &VectorFunction,
) -> Result<Option<HardPairCertificate>, HardPairError> {
    check_shape(d, f)?;
    if !d.is_connected() {
        return Err(HardPairError::Disconnected);
    }
    let p = f.p();
    let mut alive = vec![true; d.vertex_count()];
    let mut current = f.clone();
    let mut peeled = Vec::new();
    loop {
        let verts: Vec<usize> = (0..d.vertex_count()).filter(|&v| alive[v]).collect();
        let sub = d.induced_subdigraph(&verts).expect("vertices in range");
        let bd = BlockDecomposition::new(&sub.graph);
        if bd.block_count() == 1 {
            let g = current.restrict(&verts);
            let Some(kind) = check_block_type(&sub.graph, &g)? else {
                return Ok(None);
            };
            peeled.push(PeeledBlock {
                block: CertificateBlock {
                    vertices: verts,
                    function: g,
                    kind,
                },
                cut: None,
            });
            return Ok(Some(assemble_certificate(p, peeled)));
        }
        let (bi, cut_local) = bd.detachable_end_block().expect("a tree has an end-block");
        let local = bd.block(bi);
        let block_vertices: Vec<usize> = local.iter().map(|&v| sub.to_original(v)).collect();
        let cut = sub.to_original(cut_local);
        let block = d
            .induced_subdigraph(&block_vertices)
            .expect("vertices in range")
            .graph;
        let cut_pos = block_vertices
            .binary_search(&cut)
            .expect("cut lies in block");
        let other = (0..block_vertices.len())
            .find(|&i| i != cut_pos)
            .expect("block has two vertices");
        let sample = current.get(block_vertices[other]).to_vec();

        let mut candidates = Vec::new();
        let sup: Vec<usize> = support(&sample).collect();
        if let [j] = sup[..] {
            let mut m = vec![0; p];
            m[j] = block.out_degree(cut_pos);
            candidates.push(m);
        }
        candidates.push(sample);

        let mut accepted = None;
        for cand in candidates {
            if cand.iter().zip(current.get(cut)).any(|(c, have)| c > have) {
                continue;
            }
            let mut g = current.restrict(&block_vertices);
            g.set(cut_pos, &cand);
            if let Some(kind) = check_block_type(&block, &g)? {
                accepted = Some((g, kind, cand));
                break;
            }
        }
        let Some((g, kind, cand)) = accepted else {
            return Ok(None);
        };
        for (have, c) in current.get_mut(cut).iter_mut().zip(&cand) {
            *have -= c;
        }
        for &v in &block_vertices {
            if v != cut {
                alive[v] = false;
            }
        }
        peeled.push(PeeledBlock {
            block: CertificateBlock {
                vertices: block_vertices,
                function: g,
                kind,
            },
            cut: Some(cut),
        });
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateViolation {
    #[error("certificate has no blocks")]
    Empty,
    #[error("dimension mismatch: certificate p={certificate}, function p={function}")]
    Dimension { certificate: usize, function: usize },
    #[error("function defined on {found} vertices, digraph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("block {0} is malformed (unsorted, out of range, or misaligned function)")]
    MalformedBlock(usize),
    #[error("blocks do not cover exactly one component of the digraph")]
    NotAComponent,
    #[error("block sets differ from the block decomposition")]
    BlockMismatch,
    #[error("block {0} does not satisfy its recorded type")]
    TypeMismatch(usize),
    #[error("block functions do not sum to f at vertex {0}")]
    SumMismatch(usize),
    #[error("merge edges do not form a tree on the blocks")]
    MergeStructure,
}

/// Checks a certificate against `(D, f)`: the blocks must be exactly the
/// blocks of one component of `D`, each block must satisfy its recorded
/// type, the block functions must add up to `f`, and the merge edges must
/// form a tree joining blocks at shared vertices.
pub fn validate_certificate(
    d: &Digraph,
    f: &VectorFunction,
    cert: &HardPairCertificate,
) -> Result<(), CertificateViolation> {
    let n = d.vertex_count();
    if cert.blocks.is_empty() {
        return Err(CertificateViolation::Empty);
    }
    if cert.p != f.p() {
        return Err(CertificateViolation::Dimension {
            certificate: cert.p,
            function: f.p(),
        });
    }
    if f.len() != n {
        return Err(CertificateViolation::VertexCount {
            expected: n,
            found: f.len(),
        });
    }
    for (i, b) in cert.blocks.iter().enumerate() {
        let sorted = b.vertices.windows(2).all(|w| w[0] < w[1]);
        let in_range = b.vertices.iter().all(|&v| v < n);
        if b.vertices.is_empty()
            || !sorted
            || !in_range
            || b.function.p() != cert.p
            || b.function.len() != b.vertices.len()
        {
            return Err(CertificateViolation::MalformedBlock(i));
        }
    }

    let covered = cert.vertices();
    let comp = components(d)
        .into_iter()
        .find(|c| c.binary_search(&covered[0]).is_ok())
        .expect("vertex lies in a component");
    if comp != covered {
        return Err(CertificateViolation::NotAComponent);
    }
    let sub = d.induced_subdigraph(&comp).expect("vertices in range");
    let bd = BlockDecomposition::new(&sub.graph);
    let mut expected: Vec<Vec<usize>> = bd
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&v| sub.to_original(v)).collect())
        .collect();
    let mut given: Vec<Vec<usize>> = cert.blocks.iter().map(|b| b.vertices.clone()).collect();
    expected.sort();
    given.sort();
    if expected != given {
        return Err(CertificateViolation::BlockMismatch);
    }

    for (i, b) in cert.blocks.iter().enumerate() {
        let graph = d
            .induced_subdigraph(&b.vertices)
            .expect("vertices in range")
            .graph;
        if !satisfies_type(&graph, &b.function, &b.kind) {
            return Err(CertificateViolation::TypeMismatch(i));
        }
    }

    let mut sums = VectorFunction::zeros(n, cert.p);
    for b in &cert.blocks {
        for (i, &v) in b.vertices.iter().enumerate() {
            for (s, x) in sums.get_mut(v).iter_mut().zip(b.function.get(i)) {
                *s += x;
            }
        }
    }
    if let Some(&v) = covered.iter().find(|&&v| sums.get(v) != f.get(v)) {
        return Err(CertificateViolation::SumMismatch(v));
    }

    let k = cert.blocks.len();
    if cert.merges.len() + 1 != k {
        return Err(CertificateViolation::MergeStructure);
    }
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for m in &cert.merges {
        let (a, b) = m.blocks;
        let shared = a < k
            && b < k
            && cert.blocks[a].vertices.binary_search(&m.vertex).is_ok()
            && cert.blocks[b].vertices.binary_search(&m.vertex).is_ok();
        if !shared {
            return Err(CertificateViolation::MergeStructure);
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Err(CertificateViolation::MergeStructure);
        }
        parent[ra] = rb;
    }
    Ok(())
}
