//! Colouring problems expressed as vector-function instances.
//!
//! A list assignment `L` over colours `Γ` becomes the function with
//! `f_i(v) = 1` iff colour `i` is in `L(v)`; an f-partition is then exactly
//! an L-colouring with acyclic colour classes. Weight `s` instead of 1 gives
//! colourings whose classes are weakly s-degenerate.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::blocks::BlockDecomposition;
use crate::degeneracy::{FunctionError, VectorFunction};
use crate::digraph::Digraph;
use crate::engine::{solve, ComponentResult, EngineError, SolveOutcome};
use crate::hard_pair::{BlockType, HardPairCertificate};
use crate::oracle::{oracle_solve, OracleError, OracleVerdict, DEFAULT_BUDGET};

/// User-facing colour identifier.
pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("expected {expected} lists, found {found}")]
    ListCountMismatch { expected: usize, found: usize },
    #[error("no vertex has a colour in its list")]
    EmptyPalette,
    #[error("vertex {vertex} has {have} colours but needs {need}")]
    ListTooShort {
        vertex: usize,
        have: usize,
        need: usize,
    },
    #[error("{p} colours are fewer than the required {required}")]
    TooFewColors { p: usize, required: usize },
    #[error("s must be at least 1")]
    ZeroDegeneracy,
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A list of allowed colours per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated.
    pub fn new(lists: Vec<Vec<Color>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        ListAssignment { lists }
    }

    /// The same list at each of `n` vertices.
    pub fn constant(n: usize, colors: &[Color]) -> Self {
        ListAssignment::new(vec![colors.to_vec(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    /// Union of all lists, ascending.
    pub fn universe(&self) -> Vec<Color> {
        let set: BTreeSet<Color> = self.lists.iter().flatten().copied().collect();
        set.into_iter().collect()
    }
}

/// Bijection between the sorted colour universe and class indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorMap {
    colors: Vec<Color>,
}

impl ColorMap {
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, class: usize) -> Color {
        self.colors[class]
    }

    pub fn class_of(&self, color: Color) -> Option<usize> {
        self.colors.binary_search(&color).ok()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// `f_i(v) = 1` iff the `i`-th smallest colour lies in `L(v)`.
pub fn lists_to_vector_function(
    d: &Digraph,
    l: &ListAssignment,
) -> Result<(VectorFunction, ColorMap), ReductionError> {
    weighted_lists(d, l, 1)
}

fn weighted_lists(
    d: &Digraph,
    l: &ListAssignment,
    weight: usize,
) -> Result<(VectorFunction, ColorMap), ReductionError> {
    if l.len() != d.vertex_count() {
        return Err(ReductionError::ListCountMismatch {
            expected: d.vertex_count(),
            found: l.len(),
        });
    }
    let map = ColorMap {
        colors: l.universe(),
    };
    if map.is_empty() {
        return Err(ReductionError::EmptyPalette);
    }
    let rows = l
        .lists()
        .iter()
        .map(|list| {
            let mut row = vec![0; map.len()];
            for &c in list {
                row[map.class_of(c).expect("colour in universe")] = weight;
            }
            row
        })
        .collect();
    Ok((VectorFunction::new(map.len(), rows)?, map))
}

/// Structural shape of a block, as in the list version of Brooks' theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockShape {
    /// Directed cycle of length at least 2 (a digon counts here).
    DirectedCycle,
    BidirectedComplete,
    /// Bidirected odd cycle of length at least 5; triangles are complete.
    BidirectedOddCycle,
    Other,
}

impl BlockShape {
    pub fn of(d: &Digraph) -> BlockShape {
        if d.vertex_count() >= 2 && d.is_directed_cycle() {
            BlockShape::DirectedCycle
        } else if d.is_bidirected_complete() {
            BlockShape::BidirectedComplete
        } else if d.is_bidirected_odd_cycle() {
            BlockShape::BidirectedOddCycle
        } else {
            BlockShape::Other
        }
    }
}

/// A connected digraph whose dichromatic number exceeds its maximum degree:
/// a directed cycle, a bidirected odd cycle or a bidirected complete graph.
pub fn brooks_exception(d: &Digraph) -> Option<BlockShape> {
    if !d.is_connected() || d.vertex_count() == 0 {
        return None;
    }
    Some(BlockShape::of(d)).filter(|&s| s != BlockShape::Other)
}

/// One block of a non-colourable component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockEvidence {
    pub vertices: Vec<usize>,
    pub kind: BlockType,
    pub shape: BlockShape,
    /// `Γ_B`: colours used by the block's function.
    pub colors: Vec<Color>,
}

/// Why one component admits no L-colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListEvidence {
    /// Component vertices, ascending.
    pub component: Vec<usize>,
    pub certificate: HardPairCertificate,
    pub blocks: Vec<BlockEvidence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListColoring {
    /// `φ(v)` for every vertex.
    Colored(Vec<Color>),
    /// One entry per component without a colouring.
    NotColorable(Vec<ListEvidence>),
    /// Exhaustive search found no colouring; only reachable through the
    /// oracle fallback, so there is no structural evidence.
    NotColorableBySearch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ListColorOptions {
    /// Hand instances below the list-size threshold to exhaustive search
    /// instead of rejecting them.
    pub oracle_fallback: bool,
    pub budget: u64,
}

impl Default for ListColorOptions {
    fn default() -> Self {
        ListColorOptions {
            oracle_fallback: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Colours `D` from `L` with acyclic colour classes, or explains why no
/// such colouring exists. Requires `|L(v)| >= max(d+(v), d-(v))`.
pub fn list_color(
    d: &Digraph,
    l: &ListAssignment,
    options: ListColorOptions,
) -> Result<ListColoring, ReductionError> {
    let (f, map) = lists_to_vector_function(d, l)?;
    if let Err(short) = check_list_sizes(d, l, 1) {
        if !options.oracle_fallback {
            return Err(short);
        }
        return Ok(match oracle_solve(d, &f, options.budget)? {
            OracleVerdict::Feasible(part) => {
                ListColoring::Colored(part.classes_of().iter().map(|&c| map.color(c)).collect())
            }
            OracleVerdict::Infeasible => ListColoring::NotColorableBySearch,
        });
    }
    let outcome = solve(d, &f)?;
    if let Some(part) = outcome.partition() {
        return Ok(ListColoring::Colored(
            part.classes_of().iter().map(|&c| map.color(c)).collect(),
        ));
    }
    let evidence = outcome
        .components
        .iter()
        .filter_map(|c| match &c.result {
            ComponentResult::Hard(cert) => Some(list_evidence(d, &map, &c.vertices, cert)),
            ComponentResult::Partition(_) => None,
        })
        .collect();
    Ok(ListColoring::NotColorable(evidence))
}

fn list_evidence(
    d: &Digraph,
    map: &ColorMap,
    component: &[usize],
    cert: &HardPairCertificate,
) -> ListEvidence {
    let blocks = cert
        .blocks
        .iter()
        .map(|b| {
            let sub = d
                .induced_subdigraph(&b.vertices)
                .expect("certificate vertices in range")
                .graph;
            let colors = (0..cert.p)
                .filter(|&i| b.function.rows().any(|row| row[i] > 0))
                .map(|i| map.color(i))
                .collect();
            BlockEvidence {
                vertices: b.vertices.clone(),
                kind: b.kind.clone(),
                shape: BlockShape::of(&sub),
                colors,
            }
        })
        .collect();
    ListEvidence {
        component: component.to_vec(),
        certificate: cert.clone(),
        blocks,
    }
}

/// `weight * |L(v)| >= max(d+(v), d-(v))` everywhere.
fn check_list_sizes(d: &Digraph, l: &ListAssignment, weight: usize) -> Result<(), ReductionError> {
    if l.len() != d.vertex_count() {
        return Err(ReductionError::ListCountMismatch {
            expected: d.vertex_count(),
            found: l.len(),
        });
    }
    for v in 0..d.vertex_count() {
        let have = l.list(v).len();
        let need = d.max_degree_at(v).div_ceil(weight);
        if have < need {
            return Err(ReductionError::ListTooShort {
                vertex: v,
                have,
                need,
            });
        }
    }
    Ok(())
}

/// A failed structural check on [`ListEvidence`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvidenceViolation {
    #[error("vertex {vertex}: list size {list} with degrees ({out}, {inn}) is not tight")]
    NotTight {
        vertex: usize,
        list: usize,
        out: usize,
        inn: usize,
    },
    #[error("the evidence blocks are not the blocks of the component")]
    WrongBlocks,
    #[error(
        "block {0:?} is not a directed cycle, bidirected complete graph or bidirected odd cycle"
    )]
    BadShape(Vec<usize>),
    #[error("at vertex {0} the block colour sets do not partition the list")]
    ColorSplit(usize),
}

/// Checks evidence against `D` and `L` alone: every vertex of the component
/// has `|L(v)| = d+(v) = d-(v)`, every block has one of the three shapes,
/// and at each vertex the block colour sets are disjoint with union `L(v)`.
pub fn check_list_evidence(
    d: &Digraph,
    l: &ListAssignment,
    evidence: &ListEvidence,
) -> Result<(), EvidenceViolation> {
    for &v in &evidence.component {
        let (list, out, inn) = (l.list(v).len(), d.out_degree(v), d.in_degree(v));
        if list != out || list != inn {
            return Err(EvidenceViolation::NotTight {
                vertex: v,
                list,
                out,
                inn,
            });
        }
    }
    let sub = d
        .induced_subdigraph(&evidence.component)
        .map_err(|_| EvidenceViolation::WrongBlocks)?;
    let mut expected: Vec<Vec<usize>> = BlockDecomposition::new(&sub.graph)
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| sub.to_original(x)).collect())
        .collect();
    let mut found: Vec<Vec<usize>> = evidence.blocks.iter().map(|b| b.vertices.clone()).collect();
    expected.sort();
    found.sort();
    if expected != found {
        return Err(EvidenceViolation::WrongBlocks);
    }
    for b in &evidence.blocks {
        let block = d
            .induced_subdigraph(&b.vertices)
            .map_err(|_| EvidenceViolation::WrongBlocks)?
            .graph;
        if BlockShape::of(&block) == BlockShape::Other {
            return Err(EvidenceViolation::BadShape(b.vertices.clone()));
        }
    }
    for &v in &evidence.component {
        let mut union: Vec<Color> = Vec::new();
        for b in evidence
            .blocks
            .iter()
            .filter(|b| b.vertices.binary_search(&v).is_ok())
        {
            union.extend(&b.colors);
        }
        let total = union.len();
        union.sort_unstable();
        union.dedup();
        if union.len() != total || union != l.list(v) {
            return Err(EvidenceViolation::ColorSplit(v));
        }
    }
    Ok(())
}

/// Partitions `D` into `p` acyclic classes, i.e. solves with `f = (1, ..., 1)`.
/// Requires `p >= max(Δ+, Δ-)` and `p >= 1`.
pub fn dichromatic_partition(d: &Digraph, p: usize) -> Result<SolveOutcome, ReductionError> {
    let required = d.max_degree().max(1);
    if p < required {
        return Err(ReductionError::TooFewColors { p, required });
    }
    Ok(solve(
        d,
        &VectorFunction::constant(d.vertex_count(), &vec![1; p]),
    )?)
}

/// Partitions `D` into `p` weakly s-degenerate classes. Requires `s >= 1`,
/// `p >= 1` and `p * s >= max(Δ+, Δ-)`.
pub fn s_degenerate_partition(
    d: &Digraph,
    s: usize,
    p: usize,
) -> Result<SolveOutcome, ReductionError> {
    if s == 0 {
        return Err(ReductionError::ZeroDegeneracy);
    }
    let required = d.max_degree().div_ceil(s).max(1);
    if p < required {
        return Err(ReductionError::TooFewColors { p, required });
    }
    Ok(solve(
        d,
        &VectorFunction::constant(d.vertex_count(), &vec![s; p]),
    )?)
}

/// Which alternative of the structural condition a component meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SColorShape {
    /// Bidirected complete with `|D| - 1` divisible by `s`.
    Complete,
    /// Bidirected odd cycle with `s = 1`.
    OddCycle,
    /// Eulerian with every in- and out-degree equal to `s`.
    RegularEulerian,
}

/// One component without an (L,s)-colouring, with both conditions of the
/// characterisation evaluated directly on `D` and `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SColorEvidence {
    pub component: Vec<usize>,
    pub certificate: HardPairCertificate,
    /// The structural alternative that holds, if any.
    pub shape: Option<SColorShape>,
    /// The common list when every vertex has the same list of size `m / s`.
    pub common_list: Option<Vec<Color>>,
}

impl SColorEvidence {
    pub fn conditions_hold(&self) -> bool {
        self.shape.is_some() && self.common_list.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SColoring {
    Colored(Vec<Color>),
    NotColorable(Vec<SColorEvidence>),
}

/// Colours `D` from `L` so that every colour class is weakly s-degenerate.
/// Requires `s >= 1` and `s * |L(v)| >= max(Δ+, Δ-)` at every vertex.
pub fn list_s_color(
    d: &Digraph,
    l: &ListAssignment,
    s: usize,
) -> Result<SColoring, ReductionError> {
    if s == 0 {
        return Err(ReductionError::ZeroDegeneracy);
    }
    if l.len() != d.vertex_count() {
        return Err(ReductionError::ListCountMismatch {
            expected: d.vertex_count(),
            found: l.len(),
        });
    }
    let m = d.max_degree();
    for v in 0..d.vertex_count() {
        let have = l.list(v).len();
        let need = m.div_ceil(s);
        if have < need {
            return Err(ReductionError::ListTooShort {
                vertex: v,
                have,
                need,
            });
        }
    }
    let (f, map) = weighted_lists(d, l, s)?;
    let outcome = solve(d, &f)?;
    if let Some(part) = outcome.partition() {
        return Ok(SColoring::Colored(
            part.classes_of().iter().map(|&c| map.color(c)).collect(),
        ));
    }
    let evidence = outcome
        .components
        .iter()
        .filter_map(|c| match &c.result {
            ComponentResult::Hard(cert) => Some(s_color_evidence(d, l, s, &c.vertices, cert)),
            ComponentResult::Partition(_) => None,
        })
        .collect();
    Ok(SColoring::NotColorable(evidence))
}

fn s_color_evidence(
    d: &Digraph,
    l: &ListAssignment,
    s: usize,
    component: &[usize],
    cert: &HardPairCertificate,
) -> SColorEvidence {
    let sub = d
        .induced_subdigraph(component)
        .expect("component in range")
        .graph;
    let n = sub.vertex_count();
    let m = sub.max_degree();
    let shape = if sub.is_bidirected_complete() && (n - 1) % s == 0 {
        Some(SColorShape::Complete)
    } else if sub.is_bidirected_odd_cycle() && s == 1 {
        Some(SColorShape::OddCycle)
    } else if (0..n).all(|v| sub.out_degree(v) == s && sub.in_degree(v) == s) {
        Some(SColorShape::RegularEulerian)
    } else {
        None
    };
    let first = l.list(component[0]);
    let common = component.iter().all(|&v| l.list(v) == first) && first.len() * s == m;
    SColorEvidence {
        component: component.to_vec(),
        certificate: cert.clone(),
        shape,
        common_list: common.then(|| first.to_vec()),
    }
}
