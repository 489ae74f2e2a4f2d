//! Line-oriented text formats for instances, partitions and certificates.
//!
//! Vertices are 1-based in every file. An instance looks like
//!
//! ```text
//! c directed triangle
//! p digraph 3 3 1
//! a 1 2
//! a 2 3
//! a 3 1
//! f 1 1
//! f 2 1
//! f 3 1
//! ```
//!
//! with `f v x1 .. xp` vector values, `l v c1 ..` colour lists or `h v x`
//! scalar thresholds as the payload. An instance carries at most one kind
//! of payload, and when present it must cover every vertex.

use std::collections::HashSet;
use std::fmt::Write as _;

use vardegen_core::degeneracy::{DegeneracyFunction, Partition, VectorFunction};
use vardegen_core::hard_pair::{BlockType, CertificateBlock, HardPairCertificate, MergeEdge};
use vardegen_core::reductions::{Color, ListAssignment};
use vardegen_core::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("missing `p {0}` header")]
    MissingHeader(&'static str),
    #[error("second header line")]
    DuplicateHeader,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("header declares {declared} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("instance mixes `f`, `l` and `h` lines")]
    MixedPayload,
    #[error("vertex {0} given twice")]
    DuplicateEntry(usize),
    #[error("no value for vertex {0}")]
    MissingEntry(usize),
    #[error("class {class} out of range 1..={p}")]
    ClassOutOfRange { class: usize, p: usize },
    #[error("unknown block type `{0}`")]
    UnknownBlockType(String),
    #[error("unknown block id {0}")]
    UnknownBlock(usize),
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// The data attached to the vertices of an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    None,
    Function(VectorFunction),
    Lists(ListAssignment),
    Thresholds(DegeneracyFunction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub digraph: Digraph,
    pub payload: Payload,
}

/// Non-comment, non-empty lines split into words, with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, w)| !w.is_empty() && w[0] != "c")
}

fn number<T: std::str::FromStr>(line: usize, word: &str) -> Result<T, ParseError> {
    word.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::Syntax(format!("`{word}` is not a number")),
    })
}

fn numbers<T: std::str::FromStr>(line: usize, words: &[&str]) -> Result<Vec<T>, ParseError> {
    words.iter().map(|w| number(line, w)).collect()
}

fn vertex(line: usize, word: &str, n: usize) -> Result<usize, ParseError> {
    let v: usize = number(line, word)?;
    if v == 0 || v > n {
        return err(line, ParseErrorKind::VertexOutOfRange { vertex: v, n });
    }
    Ok(v - 1)
}

fn arity(line: usize, words: &[&str], expected: usize) -> Result<(), ParseError> {
    if words.len() != expected {
        return err(
            line,
            ParseErrorKind::Syntax(format!("`{}` expects {} fields", words[0], expected - 1)),
        );
    }
    Ok(())
}

/// Collects one row per vertex, rejecting duplicates and gaps.
struct Rows<T> {
    rows: Vec<Option<T>>,
}

impl<T> Rows<T> {
    fn new(n: usize) -> Self {
        Rows {
            rows: (0..n).map(|_| None).collect(),
        }
    }

    fn put(&mut self, line: usize, v: usize, row: T) -> Result<(), ParseError> {
        if self.rows[v].is_some() {
            return err(line, ParseErrorKind::DuplicateEntry(v + 1));
        }
        self.rows[v] = Some(row);
        Ok(())
    }

    fn finish(self, line: usize) -> Result<Vec<T>, ParseError> {
        self.rows
            .into_iter()
            .enumerate()
            .map(|(v, r)| {
                r.ok_or(ParseError {
                    line,
                    kind: ParseErrorKind::MissingEntry(v + 1),
                })
            })
            .collect()
    }
}

enum Rowset {
    None,
    Function(Rows<Vec<usize>>),
    Lists(Rows<Vec<Color>>),
    Thresholds(Rows<usize>),
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen = HashSet::new();
    let mut rows = Rowset::None;
    let mut last = 0;
    for (line, words) in lines(text) {
        last = line;
        if words[0] == "p" {
            if header.is_some() {
                return err(line, ParseErrorKind::DuplicateHeader);
            }
            arity(line, &words, 5)?;
            if words[1] != "digraph" {
                return err(
                    line,
                    ParseErrorKind::Syntax(format!("expected `p digraph`, found `p {}`", words[1])),
                );
            }
            header = Some((
                number(line, words[2])?,
                number(line, words[3])?,
                number(line, words[4])?,
            ));
            continue;
        }
        let Some((n, _, p)) = header else {
            return err(line, ParseErrorKind::MissingHeader("digraph"));
        };
        match words[0] {
            "a" => {
                arity(line, &words, 3)?;
                let (u, v) = (vertex(line, words[1], n)?, vertex(line, words[2], n)?);
                if u == v {
                    return err(line, ParseErrorKind::Loop(u + 1));
                }
                if !seen.insert((u, v)) {
                    return err(line, ParseErrorKind::DuplicateArc(u + 1, v + 1));
                }
                arcs.push((u, v));
            }
            "f" => {
                if matches!(rows, Rowset::None) {
                    rows = Rowset::Function(Rows::new(n));
                }
                let Rowset::Function(r) = &mut rows else {
                    return err(line, ParseErrorKind::MixedPayload);
                };
                if words.len() < 2 {
                    return err(line, ParseErrorKind::Syntax("`f` needs a vertex".into()));
                }
                let v = vertex(line, words[1], n)?;
                let values: Vec<usize> = numbers(line, &words[2..])?;
                if values.len() != p {
                    return err(
                        line,
                        ParseErrorKind::WrongLength {
                            expected: p,
                            found: values.len(),
                        },
                    );
                }
                r.put(line, v, values)?;
            }
            "l" => {
                if matches!(rows, Rowset::None) {
                    rows = Rowset::Lists(Rows::new(n));
                }
                let Rowset::Lists(r) = &mut rows else {
                    return err(line, ParseErrorKind::MixedPayload);
                };
                if words.len() < 2 {
                    return err(line, ParseErrorKind::Syntax("`l` needs a vertex".into()));
                }
                let v = vertex(line, words[1], n)?;
                r.put(line, v, numbers(line, &words[2..])?)?;
            }
            "h" => {
                if matches!(rows, Rowset::None) {
                    rows = Rowset::Thresholds(Rows::new(n));
                }
                let Rowset::Thresholds(r) = &mut rows else {
                    return err(line, ParseErrorKind::MixedPayload);
                };
                arity(line, &words, 3)?;
                let v = vertex(line, words[1], n)?;
                r.put(line, v, number(line, words[2])?)?;
            }
            other => {
                return err(
                    line,
                    ParseErrorKind::Syntax(format!("unknown line type `{other}`")),
                )
            }
        }
    }
    let Some((n, m, p)) = header else {
        return err(last.max(1), ParseErrorKind::MissingHeader("digraph"));
    };
    if arcs.len() != m {
        return err(
            last,
            ParseErrorKind::CountMismatch {
                what: "arcs",
                declared: m,
                found: arcs.len(),
            },
        );
    }
    let digraph = Digraph::from_arcs(n, arcs).map_err(|e| ParseError {
        line: last,
        kind: ParseErrorKind::Syntax(e.to_string()),
    })?;
    let payload = match rows {
        Rowset::None => Payload::None,
        Rowset::Function(r) => {
            let rows = r.finish(last)?;
            let f = VectorFunction::new(p, rows).map_err(|e| ParseError {
                line: last,
                kind: ParseErrorKind::Syntax(e.to_string()),
            })?;
            Payload::Function(f)
        }
        Rowset::Lists(r) => Payload::Lists(ListAssignment::new(r.finish(last)?)),
        Rowset::Thresholds(r) => Payload::Thresholds(DegeneracyFunction(r.finish(last)?)),
    };
    Ok(Instance { digraph, payload })
}

pub fn render_instance(instance: &Instance) -> String {
    let d = &instance.digraph;
    let p = match &instance.payload {
        Payload::Function(f) => f.p(),
        Payload::Lists(l) => l.universe().len(),
        Payload::None | Payload::Thresholds(_) => 1,
    };
    let mut out = String::new();
    writeln!(
        out,
        "p digraph {} {} {}",
        d.vertex_count(),
        d.arc_count(),
        p
    )
    .unwrap();
    for (u, v) in d.arcs() {
        writeln!(out, "a {} {}", u + 1, v + 1).unwrap();
    }
    match &instance.payload {
        Payload::None => {}
        Payload::Function(f) => {
            for (v, row) in f.rows().enumerate() {
                writeln!(out, "f {}{}", v + 1, joined(row)).unwrap();
            }
        }
        Payload::Lists(l) => {
            for (v, list) in l.lists().iter().enumerate() {
                writeln!(out, "l {}{}", v + 1, joined(list)).unwrap();
            }
        }
        Payload::Thresholds(h) => {
            for (v, x) in h.0.iter().enumerate() {
                writeln!(out, "h {} {}", v + 1, x).unwrap();
            }
        }
    }
    out
}

/// Values each preceded by a space.
fn joined<T: std::fmt::Display>(values: &[T]) -> String {
    values.iter().map(|x| format!(" {x}")).collect()
}

/// `p partition n p` followed by one `v vertex class` line per vertex.
pub fn render_partition(part: &Partition) -> String {
    let mut out = format!("p partition {} {}\n", part.len(), part.p());
    for (v, &c) in part.classes_of().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, c + 1).unwrap();
    }
    out
}

pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Option<Rows<usize>> = None;
    let mut last = 0;
    for (line, words) in lines(text) {
        last = line;
        match words[0] {
            "p" => {
                if header.is_some() {
                    return err(line, ParseErrorKind::DuplicateHeader);
                }
                arity(line, &words, 4)?;
                if words[1] != "partition" {
                    return err(
                        line,
                        ParseErrorKind::Syntax(format!(
                            "expected `p partition`, found `p {}`",
                            words[1]
                        )),
                    );
                }
                let (n, p) = (number(line, words[2])?, number(line, words[3])?);
                header = Some((n, p));
                rows = Some(Rows::new(n));
            }
            "v" => {
                let (Some((n, p)), Some(r)) = (header, rows.as_mut()) else {
                    return err(line, ParseErrorKind::MissingHeader("partition"));
                };
                arity(line, &words, 3)?;
                let v = vertex(line, words[1], n)?;
                let class: usize = number(line, words[2])?;
                if class == 0 || class > p {
                    return err(line, ParseErrorKind::ClassOutOfRange { class, p });
                }
                r.put(line, v, class - 1)?;
            }
            other => {
                return err(
                    line,
                    ParseErrorKind::Syntax(format!("unknown line type `{other}`")),
                )
            }
        }
    }
    let (Some((_, p)), Some(rows)) = (header, rows) else {
        return err(last.max(1), ParseErrorKind::MissingHeader("partition"));
    };
    Partition::new(p, rows.finish(last)?).map_err(|e| ParseError {
        line: last,
        kind: ParseErrorKind::Syntax(e.to_string()),
    })
}

fn type_fields(kind: &BlockType) -> String {
    match kind {
        BlockType::Mono { color } => format!("M {}", color + 1),
        BlockType::Complete { sizes } => format!("K{}", joined(sizes)),
        BlockType::OddCycle { colors } => format!("C {} {}", colors[0] + 1, colors[1] + 1),
    }
}

/// One section per certificate:
///
/// ```text
/// p certificate <n> <p> <blocks>
/// b <id> <type> <params>
/// bv <id> <vertex> <x1> .. <xp>
/// m <vertex> <id1> <id2>
/// ```
///
/// Block types are `M j`, `K n1 .. np` and `C k l`, with 1-based colours.
pub fn render_certificates(n: usize, certs: &[HardPairCertificate]) -> String {
    let mut out = String::new();
    for cert in certs {
        writeln!(out, "p certificate {} {} {}", n, cert.p, cert.blocks.len()).unwrap();
        for (id, b) in cert.blocks.iter().enumerate() {
            writeln!(out, "b {} {}", id + 1, type_fields(&b.kind)).unwrap();
        }
        for (id, b) in cert.blocks.iter().enumerate() {
            for (k, &v) in b.vertices.iter().enumerate() {
                writeln!(out, "bv {} {}{}", id + 1, v + 1, joined(b.function.get(k))).unwrap();
            }
        }
        for m in &cert.merges {
            writeln!(
                out,
                "m {} {} {}",
                m.vertex + 1,
                m.blocks.0 + 1,
                m.blocks.1 + 1
            )
            .unwrap();
        }
    }
    out
}

struct Section {
    line: usize,
    n: usize,
    p: usize,
    kinds: Vec<Option<BlockType>>,
    members: Vec<Vec<(usize, Vec<usize>)>>,
    merges: Vec<MergeEdge>,
}

impl Section {
    fn block(&self, line: usize, word: &str) -> Result<usize, ParseError> {
        let id: usize = number(line, word)?;
        if id == 0 || id > self.kinds.len() {
            return err(line, ParseErrorKind::UnknownBlock(id));
        }
        Ok(id - 1)
    }

    fn finish(self) -> Result<HardPairCertificate, ParseError> {
        let mut blocks = Vec::new();
        for (id, (kind, mut members)) in self.kinds.into_iter().zip(self.members).enumerate() {
            let Some(kind) = kind else {
                return err(self.line, ParseErrorKind::UnknownBlock(id + 1));
            };
            members.sort();
            if members.windows(2).any(|w| w[0].0 == w[1].0) {
                return err(
                    self.line,
                    ParseErrorKind::Syntax(format!("block {} lists a vertex twice", id + 1)),
                );
            }
            let vertices = members.iter().map(|(v, _)| *v).collect();
            let rows = members.into_iter().map(|(_, r)| r).collect();
            let function = VectorFunction::new(self.p, rows).map_err(|e| ParseError {
                line: self.line,
                kind: ParseErrorKind::Syntax(e.to_string()),
            })?;
            blocks.push(CertificateBlock {
                vertices,
                function,
                kind,
            });
        }
        Ok(HardPairCertificate {
            p: self.p,
            blocks,
            merges: self.merges,
        })
    }
}

pub fn parse_certificates(text: &str) -> Result<Vec<HardPairCertificate>, ParseError> {
    let mut done = Vec::new();
    let mut current: Option<Section> = None;
    for (line, words) in lines(text) {
        if words[0] == "p" {
            arity(line, &words, 5)?;
            if words[1] != "certificate" {
                return err(
                    line,
                    ParseErrorKind::Syntax(format!(
                        "expected `p certificate`, found `p {}`",
                        words[1]
                    )),
                );
            }
            if let Some(s) = current.take() {
                done.push(s.finish()?);
            }
            let (n, p, k): (usize, usize, usize) = (
                number(line, words[2])?,
                number(line, words[3])?,
                number(line, words[4])?,
            );
            current = Some(Section {
                line,
                n,
                p,
                kinds: vec![None; k],
                members: vec![Vec::new(); k],
                merges: Vec::new(),
            });
            continue;
        }
        let Some(s) = current.as_mut() else {
            return err(line, ParseErrorKind::MissingHeader("certificate"));
        };
        match words[0] {
            "b" => {
                if words.len() < 3 {
                    return err(
                        line,
                        ParseErrorKind::Syntax("`b` needs an id and a type".into()),
                    );
                }
                let id = s.block(line, words[1])?;
                if s.kinds[id].is_some() {
                    return err(line, ParseErrorKind::DuplicateEntry(id + 1));
                }
                let params: Vec<usize> = numbers(line, &words[3..])?;
                let color = |x: usize| -> Result<usize, ParseError> {
                    if x == 0 || x > s.p {
                        return err(line, ParseErrorKind::ClassOutOfRange { class: x, p: s.p });
                    }
                    Ok(x - 1)
                };
                let kind = match (words[2], params.as_slice()) {
                    ("M", &[j]) => BlockType::Mono { color: color(j)? },
                    ("K", sizes) if sizes.len() == s.p => BlockType::Complete {
                        sizes: sizes.to_vec(),
                    },
                    ("C", &[k, l]) => BlockType::OddCycle {
                        colors: [color(k)?, color(l)?],
                    },
                    ("M" | "K" | "C", _) => {
                        return err(
                            line,
                            ParseErrorKind::Syntax(format!(
                                "wrong parameters for type {}",
                                words[2]
                            )),
                        );
                    }
                    (other, _) => return err(line, ParseErrorKind::UnknownBlockType(other.into())),
                };
                s.kinds[id] = Some(kind);
            }
            "bv" => {
                if words.len() < 3 {
                    return err(
                        line,
                        ParseErrorKind::Syntax("`bv` needs a block and a vertex".into()),
                    );
                }
                let id = s.block(line, words[1])?;
                let v = vertex(line, words[2], s.n)?;
                let values: Vec<usize> = numbers(line, &words[3..])?;
                if values.len() != s.p {
                    return err(
                        line,
                        ParseErrorKind::WrongLength {
                            expected: s.p,
                            found: values.len(),
                        },
                    );
                }
                s.members[id].push((v, values));
            }
            "m" => {
                arity(line, &words, 4)?;
                let v = vertex(line, words[1], s.n)?;
                let (a, b) = (s.block(line, words[2])?, s.block(line, words[3])?);
                s.merges.push(MergeEdge {
                    vertex: v,
                    blocks: (a, b),
                });
            }
            other => {
                return err(
                    line,
                    ParseErrorKind::Syntax(format!("unknown line type `{other}`")),
                )
            }
        }
    }
    if let Some(s) = current.take() {
        done.push(s.finish()?);
    }
    if done.is_empty() {
        return err(1, ParseErrorKind::MissingHeader("certificate"));
    }
    Ok(done)
}
