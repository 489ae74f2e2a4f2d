//! Machine-readable reports. Vertices and classes are 1-based, as in files.

use serde::Serialize;
use vardegen_core::degeneracy::PartitionViolation;
use vardegen_core::hard_pair::{BlockType, CertificateViolation, HardPairCertificate};
use vardegen_core::reductions::{
    BlockShape, Color, EvidenceViolation, ListEvidence, SColorEvidence, SColorShape,
};

use crate::fuzz::FuzzSummary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Partitionable,
    Hard,
    NotHard,
    Valid,
    Invalid,
    Colorable,
    NotColorable,
    Feasible,
    Infeasible,
    Agreement,
    Disagreement,
    InputError,
    InternalError,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Partitionable
            | Outcome::NotHard
            | Outcome::Valid
            | Outcome::Colorable
            | Outcome::Feasible
            | Outcome::Agreement => 0,
            Outcome::Hard | Outcome::Invalid | Outcome::NotColorable | Outcome::Infeasible => 2,
            Outcome::InputError => 1,
            Outcome::InternalError | Outcome::Disagreement => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Outcome::Partitionable => "partitionable",
            Outcome::Hard => "hard",
            Outcome::NotHard => "not-hard",
            Outcome::Valid => "valid",
            Outcome::Invalid => "invalid",
            Outcome::Colorable => "colorable",
            Outcome::NotColorable => "not-colorable",
            Outcome::Feasible => "feasible",
            Outcome::Infeasible => "infeasible",
            Outcome::Agreement => "agreement",
            Outcome::Disagreement => "disagreement",
            Outcome::InputError => "input-error",
            Outcome::InternalError => "internal-error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    /// Class of each vertex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    /// Colour of each vertex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<Color>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<CertificateReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<EvidenceReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<ConditionReport>,
    /// Shape of the digraph when it is an exception to the Brooks bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<&'static str>,
    /// Whether every returned object passed independent re-validation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fuzz: Option<FuzzSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, outcome: Outcome) -> Self {
        Report {
            command,
            outcome,
            vertices: None,
            classes: None,
            partition: None,
            coloring: None,
            certificates: Vec::new(),
            evidence: Vec::new(),
            conditions: Vec::new(),
            exception: None,
            verified: None,
            violations: Vec::new(),
            fuzz: None,
            message: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub id: usize,
    #[serde(rename = "type")]
    pub kind: char,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub vertices: Vec<usize>,
    pub function: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeReport {
    pub vertex: usize,
    pub blocks: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub blocks: Vec<BlockReport>,
    pub merges: Vec<MergeReport>,
}

impl From<&HardPairCertificate> for CertificateReport {
    fn from(cert: &HardPairCertificate) -> Self {
        let blocks = cert
            .blocks
            .iter()
            .enumerate()
            .map(|(id, b)| {
                let mut r = BlockReport {
                    id: id + 1,
                    kind: b.kind.tag(),
                    j: None,
                    n: None,
                    k: None,
                    l: None,
                    vertices: b.vertices.iter().map(|v| v + 1).collect(),
                    function: b.function.rows().map(<[usize]>::to_vec).collect(),
                };
                match &b.kind {
                    BlockType::Mono { color } => r.j = Some(color + 1),
                    BlockType::Complete { sizes } => r.n = Some(sizes.clone()),
                    BlockType::OddCycle { colors } => {
                        r.k = Some(colors[0] + 1);
                        r.l = Some(colors[1] + 1);
                    }
                }
                r
            })
            .collect();
        let merges = cert
            .merges
            .iter()
            .map(|m| MergeReport {
                vertex: m.vertex + 1,
                blocks: [m.blocks.0 + 1, m.blocks.1 + 1],
            })
            .collect();
        CertificateReport { blocks, merges }
    }
}

pub fn shape_name(shape: BlockShape) -> &'static str {
    match shape {
        BlockShape::DirectedCycle => "directed-cycle",
        BlockShape::BidirectedComplete => "bidirected-complete",
        BlockShape::BidirectedOddCycle => "bidirected-odd-cycle",
        BlockShape::Other => "other",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvidenceBlock {
    #[serde(rename = "type")]
    pub kind: char,
    pub shape: &'static str,
    pub vertices: Vec<usize>,
    pub colors: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvidenceReport {
    pub component: Vec<usize>,
    pub blocks: Vec<EvidenceBlock>,
    /// Result of the structural check against the digraph and lists.
    pub checked: bool,
}

impl EvidenceReport {
    pub fn new(ev: &ListEvidence, checked: bool) -> Self {
        EvidenceReport {
            component: ev.component.iter().map(|v| v + 1).collect(),
            blocks: ev
                .blocks
                .iter()
                .map(|b| EvidenceBlock {
                    kind: b.kind.tag(),
                    shape: shape_name(b.shape),
                    vertices: b.vertices.iter().map(|v| v + 1).collect(),
                    colors: b.colors.clone(),
                })
                .collect(),
            checked,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub component: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub common_list: Option<Vec<Color>>,
    pub conditions_hold: bool,
}

impl From<&SColorEvidence> for ConditionReport {
    fn from(ev: &SColorEvidence) -> Self {
        ConditionReport {
            component: ev.component.iter().map(|v| v + 1).collect(),
            shape: ev.shape.map(|s| match s {
                SColorShape::Complete => "bidirected-complete",
                SColorShape::OddCycle => "bidirected-odd-cycle",
                SColorShape::RegularEulerian => "regular-eulerian",
            }),
            common_list: ev.common_list.clone(),
            conditions_hold: ev.conditions_hold(),
        }
    }
}

/// Violation text with 1-based vertices and classes.
pub fn describe_partition_violation(v: &PartitionViolation) -> String {
    match v {
        PartitionViolation::NotDegenerate { class, core } => format!(
            "class {} is not weakly degenerate; core {}",
            class + 1,
            core.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
        other => other.to_string(),
    }
}

/// Violation text with 1-based vertices and block ids.
pub fn describe_certificate_violation(v: &CertificateViolation) -> String {
    match v {
        CertificateViolation::MalformedBlock(b) => format!("block {} is malformed", b + 1),
        CertificateViolation::TypeMismatch(b) => {
            format!("block {} does not satisfy its recorded type", b + 1)
        }
        CertificateViolation::SumMismatch(x) => {
            format!("block functions do not sum to f at vertex {}", x + 1)
        }
        other => other.to_string(),
    }
}

/// Violation text with 1-based vertices.
pub fn describe_evidence_violation(v: &EvidenceViolation) -> String {
    match v {
        EvidenceViolation::NotTight {
            vertex,
            list,
            out,
            inn,
        } => {
            format!(
                "vertex {}: list size {list} with degrees ({out}, {inn}) is not tight",
                vertex + 1
            )
        }
        EvidenceViolation::BadShape(b) => format!(
            "block {} has none of the three exceptional shapes",
            b.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
        EvidenceViolation::ColorSplit(x) => format!(
            "at vertex {} the block colour sets do not partition the list",
            x + 1
        ),
        EvidenceViolation::WrongBlocks => v.to_string(),
    }
}
