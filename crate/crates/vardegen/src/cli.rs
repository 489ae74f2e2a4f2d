//! Command-line entry points. [`run`] does all the work and returns the exit
//! status with the text to print, so tests can drive it without a process.
//!
//! Exit status: 0 partitionable, colourable, valid or in agreement; 2 hard,
//! not colourable or invalid; 1 bad input; 3 a solver invariant failed.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use vardegen_core::degeneracy::{
    is_weakly_degenerate, validate_partition, DegeneracyFunction, Partition, VectorFunction,
};
use vardegen_core::engine::{Engine, EngineError, SolveOutcome, SolverOptions};
use vardegen_core::hard_pair::{recognize_hard_pair, validate_certificate, HardPairCertificate};
use vardegen_core::oracle::{oracle_solve, OracleVerdict, DEFAULT_BUDGET};
use vardegen_core::reductions::{
    brooks_exception, check_list_evidence, dichromatic_partition, list_color, list_s_color,
    s_degenerate_partition, Color, ListAssignment, ListColorOptions, ListColoring, ReductionError,
    SColoring,
};
use vardegen_core::Digraph;

use crate::format::{
    parse_certificates, parse_instance, parse_partition, render_certificates, render_partition,
    Instance, Payload,
};
use crate::fuzz::{fuzz, FuzzConfig};
use crate::report::{
    describe_certificate_violation, describe_evidence_violation, describe_partition_violation,
    shape_name, CertificateReport, ConditionReport, EvidenceReport, Outcome, Report,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Partition, colouring or certificate files with `c` comment lines.
    Text,
    /// Pretty-printed JSON report.
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "vardegen",
    version,
    about = "Partition digraphs into weakly degenerate parts"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Seed for commands that generate instances.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest number of assignments exhaustive search may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a partition, or certify that none exists.
    Partition {
        /// Instance file, `-` for stdin.
        instance: PathBuf,
        /// Validate every intermediate state of the shifting loops.
        #[arg(long)]
        check_shifts: bool,
    },
    /// Decide whether a connected instance is a hard pair.
    CheckHard { instance: PathBuf },
    /// Check a partition or certificate file against an instance.
    Validate {
        instance: PathBuf,
        #[arg(
            long,
            conflicts_with = "certificate",
            required_unless_present = "certificate"
        )]
        partition: Option<PathBuf>,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Colour from lists with acyclic colour classes.
    ListColor {
        instance: PathBuf,
        /// Use exhaustive search when lists are shorter than the degrees.
        #[arg(long)]
        oracle_fallback: bool,
    },
    /// Colour with acyclic classes; defaults to max degree many colours.
    Brooks {
        instance: PathBuf,
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Partition into weakly s-degenerate classes.
    SColor {
        instance: PathBuf,
        #[arg(long)]
        s: usize,
        /// Number of classes; defaults to ceil(max degree / s).
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Colour from lists with weakly s-degenerate colour classes.
    ListSColor {
        instance: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Exhaustive search for a partition.
    Oracle { instance: PathBuf },
    /// Compare the solver with exhaustive search on random instances.
    Fuzz {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Partition { .. } => "partition",
            Command::CheckHard { .. } => "check-hard",
            Command::Validate { .. } => "validate",
            Command::ListColor { .. } => "list-color",
            Command::Brooks { .. } => "brooks",
            Command::SColor { .. } => "s-color",
            Command::ListSColor { .. } => "list-s-color",
            Command::Oracle { .. } => "oracle",
            Command::Fuzz { .. } => "fuzz",
        }
    }
}

/// A finished command: the report plus the text-mode body.
struct Done {
    report: Report,
    body: String,
}

impl Done {
    fn new(report: Report) -> Self {
        Done {
            report,
            body: String::new(),
        }
    }

    fn with_body(report: Report, body: String) -> Self {
        Done { report, body }
    }
}

/// Outcome of a command that could not run to completion.
fn failure(command: &'static str, outcome: Outcome, message: impl ToString) -> Done {
    let mut r = Report::new(command, outcome);
    r.message = Some(message.to_string());
    Done::new(r)
}

fn input_error(command: &'static str, message: impl ToString) -> Done {
    failure(command, Outcome::InputError, message)
}

fn engine_failure(command: &'static str, e: &EngineError) -> Done {
    let outcome = if e.is_internal() {
        Outcome::InternalError
    } else {
        Outcome::InputError
    };
    failure(command, outcome, e)
}

fn reduction_failure(command: &'static str, e: &ReductionError) -> Done {
    match e {
        ReductionError::Engine(inner) => engine_failure(command, inner),
        _ => input_error(command, e),
    }
}

/// Runs one command and returns its exit status and output.
pub fn run(cli: &Cli) -> (i32, String) {
    let name = cli.command.name();
    let done = dispatch(cli).unwrap_or_else(|message| input_error(name, message));
    let code = done.report.outcome.exit_code();
    let out = match cli.format {
        OutputFormat::Structured => done.report.to_json(),
        OutputFormat::Text => text_output(&done),
    };
    (code, out)
}

fn text_output(done: &Done) -> String {
    let r = &done.report;
    let mut s = format!("c outcome {}\n", r.outcome.name());
    if let Some(m) = &r.message {
        for line in m.lines() {
            let _ = writeln!(s, "c message {line}");
        }
    }
    if let Some(e) = r.exception {
        let _ = writeln!(s, "c exception {e}");
    }
    if let Some(v) = r.verified {
        let _ = writeln!(s, "c verified {v}");
    }
    for v in &r.violations {
        let _ = writeln!(s, "c violation {v}");
    }
    s.push_str(&done.body);
    s
}

fn read_source(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load(path: &Path) -> Result<Instance, String> {
    let text = read_source(path)?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// The vector function of an instance; scalar thresholds become `p = 1`.
fn function_of(instance: &Instance) -> Result<VectorFunction, String> {
    match &instance.payload {
        Payload::Function(f) => Ok(f.clone()),
        Payload::Thresholds(h) => {
            Ok(VectorFunction::new(1, h.0.iter().map(|&x| vec![x]).collect()).expect("p = 1"))
        }
        Payload::Lists(_) => Err("instance has lists; this command needs `f` or `h` lines".into()),
        Payload::None => Err("instance has no `f` or `h` lines".into()),
    }
}

fn lists_of(instance: &Instance) -> Result<&ListAssignment, String> {
    match &instance.payload {
        Payload::Lists(l) => Ok(l),
        _ => Err("this command needs `l` list lines".into()),
    }
}

fn dispatch(cli: &Cli) -> Result<Done, String> {
    let name = cli.command.name();
    Ok(match &cli.command {
        Command::Partition {
            instance,
            check_shifts,
        } => {
            let inst = load(instance)?;
            let f = function_of(&inst)?;
            let mut engine = Engine::new(SolverOptions {
                check_shift_states: *check_shifts,
            });
            match engine.solve(&inst.digraph, &f) {
                Ok(outcome) => solved(name, &inst.digraph, &f, &outcome),
                Err(e) => engine_failure(name, &e),
            }
        }
        Command::CheckHard { instance } => {
            let inst = load(instance)?;
            let f = function_of(&inst)?;
            match recognize_hard_pair(&inst.digraph, &f) {
                Ok(Some(cert)) => certified(name, &inst.digraph, &f, vec![cert]),
                Ok(None) => {
                    let mut r = Report::new(name, Outcome::NotHard);
                    r.vertices = Some(inst.digraph.vertex_count());
                    r.classes = Some(f.p());
                    Done::new(r)
                }
                Err(e) => input_error(name, e),
            }
        }
        Command::Validate {
            instance,
            partition,
            certificate,
        } => {
            let inst = load(instance)?;
            let f = function_of(&inst)?;
            let d = &inst.digraph;
            let mut r = Report::new(name, Outcome::Valid);
            r.vertices = Some(d.vertex_count());
            r.classes = Some(f.p());
            if let Some(path) = partition {
                let part = parse_partition(&read_source(path)?)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                if let Err(v) = validate_partition(d, &f, &part) {
                    r.violations.push(describe_partition_violation(&v));
                }
            } else if let Some(path) = certificate {
                let certs = parse_certificates(&read_source(path)?)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                if certs.is_empty() {
                    r.violations.push("file holds no certificate".into());
                }
                for (i, cert) in certs.iter().enumerate() {
                    if let Err(v) = validate_certificate(d, &f, cert) {
                        r.violations.push(format!(
                            "certificate {}: {}",
                            i + 1,
                            describe_certificate_violation(&v)
                        ));
                    }
                }
            }
            if !r.violations.is_empty() {
                r.outcome = Outcome::Invalid;
            }
            Done::new(r)
        }
        Command::ListColor {
            instance,
            oracle_fallback,
        } => {
            let inst = load(instance)?;
            let l = lists_of(&inst)?;
            let d = &inst.digraph;
            let opts = ListColorOptions {
                oracle_fallback: *oracle_fallback,
                budget: cli.budget,
            };
            match list_color(d, l, opts) {
                Ok(ListColoring::Colored(phi)) => colored(name, d, l, phi, 1),
                Ok(ListColoring::NotColorable(evidence)) => {
                    let mut r = Report::new(name, Outcome::NotColorable);
                    r.vertices = Some(d.vertex_count());
                    let mut body = String::new();
                    let mut certs = Vec::new();
                    for ev in &evidence {
                        let checked = check_list_evidence(d, l, ev);
                        if let Err(v) = &checked {
                            r.violations.push(describe_evidence_violation(v));
                        }
                        r.evidence.push(EvidenceReport::new(ev, checked.is_ok()));
                        for b in &ev.blocks {
                            let _ = writeln!(
                                body,
                                "c evidence block {} {} vertices {} colors {}",
                                b.kind.tag(),
                                shape_name(b.shape),
                                join(b.vertices.iter().map(|v| v + 1)),
                                join(b.colors.iter())
                            );
                        }
                        certs.push(ev.certificate.clone());
                    }
                    r.verified = Some(r.violations.is_empty());
                    body.push_str(&render_certificates(d.vertex_count(), &certs));
                    if !r.violations.is_empty() {
                        r.outcome = Outcome::InternalError;
                    }
                    Done::with_body(r, body)
                }
                Ok(ListColoring::NotColorableBySearch) => {
                    let mut r = Report::new(name, Outcome::NotColorable);
                    r.vertices = Some(d.vertex_count());
                    r.message = Some("exhaustive search found no colouring".into());
                    Done::new(r)
                }
                Err(e) => reduction_failure(name, &e),
            }
        }
        Command::Brooks { instance, colors } => {
            let inst = load(instance)?;
            let d = &inst.digraph;
            let p = colors.unwrap_or_else(|| d.max_degree().max(1));
            let f = VectorFunction::constant(d.vertex_count(), &vec![1; p]);
            let mut done = match dichromatic_partition(d, p) {
                Ok(outcome) => solved(name, d, &f, &outcome),
                Err(e) => reduction_failure(name, &e),
            };
            done.report.exception = brooks_exception(d).map(shape_name);
            done
        }
        Command::SColor {
            instance,
            s,
            colors,
        } => {
            let inst = load(instance)?;
            let d = &inst.digraph;
            let p = colors.unwrap_or_else(|| d.max_degree().div_ceil((*s).max(1)).max(1));
            let f = VectorFunction::constant(d.vertex_count(), &vec![*s; p]);
            match s_degenerate_partition(d, *s, p) {
                Ok(outcome) => solved(name, d, &f, &outcome),
                Err(e) => reduction_failure(name, &e),
            }
        }
        Command::ListSColor { instance, s } => {
            let inst = load(instance)?;
            let l = lists_of(&inst)?;
            let d = &inst.digraph;
            match list_s_color(d, l, *s) {
                Ok(SColoring::Colored(phi)) => colored(name, d, l, phi, *s),
                Ok(SColoring::NotColorable(evidence)) => {
                    let mut r = Report::new(name, Outcome::NotColorable);
                    r.vertices = Some(d.vertex_count());
                    let mut body = String::new();
                    for ev in &evidence {
                        let c = ConditionReport::from(ev);
                        let _ = writeln!(
                            body,
                            "c condition component {} shape {} common-list {} holds {}",
                            join(c.component.iter()),
                            c.shape.unwrap_or("none"),
                            c.common_list
                                .as_ref()
                                .map_or("none".to_string(), |l| join(l.iter())),
                            c.conditions_hold
                        );
                        if !c.conditions_hold {
                            r.violations.push(format!(
                                "conditions fail on component {}",
                                join(c.component.iter())
                            ));
                        }
                        r.conditions.push(c);
                    }
                    r.verified = Some(r.violations.is_empty());
                    if !r.violations.is_empty() {
                        r.outcome = Outcome::InternalError;
                    }
                    let certs: Vec<_> = evidence.into_iter().map(|e| e.certificate).collect();
                    body.push_str(&render_certificates(d.vertex_count(), &certs));
                    Done::with_body(r, body)
                }
                Err(e) => reduction_failure(name, &e),
            }
        }
        Command::Oracle { instance } => {
            let inst = load(instance)?;
            let f = function_of(&inst)?;
            let d = &inst.digraph;
            match oracle_solve(d, &f, cli.budget) {
                Ok(OracleVerdict::Feasible(part)) => {
                    let mut r = Report::new(name, Outcome::Feasible);
                    r.vertices = Some(d.vertex_count());
                    r.classes = Some(f.p());
                    r.partition = Some(part.classes_of().iter().map(|c| c + 1).collect());
                    r.verified = Some(validate_partition(d, &f, &part).is_ok());
                    Done::with_body(r, render_partition(&part))
                }
                Ok(OracleVerdict::Infeasible) => {
                    let mut r = Report::new(name, Outcome::Infeasible);
                    r.vertices = Some(d.vertex_count());
                    r.classes = Some(f.p());
                    Done::new(r)
                }
                Err(e) => input_error(name, e),
            }
        }
        Command::Fuzz { n_max, p, cases } => {
            if *n_max == 0 || *p == 0 {
                return Err("--n-max and --p must be at least 1".into());
            }
            let config = FuzzConfig {
                n_max: *n_max,
                p: *p,
                cases: *cases,
                seed: cli.seed,
                budget: cli.budget,
                check_shift_states: true,
            };
            let summary = fuzz(&config);
            let outcome = if summary.failures.is_empty() {
                Outcome::Agreement
            } else {
                Outcome::Disagreement
            };
            let mut r = Report::new(name, outcome);
            let mut body = format!(
                "c cases {} partitionable {} hard {} skipped {}\n",
                summary.cases, summary.partitionable, summary.hard, summary.skipped
            );
            for fail in &summary.failures {
                let _ = writeln!(body, "c failure case {}: {}", fail.case, fail.reason);
            }
            r.fuzz = Some(summary);
            Done::with_body(r, body)
        }
    })
}

fn join<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Report for a solver outcome, with every returned object re-validated.
fn solved(name: &'static str, d: &Digraph, f: &VectorFunction, outcome: &SolveOutcome) -> Done {
    match outcome.partition() {
        Some(part) => partitioned(name, d, f, part),
        None => certified(name, d, f, outcome.certificates().cloned().collect()),
    }
}

fn partitioned(name: &'static str, d: &Digraph, f: &VectorFunction, part: Partition) -> Done {
    let mut r = Report::new(name, Outcome::Partitionable);
    r.vertices = Some(d.vertex_count());
    r.classes = Some(f.p());
    r.partition = Some(part.classes_of().iter().map(|c| c + 1).collect());
    if let Err(v) = validate_partition(d, f, &part) {
        r.violations.push(describe_partition_violation(&v));
        r.outcome = Outcome::InternalError;
    }
    r.verified = Some(r.violations.is_empty());
    Done::with_body(r, render_partition(&part))
}

fn certified(
    name: &'static str,
    d: &Digraph,
    f: &VectorFunction,
    certs: Vec<HardPairCertificate>,
) -> Done {
    let mut r = Report::new(name, Outcome::Hard);
    r.vertices = Some(d.vertex_count());
    r.classes = Some(f.p());
    for (i, cert) in certs.iter().enumerate() {
        if let Err(v) = validate_certificate(d, f, cert) {
            r.violations.push(format!(
                "certificate {}: {}",
                i + 1,
                describe_certificate_violation(&v)
            ));
        }
        r.certificates.push(CertificateReport::from(cert));
    }
    if !r.violations.is_empty() {
        r.outcome = Outcome::InternalError;
    }
    r.verified = Some(r.violations.is_empty());
    Done::with_body(r, render_certificates(d.vertex_count(), &certs))
}

/// Report for a list colouring; each colour class must be weakly
/// `s`-degenerate, which for `s = 1` means acyclic.
fn colored(name: &'static str, d: &Digraph, l: &ListAssignment, phi: Vec<Color>, s: usize) -> Done {
    let mut r = Report::new(name, Outcome::Colorable);
    r.vertices = Some(d.vertex_count());
    for v in (0..d.vertex_count()).filter(|&v| !l.list(v).contains(&phi[v])) {
        r.violations
            .push(format!("vertex {} coloured outside its list", v + 1));
    }
    let palette: BTreeSet<Color> = phi.iter().copied().collect();
    for c in palette {
        let members: Vec<usize> = (0..d.vertex_count()).filter(|&v| phi[v] == c).collect();
        let class = d
            .induced_subdigraph(&members)
            .expect("vertices in range")
            .graph;
        if !is_weakly_degenerate(&class, &DegeneracyFunction::constant(members.len(), s)) {
            r.violations
                .push(format!("colour class {c} is not weakly {s}-degenerate"));
        }
    }
    if !r.violations.is_empty() {
        r.outcome = Outcome::InternalError;
    }
    r.verified = Some(r.violations.is_empty());
    let mut body = format!("p coloring {}\n", d.vertex_count());
    for (v, c) in phi.iter().enumerate() {
        let _ = writeln!(body, "v {} {}", v + 1, c);
    }
    r.coloring = Some(phi);
    Done::with_body(r, body)
}
