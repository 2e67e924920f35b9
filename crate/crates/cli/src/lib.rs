// SPDX-License-Identifier: Apache-2.0

//! Command implementations behind the `boolnet` binary.
//!
//! Every command returns a serializable report; `main` prints it as JSON and
//! maps errors to exit codes through [`CliError::exit_code`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use boolnet::constructions::{self as cons, Claims};
use boolnet::cover::{admissibility_check, can_exact_search};
use boolnet::designs::{fano, sqs8, sts, CaCheck, Violation};
use boolnet::{
    AdmissibilityReport, BooleanNetwork, GraphMetrics, InteractionGraph, Monotonicity,
    SteinerSystem, Uncovered, VectorSet,
};
use serde::Serialize;
use thiserror::Error;

pub const EXIT_PARAMETER: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] boolnet::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: boolnet::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Lib(e) | CliError::Input { source: e, .. } => match e {
                boolnet::Error::Parse(_) => EXIT_IO,
                boolnet::Error::Verification(_) => EXIT_VERIFICATION,
                _ => EXIT_PARAMETER,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

fn parse_with<T>(path: &Path, f: impl FnOnce(&str) -> boolnet::Result<T>) -> Result<T> {
    let text = read_file(path)?;
    f(&text).map_err(|source| CliError::Input { path: path.into(), source })
}

pub fn load_network(path: &Path) -> Result<BooleanNetwork> {
    parse_with(path, BooleanNetwork::from_json)
}

pub fn load_graph(path: &Path) -> Result<InteractionGraph> {
    parse_with(path, InteractionGraph::from_dot)
}

pub fn load_rows(path: &Path) -> Result<VectorSet> {
    parse_with(path, VectorSet::from_text)
}

/// `fano`, `sqs8`, `sts:<n>`, or a path to a Steiner file.
pub fn load_steiner(source: &str) -> Result<SteinerSystem> {
    match source {
        "fano" => Ok(fano()),
        "sqs8" => Ok(sqs8()),
        _ => match source.strip_prefix("sts:") {
            Some(n) => {
                let n = n.parse().map_err(|_| {
                    boolnet::Error::Parameter(format!("bad point count in {source:?}"))
                })?;
                Ok(sts(n)?)
            }
            None => parse_with(Path::new(source), SteinerSystem::from_text),
        },
    }
}

/// A construction request with its inputs already loaded.
#[derive(Debug, Clone)]
pub enum Construction {
    Linear(InteractionGraph),
    Sk { n: usize, k: usize },
    Windmill { m: usize, k: usize },
    CliqueGluing { r: usize, s: usize },
    CliquePlusLoops { n: usize, k: usize },
    SteinerMonotone(SteinerSystem),
    AddLoop(BooleanNetwork),
    PivotExtend { f: BooleanNetwork, f_tilde: BooleanNetwork, loopless: bool },
    Product(Vec<BooleanNetwork>),
    StrongUnion(Vec<BooleanNetwork>),
}

impl Construction {
    pub fn build(&self) -> boolnet::Result<(BooleanNetwork, Claims)> {
        Ok(match self {
            Construction::Linear(g) => (cons::linear_network(g)?, cons::linear_claims(g)),
            Construction::Sk { n, k } => (cons::sk_network(*n, *k)?, cons::sk_claims(*n, *k)?),
            Construction::Windmill { m, k } => {
                (cons::windmill(*m, *k)?.1, cons::windmill_claims(*m, *k)?)
            }
            Construction::CliqueGluing { r, s } => {
                (cons::clique_gluing(*r, *s)?.1, cons::clique_gluing_claims(*r, *s)?)
            }
            Construction::CliquePlusLoops { n, k } => (
                cons::clique_plus_loops(*n, *k)?,
                cons::clique_plus_loops_claims(*n, *k),
            ),
            Construction::SteinerMonotone(s) => {
                (cons::steiner_monotone(s)?, cons::steiner_monotone_claims(s)?)
            }
            Construction::AddLoop(f) => (cons::add_loop(f)?, cons::add_loop_claims(f)),
            Construction::PivotExtend { f, f_tilde, loopless } => (
                cons::extend_with_pivot(f, f_tilde, *loopless)?,
                cons::pivot_claims(f, f_tilde),
            ),
            Construction::Product(fs) => (cons::disjoint_product(fs)?, cons::product_claims(fs)),
            Construction::StrongUnion(fs) => {
                (cons::strong_union(fs)?, cons::strong_union_claims(fs))
            }
        })
    }
}

/// Builds the network and, when `verify` is set, checks its advertised
/// properties.
pub fn construct(c: &Construction, verify: bool) -> Result<BooleanNetwork> {
    let (f, claims) = c.build()?;
    if verify {
        claims.check(&f)?;
    }
    Ok(f)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct NodeReport {
    pub node: usize,
    pub ic_index: usize,
    pub unate: bool,
    pub monotone: bool,
    /// One of `+`, `-`, `*` (both), `x` (neither) per input, variable 1 first.
    pub profile: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FeedbackReport {
    pub tau: usize,
    /// 1-based.
    pub witness: Vec<usize>,
    /// `fp_count <= 2^tau`.
    pub bound_holds: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct UncoveredReport {
    /// 1-based.
    pub indices: Vec<usize>,
    pub pattern: String,
}

impl From<Uncovered> for UncoveredReport {
    fn from(u: Uncovered) -> Self {
        UncoveredReport {
            indices: u.indices.iter().map(|i| i + 1).collect(),
            pattern: u.pattern.iter().map(|&b| if b { '1' } else { '0' }).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GraphReport {
    pub arcs: usize,
    #[serde(flatten)]
    pub metrics: GraphMetrics,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub fp_count: u64,
    pub independence_number: usize,
    /// First index set and pattern missing at strength `independence_number + 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<UncoveredReport>,
    pub nodes: Vec<NodeReport>,
    pub all_monotone: bool,
    pub min_ic_index: usize,
    /// Absent when the graph has too many cyclic vertices for the exact solver.
    pub feedback: Option<FeedbackReport>,
    pub graph: GraphReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

pub struct Analysis {
    pub report: AnalysisReport,
    pub fixed_points: VectorSet,
    pub graph: InteractionGraph,
}

fn profile_char(m: Monotonicity) -> char {
    match m {
        Monotonicity::Increasing => '+',
        Monotonicity::Decreasing => '-',
        Monotonicity::Both => '*',
        Monotonicity::Neither => 'x',
    }
}

pub fn analyze(f: &BooleanNetwork, timing: bool) -> Analysis {
    let mut times = BTreeMap::new();
    let mut lap = {
        let mut t = Instant::now();
        move |name: &'static str, times: &mut BTreeMap<&'static str, f64>| {
            times.insert(name, t.elapsed().as_secs_f64() * 1e3);
            t = Instant::now();
        }
    };

    let fixed_points = f.fixed_points();
    lap("fixed_points", &mut times);
    let (strength, uncovered) = fixed_points.strength_with_witness();
    lap("strength", &mut times);
    let nodes: Vec<NodeReport> = f
        .functions()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let profile = g.unate_profile();
            NodeReport {
                node: i + 1,
                ic_index: g.ic_index(),
                unate: profile.is_unate(),
                monotone: profile.is_monotone(),
                profile: profile.0.iter().copied().map(profile_char).collect(),
            }
        })
        .collect();
    lap("functions", &mut times);
    let graph = f.interaction_graph();
    let fp_count = fixed_points.len() as u64;
    let feedback = graph.feedback_vertex_set().ok().map(|fs| FeedbackReport {
        bound_holds: fs.size >= 64 || fp_count <= 1u64 << fs.size,
        tau: fs.size,
        witness: fs.witness.iter().map(|v| v + 1).collect(),
    });
    lap("feedback", &mut times);

    let report = AnalysisReport {
        n: f.n(),
        fp_count,
        independence_number: strength.unwrap_or(0),
        uncovered: uncovered.map(Into::into),
        all_monotone: nodes.iter().all(|r| r.monotone),
        min_ic_index: nodes.iter().map(|r| r.ic_index).min().unwrap_or(0),
        nodes,
        feedback,
        graph: GraphReport { arcs: graph.arc_count(), metrics: graph.metrics() },
        timings_ms: timing.then_some(times),
    };
    Analysis { report, fixed_points, graph }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StrengthReport {
    pub n: usize,
    pub rows: usize,
    /// `-1` when the set is empty.
    pub strength: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<UncoveredReport>,
}

pub fn strength(set: &VectorSet) -> StrengthReport {
    let (s, u) = set.strength_with_witness();
    StrengthReport {
        n: set.n(),
        rows: set.len(),
        strength: s.map_or(-1, |s| s as i64),
        uncovered: u.map(Into::into),
    }
}

pub fn admissible(g: &InteractionGraph, k: usize) -> Result<AdmissibilityReport> {
    Ok(admissibility_check(g, k)?)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SteinerReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub blocks: usize,
    pub valid: bool,
    /// Indices inside are 1-based.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ca_check: Option<CaCheck>,
}

/// Fails with a verification error when the system is invalid or the
/// covering-array check does not hold; the report is returned either way.
pub fn verify_steiner(s: &SteinerSystem, ca_check: bool) -> (SteinerReport, Result<()>) {
    let violation = s.first_violation().map(|v| match v {
        Violation::BlockWeight { block, weight } => Violation::BlockWeight { block: block + 1, weight },
        Violation::Cover { subset, count } => Violation::Cover {
            subset: subset.iter().map(|p| p + 1).collect(),
            count,
        },
    });
    let mut outcome = Ok(());
    let ca = if ca_check && violation.is_none() {
        match s.ca_check() {
            Ok(c) => Some(c),
            Err(e) => {
                outcome = Err(e.into());
                None
            }
        }
    } else {
        None
    };
    let report = SteinerReport {
        n: s.n,
        k: s.k,
        t: s.t,
        blocks: s.blocks().len(),
        valid: violation.is_none(),
        violation,
        ca_check: ca,
    };
    if outcome.is_ok() {
        if let Some(v) = &report.violation {
            outcome = Err(boolnet::Error::Verification(format!("not a Steiner system: {v:?}")).into());
        } else if report.ca_check.is_some_and(|c| !c.holds) {
            outcome = Err(boolnet::Error::Verification(
                "block rows lack the expected strength".into(),
            )
            .into());
        }
    }
    (report, outcome)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CanSearchReport {
    pub n: usize,
    pub k: usize,
    pub max_rows: usize,
    /// Minimum row count, absent when none up to `max_rows` works.
    pub can: Option<usize>,
}

pub fn can_search(n: usize, k: usize, max_rows: usize) -> Result<CanSearchReport> {
    Ok(CanSearchReport { n, k, max_rows, can: can_exact_search(n, k, max_rows)? })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports are serializable")
}
