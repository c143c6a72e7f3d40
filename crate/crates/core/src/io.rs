//! Text formats: group files, DOT and JSON documents.
//!
//! A group file starts with `degree: n`; every later non-empty line that does
//! not start with `#` holds one generator in cycle notation.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::futility::{ArcCountBounds, FutilityVerdict, Shape, Witness};
use crate::group::PermGroup;
use crate::orbital::{isolated_vertices, Arc, OrbitalGraph};
use crate::perm::Permutation;
use crate::refine::RefinementTrace;

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or(Error::Input {
        line: 1,
        message: "missing `degree: n` header".into(),
    })?;
    let degree = header
        .strip_prefix("degree:")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::Input {
            line: line_no,
            message: format!("expected `degree: n` with n > 0, found {header:?}"),
        })?;
    let generators = lines
        .map(|(line, text)| {
            Permutation::parse(text, degree).map_err(|e| Error::Input {
                line,
                message: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, generators)
}

pub fn read_group(path: impl AsRef<Path>) -> Result<PermGroup> {
    parse_group(&std::fs::read_to_string(path)?)
}

/// Renders a group in the file format read by [`parse_group`].
pub fn format_group(group: &PermGroup) -> String {
    let mut out = format!("degree: {}\n", group.degree());
    for g in group.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// DOT rendering: isolated vertices first, then arcs in lexicographic order.
pub fn to_dot(graph: &OrbitalGraph) -> String {
    let mut out = String::from("digraph orbital {\n");
    for v in isolated_vertices(graph) {
        let _ = writeln!(out, "  {v};");
    }
    for &(x, y) in graph.arcs() {
        let _ = writeln!(out, "  {x} -> {y};");
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub degree: usize,
    pub base_pair: [usize; 2],
    pub arcs: Vec<[usize; 2]>,
    pub isolated: Vec<usize>,
}

impl GraphDocument {
    pub fn from_graph(graph: &OrbitalGraph) -> Self {
        let (a, b) = graph.base_pair();
        GraphDocument {
            degree: graph.degree(),
            base_pair: [a, b],
            arcs: graph.arcs().iter().map(|&(x, y)| [x, y]).collect(),
            isolated: isolated_vertices(graph),
        }
    }

    /// Rebuilds the graph; the `isolated` field must agree with the arcs.
    pub fn to_graph(&self) -> Result<OrbitalGraph> {
        let arcs = self.arcs.iter().map(|&[x, y]| (x, y)).collect();
        let graph = OrbitalGraph::from_arcs(self.degree, (self.base_pair[0], self.base_pair[1]), arcs)?;
        if isolated_vertices(&graph) != self.isolated {
            return Err(Error::InvalidGraph("isolated vertex list disagrees with arcs".into()));
        }
        Ok(graph)
    }
}

pub fn graph_to_json(graph: &OrbitalGraph) -> String {
    serde_json::to_string(&GraphDocument::from_graph(graph)).expect("serializable")
}

pub fn graph_from_json(text: &str) -> Result<OrbitalGraph> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Structural,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub permutation_cycles: String,
    pub violated_arc: [usize; 2],
}

impl From<&Witness> for WitnessDocument {
    fn from(w: &Witness) -> Self {
        WitnessDocument {
            permutation_cycles: w.permutation.to_string(),
            violated_arc: [w.violated_arc.0, w.violated_arc.1],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub threshold: usize,
    pub exceeds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub base_pair: [usize; 2],
    pub futile: bool,
    pub shape: String,
    pub method: Method,
    pub witness: Option<WitnessDocument>,
    pub arc_count: usize,
    pub thresholds: Thresholds,
}

impl VerdictDocument {
    /// `shape` is only known to the structural method; the other two report
    /// `futile` or `not-futile`.
    pub fn new(
        base_pair: Arc,
        method: Method,
        futile: bool,
        shape: Option<&Shape>,
        witness: Option<&Witness>,
        bounds: &ArcCountBounds,
    ) -> Self {
        let shape = match (shape, futile) {
            (Some(s), _) => s.name().to_string(),
            (None, true) => "futile".to_string(),
            (None, false) => Shape::NotFutile.name().to_string(),
        };
        VerdictDocument {
            base_pair: [base_pair.0, base_pair.1],
            futile,
            shape,
            method,
            witness: witness.map(WitnessDocument::from),
            arc_count: bounds.arc_count,
            thresholds: Thresholds {
                threshold: bounds.threshold,
                exceeds: bounds.exceeds,
            },
        }
    }

    pub fn structural(base_pair: Arc, verdict: &FutilityVerdict, bounds: &ArcCountBounds) -> Self {
        Self::new(
            base_pair,
            Method::Structural,
            verdict.futile,
            Some(&verdict.shape),
            verdict.witness.as_ref(),
            bounds,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub base_pair: [usize; 2],
    pub rounds: usize,
    pub split_count: usize,
    pub cells_before: Vec<Vec<usize>>,
    pub cells_after: Vec<Vec<usize>>,
}

impl From<&RefinementTrace> for TraceDocument {
    fn from(t: &RefinementTrace) -> Self {
        TraceDocument {
            base_pair: [t.base_pair.0, t.base_pair.1],
            rounds: t.rounds,
            split_count: t.split_count,
            cells_before: t.input.cells().to_vec(),
            cells_after: t.output.cells().to_vec(),
        }
    }
}
