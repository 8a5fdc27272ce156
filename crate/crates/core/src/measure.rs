//! Per-link behavioral weights `m(active, churn)`, each the probability that
//! the active user acts on the link and the churn user returns.
//!
//! Weights are stored aligned with the graph's flat edge array. Edges with no
//! explicit weight take `default_weight`, which is 1 so that weighted fitness
//! degrades to plain coverage when no behavioral data is available.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Beta, Distribution};
use thiserror::Error;

use crate::graph::{parse_record, BipartiteGraph, GraphError, NodeId};
use crate::rng::{label, substream};

pub const DEFAULT_WEIGHT: f64 = 1.0;

#[derive(Debug, Error)]
pub enum MeasureError {
    #[error(transparent)]
    Record(#[from] GraphError),
    #[error("line {line}: weight field missing")]
    MissingWeight { line: usize },
    #[error("line {line}: `{text}` is not a decimal weight")]
    BadWeight { line: usize, text: String },
    #[error("line {line}: weight {weight} outside [0, 1]")]
    OutOfRange { line: usize, weight: f64 },
    #[error("{} record(s) name edges absent from the graph: {}", .0.len(), format_edges(.0))]
    UnknownEdges(Vec<(NodeId, NodeId)>),
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn format_edges(edges: &[(NodeId, NodeId)]) -> String {
    const SHOWN: usize = 10;
    let mut s: Vec<String> = edges.iter().take(SHOWN).map(|(a, c)| format!("({a}, {c})")).collect();
    if edges.len() > SHOWN {
        s.push("...".into());
    }
    s.join(", ")
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeMeasure {
    weights: Vec<f64>,
    default_weight: f64,
}

impl EdgeMeasure {
    /// Every edge of `graph` at `weight`.
    pub fn constant(graph: &BipartiteGraph, weight: f64) -> Result<Self, MeasureError> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(MeasureError::InvalidDistribution(format!(
                "constant weight {weight} outside [0, 1]"
            )));
        }
        Ok(EdgeMeasure {
            weights: vec![weight; graph.edge_count()],
            default_weight: DEFAULT_WEIGHT,
        })
    }

    /// Weight of edge `(row, churn)` in dense indices, or the default if the
    /// edge does not exist.
    pub fn weight(&self, graph: &BipartiteGraph, row: usize, churn: usize) -> f64 {
        graph
            .edge_position(row, churn)
            .map_or(self.default_weight, |p| self.weights[p])
    }

    /// Weight by original ids.
    pub fn get(&self, graph: &BipartiteGraph, active: NodeId, churn: NodeId) -> Option<f64> {
        let row = graph.active_index(active)?;
        let c = graph.churn_index(churn)?;
        graph.edge_position(row, c).map(|p| self.weights[p])
    }

    /// Weights aligned with the graph's flat edge array.
    pub fn edge_weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn default_weight(&self) -> f64 {
        self.default_weight
    }

    /// True when this measure was built for a graph with `graph`'s edge count.
    pub fn matches(&self, graph: &BipartiteGraph) -> bool {
        self.weights.len() == graph.edge_count()
    }

    /// Writes one `(active, churn, weight)` record per edge.
    pub fn write<W: Write>(&self, graph: &BipartiteGraph, mut out: W) -> std::io::Result<()> {
        for row in 0..graph.active_count() {
            let a = graph.active_id(row);
            for (&c, &w) in graph.row(row).iter().zip(&self.weights[graph.edge_range(row)]) {
                writeln!(out, "{}\t{}\t{}", a, graph.churn_id(c as usize), w)?;
            }
        }
        out.flush()
    }
}

/// Reads a weight file against `graph`. Every record must name an existing
/// edge; edges absent from the file keep the default weight of 1. When a
/// record repeats an edge, the last one wins.
pub fn load_measures<R: BufRead>(reader: R, graph: &BipartiteGraph) -> Result<EdgeMeasure, MeasureError> {
    let mut weights = vec![DEFAULT_WEIGHT; graph.edge_count()];
    let mut unknown = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let Some(rec) = parse_record(&line, lineno, 3)? else {
            continue;
        };
        let text = rec.extra.ok_or(MeasureError::MissingWeight { line: lineno })?;
        let weight: f64 = text.parse().map_err(|_| MeasureError::BadWeight {
            line: lineno,
            text: text.to_string(),
        })?;
        if !(0.0..=1.0).contains(&weight) {
            return Err(MeasureError::OutOfRange { line: lineno, weight });
        }
        let pos = graph
            .active_index(rec.active)
            .zip(graph.churn_index(rec.churn))
            .and_then(|(r, c)| graph.edge_position(r, c));
        match pos {
            Some(p) => weights[p] = weight,
            None => unknown.push((rec.active, rec.churn)),
        }
    }
    if !unknown.is_empty() {
        return Err(MeasureError::UnknownEdges(unknown));
    }
    Ok(EdgeMeasure {
        weights,
        default_weight: DEFAULT_WEIGHT,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WeightDistribution {
    Constant(f64),
    Uniform { lo: f64, hi: f64 },
    Beta { a: f64, b: f64 },
}

impl WeightDistribution {
    fn validate(&self) -> Result<(), MeasureError> {
        let unit = |x: f64| (0.0..=1.0).contains(&x);
        let ok = match *self {
            WeightDistribution::Constant(w) => unit(w),
            WeightDistribution::Uniform { lo, hi } => unit(lo) && unit(hi) && lo <= hi,
            WeightDistribution::Beta { a, b } => a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(MeasureError::InvalidDistribution(format!("{self}")))
        }
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightDistribution::Constant(w) => write!(f, "constant:{w}"),
            WeightDistribution::Uniform { lo, hi } => write!(f, "uniform:{lo},{hi}"),
            WeightDistribution::Beta { a, b } => write!(f, "beta:{a},{b}"),
        }
    }
}

impl FromStr for WeightDistribution {
    type Err = MeasureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MeasureError::InvalidDistribution(format!("cannot parse `{s}`"));
        let (kind, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<f64> = params
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let dist = match (kind, nums.as_slice()) {
            ("constant", &[w]) => WeightDistribution::Constant(w),
            ("uniform", &[lo, hi]) => WeightDistribution::Uniform { lo, hi },
            ("beta", &[a, b]) => WeightDistribution::Beta { a, b },
            _ => return Err(bad()),
        };
        dist.validate()?;
        Ok(dist)
    }
}

/// Draws one weight per edge of `graph`, deterministically under `seed`.
pub fn generate_measures(
    graph: &BipartiteGraph,
    distribution: WeightDistribution,
    seed: u64,
) -> Result<EdgeMeasure, MeasureError> {
    distribution.validate()?;
    let mut rng = substream(seed, &[label::MEASURE]);
    let n = graph.edge_count();
    let weights: Vec<f64> = match distribution {
        WeightDistribution::Constant(w) => vec![w; n],
        WeightDistribution::Uniform { lo, hi } => (0..n).map(|_| lo + (hi - lo) * rng.random::<f64>()).collect(),
        WeightDistribution::Beta { a, b } => {
            let beta = Beta::new(a, b).map_err(|e| MeasureError::InvalidDistribution(e.to_string()))?;
            (0..n).map(|_| beta.sample(&mut rng)).collect()
        }
    };
    Ok(EdgeMeasure {
        weights,
        default_weight: DEFAULT_WEIGHT,
    })
}
