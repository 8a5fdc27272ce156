//! Run manifests and benchmark reports.
//!
//! Reports serialize to pretty-printed JSON with a fixed key order, so two
//! runs of the same configuration produce byte-identical files once the
//! `runtime_ms` fields are zeroed (see [`RunReport::strip_runtime`]).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::baselines::Method;
use crate::fitness::FitnessValue;
use crate::ga::{GaReport, GenerationStats};
use crate::graph::BipartiteGraph;
use crate::individual::Individual;

pub const RUN_FORMAT: &str = "nodecover-run/1";
pub const BENCH_FORMAT: &str = "nodecover-bench/1";

/// Relative improvement of `value` over `reference`, in percent:
/// `(value − reference) / reference × 100`. `None` when the reference is 0.
pub fn increase_pct(value: f64, reference: f64) -> Option<f64> {
    (reference != 0.0).then(|| (value - reference) / reference * 100.0)
}

/// Lower-case hex SHA-256 of a file's contents.
pub fn file_digest(path: &Path) -> std::io::Result<String> {
    let mut file = std::fs::File::open(path)?;
    let mut hasher = Sha256::new();
    let mut buf = vec![0u8; 1 << 16];
    loop {
        let n = file.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}

/// Original ids of the selected rows, ascending.
pub fn individual_ids(graph: &BipartiteGraph, ind: &Individual) -> Vec<u64> {
    let mut ids: Vec<u64> = ind.ones().map(|r| graph.active_id(r).0).collect();
    ids.sort_unstable();
    ids
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputFile {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub active_count: usize,
    pub churn_count: usize,
    pub edge_count: usize,
    pub shards: usize,
}

impl GraphSummary {
    pub fn of(graph: &BipartiteGraph) -> Self {
        GraphSummary {
            active_count: graph.active_count(),
            churn_count: graph.churn_count(),
            edge_count: graph.edge_count(),
            shards: graph.shards().len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomStats {
    pub trials: usize,
    pub mean_fitness: f64,
    pub mean_covered: f64,
    pub best_fitness: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistoryRow {
    pub generation: usize,
    pub best: Option<f64>,
    pub mean: f64,
    pub min: f64,
    pub mean_cardinality: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaStats {
    pub evaluations: usize,
    pub initial_best: Option<f64>,
    pub history: Vec<HistoryRow>,
}

impl GaStats {
    pub fn of(report: &GaReport) -> Self {
        let row = |generation: usize, s: &GenerationStats| HistoryRow {
            generation,
            best: s.best,
            mean: s.mean,
            min: s.min,
            mean_cardinality: s.mean_cardinality,
        };
        GaStats {
            evaluations: report.evaluations,
            initial_best: report.initial.best,
            history: report.history.iter().enumerate().map(|(g, s)| row(g + 1, s)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    /// Fitness of the reported individual.
    pub fitness: f64,
    pub covered_count: usize,
    /// Value used in comparisons: the mean over trials for `random`,
    /// otherwise `fitness`.
    pub comparison_value: f64,
    pub individual: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub random: Option<RandomStats>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ga: Option<GaStats>,
    pub runtime_ms: f64,
}

impl MethodResult {
    pub fn new(method: Method, graph: &BipartiteGraph, ind: &Individual, fitness: FitnessValue) -> Self {
        MethodResult {
            method: method.to_string(),
            fitness: fitness.value,
            covered_count: fitness.covered,
            comparison_value: fitness.value,
            individual: individual_ids(graph, ind),
            random: None,
            ga: None,
            runtime_ms: 0.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub method: String,
    pub reference: String,
    pub method_value: f64,
    pub reference_value: f64,
    /// `(method_value − reference_value) / reference_value × 100`.
    pub increased_by_pct: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub format: String,
    pub seed: u64,
    pub seed_source: String,
    pub inputs: Vec<InputFile>,
    pub graph: GraphSummary,
    pub budget: usize,
    pub weighted: bool,
    pub random_trials: usize,
    pub config: BTreeMap<String, String>,
    pub results: Vec<MethodResult>,
    pub comparisons: Vec<Comparison>,
    pub runtime_ms: f64,
}

impl RunReport {
    /// Comparisons of the first result against every other result.
    pub fn compare_first(results: &[MethodResult]) -> Vec<Comparison> {
        let Some((lead, rest)) = results.split_first() else {
            return Vec::new();
        };
        rest.iter()
            .map(|other| Comparison {
                method: lead.method.clone(),
                reference: other.method.clone(),
                method_value: lead.comparison_value,
                reference_value: other.comparison_value,
                increased_by_pct: increase_pct(lead.comparison_value, other.comparison_value),
            })
            .collect()
    }

    pub fn strip_runtime(&mut self) {
        self.runtime_ms = 0.0;
        for r in &mut self.results {
            r.runtime_ms = 0.0;
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(
            out,
            "graph: {} active, {} churn, {} edges, {} shard(s); budget {}{}",
            g.active_count,
            g.churn_count,
            g.edge_count,
            g.shards,
            self.budget,
            if self.weighted { " (weighted)" } else { "" }
        );
        let _ = writeln!(out, "seed: {} ({})", self.seed, self.seed_source);
        for r in &self.results {
            let _ = write!(
                out,
                "{:<16} fitness {:>14}  covered {:>10}  {:>9.1} ms",
                r.method,
                fmt_value(r.fitness),
                r.covered_count,
                r.runtime_ms
            );
            if let Some(rs) = &r.random {
                let _ = write!(out, "  (mean of {} trials: {})", rs.trials, fmt_value(rs.mean_fitness));
            }
            out.push('\n');
        }
        for c in &self.comparisons {
            let pct = c
                .increased_by_pct
                .map_or_else(|| "n/a".to_string(), |p| format!("{p:.2}%"));
            let _ = writeln!(out, "{} increased by {} over {}", c.method, pct, c.reference);
        }
        if let [only] = self.results.as_slice() {
            if only.individual.len() <= 32 {
                let ids: Vec<String> = only.individual.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "individual: {{{}}}", ids.join(", "));
            }
        }
        out
    }
}

pub(crate) fn fmt_value(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.6}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub method: String,
    pub fitness: f64,
    pub covered: f64,
    pub runtime_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchInstance {
    pub index: usize,
    pub graph_seed: u64,
    pub graph: GraphSummary,
    pub rows: Vec<BenchRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssertionOutcome {
    pub assertion: String,
    pub instance: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub format: String,
    pub seed: u64,
    pub spec: BTreeMap<String, String>,
    pub instances: Vec<BenchInstance>,
    pub assertions: Vec<AssertionOutcome>,
}

impl BenchReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn strip_runtime(&mut self) {
        for inst in &mut self.instances {
            for row in &mut inst.rows {
                row.runtime_ms = 0.0;
            }
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<8} {:<16} {:>14} {:>12} {:>11}",
            "instance", "method", "fitness", "covered", "runtime_ms"
        );
        for inst in &self.instances {
            for row in &inst.rows {
                let _ = writeln!(
                    out,
                    "{:<8} {:<16} {:>14} {:>12} {:>11.1}",
                    inst.index,
                    row.method,
                    fmt_value(row.fitness),
                    fmt_value(row.covered),
                    row.runtime_ms
                );
            }
        }
        for a in &self.assertions {
            let _ = writeln!(
                out,
                "[{}] instance {}: {} ({} vs {})",
                if a.passed { "PASS" } else { "FAIL" },
                a.instance,
                a.assertion,
                fmt_value(a.lhs),
                fmt_value(a.rhs)
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn increase_matches_reference_figures() {
        let ga = 48_805_199.0;
        let pct_degree = increase_pct(ga, 44_306_059.0).unwrap();
        let pct_random = increase_pct(ga, 42_110_428.0).unwrap();
        assert_eq!(format!("{pct_degree:.2}"), "10.15");
        assert_eq!(format!("{pct_random:.2}"), "15.90");
        assert_eq!(increase_pct(3.0, 0.0), None);
    }

    #[test]
    fn comparisons_are_against_first() {
        let mk = |m: &str, v: f64| MethodResult {
            method: m.into(),
            fitness: v,
            covered_count: v as usize,
            comparison_value: v,
            individual: vec![],
            random: None,
            ga: None,
            runtime_ms: 1.0,
        };
        let cmp = RunReport::compare_first(&[mk("ga", 110.0), mk("degree-greedy", 100.0), mk("random", 50.0)]);
        assert_eq!(cmp.len(), 2);
        assert_eq!(cmp[0].increased_by_pct, Some(10.0));
        assert_eq!(cmp[1].increased_by_pct, Some(120.0));
    }

    #[test]
    fn value_formatting() {
        assert_eq!(fmt_value(4.0), "4");
        assert_eq!(fmt_value(1.3), "1.300000");
    }
}
