//! Shard-parallel fitness evaluation.
//!
//! Evaluation follows a flatten / merge-by-key plan. Each shard scans only
//! its own selected rows and emits a partial aggregate keyed by churn node:
//! a churn bitmap for plain coverage, or sorted `(churn, sum, count)` records
//! for weighted fitness. Partials are merged in shard index order with an
//! associative, commutative combine (bitwise OR, component-wise addition),
//! and the weighted mean per churn node is taken once after the final merge.
//!
//! For a fixed shard count every result is bit-reproducible. Unweighted
//! values are exact integers and independent of the shard count; weighted
//! values may differ across shard counts only by floating-point
//! reassociation.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::BipartiteGraph;
use crate::individual::Individual;
use crate::measure::EdgeMeasure;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FitnessError {
    #[error("individual spans {found} rows but the graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("measure holds {found} edge weights but the graph has {expected} edges")]
    MeasureMismatch { expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitnessValue {
    /// Objective value: distinct churn nodes covered, or the sum over covered
    /// churn nodes of their mean link weight.
    pub value: f64,
    /// Distinct churn nodes reached.
    pub covered: usize,
}

impl FitnessValue {
    pub const ZERO: FitnessValue = FitnessValue { value: 0.0, covered: 0 };
}

/// Per-shard partial for plain coverage.
struct ChurnBitmap(Vec<u64>);

impl ChurnBitmap {
    fn merge(mut self, other: &ChurnBitmap) -> ChurnBitmap {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
        self
    }
}

/// Per-shard partial for weighted fitness: `(churn, sum, count)` sorted by
/// churn, sums accumulated in row order.
struct WeightedPartial(Vec<(u32, f64, u32)>);

/// Evaluator bound to one graph and an optional weight table.
#[derive(Clone, Copy)]
pub struct FitnessEngine<'a> {
    graph: &'a BipartiteGraph,
    measures: Option<&'a EdgeMeasure>,
}

impl<'a> FitnessEngine<'a> {
    pub fn new(graph: &'a BipartiteGraph, measures: Option<&'a EdgeMeasure>) -> Result<Self, FitnessError> {
        if let Some(m) = measures {
            if !m.matches(graph) {
                return Err(FitnessError::MeasureMismatch {
                    expected: graph.edge_count(),
                    found: m.edge_weights().len(),
                });
            }
        }
        Ok(FitnessEngine { graph, measures })
    }

    pub fn unweighted(graph: &'a BipartiteGraph) -> Self {
        FitnessEngine { graph, measures: None }
    }

    pub fn graph(&self) -> &'a BipartiteGraph {
        self.graph
    }

    pub fn is_weighted(&self) -> bool {
        self.measures.is_some()
    }

    fn check(&self, ind: &Individual) -> Result<(), FitnessError> {
        if ind.len() != self.graph.active_count() {
            return Err(FitnessError::LengthMismatch {
                expected: self.graph.active_count(),
                found: ind.len(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, ind: &Individual) -> Result<FitnessValue, FitnessError> {
        self.check(ind)?;
        Ok(self.evaluate_unchecked(ind))
    }

    /// Evaluates every member of `group`. Work is split into
    /// (individual, shard) units and scheduled on the rayon pool.
    pub fn evaluate_group(&self, group: &[Individual]) -> Result<Vec<FitnessValue>, FitnessError> {
        for ind in group {
            self.check(ind)?;
        }
        Ok(group.par_iter().map(|ind| self.evaluate_unchecked(ind)).collect())
    }

    fn evaluate_unchecked(&self, ind: &Individual) -> FitnessValue {
        match self.measures {
            None => self.coverage(ind),
            Some(m) => self.weighted(m, ind),
        }
    }

    fn coverage(&self, ind: &Individual) -> FitnessValue {
        let words = self.graph.churn_count().div_ceil(64);
        let partials: Vec<ChurnBitmap> = self
            .graph
            .shards()
            .par_iter()
            .map(|shard| {
                let mut bits = vec![0u64; words];
                for row in ind.ones_in(shard.clone()) {
                    for &c in self.graph.row(row) {
                        bits[c as usize / 64] |= 1 << (c % 64);
                    }
                }
                ChurnBitmap(bits)
            })
            .collect();
        let merged = partials.iter().fold(ChurnBitmap(vec![0; words]), |acc, p| acc.merge(p));
        let covered = merged.0.iter().map(|w| w.count_ones() as usize).sum();
        FitnessValue {
            value: covered as f64,
            covered,
        }
    }

    fn weighted(&self, measures: &EdgeMeasure, ind: &Individual) -> FitnessValue {
        let weights = measures.edge_weights();
        let partials: Vec<WeightedPartial> = self
            .graph
            .shards()
            .par_iter()
            .map(|shard| {
                let mut flat: Vec<(u32, f64)> = Vec::new();
                for row in ind.ones_in(shard.clone()) {
                    let range = self.graph.edge_range(row);
                    flat.extend(self.graph.row(row).iter().copied().zip(weights[range].iter().copied()));
                }
                // stable: equal churn keys keep row order
                flat.sort_by_key(|&(c, _)| c);
                let mut out: Vec<(u32, f64, u32)> = Vec::new();
                for (c, w) in flat {
                    match out.last_mut() {
                        Some(last) if last.0 == c => {
                            last.1 += w;
                            last.2 += 1;
                        }
                        _ => out.push((c, w, 1)),
                    }
                }
                WeightedPartial(out)
            })
            .collect();

        let mut acc = vec![(0.0f64, 0u32); self.graph.churn_count()];
        for p in &partials {
            for &(c, s, n) in &p.0 {
                let slot = &mut acc[c as usize];
                slot.0 += s;
                slot.1 += n;
            }
        }
        let mut value = 0.0;
        let mut covered = 0;
        for &(s, n) in &acc {
            if n > 0 {
                value += s / n as f64;
                covered += 1;
            }
        }
        FitnessValue { value, covered }
    }

    /// `f({row})` for every row: its degree, or the sum of its link weights
    /// in weighted mode.
    pub fn singleton_fitness(&self) -> Vec<f64> {
        let g = self.graph;
        (0..g.active_count())
            .map(|r| match self.measures {
                None => g.degree(r) as f64,
                Some(m) => m.edge_weights()[g.edge_range(r)].iter().sum(),
            })
            .collect()
    }
}

/// Distinct churn nodes adjacent to any selected row.
pub fn fitness_unweighted(graph: &BipartiteGraph, ind: &Individual) -> Result<FitnessValue, FitnessError> {
    FitnessEngine::unweighted(graph).evaluate(ind)
}

/// Sum over covered churn nodes of the mean weight of their selected links.
pub fn fitness_weighted(
    graph: &BipartiteGraph,
    measures: &EdgeMeasure,
    ind: &Individual,
) -> Result<FitnessValue, FitnessError> {
    FitnessEngine::new(graph, Some(measures))?.evaluate(ind)
}

pub fn evaluate_group(
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    group: &[Individual],
) -> Result<Vec<FitnessValue>, FitnessError> {
    FitnessEngine::new(graph, measures)?.evaluate_group(group)
}
