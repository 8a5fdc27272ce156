//! Reference methods: degree greedy, marginal-coverage greedy, random
//! subsets, and an exhaustive oracle for small instances.
//!
//! Ties are always broken toward the smaller node id. Reported fitness is
//! computed by the fitness engine so every method is scored identically.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::fitness::{FitnessEngine, FitnessError, FitnessValue};
use crate::graph::BipartiteGraph;
use crate::individual::Individual;
use crate::measure::EdgeMeasure;
use crate::rng::{label, substream};

/// Largest number of subsets [`brute_force`] will enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("budget must be at least 1")]
    InvalidBudget,
    #[error("random baseline needs at least one trial")]
    NoTrials,
    #[error("exhaustive search over C({active}, {budget}) subsets exceeds the limit of {limit}")]
    TooLarge { active: usize, budget: usize, limit: u128 },
    #[error(transparent)]
    Fitness(#[from] FitnessError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Ga,
    DegreeGreedy,
    CoverageGreedy,
    Random,
    BruteForce,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Ga,
        Method::DegreeGreedy,
        Method::CoverageGreedy,
        Method::Random,
        Method::BruteForce,
    ];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Ga => "ga",
            Method::DegreeGreedy => "degree-greedy",
            Method::CoverageGreedy => "coverage-greedy",
            Method::Random => "random",
            Method::BruteForce => "brute-force",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.to_string() == s.trim())
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BaselineResult {
    pub method: Method,
    pub individual: Individual,
    pub fitness: FitnessValue,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomBaselineResult {
    /// Best of all trials.
    pub best: BaselineResult,
    pub mean_fitness: f64,
    pub mean_covered: f64,
    pub trials: usize,
}

fn effective_budget(graph: &BipartiteGraph, budget: usize) -> Result<usize, OracleError> {
    if budget == 0 {
        return Err(OracleError::InvalidBudget);
    }
    Ok(budget.min(graph.active_count()))
}

fn finish(engine: &FitnessEngine<'_>, method: Method, individual: Individual) -> Result<BaselineResult, OracleError> {
    let fitness = engine.evaluate(&individual)?;
    Ok(BaselineResult {
        method,
        individual,
        fitness,
    })
}

/// The `budget` active nodes with the most churn neighbors.
pub fn degree_greedy(
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    budget: usize,
) -> Result<BaselineResult, OracleError> {
    let engine = FitnessEngine::new(graph, measures)?;
    let k = effective_budget(graph, budget)?;
    let mut rows: Vec<usize> = (0..graph.active_count()).collect();
    rows.sort_by_key(|&r| (Reverse(graph.degree(r)), r));
    rows.truncate(k);
    finish(
        &engine,
        Method::DegreeGreedy,
        Individual::from_rows(graph.active_count(), rows),
    )
}

/// Greedy by marginal fitness gain. Unweighted coverage is submodular, so
/// stale gains bound fresh ones and a lazy heap is exact; weighted fitness
/// (a mean per churn node) is not, so every gain is recomputed each round.
pub fn coverage_greedy(
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    budget: usize,
) -> Result<BaselineResult, OracleError> {
    let engine = FitnessEngine::new(graph, measures)?;
    let k = effective_budget(graph, budget)?;
    let picked = match measures {
        None => lazy_coverage_greedy(graph, k),
        Some(m) => weighted_greedy(graph, m, k),
    };
    finish(
        &engine,
        Method::CoverageGreedy,
        Individual::from_rows(graph.active_count(), picked),
    )
}

fn lazy_coverage_greedy(graph: &BipartiteGraph, k: usize) -> Vec<usize> {
    let mut covered = vec![false; graph.churn_count()];
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = (0..graph.active_count())
        .map(|r| (graph.degree(r), Reverse(r)))
        .collect();
    let mut picked = Vec::with_capacity(k);
    while picked.len() < k {
        let Some((stale, Reverse(row))) = heap.pop() else {
            break;
        };
        let gain = graph.row(row).iter().filter(|&&c| !covered[c as usize]).count();
        if gain == stale {
            for &c in graph.row(row) {
                covered[c as usize] = true;
            }
            picked.push(row);
        } else {
            heap.push((gain, Reverse(row)));
        }
    }
    picked
}

fn weighted_greedy(graph: &BipartiteGraph, measures: &EdgeMeasure, k: usize) -> Vec<usize> {
    let weights = measures.edge_weights();
    let mut sums = vec![0.0f64; graph.churn_count()];
    let mut counts = vec![0u32; graph.churn_count()];
    let mut chosen = vec![false; graph.active_count()];
    let mut picked = Vec::with_capacity(k);
    while picked.len() < k {
        let mut best: Option<(f64, usize)> = None;
        for row in (0..graph.active_count()).filter(|&r| !chosen[r]) {
            let gain: f64 = graph
                .row(row)
                .iter()
                .zip(&weights[graph.edge_range(row)])
                .map(|(&c, &w)| {
                    let (s, n) = (sums[c as usize], counts[c as usize]);
                    let before = if n > 0 { s / n as f64 } else { 0.0 };
                    (s + w) / (n + 1) as f64 - before
                })
                .sum();
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, row));
            }
        }
        let Some((_, row)) = best else { break };
        chosen[row] = true;
        for (&c, &w) in graph.row(row).iter().zip(&weights[graph.edge_range(row)]) {
            sums[c as usize] += w;
            counts[c as usize] += 1;
        }
        picked.push(row);
    }
    picked.sort_unstable();
    picked
}

/// Uniform random `budget`-subsets. Reports both the mean over trials and
/// the best trial.
pub fn random_baseline(
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    budget: usize,
    seed: u64,
    trials: usize,
) -> Result<RandomBaselineResult, OracleError> {
    let engine = FitnessEngine::new(graph, measures)?;
    let k = effective_budget(graph, budget)?;
    if trials == 0 {
        return Err(OracleError::NoTrials);
    }
    let n = graph.active_count();
    let results: Vec<(Individual, FitnessValue)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, &[label::RANDOM_BASELINE, t as u64]);
            let ind = Individual::from_rows(n, rand::seq::index::sample(&mut rng, n, k));
            let f = engine.evaluate(&ind).expect("sized to the graph");
            (ind, f)
        })
        .collect();
    let mean_fitness = results.iter().map(|(_, f)| f.value).sum::<f64>() / trials as f64;
    let mean_covered = results.iter().map(|(_, f)| f.covered as f64).sum::<f64>() / trials as f64;
    let (ind, fitness) = results
        .into_iter()
        .reduce(|best, cur| if cur.1.value > best.1.value { cur } else { best })
        .expect("trials >= 1");
    Ok(RandomBaselineResult {
        best: BaselineResult {
            method: Method::Random,
            individual: ind,
            fitness,
        },
        mean_fitness,
        mean_covered,
        trials,
    })
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact: acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Scores one subset directly from the rows, without sharding.
struct DirectScorer<'a> {
    graph: &'a BipartiteGraph,
    weights: Option<&'a [f64]>,
    stamp: Vec<u64>,
    sums: Vec<f64>,
    counts: Vec<u32>,
    touched: Vec<usize>,
    epoch: u64,
}

impl<'a> DirectScorer<'a> {
    fn new(graph: &'a BipartiteGraph, measures: Option<&'a EdgeMeasure>) -> Self {
        let n = graph.churn_count();
        DirectScorer {
            graph,
            weights: measures.map(|m| m.edge_weights()),
            stamp: vec![0; n],
            sums: vec![0.0; n],
            counts: vec![0; n],
            touched: Vec::new(),
            epoch: 0,
        }
    }

    fn score(&mut self, rows: &[usize]) -> f64 {
        self.epoch += 1;
        self.touched.clear();
        for &row in rows {
            for (k, &c) in self.graph.row(row).iter().enumerate() {
                let c = c as usize;
                if self.stamp[c] != self.epoch {
                    self.stamp[c] = self.epoch;
                    self.sums[c] = 0.0;
                    self.counts[c] = 0;
                    self.touched.push(c);
                }
                self.sums[c] += self.weights.map_or(1.0, |w| w[self.graph.edge_range(row).start + k]);
                self.counts[c] += 1;
            }
        }
        match self.weights {
            None => self.touched.len() as f64,
            Some(_) => self.touched.iter().map(|&c| self.sums[c] / self.counts[c] as f64).sum(),
        }
    }
}

/// Exhaustive search over every `budget`-subset in lexicographic id order;
/// the first maximizer wins.
pub fn brute_force(
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    budget: usize,
) -> Result<BaselineResult, OracleError> {
    let engine = FitnessEngine::new(graph, measures)?;
    let k = effective_budget(graph, budget)?;
    let n = graph.active_count();
    if binomial(n, k) > BRUTE_FORCE_LIMIT {
        return Err(OracleError::TooLarge {
            active: n,
            budget: k,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut scorer = DirectScorer::new(graph, measures);
    let mut combo: Vec<usize> = (0..k).collect();
    let mut best = (scorer.score(&combo), combo.clone());
    while advance(&mut combo, n) {
        let v = scorer.score(&combo);
        if v > best.0 {
            best = (v, combo.clone());
        }
    }
    finish(&engine, Method::BruteForce, Individual::from_rows(n, best.1))
}

/// Steps `combo` to the next k-subset of `0..n` in lexicographic order.
fn advance(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
