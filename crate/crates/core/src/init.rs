//! Two-step construction of the initial group.
//!
//! Step one keeps exactly one active neighbor per churn node, which yields a
//! candidate set that covers every churn node. Step two draws each initial
//! individual from that candidate set only. Both steps pick nodes under one
//! of three strategies driven by the singleton fitness `f({v})`:
//! proportional to it, inversely proportional to it, or uniformly.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::graph::{BipartiteGraph, ChurnIndex, NodeId};
use crate::individual::Individual;
use crate::rng::{label, substream};

/// Floor applied to singleton fitness before inverting it.
pub const INVERSE_EPSILON: f64 = 1e-12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InitError {
    #[error("candidate set is empty")]
    EmptyCandidates,
    #[error("unknown selection strategy `{0}` (expected proportional, inverse, random or mixed)")]
    UnknownStrategy(String),
    #[error("{0}")]
    InvalidParameter(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SelectionStrategy {
    Proportional,
    InverseProportional,
    UniformRandom,
}

impl SelectionStrategy {
    pub const ALL: [SelectionStrategy; 3] = [
        SelectionStrategy::Proportional,
        SelectionStrategy::InverseProportional,
        SelectionStrategy::UniformRandom,
    ];

    /// Unnormalized draw weight of a node with singleton fitness `f`.
    pub fn weight(self, f: f64) -> f64 {
        match self {
            SelectionStrategy::Proportional => f.max(0.0),
            SelectionStrategy::InverseProportional => 1.0 / f.max(INVERSE_EPSILON),
            SelectionStrategy::UniformRandom => 1.0,
        }
    }

    fn tag(self) -> u64 {
        match self {
            SelectionStrategy::Proportional => 0,
            SelectionStrategy::InverseProportional => 1,
            SelectionStrategy::UniformRandom => 2,
        }
    }
}

impl fmt::Display for SelectionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelectionStrategy::Proportional => "proportional",
            SelectionStrategy::InverseProportional => "inverse",
            SelectionStrategy::UniformRandom => "random",
        })
    }
}

impl FromStr for SelectionStrategy {
    type Err = InitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "proportional" => Ok(SelectionStrategy::Proportional),
            "inverse" => Ok(SelectionStrategy::InverseProportional),
            "random" => Ok(SelectionStrategy::UniformRandom),
            other => Err(InitError::UnknownStrategy(other.to_string())),
        }
    }
}

/// Strategy assignment across a group: one strategy for everyone, or an even
/// rotation through all three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StrategyPlan {
    #[default]
    Mixed,
    Fixed(SelectionStrategy),
}

impl StrategyPlan {
    fn for_slot(self, slot: usize) -> SelectionStrategy {
        match self {
            StrategyPlan::Fixed(s) => s,
            StrategyPlan::Mixed => SelectionStrategy::ALL[slot % 3],
        }
    }
}

impl fmt::Display for StrategyPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyPlan::Mixed => f.write_str("mixed"),
            StrategyPlan::Fixed(s) => s.fmt(f),
        }
    }
}

impl FromStr for StrategyPlan {
    type Err = InitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "mixed" => Ok(StrategyPlan::Mixed),
            other => other.parse().map(StrategyPlan::Fixed),
        }
    }
}

/// The candidate genes: one preserved active neighbor per churn node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    members: Vec<usize>,
    provenance: Vec<u32>,
}

impl CandidateSet {
    /// Dense rows in the set, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn member_ids(&self, graph: &BipartiteGraph) -> Vec<NodeId> {
        self.members.iter().map(|&r| graph.active_id(r)).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Row preserved for dense churn node `churn`.
    pub fn preserved(&self, churn: usize) -> usize {
        self.provenance[churn] as usize
    }

    pub fn contains(&self, row: usize) -> bool {
        self.members.binary_search(&row).is_ok()
    }

    /// True when every churn node of `graph` is adjacent to a member.
    pub fn covers(&self, graph: &BipartiteGraph) -> bool {
        let mut hit = vec![false; graph.churn_count()];
        for &r in &self.members {
            for &c in graph.row(r) {
                hit[c as usize] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Draws one index from `weights`; falls back to uniform when the weights sum
/// to zero or overflow.
fn roulette<R: Rng>(weights: impl Iterator<Item = f64> + Clone, n: usize, rng: &mut R) -> usize {
    let total: f64 = weights.clone().sum();
    if !total.is_finite() || total <= 0.0 {
        return rng.random_range(0..n);
    }
    let target = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut last_positive = 0;
    for (i, w) in weights.enumerate() {
        if w > 0.0 {
            last_positive = i;
        }
        acc += w;
        if target < acc {
            return i;
        }
    }
    last_positive
}

/// Step one: for each churn node keep exactly one of its active neighbors.
///
/// `singleton` holds `f({v})` per active row (degree, or weight sum in
/// weighted mode).
pub fn build_candidate_set(
    graph: &BipartiteGraph,
    index: &ChurnIndex,
    singleton: &[f64],
    strategy: SelectionStrategy,
    seed: u64,
) -> CandidateSet {
    assert_eq!(singleton.len(), graph.active_count(), "singleton fitness misaligned");
    assert_eq!(index.churn_count(), graph.churn_count(), "churn index misaligned");
    let mut rng = substream(seed, &[label::CANDIDATES, strategy.tag()]);
    let mut provenance = Vec::with_capacity(index.churn_count());
    let mut chosen = vec![false; graph.active_count()];
    for c in 0..index.churn_count() {
        let neigh = index.neighbors(c);
        let pick = if neigh.len() == 1 {
            neigh[0]
        } else {
            let weights = neigh.iter().map(|&a| strategy.weight(singleton[a as usize]));
            neigh[roulette(weights, neigh.len(), &mut rng)]
        };
        provenance.push(pick);
        chosen[pick as usize] = true;
    }
    let members = (0..graph.active_count()).filter(|&r| chosen[r]).collect();
    CandidateSet { members, provenance }
}

/// Draws `n` distinct rows from `pool` with per-row weights, using
/// exponential-key weighted reservoir sampling. Zero-weight rows are taken
/// only after every positive-weight row.
pub fn weighted_sample<R: Rng>(pool: &[usize], weights: &[f64], n: usize, rng: &mut R) -> Vec<usize> {
    debug_assert_eq!(pool.len(), weights.len());
    if n >= pool.len() {
        return pool.to_vec();
    }
    let mut keyed: Vec<(f64, usize)> = pool
        .iter()
        .zip(weights)
        .map(|(&row, &w)| {
            // u in (0, 1]; ln(u) / w is the log of u^(1/w)
            let u = 1.0 - rng.random::<f64>();
            let key = if w > 0.0 { u.ln() / w } else { f64::NEG_INFINITY };
            (key, row)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut rows: Vec<usize> = keyed.into_iter().take(n).map(|(_, r)| r).collect();
    rows.sort_unstable();
    rows
}

/// An initial individual together with the strategies that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct SeededIndividual {
    pub individual: Individual,
    pub candidate_strategy: SelectionStrategy,
    pub draw_strategy: SelectionStrategy,
}

fn check_sizes(budget: usize, group_size: usize) -> Result<(), InitError> {
    if budget == 0 {
        return Err(InitError::InvalidParameter("budget must be at least 1".into()));
    }
    if group_size < 2 {
        return Err(InitError::InvalidParameter("group size must be at least 2".into()));
    }
    Ok(())
}

fn draw_individual(
    graph: &BipartiteGraph,
    candidates: &CandidateSet,
    singleton: &[f64],
    strategy: SelectionStrategy,
    budget: usize,
    seed: u64,
    slot: usize,
) -> Individual {
    let mut rng = substream(seed, &[label::INITIAL, slot as u64]);
    let weights: Vec<f64> = candidates
        .members()
        .iter()
        .map(|&r| strategy.weight(singleton[r]))
        .collect();
    let rows = weighted_sample(candidates.members(), &weights, budget, &mut rng);
    Individual::from_rows(graph.active_count(), rows)
}

/// Step two: draws `group_size` individuals of `min(budget, |candidates|)`
/// genes each, all taken from `candidates`.
pub fn build_initial_group(
    graph: &BipartiteGraph,
    candidates: &CandidateSet,
    singleton: &[f64],
    plan: StrategyPlan,
    budget: usize,
    group_size: usize,
    seed: u64,
) -> Result<Vec<(Individual, SelectionStrategy)>, InitError> {
    check_sizes(budget, group_size)?;
    if candidates.is_empty() {
        return Err(InitError::EmptyCandidates);
    }
    Ok((0..group_size)
        .map(|j| {
            let s = plan.for_slot(j);
            (draw_individual(graph, candidates, singleton, s, budget, seed, j), s)
        })
        .collect())
}

/// Full two-step initialization.
///
/// Under a mixed plan, individual `j` draws with strategy `j mod 3` in step
/// two and from the candidate set built with strategy `(j + j/3) mod 3` in
/// step one, so both steps split the group evenly and every nine
/// consecutive slots cover all nine combinations.
#[allow(clippy::too_many_arguments)]
pub fn two_step_group(
    graph: &BipartiteGraph,
    index: &ChurnIndex,
    singleton: &[f64],
    candidate_plan: StrategyPlan,
    draw_plan: StrategyPlan,
    budget: usize,
    group_size: usize,
    seed: u64,
) -> Result<Vec<SeededIndividual>, InitError> {
    check_sizes(budget, group_size)?;
    let candidate_for = |j: usize| match candidate_plan {
        StrategyPlan::Fixed(s) => s,
        StrategyPlan::Mixed => SelectionStrategy::ALL[(j + j / 3) % 3],
    };
    let sets: Vec<(SelectionStrategy, CandidateSet)> = SelectionStrategy::ALL
        .iter()
        .filter(|s| (0..group_size).any(|j| candidate_for(j) == **s))
        .map(|&s| (s, build_candidate_set(graph, index, singleton, s, seed)))
        .collect();
    (0..group_size)
        .map(|j| {
            let cs = candidate_for(j);
            let candidates = &sets.iter().find(|(s, _)| *s == cs).expect("built above").1;
            if candidates.is_empty() {
                return Err(InitError::EmptyCandidates);
            }
            let ds = draw_plan.for_slot(j);
            Ok(SeededIndividual {
                individual: draw_individual(graph, candidates, singleton, ds, budget, seed, j),
                candidate_strategy: cs,
                draw_strategy: ds,
            })
        })
        .collect()
}

/// Uniform `min(budget, active_count)`-subsets of all active rows; the
/// ablation alternative to two-step initialization.
pub fn random_group(
    graph: &BipartiteGraph,
    budget: usize,
    group_size: usize,
    seed: u64,
) -> Result<Vec<Individual>, InitError> {
    check_sizes(budget, group_size)?;
    let n = graph.active_count();
    Ok((0..group_size)
        .map(|j| {
            let mut rng = substream(seed, &[label::INITIAL, j as u64, 1]);
            let k = budget.min(n);
            Individual::from_rows(n, rand::seq::index::sample(&mut rng, n, k))
        })
        .collect())
}
