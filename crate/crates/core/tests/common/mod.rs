#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use nodecover::graph::{load_edge_list, BipartiteGraph, NodeId};
use nodecover::measure::{load_measures, EdgeMeasure};
use nodecover::Individual;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The 3 × 4 example: active 1, 4, 7 against churn 2, 3, 5, 6.
pub const TOY_EDGES: &str = "1\t2\n1\t6\n4\t3\n4\t6\n7\t2\n7\t5\n";

/// Weights for the toy graph: four links below 1, the other two at 1.
pub const TOY_WEIGHTS: &str = "1\t2\t0.5\n1\t6\t0.2\n4\t3\t0.4\n4\t6\t0.6\n7\t2\t1\n7\t5\t1\n";

pub fn toy() -> BipartiteGraph {
    load_edge_list(TOY_EDGES.as_bytes()).unwrap()
}

pub fn toy_weights(graph: &BipartiteGraph) -> EdgeMeasure {
    load_measures(TOY_WEIGHTS.as_bytes(), graph).unwrap()
}

/// Individual selecting the given original active ids.
pub fn select(graph: &BipartiteGraph, ids: &[u64]) -> Individual {
    let rows = ids
        .iter()
        .map(|&id| graph.active_index(NodeId(id)).expect("id in graph"));
    Individual::from_rows(graph.active_count(), rows)
}

/// A small random instance and its budget, as used by the small-optimum
/// suite: 5..=15 active rows, 5..=25 churn nodes, 1..=4 links per row.
pub fn small_instance(index: u64) -> (BipartiteGraph, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(index);
    let active = rng.random_range(5..=15usize);
    let churn = rng.random_range(5..=25usize);
    let rows: Vec<(NodeId, Vec<NodeId>)> = (0..active)
        .map(|a| {
            let degree = rng.random_range(1..=4usize.min(churn));
            let mut picked: Vec<NodeId> = rand::seq::index::sample(&mut rng, churn, degree)
                .into_iter()
                .map(|c| NodeId(c as u64))
                .collect();
            picked.sort_unstable();
            (NodeId(a as u64), picked)
        })
        .collect();
    let graph = BipartiteGraph::from_rows(rows);
    let budget = rng.random_range(1..=4usize).min(graph.active_count());
    (graph, budget)
}

/// Plain edge list of a graph in original ids.
pub fn edges(graph: &BipartiteGraph) -> Vec<(u64, u64)> {
    (0..graph.active_count())
        .flat_map(|r| {
            let a = graph.active_id(r).0;
            graph.row(r).iter().map(move |&c| (a, graph.churn_id(c as usize).0))
        })
        .collect()
}

/// Coverage straight from the definition: distinct churn ids adjacent to
/// any selected active id.
pub fn coverage_oracle(edges: &[(u64, u64)], selected: &BTreeSet<u64>) -> usize {
    edges
        .iter()
        .filter(|(a, _)| selected.contains(a))
        .map(|&(_, c)| c)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Weighted fitness straight from the definition: for each covered churn
/// node, the mean weight of its links into the selection, summed.
pub fn weighted_oracle(weighted_edges: &[(u64, u64, f64)], selected: &BTreeSet<u64>) -> f64 {
    let mut per_churn: BTreeMap<u64, (f64, usize)> = BTreeMap::new();
    for &(a, c, w) in weighted_edges {
        if selected.contains(&a) {
            let e = per_churn.entry(c).or_default();
            e.0 += w;
            e.1 += 1;
        }
    }
    per_churn.values().map(|&(s, n)| s / n as f64).sum()
}

/// Exhaustive optimum over all `k`-subsets of the active ids, from the
/// definition.
pub fn optimum_oracle(edges: &[(u64, u64)], k: usize) -> usize {
    let ids: Vec<u64> = edges.iter().map(|e| e.0).collect::<BTreeSet<_>>().into_iter().collect();
    let k = k.min(ids.len());
    let mut best = 0;
    for mask in 0u64..(1 << ids.len()) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let selected: BTreeSet<u64> = (0..ids.len()).filter(|i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
        best = best.max(coverage_oracle(edges, &selected));
    }
    best
}
