mod common;

use std::collections::BTreeSet;

use nodecover::graph::{BipartiteGraph, NodeId};
use nodecover::measure::EdgeMeasure;
use nodecover::{fitness_unweighted, fitness_weighted, run_ga, transpose, FitnessEngine, GaConfig, Individual};
use proptest::prelude::*;

use common::{coverage_oracle, edges, toy, weighted_oracle};

/// Rows of up to 12 active nodes over up to 20 churn nodes, with a weight
/// per link.
fn weighted_rows() -> impl Strategy<Value = Vec<(u64, Vec<(u64, f64)>)>> {
    prop::collection::vec(prop::collection::vec((0u64..20, 0.0f64..=1.0), 1..6), 1..12).prop_map(|rows| {
        rows.into_iter()
            .enumerate()
            .map(|(a, links)| (a as u64, links))
            .collect()
    })
}

fn build(rows: &[(u64, Vec<(u64, f64)>)]) -> (BipartiteGraph, EdgeMeasure, Vec<(u64, u64, f64)>) {
    let graph = BipartiteGraph::from_rows(
        rows.iter()
            .map(|(a, links)| (NodeId(*a), links.iter().map(|&(c, _)| NodeId(c)).collect())),
    );
    // the loader keeps the last record of a duplicated link; mirror that
    let mut text = String::new();
    let mut last = std::collections::BTreeMap::new();
    for (a, links) in rows {
        for &(c, w) in links {
            text.push_str(&format!("{a}\t{c}\t{w}\n"));
            last.insert((*a, c), w);
        }
    }
    let measures = nodecover::load_measures(text.as_bytes(), &graph).unwrap();
    let weighted = last.into_iter().map(|((a, c), w)| (a, c, w)).collect();
    (graph, measures, weighted)
}

fn subset(graph: &BipartiteGraph, mask: u64) -> (Individual, BTreeSet<u64>) {
    let rows: Vec<usize> = (0..graph.active_count()).filter(|r| mask >> r & 1 == 1).collect();
    let ids = rows.iter().map(|&r| graph.active_id(r).0).collect();
    (Individual::from_rows(graph.active_count(), rows), ids)
}

proptest! {
    #[test]
    fn engine_matches_definitions(rows in weighted_rows(), mask in any::<u64>(), shards in 1usize..6) {
        let (graph, measures, weighted) = build(&rows);
        let graph = graph.repartition(shards);
        let (ind, ids) = subset(&graph, mask);
        let u = fitness_unweighted(&graph, &ind).unwrap();
        prop_assert_eq!(u.value as usize, coverage_oracle(&edges(&graph), &ids));
        let w = fitness_weighted(&graph, &measures, &ind).unwrap();
        prop_assert!((w.value - weighted_oracle(&weighted, &ids)).abs() <= 1e-9);
        prop_assert!(w.value <= u.value + 1e-12, "weighted {} above coverage {}", w.value, u.value);
    }

    #[test]
    fn coverage_is_monotone_and_submodular(rows in weighted_rows(), small in any::<u64>(), extra in any::<u64>(), v in 0usize..12) {
        let (graph, _, _) = build(&rows);
        let n = graph.active_count();
        let v = v % n;
        let (a, _) = subset(&graph, small & !(1 << v));
        let (b, _) = subset(&graph, (small | extra) & !(1 << v));
        let f = |ind: &Individual| fitness_unweighted(&graph, ind).unwrap().value;
        let with = |ind: &Individual| { let mut x = ind.clone(); x.insert(v); x };
        prop_assert!(f(&a) <= f(&b));
        prop_assert!(f(&with(&a)) - f(&a) >= f(&with(&b)) - f(&b));
    }

    #[test]
    fn repartition_is_content_neutral(rows in weighted_rows(), k in 1usize..16) {
        let (graph, _, _) = build(&rows);
        let parted = graph.repartition(k);
        prop_assert_eq!(edges(&graph), edges(&parted));
        let shards = parted.shards();
        prop_assert_eq!(shards.first().unwrap().start, 0);
        prop_assert_eq!(shards.last().unwrap().end, graph.active_count());
        prop_assert!(shards.windows(2).all(|w| w[0].end == w[1].start));
        prop_assert!(shards.iter().all(|s| !s.is_empty()));
    }

    #[test]
    fn transpose_preserves_incidences(rows in weighted_rows()) {
        let (graph, _, _) = build(&rows);
        let index = transpose(&graph);
        prop_assert_eq!(index.incidence_count(), graph.edge_count());
        let mut back: Vec<(u64, u64)> = (0..index.churn_count())
            .flat_map(|c| index.neighbors(c).iter().map(move |&a| (a, c)))
            .map(|(a, c)| (graph.active_id(a as usize).0, graph.churn_id(c).0))
            .collect();
        back.sort_unstable();
        prop_assert_eq!(back, edges(&graph));
    }

    #[test]
    fn singleton_fitness_is_degree(rows in weighted_rows()) {
        let (graph, _, _) = build(&rows);
        let singleton = FitnessEngine::unweighted(&graph).singleton_fitness();
        for (r, &f) in singleton.iter().enumerate() {
            prop_assert_eq!(f, graph.degree(r) as f64);
        }
    }
}

#[test]
fn ga_seed_sweep_on_toy() {
    let g = toy();
    let hits = (0..20u64)
        .filter(|&seed| {
            let cfg = GaConfig {
                budget: 2,
                group_size: 8,
                iterations: 30,
                crossover_prob: 0.8,
                mutation_prob: 0.1,
                seed,
                ..GaConfig::default()
            };
            run_ga(&g, None, &cfg).unwrap().best_fitness.value == 4.0
        })
        .count();
    assert!(hits >= 19, "optimum found in {hits}/20 runs");
}

#[test]
fn ga_without_variation_returns_initial_best() {
    let g = toy();
    let cfg = GaConfig {
        budget: 2,
        group_size: 4,
        iterations: 1,
        crossover_prob: 0.0,
        mutation_prob: 0.0,
        seed: 3,
        ..GaConfig::default()
    };
    let r = run_ga(&g, None, &cfg).unwrap();
    assert_eq!(Some(r.best_fitness.value), r.initial.best);
    assert_eq!(r.evaluations, 8);
}
