//! Budgeted maximum node covering on bipartite active/churn graphs.
//!
//! Given a bipartite graph between active users and churn users and a budget
//! `N`, find `N` active users whose combined churn neighborhoods are as large
//! as possible (or, with per-link weights, whose covered churn users carry
//! the most expected return). The main solver is a genetic algorithm over
//! indicator vectors with a two-step, coverage-preserving initializer; the
//! fitness engine evaluates candidates shard by shard and merges partial
//! aggregates by churn key.
//!
//! Modules:
//! - [`graph`]: ingestion, synthetic generation, transpose, sharding
//! - [`measure`]: per-link weights
//! - [`fitness`]: sharded coverage and weighted fitness
//! - [`init`]: two-step initial group
//! - [`ga`]: the generational loop and its operators
//! - [`baselines`]: degree greedy, coverage greedy, random, brute force
//! - [`report`] and [`cli`]: run manifests and the command-line frontend

pub mod baselines;
pub mod cli;
pub mod fitness;
pub mod ga;
pub mod graph;
pub mod individual;
pub mod init;
pub mod measure;
pub mod report;
pub mod rng;

pub use baselines::{brute_force, coverage_greedy, degree_greedy, random_baseline, BaselineResult, Method};
pub use fitness::{evaluate_group, fitness_unweighted, fitness_weighted, FitnessEngine, FitnessValue};
pub use ga::{run_ga, GaConfig, GaReport};
pub use graph::{generate_synthetic, load_edge_list, transpose, BipartiteGraph, ChurnIndex, NodeId};
pub use individual::Individual;
pub use measure::{generate_measures, load_measures, EdgeMeasure};
