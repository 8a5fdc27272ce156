//! The generational genetic algorithm.
//!
//! Each generation evaluates the group, then produces `T` children one at a
//! time: two parents drawn by roulette over baseline-shifted fitness, a
//! uniform-rate crossover, and an asymmetric-rate mutation of the first
//! child. The second crossover child is discarded. With elitism on, the best
//! budget-feasible individual seen so far replaces the worst child.
//!
//! All randomness comes from named substreams keyed by
//! `(generation, child, operator)`, so children may be produced in parallel
//! without changing the trace.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;
use thiserror::Error;

use crate::fitness::{FitnessEngine, FitnessError, FitnessValue};
use crate::graph::{transpose, BipartiteGraph};
use crate::individual::Individual;
use crate::init::{random_group, two_step_group, InitError, StrategyPlan};
use crate::measure::EdgeMeasure;
use crate::rng::{label, substream};

#[derive(Debug, Error)]
pub enum GaError {
    #[error("invalid GA configuration: {0}")]
    Config(String),
    #[error("graph has no active nodes")]
    EmptyGraph,
    #[error(transparent)]
    Init(#[from] InitError),
    #[error(transparent)]
    Fitness(#[from] FitnessError),
}

fn config_err(msg: impl Into<String>) -> GaError {
    GaError::Config(msg.into())
}

/// Amount subtracted from every fitness before roulette selection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FitnessBaseline {
    None,
    /// The group minimum.
    Min,
    /// `alpha` times the group minimum, `alpha` in `[0, 1)`.
    Fraction(f64),
}

impl Default for FitnessBaseline {
    fn default() -> Self {
        FitnessBaseline::Fraction(0.9)
    }
}

impl FitnessBaseline {
    pub fn offset(self, fitness: &[f64]) -> f64 {
        let min = fitness.iter().copied().fold(f64::INFINITY, f64::min);
        if !min.is_finite() {
            return 0.0;
        }
        match self {
            FitnessBaseline::None => 0.0,
            FitnessBaseline::Min => min,
            FitnessBaseline::Fraction(alpha) => alpha * min,
        }
    }
}

impl fmt::Display for FitnessBaseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitnessBaseline::None => f.write_str("none"),
            FitnessBaseline::Min => f.write_str("min"),
            FitnessBaseline::Fraction(a) => write!(f, "fraction:{a}"),
        }
    }
}

impl FromStr for FitnessBaseline {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "none" => Ok(FitnessBaseline::None),
            "min" => Ok(FitnessBaseline::Min),
            other => {
                let alpha: f64 = other
                    .strip_prefix("fraction:")
                    .and_then(|a| a.parse().ok())
                    .ok_or_else(|| config_err(format!("unknown fitness baseline `{other}`")))?;
                if !(0.0..1.0).contains(&alpha) {
                    return Err(config_err(format!("baseline fraction {alpha} outside [0, 1)")));
                }
                Ok(FitnessBaseline::Fraction(alpha))
            }
        }
    }
}

/// Which gene-adding rate the mutation operator uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AddRateFormula {
    /// `M·N / (A − M·N)` for `A` active rows.
    #[default]
    Shifted,
    /// `M·N / (A − N)`: expected additions exactly match expected removals
    /// for an individual of `N` genes.
    Balanced,
}

impl fmt::Display for AddRateFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AddRateFormula::Shifted => "shifted",
            AddRateFormula::Balanced => "balanced",
        })
    }
}

impl FromStr for AddRateFormula {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "shifted" => Ok(AddRateFormula::Shifted),
            "balanced" => Ok(AddRateFormula::Balanced),
            other => Err(config_err(format!("unknown add-rate formula `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum InitMode {
    #[default]
    TwoStep,
    /// Uniform subsets of all active nodes.
    Random,
}

impl fmt::Display for InitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InitMode::TwoStep => "two-step",
            InitMode::Random => "random",
        })
    }
}

impl FromStr for InitMode {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "two-step" => Ok(InitMode::TwoStep),
            "random" => Ok(InitMode::Random),
            other => Err(config_err(format!("unknown init mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaConfig {
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub budget: usize,
    pub group_size: usize,
    pub iterations: usize,
    pub elitism: bool,
    pub fitness_baseline: FitnessBaseline,
    pub weighted: bool,
    pub seed: u64,
    pub repair_to_budget: bool,
    pub add_rate: AddRateFormula,
    pub init: InitMode,
    pub candidate_strategy: StrategyPlan,
    pub draw_strategy: StrategyPlan,
}

impl Default for GaConfig {
    fn default() -> Self {
        GaConfig {
            crossover_prob: 0.8,
            mutation_prob: 0.1,
            budget: 1,
            group_size: 20,
            iterations: 60,
            elitism: true,
            fitness_baseline: FitnessBaseline::default(),
            weighted: false,
            seed: 0,
            repair_to_budget: false,
            add_rate: AddRateFormula::default(),
            init: InitMode::default(),
            candidate_strategy: StrategyPlan::Mixed,
            draw_strategy: StrategyPlan::Mixed,
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, GaError> {
    value
        .trim()
        .parse()
        .map_err(|_| config_err(format!("bad value `{value}` for `{key}`")))
}

impl GaConfig {
    pub const KEYS: [&'static str; 14] = [
        "crossover_prob",
        "mutation_prob",
        "budget",
        "group_size",
        "iterations",
        "elitism",
        "fitness_baseline",
        "weighted",
        "seed",
        "repair_to_budget",
        "add_rate",
        "init",
        "candidate_strategy",
        "draw_strategy",
    ];

    /// Checks every field that does not depend on the graph.
    pub fn validate(&self) -> Result<(), GaError> {
        for (name, p) in [
            ("crossover_prob", self.crossover_prob),
            ("mutation_prob", self.mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(config_err(format!("{name} = {p} outside [0, 1]")));
            }
        }
        if self.budget == 0 {
            return Err(config_err("budget must be at least 1"));
        }
        if self.group_size < 2 {
            return Err(config_err("group_size must be at least 2"));
        }
        if self.iterations == 0 {
            return Err(config_err("iterations must be at least 1"));
        }
        if let FitnessBaseline::Fraction(a) = self.fitness_baseline {
            if !(0.0..1.0).contains(&a) {
                return Err(config_err(format!("baseline fraction {a} outside [0, 1)")));
            }
        }
        Ok(())
    }

    /// Sets one field from its textual form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), GaError> {
        let map_init = |e: InitError| config_err(e.to_string());
        match key.trim() {
            "crossover_prob" => self.crossover_prob = parse_value(key, value)?,
            "mutation_prob" => self.mutation_prob = parse_value(key, value)?,
            "budget" => self.budget = parse_value(key, value)?,
            "group_size" => self.group_size = parse_value(key, value)?,
            "iterations" => self.iterations = parse_value(key, value)?,
            "elitism" => self.elitism = parse_value(key, value)?,
            "fitness_baseline" => self.fitness_baseline = value.parse()?,
            "weighted" => self.weighted = parse_value(key, value)?,
            "seed" => self.seed = parse_value(key, value)?,
            "repair_to_budget" => self.repair_to_budget = parse_value(key, value)?,
            "add_rate" => self.add_rate = value.parse()?,
            "init" => self.init = value.parse()?,
            "candidate_strategy" => self.candidate_strategy = value.parse().map_err(map_init)?,
            "draw_strategy" => self.draw_strategy = value.parse().map_err(map_init)?,
            other => return Err(config_err(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Field values in [`KEYS`](Self::KEYS) order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let values = [
            self.crossover_prob.to_string(),
            self.mutation_prob.to_string(),
            self.budget.to_string(),
            self.group_size.to_string(),
            self.iterations.to_string(),
            self.elitism.to_string(),
            self.fitness_baseline.to_string(),
            self.weighted.to_string(),
            self.seed.to_string(),
            self.repair_to_budget.to_string(),
            self.add_rate.to_string(),
            self.init.to_string(),
            self.candidate_strategy.to_string(),
            self.draw_strategy.to_string(),
        ];
        Self::KEYS.into_iter().zip(values).collect()
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.entries().into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    /// `key = value` lines, one per field.
    pub fn to_config_string(&self) -> String {
        self.entries()
            .into_iter()
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect()
    }

    /// Applies `key = value` lines on top of the defaults. Blank lines and
    /// `#` comments are skipped.
    pub fn from_config_str(text: &str) -> Result<Self, GaError> {
        let mut cfg = GaConfig::default();
        cfg.apply_config_str(text)?;
        Ok(cfg)
    }

    pub fn apply_config_str(&mut self, text: &str) -> Result<(), GaError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| config_err(format!("line {}: expected `key = value`", i + 1)))?;
            self.set(k, v).map_err(|e| config_err(format!("line {}: {e}", i + 1)))?;
        }
        Ok(())
    }
}

/// Gene-adding probability for budget `budget` over `active_count` rows.
pub fn add_rate(
    mutation_prob: f64,
    budget: usize,
    active_count: usize,
    formula: AddRateFormula,
) -> Result<f64, GaError> {
    let mn = mutation_prob * budget as f64;
    if mn == 0.0 || active_count <= budget {
        return Ok(0.0);
    }
    let denom = match formula {
        AddRateFormula::Shifted => active_count as f64 - mn,
        AddRateFormula::Balanced => (active_count - budget) as f64,
    };
    let rate = mn / denom;
    if denom.is_nan() || denom <= 0.0 || rate >= 1.0 {
        return Err(config_err(format!(
            "mutation add rate {mn}/{denom} is not a probability below 1; lower mutation_prob or budget"
        )));
    }
    Ok(rate)
}

/// Roulette wheel over baseline-shifted fitness. Falls back to a uniform
/// draw when no member keeps positive weight.
#[derive(Clone, Debug)]
pub struct Roulette {
    cumulative: Vec<f64>,
    last_positive: usize,
}

impl Roulette {
    pub fn new(fitness: &[f64], baseline: FitnessBaseline) -> Self {
        let b = baseline.offset(fitness);
        let mut acc = 0.0;
        let mut last_positive = 0;
        let cumulative = fitness
            .iter()
            .enumerate()
            .map(|(i, &f)| {
                let w = (f - b).max(0.0);
                if w > 0.0 {
                    last_positive = i;
                }
                acc += w;
                acc
            })
            .collect();
        Roulette {
            cumulative,
            last_positive,
        }
    }

    /// Selection probability of each member.
    pub fn probabilities(&self) -> Vec<f64> {
        let n = self.cumulative.len();
        let total = self.total();
        if total.is_nan() || total <= 0.0 {
            return vec![1.0 / n as f64; n];
        }
        let mut prev = 0.0;
        self.cumulative
            .iter()
            .map(|&c| {
                let p = (c - prev) / total;
                prev = c;
                p
            })
            .collect()
    }

    fn total(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }

    pub fn draw<R: Rng>(&self, rng: &mut R) -> usize {
        let total = self.total();
        if !total.is_finite() || total <= 0.0 {
            return rng.random_range(0..self.cumulative.len());
        }
        let target = rng.random::<f64>() * total;
        let i = self.cumulative.partition_point(|&c| c <= target);
        if i >= self.cumulative.len() {
            self.last_positive
        } else {
            i
        }
    }
}

/// Two independent roulette draws; the indices may coincide.
pub fn select_pair<R: Rng>(fitness: &[f64], baseline: FitnessBaseline, rng: &mut R) -> (usize, usize) {
    let wheel = Roulette::new(fitness, baseline);
    (wheel.draw(rng), wheel.draw(rng))
}

fn check_lengths(a: &Individual, b: &Individual) -> Result<(), GaError> {
    if a.len() != b.len() {
        return Err(GaError::Fitness(FitnessError::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        }));
    }
    Ok(())
}

/// Swaps each position where `a` and `b` differ independently with
/// probability `swap_prob`.
pub fn uniform_swap<R: Rng>(
    a: &Individual,
    b: &Individual,
    swap_prob: f64,
    rng: &mut R,
) -> Result<(Individual, Individual), GaError> {
    check_lengths(a, b)?;
    let (mut x, mut y) = (a.clone(), b.clone());
    for w in 0..a.words().len() {
        let mut diff = a.words()[w] ^ b.words()[w];
        let mut mask = 0u64;
        while diff != 0 {
            let bit = diff & diff.wrapping_neg();
            if rng.random::<f64>() < swap_prob {
                mask |= bit;
            }
            diff ^= bit;
        }
        Individual::swap_masked(&mut x, &mut y, w, mask);
    }
    Ok((x, y))
}

/// With probability `crossover_prob`, draws `p ~ U(0, 1)` and swaps each
/// indicator position with probability `p`; otherwise returns copies.
pub fn crossover<R: Rng>(
    a: &Individual,
    b: &Individual,
    crossover_prob: f64,
    rng: &mut R,
) -> Result<(Individual, Individual), GaError> {
    check_lengths(a, b)?;
    if !rng.random_bool(crossover_prob.clamp(0.0, 1.0)) {
        return Ok((a.clone(), b.clone()));
    }
    let p: f64 = rng.random();
    uniform_swap(a, b, p, rng)
}

/// Mutation operator with precomputed rates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mutation {
    pub remove_prob: f64,
    pub add_prob: f64,
}

impl Mutation {
    pub fn new(
        mutation_prob: f64,
        budget: usize,
        active_count: usize,
        formula: AddRateFormula,
    ) -> Result<Self, GaError> {
        if !(0.0..=1.0).contains(&mutation_prob) {
            return Err(config_err(format!("mutation_prob {mutation_prob} outside [0, 1]")));
        }
        Ok(Mutation {
            remove_prob: mutation_prob,
            add_prob: add_rate(mutation_prob, budget, active_count, formula)?,
        })
    }

    /// Clears each set position with `remove_prob` and sets each clear
    /// position with `add_prob`, all decisions taken against the input.
    pub fn apply<R: Rng>(&self, ind: &Individual, rng: &mut R) -> Individual {
        let mut out = ind.clone();
        if self.remove_prob > 0.0 {
            for row in ind.ones() {
                if rng.random_bool(self.remove_prob) {
                    out.remove(row);
                }
            }
        }
        if self.add_prob > 0.0 {
            // geometric gaps visit every position with probability add_prob;
            // hits on positions that were set are ignored
            let gaps = Geometric::new(self.add_prob).expect("add_prob in (0, 1)");
            let mut pos: u64 = 0;
            let len = ind.len() as u64;
            loop {
                pos = pos.saturating_add(gaps.sample(rng));
                if pos >= len {
                    break;
                }
                if !ind.contains(pos as usize) {
                    out.insert(pos as usize);
                }
                pos += 1;
            }
        }
        out
    }
}

/// One-shot form of [`Mutation::apply`].
pub fn mutate<R: Rng>(
    ind: &Individual,
    mutation_prob: f64,
    budget: usize,
    formula: AddRateFormula,
    rng: &mut R,
) -> Result<Individual, GaError> {
    Ok(Mutation::new(mutation_prob, budget, ind.len(), formula)?.apply(ind, rng))
}

/// Brings the individual to exactly `budget` genes (or all rows, if fewer)
/// by dropping or adding uniformly random genes.
pub fn repair<R: Rng>(ind: &Individual, budget: usize, rng: &mut R) -> Individual {
    let target = budget.min(ind.len());
    let k = ind.cardinality();
    let mut out = ind.clone();
    if k > target {
        let set: Vec<usize> = ind.ones().collect();
        for i in rand::seq::index::sample(rng, set.len(), k - target) {
            out.remove(set[i]);
        }
    } else if k < target {
        let absent: Vec<usize> = (0..ind.len()).filter(|&r| !ind.contains(r)).collect();
        for i in rand::seq::index::sample(rng, absent.len(), target - k) {
            out.insert(absent[i]);
        }
    }
    out
}

/// Keeps the `budget` genes with the highest singleton fitness, ties to the
/// lower row. Individuals within budget are returned unchanged.
pub fn truncate_to_budget(ind: &Individual, budget: usize, singleton: &[f64]) -> Individual {
    if ind.cardinality() <= budget {
        return ind.clone();
    }
    let mut rows: Vec<usize> = ind.ones().collect();
    rows.sort_by(|&a, &b| singleton[b].total_cmp(&singleton[a]).then(a.cmp(&b)));
    rows.truncate(budget);
    Individual::from_rows(ind.len(), rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenerationStats {
    /// Best fitness among members within budget, if any.
    pub best: Option<f64>,
    pub mean: f64,
    pub min: f64,
    pub mean_cardinality: f64,
}

impl GenerationStats {
    fn of(group: &[Individual], fitness: &[FitnessValue], budget: usize) -> Self {
        let n = fitness.len() as f64;
        let best = group
            .iter()
            .zip(fitness)
            .filter(|(ind, _)| ind.cardinality() <= budget)
            .map(|(_, f)| f.value)
            .reduce(f64::max);
        GenerationStats {
            best,
            mean: fitness.iter().map(|f| f.value).sum::<f64>() / n,
            min: fitness.iter().map(|f| f.value).fold(f64::INFINITY, f64::min),
            mean_cardinality: group.iter().map(|i| i.cardinality() as f64).sum::<f64>() / n,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GaReport {
    pub best_individual: Individual,
    pub best_fitness: FitnessValue,
    /// Stats of the initial group.
    pub initial: GenerationStats,
    /// Stats of the group produced by each generation.
    pub history: Vec<GenerationStats>,
    pub evaluations: usize,
    pub wall_time: Duration,
}

fn select_engine<'a>(
    graph: &'a BipartiteGraph,
    measures: Option<&'a EdgeMeasure>,
    config: &GaConfig,
) -> Result<FitnessEngine<'a>, GaError> {
    let measures = match (config.weighted, measures) {
        (true, None) => return Err(config_err("weighted = true requires edge measures")),
        (true, m) => m,
        (false, _) => None,
    };
    Ok(FitnessEngine::new(graph, measures)?)
}

fn check_against_graph(graph: &BipartiteGraph, config: &GaConfig) -> Result<(), GaError> {
    config.validate()?;
    if graph.is_empty() {
        return Err(GaError::EmptyGraph);
    }
    if config.budget > graph.active_count() {
        return Err(config_err(format!(
            "budget {} exceeds active node count {}",
            config.budget,
            graph.active_count()
        )));
    }
    Ok(())
}

/// The group the GA starts from under `config`.
pub fn initial_group(
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    config: &GaConfig,
) -> Result<Vec<Individual>, GaError> {
    check_against_graph(graph, config)?;
    let engine = select_engine(graph, measures, config)?;
    build_initial(graph, &engine.singleton_fitness(), config)
}

fn build_initial(graph: &BipartiteGraph, singleton: &[f64], config: &GaConfig) -> Result<Vec<Individual>, GaError> {
    let seed = crate::rng::derive_seed(config.seed, &[label::GA]);
    Ok(match config.init {
        InitMode::TwoStep => two_step_group(
            graph,
            &transpose(graph),
            singleton,
            config.candidate_strategy,
            config.draw_strategy,
            config.budget,
            config.group_size,
            seed,
        )?
        .into_iter()
        .map(|s| s.individual)
        .collect(),
        InitMode::Random => random_group(graph, config.budget, config.group_size, seed)?,
    })
}

/// Runs the genetic algorithm for `config.iterations` generations and
/// returns the best budget-feasible individual seen.
pub fn run_ga(graph: &BipartiteGraph, measures: Option<&EdgeMeasure>, config: &GaConfig) -> Result<GaReport, GaError> {
    let started = Instant::now();
    check_against_graph(graph, config)?;
    let engine = select_engine(graph, measures, config)?;
    let singleton = engine.singleton_fitness();
    let mutation = Mutation::new(
        config.mutation_prob,
        config.budget,
        graph.active_count(),
        config.add_rate,
    )?;
    let budget = config.budget;
    let t = config.group_size;

    let mut group = build_initial(graph, &singleton, config)?;
    let mut fitness = engine.evaluate_group(&group)?;
    let mut evaluations = group.len();
    let initial = GenerationStats::of(&group, &fitness, budget);

    // initial members are all within budget
    let mut incumbent: Option<(Individual, FitnessValue)> = None;
    let absorb =
        |group: &[Individual], fitness: &[FitnessValue], incumbent: &mut Option<(Individual, FitnessValue)>| {
            for (ind, f) in group.iter().zip(fitness) {
                if ind.cardinality() <= budget && incumbent.as_ref().is_none_or(|(_, best)| f.value > best.value) {
                    *incumbent = Some((ind.clone(), *f));
                }
            }
        };
    absorb(&group, &fitness, &mut incumbent);

    let mut history = Vec::with_capacity(config.iterations);
    for generation in 0..config.iterations {
        let values: Vec<f64> = fitness.iter().map(|f| f.value).collect();
        let wheel = Roulette::new(&values, config.fitness_baseline);
        let stream = |child: usize, op: u64| substream(config.seed, &[label::GA, generation as u64, child as u64, op]);

        let children: Vec<Individual> = (0..t)
            .into_par_iter()
            .map(|j| {
                let mut rng = stream(j, label::SELECTION);
                let (x, y) = (wheel.draw(&mut rng), wheel.draw(&mut rng));
                let (first, _) = crossover(
                    &group[x],
                    &group[y],
                    config.crossover_prob,
                    &mut stream(j, label::CROSSOVER),
                )
                .expect("group members share one length");
                let child = mutation.apply(&first, &mut stream(j, label::MUTATION));
                if config.repair_to_budget {
                    repair(&child, budget, &mut stream(j, label::REPAIR))
                } else {
                    child
                }
            })
            .collect();

        let mut child_fitness = engine.evaluate_group(&children)?;
        evaluations += children.len();
        group = children;
        if config.elitism {
            if let Some((best, best_fit)) = &incumbent {
                let worst = (0..t)
                    .min_by(|&a, &b| child_fitness[a].value.total_cmp(&child_fitness[b].value))
                    .expect("group is non-empty");
                group[worst] = best.clone();
                child_fitness[worst] = *best_fit;
            }
        }
        fitness = child_fitness;
        absorb(&group, &fitness, &mut incumbent);
        history.push(GenerationStats::of(&group, &fitness, budget));
    }

    let (best, best_fit) = incumbent.expect("initial group is within budget");
    let best_individual = truncate_to_budget(&best, budget, &singleton);
    let best_fitness = if best_individual == best {
        best_fit
    } else {
        engine.evaluate(&best_individual)?
    };
    Ok(GaReport {
        best_individual,
        best_fitness,
        initial,
        history,
        evaluations,
        wall_time: started.elapsed(),
    })
}
