//! Command-line frontend: `generate`, `run` and `bench`.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 data error
//! (unreadable or malformed inputs, oversized oracle), 3 a failed bench
//! assertion.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::baselines::{self, Method, OracleError};
use crate::ga::{self, AddRateFormula, FitnessBaseline, GaConfig, GaError, InitMode};
use crate::graph::{self, BipartiteGraph, DegreeDistribution, GraphError, SyntheticSpec};
use crate::init::StrategyPlan;
use crate::measure::{self, EdgeMeasure, MeasureError, WeightDistribution};
use crate::report::{
    file_digest, AssertionOutcome, BenchInstance, BenchReport, BenchRow, GaStats, GraphSummary, InputFile,
    MethodResult, RandomStats, RunReport, BENCH_FORMAT, RUN_FORMAT,
};
use crate::rng::{derive_seed, label};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Acceptance(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Acceptance(_) => 3,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::InfeasibleDegree { .. } | GraphError::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::InvalidDistribution(_) => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<GaError> for CliError {
    fn from(e: GaError) -> Self {
        match e {
            GaError::Config(_) | GaError::Init(_) => CliError::Usage(e.to_string()),
            GaError::EmptyGraph | GaError::Fitness(_) => CliError::Data(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::InvalidBudget | OracleError::NoTrials => CliError::Usage(e.to_string()),
            OracleError::TooLarge { .. } | OracleError::Fitness(_) => CliError::Data(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Data(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "nodecover", version, about = "Budgeted node covering on bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a synthetic edge list (and optionally a weight file).
    Generate(GenerateArgs),
    /// Solve one instance with one method, or several with --compare.
    Run(RunArgs),
    /// Run the method matrix over generated instances and check assertions.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub active: usize,
    #[arg(long)]
    pub churn: usize,
    #[arg(long = "mean-degree")]
    pub mean_degree: f64,
    /// `uniform` or `powerlaw:<exponent>`
    #[arg(long, default_value = "uniform")]
    pub dist: DegreeDistribution,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long)]
    pub output: PathBuf,
    /// Also write per-edge weights to this path.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// `constant:<w>`, `uniform:<lo>,<hi>` or `beta:<a>,<b>`
    #[arg(long = "weight-dist", default_value = "uniform:0,1")]
    pub weight_dist: WeightDistribution,
}

#[derive(Debug, Args, Default)]
pub struct GaFlags {
    #[arg(long = "group-size")]
    pub group_size: Option<usize>,
    #[arg(long)]
    pub iterations: Option<usize>,
    #[arg(long)]
    pub crossover: Option<f64>,
    #[arg(long)]
    pub mutation: Option<f64>,
    /// `none`, `min` or `fraction:<alpha>`
    #[arg(long)]
    pub baseline: Option<FitnessBaseline>,
    #[arg(long = "no-elitism")]
    pub no_elitism: bool,
    /// Repair every child to exactly the budget after mutation.
    #[arg(long)]
    pub repair: bool,
    /// `shifted` or `balanced`
    #[arg(long = "add-rate")]
    pub add_rate: Option<AddRateFormula>,
    /// `two-step` or `random`
    #[arg(long)]
    pub init: Option<InitMode>,
    /// `mixed`, `proportional`, `inverse` or `random`
    #[arg(long = "candidate-strategy")]
    pub candidate_strategy: Option<StrategyPlan>,
    /// `mixed`, `proportional`, `inverse` or `random`
    #[arg(long = "draw-strategy")]
    pub draw_strategy: Option<StrategyPlan>,
}

impl GaFlags {
    fn apply(&self, cfg: &mut GaConfig) {
        if let Some(v) = self.group_size {
            cfg.group_size = v;
        }
        if let Some(v) = self.iterations {
            cfg.iterations = v;
        }
        if let Some(v) = self.crossover {
            cfg.crossover_prob = v;
        }
        if let Some(v) = self.mutation {
            cfg.mutation_prob = v;
        }
        if let Some(v) = self.baseline {
            cfg.fitness_baseline = v;
        }
        if self.no_elitism {
            cfg.elitism = false;
        }
        if self.repair {
            cfg.repair_to_budget = true;
        }
        if let Some(v) = self.add_rate {
            cfg.add_rate = v;
        }
        if let Some(v) = self.init {
            cfg.init = v;
        }
        if let Some(v) = self.candidate_strategy {
            cfg.candidate_strategy = v;
        }
        if let Some(v) = self.draw_strategy {
            cfg.draw_strategy = v;
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, conflicts_with = "compare")]
    pub method: Option<Method>,
    /// Comma-separated methods; percentages are relative to the first.
    #[arg(long, value_delimiter = ',')]
    pub compare: Vec<Method>,
    #[arg(long)]
    pub graph: PathBuf,
    /// Per-edge weight file; switches every method to weighted fitness.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    #[arg(long)]
    pub budget: Option<usize>,
    /// Root seed. Without it (and without one in --config) the clock is used.
    #[arg(long)]
    pub seed: Option<u64>,
    /// GA configuration file of `key = value` lines.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub shards: usize,
    /// Trials for the random baseline.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[command(flatten)]
    pub ga: GaFlags,
    /// Write the structured report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Benchmark spec of `key = value` lines; the built-in desk-scale spec
    /// is used when omitted.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Run(a) => cmd_run(a, out).map(|_| ()),
        Command::Bench(a) => cmd_bench(a, out).map(|_| ()),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|e| io_err(path, e))
}

fn open(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path).map(BufReader::new).map_err(|e| io_err(path, e))
}

pub fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = graph::generate_synthetic(&SyntheticSpec {
        active_count: args.active,
        churn_count: args.churn,
        mean_degree: args.mean_degree,
        distribution: args.dist,
        seed: args.seed,
    })?;
    g.write_edge_list(create(&args.output)?)
        .map_err(|e| io_err(&args.output, e))?;
    let _ = writeln!(
        out,
        "wrote {}: {} active, {} churn, {} edges",
        args.output.display(),
        g.active_count(),
        g.churn_count(),
        g.edge_count()
    );
    if let Some(path) = &args.weights {
        let m = measure::generate_measures(&g, args.weight_dist, args.seed)?;
        m.write(&g, create(path)?).map_err(|e| io_err(path, e))?;
        let _ = writeln!(
            out,
            "wrote {}: {} weights ({})",
            path.display(),
            g.edge_count(),
            args.weight_dist
        );
    }
    Ok(())
}

fn load_graph(path: &Path, shards: usize) -> Result<BipartiteGraph, CliError> {
    if shards == 0 {
        return Err(CliError::Usage("--shards must be at least 1".into()));
    }
    let g = graph::load_edge_list(open(path)?).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok(g.repartition(shards))
}

fn load_weights(path: &Path, graph: &BipartiteGraph) -> Result<EdgeMeasure, CliError> {
    measure::load_measures(open(path)?, graph).map_err(|e| match e {
        MeasureError::Io(_) | MeasureError::Record(_) | MeasureError::MissingWeight { .. } => {
            CliError::Data(format!("{}: {e}", path.display()))
        }
        other => CliError::Data(format!("{}: {other}", path.display())),
    })
}

/// Runs `method` on `graph` and packages the result. `random_seed` drives
/// the random baseline only; the GA reads its seed from `cfg`.
pub fn run_method(
    method: Method,
    graph: &BipartiteGraph,
    measures: Option<&EdgeMeasure>,
    cfg: &GaConfig,
    random_seed: u64,
    trials: usize,
) -> Result<MethodResult, CliError> {
    let started = Instant::now();
    let budget = cfg.budget;
    let mut result = match method {
        Method::Ga => {
            let r = ga::run_ga(graph, measures, cfg)?;
            let mut res = MethodResult::new(method, graph, &r.best_individual, r.best_fitness);
            res.ga = Some(GaStats::of(&r));
            res
        }
        Method::DegreeGreedy => {
            let r = baselines::degree_greedy(graph, measures, budget)?;
            MethodResult::new(method, graph, &r.individual, r.fitness)
        }
        Method::CoverageGreedy => {
            let r = baselines::coverage_greedy(graph, measures, budget)?;
            MethodResult::new(method, graph, &r.individual, r.fitness)
        }
        Method::BruteForce => {
            let r = baselines::brute_force(graph, measures, budget)?;
            MethodResult::new(method, graph, &r.individual, r.fitness)
        }
        Method::Random => {
            let r = baselines::random_baseline(graph, measures, budget, random_seed, trials)?;
            let mut res = MethodResult::new(method, graph, &r.best.individual, r.best.fitness);
            res.comparison_value = r.mean_fitness;
            res.random = Some(RandomStats {
                trials: r.trials,
                mean_fitness: r.mean_fitness,
                mean_covered: r.mean_covered,
                best_fitness: r.best.fitness.value,
            });
            res
        }
    };
    result.runtime_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(result)
}

pub fn cmd_run(args: &RunArgs, out: &mut dyn Write) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let methods: Vec<Method> = match (&args.method, args.compare.as_slice()) {
        (Some(m), []) => vec![*m],
        (None, []) => vec![Method::Ga],
        (None, list) => list.to_vec(),
        (Some(_), _) => return Err(CliError::Usage("--method and --compare are exclusive".into())),
    };

    let mut cfg = GaConfig::default();
    let mut seed_source = "clock";
    let mut inputs = Vec::new();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        cfg.apply_config_str(&text)?;
        if text
            .lines()
            .any(|l| l.split_once('=').is_some_and(|(k, _)| k.trim() == "seed"))
        {
            seed_source = "config";
        }
        inputs.push(input_file("config", path)?);
    } else if args.budget.is_none() {
        return Err(CliError::Usage("--budget is required without --config".into()));
    }
    args.ga.apply(&mut cfg);
    if let Some(b) = args.budget {
        cfg.budget = b;
    }
    match args.seed {
        Some(s) => {
            cfg.seed = s;
            seed_source = "flag";
        }
        None if seed_source == "clock" => {
            cfg.seed = SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_nanos() as u64)
                .unwrap_or_default();
        }
        None => {}
    }
    cfg.weighted |= args.weights.is_some();
    cfg.validate()?;

    let graph = load_graph(&args.graph, args.shards)?;
    inputs.insert(0, input_file("graph", &args.graph)?);
    let measures = match &args.weights {
        Some(path) => {
            inputs.insert(1, input_file("weights", path)?);
            Some(load_weights(path, &graph)?)
        }
        None if cfg.weighted => return Err(CliError::Usage("weighted = true requires --weights".into())),
        None => None,
    };
    let random_seed = derive_seed(cfg.seed, &[label::RANDOM_BASELINE]);
    let results = methods
        .iter()
        .map(|&m| run_method(m, &graph, measures.as_ref(), &cfg, random_seed, args.trials))
        .collect::<Result<Vec<_>, _>>()?;
    let comparisons = if methods.len() > 1 {
        RunReport::compare_first(&results)
    } else {
        Vec::new()
    };
    let mut config = cfg.to_map();
    config.insert(
        "methods".into(),
        methods.iter().map(Method::to_string).collect::<Vec<_>>().join(","),
    );
    config.insert("shards".into(), args.shards.to_string());
    let report = RunReport {
        format: RUN_FORMAT.into(),
        seed: cfg.seed,
        seed_source: seed_source.into(),
        inputs,
        graph: GraphSummary::of(&graph),
        budget: cfg.budget,
        weighted: cfg.weighted,
        random_trials: args.trials,
        config,
        results,
        comparisons,
        runtime_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    let _ = write!(out, "{}", report.summary());
    if let Some(path) = &args.report {
        std::fs::write(path, report.to_json()).map_err(|e| io_err(path, e))?;
    }
    Ok(report)
}

fn input_file(role: &str, path: &Path) -> Result<InputFile, CliError> {
    Ok(InputFile {
        role: role.into(),
        path: path.display().to_string(),
        sha256: file_digest(path).map_err(|e| io_err(path, e))?,
    })
}

/// `lhs >= factor * rhs` over the comparison values of two methods.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Assertion {
    pub lhs: Method,
    pub factor: f64,
    pub rhs: Method,
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factor == 1.0 {
            write!(f, "{} >= {}", self.lhs, self.rhs)
        } else {
            write!(f, "{} >= {} * {}", self.lhs, self.factor, self.rhs)
        }
    }
}

impl FromStr for Assertion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lhs, rhs) = s
            .split_once(">=")
            .ok_or_else(|| format!("assertion `{s}` must have the form `a >= [k *] b`"))?;
        let (factor, rhs) = match rhs.split_once('*') {
            Some((k, m)) => (k.trim().parse::<f64>().map_err(|_| format!("bad factor in `{s}`"))?, m),
            None => (1.0, rhs),
        };
        Ok(Assertion {
            lhs: lhs.trim().parse()?,
            factor,
            rhs: rhs.trim().parse()?,
        })
    }
}

/// Benchmark matrix: instance shape, methods and acceptance assertions.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchSpec {
    pub active: usize,
    pub churn: usize,
    pub mean_degree: f64,
    pub dist: DegreeDistribution,
    pub instances: usize,
    pub budget: usize,
    pub methods: Vec<Method>,
    pub random_trials: usize,
    pub shards: usize,
    pub ga: GaConfig,
    pub assertions: Vec<Assertion>,
}

impl Default for BenchSpec {
    /// The desk-scale comparison: a 10 000 × 50 000 power-law instance with
    /// about 200 000 edges and a budget of 500.
    fn default() -> Self {
        let budget = 500;
        BenchSpec {
            active: 10_000,
            churn: 50_000,
            mean_degree: 20.0,
            dist: DegreeDistribution::PowerLaw { exponent: 2.5 },
            instances: 1,
            budget,
            methods: vec![Method::Ga, Method::DegreeGreedy, Method::CoverageGreedy, Method::Random],
            random_trials: 100,
            shards: 1,
            ga: desk_scale_ga(budget),
            assertions: vec![
                Assertion {
                    lhs: Method::Ga,
                    factor: 1.0,
                    rhs: Method::DegreeGreedy,
                },
                Assertion {
                    lhs: Method::DegreeGreedy,
                    factor: 1.0,
                    rhs: Method::Random,
                },
                Assertion {
                    lhs: Method::Ga,
                    factor: 1.05,
                    rhs: Method::Random,
                },
            ],
        }
    }
}

/// GA settings for the desk-scale benchmark. At this size progress comes
/// from crossover between near-identical parents, so mutation is kept to a
/// fraction of a gene per child, selection subtracts the group minimum and
/// children are repaired to the budget.
pub fn desk_scale_ga(budget: usize) -> GaConfig {
    GaConfig {
        budget,
        group_size: 30,
        iterations: 40_000,
        crossover_prob: 0.8,
        mutation_prob: 0.0005,
        fitness_baseline: FitnessBaseline::Min,
        repair_to_budget: true,
        ..GaConfig::default()
    }
}

impl BenchSpec {
    /// Applies `key = value` lines over the default instance shape. GA keys
    /// take a `ga.` prefix; each `assert` line adds one assertion, and a spec
    /// file that sets any replaces the default assertions.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut spec = BenchSpec::default();
        let mut assertions = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: String| CliError::Usage(format!("bench spec line {}: {msg}", i + 1));
            let (key, value) = line
                .split_once('=')
                .filter(|(k, _)| !k.contains(">"))
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| bad("expected `key = value`".into()))?;
            let num = |v: &str| v.parse::<usize>().map_err(|_| bad(format!("bad count `{v}`")));
            match key {
                "active" => spec.active = num(value)?,
                "churn" => spec.churn = num(value)?,
                "mean_degree" => spec.mean_degree = value.parse().map_err(|_| bad(format!("bad degree `{value}`")))?,
                "dist" => spec.dist = value.parse().map_err(|e: GraphError| bad(e.to_string()))?,
                "instances" => spec.instances = num(value)?,
                "budget" => spec.budget = num(value)?,
                "random_trials" => spec.random_trials = num(value)?,
                "shards" => spec.shards = num(value)?,
                "methods" => {
                    spec.methods = value
                        .split(',')
                        .map(|m| m.parse::<Method>())
                        .collect::<Result<_, _>>()
                        .map_err(bad)?
                }
                "assert" => assertions.push(value.parse::<Assertion>().map_err(bad)?),
                k => match k.strip_prefix("ga.") {
                    Some(ga_key) => spec.ga.set(ga_key, value).map_err(|e| bad(e.to_string()))?,
                    None => return Err(bad(format!("unknown key `{k}`"))),
                },
            }
        }
        if !assertions.is_empty() || text.lines().any(|l| l.trim_start().starts_with("methods")) {
            spec.assertions = assertions;
        }
        spec.ga.budget = spec.budget;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.methods.is_empty() || self.instances == 0 || self.shards == 0 {
            return Err(CliError::Usage(
                "bench spec needs methods, instances >= 1 and shards >= 1".into(),
            ));
        }
        for a in &self.assertions {
            if !self.methods.contains(&a.lhs) || !self.methods.contains(&a.rhs) {
                return Err(CliError::Usage(format!(
                    "assertion `{a}` names a method that is not run"
                )));
            }
        }
        self.ga.validate()?;
        Ok(())
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("active".into(), self.active.to_string());
        m.insert("churn".into(), self.churn.to_string());
        m.insert("mean_degree".into(), self.mean_degree.to_string());
        m.insert("dist".into(), self.dist.to_string());
        m.insert("instances".into(), self.instances.to_string());
        m.insert("budget".into(), self.budget.to_string());
        m.insert(
            "methods".into(),
            self.methods.iter().map(Method::to_string).collect::<Vec<_>>().join(","),
        );
        m.insert("random_trials".into(), self.random_trials.to_string());
        m.insert("shards".into(), self.shards.to_string());
        for (k, v) in self.ga.entries() {
            if k != "seed" && k != "budget" {
                m.insert(format!("ga.{k}"), v);
            }
        }
        let asserts: Vec<String> = self.assertions.iter().map(Assertion::to_string).collect();
        m.insert("assert".into(), asserts.join("; "));
        m
    }
}

/// Generates every instance, runs every method on it, and evaluates the
/// assertions. Assertion failures are reported, not raised.
pub fn run_bench(spec: &BenchSpec, seed: u64) -> Result<BenchReport, CliError> {
    spec.validate()?;
    let mut instances = Vec::with_capacity(spec.instances);
    let mut assertions = Vec::new();
    for index in 0..spec.instances {
        let graph_seed = derive_seed(seed, &[label::BENCH, index as u64]);
        let graph = graph::generate_synthetic(&SyntheticSpec {
            active_count: spec.active,
            churn_count: spec.churn,
            mean_degree: spec.mean_degree,
            distribution: spec.dist,
            seed: graph_seed,
        })?
        .repartition(spec.shards);
        let cfg = GaConfig {
            seed: derive_seed(seed, &[label::BENCH, index as u64, label::GA]),
            budget: spec.budget.min(graph.active_count()),
            ..spec.ga.clone()
        };
        let random_seed = derive_seed(seed, &[label::BENCH, index as u64, label::RANDOM_BASELINE]);
        let mut rows = Vec::with_capacity(spec.methods.len());
        let mut values = BTreeMap::new();
        for &m in &spec.methods {
            let r = run_method(m, &graph, None, &cfg, random_seed, spec.random_trials)?;
            let covered = r.random.as_ref().map_or(r.covered_count as f64, |s| s.mean_covered);
            values.insert(m.to_string(), r.comparison_value);
            rows.push(BenchRow {
                method: r.method,
                fitness: r.comparison_value,
                covered,
                runtime_ms: r.runtime_ms,
            });
        }
        for a in &spec.assertions {
            let lhs = values[&a.lhs.to_string()];
            let rhs = a.factor * values[&a.rhs.to_string()];
            assertions.push(AssertionOutcome {
                assertion: a.to_string(),
                instance: index,
                lhs,
                rhs,
                passed: lhs >= rhs,
            });
        }
        instances.push(BenchInstance {
            index,
            graph_seed,
            graph: GraphSummary::of(&graph),
            rows,
        });
    }
    Ok(BenchReport {
        format: BENCH_FORMAT.into(),
        seed,
        spec: spec.to_map(),
        instances,
        assertions,
    })
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<BenchReport, CliError> {
    let seed = args
        .seed
        .ok_or_else(|| CliError::Usage("bench requires --seed for reproducibility".into()))?;
    let spec = match &args.spec {
        Some(path) => BenchSpec::parse(&std::fs::read_to_string(path).map_err(|e| io_err(path, e))?)?,
        None => BenchSpec::default(),
    };
    let report = run_bench(&spec, seed)?;
    let _ = write!(out, "{}", report.table());
    if let Some(path) = &args.report {
        std::fs::write(path, report.to_json()).map_err(|e| io_err(path, e))?;
    }
    if !report.passed() {
        let failed = report.assertions.iter().filter(|a| !a.passed).count();
        return Err(CliError::Acceptance(format!("{failed} bench assertion(s) failed")));
    }
    Ok(report)
}
