//! Bipartite active/churn graph in row layout.
//!
//! Each row holds one active node and the sorted list of churn nodes it can
//! reach. Rows are stored compressed (offsets + flat neighbor array) and are
//! cut into contiguous shards that the fitness engine evaluates
//! independently. Node ids are opaque; internally both sides are re-indexed
//! densely in ascending id order, and every public accessor that returns a
//! node speaks original ids.

use std::fmt;
use std::io::{BufRead, Write};
use std::ops::Range;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Distribution, Pareto};
use thiserror::Error;

use crate::rng::{label, substream};

/// Opaque node identifier. Active and churn ids live in separate namespaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u64);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Active,
    Churn,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Active => f.write_str("active"),
            Side::Churn => f.write_str("churn"),
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: record links two {side} nodes")]
    BipartiteViolation { line: usize, side: Side },
    #[error("mean degree {mean_degree} is infeasible with {churn_count} churn nodes")]
    InfeasibleDegree { mean_degree: f64, churn_count: usize },
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One parsed line of an edge-list or weight file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct EdgeRecord<'a> {
    pub active: NodeId,
    pub churn: NodeId,
    pub extra: Option<&'a str>,
}

fn parse_endpoint(token: &str, line: usize) -> Result<(Option<Side>, NodeId), GraphError> {
    let (side, digits) = match token.split_once(':') {
        Some(("a", rest)) => (Some(Side::Active), rest),
        Some(("c", rest)) => (Some(Side::Churn), rest),
        Some((tag, _)) => {
            return Err(GraphError::Parse {
                line,
                reason: format!("unknown side tag `{tag}`"),
            })
        }
        None => (None, token),
    };
    let id = digits.parse::<u64>().map_err(|_| GraphError::Parse {
        line,
        reason: format!("`{token}` is not a non-negative integer id"),
    })?;
    Ok((side, NodeId(id)))
}

/// Parses one tab-separated record. Comments and blank lines yield `None`.
///
/// Endpoints may carry an `a:`/`c:` side tag; a tagged record whose
/// endpoints sit on the same side is rejected, and a record tagged
/// churn-first is flipped.
pub(crate) fn parse_record(raw: &str, line: usize, max_fields: usize) -> Result<Option<EdgeRecord<'_>>, GraphError> {
    let text = raw.trim_end_matches(['\r', '\n']);
    if text.trim().is_empty() || text.starts_with('#') {
        return Ok(None);
    }
    let fields: Vec<&str> = text.split('\t').collect();
    if fields.len() < 2 || fields.len() > max_fields {
        return Err(GraphError::Parse {
            line,
            reason: format!("expected 2..={max_fields} tab-separated fields, found {}", fields.len()),
        });
    }
    let (left_side, left) = parse_endpoint(fields[0].trim(), line)?;
    let (right_side, right) = parse_endpoint(fields[1].trim(), line)?;
    let extra = fields.get(2).map(|s| s.trim());
    match (left_side, right_side) {
        (Some(a), Some(b)) if a == b => Err(GraphError::BipartiteViolation { line, side: a }),
        (Some(Side::Churn), _) | (_, Some(Side::Active)) => Ok(Some(EdgeRecord {
            active: right,
            churn: left,
            extra,
        })),
        _ => Ok(Some(EdgeRecord {
            active: left,
            churn: right,
            extra,
        })),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    active_ids: Vec<NodeId>,
    churn_ids: Vec<NodeId>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    shards: Vec<Range<usize>>,
    isolated_dropped: usize,
}

impl BipartiteGraph {
    /// Builds a graph from `(active, churn neighbors)` rows.
    ///
    /// Rows sharing an active id are merged, neighbor lists are sorted and
    /// deduplicated, and rows left without neighbors are dropped and counted
    /// in [`isolated_dropped`](Self::isolated_dropped).
    pub fn from_rows<I>(rows: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, Vec<NodeId>)>,
    {
        let mut edges = Vec::new();
        let mut seen_active = Vec::new();
        for (active, churns) in rows {
            seen_active.push(active);
            edges.extend(churns.into_iter().map(|c| (active, c)));
        }
        seen_active.sort_unstable();
        seen_active.dedup();
        let mut graph = Self::from_edges(edges);
        graph.isolated_dropped = seen_active.len() - graph.active_count();
        graph
    }

    fn from_edges(mut edges: Vec<(NodeId, NodeId)>) -> Self {
        edges.sort_unstable();
        edges.dedup();

        let mut churn_ids: Vec<NodeId> = edges.iter().map(|&(_, c)| c).collect();
        churn_ids.sort_unstable();
        churn_ids.dedup();
        assert!(
            churn_ids.len() <= u32::MAX as usize,
            "churn side exceeds u32 index space"
        );

        let mut active_ids = Vec::new();
        let mut offsets = vec![0];
        let mut neighbors = Vec::with_capacity(edges.len());
        for (i, &(a, c)) in edges.iter().enumerate() {
            if i == 0 || edges[i - 1].0 != a {
                if i > 0 {
                    offsets.push(neighbors.len());
                }
                active_ids.push(a);
            }
            let dense = churn_ids.binary_search(&c).expect("churn id collected above");
            neighbors.push(dense as u32);
        }
        if !active_ids.is_empty() {
            offsets.push(neighbors.len());
        }
        let mut graph = BipartiteGraph {
            active_ids,
            churn_ids,
            offsets,
            neighbors,
            shards: Vec::new(),
            isolated_dropped: 0,
        };
        graph.shards = graph.balanced_shards(1);
        graph
    }

    pub fn active_count(&self) -> usize {
        self.active_ids.len()
    }

    pub fn churn_count(&self) -> usize {
        self.churn_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active_ids.is_empty()
    }

    /// Number of active nodes dropped at construction for having no edges.
    pub fn isolated_dropped(&self) -> usize {
        self.isolated_dropped
    }

    pub fn active_id(&self, row: usize) -> NodeId {
        self.active_ids[row]
    }

    pub fn churn_id(&self, churn: usize) -> NodeId {
        self.churn_ids[churn]
    }

    pub fn active_ids(&self) -> &[NodeId] {
        &self.active_ids
    }

    pub fn churn_ids(&self) -> &[NodeId] {
        &self.churn_ids
    }

    pub fn active_index(&self, id: NodeId) -> Option<usize> {
        self.active_ids.binary_search(&id).ok()
    }

    pub fn churn_index(&self, id: NodeId) -> Option<usize> {
        self.churn_ids.binary_search(&id).ok()
    }

    /// Dense churn indices adjacent to `row`, ascending.
    pub fn row(&self, row: usize) -> &[u32] {
        &self.neighbors[self.edge_range(row)]
    }

    /// Positions of `row`'s edges in the flat edge array. Edge-aligned data
    /// such as [`EdgeMeasure`](crate::measure::EdgeMeasure) is indexed by these.
    pub fn edge_range(&self, row: usize) -> Range<usize> {
        self.offsets[row]..self.offsets[row + 1]
    }

    pub fn degree(&self, row: usize) -> usize {
        self.offsets[row + 1] - self.offsets[row]
    }

    /// Flat edge position of `(row, churn)`, if that edge exists.
    pub fn edge_position(&self, row: usize, churn: usize) -> Option<usize> {
        let churn = u32::try_from(churn).ok()?;
        self.row(row).binary_search(&churn).ok().map(|k| self.offsets[row] + k)
    }

    /// Row `row` rendered with original ids.
    pub fn row_ids(&self, row: usize) -> (NodeId, Vec<NodeId>) {
        (
            self.active_ids[row],
            self.row(row).iter().map(|&c| self.churn_ids[c as usize]).collect(),
        )
    }

    pub fn rows(&self) -> impl Iterator<Item = (NodeId, Vec<NodeId>)> + '_ {
        (0..self.active_count()).map(|r| self.row_ids(r))
    }

    /// Contiguous row ranges, one per shard.
    pub fn shards(&self) -> &[Range<usize>] {
        &self.shards
    }

    /// Re-cuts the rows into `shard_count` contiguous shards of near-equal
    /// edge count. Row content is untouched. Counts above the row count are
    /// clamped.
    pub fn repartition(&self, shard_count: usize) -> BipartiteGraph {
        let mut g = self.clone();
        g.shards = g.balanced_shards(shard_count);
        g
    }

    fn balanced_shards(&self, shard_count: usize) -> Vec<Range<usize>> {
        let rows = self.active_count();
        if rows == 0 {
            return Vec::new();
        }
        let k = shard_count.clamp(1, rows);
        let total = self.edge_count() as u128;
        let mut shards = Vec::with_capacity(k);
        let mut start = 0;
        for s in 0..k {
            let end = if s + 1 == k {
                rows
            } else {
                let target = (total * (s as u128 + 1)).div_ceil(k as u128) as usize;
                let lo = start + 1;
                let hi = rows - (k - s - 1);
                // first row boundary whose prefix edge count reaches the target
                let boundary = self.offsets[lo..=hi].partition_point(|&o| o < target) + lo;
                boundary.clamp(lo, hi)
            };
            shards.push(start..end);
            start = end;
        }
        shards
    }

    /// Writes the graph as a tab-separated edge list, rows in id order.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for row in 0..self.active_count() {
            let a = self.active_ids[row];
            for &c in self.row(row) {
                writeln!(out, "{}\t{}", a, self.churn_ids[c as usize])?;
            }
        }
        out.flush()
    }
}

/// Reads a tab-separated edge list. Duplicate edges collapse; an optional
/// third field (a weight) is accepted and ignored here.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<BipartiteGraph, GraphError> {
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if let Some(rec) = parse_record(&line, i + 1, 3)? {
            edges.push((rec.active, rec.churn));
        }
    }
    Ok(BipartiteGraph::from_edges(edges))
}

/// Churn-to-active adjacency, the exact transpose of the graph rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChurnIndex {
    offsets: Vec<usize>,
    actives: Vec<u32>,
}

impl ChurnIndex {
    pub fn churn_count(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    /// Dense active rows adjacent to `churn`, ascending.
    pub fn neighbors(&self, churn: usize) -> &[u32] {
        &self.actives[self.offsets[churn]..self.offsets[churn + 1]]
    }

    pub fn degree(&self, churn: usize) -> usize {
        self.offsets[churn + 1] - self.offsets[churn]
    }

    pub fn incidence_count(&self) -> usize {
        self.actives.len()
    }

    /// Entries rendered with original ids, churn ids ascending.
    pub fn entries(&self, graph: &BipartiteGraph) -> Vec<(NodeId, Vec<NodeId>)> {
        (0..self.churn_count())
            .map(|c| {
                (
                    graph.churn_id(c),
                    self.neighbors(c).iter().map(|&a| graph.active_id(a as usize)).collect(),
                )
            })
            .collect()
    }
}

/// Groups the edges by churn node.
pub fn transpose(graph: &BipartiteGraph) -> ChurnIndex {
    let mut counts = vec![0usize; graph.churn_count() + 1];
    for &c in &graph.neighbors {
        counts[c as usize + 1] += 1;
    }
    for i in 1..counts.len() {
        counts[i] += counts[i - 1];
    }
    let offsets = counts;
    let mut cursor = offsets.clone();
    let mut actives = vec![0u32; graph.edge_count()];
    // rows are visited in ascending order, so each churn list comes out sorted
    for row in 0..graph.active_count() {
        for &c in graph.row(row) {
            let slot = &mut cursor[c as usize];
            actives[*slot] = row as u32;
            *slot += 1;
        }
    }
    ChurnIndex { offsets, actives }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DegreeDistribution {
    /// Every row gets `mean_degree` neighbors (stochastically rounded).
    Uniform,
    /// Row degrees follow a continuous power law `p(x) ∝ x^-exponent`,
    /// rescaled to the requested mean.
    PowerLaw { exponent: f64 },
}

impl FromStr for DegreeDistribution {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "uniform" {
            return Ok(DegreeDistribution::Uniform);
        }
        if let Some(exp) = s.strip_prefix("powerlaw:").or_else(|| s.strip_prefix("power-law:")) {
            let exponent: f64 = exp
                .parse()
                .map_err(|_| GraphError::InvalidParameter(format!("bad power-law exponent `{exp}`")))?;
            return Ok(DegreeDistribution::PowerLaw { exponent });
        }
        Err(GraphError::InvalidParameter(format!(
            "unknown degree distribution `{s}` (expected `uniform` or `powerlaw:<exponent>`)"
        )))
    }
}

impl fmt::Display for DegreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeDistribution::Uniform => f.write_str("uniform"),
            DegreeDistribution::PowerLaw { exponent } => write!(f, "powerlaw:{exponent}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SyntheticSpec {
    pub active_count: usize,
    pub churn_count: usize,
    pub mean_degree: f64,
    pub distribution: DegreeDistribution,
    pub seed: u64,
}

fn stochastic_round<R: Rng>(x: f64, rng: &mut R) -> usize {
    let floor = x.floor();
    let up = rng.random_bool((x - floor).clamp(0.0, 1.0));
    floor as usize + usize::from(up)
}

/// Generates a random bipartite graph with ids `0..active_count` on the
/// active side and `0..churn_count` on the churn side. Neighbors of each row
/// are a uniform sample without replacement from the churn side.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<BipartiteGraph, GraphError> {
    if spec.active_count == 0 || spec.churn_count == 0 {
        return Err(GraphError::InvalidParameter(
            "active and churn counts must be at least 1".into(),
        ));
    }
    if spec.mean_degree.is_nan() || spec.mean_degree < 1.0 {
        return Err(GraphError::InvalidParameter(format!(
            "mean degree must be at least 1, got {}",
            spec.mean_degree
        )));
    }
    if spec.mean_degree > spec.churn_count as f64 {
        return Err(GraphError::InfeasibleDegree {
            mean_degree: spec.mean_degree,
            churn_count: spec.churn_count,
        });
    }
    if spec.churn_count > u32::MAX as usize {
        return Err(GraphError::InvalidParameter("churn count exceeds u32 range".into()));
    }

    let mut rng = substream(spec.seed, &[label::GENERATOR]);
    let max_degree = spec.churn_count;
    let degrees: Vec<usize> = match spec.distribution {
        DegreeDistribution::Uniform => (0..spec.active_count)
            .map(|_| stochastic_round(spec.mean_degree, &mut rng).clamp(1, max_degree))
            .collect(),
        DegreeDistribution::PowerLaw { exponent } => {
            if !exponent.is_finite() || exponent <= 1.0 {
                return Err(GraphError::InvalidParameter(format!(
                    "power-law exponent must be finite and > 1, got {exponent}"
                )));
            }
            let pareto = Pareto::new(1.0, exponent - 1.0).map_err(|e| GraphError::InvalidParameter(e.to_string()))?;
            let raw: Vec<f64> = (0..spec.active_count).map(|_| pareto.sample(&mut rng)).collect();
            let scale = spec.mean_degree * spec.active_count as f64 / raw.iter().sum::<f64>();
            raw.iter()
                .map(|&x| stochastic_round(x * scale, &mut rng).clamp(1, max_degree))
                .collect()
        }
    };

    let rows = degrees.iter().enumerate().map(|(a, &d)| {
        let mut picked: Vec<NodeId> = rand::seq::index::sample(&mut rng, spec.churn_count, d)
            .into_iter()
            .map(|c| NodeId(c as u64))
            .collect();
        picked.sort_unstable();
        (NodeId(a as u64), picked)
    });
    Ok(BipartiteGraph::from_rows(rows.collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn toy() -> BipartiteGraph {
        load_edge_list("1\t2\n1\t6\n4\t3\n4\t6\n7\t2\n7\t5\n".as_bytes()).unwrap()
    }

    fn ids(v: &[u64]) -> Vec<NodeId> {
        v.iter().map(|&x| NodeId(x)).collect()
    }

    #[test]
    fn loads_table_rows() {
        let g = toy();
        assert_eq!(g.active_count(), 3);
        assert_eq!(g.churn_count(), 4);
        let rows: Vec<_> = g.rows().collect();
        assert_eq!(
            rows,
            vec![
                (NodeId(1), ids(&[2, 6])),
                (NodeId(4), ids(&[3, 6])),
                (NodeId(7), ids(&[2, 5])),
            ]
        );
    }

    #[test]
    fn empty_stream_gives_empty_graph() {
        let g = load_edge_list("".as_bytes()).unwrap();
        assert_eq!(g.active_count(), 0);
        assert_eq!(g.churn_count(), 0);
        assert!(g.shards().is_empty());
        assert_eq!(transpose(&g).churn_count(), 0);
    }

    #[test]
    fn duplicates_collapse() {
        let g = load_edge_list("1\t2\n1\t2\n# note\n\n1\t2\t0.5\n".as_bytes()).unwrap();
        assert_eq!(g.rows().collect::<Vec<_>>(), vec![(NodeId(1), ids(&[2]))]);
    }

    #[test]
    fn malformed_records_report_line() {
        let err = load_edge_list("1\t2\n3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = load_edge_list("1\t2\n\n1\tx\n".as_bytes()).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
        let err = load_edge_list("1\t2\t3\t4\n".as_bytes()).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn side_tags_are_checked() {
        let err = load_edge_list("a:1\tc:2\na:1\ta:4\n".as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            GraphError::BipartiteViolation {
                line: 2,
                side: Side::Active
            }
        ));
        let err = load_edge_list("c:1\tc:4\n".as_bytes()).unwrap_err();
        assert!(matches!(err, GraphError::BipartiteViolation { side: Side::Churn, .. }));
        // churn-first tagged records are flipped
        let g = load_edge_list("c:2\ta:1\n".as_bytes()).unwrap();
        assert_eq!(g.active_id(0), NodeId(1));
        assert_eq!(g.churn_id(0), NodeId(2));
    }

    #[test]
    fn transpose_toy() {
        let g = toy();
        let idx = transpose(&g);
        assert_eq!(
            idx.entries(&g),
            vec![
                (NodeId(2), ids(&[1, 7])),
                (NodeId(3), ids(&[4])),
                (NodeId(5), ids(&[7])),
                (NodeId(6), ids(&[1, 4])),
            ]
        );
        assert_eq!(idx.incidence_count(), g.edge_count());
    }

    #[test]
    fn transpose_is_an_involution() {
        let g = toy();
        let idx = transpose(&g);
        let back = BipartiteGraph::from_edges(
            idx.entries(&g)
                .into_iter()
                .flat_map(|(c, actives)| actives.into_iter().map(move |a| (a, c)))
                .collect(),
        );
        assert_eq!(back, g);
    }

    #[test]
    fn repartition_examples() {
        let g = toy();
        assert_eq!(g.repartition(3).shards(), &[0..1, 1..2, 2..3]);
        assert_eq!(g.repartition(1).shards().to_vec(), vec![(0..3)]);
        assert_eq!(g.repartition(10).shards().len(), 3);
        assert_eq!(
            g.repartition(2).rows().collect::<Vec<_>>(),
            g.rows().collect::<Vec<_>>()
        );
    }

    #[test]
    fn repartition_balances_edges() {
        // one heavy row then many light ones
        let mut rows = vec![(NodeId(0), (0..100).map(NodeId).collect::<Vec<_>>())];
        rows.extend((1..101).map(|a| (NodeId(a), vec![NodeId(a)])));
        let g = BipartiteGraph::from_rows(rows).repartition(2);
        assert_eq!(g.shards()[0], 0..1);
        assert_eq!(g.shards()[1], 1..101);
    }

    #[test]
    fn isolated_rows_are_counted() {
        let g = BipartiteGraph::from_rows(vec![(NodeId(1), vec![NodeId(3), NodeId(3)]), (NodeId(2), vec![])]);
        assert_eq!(g.active_count(), 1);
        assert_eq!(g.isolated_dropped(), 1);
        assert_eq!(g.row(0).len(), 1);
    }

    #[test]
    fn synthetic_uniform_structure() {
        let spec = SyntheticSpec {
            active_count: 3,
            churn_count: 4,
            mean_degree: 2.0,
            distribution: DegreeDistribution::Uniform,
            seed: 7,
        };
        let g = generate_synthetic(&spec).unwrap();
        assert_eq!(g.active_count(), 3);
        for r in 0..3 {
            assert_eq!(g.degree(r), 2);
        }
        assert_eq!(generate_synthetic(&spec).unwrap(), g);
    }

    #[test]
    fn synthetic_single_edge() {
        for seed in 0..5 {
            let g = generate_synthetic(&SyntheticSpec {
                active_count: 1,
                churn_count: 1,
                mean_degree: 1.0,
                distribution: DegreeDistribution::Uniform,
                seed,
            })
            .unwrap();
            assert_eq!(g.rows().collect::<Vec<_>>(), vec![(NodeId(0), ids(&[0]))]);
        }
    }

    #[test]
    fn synthetic_rejects_infeasible_degree() {
        let err = generate_synthetic(&SyntheticSpec {
            active_count: 3,
            churn_count: 2,
            mean_degree: 3.0,
            distribution: DegreeDistribution::Uniform,
            seed: 0,
        })
        .unwrap_err();
        assert!(matches!(err, GraphError::InfeasibleDegree { .. }));
    }

    #[test]
    fn synthetic_power_law_mean_degree() {
        let g = generate_synthetic(&SyntheticSpec {
            active_count: 10_000,
            churn_count: 50_000,
            mean_degree: 20.0,
            distribution: DegreeDistribution::PowerLaw { exponent: 2.5 },
            seed: 1,
        })
        .unwrap();
        assert_eq!(g.active_count(), 10_000);
        let edges = g.edge_count() as f64;
        assert!((edges - 200_000.0).abs() < 0.05 * 200_000.0, "{edges}");
        let max = (0..g.active_count()).map(|r| g.degree(r)).max().unwrap();
        assert!(max > 200, "expected a heavy tail, max degree {max}");
    }

    #[test]
    fn distribution_names_parse() {
        assert_eq!(
            "uniform".parse::<DegreeDistribution>().unwrap(),
            DegreeDistribution::Uniform
        );
        assert_eq!(
            "powerlaw:2.5".parse::<DegreeDistribution>().unwrap(),
            DegreeDistribution::PowerLaw { exponent: 2.5 }
        );
        assert!("zipf".parse::<DegreeDistribution>().is_err());
    }
}
