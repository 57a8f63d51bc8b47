//! Multistart orchestration and the JSON cluster report.
//!
//! Restart `r` draws its initial ordering from `ChaCha8Rng` (rand_chacha
//! 0.3) seeded with `seed` on stream `r`, shuffled with rand 0.8's
//! Fisher–Yates `SliceRandom::shuffle`. Restarts run in parallel and are
//! merged in restart order, so reports do not depend on scheduling.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::clusters::{collect_clusters, is_pinch_cluster_fast, Cluster, Provenance};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::oracle::{Oracle, DEFAULT_LIMIT};
use crate::ordering::Ordering;
use crate::thinning::{thin, Thinner};

pub const PRNG: &str = "ChaCha8Rng (rand_chacha 0.3), stream = restart index; rand 0.8 SliceRandom::shuffle";

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub restarts: usize,
    pub seed: u64,
    /// Overrides the graph's comparison tolerance.
    pub epsilon: Option<f64>,
    /// Run the exact oracle on every reported cluster (graphs with at most
    /// 16 vertices).
    pub oracle: bool,
    pub max_steps: Option<u64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            restarts: 32,
            seed: 0,
            epsilon: None,
            oracle: false,
            max_steps: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub total_weight: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestartSummary {
    pub restart: usize,
    pub steps: u64,
    pub width_vector: Vec<f64>,
    /// Leftmost level of each interior minimal flat.
    pub minima: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterEntry {
    pub members: Vec<String>,
    pub vertices: Vec<usize>,
    pub size: usize,
    pub boundary: f64,
    /// First restart that produced this member set.
    pub restart: usize,
    pub provenance: Provenance,
    pub fast_check: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub graph: GraphStats,
    pub config: RunConfig,
    pub prng: String,
    pub restarts: Vec<RestartSummary>,
    pub clusters: Vec<ClusterEntry>,
}

impl ClusterReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text summary for terminals.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "graph: {} vertices, {} edges, total weight {}\n",
            self.graph.vertices, self.graph.edges, self.graph.total_weight
        );
        for r in &self.restarts {
            let head: Vec<String> = r.width_vector.iter().take(6).map(|w| format!("{w}")).collect();
            s.push_str(&format!(
                "restart {:>3}: {:>6} steps, {} minima, width ({}, ...)\n",
                r.restart,
                r.steps,
                r.minima.len(),
                head.join(", ")
            ));
        }
        s.push_str(&format!("{} clusters\n", self.clusters.len()));
        for c in &self.clusters {
            let shown: Vec<&str> = c.members.iter().take(12).map(String::as_str).collect();
            let more = if c.size > shown.len() { ", ..." } else { "" };
            s.push_str(&format!(
                "  boundary {:<10} size {:<5} {{{}{}}}\n",
                c.boundary,
                c.size,
                shown.join(", "),
                more
            ));
        }
        s
    }
}

/// Random generator for restart `r`.
pub fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

struct RestartResult {
    summary: RestartSummary,
    clusters: Vec<Cluster>,
}

fn run_restart(g: &Graph, cfg: &RunConfig, restart: usize) -> Result<RestartResult, Error> {
    let mut rng = restart_rng(cfg.seed, restart);
    let start = Ordering::random(g.n(), &mut rng);
    let mut thinner = Thinner::new(g, start)?;
    if let Some(limit) = cfg.max_steps {
        thinner = thinner.with_limit(limit);
    }
    let out = thinner.run()?;
    let clusters = collect_clusters(g, &out.ordering, &out.profile)?;
    Ok(RestartResult {
        summary: RestartSummary {
            restart,
            steps: out.steps,
            width_vector: out.width_vector().0,
            minima: out.profile.interior_minima().map(|f| f.lo).collect(),
        },
        clusters,
    })
}

/// Thins `cfg.restarts` random orderings and merges every cluster they
/// expose, deduplicated by member set and sorted by boundary (ascending),
/// then size (descending), then members.
pub fn run_multistart(g: &Graph, cfg: &RunConfig) -> Result<ClusterReport, Error> {
    let tuned;
    let g = match cfg.epsilon {
        Some(eps) => {
            tuned = g.clone().with_tolerance(eps);
            &tuned
        }
        None => g,
    };
    let restarts = cfg.restarts.max(1);
    let results: Vec<RestartResult> = (0..restarts)
        .into_par_iter()
        .map(|r| run_restart(g, cfg, r))
        .collect::<Result<_, _>>()?;

    let mut merged: BTreeMap<VertexSet, (usize, Cluster)> = BTreeMap::new();
    let mut summaries = Vec::with_capacity(results.len());
    for res in results {
        for c in res.clusters {
            merged
                .entry(c.members.clone())
                .or_insert((res.summary.restart, c));
        }
        summaries.push(res.summary);
    }
    if g.n() > 0 && g.edge_count() == 0 {
        // The profile is identically zero: no interior minima exist, but
        // every vertex is its own component.
        for v in 0..g.n() {
            let c = Cluster::new(g, VertexSet::from_vertices(g, [v]), Provenance::Component);
            merged.entry(c.members.clone()).or_insert((0, c));
        }
    }

    let oracle = Oracle::default();
    let run_oracle = cfg.oracle && g.n() <= DEFAULT_LIMIT;
    let mut clusters: Vec<ClusterEntry> = merged
        .into_values()
        .map(|(restart, c)| {
            let vertices = c.members.to_vec();
            ClusterEntry {
                members: vertices.iter().map(|&v| g.label(v)).collect(),
                size: vertices.len(),
                vertices,
                boundary: c.boundary,
                restart,
                fast_check: is_pinch_cluster_fast(g, &c.members),
                oracle: run_oracle.then(|| oracle.is_pinch_cluster(g, &c.members).unwrap_or(false)),
                provenance: c.provenance,
            }
        })
        .collect();
    clusters.sort_by(|a, b| {
        a.boundary
            .total_cmp(&b.boundary)
            .then(b.size.cmp(&a.size))
            .then_with(|| a.vertices.cmp(&b.vertices))
    });

    Ok(ClusterReport {
        graph: GraphStats {
            vertices: g.n(),
            edges: g.edge_count(),
            total_weight: g.total_weight(),
            tolerance: g.tolerance().0,
        },
        config: cfg.clone(),
        prng: PRNG.to_string(),
        restarts: summaries,
        clusters,
    })
}

/// Result of [`run_seeded_prefix`].
#[derive(Clone, Debug)]
pub struct Discovery {
    pub ordering: Ordering,
    pub discovered: bool,
    pub steps: u64,
}

/// Thins the ordering that lists `a` first and reports whether the result
/// still has `a` as the prefix at an interior local minimum.
pub fn run_seeded_prefix(g: &Graph, a: &VertexSet) -> Result<Discovery, Error> {
    let members = a.to_vec();
    let out = thin(g, Ordering::with_prefix(g.n(), &members))?;
    let level = members.len();
    let discovered = level > 0
        && level < g.n()
        && out.profile.is_interior_minimum(level)
        && out.ordering.prefix(level).iter().all(|&v| a.contains(v));
    Ok(Discovery {
        ordering: out.ordering,
        discovered,
        steps: out.steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn barbell_multistart_finds_halves() {
        let g = generate::barbell(3).unwrap();
        let cfg = RunConfig {
            restarts: 8,
            seed: 1,
            oracle: true,
            ..RunConfig::default()
        };
        let rep = run_multistart(&g, &cfg).unwrap();
        let first = rep
            .clusters
            .iter()
            .find(|c| c.vertices == vec![0, 1, 2])
            .expect("left triangle reported");
        assert_eq!(first.boundary, 1.0);
        assert_eq!(first.oracle, Some(true));
        assert!(rep.clusters.iter().all(|c| c.fast_check));
    }

    #[test]
    fn edgeless_graph_reports_singletons() {
        let g = Graph::from_edges(4, []).unwrap();
        let rep = run_multistart(&g, &RunConfig::default()).unwrap();
        assert_eq!(rep.clusters.len(), 4);
        assert!(rep.clusters.iter().all(|c| c.size == 1 && c.boundary == 0.0));
    }

    #[test]
    fn path_reports_nothing() {
        let g = generate::path(4).unwrap();
        let rep = run_multistart(&g, &RunConfig::default()).unwrap();
        assert!(rep.clusters.is_empty());
    }

    #[test]
    fn report_is_deterministic() {
        let g = generate::planted(&[6, 7, 5], 0.8, 0.1, 11).unwrap();
        let cfg = RunConfig {
            restarts: 12,
            seed: 99,
            ..RunConfig::default()
        };
        let a = run_multistart(&g, &cfg).unwrap().to_json();
        let b = run_multistart(&g, &cfg).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn seeded_prefix_discovery() {
        let g = generate::barbell(3).unwrap();
        let a = VertexSet::from_vertices(&g, [0, 1, 2]);
        assert!(run_seeded_prefix(&g, &a).unwrap().discovered);
        assert!(!run_seeded_prefix(&g, &VertexSet::full(&g)).unwrap().discovered);
    }
}
