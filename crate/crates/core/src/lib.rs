//! Graph clustering with thin position.
//!
//! An ordering of a graph's vertices induces a width profile: the boundary
//! size of each prefix. This crate reduces that profile with shifts that
//! provably shrink the sorted width vector, stops at a strongly irreducible
//! ordering, and reads pinch clusters off its local minima.
//!
//! ```
//! use thinpos::{generate, thin, collect_clusters, Ordering};
//!
//! let g = generate::barbell(4).unwrap();
//! let start = Ordering::from_vertices(vec![0, 4, 1, 5, 2, 6, 3, 7]).unwrap();
//! let out = thin(&g, start).unwrap();
//! let clusters = collect_clusters(&g, &out.ordering, &out.profile).unwrap();
//! assert!(clusters.iter().any(|c| c.boundary == 1.0 && c.len() == 4));
//! ```
//!
//! Module map:
//! - [`graph`]: weighted graphs, vertex sets, boundary sizes, slopes
//! - [`slopes`]: the `O(N²)` slope table
//! - [`ordering`], [`width`]: orderings, shifts, width profiles and vectors
//! - [`thinning`]: weak reductions and the thinning loop
//! - [`clusters`]: minima clusters, block refinement, cores
//! - [`oracle`]: exhaustive pinch-cluster checks for small graphs
//! - [`ingest`], [`generate`]: input formats and synthetic graphs
//! - [`driver`]: multistart runs and reports

pub mod clusters;
pub mod driver;
pub mod error;
pub mod generate;
pub mod graph;
pub mod ingest;
pub mod oracle;
pub mod ordering;
pub mod slopes;
pub mod thinning;
pub mod width;

pub use clusters::{
    collect_clusters, core, extract_minima_clusters, is_pinch_cluster_fast, refine_block,
    BlockDecomposition, Cluster, Provenance,
};
pub use driver::{run_multistart, run_seeded_prefix, ClusterReport, Discovery, RunConfig};
pub use error::Error;
pub use graph::{boundary_size, slope, Graph, Tolerance, VertexSet};
pub use oracle::{
    enumerate_pinch_clusters, is_pinch_cluster_exact, is_pinch_concave_exact, is_pinch_convex_exact,
    Oracle, OracleReport,
};
pub use ordering::{apply_shift, Ordering};
pub use slopes::{build_slope_table, SlopeTable};
pub use thinning::{find_weak_reduction, thin, ShiftCase, ShiftMove, Thinned, Thinner};
pub use width::{
    compare_widths, compare_widths_with, width_profile, width_vector, Arrangement, Flat, FlatKind,
    WidthProfile, WidthVector,
};
