//! Pinch clusters read off a strongly irreducible ordering.
//!
//! Every interior local minimum `k` gives the prefix cluster `A_k`. Between
//! consecutive minima the block `B_i` is refined by repeatedly dropping a
//! vertex of maximal slope until every remaining slope is negative; a
//! non-empty survivor is again a pinch cluster.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::ClusterError;
use crate::graph::{boundary_size, slope, Graph, VertexSet};
use crate::ordering::Ordering;
use crate::slopes::build_slope_table;
use crate::thinning::is_strongly_irreducible;
use crate::width::WidthProfile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Prefix `A_k` at an interior local minimum `k`.
    MinimumLevel { level: usize },
    /// Survivor of refining an interior block; `removed` lists dropped
    /// vertices in removal order.
    BlockRefined {
        block: Option<usize>,
        removed: Vec<usize>,
    },
    /// Core of another cluster; `removed` lists the zero-slope vertices
    /// stripped from the parent.
    Core { parent: Vec<usize>, removed: Vec<usize> },
    /// A connected component of a graph whose profile is identically zero.
    Component,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    pub members: VertexSet,
    pub boundary: f64,
    pub provenance: Provenance,
}

impl Cluster {
    pub fn new(g: &Graph, members: VertexSet, provenance: Provenance) -> Cluster {
        let boundary = boundary_size(g, &members);
        Cluster {
            members,
            boundary,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Single-vertex necessary conditions: no member has positive slope and no
/// outsider has negative slope. Cheap, but not sufficient.
pub fn is_pinch_cluster_fast(g: &Graph, a: &VertexSet) -> bool {
    let tol = g.tolerance();
    (0..g.n()).all(|v| {
        let s = slope(g, a, v);
        if a.contains(v) {
            !tol.positive(s)
        } else {
            !tol.negative(s)
        }
    })
}

/// Chosen minima `m_0 = 0 < m_1 < … < m_k < m_{k+1} = N` (leftmost level of
/// each interior minimal flat) and the blocks between them.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub minima: Vec<usize>,
    pub blocks: Vec<VertexSet>,
}

impl BlockDecomposition {
    pub fn new(g: &Graph, o: &Ordering, p: &WidthProfile) -> BlockDecomposition {
        let n = g.n();
        let mut minima = vec![0];
        minima.extend(p.interior_minima().map(|f| f.lo));
        minima.push(n);
        let blocks = minima
            .windows(2)
            .map(|w| VertexSet::from_vertices(g, o.vertices()[w[0]..w[1]].iter().copied()))
            .collect();
        BlockDecomposition { minima, blocks }
    }

    /// Number of interior minima `k`.
    pub fn interior_minima(&self) -> usize {
        self.minima.len() - 2
    }

    /// Indices `1..k` of the blocks that need refinement; `B_0` and `B_k`
    /// are already pinch clusters.
    pub fn interior_blocks(&self) -> std::ops::Range<usize> {
        1..self.blocks.len().saturating_sub(1)
    }

    pub fn refine(&self, g: &Graph, index: usize) -> Option<Cluster> {
        let mut c = refine_block(g, &self.blocks[index])?;
        if let Provenance::BlockRefined { block, .. } = &mut c.provenance {
            *block = Some(index);
        }
        Some(c)
    }
}

fn reject_unless_irreducible(g: &Graph, o: &Ordering, p: &WidthProfile) -> Result<(), ClusterError> {
    let t = build_slope_table(g, o);
    if is_strongly_irreducible(g, o, p, &t) {
        Ok(())
    } else {
        Err(ClusterError::NotStronglyIrreducible)
    }
}

/// Prefix clusters at interior local minima, one per minimal flat (its
/// leftmost level), or every level of every minimal flat with `all_levels`.
pub fn extract_minima_clusters(
    g: &Graph,
    o: &Ordering,
    p: &WidthProfile,
    all_levels: bool,
) -> Result<Vec<Cluster>, ClusterError> {
    reject_unless_irreducible(g, o, p)?;
    let mut out = Vec::new();
    for f in p.interior_minima() {
        let levels = if all_levels { f.lo..=f.hi } else { f.lo..=f.lo };
        for level in levels {
            let members = VertexSet::from_vertices(g, o.prefix(level).iter().copied());
            out.push(Cluster::new(g, members, Provenance::MinimumLevel { level }));
        }
    }
    Ok(out)
}

/// Drops a maximal-slope vertex (smallest id on ties) while any member has
/// non-negative slope. Returns the survivor, or `None` if nothing is left.
pub fn refine_block(g: &Graph, block: &VertexSet) -> Option<Cluster> {
    let tol = g.tolerance();
    let mut current = block.clone();
    let mut removed = Vec::new();
    loop {
        let worst = current
            .iter()
            .map(|v| (v, slope(g, &current, v)))
            .fold(None, |best: Option<(usize, f64)>, (v, s)| match best {
                Some((_, bs)) if bs >= s => best,
                _ => Some((v, s)),
            });
        match worst {
            None => return None,
            Some((_, s)) if tol.negative(s) => break,
            Some((v, _)) => {
                current.remove(g, v);
                removed.push(v);
            }
        }
    }
    Some(Cluster::new(
        g,
        current,
        Provenance::BlockRefined {
            block: None,
            removed,
        },
    ))
}

/// Strips zero-slope vertices (smallest id first, slopes recomputed after
/// each removal) until every remaining slope is strictly negative. The
/// boundary size is unchanged.
///
/// A positive slope means the input was not a pinch cluster. Isolated
/// vertices have slope zero, so an all-isolated input yields an empty core.
pub fn core(g: &Graph, a: &VertexSet) -> Result<Cluster, ClusterError> {
    let tol = g.tolerance();
    let mut current = a.clone();
    let mut removed = Vec::new();
    loop {
        let mut zero = None;
        for v in current.iter() {
            let s = slope(g, &current, v);
            if tol.positive(s) {
                return Err(ClusterError::PositiveSlope { vertex: v, slope: s });
            }
            if zero.is_none() && !tol.negative(s) {
                zero = Some(v);
            }
        }
        let Some(v) = zero else { break };
        current.remove(g, v);
        removed.push(v);
    }
    Ok(Cluster::new(
        g,
        current,
        Provenance::Core {
            parent: a.to_vec(),
            removed,
        },
    ))
}

/// Minimum-level clusters plus every non-empty refined interior block,
/// deduplicated by member set (first occurrence wins).
pub fn collect_clusters(
    g: &Graph,
    o: &Ordering,
    p: &WidthProfile,
) -> Result<Vec<Cluster>, ClusterError> {
    let mut seen: BTreeMap<VertexSet, Cluster> = BTreeMap::new();
    let mut order = Vec::new();
    let mut push = |c: Cluster| {
        if !seen.contains_key(&c.members) {
            order.push(c.members.clone());
            seen.insert(c.members.clone(), c);
        }
    };
    for c in extract_minima_clusters(g, o, p, false)? {
        push(c);
    }
    let blocks = BlockDecomposition::new(g, o, p);
    for idx in blocks.interior_blocks() {
        if let Some(c) = blocks.refine(g, idx) {
            push(c);
        }
    }
    Ok(order
        .into_iter()
        .map(|m| seen.remove(&m).expect("recorded cluster"))
        .collect())
}
