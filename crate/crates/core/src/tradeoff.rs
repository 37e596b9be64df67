//! Secondary join-trees: separator-bounded merging, per-cluster cycle-cutsets,
//! the resulting time/space series, and complexity exponents.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{cutset_heuristic, UGraph};
use crate::jointree::{CliqueTree, Generation, TreeEdge};
use crate::ordering::Heuristic;

/// One secondary tree of the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionPoint {
    pub sep_bound: usize,
    pub max_cluster: usize,
    pub max_cutset: usize,
    pub clusters: usize,
    pub time_exp: usize,
    pub space_exp: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TradeoffSeries {
    pub circuit: String,
    pub ordering: Heuristic,
    /// Strictly decreasing `sep_bound`, ending at 0.
    pub points: Vec<DecompositionPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Clustering,
    Conditioning,
    Hybrid,
}

/// Exponents of `O(n * exp(time_exp))` time and `O(n * exp(space_exp))`
/// space. A space exponent of 0 means linear space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n: usize,
    pub time_exp: usize,
    pub space_exp: usize,
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "time O({}*exp({})), space O({}*exp({}))",
            self.n, self.time_exp, self.n, self.space_exp
        )
    }
}

/// Exponents per inference scheme, from a point's `(r, s, c)`:
/// clustering `(r + 1, s)`, conditioning `(c + 2, 0)`, hybrid
/// `(max(s, c), s)`.
pub fn complexity_bounds(p: &DecompositionPoint, n: usize, mode: Mode) -> Bounds {
    let (time_exp, space_exp) = match mode {
        Mode::Clustering => (p.max_cluster + 1, p.sep_bound),
        Mode::Conditioning => (p.max_cutset + 2, 0),
        Mode::Hybrid => (p.sep_bound.max(p.max_cutset), p.sep_bound),
    };
    Bounds {
        n,
        time_exp,
        space_exp,
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Contract every tree edge whose separator exceeds `bound`. Merged clusters
/// are unions of the original ones and keep the position of their earliest
/// member; surviving separators are recomputed.
pub fn merge_by_separator(t: &CliqueTree, bound: usize) -> CliqueTree {
    let k = t.clusters.len();
    let mut parent: Vec<usize> = (0..k).collect();
    for e in &t.edges {
        if e.separator.len() > bound {
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut new_index = vec![usize::MAX; k];
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        if new_index[r] == usize::MAX {
            new_index[r] = clusters.len();
            clusters.push(Vec::new());
        }
        new_index[i] = new_index[r];
        clusters[new_index[i]].extend_from_slice(&t.clusters[i]);
    }
    for c in &mut clusters {
        c.sort_unstable();
        c.dedup();
    }
    let edges = t
        .edges
        .iter()
        .filter(|e| e.separator.len() <= bound)
        .map(|e| {
            let (a, b) = (new_index[e.a], new_index[e.b]);
            TreeEdge {
                a: a.min(b),
                b: a.max(b),
                separator: sorted_intersection(&clusters[a], &clusters[b]),
            }
        })
        .collect();
    let generation = if bound >= crate::jointree::separator_width(t) {
        t.generation
    } else {
        Generation::Secondary { bound }
    };
    CliqueTree {
        clusters,
        edges,
        ordering: t.ordering,
        generation,
    }
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Memoised per-cluster cutset sizes, keyed by the sorted cluster.
#[derive(Debug, Default)]
pub struct CutsetCache {
    sizes: HashMap<Vec<usize>, usize>,
}

impl CutsetCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn size(&mut self, moral: &UGraph, cluster: &[usize]) -> usize {
        if let Some(&s) = self.sizes.get(cluster) {
            return s;
        }
        let s = cutset_heuristic(&moral.induced_subgraph(cluster)).len();
        self.sizes.insert(cluster.to_vec(), s);
        s
    }
}

/// Cycle-cutset size of the moral graph restricted to each cluster.
pub fn cluster_cutsets(t: &CliqueTree, moral: &UGraph) -> Vec<usize> {
    cluster_cutsets_cached(t, moral, &mut CutsetCache::new())
}

pub fn cluster_cutsets_cached(
    t: &CliqueTree,
    moral: &UGraph,
    cache: &mut CutsetCache,
) -> Vec<usize> {
    t.clusters.iter().map(|c| cache.size(moral, c)).collect()
}

/// Summarise one tree as a series point.
pub fn decomposition_point(t: &CliqueTree, cutsets: &[usize]) -> DecompositionPoint {
    let mut p = DecompositionPoint {
        sep_bound: t.separator_width(),
        max_cluster: t.max_cluster(),
        max_cutset: cutsets.iter().copied().max().unwrap_or(0),
        clusters: t.len(),
        time_exp: 0,
        space_exp: 0,
    };
    let b = complexity_bounds(&p, 0, Mode::Hybrid);
    p.time_exp = b.time_exp;
    p.space_exp = b.space_exp;
    p
}

/// Distinct separator sizes of `t0` in decreasing order, ending at 0.
pub fn series_thresholds(t0: &CliqueTree) -> Vec<usize> {
    let mut s: Vec<usize> = t0.edges.iter().map(|e| e.separator.len()).collect();
    s.push(0);
    s.sort_unstable_by(|a, b| b.cmp(a));
    s.dedup();
    s
}

/// The tree merged at `bound` together with its per-cluster cutsets.
pub fn secondary_tree(
    t0: &CliqueTree,
    moral: &UGraph,
    bound: usize,
    cache: &mut CutsetCache,
) -> (CliqueTree, Vec<usize>) {
    let t = merge_by_separator(t0, bound);
    let c = cluster_cutsets_cached(&t, moral, cache);
    (t, c)
}

/// One point per distinct separator size of the primary tree, from the
/// primary tree itself down to a single cluster per component.
pub fn tradeoff_series(t0: &CliqueTree, moral: &UGraph, circuit: &str) -> TradeoffSeries {
    let mut cache = CutsetCache::new();
    let points = series_thresholds(t0)
        .into_iter()
        .map(|bound| {
            let (t, c) = secondary_tree(t0, moral, bound, &mut cache);
            decomposition_point(&t, &c)
        })
        .collect();
    TradeoffSeries {
        circuit: circuit.to_string(),
        ordering: t0.ordering.unwrap_or(Heuristic::MinDegree),
        points,
    }
}
