//! Elimination-ordering heuristics: min-degree, min-width, max-cardinality
//! and causal (topological).

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::UGraph;
use crate::netlist::Dag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Heuristic {
    MinDegree,
    MinWidth,
    MaxCardinality,
    Causal,
}

impl Heuristic {
    pub const ALL: [Heuristic; 4] = [
        Heuristic::MinDegree,
        Heuristic::MaxCardinality,
        Heuristic::MinWidth,
        Heuristic::Causal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Heuristic::MinDegree => "min-degree",
            Heuristic::MinWidth => "min-width",
            Heuristic::MaxCardinality => "max-cardinality",
            Heuristic::Causal => "causal",
        }
    }

    /// Short column tag used in comparison tables.
    pub fn abbrev(self) -> &'static str {
        match self {
            Heuristic::MinDegree => "mdo",
            Heuristic::MinWidth => "mwo",
            Heuristic::MaxCardinality => "mco",
            Heuristic::Causal => "co",
        }
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Heuristic {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "min-degree" | "mdo" => Heuristic::MinDegree,
            "min-width" | "mwo" => Heuristic::MinWidth,
            "max-cardinality" | "mco" => Heuristic::MaxCardinality,
            "causal" | "co" => Heuristic::Causal,
            _ => return Err(GraphError::UnknownLabel(s.to_string())),
        })
    }
}

/// How ties between equally good candidates are broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(tag = "policy", rename_all = "kebab-case")]
pub enum TieBreak {
    /// Lowest node id wins.
    #[default]
    Index,
    /// A seeded random priority over nodes.
    Random { seed: u64 },
}

impl TieBreak {
    /// Priority per node; lower ranks win ties.
    fn ranks(self, n: usize) -> Vec<usize> {
        match self {
            TieBreak::Index => (0..n).collect(),
            TieBreak::Random { seed } => {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                let mut rank = vec![0; n];
                for (r, v) in perm.into_iter().enumerate() {
                    rank[v] = r;
                }
                rank
            }
        }
    }

    fn rng(self) -> Option<ChaCha8Rng> {
        match self {
            TieBreak::Index => None,
            TieBreak::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreak::Index => f.write_str("index"),
            TieBreak::Random { seed } => write!(f, "random({seed})"),
        }
    }
}

/// A permutation of graph nodes, position 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    pub heuristic: Heuristic,
    pub tie_break: TieBreak,
    pub nodes: Vec<usize>,
}

impl Ordering {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.nodes.len()];
        for (i, &v) in self.nodes.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// JSON export with node labels: `{"heuristic":..,"tie_break":..,"nodes":[..]}`.
    pub fn to_json(&self, labels: &[String]) -> String {
        #[derive(Serialize)]
        struct Dump<'a> {
            heuristic: Heuristic,
            tie_break: String,
            nodes: Vec<&'a str>,
        }
        let dump = Dump {
            heuristic: self.heuristic,
            tie_break: self.tie_break.to_string(),
            nodes: self.nodes.iter().map(|&v| labels[v].as_str()).collect(),
        };
        serde_json::to_string(&dump).expect("plain data serialises")
    }
}

/// Greedy elimination from the last position backwards, picking the node of
/// least current degree. With `fill`, neighbours of the eliminated node are
/// joined pairwise before it is removed.
fn greedy_elimination(g: &UGraph, tie: TieBreak, fill: bool) -> Vec<usize> {
    let n = g.len();
    let rank = tie.ranks(n);
    let mut adj: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            b.extend(g.neighbors(v).iter().copied());
            b
        })
        .collect();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut order = vec![0; n];
    let mut nbrs = FixedBitSet::with_capacity(n);

    for slot in (0..n).rev() {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], rank[v]))
            .expect("a node remains");
        order[slot] = v;
        alive[v] = false;
        nbrs.clone_from(&adj[v]);
        for u in nbrs.ones() {
            adj[u].set(v, false);
            if fill {
                adj[u].union_with(&nbrs);
                adj[u].set(u, false);
                degree[u] = adj[u].count_ones(..);
            } else {
                degree[u] -= 1;
            }
        }
    }
    order
}

/// Min-degree ordering, built last to first with fill.
pub fn min_degree(g: &UGraph, tie: TieBreak) -> Ordering {
    Ordering {
        heuristic: Heuristic::MinDegree,
        tie_break: tie,
        nodes: greedy_elimination(g, tie, true),
    }
}

/// Min-width ordering: as min-degree but no fill edges are added.
pub fn min_width(g: &UGraph, tie: TieBreak) -> Ordering {
    Ordering {
        heuristic: Heuristic::MinWidth,
        tie_break: tie,
        nodes: greedy_elimination(g, tie, false),
    }
}

/// Max-cardinality ordering, built first to last: each next node has the
/// most already-ordered neighbours.
pub fn max_cardinality(g: &UGraph, tie: TieBreak) -> Ordering {
    let n = g.len();
    let rank = tie.ranks(n);
    let mut count = vec![0usize; n];
    let mut placed = vec![false; n];
    let mut nodes = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(count[v]), rank[v]))
            .expect("a node remains");
        placed[v] = true;
        nodes.push(v);
        for &w in g.neighbors(v) {
            count[w] += 1;
        }
    }
    Ordering {
        heuristic: Heuristic::MaxCardinality,
        tie_break: tie,
        nodes,
    }
}

/// Causal ordering: a topological sort produced by depth-first search from
/// the primary outputs, emitting each node after its fan-in. Outputs and
/// fan-ins are visited in declaration order; any node not reached from an
/// output follows by id. A random tie-break shuffles both visit orders.
pub fn causal(dag: &Dag, tie: TieBreak) -> Ordering {
    let n = dag.len();
    let mut rng = tie.rng();
    let mut roots: Vec<usize> = dag.outputs().to_vec();
    if let Some(r) = rng.as_mut() {
        roots.shuffle(r);
    }
    let rest_rank = tie.ranks(n);
    let mut rest: Vec<usize> = (0..n).collect();
    rest.sort_by_key(|&v| rest_rank[v]);
    roots.extend(rest);

    let mut state = vec![0u8; n]; // 0 new, 1 open, 2 done
    let mut nodes = Vec::with_capacity(n);
    for root in roots {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        let fanin = |v: usize, rng: &mut Option<ChaCha8Rng>| {
            let mut ps = dag.parents(v).to_vec();
            if let Some(r) = rng.as_mut() {
                ps.shuffle(r);
            }
            ps
        };
        state[root] = 1;
        stack.push((root, fanin(root, &mut rng), 0));
        while let Some(top) = stack.last_mut() {
            let (v, ps, i) = (top.0, &top.1, top.2);
            if i < ps.len() {
                let p = ps[i];
                top.2 += 1;
                if state[p] == 0 {
                    state[p] = 1;
                    let next = fanin(p, &mut rng);
                    stack.push((p, next, 0));
                }
            } else {
                state[v] = 2;
                nodes.push(v);
                stack.pop();
            }
        }
    }
    Ordering {
        heuristic: Heuristic::Causal,
        tie_break: tie,
        nodes,
    }
}

/// Run any heuristic. `Causal` needs the DAG; the others use the moral graph.
pub fn compute_ordering(
    heuristic: Heuristic,
    moral: &UGraph,
    dag: Option<&Dag>,
    tie: TieBreak,
) -> Result<Ordering, GraphError> {
    Ok(match heuristic {
        Heuristic::MinDegree => min_degree(moral, tie),
        Heuristic::MinWidth => min_width(moral, tie),
        Heuristic::MaxCardinality => max_cardinality(moral, tie),
        Heuristic::Causal => {
            let dag = dag.ok_or_else(|| GraphError::UnknownLabel("causal needs a DAG".into()))?;
            causal(dag, tie)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_width, is_perfect_elimination_ordering, triangulate};

    fn is_permutation(o: &Ordering, n: usize) -> bool {
        let mut v = o.nodes.clone();
        v.sort_unstable();
        v == (0..n).collect::<Vec<_>>()
    }

    #[test]
    fn star_leaves_go_last() {
        let g = UGraph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let o = min_degree(&g, TieBreak::Index);
        // the centre ties with the final leaf once the others are gone
        assert!(o.positions()[0] <= 1);
        assert_eq!(induced_width(&g, &o.nodes).unwrap(), 1);
    }

    #[test]
    fn tree_width_one_under_min_width() {
        let g = UGraph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let o = min_width(&g, TieBreak::Index);
        assert_eq!(induced_width(&g, &o.nodes).unwrap(), 1);
        assert!(triangulate(&g, &min_degree(&g, TieBreak::Index).nodes)
            .unwrap()
            .fill
            .is_empty());
    }

    #[test]
    fn five_cycle_min_width() {
        let g = UGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let o = min_width(&g, TieBreak::Index);
        assert_eq!(induced_width(&g, &o.nodes).unwrap(), 2);
    }

    #[test]
    fn mcs_on_chordal_graph_is_perfect() {
        let g = UGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let o = max_cardinality(&g, TieBreak::Index);
        assert!(is_perfect_elimination_ordering(&g, &o.nodes));
        assert_eq!(o.nodes[0], 0);
    }

    #[test]
    fn single_node() {
        let g = UGraph::new(1);
        for h in [
            Heuristic::MinDegree,
            Heuristic::MinWidth,
            Heuristic::MaxCardinality,
        ] {
            assert_eq!(
                compute_ordering(h, &g, None, TieBreak::Index)
                    .unwrap()
                    .nodes,
                vec![0]
            );
        }
    }

    #[test]
    fn chain_dag_causal_order() {
        let dag = Dag::from_edges(
            "chain",
            vec!["a".into(), "b".into(), "c".into()],
            [(0, 1), (1, 2)],
            None,
        )
        .unwrap();
        assert_eq!(causal(&dag, TieBreak::Index).nodes, vec![0, 1, 2]);
    }

    #[test]
    fn causal_is_topological_under_random_ties() {
        let dag = Dag::from_edges(
            "d",
            (0..6).map(|i| i.to_string()).collect(),
            [(0, 2), (1, 2), (2, 4), (3, 4), (1, 5)],
            None,
        )
        .unwrap();
        for seed in 0..20 {
            let o = causal(&dag, TieBreak::Random { seed });
            assert!(is_permutation(&o, 6));
            let pos = o.positions();
            assert!(dag.edges().all(|(p, c)| pos[p] < pos[c]));
        }
    }

    #[test]
    fn random_ties_are_reproducible() {
        let g = UGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let a = min_degree(&g, TieBreak::Random { seed: 7 });
        let b = min_degree(&g, TieBreak::Random { seed: 7 });
        assert_eq!(a, b);
        assert!(is_permutation(&a, 6));
    }

    #[test]
    fn heuristic_names_round_trip() {
        for h in Heuristic::ALL {
            assert_eq!(h.as_str().parse::<Heuristic>().unwrap(), h);
            assert_eq!(h.abbrev().parse::<Heuristic>().unwrap(), h);
        }
    }
}
