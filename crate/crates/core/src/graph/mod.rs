//! Undirected graphs: moralisation, ordered-graph widths, triangulation,
//! chordality, cycle-cutsets, and exact oracles for small instances.

mod chordal;
mod cutset;
mod exact;
mod moral;
mod ordered;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub use chordal::{is_chordal, is_perfect_elimination_ordering, mcs_order};
pub use cutset::{cutset_heuristic, is_forest_without};
pub use exact::{cutset_exact, treewidth_exact, CUTSET_EXACT_LIMIT, TREEWIDTH_EXACT_LIMIT};
pub use moral::moralize;
pub use ordered::{induced_width, triangulate, width_of_ordering, OrderedGraph, Triangulation};

/// Simple undirected graph over nodes `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    edges: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphDump {
    nodes: Vec<String>,
    edges: Vec<[usize; 2]>,
}

impl UGraph {
    /// Edgeless graph with nodes labelled by their index.
    pub fn new(n: usize) -> Self {
        Self::with_labels((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        UGraph {
            labels,
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Build from an edge list, rejecting self-loops and repeated edges.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbours of `v` in increasing id order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.len() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_node(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.len() {
            return Err(GraphError::UnknownNode {
                node: v,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// Add an edge, rejecting self-loops and parallel edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.insert_edge(u, v) {
            return Err(GraphError::ParallelEdge(u.min(v), u.max(v)));
        }
        Ok(())
    }

    /// Insert an edge if absent. Returns whether it was new.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert_ne!(u, v);
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.edges += 1;
                true
            }
        }
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `nodes` (which must be sorted and distinct). Node
    /// `i` of the result corresponds to `nodes[i]`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> UGraph {
        let mut local = std::collections::HashMap::with_capacity(nodes.len());
        for (i, &v) in nodes.iter().enumerate() {
            local.insert(v, i);
        }
        let mut sub = UGraph::with_labels(nodes.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &v) in nodes.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = local.get(w) {
                    if j > i {
                        sub.insert_edge(i, j);
                    }
                }
            }
        }
        sub
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        is_forest_without(self, &[])
    }

    /// Sorted JSON edge list: `{"nodes":[labels],"edges":[[u,v],...]}`.
    pub fn to_json(&self) -> String {
        let dump = GraphDump {
            nodes: self.labels.clone(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&dump).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        let dump: GraphDump =
            serde_json::from_str(text).map_err(crate::error::ReportError::from)?;
        let mut g = UGraph::with_labels(dump.nodes);
        for [u, v] in dump.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}
