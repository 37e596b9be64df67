//! Clique-trees (join-trees) over the maximal cliques of a triangulated graph.

use serde::{Deserialize, Serialize};

use crate::error::TreeError;
use crate::graph::UGraph;
use crate::ordering::{Heuristic, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generation {
    Primary,
    Secondary { bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub separator: Vec<usize>,
}

/// Clusters joined by tree edges. Each cluster is a sorted node list; a
/// disconnected graph yields a forest with one tree per component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub clusters: Vec<Vec<usize>>,
    pub edges: Vec<TreeEdge>,
    pub ordering: Option<Heuristic>,
    pub generation: Generation,
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
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

impl CliqueTree {
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn separator_width(&self) -> usize {
        separator_width(self)
    }

    pub fn max_cluster(&self) -> usize {
        self.clusters.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.clusters.iter().map(Vec::len).collect()
    }

    pub fn separator_sizes(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.separator.len()).collect()
    }

    /// Number of trees in the forest.
    pub fn components(&self) -> usize {
        self.clusters.len() - self.edges.len()
    }

    /// Check tree shape, separators and running intersection.
    pub fn validate(&self) -> Result<(), TreeError> {
        let k = self.clusters.len();
        let mut dsu: Vec<usize> = (0..k).collect();
        fn find(d: &mut [usize], mut x: usize) -> usize {
            while d[x] != x {
                d[x] = d[d[x]];
                x = d[x];
            }
            x
        }
        for e in &self.edges {
            if e.a >= k || e.b >= k || e.a == e.b {
                return Err(TreeError::Malformed(format!(
                    "edge {}-{} out of range",
                    e.a, e.b
                )));
            }
            let (ra, rb) = (find(&mut dsu, e.a), find(&mut dsu, e.b));
            if ra == rb {
                return Err(TreeError::Malformed(format!(
                    "edge {}-{} closes a cycle",
                    e.a, e.b
                )));
            }
            dsu[ra] = rb;
            if e.separator != intersect(&self.clusters[e.a], &self.clusters[e.b]) {
                return Err(TreeError::Malformed(format!(
                    "separator of edge {}-{} is not the cluster intersection",
                    e.a, e.b
                )));
            }
        }
        // In a forest, the clusters holding x are connected iff the edges
        // whose separator holds x number one fewer than those clusters.
        let n = self.clusters.iter().flatten().max().map_or(0, |&m| m + 1);
        let mut holders = vec![0usize; n];
        for c in &self.clusters {
            for &x in c {
                holders[x] += 1;
            }
        }
        let mut links = vec![0usize; n];
        for e in &self.edges {
            for &x in &e.separator {
                links[x] += 1;
            }
        }
        for x in 0..n {
            if holders[x] > 0 && links[x] + 1 != holders[x] {
                return Err(TreeError::RunningIntersection { variable: x });
            }
        }
        Ok(())
    }

    /// JSON dump: sorted clusters and edges with separators.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        let t: CliqueTree = serde_json::from_str(text).map_err(crate::error::ReportError::from)?;
        Ok(t)
    }
}

/// Maximal cliques of a graph triangulated along `d`. Candidate cliques are
/// `{v} + earlier(v)`; a candidate is dropped when a later neighbour's
/// candidate contains it. Cliques are listed so that each follows the clique
/// holding its parent.
pub fn maximal_cliques(induced: &UGraph, d: &Ordering) -> Result<Vec<Vec<usize>>, TreeError> {
    let n = induced.len();
    if d.nodes.len() != n {
        return Err(TreeError::Malformed(format!(
            "ordering covers {} of {} nodes",
            d.nodes.len(),
            n
        )));
    }
    let pos = d.positions();
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            induced
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] < pos[v])
                .collect()
        })
        .collect();

    // Parent = latest earlier neighbour. Under a perfect elimination ordering
    // the rest of earlier(v) lies inside earlier(parent).
    let mut parent = vec![None; n];
    for v in 0..n {
        let Some(&p) = earlier[v].iter().max_by_key(|&&w| pos[w]) else {
            continue;
        };
        if !earlier[v]
            .iter()
            .all(|&w| w == p || earlier[p].binary_search(&w).is_ok())
        {
            return Err(TreeError::NotChordal { node: v });
        }
        parent[v] = Some(p);
    }

    // C_v is contained in C_u exactly when u's parent is v and u has one
    // more earlier neighbour than v.
    let mut absorbed_into = vec![None; n];
    for u in 0..n {
        if let Some(p) = parent[u] {
            if earlier[u].len() == earlier[p].len() + 1 && absorbed_into[p].is_none() {
                absorbed_into[p] = Some(u);
            }
        }
    }

    // Each maximal clique is keyed by the earliest node whose candidate it
    // absorbs, which places every clique after the one holding its parent.
    let mut key: Vec<usize> = pos.clone();
    for &v in &d.nodes {
        let mut r = v;
        while let Some(u) = absorbed_into[r] {
            r = u;
        }
        key[r] = key[r].min(pos[v]);
    }
    let mut reps: Vec<usize> = (0..n).filter(|&v| absorbed_into[v].is_none()).collect();
    reps.sort_unstable_by_key(|&v| key[v]);

    Ok(reps
        .into_iter()
        .map(|v| {
            let mut c = earlier[v].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect())
}

/// Join each clique to the preceding clique of largest intersection,
/// preferring the earliest on ties. A clique sharing nothing with its
/// predecessors starts a new tree.
pub fn build_primary_tree(
    clusters: Vec<Vec<usize>>,
    d: &Ordering,
) -> Result<CliqueTree, TreeError> {
    let n = clusters.iter().flatten().max().map_or(0, |&m| m + 1);
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut shared = vec![0usize; clusters.len()];
    let mut edges = Vec::new();
    for (i, c) in clusters.iter().enumerate() {
        let mut touched = Vec::new();
        for &x in c {
            for &j in &containing[x] {
                if shared[j] == 0 {
                    touched.push(j);
                }
                shared[j] += 1;
            }
        }
        let best = touched
            .iter()
            .copied()
            .max_by(|&a, &b| shared[a].cmp(&shared[b]).then(b.cmp(&a)));
        if let Some(j) = best {
            edges.push(TreeEdge {
                a: j,
                b: i,
                separator: intersect(&clusters[j], c),
            });
        }
        for j in touched {
            shared[j] = 0;
        }
        for &x in c {
            containing[x].push(i);
        }
    }
    let tree = CliqueTree {
        clusters,
        edges,
        ordering: Some(d.heuristic),
        generation: Generation::Primary,
    };
    tree.validate()?;
    Ok(tree)
}

/// Largest separator, 0 for a tree without edges.
pub fn separator_width(t: &CliqueTree) -> usize {
    t.edges.iter().map(|e| e.separator.len()).max().unwrap_or(0)
}

/// True iff every variable's clusters form a connected subtree.
pub fn verify_running_intersection(t: &CliqueTree) -> bool {
    t.validate().is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::triangulate;
    use crate::ordering::{min_degree, TieBreak};

    fn ordering(nodes: Vec<usize>) -> Ordering {
        Ordering {
            heuristic: Heuristic::MinDegree,
            tie_break: TieBreak::Index,
            nodes,
        }
    }

    fn primary(g: &UGraph) -> CliqueTree {
        let d = min_degree(g, TieBreak::Index);
        let t = triangulate(g, &d.nodes).unwrap();
        build_primary_tree(maximal_cliques(&t.induced, &d).unwrap(), &d).unwrap()
    }

    #[test]
    fn triangle_is_one_cluster() {
        let g = UGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = primary(&g);
        assert_eq!(t.clusters, vec![vec![0, 1, 2]]);
        assert_eq!(separator_width(&t), 0);
    }

    #[test]
    fn path_gives_two_clusters() {
        let g = UGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = ordering(vec![0, 1, 2]);
        let cl = maximal_cliques(&g, &d).unwrap();
        assert_eq!(cl, vec![vec![0, 1], vec![1, 2]]);
        let t = build_primary_tree(cl, &d).unwrap();
        assert_eq!(t.edges.len(), 1);
        assert_eq!(t.edges[0].separator, vec![1]);
        assert_eq!(separator_width(&t), 1);
    }

    #[test]
    fn disjoint_triangles_make_a_forest() {
        let g = UGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let t = primary(&g);
        assert_eq!(t.len(), 2);
        assert!(t.edges.is_empty());
        assert_eq!(t.components(), 2);
    }

    #[test]
    fn non_chordal_input_is_reported() {
        let c4 = UGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let err = maximal_cliques(&c4, &ordering(vec![0, 1, 2, 3])).unwrap_err();
        assert_eq!(err, TreeError::NotChordal { node: 3 });
    }

    #[test]
    fn split_variable_breaks_running_intersection() {
        let t = CliqueTree {
            clusters: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            edges: vec![
                TreeEdge {
                    a: 0,
                    b: 1,
                    separator: vec![1],
                },
                TreeEdge {
                    a: 1,
                    b: 2,
                    separator: vec![2],
                },
            ],
            ordering: None,
            generation: Generation::Primary,
        };
        assert!(!verify_running_intersection(&t));
        let single = CliqueTree {
            clusters: vec![vec![0, 1, 2]],
            edges: vec![],
            ordering: None,
            generation: Generation::Primary,
        };
        assert!(verify_running_intersection(&single));
    }

    #[test]
    fn max_cluster_is_induced_width_plus_one() {
        let g = UGraph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 3),
                (1, 5),
            ],
        )
        .unwrap();
        let d = min_degree(&g, TieBreak::Index);
        let tri = triangulate(&g, &d.nodes).unwrap();
        let t = build_primary_tree(maximal_cliques(&tri.induced, &d).unwrap(), &d).unwrap();
        assert_eq!(t.max_cluster(), tri.width + 1);
        assert_eq!(t.edges.len(), t.len() - 1);
        for e in &t.edges {
            assert!(e.separator.len() < t.clusters[e.a].len());
            assert!(e.separator.len() < t.clusters[e.b].len());
        }
    }

    #[test]
    fn absorbed_candidates_keep_running_intersection() {
        use crate::analysis::Prepared;
        use crate::synth::random_circuit;
        for seed in 0..8 {
            let p = Prepared::from_circuit(&random_circuit(8, 60, 4, seed)).unwrap();
            for h in Heuristic::ALL {
                let run = p.run(h, TieBreak::Index).unwrap();
                assert!(verify_running_intersection(&run.tree), "seed {seed}, {h}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = UGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = primary(&g);
        let back = CliqueTree::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }
}
