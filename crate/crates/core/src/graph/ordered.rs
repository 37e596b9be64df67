use fixedbitset::FixedBitSet;

use super::UGraph;
use crate::error::GraphError;

/// A graph paired with an ordering `d = X1..Xn`.
#[derive(Debug, Clone)]
pub struct OrderedGraph<'g> {
    graph: &'g UGraph,
    order: Vec<usize>,
    position: Vec<usize>,
}

/// Result of triangulating an ordered graph.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub induced: UGraph,
    /// Added edges as `(u, v)` with `u < v`, sorted.
    pub fill: Vec<(usize, usize)>,
    /// Width of the induced ordered graph.
    pub width: usize,
}

impl<'g> OrderedGraph<'g> {
    pub fn new(graph: &'g UGraph, order: Vec<usize>) -> Result<Self, GraphError> {
        let n = graph.len();
        let err = GraphError::NotAPermutation { expected: n };
        if order.len() != n {
            return Err(err);
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(err);
            }
            position[v] = i;
        }
        Ok(OrderedGraph {
            graph,
            order,
            position,
        })
    }

    pub fn graph(&self) -> &UGraph {
        self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of each node in the ordering.
    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Max number of earlier neighbours over all nodes.
    pub fn width(&self) -> usize {
        (0..self.graph.len())
            .map(|v| {
                self.graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| self.position[w] < self.position[v])
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    /// Process nodes last to first, connecting the earlier neighbours of each.
    pub fn triangulate(&self) -> Triangulation {
        let n = self.graph.len();
        let mut adj: Vec<FixedBitSet> = (0..n)
            .map(|v| {
                let mut b = FixedBitSet::with_capacity(n);
                b.extend(self.graph.neighbors(v).iter().copied());
                b
            })
            .collect();
        let mut remaining = FixedBitSet::with_capacity(n);
        remaining.insert_range(..);
        let mut fill = Vec::new();
        let mut width = 0;
        let mut earlier = FixedBitSet::with_capacity(n);

        for &v in self.order.iter().rev() {
            remaining.set(v, false);
            earlier.clone_from(&adj[v]);
            earlier.intersect_with(&remaining);
            width = width.max(earlier.count_ones(..));
            for u in earlier.ones() {
                for w in earlier.difference(&adj[u]) {
                    if w > u {
                        fill.push((u, w));
                    }
                }
                adj[u].union_with(&earlier);
                adj[u].set(u, false);
            }
        }

        let mut induced = self.graph.clone();
        for &(u, w) in &fill {
            induced.insert_edge(u, w);
        }
        fill.sort_unstable();
        Triangulation {
            induced,
            fill,
            width,
        }
    }

    pub fn induced_width(&self) -> usize {
        self.triangulate().width
    }
}

pub fn width_of_ordering(g: &UGraph, order: &[usize]) -> Result<usize, GraphError> {
    Ok(OrderedGraph::new(g, order.to_vec())?.width())
}

pub fn triangulate(g: &UGraph, order: &[usize]) -> Result<Triangulation, GraphError> {
    Ok(OrderedGraph::new(g, order.to_vec())?.triangulate())
}

pub fn induced_width(g: &UGraph, order: &[usize]) -> Result<usize, GraphError> {
    Ok(OrderedGraph::new(g, order.to_vec())?.induced_width())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_chordal;

    fn cycle(n: usize) -> UGraph {
        UGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> UGraph {
        UGraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn path_width_is_one() {
        let g = UGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(width_of_ordering(&g, &[0, 1, 2]).unwrap(), 1);
    }

    #[test]
    fn complete_graph_width() {
        let g = complete(4);
        assert_eq!(width_of_ordering(&g, &[2, 0, 3, 1]).unwrap(), 3);
        assert_eq!(induced_width(&complete(5), &[4, 3, 2, 1, 0]).unwrap(), 4);
    }

    #[test]
    fn five_cycle_width_by_id() {
        assert_eq!(width_of_ordering(&cycle(5), &[0, 1, 2, 3, 4]).unwrap(), 2);
    }

    #[test]
    fn four_cycle_gets_one_chord() {
        // a-b-c-d-a with d last: d's earlier neighbours a and c get joined.
        let t = triangulate(&cycle(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(t.fill, vec![(0, 2)]);
        assert!(is_chordal(&t.induced));
        assert_eq!(t.width, 2);
    }

    #[test]
    fn chordal_input_with_peo_needs_no_fill() {
        // two triangles sharing edge 1-2
        let g = UGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(triangulate(&g, &[0, 1, 2, 3]).unwrap().fill.is_empty());
    }

    #[test]
    fn rejects_non_permutations() {
        let g = cycle(3);
        assert!(OrderedGraph::new(&g, vec![0, 1]).is_err());
        assert!(OrderedGraph::new(&g, vec![0, 1, 1]).is_err());
        assert!(OrderedGraph::new(&g, vec![0, 1, 5]).is_err());
    }
}
