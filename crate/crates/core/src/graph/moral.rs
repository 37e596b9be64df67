use super::UGraph;
use crate::netlist::Dag;

/// Moral graph: drop edge directions and marry every pair of co-parents.
pub fn moralize(dag: &Dag) -> UGraph {
    let mut g = UGraph::with_labels(dag.labels().to_vec());
    for child in 0..dag.len() {
        let ps = dag.parents(child);
        for (i, &p) in ps.iter().enumerate() {
            g.insert_edge(p, child);
            for &q in &ps[i + 1..] {
                g.insert_edge(p, q);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_structure_is_married() {
        let dag = Dag::from_edges(
            "v",
            vec!["a".into(), "b".into(), "c".into()],
            [(0, 2), (1, 2)],
            None,
        )
        .unwrap();
        let g = moralize(&dag);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn marriages_coalesce_with_existing_edges() {
        // a -> b, and both feed c: the a-b marriage duplicates a DAG edge.
        let dag = Dag::from_edges(
            "t",
            vec!["a".into(), "b".into(), "c".into()],
            [(0, 1), (0, 2), (1, 2)],
            None,
        )
        .unwrap();
        assert_eq!(moralize(&dag).edge_count(), 3);
    }
}
