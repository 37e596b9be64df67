//! End-to-end pipeline: netlist to DAG to moral graph, then per ordering a
//! triangulation and primary clique-tree.

use std::path::Path;

use crate::error::{Result, TreeError};
use crate::graph::{is_chordal, moralize, triangulate, Triangulation, UGraph};
use crate::jointree::{build_primary_tree, maximal_cliques, CliqueTree};
use crate::netlist::{build_dag, load_netlist, Circuit, Dag};
use crate::ordering::{compute_ordering, Heuristic, Ordering, TieBreak};

/// A circuit's causal DAG and moral graph.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub name: String,
    pub dag: Dag,
    pub moral: UGraph,
}

impl Prepared {
    pub fn from_circuit(circuit: &Circuit) -> Result<Self> {
        let dag = build_dag(circuit)?;
        let moral = moralize(&dag);
        Ok(Prepared {
            name: circuit.name.clone(),
            dag,
            moral,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_circuit(&load_netlist(path)?)
    }

    pub fn run(&self, heuristic: Heuristic, tie: TieBreak) -> Result<OrderedRun> {
        run_ordering(&self.moral, Some(&self.dag), heuristic, tie)
    }
}

/// Everything derived from one ordering.
#[derive(Debug, Clone)]
pub struct OrderedRun {
    pub ordering: Ordering,
    pub triangulation: Triangulation,
    pub tree: CliqueTree,
}

impl OrderedRun {
    pub fn induced_width(&self) -> usize {
        self.triangulation.width
    }

    pub fn max_clique(&self) -> usize {
        self.tree.max_cluster()
    }

    pub fn max_sepset(&self) -> usize {
        self.tree.separator_width()
    }
}

/// Order, triangulate, and build the primary clique-tree.
pub fn run_ordering(
    moral: &UGraph,
    dag: Option<&Dag>,
    heuristic: Heuristic,
    tie: TieBreak,
) -> Result<OrderedRun> {
    let ordering = compute_ordering(heuristic, moral, dag, tie)?;
    let triangulation = triangulate(moral, &ordering.nodes)?;
    let clusters = maximal_cliques(&triangulation.induced, &ordering)?;
    let tree = build_primary_tree(clusters, &ordering)?;
    Ok(OrderedRun {
        ordering,
        triangulation,
        tree,
    })
}

/// Invariants checked on every run: chordal triangulation, running
/// intersection, and max cluster equal to induced width plus one.
pub fn check_run(run: &OrderedRun) -> std::result::Result<(), String> {
    if !is_chordal(&run.triangulation.induced) {
        return Err("triangulated graph is not chordal".into());
    }
    run.tree.validate().map_err(|e: TreeError| e.to_string())?;
    if !run.tree.is_empty() && run.max_clique() != run.induced_width() + 1 {
        return Err(format!(
            "max cluster {} differs from induced width {} + 1",
            run.max_clique(),
            run.induced_width()
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::{parse_netlist, NetlistFormat};

    fn c17() -> Prepared {
        let text = include_str!("../../../data/iscas85/c17.isc");
        Prepared::from_circuit(&parse_netlist(text, NetlistFormat::Isc).unwrap()).unwrap()
    }

    #[test]
    fn c17_graph_sizes() {
        let p = c17();
        assert_eq!(p.dag.len(), 11);
        assert_eq!(p.moral.edge_count(), 18);
    }

    #[test]
    fn every_heuristic_passes_checks() {
        let p = c17();
        for h in Heuristic::ALL {
            let run = p.run(h, TieBreak::Index).unwrap();
            check_run(&run).unwrap();
        }
    }
}
