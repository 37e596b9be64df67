//! Causal DAG: one node per primary input and per gate output, with an edge
//! from every fan-in signal to the gate it feeds.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Circuit;
use crate::error::NetlistError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    pub name: String,
    labels: Vec<String>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    outputs: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct DagDump {
    name: String,
    nodes: Vec<String>,
    edges: Vec<[String; 2]>,
}

impl Dag {
    /// Build from labelled nodes and `(parent, child)` index pairs. Duplicate
    /// edges are coalesced; parent lists keep first-seen order.
    pub fn from_edges(
        name: impl Into<String>,
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        outputs: Option<Vec<usize>>,
    ) -> Result<Self, NetlistError> {
        let n = labels.len();
        if n == 0 {
            return Err(NetlistError::Empty);
        }
        let mut parents = vec![Vec::new(); n];
        let mut children = vec![Vec::new(); n];
        for (p, c) in edges {
            if p >= n || c >= n {
                return Err(NetlistError::UndefinedSignal {
                    signal: format!("#{}", p.max(c)),
                });
            }
            if p == c {
                return Err(NetlistError::Cycle {
                    signal: labels[p].clone(),
                });
            }
            if !parents[c].contains(&p) {
                parents[c].push(p);
                children[p].push(c);
            }
        }
        let outputs =
            outputs.unwrap_or_else(|| (0..n).filter(|&v| children[v].is_empty()).collect());
        let dag = Dag {
            name: name.into(),
            labels,
            parents,
            children,
            outputs,
        };
        dag.topological_order()?;
        Ok(dag)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Fan-in of `v` in declaration order.
    pub fn parents(&self, v: usize) -> &[usize] {
        &self.parents[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Primary outputs in declaration order.
    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn edge_count(&self) -> usize {
        self.parents.iter().map(Vec::len).sum()
    }

    /// All `(parent, child)` pairs, grouped by child.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parents
            .iter()
            .enumerate()
            .flat_map(|(c, ps)| ps.iter().map(move |&p| (p, c)))
    }

    /// Kahn's algorithm, smallest ready id first.
    pub fn topological_order(&self) -> Result<Vec<usize>, NetlistError> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.parents.iter().map(Vec::len).collect();
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| indeg[v] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut order = Vec::with_capacity(n);
        while let Some(std::cmp::Reverse(v)) = ready.pop() {
            order.push(v);
            for &c in &self.children[v] {
                indeg[c] -= 1;
                if indeg[c] == 0 {
                    ready.push(std::cmp::Reverse(c));
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            return Err(NetlistError::Cycle {
                signal: self.labels[stuck].clone(),
            });
        }
        Ok(order)
    }

    /// Canonical JSON dump with nodes and edges sorted by label.
    pub fn to_json(&self) -> String {
        let mut nodes = self.labels.clone();
        nodes.sort();
        let mut edges: Vec<[String; 2]> = self
            .edges()
            .map(|(p, c)| [self.labels[p].clone(), self.labels[c].clone()])
            .collect();
        edges.sort();
        let dump = DagDump {
            name: self.name.clone(),
            nodes,
            edges,
        };
        serde_json::to_string(&dump).expect("string-only structure serialises")
    }

    /// Inverse of [`Dag::to_json`]. Node ids follow the order of the `nodes`
    /// array and outputs are taken to be the sinks.
    pub fn from_json(text: &str) -> Result<Self, NetlistError> {
        let dump: DagDump = serde_json::from_str(text).map_err(|e| NetlistError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let index: HashMap<&str, usize> = dump
            .nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != dump.nodes.len() {
            let mut seen = std::collections::HashSet::new();
            let dup = dump
                .nodes
                .iter()
                .find(|s| !seen.insert(s.as_str()))
                .cloned();
            return Err(NetlistError::DuplicateSignal {
                signal: dup.unwrap_or_default(),
            });
        }
        let mut edges = Vec::with_capacity(dump.edges.len());
        for [p, c] in &dump.edges {
            let lookup = |s: &String| {
                index
                    .get(s.as_str())
                    .copied()
                    .ok_or_else(|| NetlistError::UndefinedSignal { signal: s.clone() })
            };
            edges.push((lookup(p)?, lookup(c)?));
        }
        Dag::from_edges(dump.name, dump.nodes, edges, None)
    }
}

/// Build the causal DAG of a circuit. Node ids follow the order in which
/// signals are defined in the source file.
pub fn build_dag(circuit: &Circuit) -> Result<Dag, NetlistError> {
    circuit.validate()?;
    let index: HashMap<&str, usize> = circuit
        .signals
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let index = &index;
    let edges: Vec<(usize, usize)> = circuit
        .gates
        .iter()
        .flat_map(|g| {
            let c = index[g.output.as_str()];
            g.fanin.iter().map(move |f| (index[f.as_str()], c))
        })
        .collect();
    let outputs = circuit.outputs.iter().map(|o| index[o.as_str()]).collect();
    Dag::from_edges(
        circuit.name.clone(),
        circuit.signals.clone(),
        edges,
        Some(outputs),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::{parse_netlist, NetlistFormat};

    fn c17() -> Dag {
        let text = include_str!("../../../../data/iscas85/c17.isc");
        build_dag(&parse_netlist(text, NetlistFormat::Isc).unwrap()).unwrap()
    }

    #[test]
    fn c17_has_eleven_nodes() {
        let dag = c17();
        assert_eq!(dag.len(), 11);
        assert_eq!(dag.edge_count(), 12);
        assert_eq!(dag.outputs().len(), 2);
    }

    #[test]
    fn single_gate() {
        let c =
            parse_netlist("INPUT(a)\nINPUT(b)\ny = NAND(a, b)\n", NetlistFormat::Bench).unwrap();
        let dag = build_dag(&c).unwrap();
        assert_eq!(dag.labels(), &["a", "b", "y"]);
        assert_eq!(dag.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn loops_are_rejected() {
        let c = parse_netlist(
            "INPUT(a)\nx = AND(a, y)\ny = NOT(x)\n",
            NetlistFormat::Bench,
        )
        .unwrap();
        assert!(matches!(build_dag(&c), Err(NetlistError::Cycle { .. })));
    }

    #[test]
    fn json_round_trip() {
        let dag = c17();
        let text = dag.to_json();
        let back = Dag::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.len(), dag.len());
        assert_eq!(back.edge_count(), dag.edge_count());
    }

    #[test]
    fn both_formats_agree() {
        let bench = include_str!("../../../../data/iscas85/c17.bench");
        let b = build_dag(&parse_netlist(bench, NetlistFormat::Bench).unwrap()).unwrap();
        assert_eq!(b.to_json(), c17().to_json());
    }

    #[test]
    fn topological_order_respects_edges() {
        let dag = c17();
        let order = dag.topological_order().unwrap();
        let mut pos = vec![0; dag.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        assert!(dag.edges().all(|(p, c)| pos[p] < pos[c]));
    }
}
