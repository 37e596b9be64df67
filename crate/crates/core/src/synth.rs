//! Seeded random graphs and circuits for tests and benchmarks.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::UGraph;
use crate::netlist::{Circuit, Gate, GateKind};

/// Erdos-Renyi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> UGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = UGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Uniformly random labelled tree (random attachment).
pub fn random_tree(n: usize, seed: u64) -> UGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = UGraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.insert_edge(u, v);
    }
    g
}

pub fn complete_graph(n: usize) -> UGraph {
    let mut g = UGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Random combinational circuit: each gate draws 1 to `max_fanin` distinct
/// fan-ins from earlier signals, biased toward recent ones so the result has
/// depth. Signals without fanout become outputs.
pub fn random_circuit(inputs: usize, gates: usize, max_fanin: usize, seed: u64) -> Circuit {
    assert!(inputs > 0 && max_fanin > 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kinds = [
        GateKind::And,
        GateKind::Nand,
        GateKind::Or,
        GateKind::Nor,
        GateKind::Xor,
    ];
    let mut signals: Vec<String> = (0..inputs).map(|i| format!("i{i}")).collect();
    let mut used = vec![false; inputs + gates];
    let mut gate_list = Vec::with_capacity(gates);
    for g in 0..gates {
        let avail = signals.len();
        let window = avail.min(4 * max_fanin + 8);
        let k = rng.gen_range(1..=max_fanin.min(window));
        let fanin: Vec<String> = sample(&mut rng, window, k)
            .into_iter()
            .map(|off| {
                let idx = avail - 1 - off;
                used[idx] = true;
                signals[idx].clone()
            })
            .collect();
        let kind = if k == 1 {
            GateKind::Not
        } else {
            kinds[rng.gen_range(0..kinds.len())]
        };
        let out = format!("g{g}");
        gate_list.push(Gate {
            output: out.clone(),
            kind,
            fanin,
        });
        signals.push(out);
    }
    let outputs = signals
        .iter()
        .enumerate()
        .filter(|&(i, _)| !used[i])
        .map(|(_, s)| s.clone())
        .collect();
    Circuit {
        name: format!("rand{seed}"),
        inputs: signals[..inputs].to_vec(),
        outputs,
        gates: gate_list,
        signals,
    }
}
