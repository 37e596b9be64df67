//! Benchmark fixtures.

use std::path::PathBuf;

use spa_core::analysis::Prepared;
use spa_core::synth::random_circuit;

/// The vendored c17 netlist.
pub fn c17() -> Prepared {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/iscas85/c17.isc");
    Prepared::load(&path).expect("vendored c17 parses")
}

/// A reproducible random circuit with `gates` gates.
pub fn synthetic(gates: usize) -> Prepared {
    let c = random_circuit(gates / 10 + 4, gates, 4, gates as u64);
    Prepared::from_circuit(&c).expect("synthetic circuits are valid")
}

/// c17 followed by synthetic circuits of increasing size.
pub fn corpus() -> Vec<Prepared> {
    let mut out = vec![c17()];
    out.extend([200, 800, 2000].map(synthetic));
    out
}
