//! Structural parameters of clustering, conditioning and hybrid inference on
//! graphs derived from combinational circuits: induced width, separator
//! width, cycle-cutsets and the secondary join-tree space/time tradeoff.

pub mod analysis;
pub mod error;
pub mod graph;
pub mod jointree;
pub mod netlist;
pub mod ordering;
pub mod report;
pub mod synth;
pub mod tradeoff;

pub use analysis::{OrderedRun, Prepared};
pub use error::{Error, GraphError, NetlistError, ReportError, Result, TreeError};
pub use graph::{moralize, UGraph};
pub use jointree::CliqueTree;
pub use netlist::{build_dag, parse_netlist, Circuit, Dag, NetlistFormat};
pub use ordering::{Heuristic, Ordering, TieBreak};
pub use tradeoff::{DecompositionPoint, TradeoffSeries};
