use thiserror::Error;

/// Errors raised while reading a netlist or building its causal graph.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetlistError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {message}")]
    Read { path: String, message: String },

    #[error("netlist is empty")]
    Empty,

    #[error("signal `{signal}` is used but never defined")]
    UndefinedSignal { signal: String },

    #[error("signal `{signal}` is defined more than once")]
    DuplicateSignal { signal: String },

    #[error("declared {what} count is {declared} but the netlist has {found}")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },

    #[error("combinational loop through signal `{signal}`")]
    Cycle { signal: String },

    #[error("unsupported gate `{gate}` (sequential elements are not handled)")]
    Unsupported { gate: String },
}

/// Errors on undirected-graph construction and the exact oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),

    #[error("node {node} out of range for a graph with {len} nodes")]
    UnknownNode { node: usize, len: usize },

    #[error("graph has {nodes} nodes, exact search is limited to {limit}")]
    TooLarge { nodes: usize, limit: usize },

    #[error("ordering is not a permutation of the graph's {expected} nodes")]
    NotAPermutation { expected: usize },

    #[error("unknown node label `{0}`")]
    UnknownLabel(String),
}

/// Errors on join-tree construction and validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("earlier neighbours of node {node} do not form a clique; graph is not triangulated for this ordering")]
    NotChordal { node: usize },

    #[error("running intersection property violated for variable {variable}")]
    RunningIntersection { variable: usize },

    #[error("clique tree is malformed: {0}")]
    Malformed(String),
}

/// Errors when reading or writing report files.
#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Format(String),
}

/// Crate-wide error.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Netlist(#[from] NetlistError),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Tree(#[from] TreeError),

    #[error(transparent)]
    Report(#[from] ReportError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
