//! Combinational netlists and their causal graphs.
//!
//! Two source formats are read: the original column-oriented `.isc` format,
//! where fanout branches appear as separate `from` lines, and the later
//! `.bench` format. Fanout branches are folded into their stem so that every
//! logical signal becomes exactly one variable.

mod bench;
mod dag;
mod isc;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::NetlistError;

pub use bench::write_bench;
pub use dag::{build_dag, Dag};

/// Source format of a netlist file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NetlistFormat {
    Isc,
    Bench,
}

impl NetlistFormat {
    /// Guess the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "isc" => Some(Self::Isc),
            "bench" => Some(Self::Bench),
            _ => None,
        }
    }
}

/// Boolean function of a gate. Carried through ingestion but not used by the
/// structural analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateKind {
    And,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Not,
    Buf,
}

impl GateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GateKind::And => "AND",
            GateKind::Nand => "NAND",
            GateKind::Or => "OR",
            GateKind::Nor => "NOR",
            GateKind::Xor => "XOR",
            GateKind::Xnor => "XNOR",
            GateKind::Not => "NOT",
            GateKind::Buf => "BUFF",
        }
    }
}

impl FromStr for GateKind {
    type Err = NetlistError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "AND" => GateKind::And,
            "NAND" => GateKind::Nand,
            "OR" => GateKind::Or,
            "NOR" => GateKind::Nor,
            "XOR" => GateKind::Xor,
            "XNOR" => GateKind::Xnor,
            "NOT" | "INV" => GateKind::Not,
            "BUF" | "BUFF" => GateKind::Buf,
            _ => {
                return Err(NetlistError::Unsupported {
                    gate: s.to_string(),
                })
            }
        })
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub output: String,
    pub kind: GateKind,
    pub fanin: Vec<String>,
}

/// A parsed combinational circuit. Signal ids are unique; fanout branches are
/// already collapsed into their stems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub name: String,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub gates: Vec<Gate>,
    /// Every defined signal (primary inputs and gate outputs) in file order.
    /// Node ids of the causal graph follow this order.
    pub signals: Vec<String>,
}

impl Circuit {
    /// Check the structural invariants shared by both parsers: unique
    /// definitions and no dangling references.
    pub(crate) fn validate(&self) -> Result<(), NetlistError> {
        use std::collections::HashSet;

        if self.signals.is_empty() {
            return Err(NetlistError::Empty);
        }
        let mut defined = HashSet::with_capacity(self.signals.len());
        for s in &self.signals {
            if !defined.insert(s.as_str()) {
                return Err(NetlistError::DuplicateSignal { signal: s.clone() });
            }
        }
        for gate in &self.gates {
            for f in &gate.fanin {
                if !defined.contains(f.as_str()) {
                    return Err(NetlistError::UndefinedSignal { signal: f.clone() });
                }
            }
        }
        for o in &self.outputs {
            if !defined.contains(o.as_str()) {
                return Err(NetlistError::UndefinedSignal { signal: o.clone() });
            }
        }
        Ok(())
    }
}

/// Parse netlist source text. The circuit name is taken from the leading
/// comment when there is one.
pub fn parse_netlist(text: &str, format: NetlistFormat) -> Result<Circuit, NetlistError> {
    match format {
        NetlistFormat::Isc => isc::parse(text),
        NetlistFormat::Bench => bench::parse(text),
    }
}

/// Read a netlist file, inferring its format from the extension and naming the
/// circuit after the file stem.
pub fn load_netlist(path: &Path) -> crate::Result<Circuit> {
    let format = NetlistFormat::from_path(path).ok_or_else(|| NetlistError::Read {
        path: path.display().to_string(),
        message: "unrecognised netlist extension".into(),
    })?;
    let text = std::fs::read_to_string(path).map_err(|e| NetlistError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let mut circuit = parse_netlist(&text, format)?;
    if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
        circuit.name = stem.to_string();
    }
    Ok(circuit)
}

/// Pull the first word out of a header comment, e.g. `*c17 iscas example`.
fn name_from_comment(body: &str) -> Option<String> {
    let word = body.split_whitespace().next()?;
    let word: String = word
        .chars()
        .take_while(|c| c.is_ascii_alphanumeric() || *c == '_' || *c == '-')
        .collect();
    (!word.is_empty()).then_some(word)
}
