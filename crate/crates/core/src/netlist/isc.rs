//! Reader for the column-oriented `.isc` netlist format.
//!
//! Each line is `address name type ...`. Primary inputs are `inpt`, fanout
//! branches are `from <stem>`, and gates carry a fanout count and a fan-in
//! count followed by the fan-in addresses on the next line(s). Fault
//! annotations (`>sa0`, `>sa1`) are ignored. A line with fanout 0 drives a
//! primary output.

use std::collections::HashMap;

use super::{name_from_comment, Circuit, Gate, GateKind};
use crate::error::NetlistError;

#[derive(Debug, Default)]
struct Declared {
    inputs: Option<usize>,
    outputs: Option<usize>,
    interior: Option<usize>,
    branches: Option<usize>,
}

enum Entry {
    Input,
    Branch { stem: String },
    Gate { kind: GateKind, fanin: Vec<String> },
}

struct Line {
    address: String,
    name: String,
    entry: Entry,
    fanout: Option<usize>,
}

fn last_number(s: &str) -> Option<usize> {
    s.split(|c: char| !c.is_ascii_digit())
        .rfind(|t| !t.is_empty())?
        .parse()
        .ok()
}

fn parse_header(body: &str, declared: &mut Declared) {
    let lower = body.to_ascii_lowercase();
    if lower.contains("lines from primary input") {
        declared.inputs = last_number(&lower);
    } else if lower.contains("lines from primary output") {
        declared.outputs = last_number(&lower);
    } else if lower.contains("lines from interior gate") {
        declared.interior = last_number(&lower);
    } else if lower.contains("fanout stems") {
        declared.branches = last_number(&lower);
    }
}

fn count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, NetlistError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| NetlistError::Parse {
            line,
            message: format!("expected {what}"),
        })
}

pub(super) fn parse(text: &str) -> Result<Circuit, NetlistError> {
    let mut declared = Declared::default();
    let mut name = None;
    let mut lines: Vec<Line> = Vec::new();

    let mut rows = text.lines().enumerate().map(|(i, l)| (i + 1, l)).peekable();
    while let Some((lineno, raw)) = rows.next() {
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(body) = trimmed.strip_prefix('*') {
            if name.is_none() {
                name = name_from_comment(body);
            }
            parse_header(body, &mut declared);
            continue;
        }

        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(NetlistError::Parse {
                line: lineno,
                message: format!("expected `address name type`, got `{trimmed}`"),
            });
        }
        let address = toks[0];
        if address.parse::<u64>().is_err() {
            return Err(NetlistError::Parse {
                line: lineno,
                message: format!("bad line address `{address}`"),
            });
        }
        let kind = toks[2].to_ascii_lowercase();
        let (entry, fanout) = match kind.as_str() {
            "inpt" => {
                let fanout = count(toks.get(3).copied(), lineno, "fanout count")?;
                (Entry::Input, Some(fanout))
            }
            "from" => {
                let stem = toks.get(3).ok_or_else(|| NetlistError::Parse {
                    line: lineno,
                    message: "fanout branch without a stem".into(),
                })?;
                (
                    Entry::Branch {
                        stem: stem.to_string(),
                    },
                    None,
                )
            }
            _ => {
                let gate_kind: GateKind = kind.parse().map_err(|_| NetlistError::Parse {
                    line: lineno,
                    message: format!("unknown line type `{}`", toks[2]),
                })?;
                let fanout = count(toks.get(3).copied(), lineno, "fanout count")?;
                let nfanin = count(toks.get(4).copied(), lineno, "fan-in count")?;
                let mut fanin = Vec::with_capacity(nfanin);
                while fanin.len() < nfanin {
                    let Some((l, next)) = rows.next() else {
                        return Err(NetlistError::Parse {
                            line: lineno,
                            message: format!(
                                "gate {address} expects {nfanin} fan-in addresses, found {}",
                                fanin.len()
                            ),
                        });
                    };
                    for tok in next.split_whitespace() {
                        if tok.parse::<u64>().is_err() {
                            return Err(NetlistError::Parse {
                                line: l,
                                message: format!("bad fan-in address `{tok}`"),
                            });
                        }
                        fanin.push(tok.to_string());
                    }
                }
                if fanin.len() != nfanin {
                    return Err(NetlistError::Parse {
                        line: lineno,
                        message: format!(
                            "gate {address} declares {nfanin} fan-ins but lists {}",
                            fanin.len()
                        ),
                    });
                }
                (
                    Entry::Gate {
                        kind: gate_kind,
                        fanin,
                    },
                    Some(fanout),
                )
            }
        };
        lines.push(Line {
            address: address.to_string(),
            name: toks[1].to_string(),
            entry,
            fanout,
        });
    }

    if lines.is_empty() {
        return Err(NetlistError::Empty);
    }

    // Branches name their stem by line name; gates name their fan-ins by
    // address. Both resolve to the stem's address, which is the signal id.
    let by_name: HashMap<&str, &str> = lines
        .iter()
        .filter(|l| !matches!(l.entry, Entry::Branch { .. }))
        .map(|l| (l.name.as_str(), l.address.as_str()))
        .collect();
    let mut branch_stem: HashMap<&str, &str> = HashMap::new();
    for l in &lines {
        if let Entry::Branch { stem } = &l.entry {
            let stem_addr =
                by_name
                    .get(stem.as_str())
                    .ok_or_else(|| NetlistError::UndefinedSignal {
                        signal: stem.clone(),
                    })?;
            branch_stem.insert(l.address.as_str(), stem_addr);
        }
    }

    let mut circuit = Circuit {
        name: name.unwrap_or_else(|| "circuit".to_string()),
        inputs: Vec::new(),
        outputs: Vec::new(),
        gates: Vec::new(),
        signals: Vec::new(),
    };
    let mut nbranches = 0;
    for l in &lines {
        match &l.entry {
            Entry::Branch { .. } => nbranches += 1,
            Entry::Input => {
                circuit.inputs.push(l.address.clone());
                circuit.signals.push(l.address.clone());
            }
            Entry::Gate { kind, fanin } => {
                let fanin = fanin
                    .iter()
                    .map(|a| {
                        branch_stem
                            .get(a.as_str())
                            .copied()
                            .unwrap_or(a.as_str())
                            .to_string()
                    })
                    .collect();
                circuit.gates.push(Gate {
                    output: l.address.clone(),
                    kind: *kind,
                    fanin,
                });
                circuit.signals.push(l.address.clone());
            }
        }
        if l.fanout == Some(0) {
            circuit.outputs.push(l.address.clone());
        }
    }

    circuit.validate()?;

    let check = |what, declared: Option<usize>, found| match declared {
        Some(d) if d != found => Err(NetlistError::CountMismatch {
            what,
            declared: d,
            found,
        }),
        _ => Ok(()),
    };
    check("primary input", declared.inputs, circuit.inputs.len())?;
    check("primary output", declared.outputs, circuit.outputs.len())?;
    check("fanout branch", declared.branches, nbranches)?;
    if let (Some(o), Some(i)) = (declared.outputs, declared.interior) {
        check("gate", Some(o + i), circuit.gates.len())?;
    }
    Ok(circuit)
}
