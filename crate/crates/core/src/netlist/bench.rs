//! Reader and writer for the `.bench` netlist format:
//!
//! ```text
//! # c17
//! INPUT(1)
//! OUTPUT(22)
//! 10 = NAND(1, 3)
//! ```

use std::fmt::Write as _;

use super::{name_from_comment, Circuit, Gate, GateKind};
use crate::error::NetlistError;

#[derive(Debug, Default)]
struct Declared {
    inputs: Option<usize>,
    outputs: Option<usize>,
    gates: Option<usize>,
    inverters: Option<usize>,
    buffers: Option<usize>,
}

fn parse_header(body: &str, declared: &mut Declared) {
    let mut words = body.split_whitespace();
    let (Some(n), Some(what)) = (words.next(), words.next()) else {
        return;
    };
    let Ok(n) = n.parse::<usize>() else {
        return;
    };
    let what = what.to_ascii_lowercase();
    let slot = match what.trim_end_matches('s') {
        "input" => &mut declared.inputs,
        "output" => &mut declared.outputs,
        "gate" => &mut declared.gates,
        "inverter" => &mut declared.inverters,
        "buffer" => &mut declared.buffers,
        _ => return,
    };
    *slot = Some(n);
}

fn parse_call(s: &str, line: usize) -> Result<(&str, Vec<&str>), NetlistError> {
    let err = |m: &str| NetlistError::Parse {
        line,
        message: format!("{m}: `{s}`"),
    };
    let open = s.find('(').ok_or_else(|| err("expected `(`"))?;
    let close = s.rfind(')').ok_or_else(|| err("expected `)`"))?;
    if close < open || !s[close + 1..].trim().is_empty() {
        return Err(err("malformed call"));
    }
    let head = s[..open].trim();
    let args: Vec<&str> = s[open + 1..close].split(',').map(str::trim).collect();
    if head.is_empty() || args.iter().any(|a| a.is_empty()) {
        return Err(err("empty name or argument"));
    }
    Ok((head, args))
}

pub(super) fn parse(text: &str) -> Result<Circuit, NetlistError> {
    let mut declared = Declared::default();
    let mut name = None;
    let mut circuit = Circuit {
        name: String::new(),
        inputs: Vec::new(),
        outputs: Vec::new(),
        gates: Vec::new(),
        signals: Vec::new(),
    };

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let (code, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(body) = comment {
            if name.is_none() && code.trim().is_empty() {
                name = name_from_comment(body).filter(|w| w.parse::<usize>().is_err());
            }
            parse_header(body, &mut declared);
        }
        let code = code.trim();
        if code.is_empty() {
            continue;
        }

        if let Some((lhs, rhs)) = code.split_once('=') {
            let output = lhs.trim();
            if output.is_empty() || output.contains(char::is_whitespace) {
                return Err(NetlistError::Parse {
                    line: lineno,
                    message: format!("bad gate output `{output}`"),
                });
            }
            let (func, args) = parse_call(rhs.trim(), lineno)?;
            let kind: GateKind = func.parse()?;
            circuit.gates.push(Gate {
                output: output.to_string(),
                kind,
                fanin: args.into_iter().map(str::to_string).collect(),
            });
            circuit.signals.push(output.to_string());
        } else {
            let (decl, args) = parse_call(code, lineno)?;
            let [arg] = args.as_slice() else {
                return Err(NetlistError::Parse {
                    line: lineno,
                    message: format!("{decl} takes exactly one signal"),
                });
            };
            match decl.to_ascii_uppercase().as_str() {
                "INPUT" => {
                    circuit.inputs.push(arg.to_string());
                    circuit.signals.push(arg.to_string());
                }
                "OUTPUT" => circuit.outputs.push(arg.to_string()),
                other => {
                    return Err(NetlistError::Parse {
                        line: lineno,
                        message: format!("unknown declaration `{other}`"),
                    })
                }
            }
        }
    }

    if circuit.signals.is_empty() {
        return Err(NetlistError::Empty);
    }
    circuit.name = name.unwrap_or_else(|| "circuit".to_string());
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
    if let Some(gates) = declared.gates {
        // Header conventions differ on whether inverters and buffers are
        // included in the gate line; accept either reading.
        let with_unary = gates + declared.inverters.unwrap_or(0) + declared.buffers.unwrap_or(0);
        let found = circuit.gates.len();
        if found != gates && found != with_unary {
            return Err(NetlistError::CountMismatch {
                what: "gate",
                declared: with_unary,
                found,
            });
        }
    }
    Ok(circuit)
}

/// Serialise a circuit in `.bench` syntax. Gates are written in topological
/// order when possible, falling back to file order.
pub fn write_bench(circuit: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", circuit.name);
    let _ = writeln!(out, "# {} inputs", circuit.inputs.len());
    let _ = writeln!(out, "# {} outputs", circuit.outputs.len());
    let _ = writeln!(out, "# {} gates", circuit.gates.len());
    out.push('\n');
    for i in &circuit.inputs {
        let _ = writeln!(out, "INPUT({i})");
    }
    out.push('\n');
    for o in &circuit.outputs {
        let _ = writeln!(out, "OUTPUT({o})");
    }
    out.push('\n');
    for g in &circuit.gates {
        let _ = writeln!(out, "{} = {}({})", g.output, g.kind, g.fanin.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C17: &str = include_str!("../../../../data/iscas85/c17.bench");

    #[test]
    fn c17_counts() {
        let c = parse(C17).unwrap();
        assert_eq!(c.name, "c17");
        assert_eq!(c.gates.len(), 6);
        assert_eq!(c.inputs.len(), 5);
        assert_eq!(c.outputs.len(), 2);
        assert!(c.gates.iter().all(|g| g.kind == GateKind::Nand));
    }

    #[test]
    fn single_gate() {
        let c = parse("INPUT(a)\nINPUT(b)\nOUTPUT(y)\ny = NAND(a,b)\n").unwrap();
        assert_eq!(c.signals, vec!["a", "b", "y"]);
        assert_eq!(c.gates[0].fanin, vec!["a", "b"]);
    }

    #[test]
    fn dangling_reference() {
        let err = parse("INPUT(a)\ny = AND(a, q)\n").unwrap_err();
        assert_eq!(err, NetlistError::UndefinedSignal { signal: "q".into() });
    }

    #[test]
    fn malformed_line_has_line_number() {
        let err = parse("INPUT(a)\n\ny = AND(a\n").unwrap_err();
        assert!(matches!(err, NetlistError::Parse { line: 3, .. }));
    }

    #[test]
    fn flip_flops_are_rejected() {
        let err = parse("INPUT(a)\nq = DFF(a)\n").unwrap_err();
        assert!(matches!(err, NetlistError::Unsupported { .. }));
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(parse("").unwrap_err(), NetlistError::Empty);
        assert_eq!(parse("# nothing\n").unwrap_err(), NetlistError::Empty);
    }

    #[test]
    fn header_counts_checked() {
        let err = parse("# 2 inputs\nINPUT(a)\n").unwrap_err();
        assert!(matches!(
            err,
            NetlistError::CountMismatch {
                what: "primary input",
                ..
            }
        ));
        // inverters listed separately from gates
        let ok = parse("# 1 inverter\n# 1 gates\nINPUT(a)\nINPUT(b)\nn = NOT(a)\ny = AND(n, b)\n");
        assert!(ok.is_ok());
    }

    #[test]
    fn write_then_parse() {
        let c = parse(C17).unwrap();
        let again = parse(&write_bench(&c)).unwrap();
        assert_eq!(c, again);
    }
}
