use std::fmt::Write;

use super::{CircuitError, CircuitProgram, Instruction};

/// OpenQASM 2.0 text for an ideal program. Noise has no QASM form and is
/// rejected.
pub fn export_openqasm(program: &CircuitProgram) -> Result<String, CircuitError> {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", program.num_qubits);
    let _ = writeln!(out, "creg c[{}];", program.num_bits);
    for inst in &program.instructions {
        let _ = match *inst {
            Instruction::Reset(q) => writeln!(out, "reset q[{q}];"),
            Instruction::H(q) => writeln!(out, "h q[{q}];"),
            Instruction::S(q) => writeln!(out, "s q[{q}];"),
            Instruction::SDag(q) => writeln!(out, "sdg q[{q}];"),
            Instruction::Cx(c, t) => writeln!(out, "cx q[{c}],q[{t}];"),
            Instruction::MeasureZ { qubit, bit } => {
                writeln!(out, "measure q[{qubit}] -> c[{bit}];")
            }
            Instruction::XError { .. } | Instruction::Depolarize2 { .. } => {
                return Err(CircuitError::NoiseNotExportable(inst.to_string()))
            }
        };
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedQasm {
    pub num_qubits: usize,
    pub num_bits: usize,
    pub instructions: Vec<Instruction>,
}

/// Parses the OpenQASM 2.0 subset emitted by [`export_openqasm`]: single
/// `q` and `c` registers, `reset`, `h`, `s`, `sdg`, `cx` and `measure`.
pub fn parse_openqasm(text: &str) -> Result<ParsedQasm, CircuitError> {
    let mut num_qubits = None;
    let mut num_bits = None;
    let mut instructions = Vec::new();
    let mut saw_header = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let err = |msg: String| CircuitError::Parse { line, msg };
        let code = raw.split("//").next().unwrap_or("").trim();
        if code.is_empty() {
            continue;
        }
        for stmt in code.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            if !saw_header {
                if stmt != "OPENQASM 2.0" {
                    return Err(err(format!("expected `OPENQASM 2.0`, found `{stmt}`")));
                }
                saw_header = true;
                continue;
            }
            let (head, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
            let rest = rest.trim();
            let q_limit = num_qubits.unwrap_or(0);
            let c_limit = num_bits.unwrap_or(0);
            let qubit = |arg: &str| -> Result<usize, CircuitError> {
                let i = index_in(arg.trim(), "q").map_err(|m| err(m.clone()))?;
                if i >= q_limit {
                    return Err(err(format!("qubit index {i} out of range")));
                }
                Ok(i)
            };
            match head {
                "include" => {}
                "qreg" => num_qubits = Some(index_in(rest, "q").map_err(err)?),
                "creg" => num_bits = Some(index_in(rest, "c").map_err(err)?),
                "reset" => instructions.push(Instruction::Reset(qubit(rest)?)),
                "h" => instructions.push(Instruction::H(qubit(rest)?)),
                "s" => instructions.push(Instruction::S(qubit(rest)?)),
                "sdg" => instructions.push(Instruction::SDag(qubit(rest)?)),
                "cx" => {
                    let (c, t) = rest
                        .split_once(',')
                        .ok_or_else(|| err("cx needs two operands".into()))?;
                    instructions.push(Instruction::Cx(qubit(c)?, qubit(t)?));
                }
                "measure" => {
                    let (q, c) = rest
                        .split_once("->")
                        .ok_or_else(|| err("measure needs `->`".into()))?;
                    let bit = index_in(c.trim(), "c").map_err(err)?;
                    if bit >= c_limit {
                        return Err(err(format!("classical bit {bit} out of range")));
                    }
                    instructions.push(Instruction::MeasureZ {
                        qubit: qubit(q)?,
                        bit,
                    });
                }
                other => return Err(err(format!("unsupported statement `{other}`"))),
            }
        }
    }
    if !saw_header {
        return Err(CircuitError::Parse {
            line: 0,
            msg: "missing OPENQASM header".into(),
        });
    }
    Ok(ParsedQasm {
        num_qubits: num_qubits.unwrap_or(0),
        num_bits: num_bits.unwrap_or(0),
        instructions,
    })
}

/// `name[k]` -> `k`.
fn index_in(text: &str, name: &str) -> Result<usize, String> {
    text.strip_prefix(name)
        .and_then(|r| r.strip_prefix('['))
        .and_then(|r| r.strip_suffix(']'))
        .and_then(|k| k.trim().parse().ok())
        .ok_or_else(|| format!("expected `{name}[index]`, found `{text}`"))
}
