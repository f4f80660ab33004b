//! Flat circuit IR for repeated stabilizer measurement.
//!
//! Every measurement in a program is a parity gadget on one link: the
//! auxiliary qubit is reset, the data qubits are rotated into the link's
//! basis, two CX gates copy their parity onto the auxiliary and it is read
//! out. Outcome bit 0 always means eigenvalue +1.

mod experiment;
mod qasm;

use std::fmt;

use serde::Serialize;

use crate::lattice::Group;

pub use experiment::{build_experiment, parity_gadget, plaquette_block, z_stabilizer_block};
pub use qasm::{export_openqasm, parse_openqasm, ParsedQasm};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Instruction {
    Reset(usize),
    H(usize),
    S(usize),
    SDag(usize),
    /// Control, target.
    Cx(usize, usize),
    MeasureZ {
        qubit: usize,
        bit: usize,
    },
    XError {
        qubit: usize,
        p: f64,
    },
    Depolarize2 {
        a: usize,
        b: usize,
        p: f64,
    },
}

impl Instruction {
    pub fn is_noise(&self) -> bool {
        matches!(
            self,
            Instruction::XError { .. } | Instruction::Depolarize2 { .. }
        )
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Instruction::Reset(q)
            | Instruction::H(q)
            | Instruction::S(q)
            | Instruction::SDag(q)
            | Instruction::MeasureZ { qubit: q, .. }
            | Instruction::XError { qubit: q, .. } => vec![q],
            Instruction::Cx(a, b) | Instruction::Depolarize2 { a, b, .. } => vec![a, b],
        }
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Instruction::Reset(q) => write!(f, "RESET {q}"),
            Instruction::H(q) => write!(f, "H {q}"),
            Instruction::S(q) => write!(f, "S {q}"),
            Instruction::SDag(q) => write!(f, "S_DAG {q}"),
            Instruction::Cx(c, t) => write!(f, "CX {c} {t}"),
            Instruction::MeasureZ { qubit, bit } => write!(f, "MEASURE_Z {qubit} -> {bit}"),
            Instruction::XError { qubit, p } => write!(f, "X_ERROR({p}) {qubit}"),
            Instruction::Depolarize2 { a, b, p } => write!(f, "DEPOLARIZE2({p}) {a} {b}"),
        }
    }
}

/// Which block of a round a measurement belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Phase {
    /// Plaquette link measurements of the given shift.
    Shift(usize),
    /// The `z`-stabilizer block that closes the given shift.
    ZBlock(usize),
}

/// Provenance of one classical bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MeasRecord {
    pub round: usize,
    pub phase: Phase,
    pub link: usize,
    pub plaquette: Option<usize>,
    pub group: Option<Group>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircuitProgram {
    pub num_qubits: usize,
    pub num_bits: usize,
    pub instructions: Vec<Instruction>,
    /// Indexed by classical bit.
    pub meas_map: Vec<MeasRecord>,
    pub rounds: usize,
    pub num_shifts: usize,
}

impl CircuitProgram {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            num_bits: 0,
            instructions: Vec::new(),
            meas_map: Vec::new(),
            rounds: 0,
            num_shifts: 0,
        }
    }

    /// Program made of raw instructions, with no measurement provenance.
    pub fn from_instructions(
        num_qubits: usize,
        num_bits: usize,
        instructions: Vec<Instruction>,
    ) -> Self {
        Self {
            num_qubits,
            num_bits,
            instructions,
            meas_map: Vec::new(),
            rounds: 0,
            num_shifts: 0,
        }
    }

    pub fn has_noise(&self) -> bool {
        self.instructions.iter().any(Instruction::is_noise)
    }

    pub fn count(&self, pred: impl Fn(&Instruction) -> bool) -> usize {
        self.instructions.iter().filter(|i| pred(i)).count()
    }

    /// Distinct (plaquette, group) measurements made in `round`.
    pub fn group_measurements_in_round(&self, round: usize) -> usize {
        let mut seen: Vec<(usize, Group)> = self
            .meas_map
            .iter()
            .filter(|r| r.round == round)
            .filter_map(|r| Some((r.plaquette?, r.group?)))
            .collect();
        seen.sort_by_key(|&(p, g)| (p, g == Group::B));
        seen.dedup();
        seen.len()
    }

    /// Classical bit of the measurement of `link` in the given block.
    pub fn bit_for(&self, round: usize, phase: Phase, link: usize) -> Option<usize> {
        self.meas_map
            .iter()
            .position(|r| r.round == round && r.phase == phase && r.link == link)
    }

    /// One instruction per line.
    pub fn ir_text(&self) -> String {
        let mut out = format!("# qubits {} bits {}\n", self.num_qubits, self.num_bits);
        for inst in &self.instructions {
            out.push_str(&inst.to_string());
            out.push('\n');
        }
        out
    }

    pub(crate) fn push(&mut self, inst: Instruction) {
        self.instructions.push(inst);
    }

    pub(crate) fn measure(&mut self, qubit: usize, record: MeasRecord) {
        let bit = self.num_bits;
        self.num_bits += 1;
        self.meas_map.push(record);
        self.instructions.push(Instruction::MeasureZ { qubit, bit });
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CircuitError {
    #[error("need at least one measurement round, got {0}")]
    NoRounds(usize),
    #[error("OpenQASM export supports ideal circuits only; found noise instruction `{0}`")]
    NoiseNotExportable(String),
    #[error("OpenQASM parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
