//! Shot-by-shot execution of circuit programs.
//!
//! [`run_shots`] drives the bit-packed [`Tableau`]; [`statevector_oracle`]
//! runs the same instruction semantics on a dense [`StateVector`] and exists
//! to cross-check it on small registers.

mod rng;
mod shots;
mod statevector;
mod tableau;

use crate::circuit::{CircuitProgram, Instruction};
use crate::pauli::Pauli;

pub use rng::ShotStreams;
pub use shots::{ShotTable, ShotTableError};
pub use statevector::{StateVector, MAX_ORACLE_QUBITS};
pub use tableau::Tableau;

/// Clifford state that can execute the circuit IR.
pub trait QuantumState {
    fn num_qubits(&self) -> usize;
    fn h(&mut self, q: usize);
    fn s(&mut self, q: usize);
    fn s_dag(&mut self, q: usize);
    fn cx(&mut self, c: usize, t: usize);
    fn pauli(&mut self, q: usize, p: Pauli);
    /// Returns `true` for outcome 1 (eigenvalue -1).
    fn measure_z(&mut self, q: usize, streams: &mut ShotStreams) -> bool;
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("instruction `{inst}` touches qubit {qubit}, but the state has {n} qubits")]
    QubitOutOfRange {
        inst: String,
        qubit: usize,
        n: usize,
    },
    #[error("measurement writes bit {bit}, but the program has {num_bits} bits")]
    BitOutOfRange { bit: usize, num_bits: usize },
    #[error("the state-vector oracle handles at most {MAX_ORACLE_QUBITS} qubits, got {0}")]
    TooManyQubits(usize),
    #[error("need at least one shot")]
    NoShots,
}

fn check_qubits(inst: &Instruction, n: usize) -> Result<(), SimError> {
    match inst.qubits().into_iter().find(|&q| q >= n) {
        Some(qubit) => Err(SimError::QubitOutOfRange {
            inst: inst.to_string(),
            qubit,
            n,
        }),
        None => Ok(()),
    }
}

/// Executes one instruction, returning the outcome for measurements.
pub fn apply_instruction<S: QuantumState>(
    state: &mut S,
    inst: &Instruction,
    streams: &mut ShotStreams,
) -> Result<Option<bool>, SimError> {
    check_qubits(inst, state.num_qubits())?;
    Ok(step(state, inst, streams))
}

#[inline]
fn step<S: QuantumState>(
    state: &mut S,
    inst: &Instruction,
    streams: &mut ShotStreams,
) -> Option<bool> {
    match *inst {
        Instruction::Reset(q) => {
            if state.measure_z(q, streams) {
                state.pauli(q, Pauli::X);
            }
        }
        Instruction::H(q) => state.h(q),
        Instruction::S(q) => state.s(q),
        Instruction::SDag(q) => state.s_dag(q),
        Instruction::Cx(c, t) => state.cx(c, t),
        Instruction::MeasureZ { qubit, .. } => return Some(state.measure_z(qubit, streams)),
        Instruction::XError { qubit, p } => {
            if streams.fires(p) {
                state.pauli(qubit, Pauli::X);
            }
        }
        Instruction::Depolarize2 { a, b, p } => {
            if streams.fires(p) {
                let (pa, pb) = streams.two_qubit_pauli();
                state.pauli(a, pa);
                state.pauli(b, pb);
            }
        }
    }
    None
}

fn validate(program: &CircuitProgram, num_shots: usize) -> Result<(), SimError> {
    if num_shots == 0 {
        return Err(SimError::NoShots);
    }
    for inst in &program.instructions {
        check_qubits(inst, program.num_qubits)?;
        if let Instruction::MeasureZ { bit, .. } = *inst {
            if bit >= program.num_bits {
                return Err(SimError::BitOutOfRange {
                    bit,
                    num_bits: program.num_bits,
                });
            }
        }
    }
    Ok(())
}

/// Runs one shot from `|0...0⟩` and writes its bits into `row`.
fn run_one<S: QuantumState>(
    state: &mut S,
    program: &CircuitProgram,
    seed: u64,
    shot: u64,
    row: &mut [u64],
) {
    let mut streams = ShotStreams::for_shot(seed, shot);
    row.fill(0);
    for inst in &program.instructions {
        if let Some(true) = step(state, inst, &mut streams) {
            if let Instruction::MeasureZ { bit, .. } = *inst {
                row[bit / 64] |= 1 << (bit % 64);
            }
        }
    }
}

/// Shots per parallel work item.
const CHUNK: usize = 64;

/// Samples `num_shots` shots of `program` on the stabilizer tableau.
///
/// Shot `s` draws only from streams keyed by `(seed, s)`, so the table is
/// the same for any thread count.
pub fn run_shots(
    program: &CircuitProgram,
    num_shots: usize,
    seed: u64,
) -> Result<ShotTable, SimError> {
    validate(program, num_shots)?;
    let mut table = ShotTable::zeros(num_shots, program.num_bits);
    let wps = table.words_per_shot();
    let fill = |state: &mut Tableau, (chunk, rows): (usize, &mut [u64])| {
        for (i, row) in rows.chunks_mut(wps.max(1)).enumerate() {
            state.reset_all();
            let shot = (chunk * CHUNK + i) as u64;
            run_one(state, program, seed, shot, row);
        }
    };
    if wps == 0 {
        // no classical bits; nothing observable to record
        return Ok(table);
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        table
            .data_mut()
            .par_chunks_mut(wps * CHUNK)
            .enumerate()
            .for_each_init(
                || Tableau::new(program.num_qubits),
                |state, item| fill(state, item),
            );
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut state = Tableau::new(program.num_qubits);
        for item in table.data_mut().chunks_mut(wps * CHUNK).enumerate() {
            fill(&mut state, item);
        }
    }
    Ok(table)
}

/// Same sampling contract as [`run_shots`] on a dense state vector.
pub fn statevector_oracle(
    program: &CircuitProgram,
    num_shots: usize,
    seed: u64,
) -> Result<ShotTable, SimError> {
    if program.num_qubits > MAX_ORACLE_QUBITS {
        return Err(SimError::TooManyQubits(program.num_qubits));
    }
    validate(program, num_shots)?;
    let mut table = ShotTable::zeros(num_shots, program.num_bits);
    let wps = table.words_per_shot();
    if wps == 0 {
        return Ok(table);
    }
    let mut state = StateVector::new(program.num_qubits);
    for (shot, row) in table.data_mut().chunks_mut(wps).enumerate() {
        state.reset_all();
        run_one(&mut state, program, seed, shot as u64, row);
    }
    Ok(table)
}
