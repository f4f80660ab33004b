//! Uniform circuit-level error model with a single strength `p`.
//!
//! Bit flips follow every reset and precede every measurement; every CX is
//! followed by two-qubit depolarizing noise. Basis-change gates around a
//! CX count as part of that two-qubit gate and draw no noise of their own.
//! Idle qubits are noiseless.

use serde::Serialize;

use crate::circuit::{CircuitProgram, Instruction};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NoiseModel {
    p: f64,
}

impl NoiseModel {
    pub fn new(p: f64) -> Result<Self, NoiseError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(NoiseError::InvalidProbability(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

#[derive(Debug, thiserror::Error)]
pub enum NoiseError {
    #[error("noise probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
    #[error("program already contains noise instructions")]
    AlreadyNoisy,
}

pub fn apply_noise_model(
    program: &CircuitProgram,
    model: NoiseModel,
) -> Result<CircuitProgram, NoiseError> {
    if program.has_noise() {
        return Err(NoiseError::AlreadyNoisy);
    }
    let p = model.p;
    let mut instructions = Vec::with_capacity(program.instructions.len() * 2);
    for &inst in &program.instructions {
        match inst {
            Instruction::Reset(q) => {
                instructions.push(inst);
                instructions.push(Instruction::XError { qubit: q, p });
            }
            Instruction::MeasureZ { qubit, .. } => {
                instructions.push(Instruction::XError { qubit, p });
                instructions.push(inst);
            }
            Instruction::Cx(a, b) => {
                instructions.push(inst);
                instructions.push(Instruction::Depolarize2 { a, b, p });
            }
            _ => instructions.push(inst),
        }
    }
    Ok(CircuitProgram {
        instructions,
        ..program.clone()
    })
}

/// Drops every noise instruction.
pub fn strip_noise(program: &CircuitProgram) -> CircuitProgram {
    CircuitProgram {
        instructions: program
            .instructions
            .iter()
            .copied()
            .filter(|i| !i.is_noise())
            .collect(),
        ..program.clone()
    }
}
