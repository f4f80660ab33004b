use super::{CircuitError, CircuitProgram, Instruction, MeasRecord, Phase};
use crate::lattice::{CodeSpec, Group, Link, LinkType, Plaquette};

/// Instructions measuring one link operator into classical bit `bit`.
///
/// Full links: reset the auxiliary, rotate both data qubits so the link's
/// Pauli becomes `Z` (`H` for `x`; `S_DAG` then `H` for `y`), CX each data
/// qubit onto the auxiliary (lower index first), undo the rotation and
/// measure the auxiliary. Truncated links measure their data qubit directly.
pub fn parity_gadget(link: &Link, bit: usize) -> Vec<Instruction> {
    if link.truncated {
        return vec![Instruction::MeasureZ {
            qubit: link.data_qubits[0],
            bit,
        }];
    }
    let aux = link.aux_qubit.expect("full link has an auxiliary qubit");
    let (d0, d1) = (link.data_qubits[0], link.data_qubits[1]);
    let mut out = vec![Instruction::Reset(aux)];
    match link.link_type {
        LinkType::Z => {}
        LinkType::X => out.extend([Instruction::H(d0), Instruction::H(d1)]),
        LinkType::Y => out.extend([
            Instruction::SDag(d0),
            Instruction::H(d0),
            Instruction::SDag(d1),
            Instruction::H(d1),
        ]),
    }
    out.push(Instruction::Cx(d0.min(d1), aux));
    out.push(Instruction::Cx(d0.max(d1), aux));
    match link.link_type {
        LinkType::Z => {}
        LinkType::X => out.extend([Instruction::H(d0), Instruction::H(d1)]),
        LinkType::Y => out.extend([
            Instruction::H(d0),
            Instruction::S(d0),
            Instruction::H(d1),
            Instruction::S(d1),
        ]),
    }
    out.push(Instruction::MeasureZ { qubit: aux, bit });
    out
}

fn emit_gadget(program: &mut CircuitProgram, link: &Link, record: MeasRecord) {
    let bit = program.num_bits;
    for inst in parity_gadget(link, bit) {
        match inst {
            Instruction::MeasureZ { qubit, .. } => program.measure(qubit, record),
            other => program.push(other),
        }
    }
}

fn sorted(ids: [usize; 3]) -> [usize; 3] {
    let mut ids = ids;
    ids.sort_unstable();
    ids
}

/// Group-a gadgets then group-b gadgets, each group in ascending link id.
pub fn plaquette_block(
    program: &mut CircuitProgram,
    plaquette: &Plaquette,
    code: &CodeSpec,
    round: usize,
) {
    for group in [Group::A, Group::B] {
        for link in sorted(plaquette.group(group)) {
            emit_gadget(
                program,
                code.link(link),
                MeasRecord {
                    round,
                    phase: Phase::Shift(plaquette.shift),
                    link,
                    plaquette: Some(plaquette.id),
                    group: Some(group),
                },
            );
        }
    }
}

/// One gadget (or direct readout) per `z` stabilizer, ascending link id.
pub fn z_stabilizer_block(
    program: &mut CircuitProgram,
    code: &CodeSpec,
    round: usize,
    shift: usize,
) {
    for &link in &code.z_stabilizers {
        emit_gadget(
            program,
            code.link(link),
            MeasRecord {
                round,
                phase: Phase::ZBlock(shift),
                link,
                plaquette: None,
                group: None,
            },
        );
    }
}

/// Resets every qubit, then runs `rounds` rounds; each round walks the
/// shifts in order, measuring that shift's plaquettes and then all `z`
/// stabilizers.
pub fn build_experiment(code: &CodeSpec, rounds: usize) -> Result<CircuitProgram, CircuitError> {
    if rounds < 1 {
        return Err(CircuitError::NoRounds(rounds));
    }
    let mut program = CircuitProgram::new(code.num_qubits());
    program.rounds = rounds;
    program.num_shifts = code.num_shifts;
    for q in 0..code.num_qubits() {
        program.push(Instruction::Reset(q));
    }
    for round in 0..rounds {
        for shift in 0..code.num_shifts {
            for plaquette in code.plaquettes_in_shift(shift) {
                plaquette_block(&mut program, plaquette, code, round);
            }
            z_stabilizer_block(&mut program, code, round, shift);
        }
    }
    Ok(program)
}
