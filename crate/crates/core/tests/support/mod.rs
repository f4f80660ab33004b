#![allow(dead_code)]

use hexmatch::circuit::{CircuitProgram, Instruction};
use hexmatch::simulator::ShotTable;
use rand::Rng;

/// Random Clifford program on `n` qubits with resets, measurements and
/// noise. Every qubit is measured at the end so each run has some bits.
pub fn random_program<R: Rng>(rng: &mut R, n: usize, len: usize, noisy: bool) -> CircuitProgram {
    let mut insts = Vec::with_capacity(len + n);
    let mut bits = 0;
    let pair = |rng: &mut R| {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        (a, b)
    };
    for _ in 0..len {
        let kinds = if noisy { 9 } else { 7 };
        let q = rng.gen_range(0..n);
        let inst = match rng.gen_range(0..kinds) {
            0 | 1 => Instruction::H(q),
            2 => Instruction::S(q),
            3 => Instruction::SDag(q),
            4 if n > 1 => {
                let (a, b) = pair(rng);
                Instruction::Cx(a, b)
            }
            5 => Instruction::Reset(q),
            6 => {
                bits += 1;
                Instruction::MeasureZ {
                    qubit: q,
                    bit: bits - 1,
                }
            }
            7 => Instruction::XError {
                qubit: q,
                p: rng.gen_range(0.0..0.5),
            },
            8 if n > 1 => {
                let (a, b) = pair(rng);
                Instruction::Depolarize2 {
                    a,
                    b,
                    p: rng.gen_range(0.0..0.5),
                }
            }
            _ => Instruction::H(q),
        };
        insts.push(inst);
    }
    for q in 0..n {
        insts.push(Instruction::MeasureZ {
            qubit: q,
            bit: bits,
        });
        bits += 1;
    }
    CircuitProgram::from_instructions(n, bits, insts)
}

/// Largest `|f_a - f_b| / se` over all bits, with `se` the standard error
/// of the difference of the two marginals. Bits with zero spread in both
/// tables must agree exactly (reported as infinity otherwise).
pub fn worst_marginal_z(a: &ShotTable, b: &ShotTable) -> f64 {
    assert_eq!(a.num_bits(), b.num_bits());
    let (na, nb) = (a.num_shots() as f64, b.num_shots() as f64);
    (0..a.num_bits())
        .map(|bit| {
            let fa = a.count_ones(bit) as f64 / na;
            let fb = b.count_ones(bit) as f64 / nb;
            let se = (fa * (1.0 - fa) / na + fb * (1.0 - fb) / nb).sqrt();
            if se == 0.0 {
                if fa == fb {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                (fa - fb).abs() / se
            }
        })
        .fold(0.0, f64::max)
}
