mod support;

use std::collections::BTreeMap;

use hexmatch::circuit::{parity_gadget, CircuitProgram, Instruction};
use hexmatch::lattice::{CodeSpec, Link, LinkType};
use hexmatch::noise::{apply_noise_model, strip_noise, NoiseModel};
use hexmatch::pauli::Pauli;
use hexmatch::simulator::{
    apply_instruction, run_shots, statevector_oracle, QuantumState, ShotStreams, StateVector,
    Tableau,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// data qubits 0 and 2, auxiliary 1
const D0: usize = 0;
const D1: usize = 2;

fn link(t: LinkType) -> Link {
    Link {
        id: 0,
        link_type: t,
        data_qubits: vec![D0, D1],
        aux_qubit: Some(1),
        truncated: false,
    }
}

fn key(sv: &StateVector) -> Vec<(i64, i64)> {
    let amps = sv.amplitudes();
    let (pr, pi) = *amps.iter().find(|(r, i)| r * r + i * i > 1e-9).unwrap();
    let norm = (pr * pr + pi * pi).sqrt();
    // divide out the global phase of the first nonzero amplitude
    amps.iter()
        .map(|&(r, i)| {
            let (nr, ni) = ((r * pr + i * pi) / norm, (i * pr - r * pi) / norm);
            ((nr * 1e6).round() as i64, (ni * 1e6).round() as i64)
        })
        .collect()
}

/// Gate sequences preparing every two-qubit stabilizer state on the data
/// qubits, found by breadth-first search over H, S and CX.
fn stabilizer_preparations() -> Vec<Vec<Instruction>> {
    let gates = [
        Instruction::H(D0),
        Instruction::H(D1),
        Instruction::S(D0),
        Instruction::S(D1),
        Instruction::Cx(D0, D1),
        Instruction::Cx(D1, D0),
    ];
    let mut seen = BTreeMap::new();
    let mut frontier = vec![Vec::new()];
    seen.insert(key(&StateVector::new(3)), Vec::new());
    let mut st = ShotStreams::for_shot(0, 0);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for seq in frontier {
            for g in gates {
                let mut prep: Vec<Instruction> = seq.clone();
                prep.push(g);
                let mut sv = StateVector::new(3);
                for inst in &prep {
                    apply_instruction(&mut sv, inst, &mut st).unwrap();
                }
                if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key(&sv)) {
                    e.insert(prep.clone());
                    next.push(prep);
                }
            }
        }
        frontier = next;
    }
    seen.into_values().collect()
}

fn run_state<S: QuantumState>(state: &mut S, insts: &[Instruction], seed: u64) -> Vec<bool> {
    let mut st = ShotStreams::for_shot(seed, 0);
    insts
        .iter()
        .filter_map(|i| apply_instruction(state, i, &mut st).unwrap())
        .collect()
}

#[test]
fn there_are_sixty_two_qubit_stabilizer_states() {
    assert_eq!(stabilizer_preparations().len(), 60);
}

#[test]
fn gadgets_match_projective_measurement() {
    let preps = stabilizer_preparations();
    for t in [LinkType::X, LinkType::Y, LinkType::Z] {
        let p = t.pauli();
        let gadget = parity_gadget(&link(t), 0);
        for prep in &preps {
            let mut before = StateVector::new(3);
            run_state(&mut before, prep, 0);
            let e = before.expectation(&[(D0, p), (D1, p)]);
            let mut seen = [false; 2];
            for seed in 0..64 {
                let mut prog = prep.clone();
                prog.extend(gadget.iter().copied());
                let mut sv = StateVector::new(3);
                let mut tab = Tableau::new(3);
                let bits = run_state(&mut sv, &prog, seed);
                assert_eq!(bits, run_state(&mut tab, &prog, seed), "{t} {prep:?}");
                let m = bits[0];
                seen[m as usize] = true;
                if e.abs() > 0.5 {
                    assert_eq!(m, e < 0.0, "{t} {prep:?} deterministic outcome");
                }
                // post-measurement state equals the projection of the input
                let mut image = before.clone();
                image.pauli(D0, p);
                image.pauli(D1, p);
                let sign = if m { -1.0 } else { 1.0 };
                let (a, b) = (before.amplitudes(), image.amplitudes());
                let mut projected = [(0.0, 0.0); 8];
                for i in (0..8).filter(|i| i & 2 == 0) {
                    let j = if m { i | 2 } else { i };
                    projected[j] = (a[i].0 + sign * b[i].0, a[i].1 + sign * b[i].1);
                }
                let norm: f64 = projected
                    .iter()
                    .map(|(r, i)| r * r + i * i)
                    .sum::<f64>()
                    .sqrt();
                let after = sv.amplitudes();
                let (re, im) = projected
                    .iter()
                    .zip(&after)
                    .fold((0.0, 0.0), |(sr, si), (x, y)| {
                        (sr + x.0 * y.0 + x.1 * y.1, si + x.0 * y.1 - x.1 * y.0)
                    });
                let overlap = (re * re + im * im).sqrt() / norm;
                assert!(
                    (overlap - 1.0).abs() < 1e-9,
                    "{t} {prep:?} overlap {overlap}"
                );
            }
            if e.abs() < 0.5 {
                assert!(seen[0] && seen[1], "{t} {prep:?} should be random");
            }
        }
    }
}

#[test]
fn repeated_gadget_repeats_its_bit() {
    for t in [LinkType::X, LinkType::Y, LinkType::Z] {
        let mut insts = vec![Instruction::H(D0), Instruction::S(D1)];
        insts.extend(parity_gadget(&link(t), 0));
        insts.extend(parity_gadget(&link(t), 1));
        let prog = CircuitProgram::from_instructions(3, 2, insts);
        let table = run_shots(&prog, 2000, 4).unwrap();
        for s in 0..2000 {
            assert_eq!(table.get(s, 0), table.get(s, 1));
        }
        assert_eq!(table, statevector_oracle(&prog, 2000, 4).unwrap());
    }
}

#[test]
fn z_gadget_on_basis_states() {
    for (flip, expected) in [(false, false), (true, true)] {
        let mut insts = Vec::new();
        if flip {
            insts.push(Instruction::XError { qubit: D0, p: 1.0 });
        }
        insts.extend(parity_gadget(&link(LinkType::Z), 0));
        insts.push(Instruction::MeasureZ { qubit: D0, bit: 1 });
        let prog = CircuitProgram::from_instructions(3, 2, insts);
        let t = run_shots(&prog, 50, 0).unwrap();
        for s in 0..50 {
            assert_eq!(t.get(s, 0), expected);
            assert_eq!(t.get(s, 1), flip, "data state unchanged");
        }
    }
}

#[test]
fn depolarize2_flip_frequencies() {
    // Exhaustive count over the 15 non-identity two-qubit Paulis: a Z-basis
    // outcome flips when the Pauli on that qubit has an X component.
    let flips = |p: Pauli| matches!(p, Pauli::X | Pauli::Y);
    let all = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
    let pairs: Vec<(Pauli, Pauli)> = all
        .iter()
        .flat_map(|&a| all.iter().map(move |&b| (a, b)))
        .filter(|&pair| pair != (Pauli::I, Pauli::I))
        .collect();
    assert_eq!(pairs.len(), 15);
    let first = pairs.iter().filter(|(a, _)| flips(*a)).count() as f64 / 15.0;
    let any = pairs.iter().filter(|(a, b)| flips(*a) || flips(*b)).count() as f64 / 15.0;

    let prog = CircuitProgram::from_instructions(
        2,
        2,
        vec![
            Instruction::Depolarize2 { a: 0, b: 1, p: 1.0 },
            Instruction::MeasureZ { qubit: 0, bit: 0 },
            Instruction::MeasureZ { qubit: 1, bit: 1 },
        ],
    );
    let n = 10_000;
    let t = run_shots(&prog, n, 11).unwrap();
    let f_first = t.count_ones(0) as f64 / n as f64;
    let f_any = (0..n).filter(|&s| t.get(s, 0) || t.get(s, 1)).count() as f64 / n as f64;
    assert!((f_first - first).abs() < 0.02, "{f_first} vs {first}");
    assert!((f_any - any).abs() < 0.02, "{f_any} vs {any}");
}

#[test]
fn zero_probability_noise_is_a_no_op() {
    let code = CodeSpec::from_descriptor("falcon-27").unwrap();
    let ideal = hexmatch::circuit::build_experiment(&code, 2).unwrap();
    let noisy = apply_noise_model(&ideal, NoiseModel::new(0.0).unwrap()).unwrap();
    assert_eq!(
        run_shots(&noisy, 300, 5).unwrap(),
        run_shots(&ideal, 300, 5).unwrap()
    );
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let p = support::random_program(&mut rng, 4, 40, false);
        let zero = apply_noise_model(&p, NoiseModel::new(0.0).unwrap()).unwrap();
        assert_eq!(
            run_shots(&zero, 200, 3).unwrap(),
            run_shots(&p, 200, 3).unwrap()
        );
        assert_eq!(strip_noise(&zero), p);
    }
}

#[test]
fn deterministic_programs_agree_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let p = support::random_program(&mut rng, 5, 40, false);
        let det = CircuitProgram {
            instructions: p
                .instructions
                .iter()
                .copied()
                .filter(|i| !matches!(i, Instruction::H(_)))
                .collect(),
            ..p.clone()
        };
        let t = run_shots(&det, 50, 8).unwrap();
        assert_eq!(t, statevector_oracle(&det, 50, 8).unwrap());
        for s in 1..50 {
            assert_eq!(t.row(s), t.row(0));
        }
    }
}

#[test]
fn shots_depend_only_on_seed_and_index() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = support::random_program(&mut rng, 6, 60, true);
    let full = run_shots(&p, 500, 21).unwrap();
    let head = run_shots(&p, 130, 21).unwrap();
    for s in 0..130 {
        assert_eq!(full.row(s), head.row(s));
    }
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        assert_eq!(pool.install(|| run_shots(&p, 500, 21).unwrap()), full);
    }
}

/// Engines with unrelated seeds: a statistical check. With ~30 programs of
/// a few dozen bits the 3-sigma level would trip by chance, so the
/// threshold is Bonferroni-adjusted to a per-run false alarm rate near 1%.
#[test]
fn oracle_agrees_with_independent_seeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for k in 0..30 {
        let n = 1 + k % 6;
        let p = support::random_program(&mut rng, n, 25, true);
        let a = run_shots(&p, 20_000, 100 + k as u64).unwrap();
        let b = statevector_oracle(&p, 20_000, 900 + k as u64).unwrap();
        worst = worst.max(support::worst_marginal_z(&a, &b));
    }
    assert!(worst < 4.5, "largest marginal z-score {worst}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tableau_stays_valid(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = support::random_program(&mut rng, n, 1200, true);
        let mut t = Tableau::new(n);
        let mut st = ShotStreams::for_shot(seed, 0);
        for inst in &p.instructions {
            apply_instruction(&mut t, inst, &mut st).unwrap();
            prop_assert!(t.is_valid(), "after {inst}");
        }
    }

    #[test]
    fn duplicated_measurement_repeats(seed in any::<u64>(), n in 1usize..7, pick in any::<prop::sample::Index>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = support::random_program(&mut rng, n, 60, true);
        let positions: Vec<usize> = p.instructions.iter().enumerate()
            .filter(|(_, i)| matches!(i, Instruction::MeasureZ { .. }))
            .map(|(k, _)| k)
            .collect();
        let at = positions[pick.index(positions.len())];
        let Instruction::MeasureZ { qubit, bit } = p.instructions[at] else { unreachable!() };
        let mut insts = p.instructions.clone();
        insts.insert(at + 1, Instruction::MeasureZ { qubit, bit: p.num_bits });
        let dup = CircuitProgram::from_instructions(n, p.num_bits + 1, insts);
        let t = run_shots(&dup, 200, seed).unwrap();
        for s in 0..200 {
            prop_assert_eq!(t.get(s, bit), t.get(s, p.num_bits));
        }
    }
}
