use std::collections::HashMap;

use super::AnalysisError;
use crate::circuit::{CircuitProgram, MeasRecord, Phase};
use crate::lattice::CodeSpec;
use crate::simulator::ShotTable;

/// Plaquette values, one bit per (shot, round, plaquette).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaquetteBits {
    num_shots: usize,
    rounds: usize,
    num_plaquettes: usize,
    bits: Vec<bool>,
}

impl PlaquetteBits {
    pub fn new(num_shots: usize, rounds: usize, num_plaquettes: usize) -> Self {
        Self {
            num_shots,
            rounds,
            num_plaquettes,
            bits: vec![false; num_shots * rounds * num_plaquettes],
        }
    }

    fn idx(&self, shot: usize, round: usize, plaquette: usize) -> usize {
        assert!(shot < self.num_shots && round < self.rounds && plaquette < self.num_plaquettes);
        (shot * self.rounds + round) * self.num_plaquettes + plaquette
    }

    pub fn get(&self, shot: usize, round: usize, plaquette: usize) -> bool {
        self.bits[self.idx(shot, round, plaquette)]
    }

    pub fn set(&mut self, shot: usize, round: usize, plaquette: usize, v: bool) {
        let i = self.idx(shot, round, plaquette);
        self.bits[i] = v;
    }

    pub fn num_shots(&self) -> usize {
        self.num_shots
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn num_plaquettes(&self) -> usize {
        self.num_plaquettes
    }
}

/// A change frequency per plaquette and pooled over everything.
#[derive(Clone, Debug, PartialEq)]
pub struct RateStats {
    pub per_plaquette: Vec<f64>,
    pub mean: f64,
    /// Binomial, over all pooled samples.
    pub stderr: f64,
    pub samples: usize,
}

fn pooled(changes: &[usize], per_plaquette_samples: &[usize]) -> RateStats {
    let total: usize = per_plaquette_samples.iter().sum();
    let hits: usize = changes.iter().sum();
    let mean = hits as f64 / total as f64;
    RateStats {
        per_plaquette: changes
            .iter()
            .zip(per_plaquette_samples)
            .map(|(&c, &n)| c as f64 / n as f64)
            .collect(),
        mean,
        stderr: (mean * (1.0 - mean) / total as f64).sqrt(),
        samples: total,
    }
}

type BitKey = (usize, Phase, usize, Option<usize>);

fn bit_index(program: &CircuitProgram) -> HashMap<BitKey, usize> {
    program
        .meas_map
        .iter()
        .enumerate()
        .map(|(bit, r): (usize, &MeasRecord)| ((r.round, r.phase, r.link, r.plaquette), bit))
        .collect()
}

fn check_width(shots: &ShotTable, program: &CircuitProgram) -> Result<(), AnalysisError> {
    if shots.num_bits() != program.num_bits {
        return Err(AnalysisError::BitCountMismatch {
            table: shots.num_bits(),
            program: program.num_bits,
        });
    }
    Ok(())
}

fn parity(shots: &ShotTable, shot: usize, bits: &[usize]) -> bool {
    bits.iter().fold(false, |acc, &b| acc ^ shots.get(shot, b))
}

/// XOR of each plaquette's six link outcomes, per shot and round.
pub fn plaquette_outcomes(
    shots: &ShotTable,
    program: &CircuitProgram,
    code: &CodeSpec,
) -> Result<PlaquetteBits, AnalysisError> {
    check_width(shots, program)?;
    let index = bit_index(program);
    let mut groups = Vec::with_capacity(program.rounds * code.plaquettes.len());
    for round in 0..program.rounds {
        for p in &code.plaquettes {
            let bits = p
                .boundary_links
                .iter()
                .map(|&link| {
                    index
                        .get(&(round, Phase::Shift(p.shift), link, Some(p.id)))
                        .copied()
                        .ok_or(AnalysisError::MissingPlaquetteBit {
                            round,
                            plaquette: p.id,
                            link,
                        })
                })
                .collect::<Result<Vec<_>, _>>()?;
            groups.push(bits);
        }
    }
    let np = code.plaquettes.len();
    let mut out = PlaquetteBits::new(shots.num_shots(), program.rounds, np);
    for shot in 0..shots.num_shots() {
        for (k, bits) in groups.iter().enumerate() {
            out.set(shot, k / np, k % np, parity(shots, shot, bits));
        }
    }
    Ok(out)
}

/// Frequency with which a plaquette value differs from the previous round.
pub fn compute_pw(bits: &PlaquetteBits) -> Result<RateStats, AnalysisError> {
    if bits.rounds < 2 {
        return Err(AnalysisError::TooFewRounds(bits.rounds));
    }
    let mut changes = vec![0usize; bits.num_plaquettes];
    for shot in 0..bits.num_shots {
        for round in 1..bits.rounds {
            for (p, c) in changes.iter_mut().enumerate() {
                *c += (bits.get(shot, round, p) != bits.get(shot, round - 1, p)) as usize;
            }
        }
    }
    let samples = vec![bits.num_shots * (bits.rounds - 1); bits.num_plaquettes];
    Ok(pooled(&changes, &samples))
}

/// Frequency with which the product of a plaquette's incident `z` links
/// differs between the `z` block just before its shift and the one just
/// after. The first shift of round 0 has no earlier block and is skipped.
pub fn compute_pz(
    shots: &ShotTable,
    program: &CircuitProgram,
    code: &CodeSpec,
) -> Result<RateStats, AnalysisError> {
    check_width(shots, program)?;
    let index = bit_index(program);
    let z_bits =
        |round: usize, shift: usize, links: &[usize]| -> Result<Vec<usize>, AnalysisError> {
            links
                .iter()
                .map(|&link| {
                    index
                        .get(&(round, Phase::ZBlock(shift), link, None))
                        .copied()
                        .ok_or(AnalysisError::MissingZBit { round, shift, link })
                })
                .collect()
        };
    // (plaquette, before ∪ after bits)
    let mut windows: Vec<(usize, Vec<usize>)> = Vec::new();
    for round in 0..program.rounds {
        for p in &code.plaquettes {
            let before = match (round, p.shift) {
                (0, 0) => continue,
                (r, 0) => (r - 1, program.num_shifts - 1),
                (r, s) => (r, s - 1),
            };
            let mut bits = z_bits(before.0, before.1, &p.incident_z_links)?;
            bits.extend(z_bits(round, p.shift, &p.incident_z_links)?);
            windows.push((p.id, bits));
        }
    }
    let np = code.plaquettes.len();
    let mut changes = vec![0usize; np];
    let mut samples = vec![0usize; np];
    for (p, _) in &windows {
        samples[*p] += shots.num_shots();
    }
    for shot in 0..shots.num_shots() {
        for (p, bits) in &windows {
            changes[*p] += parity(shots, shot, bits) as usize;
        }
    }
    Ok(pooled(&changes, &samples))
}
