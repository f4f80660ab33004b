use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pauli::Pauli;

/// Random streams for one shot.
///
/// Both are ChaCha streams keyed by the run seed and selected by the shot
/// index, so a shot's randomness does not depend on which worker runs it or
/// in what order. Measurement outcomes and noise draw from separate streams:
/// a noise site always consumes its trigger draw, even at `p = 0`, and must
/// not shift the outcome sequence.
pub struct ShotStreams {
    outcome: ChaCha8Rng,
    noise: ChaCha8Rng,
}

impl ShotStreams {
    pub fn for_shot(seed: u64, shot: u64) -> Self {
        let mut outcome = ChaCha8Rng::seed_from_u64(seed);
        outcome.set_stream(2 * shot);
        let mut noise = ChaCha8Rng::seed_from_u64(seed);
        noise.set_stream(2 * shot + 1);
        Self { outcome, noise }
    }

    /// One draw for a uniformly random measurement outcome.
    pub fn coin(&mut self) -> bool {
        self.outcome.gen::<bool>()
    }

    /// Uniform double in `[0, 1)` from the outcome stream; only used for
    /// non-stabilizer probabilities in the dense oracle.
    pub fn outcome_uniform(&mut self) -> f64 {
        self.outcome.gen::<f64>()
    }

    /// One draw deciding whether a noise site fires.
    pub fn fires(&mut self, p: f64) -> bool {
        self.noise.gen::<f64>() < p
    }

    /// One draw picking a non-identity two-qubit Pauli uniformly.
    pub fn two_qubit_pauli(&mut self) -> (Pauli, Pauli) {
        const P: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
        let k: usize = self.noise.gen_range(1..16);
        (P[k >> 2], P[k & 3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<bool> = (0..64)
            .map({
                let mut s = ShotStreams::for_shot(9, 3);
                move |_| s.coin()
            })
            .collect();
        let b: Vec<bool> = (0..64)
            .map({
                let mut s = ShotStreams::for_shot(9, 3);
                move |_| s.coin()
            })
            .collect();
        let c: Vec<bool> = (0..64)
            .map({
                let mut s = ShotStreams::for_shot(9, 4);
                move |_| s.coin()
            })
            .collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn noise_draws_leave_outcomes_alone() {
        let mut plain = ShotStreams::for_shot(1, 0);
        let mut busy = ShotStreams::for_shot(1, 0);
        for _ in 0..10 {
            busy.fires(0.0);
            busy.two_qubit_pauli();
        }
        for _ in 0..32 {
            assert_eq!(plain.coin(), busy.coin());
        }
    }

    #[test]
    fn two_qubit_paulis_cover_all_fifteen() {
        let mut s = ShotStreams::for_shot(5, 0);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..2000 {
            let pair = s.two_qubit_pauli();
            assert_ne!(pair, (Pauli::I, Pauli::I));
            seen.insert(pair);
        }
        assert_eq!(seen.len(), 15);
    }
}
