//! Dense state-vector simulator, used only as a cross-check for the tableau.
//!
//! Amplitude index bit `q` is the computational value of qubit `q`.

use super::{QuantumState, ShotStreams};
use crate::pauli::Pauli;
use num_complex::Complex64;

/// Largest register the oracle accepts.
pub const MAX_ORACLE_QUBITS: usize = 12;

const EPS: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn new(n: usize) -> Self {
        assert!(
            n <= MAX_ORACLE_QUBITS,
            "state vector limited to {MAX_ORACLE_QUBITS} qubits"
        );
        let mut amps = vec![Complex64::ZERO; 1 << n];
        amps[0] = Complex64::ONE;
        Self { n, amps }
    }

    pub fn reset_all(&mut self) {
        self.amps.fill(Complex64::ZERO);
        self.amps[0] = Complex64::ONE;
    }

    /// `(re, im)` per basis state.
    pub fn amplitudes(&self) -> Vec<(f64, f64)> {
        self.amps.iter().map(|a| (a.re, a.im)).collect()
    }

    /// Probability of reading 1 on qubit `q`.
    pub fn prob_one(&self, q: usize) -> f64 {
        let m = 1usize << q;
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & m != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// `⟨ψ|P|ψ⟩` for a Hermitian Pauli string given per qubit.
    pub fn expectation(&self, paulis: &[(usize, Pauli)]) -> f64 {
        let mut image = self.clone();
        for &(q, p) in paulis {
            image.apply_pauli(q, p);
        }
        self.amps
            .iter()
            .zip(&image.amps)
            .map(|(a, b)| a.re * b.re + a.im * b.im)
            .sum()
    }

    fn apply_pauli(&mut self, q: usize, p: Pauli) {
        let m = 1usize << q;
        match p {
            Pauli::I => {}
            Pauli::X => {
                for i in (0..self.amps.len()).filter(|i| i & m == 0) {
                    self.amps.swap(i, i | m);
                }
            }
            Pauli::Z => {
                for (i, a) in self.amps.iter_mut().enumerate() {
                    if i & m != 0 {
                        *a = -*a;
                    }
                }
            }
            Pauli::Y => {
                // Y|0> = i|1>, Y|1> = -i|0>
                for i in (0..self.amps.len()).filter(|i| i & m == 0) {
                    let (a0, a1) = (self.amps[i], self.amps[i | m]);
                    self.amps[i] = -a1 * Complex64::I;
                    self.amps[i | m] = a0 * Complex64::I;
                }
            }
        }
    }

    fn collapse(&mut self, q: usize, outcome: bool, prob: f64) {
        let m = 1usize << q;
        let scale = 1.0 / prob.sqrt();
        for (i, a) in self.amps.iter_mut().enumerate() {
            *a = if (i & m != 0) == outcome {
                *a * scale
            } else {
                Complex64::ZERO
            };
        }
    }
}

impl QuantumState for StateVector {
    fn num_qubits(&self) -> usize {
        self.n
    }

    fn h(&mut self, q: usize) {
        let m = 1usize << q;
        let r = std::f64::consts::FRAC_1_SQRT_2;
        for i in (0..self.amps.len()).filter(|i| i & m == 0) {
            let (a, b) = (self.amps[i], self.amps[i | m]);
            self.amps[i] = (a + b) * r;
            self.amps[i | m] = (a - b) * r;
        }
    }

    fn s(&mut self, q: usize) {
        let m = 1usize << q;
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & m != 0 {
                *a *= Complex64::I;
            }
        }
    }

    fn s_dag(&mut self, q: usize) {
        let m = 1usize << q;
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & m != 0 {
                *a *= -Complex64::I;
            }
        }
    }

    fn cx(&mut self, c: usize, t: usize) {
        let (mc, mt) = (1usize << c, 1usize << t);
        for i in 0..self.amps.len() {
            if i & mc != 0 && i & mt == 0 {
                self.amps.swap(i, i | mt);
            }
        }
    }

    fn pauli(&mut self, q: usize, p: Pauli) {
        self.apply_pauli(q, p);
    }

    fn measure_z(&mut self, q: usize, streams: &mut ShotStreams) -> bool {
        let p1 = self.prob_one(q);
        let outcome = if p1 < EPS {
            false
        } else if p1 > 1.0 - EPS {
            true
        } else if (p1 - 0.5).abs() < EPS {
            streams.coin()
        } else {
            streams.outcome_uniform() < p1
        };
        let prob = if outcome { p1 } else { 1.0 - p1 };
        self.collapse(q, outcome, prob);
        outcome
    }
}
