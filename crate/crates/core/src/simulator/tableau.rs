//! Aaronson–Gottesman stabilizer tableau with bit-packed rows.
//!
//! Rows `0..n` are destabilizers, `n..2n` stabilizers and row `2n` is
//! scratch space for deterministic measurements. Each row stores its `x` and
//! `z` bits in `words = ceil(n / 64)` machine words, so products of rows run
//! word-parallel.

use super::{QuantumState, ShotStreams};
use crate::pauli::{product_phase_word, words_for, Pauli, PauliString};

#[derive(Clone, Debug)]
pub struct Tableau {
    n: usize,
    words: usize,
    xs: Vec<u64>,
    zs: Vec<u64>,
    signs: Vec<bool>,
}

impl Tableau {
    /// The state `|0...0⟩`.
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        let rows = 2 * n + 1;
        let mut t = Self {
            n,
            words,
            xs: vec![0; rows * words],
            zs: vec![0; rows * words],
            signs: vec![false; rows],
        };
        t.reset_all();
        t
    }

    /// Back to `|0...0⟩` without reallocating.
    pub fn reset_all(&mut self) {
        self.xs.fill(0);
        self.zs.fill(0);
        self.signs.fill(false);
        for q in 0..self.n {
            let (w, m) = (q / 64, 1u64 << (q % 64));
            self.xs[q * self.words + w] |= m;
            self.zs[(self.n + q) * self.words + w] |= m;
        }
    }

    #[inline]
    fn bit(words: &[u64], row: usize, stride: usize, q: usize) -> bool {
        (words[row * stride + q / 64] >> (q % 64)) & 1 == 1
    }

    #[inline]
    fn x_bit(&self, row: usize, q: usize) -> bool {
        Self::bit(&self.xs, row, self.words, q)
    }

    /// Row `h` becomes row `i` times row `h`.
    fn rowsum(&mut self, h: usize, i: usize) {
        let w = self.words;
        let mut phase: i32 = 2 * (self.signs[h] as i32 + self.signs[i] as i32);
        for k in 0..w {
            let (xi, zi) = (self.xs[i * w + k], self.zs[i * w + k]);
            let (xh, zh) = (self.xs[h * w + k], self.zs[h * w + k]);
            phase += product_phase_word(xi, zi, xh, zh);
            self.xs[h * w + k] = xi ^ xh;
            self.zs[h * w + k] = zi ^ zh;
        }
        self.signs[h] = phase.rem_euclid(4) == 2;
    }

    /// Row `r` as a phase-tracked Pauli string.
    pub fn row(&self, r: usize) -> PauliString {
        let mut p = PauliString::identity(self.n);
        for q in 0..self.n {
            p.set(
                q,
                Pauli::from_bits(self.x_bit(r, q), Self::bit(&self.zs, r, self.words, q)),
            );
        }
        if self.signs[r] {
            p.set_phase(2);
        }
        p
    }

    pub fn stabilizers(&self) -> Vec<PauliString> {
        (self.n..2 * self.n).map(|r| self.row(r)).collect()
    }

    /// Symplectic structure check: stabilizers commute, destabilizers
    /// commute, and destabilizer `i` anticommutes exactly with stabilizer `i`.
    pub fn is_valid(&self) -> bool {
        let rows: Vec<PauliString> = (0..2 * self.n).map(|r| self.row(r)).collect();
        for i in 0..2 * self.n {
            for j in i + 1..2 * self.n {
                let should_anticommute = j == i + self.n;
                if rows[i].commutes_with(&rows[j]) == should_anticommute {
                    return false;
                }
            }
        }
        // Hermitian stabilizers only
        rows[self.n..].iter().all(|r| r.phase() % 2 == 0)
    }

    fn apply_rows(&mut self, q: usize, mut f: impl FnMut(&mut u64, &mut u64, &mut bool, u64)) {
        let (w, m) = (q / 64, 1u64 << (q % 64));
        for r in 0..2 * self.n {
            let idx = r * self.words + w;
            f(&mut self.xs[idx], &mut self.zs[idx], &mut self.signs[r], m);
        }
    }
}

impl QuantumState for Tableau {
    fn num_qubits(&self) -> usize {
        self.n
    }

    fn h(&mut self, q: usize) {
        self.apply_rows(q, |x, z, s, m| {
            let (xb, zb) = (*x & m, *z & m);
            *s ^= xb != 0 && zb != 0;
            *x = (*x & !m) | zb;
            *z = (*z & !m) | xb;
        });
    }

    fn s(&mut self, q: usize) {
        self.apply_rows(q, |x, z, s, m| {
            let (xb, zb) = (*x & m, *z & m);
            *s ^= xb != 0 && zb != 0;
            *z ^= xb;
        });
    }

    fn s_dag(&mut self, q: usize) {
        self.apply_rows(q, |x, z, s, m| {
            let (xb, zb) = (*x & m, *z & m);
            *s ^= xb != 0 && zb == 0;
            *z ^= xb;
        });
    }

    fn cx(&mut self, c: usize, t: usize) {
        let (wc, mc) = (c / 64, 1u64 << (c % 64));
        let (wt, mt) = (t / 64, 1u64 << (t % 64));
        for r in 0..2 * self.n {
            let base = r * self.words;
            let xc = self.xs[base + wc] & mc != 0;
            let zc = self.zs[base + wc] & mc != 0;
            let xt = self.xs[base + wt] & mt != 0;
            let zt = self.zs[base + wt] & mt != 0;
            self.signs[r] ^= xc && zt && (xt == zc);
            if xc {
                self.xs[base + wt] ^= mt;
            }
            if zt {
                self.zs[base + wc] ^= mc;
            }
        }
    }

    fn pauli(&mut self, q: usize, p: Pauli) {
        // Conjugation flips the sign of every row that anticommutes with p.
        let (w, m) = (q / 64, 1u64 << (q % 64));
        for r in self.n..2 * self.n {
            let idx = r * self.words + w;
            let (xb, zb) = (self.xs[idx] & m != 0, self.zs[idx] & m != 0);
            self.signs[r] ^= match p {
                Pauli::I => false,
                Pauli::X => zb,
                Pauli::Z => xb,
                Pauli::Y => xb != zb,
            };
        }
    }

    fn measure_z(&mut self, q: usize, streams: &mut ShotStreams) -> bool {
        let n = self.n;
        if let Some(p) = (n..2 * n).find(|&r| self.x_bit(r, q)) {
            for r in 0..2 * n {
                if r != p && self.x_bit(r, q) {
                    self.rowsum(r, p);
                }
            }
            let w = self.words;
            let (dst, src) = ((p - n) * w, p * w);
            self.xs.copy_within(src..src + w, dst);
            self.zs.copy_within(src..src + w, dst);
            self.signs[p - n] = self.signs[p];
            self.xs[src..src + w].fill(0);
            self.zs[src..src + w].fill(0);
            self.zs[src + q / 64] = 1u64 << (q % 64);
            let outcome = streams.coin();
            self.signs[p] = outcome;
            outcome
        } else {
            let scratch = 2 * n;
            let w = self.words;
            self.xs[scratch * w..(scratch + 1) * w].fill(0);
            self.zs[scratch * w..(scratch + 1) * w].fill(0);
            self.signs[scratch] = false;
            for i in 0..n {
                if self.x_bit(i, q) {
                    self.rowsum(scratch, i + n);
                }
            }
            self.signs[scratch]
        }
    }
}
