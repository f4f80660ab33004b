//! Phase-tracking Pauli strings in symplectic (x, z) bit form.
//!
//! A string on `n` qubits is stored as two packed bit vectors plus a phase
//! exponent `k` meaning an overall factor of `i^k`. The pair `(x, z) = (1, 1)`
//! denotes `Y` itself (not `XZ`), so Hermitian strings carry phase 0 or 2.

use std::fmt;

/// Single-qubit Pauli label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Sum over one word of the per-qubit exponents `g` such that
/// `P1 * P2 = i^g * P3`, where `P1 = (x1, z1)` is the left factor.
///
/// Each position contributes -1, 0 or +1.
#[inline]
pub(crate) fn product_phase_word(x1: u64, z1: u64, x2: u64, z2: u64) -> i32 {
    // X*Y = iZ, Y*Z = iX, Z*X = iY
    let plus = (x1 & !z1 & x2 & z2) | (x1 & z1 & !x2 & z2) | (!x1 & z1 & x2 & !z2);
    // X*Z = -iY, Y*X = -iZ, Z*Y = -iX
    let minus = (x1 & !z1 & !x2 & z2) | (x1 & z1 & x2 & !z2) | (!x1 & z1 & x2 & z2);
    plus.count_ones() as i32 - minus.count_ones() as i32
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        let w = words_for(n);
        Self {
            n,
            x: vec![0; w],
            z: vec![0; w],
            phase: 0,
        }
    }

    /// Builds a string from `(qubit, pauli)` pairs; repeated qubits multiply
    /// left to right.
    pub fn from_sparse(n: usize, terms: &[(usize, Pauli)]) -> Self {
        let mut out = Self::identity(n);
        for &(q, p) in terms {
            let mut single = Self::identity(n);
            single.set(q, p);
            out = out.mul(&single);
        }
        out
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Phase exponent `k` of the overall factor `i^k`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub(crate) fn set_phase(&mut self, k: u8) {
        self.phase = k % 4;
    }

    pub fn get(&self, q: usize) -> Pauli {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        let (w, b) = (q / 64, q % 64);
        Pauli::from_bits((self.x[w] >> b) & 1 == 1, (self.z[w] >> b) & 1 == 1)
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        assert!(q < self.n, "qubit {q} out of range for {} qubits", self.n);
        let (w, b) = (q / 64, q % 64);
        let (px, pz) = p.bits();
        self.x[w] = (self.x[w] & !(1 << b)) | ((px as u64) << b);
        self.z[w] = (self.z[w] & !(1 << b)) | ((pz as u64) << b);
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    /// Operator product `self * rhs`, phases included.
    pub fn mul(&self, rhs: &PauliString) -> PauliString {
        assert_eq!(self.n, rhs.n, "qubit count mismatch");
        let mut g: i32 = self.phase as i32 + rhs.phase as i32;
        let mut x = Vec::with_capacity(self.x.len());
        let mut z = Vec::with_capacity(self.z.len());
        for w in 0..self.x.len() {
            g += product_phase_word(self.x[w], self.z[w], rhs.x[w], rhs.z[w]);
            x.push(self.x[w] ^ rhs.x[w]);
            z.push(self.z[w] ^ rhs.z[w]);
        }
        PauliString {
            n: self.n,
            x,
            z,
            phase: g.rem_euclid(4) as u8,
        }
    }

    /// Symplectic inner product parity: `true` iff the strings commute.
    pub fn commutes_with(&self, rhs: &PauliString) -> bool {
        assert_eq!(self.n, rhs.n, "qubit count mismatch");
        let odd: u32 = (0..self.x.len())
            .map(|w| ((self.x[w] & rhs.z[w]) ^ (self.z[w] & rhs.x[w])).count_ones())
            .sum();
        odd.is_multiple_of(2)
    }

    /// Equality ignoring the overall phase.
    pub fn same_support(&self, rhs: &PauliString) -> bool {
        self.n == rhs.n && self.x == rhs.x && self.z == rhs.z
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = ["+", "+i", "-", "-i"][self.phase as usize];
        write!(f, "{sign}")?;
        for q in 0..self.n {
            write!(f, "{}", self.get(q).symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}
