//! Dense shot × bit matrices and their file formats.
//!
//! Binary layout: the magic `HXST`, then `num_shots` and `num_bits` as
//! little-endian `u64`, then one row per shot of `ceil(num_bits / 8)` bytes
//! with bit `b` at byte `b / 8`, position `b % 8` (least significant first).

use std::io::{self, Read, Write};

const MAGIC: &[u8; 4] = b"HXST";

#[derive(Clone, PartialEq, Eq)]
pub struct ShotTable {
    num_shots: usize,
    num_bits: usize,
    words_per_shot: usize,
    data: Vec<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ShotTableError {
    #[error("not a shot table (bad magic)")]
    BadMagic,
    #[error("shot table is truncated")]
    Truncated,
    #[error("shot table header is implausible: {0} shots of {1} bits")]
    BadHeader(u64, u64),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl ShotTable {
    pub fn zeros(num_shots: usize, num_bits: usize) -> Self {
        let words_per_shot = num_bits.div_ceil(64);
        Self {
            num_shots,
            num_bits,
            words_per_shot,
            data: vec![0; num_shots * words_per_shot],
        }
    }

    /// Table from explicit rows of bits.
    pub fn from_rows(rows: &[Vec<bool>], num_bits: usize) -> Self {
        let mut t = Self::zeros(rows.len(), num_bits);
        for (s, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), num_bits, "row {s} has the wrong length");
            for (b, &v) in row.iter().enumerate() {
                t.set(s, b, v);
            }
        }
        t
    }

    pub fn num_shots(&self) -> usize {
        self.num_shots
    }

    pub fn num_bits(&self) -> usize {
        self.num_bits
    }

    pub(crate) fn words_per_shot(&self) -> usize {
        self.words_per_shot
    }

    pub(crate) fn data_mut(&mut self) -> &mut [u64] {
        &mut self.data
    }

    /// Packed words of one shot.
    pub fn row(&self, shot: usize) -> &[u64] {
        &self.data[shot * self.words_per_shot..(shot + 1) * self.words_per_shot]
    }

    #[inline]
    pub fn get(&self, shot: usize, bit: usize) -> bool {
        debug_assert!(shot < self.num_shots && bit < self.num_bits);
        (self.data[shot * self.words_per_shot + bit / 64] >> (bit % 64)) & 1 == 1
    }

    pub fn set(&mut self, shot: usize, bit: usize, v: bool) {
        assert!(shot < self.num_shots && bit < self.num_bits);
        let (idx, m) = (shot * self.words_per_shot + bit / 64, 1u64 << (bit % 64));
        if v {
            self.data[idx] |= m;
        } else {
            self.data[idx] &= !m;
        }
    }

    /// Number of shots in which `bit` reads 1.
    pub fn count_ones(&self, bit: usize) -> usize {
        (0..self.num_shots).filter(|&s| self.get(s, bit)).count()
    }

    pub fn write_binary<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&(self.num_shots as u64).to_le_bytes())?;
        w.write_all(&(self.num_bits as u64).to_le_bytes())?;
        let row_bytes = self.num_bits.div_ceil(8);
        let mut buf = Vec::with_capacity(row_bytes);
        for s in 0..self.num_shots {
            buf.clear();
            buf.extend(
                self.row(s)
                    .iter()
                    .flat_map(|word| word.to_le_bytes())
                    .take(row_bytes),
            );
            w.write_all(&buf)?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(mut r: R) -> Result<Self, ShotTableError> {
        let mut magic = [0u8; 4];
        read_exact(&mut r, &mut magic)?;
        if &magic != MAGIC {
            return Err(ShotTableError::BadMagic);
        }
        let mut word = [0u8; 8];
        read_exact(&mut r, &mut word)?;
        let shots = u64::from_le_bytes(word);
        read_exact(&mut r, &mut word)?;
        let bits = u64::from_le_bytes(word);
        let row_bytes = bits.div_ceil(8);
        if row_bytes
            .checked_mul(shots)
            .is_none_or(|total| total > (1 << 40))
        {
            return Err(ShotTableError::BadHeader(shots, bits));
        }
        let mut t = Self::zeros(shots as usize, bits as usize);
        let mut buf = vec![0u8; row_bytes as usize];
        for s in 0..t.num_shots {
            read_exact(&mut r, &mut buf)?;
            let base = s * t.words_per_shot;
            for (i, chunk) in buf.chunks(8).enumerate() {
                let mut bytes = [0u8; 8];
                bytes[..chunk.len()].copy_from_slice(chunk);
                t.data[base + i] = u64::from_le_bytes(bytes);
            }
        }
        Ok(t)
    }

    /// One shot per line as a string of `0`/`1`, bit 0 first.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let mut line = String::with_capacity(self.num_bits + 1);
        for s in 0..self.num_shots {
            line.clear();
            line.extend((0..self.num_bits).map(|b| if self.get(s, b) { '1' } else { '0' }));
            line.push('\n');
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    }
}

fn read_exact<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<(), ShotTableError> {
    r.read_exact(buf).map_err(|e| match e.kind() {
        io::ErrorKind::UnexpectedEof => ShotTableError::Truncated,
        _ => ShotTableError::Io(e),
    })
}

impl std::fmt::Debug for ShotTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ShotTable({} shots × {} bits)",
            self.num_shots, self.num_bits
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn csv_rows() {
        let t = ShotTable::from_rows(&[vec![true, false, true], vec![false, false, true]], 3);
        let mut out = Vec::new();
        t.write_csv(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "101\n001\n");
    }

    #[test]
    fn binary_header_and_layout() {
        let t = ShotTable::from_rows(
            &[vec![
                false, true, false, false, false, false, false, false, true,
            ]],
            9,
        );
        let mut out = Vec::new();
        t.write_binary(&mut out).unwrap();
        assert_eq!(&out[..4], b"HXST");
        assert_eq!(&out[4..12], &1u64.to_le_bytes());
        assert_eq!(&out[12..20], &9u64.to_le_bytes());
        assert_eq!(&out[20..], &[0b10, 0b1]);
    }

    #[test]
    fn bad_input_is_rejected() {
        assert!(matches!(
            ShotTable::read_binary(&b"NOPE"[..]),
            Err(ShotTableError::BadMagic)
        ));
        let mut out = Vec::new();
        ShotTable::zeros(3, 70).write_binary(&mut out).unwrap();
        out.pop();
        assert!(matches!(
            ShotTable::read_binary(&out[..]),
            Err(ShotTableError::Truncated)
        ));
    }

    proptest! {
        #[test]
        fn binary_roundtrip(bits in 0usize..150, rows in proptest::collection::vec(any::<u64>(), 1..20)) {
            let mut t = ShotTable::zeros(rows.len(), bits);
            for (s, seed) in rows.iter().enumerate() {
                for b in 0..bits {
                    t.set(s, b, (seed.rotate_left(b as u32) ^ b as u64) & 1 == 1);
                }
            }
            let mut out = Vec::new();
            t.write_binary(&mut out).unwrap();
            prop_assert_eq!(ShotTable::read_binary(&out[..]).unwrap(), t);
        }
    }
}
