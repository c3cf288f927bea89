//! MSB-first bit packing.

use crate::{Error, Result};

/// A packed bit string. The final byte is zero-padded on the right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitSequence {
    bytes: Vec<u8>,
    bit_len: u64,
}

impl BitSequence {
    /// Wraps already-packed bytes. Fails unless `bytes` holds exactly
    /// `ceil(bit_len / 8)` bytes with zero padding.
    pub fn from_parts(bytes: Vec<u8>, bit_len: u64) -> Result<Self> {
        if bytes.len() as u64 != bit_len.div_ceil(8) {
            return Err(Error::BadContainer(format!(
                "{} payload bytes cannot hold exactly {bit_len} bits",
                bytes.len()
            )));
        }
        let used = (bit_len % 8) as u32;
        if used != 0 {
            let pad_mask = 0xFFu8 >> used;
            if bytes.last().is_some_and(|b| b & pad_mask != 0) {
                return Err(Error::BadContainer("nonzero padding bits".into()));
            }
        }
        Ok(Self { bytes, bit_len })
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut w = BitWriter::new();
        for b in bits {
            w.write_bit(b);
        }
        w.finish()
    }

    /// Parses a string of `0`/`1` characters; other characters are ignored.
    pub fn from_str_bits(s: &str) -> Self {
        Self::from_bits(s.chars().filter_map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        }))
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    pub fn is_empty(&self) -> bool {
        self.bit_len == 0
    }

    pub fn bit(&self, i: u64) -> Option<bool> {
        (i < self.bit_len).then(|| self.bytes[(i / 8) as usize] & (0x80 >> (i % 8)) != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.bit_len).map(|i| self.bytes[(i / 8) as usize] & (0x80 >> (i % 8)) != 0)
    }

    pub fn reader(&self) -> BitReader<'_> {
        BitReader::new(self)
    }
}

impl std::fmt::Display for BitSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
pub struct BitWriter {
    bytes: Vec<u8>,
    acc: u8,
    used: u32,
    bit_len: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            bytes: Vec::with_capacity(bits.div_ceil(8)),
            ..Self::default()
        }
    }

    #[inline]
    pub fn write_bit(&mut self, bit: bool) {
        self.acc |= (bit as u8) << (7 - self.used);
        self.used += 1;
        self.bit_len += 1;
        if self.used == 8 {
            self.bytes.push(self.acc);
            self.acc = 0;
            self.used = 0;
        }
    }

    /// Writes the low `count` bits of `value`, most significant first.
    #[inline]
    pub fn write_bits(&mut self, value: u64, count: u32) {
        debug_assert!(count <= 64);
        let mut remaining = count;
        while remaining > 0 {
            let room = 8 - self.used;
            let take = room.min(remaining);
            let chunk = ((value >> (remaining - take)) & ((1u64 << take) - 1)) as u8;
            self.acc |= chunk << (room - take);
            self.used += take;
            remaining -= take;
            if self.used == 8 {
                self.bytes.push(self.acc);
                self.acc = 0;
                self.used = 0;
            }
        }
        self.bit_len += count as u64;
    }

    /// Writes `count` copies of `bit`.
    pub fn write_repeated(&mut self, bit: bool, mut count: u64) {
        let fill = if bit { u64::MAX } else { 0 };
        while count > 0 {
            let n = count.min(64) as u32;
            self.write_bits(fill, n);
            count -= n as u64;
        }
    }

    pub fn extend(&mut self, bits: &BitSequence) {
        for b in bits.iter() {
            self.write_bit(b);
        }
    }

    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    pub fn finish(mut self) -> BitSequence {
        if self.used > 0 {
            self.bytes.push(self.acc);
        }
        BitSequence {
            bytes: self.bytes,
            bit_len: self.bit_len,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    bit_len: u64,
    pos: u64,
}

impl<'a> BitReader<'a> {
    pub fn new(bits: &'a BitSequence) -> Self {
        Self {
            bytes: &bits.bytes,
            bit_len: bits.bit_len,
            pos: 0,
        }
    }

    pub fn position(&self) -> u64 {
        self.pos
    }

    pub fn remaining(&self) -> u64 {
        self.bit_len - self.pos
    }

    #[inline]
    pub fn read_bit(&mut self) -> Result<bool> {
        if self.pos >= self.bit_len {
            return Err(Error::OutOfBits {
                requested: 1,
                remaining: 0,
            });
        }
        let b = self.bytes[(self.pos / 8) as usize] & (0x80 >> (self.pos % 8)) != 0;
        self.pos += 1;
        Ok(b)
    }

    /// Next bit, or `false` once the stream is exhausted. The cursor still
    /// advances so callers can tell how far past the end they read.
    #[inline]
    pub fn read_bit_or_zero(&mut self) -> bool {
        let b = self.pos < self.bit_len
            && self.bytes[(self.pos / 8) as usize] & (0x80 >> (self.pos % 8)) != 0;
        self.pos += 1;
        b
    }

    pub fn read_bits(&mut self, n: u64) -> Result<Vec<bool>> {
        if n > self.remaining() {
            return Err(Error::OutOfBits {
                requested: n,
                remaining: self.remaining(),
            });
        }
        (0..n).map(|_| self.read_bit()).collect()
    }

    /// Reads `n <= 64` bits as an unsigned integer, MSB first.
    pub fn read_uint(&mut self, n: u32) -> Result<u64> {
        debug_assert!(n <= 64);
        if n as u64 > self.remaining() {
            return Err(Error::OutOfBits {
                requested: n as u64,
                remaining: self.remaining(),
            });
        }
        let mut v = 0u64;
        for _ in 0..n {
            v = (v << 1) | self.read_bit()? as u64;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn packs_msb_first() {
        let mut w = BitWriter::new();
        w.write_bit(true);
        w.write_bits(0b011, 3);
        let s = w.finish();
        assert_eq!(s.bytes(), &[0b1011_0000]);
        assert_eq!(s.bit_len(), 4);
        assert_eq!(s.to_string(), "1011");
    }

    #[test]
    fn empty_writer() {
        let s = BitWriter::new().finish();
        assert!(s.bytes().is_empty());
        assert_eq!(s.bit_len(), 0);
    }

    #[test]
    fn nine_ones_pad() {
        let s = BitSequence::from_bits(std::iter::repeat_n(true, 9));
        assert_eq!(s.bytes(), &[0xFF, 0x80]);
        assert_eq!(s.bit_len(), 9);
    }

    #[test]
    fn reads_back() {
        let s = BitSequence::from_parts(vec![0xB0], 4).unwrap();
        let mut r = s.reader();
        assert_eq!(r.read_bits(0).unwrap(), Vec::<bool>::new());
        assert!(matches!(
            r.read_bits(5),
            Err(Error::OutOfBits {
                requested: 5,
                remaining: 4
            })
        ));
        assert_eq!(r.read_bits(4).unwrap(), vec![true, false, true, true]);
        assert_eq!(r.remaining(), 0);
        assert!(r.read_bit().is_err());
    }

    #[test]
    fn from_parts_validates() {
        assert!(BitSequence::from_parts(vec![0xB1], 4).is_err());
        assert!(BitSequence::from_parts(vec![0xB0, 0], 4).is_err());
        assert!(BitSequence::from_parts(vec![], 1).is_err());
        assert!(BitSequence::from_parts(vec![0xFF], 8).is_ok());
    }

    proptest! {
        #[test]
        fn roundtrip(bits in prop::collection::vec(any::<bool>(), 0..500)) {
            let s = BitSequence::from_bits(bits.iter().copied());
            prop_assert_eq!(s.bit_len(), bits.len() as u64);
            prop_assert!(s.bytes().len() as u64 * 8 < s.bit_len() + 8);
            prop_assert!(BitSequence::from_parts(s.bytes().to_vec(), s.bit_len()).is_ok());
            let back = s.reader().read_bits(bits.len() as u64).unwrap();
            prop_assert_eq!(back, bits);
        }

        #[test]
        fn concatenation(a in prop::collection::vec(any::<bool>(), 0..100),
                         b in prop::collection::vec(any::<bool>(), 0..100),
                         v in any::<u64>(), n in 0u32..=64) {
            let mut w = BitWriter::new();
            for &x in &a { w.write_bit(x); }
            w.extend(&BitSequence::from_bits(b.iter().copied()));
            w.write_bits(v, n);
            let joined = w.finish();
            let mut expect: Vec<bool> = a.iter().chain(b.iter()).copied().collect();
            expect.extend((0..n).rev().map(|i| (v >> i) & 1 == 1));
            prop_assert_eq!(joined.iter().collect::<Vec<_>>(), expect);
        }
    }
}
