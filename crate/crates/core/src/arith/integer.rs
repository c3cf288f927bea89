//! Finite-precision arithmetic coder over a 31-bit window.
//!
//! Bits that are settled once `low` and `high` agree in their top bit are
//! shifted out. When the interval straddles the midpoint inside the middle
//! half, the next output bit is not yet known; it is counted as pending and
//! emitted (inverted) after the next settled bit. The flush writes two bits
//! plus any pending bits, so an encoded stream is always exactly
//! `shifts + 2` bits long; the decoder checks that.
//!
//! Each step floors both bounds to the window grid, so the coded interval
//! tracks the exact-rational one to within a few grid units per symbol.

use crate::bitio::{BitSequence, BitWriter};
use crate::symbol_model::{ProbabilityModel, Symbol};
use crate::{Error, Result};

const WINDOW_BITS: u32 = 31;
const TOP: u64 = (1 << WINDOW_BITS) - 1;
const FIRST_QTR: u64 = 1 << (WINDOW_BITS - 2);
const HALF: u64 = 2 * FIRST_QTR;
const THIRD_QTR: u64 = 3 * FIRST_QTR;

/// Largest cumulative total the window can resolve without starving.
pub const MAX_TOTAL: u64 = FIRST_QTR - 1;

/// Grid unit of the coder window, as a power of two: `2^-WINDOW_BITS`.
pub const WINDOW_PRECISION_BITS: u32 = WINDOW_BITS;

/// Cumulative counts in model order, rescaled if the model's total exceeds
/// [`MAX_TOTAL`].
#[derive(Debug, Clone)]
pub struct CumulativeTable {
    symbols: Vec<Symbol>,
    cum: Vec<u64>,
    /// symbol -> model position + 1 (0 = absent)
    lookup: Vec<u32>,
}

impl CumulativeTable {
    pub fn new(model: &ProbabilityModel) -> Self {
        let entries = model.entries();
        let n = entries.len() as u64;
        let total = model.total();
        let scale = |c: u64| -> u64 {
            if total <= MAX_TOTAL {
                c
            } else {
                let target = (MAX_TOTAL - n) as u128;
                ((c as u128 * target / total as u128) as u64).max(1)
            }
        };
        let mut cum = Vec::with_capacity(entries.len() + 1);
        cum.push(0);
        let mut acc = 0;
        for e in entries {
            acc += scale(e.count);
            cum.push(acc);
        }
        let symbols: Vec<Symbol> = entries.iter().map(|e| e.symbol).collect();
        let max = symbols.iter().max().map_or(0, |&s| s as usize + 1);
        let mut lookup = vec![0u32; max];
        for (i, &s) in symbols.iter().enumerate() {
            lookup[s as usize] = i as u32 + 1;
        }
        Self {
            symbols,
            cum,
            lookup,
        }
    }

    pub fn total(&self) -> u64 {
        *self.cum.last().unwrap()
    }

    #[inline]
    fn index(&self, symbol: Symbol) -> Result<usize> {
        match self.lookup.get(symbol as usize) {
            Some(&i) if i > 0 => Ok(i as usize - 1),
            _ => Err(Error::UnknownSymbol(symbol)),
        }
    }
}

struct Encoder {
    low: u64,
    high: u64,
    pending: u64,
    out: BitWriter,
}

impl Encoder {
    #[inline]
    fn emit(&mut self, bit: bool) {
        self.out.write_bit(bit);
        if self.pending > 0 {
            self.out.write_repeated(!bit, self.pending);
            self.pending = 0;
        }
    }

    #[inline]
    fn encode(&mut self, lo: u64, hi: u64, total: u64) {
        let range = self.high - self.low + 1;
        self.high = self.low + range * hi / total - 1;
        self.low += range * lo / total;
        loop {
            if self.high < HALF {
                self.emit(false);
            } else if self.low >= HALF {
                self.emit(true);
                self.low -= HALF;
                self.high -= HALF;
            } else if self.low >= FIRST_QTR && self.high < THIRD_QTR {
                self.pending += 1;
                self.low -= FIRST_QTR;
                self.high -= FIRST_QTR;
            } else {
                break;
            }
            self.low <<= 1;
            self.high = (self.high << 1) | 1;
        }
    }

    fn finish(mut self) -> BitSequence {
        self.pending += 1;
        let bit = self.low >= FIRST_QTR;
        self.emit(bit);
        self.out.finish()
    }
}

pub fn encode(symbols: &[Symbol], model: &ProbabilityModel) -> Result<BitSequence> {
    encode_with(symbols, &CumulativeTable::new(model))
}

pub fn encode_with(symbols: &[Symbol], table: &CumulativeTable) -> Result<BitSequence> {
    let total = table.total();
    let mut enc = Encoder {
        low: 0,
        high: TOP,
        pending: 0,
        out: BitWriter::with_capacity(symbols.len()),
    };
    for &s in symbols {
        let i = table.index(s)?;
        enc.encode(table.cum[i], table.cum[i + 1], total);
    }
    Ok(enc.finish())
}

/// Decodes exactly `count` symbols. The stream length must match what the
/// encoder would have produced for them.
pub fn decode(bits: &BitSequence, model: &ProbabilityModel, count: u64) -> Result<Vec<Symbol>> {
    decode_with(bits, &CumulativeTable::new(model), count)
}

pub fn decode_with(bits: &BitSequence, table: &CumulativeTable, count: u64) -> Result<Vec<Symbol>> {
    let total = table.total();
    let mut reader = bits.reader();
    let mut value = 0u64;
    for _ in 0..WINDOW_BITS {
        value = (value << 1) | reader.read_bit_or_zero() as u64;
    }
    let (mut low, mut high) = (0u64, TOP);
    let mut shifts: u64 = 0;
    let mut out = Vec::with_capacity(count.min(1 << 24) as usize);
    for _ in 0..count {
        if value < low || value > high {
            return Err(Error::InvalidCode);
        }
        let range = high - low + 1;
        let target = ((value - low + 1) * total - 1) / range;
        let i = table.cum.partition_point(|&c| c <= target) - 1;
        out.push(table.symbols[i]);
        high = low + range * table.cum[i + 1] / total - 1;
        low += range * table.cum[i] / total;
        loop {
            if high < HALF {
            } else if low >= HALF {
                value -= HALF;
                low -= HALF;
                high -= HALF;
            } else if low >= FIRST_QTR && high < THIRD_QTR {
                value -= FIRST_QTR;
                low -= FIRST_QTR;
                high -= FIRST_QTR;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | reader.read_bit_or_zero() as u64;
            shifts += 1;
            if shifts + 2 > bits.bit_len() {
                return Err(Error::TruncatedStream);
            }
        }
    }
    let expected = shifts + 2;
    match bits.bit_len().cmp(&expected) {
        std::cmp::Ordering::Less => Err(Error::TruncatedStream),
        std::cmp::Ordering::Greater => Err(Error::TrailingGarbage(bits.bit_len() - expected)),
        std::cmp::Ordering::Equal => Ok(out),
    }
}
