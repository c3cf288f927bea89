//! Exact-rational arithmetic coder.
//!
//! Each symbol narrows `[low, high)` to
//! `[low + range * range_low(s), low + range * range_high(s))`, with both
//! bounds taken against the interval from before the symbol. The final
//! width is the product of the coded symbols' probabilities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::bitio::{BitSequence, BitWriter};
use crate::symbol_model::{ProbabilityModel, Symbol};
use crate::{Error, Result};

/// Rational numerators grow with every step, so the reference coder refuses
/// longer messages.
pub const MAX_EXACT_SYMBOLS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoderInterval {
    low: BigRational,
    high: BigRational,
}

impl CoderInterval {
    pub fn unit() -> Self {
        Self {
            low: BigRational::zero(),
            high: BigRational::one(),
        }
    }

    /// Fails unless `0 <= low < high <= 1`.
    pub fn new(low: BigRational, high: BigRational) -> Result<Self> {
        if low < BigRational::zero() || high > BigRational::one() || low >= high {
            return Err(Error::BadConfig(format!("invalid interval [{low}, {high})")));
        }
        Ok(Self { low, high })
    }

    pub fn low(&self) -> &BigRational {
        &self.low
    }

    pub fn high(&self) -> &BigRational {
        &self.high
    }

    pub fn range(&self) -> BigRational {
        &self.high - &self.low
    }

    pub fn contains(&self, other: &CoderInterval) -> bool {
        self.low <= other.low && other.high <= self.high
    }

    fn narrow(&self, lo: Ratio<u64>, hi: Ratio<u64>) -> Self {
        let range = self.range();
        Self {
            low: &self.low + &range * to_big(lo),
            high: &self.low + &range * to_big(hi),
        }
    }
}

fn to_big(r: Ratio<u64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn encode_exact(symbols: &[Symbol], model: &ProbabilityModel) -> Result<CoderInterval> {
    encode_exact_steps(symbols, model).map(|mut v| v.pop().unwrap())
}

/// Every intermediate interval, starting with `[0, 1)`.
pub fn encode_exact_steps(symbols: &[Symbol], model: &ProbabilityModel) -> Result<Vec<CoderInterval>> {
    if symbols.len() > MAX_EXACT_SYMBOLS {
        return Err(Error::MessageTooLong {
            len: symbols.len(),
            max: MAX_EXACT_SYMBOLS,
        });
    }
    let mut steps = Vec::with_capacity(symbols.len() + 1);
    steps.push(CoderInterval::unit());
    for &s in symbols {
        let (lo, hi) = model.lookup_range(s)?;
        let next = steps.last().unwrap().narrow(lo, hi);
        steps.push(next);
    }
    Ok(steps)
}

/// Shortest bit string `b` whose dyadic interval `[0.b, 0.b + 2^-|b|)` lies
/// inside `interval`; the smallest such value among equal lengths.
pub fn select_codeword(interval: &CoderInterval) -> BitSequence {
    let (ln, ld) = (interval.low.numer(), interval.low.denom());
    let (hn, hd) = (interval.high.numer(), interval.high.denom());
    let mut len: u32 = 0;
    loop {
        let scale = BigInt::one() << len;
        // smallest k with k / 2^len >= low
        let k = (ln * &scale).div_ceil(ld);
        // (k + 1) / 2^len <= high
        if (&k + 1u32) * hd <= hn * &scale {
            let mut w = BitWriter::new();
            for i in (0..len).rev() {
                w.write_bit(k.bit(i as u64));
            }
            return w.finish();
        }
        len += 1;
    }
}

/// The value `0.b` of a bit string as an exact rational.
pub fn bits_to_fraction(bits: &BitSequence) -> BigRational {
    let mut numer = BigInt::zero();
    for b in bits.iter() {
        numer = (numer << 1u32) + u32::from(b);
    }
    BigRational::new(numer, BigInt::one() << bits.bit_len())
}
