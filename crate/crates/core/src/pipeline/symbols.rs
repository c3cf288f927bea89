//! Flattening of coefficient streams into one 16-bit alphabet.
//!
//! Layout of the alphabet:
//!
//! | range             | meaning                                   |
//! |-------------------|-------------------------------------------|
//! | `0x0000..0xFD00`  | signed value, `n -> 2n`, `-n -> 2n - 1`   |
//! | `0xFD00 + q`      | quality marker (first symbol only)        |
//! | `0xFE00 + run`    | zero run, followed by one value symbol    |
//! | `0xFFFF`          | end of block                              |
//!
//! Each block contributes its DC difference, then its run/value pairs, then
//! EOB.

use super::rlc::{rlc_decode, RunToken, AC_LEN};
use crate::symbol_model::Symbol;
use crate::{Error, Result};

pub const VALUE_LIMIT: Symbol = 0xFD00;
pub const QUALITY_BASE: Symbol = 0xFD00;
pub const RUN_BASE: Symbol = 0xFE00;
pub const EOB: Symbol = 0xFFFF;

/// DPCM-coded DC differences and per-block AC run lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoefficientStream {
    pub dc_diffs: Vec<i32>,
    pub ac_runs: Vec<Vec<RunToken>>,
}

impl CoefficientStream {
    pub fn block_count(&self) -> usize {
        self.dc_diffs.len()
    }

    /// Expands block `i`'s run list back into 63 AC values.
    pub fn ac_values(&self, i: usize) -> Result<[i32; AC_LEN]> {
        rlc_decode(&self.ac_runs[i])
    }
}

pub fn value_to_symbol(n: i32) -> Result<Symbol> {
    let n = n as i64;
    let s = if n >= 0 { 2 * n } else { -2 * n - 1 };
    if s < VALUE_LIMIT as i64 {
        Ok(s as Symbol)
    } else {
        Err(Error::SymbolOverflow(n))
    }
}

pub fn symbol_to_value(s: Symbol) -> i32 {
    let s = s as i32;
    if s % 2 == 0 {
        s / 2
    } else {
        -(s + 1) / 2
    }
}

pub fn to_symbols(quality: u8, stream: &CoefficientStream) -> Result<Vec<Symbol>> {
    if stream.dc_diffs.len() != stream.ac_runs.len() {
        return Err(Error::ShapeError("DC and AC block counts differ".into()));
    }
    let mut out = Vec::with_capacity(1 + 3 * stream.block_count());
    out.push(QUALITY_BASE + quality as Symbol);
    for (&dc, runs) in stream.dc_diffs.iter().zip(&stream.ac_runs) {
        out.push(value_to_symbol(dc)?);
        for t in runs {
            match *t {
                RunToken::Pair { run, value } => {
                    out.push(RUN_BASE + run as Symbol);
                    out.push(value_to_symbol(value)?);
                }
                RunToken::Eob => out.push(EOB),
            }
        }
    }
    Ok(out)
}

/// Inverse of [`to_symbols`]; `blocks` comes from the image dimensions.
pub fn from_symbols(symbols: &[Symbol], blocks: usize) -> Result<(u8, CoefficientStream)> {
    let bad = |msg: String| Error::BadContainer(format!("symbol stream: {msg}"));
    let mut it = symbols.iter().copied();
    let quality = match it.next() {
        Some(s) if (QUALITY_BASE + 1..=QUALITY_BASE + 100).contains(&s) => (s - QUALITY_BASE) as u8,
        other => return Err(bad(format!("expected quality marker, found {other:?}"))),
    };
    let value = |s: Option<Symbol>| match s {
        Some(s) if s < VALUE_LIMIT => Ok(symbol_to_value(s)),
        other => Err(bad(format!("expected value symbol, found {other:?}"))),
    };
    let mut stream = CoefficientStream {
        dc_diffs: Vec::with_capacity(blocks),
        ac_runs: Vec::with_capacity(blocks),
    };
    for _ in 0..blocks {
        stream.dc_diffs.push(value(it.next())?);
        let mut runs = Vec::new();
        loop {
            match it.next() {
                Some(EOB) => {
                    runs.push(RunToken::Eob);
                    break;
                }
                Some(s) if (RUN_BASE..=RUN_BASE + 255).contains(&s) => {
                    let v = value(it.next())?;
                    runs.push(RunToken::Pair {
                        run: (s - RUN_BASE) as u8,
                        value: v,
                    });
                }
                other => return Err(bad(format!("unexpected {other:?} inside block"))),
            }
        }
        rlc_decode(&runs).map_err(|e| bad(e.to_string()))?;
        stream.ac_runs.push(runs);
    }
    if let Some(extra) = it.next() {
        return Err(bad(format!("symbol {extra} after last block")));
    }
    Ok((quality, stream))
}
