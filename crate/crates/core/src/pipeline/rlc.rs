//! Zero-run coding of the 63 AC coefficients of a block.

use crate::{Error, Result};

pub const AC_LEN: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunToken {
    /// `run` zeros followed by the nonzero `value`.
    Pair { run: u8, value: i32 },
    /// All remaining coefficients are zero.
    Eob,
}

/// Run list for one block; always ends with exactly one [`RunToken::Eob`].
pub fn rlc_encode(ac: &[i32]) -> Result<Vec<RunToken>> {
    if ac.len() != AC_LEN {
        return Err(Error::ShapeError(format!(
            "expected {AC_LEN} AC coefficients, got {}",
            ac.len()
        )));
    }
    let mut out = Vec::new();
    let mut run = 0u8;
    for &v in ac {
        if v == 0 {
            run += 1;
        } else {
            out.push(RunToken::Pair { run, value: v });
            run = 0;
        }
    }
    out.push(RunToken::Eob);
    Ok(out)
}

pub fn rlc_decode(tokens: &[RunToken]) -> Result<[i32; AC_LEN]> {
    let mut out = [0; AC_LEN];
    let mut pos = 0usize;
    let bad = |msg: &str| Error::ShapeError(format!("run list {msg}"));
    for (i, t) in tokens.iter().enumerate() {
        match *t {
            RunToken::Pair { run, value } => {
                if value == 0 {
                    return Err(bad("holds an explicit zero"));
                }
                pos += run as usize;
                if pos >= AC_LEN {
                    return Err(bad("overruns 63 coefficients"));
                }
                out[pos] = value;
                pos += 1;
            }
            RunToken::Eob => {
                if i + 1 != tokens.len() {
                    return Err(bad("continues after EOB"));
                }
                return Ok(out);
            }
        }
    }
    Err(bad("is missing EOB"))
}
