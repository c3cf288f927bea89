//! Arithmetic coding.
//!
//! [`exact`] evaluates the interval-narrowing recurrence with unbounded
//! rationals and is the reference for short messages. [`integer`] is the
//! finite-precision coder used for real streams.

pub mod exact;
pub mod integer;

pub use exact::{encode_exact, select_codeword, CoderInterval, MAX_EXACT_SYMBOLS};
pub use integer::{decode, encode, CumulativeTable};
