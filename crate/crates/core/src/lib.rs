//! Huffman and arithmetic entropy coders, a JPEG-style lossy image
//! pipeline feeding them, the `ENTC` container, Netpbm I/O and a
//! ratio/time benchmark harness comparing the two coders.

pub mod arith;
pub mod bench;
pub mod bitio;
pub mod codec;
pub mod container;
mod error;
pub mod huffman;
pub mod netpbm;
pub mod pipeline;
pub mod symbol_model;

pub use error::{Error, Result};
pub use symbol_model::{FrequencyTable, ProbabilityModel, Symbol};
