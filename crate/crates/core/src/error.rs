use thiserror::Error;

use crate::symbol_model::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("symbol {0} is not in the model")]
    UnknownSymbol(Symbol),
    #[error("requested {requested} bits but only {remaining} remain")]
    OutOfBits { requested: u64, remaining: u64 },
    #[error("bit stream ended before all symbols were decoded")]
    TruncatedStream,
    #[error("{0} unexpected bits after the last symbol")]
    TrailingGarbage(u64),
    #[error("bit pattern does not match any code")]
    InvalidCode,
    #[error("exact coder accepts at most {max} symbols, got {len}")]
    MessageTooLong { len: usize, max: usize },
    #[error("value {0} does not fit the symbol alphabet")]
    SymbolOverflow(i64),
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("bad container: {0}")]
    BadContainer(String),
    #[error("unsupported image format")]
    UnsupportedFormat,
    #[error("unsupported maxval {0}, only 255 is accepted")]
    UnsupportedDepth(u32),
    #[error("image raster is truncated")]
    TruncatedFile,
    #[error("malformed image header: {0}")]
    MalformedHeader(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
