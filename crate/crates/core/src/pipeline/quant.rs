use super::blocks::{Block, BLOCK_LEN};
use crate::{Error, Result};

/// Quantized block, row-major.
pub type QuantBlock = [i32; BLOCK_LEN];

/// Conventional luminance table (quality 50), row-major.
pub const BASE_LUMINANCE: [u16; BLOCK_LEN] = [
    16, 11, 10, 16, 24, 40, 51, 61, //
    12, 12, 14, 19, 26, 58, 60, 55, //
    14, 13, 16, 24, 40, 57, 69, 56, //
    14, 17, 22, 29, 51, 87, 80, 62, //
    18, 22, 37, 56, 68, 109, 103, 77, //
    24, 35, 55, 64, 81, 104, 113, 92, //
    49, 64, 78, 87, 103, 121, 120, 101, //
    72, 92, 95, 98, 112, 100, 103, 99,
];

pub const DEFAULT_QUALITY: u8 = 75;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantTable {
    steps: [u16; BLOCK_LEN],
}

impl QuantTable {
    pub fn new(steps: [u16; BLOCK_LEN]) -> Result<Self> {
        if steps.contains(&0) {
            return Err(Error::BadConfig("quantizer step must be >= 1".into()));
        }
        Ok(Self { steps })
    }

    /// Luminance table scaled for `quality` in `1..=100`: `5000/q` percent
    /// below 50, `200 - 2q` percent from 50 up, steps clamped to at least 1.
    pub fn with_quality(quality: u8) -> Result<Self> {
        if !(1..=100).contains(&quality) {
            return Err(Error::BadConfig(format!("quality {quality} outside 1..=100")));
        }
        let q = quality as u32;
        let scale = if q < 50 { 5000 / q } else { 200 - 2 * q };
        let steps = BASE_LUMINANCE.map(|b| ((b as u32 * scale + 50) / 100).clamp(1, 32767) as u16);
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[u16; BLOCK_LEN] {
        &self.steps
    }
}

impl Default for QuantTable {
    fn default() -> Self {
        Self::with_quality(DEFAULT_QUALITY).unwrap()
    }
}

/// Divides by the step and rounds half away from zero.
pub fn quantize(coeffs: &Block, table: &QuantTable) -> QuantBlock {
    std::array::from_fn(|i| (coeffs[i] / table.steps[i] as f64).round() as i32)
}

pub fn dequantize(q: &QuantBlock, table: &QuantTable) -> Block {
    std::array::from_fn(|i| q[i] as f64 * table.steps[i] as f64)
}
