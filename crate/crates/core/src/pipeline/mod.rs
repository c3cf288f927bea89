//! JPEG-style lossy pipeline: level shift, 8x8 blocks, DCT, quantization,
//! zigzag scan, DPCM of DC terms and zero-run coding of AC terms, followed by
//! one of the entropy coders. The decoder runs the same stages backwards.

pub mod blocks;
pub mod color;
pub mod dct;
pub mod dpcm;
mod plane;
pub mod quant;
pub mod rlc;
pub mod symbols;
pub mod zigzag;

pub use blocks::{block_grid, merge_blocks, split_blocks, Block, BLOCK_LEN, BLOCK_SIDE};
pub use color::{rgb_to_ycbcr, ycbcr_to_rgb};
pub use dct::{fdct, idct};
pub use dpcm::{dpcm_decode, dpcm_encode};
pub use plane::{psnr, ImagePlane};
pub use quant::{dequantize, quantize, QuantBlock, QuantTable, DEFAULT_QUALITY};
pub use rlc::{rlc_decode, rlc_encode, RunToken};
pub use symbols::CoefficientStream;
pub use zigzag::{inverse_zigzag, zigzag};

use crate::codec::{self, Codec, SourceKind};
use crate::container::Container;
use crate::symbol_model::Symbol;
use crate::Result;

const LEVEL_SHIFT: f64 = 128.0;

/// Quantized blocks in row-major block order.
pub fn quantized_blocks(plane: &ImagePlane, table: &QuantTable) -> Vec<QuantBlock> {
    split_blocks(plane)
        .iter()
        .map(|b| {
            let shifted: Block = b.map(|v| v - LEVEL_SHIFT);
            quantize(&fdct(&shifted), table)
        })
        .collect()
}

/// Forward lossy stages down to the coefficient stream.
pub fn analyze(plane: &ImagePlane, table: &QuantTable) -> Result<CoefficientStream> {
    let scans: Vec<[i32; 64]> = quantized_blocks(plane, table).iter().map(zigzag).collect();
    let dc: Vec<i32> = scans.iter().map(|s| s[0]).collect();
    let ac_runs = scans
        .iter()
        .map(|s| rlc_encode(&s[1..]))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientStream {
        dc_diffs: dpcm_encode(&dc),
        ac_runs,
    })
}

/// Inverse of [`analyze`], up to quantization error.
pub fn synthesize(
    stream: &CoefficientStream,
    table: &QuantTable,
    width: usize,
    height: usize,
) -> Result<ImagePlane> {
    let (bx, by) = block_grid(width, height);
    if stream.block_count() != bx * by || stream.ac_runs.len() != bx * by {
        return Err(crate::Error::ShapeError(format!(
            "{width}x{height} needs {} blocks, stream has {}",
            bx * by,
            stream.block_count()
        )));
    }
    let dc = dpcm_decode(&stream.dc_diffs);
    let mut blocks = Vec::with_capacity(dc.len());
    for (i, &d) in dc.iter().enumerate() {
        let mut scan = [0i32; 64];
        scan[0] = d;
        scan[1..].copy_from_slice(&stream.ac_values(i)?);
        let samples = idct(&dequantize(&inverse_zigzag(&scan), table));
        blocks.push(samples.map(|v| v + LEVEL_SHIFT));
    }
    Ok(merge_blocks(&blocks, width, height))
}

pub fn plane_to_symbols(plane: &ImagePlane, quality: u8) -> Result<Vec<Symbol>> {
    let table = QuantTable::with_quality(quality)?;
    symbols::to_symbols(quality, &analyze(plane, &table)?)
}

pub fn symbols_to_plane(syms: &[Symbol], width: usize, height: usize) -> Result<ImagePlane> {
    let (bx, by) = block_grid(width, height);
    let (quality, stream) = symbols::from_symbols(syms, bx * by)?;
    synthesize(&stream, &QuantTable::with_quality(quality)?, width, height)
}

/// Runs the whole chain and returns container bytes.
pub fn compress_plane(plane: &ImagePlane, quality: u8, backend: Codec) -> Result<Vec<u8>> {
    Ok(codec::encode_plane(plane, backend, SourceKind::Pipeline, quality)?.to_bytes())
}

pub fn decompress_plane(bytes: &[u8]) -> Result<ImagePlane> {
    codec::decode_container(&Container::from_bytes(bytes)?)
}
