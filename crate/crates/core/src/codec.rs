//! Glue between image sources, the entropy coders and the container.

use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::bitio::BitSequence;
use crate::container::Container;
use crate::huffman::{self, HuffmanCodebook, HuffmanTree};
use crate::pipeline::{self, block_grid, ImagePlane};
use crate::symbol_model::{FrequencyTable, ProbabilityModel, Symbol};
use crate::{Error, Result};

/// Largest plane a container may describe.
pub const MAX_PIXELS: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Codec {
    Huffman,
    Arithmetic,
}

impl Codec {
    pub const ALL: [Codec; 2] = [Codec::Huffman, Codec::Arithmetic];

    pub fn id(self) -> u8 {
        match self {
            Codec::Huffman => 0,
            Codec::Arithmetic => 1,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            0 => Some(Codec::Huffman),
            1 => Some(Codec::Arithmetic),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Codec::Huffman => "huffman",
            Codec::Arithmetic => "arithmetic",
        }
    }
}

impl fmt::Display for Codec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Codec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "huffman" => Ok(Codec::Huffman),
            "arith" | "arithmetic" => Ok(Codec::Arithmetic),
            _ => Err(Error::BadConfig(format!("unknown codec {s:?}"))),
        }
    }
}

/// What the entropy coder sees: raw 8-bit samples, or pipeline symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SourceKind {
    Raw,
    Pipeline,
}

impl SourceKind {
    pub fn id(self) -> u8 {
        match self {
            SourceKind::Raw => 0,
            SourceKind::Pipeline => 1,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            0 => Some(SourceKind::Raw),
            1 => Some(SourceKind::Pipeline),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SourceKind::Raw => "raw",
            SourceKind::Pipeline => "pipeline",
        }
    }
}

impl fmt::Display for SourceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SourceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(SourceKind::Raw),
            "pipeline" => Ok(SourceKind::Pipeline),
            _ => Err(Error::BadConfig(format!("unknown source {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Encoded {
    pub table: FrequencyTable,
    pub payload: BitSequence,
}

/// Two-pass static coding: count, build the model, code.
pub fn entropy_encode(codec: Codec, symbols: &[Symbol]) -> Result<Encoded> {
    let table = FrequencyTable::build(symbols)?;
    let payload = match codec {
        Codec::Huffman => huffman::encode(symbols, &HuffmanCodebook::from_table(&table))?,
        Codec::Arithmetic => arith::encode(symbols, &ProbabilityModel::from_table(&table))?,
    };
    Ok(Encoded { table, payload })
}

pub fn entropy_decode(
    codec: Codec,
    table: &FrequencyTable,
    payload: &BitSequence,
    count: u64,
) -> Result<Vec<Symbol>> {
    match codec {
        Codec::Huffman => huffman::decode(payload, &HuffmanTree::build(table), count),
        Codec::Arithmetic => arith::decode(payload, &ProbabilityModel::from_table(table), count),
    }
}

pub fn source_symbols(plane: &ImagePlane, source: SourceKind, quality: u8) -> Result<Vec<Symbol>> {
    match source {
        SourceKind::Raw => Ok(plane.samples().iter().map(|&s| s as Symbol).collect()),
        SourceKind::Pipeline => pipeline::plane_to_symbols(plane, quality),
    }
}

fn dims(plane: &ImagePlane) -> Result<(u32, u32)> {
    let conv = |v: usize| u32::try_from(v).map_err(|_| Error::ShapeError("plane too large".into()));
    Ok((conv(plane.width())?, conv(plane.height())?))
}

pub fn encode_symbols(
    symbols: &[Symbol],
    codec: Codec,
    source: SourceKind,
    width: u32,
    height: u32,
) -> Result<Container> {
    let Encoded { table, payload } = entropy_encode(codec, symbols)?;
    Container::new(codec, source, width, height, symbols.len() as u64, table, payload)
}

pub fn encode_plane(plane: &ImagePlane, codec: Codec, source: SourceKind, quality: u8) -> Result<Container> {
    let symbols = source_symbols(plane, source, quality)?;
    let (w, h) = dims(plane)?;
    encode_symbols(&symbols, codec, source, w, h)
}

/// Largest symbol count a well-formed container of this shape can carry.
fn symbol_bounds(source: SourceKind, width: u64, height: u64) -> (u64, u64) {
    match source {
        SourceKind::Raw => (width * height, width * height),
        SourceKind::Pipeline => {
            let (bx, by) = block_grid(width as usize, height as usize);
            let blocks = (bx * by) as u64;
            (1 + 2 * blocks, 1 + blocks * (2 + 2 * 63))
        }
    }
}

pub fn decode_container(c: &Container) -> Result<ImagePlane> {
    let (w, h) = (c.width() as u64, c.height() as u64);
    if w == 0 || h == 0 || w * h > MAX_PIXELS {
        return Err(Error::BadContainer(format!("unsupported dimensions {w}x{h}")));
    }
    let (lo, hi) = symbol_bounds(c.source(), w, h);
    if !(lo..=hi).contains(&c.symbol_count()) {
        return Err(Error::BadContainer(format!(
            "{} symbols cannot describe a {w}x{h} {} image",
            c.symbol_count(),
            c.source()
        )));
    }
    let symbols = entropy_decode(c.codec(), c.table(), c.payload(), c.symbol_count())?;
    match c.source() {
        SourceKind::Raw => {
            let samples = symbols
                .into_iter()
                .map(|s| u8::try_from(s).map_err(|_| Error::BadContainer(format!("raw sample {s} > 255"))))
                .collect::<Result<Vec<u8>>>()?;
            ImagePlane::new(w as usize, h as usize, samples)
        }
        SourceKind::Pipeline => pipeline::symbols_to_plane(&symbols, w as usize, h as usize),
    }
}

/// Original bits over compressed bits.
pub fn compression_ratio(original_bits: u64, compressed_bits: u64) -> Result<f64> {
    if compressed_bits == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(original_bits as f64 / compressed_bits as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio() {
        assert_eq!(compression_ratio(1000, 250).unwrap(), 4.0);
        assert_eq!(compression_ratio(77, 77).unwrap(), 1.0);
        assert!(matches!(compression_ratio(1, 0), Err(Error::DivisionByZero)));
        let b0 = 512 * 512 * 8;
        let r = compression_ratio(b0, (b0 as f64 / 5.27).round() as u64).unwrap();
        assert!((r - 5.27).abs() < 1e-5);
    }

    #[test]
    fn names_parse() {
        assert_eq!("arith".parse::<Codec>().unwrap(), Codec::Arithmetic);
        assert_eq!("huffman".parse::<Codec>().unwrap(), Codec::Huffman);
        assert!("lzw".parse::<Codec>().is_err());
        assert_eq!("pipeline".parse::<SourceKind>().unwrap(), SourceKind::Pipeline);
        assert_eq!(Codec::from_id(7), None);
    }

    #[test]
    fn raw_roundtrip_both_codecs() {
        let plane = ImagePlane::from_fn(19, 7, |x, y| (x * y % 256) as u8);
        for codec in Codec::ALL {
            let c = encode_plane(&plane, codec, SourceKind::Raw, 75).unwrap();
            assert_eq!(decode_container(&c).unwrap(), plane);
        }
    }
}
