//! The `ENTC` container.
//!
//! All integers big-endian:
//!
//! ```text
//! "ENTC" | version u8 = 1 | codec u8 | source u8 | width u32 | height u32
//! | symbol_count u64 | entry_count u16 | (symbol u16, count u32) * entry_count
//! | payload_bit_length u64 | payload bytes
//! ```
//!
//! The entries are the frequency table; decoders rebuild their model from
//! it. Payload bytes are exactly `ceil(bit_length / 8)` with zero padding.

use crate::bitio::BitSequence;
use crate::codec::{Codec, SourceKind};
use crate::symbol_model::FrequencyTable;
use crate::{Error, Result};

pub const MAGIC: &[u8; 4] = b"ENTC";
pub const VERSION: u8 = 1;
const FIXED_HEADER: usize = 4 + 1 + 1 + 1 + 4 + 4 + 8 + 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Container {
    codec: Codec,
    source: SourceKind,
    width: u32,
    height: u32,
    symbol_count: u64,
    table: FrequencyTable,
    payload: BitSequence,
}

impl Container {
    pub fn new(
        codec: Codec,
        source: SourceKind,
        width: u32,
        height: u32,
        symbol_count: u64,
        table: FrequencyTable,
        payload: BitSequence,
    ) -> Result<Self> {
        if table.len() > u16::MAX as usize {
            return Err(Error::BadContainer(format!("{} model entries do not fit u16", table.len())));
        }
        if let Some((s, c)) = table.iter().find(|&(_, c)| c > u32::MAX as u64) {
            return Err(Error::BadContainer(format!("count {c} of symbol {s} does not fit u32")));
        }
        if table.total() != symbol_count {
            return Err(Error::BadContainer(format!(
                "model totals {} but symbol count is {symbol_count}",
                table.total()
            )));
        }
        Ok(Self {
            codec,
            source,
            width,
            height,
            symbol_count,
            table,
            payload,
        })
    }

    pub fn codec(&self) -> Codec {
        self.codec
    }

    pub fn source(&self) -> SourceKind {
        self.source
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn symbol_count(&self) -> u64 {
        self.symbol_count
    }

    pub fn table(&self) -> &FrequencyTable {
        &self.table
    }

    pub fn payload(&self) -> &BitSequence {
        &self.payload
    }

    /// Serialized size in bytes.
    pub fn byte_len(&self) -> usize {
        FIXED_HEADER + 6 * self.table.len() + 8 + self.payload.bytes().len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.byte_len());
        out.extend_from_slice(MAGIC);
        out.push(VERSION);
        out.push(self.codec.id());
        out.push(self.source.id());
        out.extend_from_slice(&self.width.to_be_bytes());
        out.extend_from_slice(&self.height.to_be_bytes());
        out.extend_from_slice(&self.symbol_count.to_be_bytes());
        out.extend_from_slice(&(self.table.len() as u16).to_be_bytes());
        for (symbol, count) in self.table.iter() {
            out.extend_from_slice(&symbol.to_be_bytes());
            out.extend_from_slice(&(count as u32).to_be_bytes());
        }
        out.extend_from_slice(&self.payload.bit_len().to_be_bytes());
        out.extend_from_slice(self.payload.bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Cursor { bytes, pos: 0 };
        if r.take(4)? != MAGIC {
            return Err(Error::BadContainer("bad magic".into()));
        }
        let version = r.u8()?;
        if version != VERSION {
            return Err(Error::BadContainer(format!("unsupported version {version}")));
        }
        let codec_id = r.u8()?;
        let codec = Codec::from_id(codec_id)
            .ok_or_else(|| Error::BadContainer(format!("unknown codec id {codec_id}")))?;
        let source_id = r.u8()?;
        let source = SourceKind::from_id(source_id)
            .ok_or_else(|| Error::BadContainer(format!("unknown source id {source_id}")))?;
        let width = r.u32()?;
        let height = r.u32()?;
        let symbol_count = r.u64()?;
        let entries = r.u16()? as usize;
        if entries == 0 {
            return Err(Error::BadContainer("empty frequency table".into()));
        }
        let mut pairs = Vec::with_capacity(entries);
        for _ in 0..entries {
            let symbol = r.u16()?;
            let count = r.u32()? as u64;
            // one byte form per container: entries strictly ascending
            if pairs.last().is_some_and(|&(prev, _)| prev >= symbol) {
                return Err(Error::BadContainer(format!("table entry {symbol} out of order")));
            }
            pairs.push((symbol, count));
        }
        let table =
            FrequencyTable::from_counts(pairs).map_err(|e| Error::BadContainer(e.to_string()))?;
        let bit_len = r.u64()?;
        let rest = &bytes[r.pos..];
        let payload = BitSequence::from_parts(rest.to_vec(), bit_len)?;
        Self::new(codec, source, width, height, symbol_count, table, payload)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| Error::BadContainer("truncated header".into()))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_be_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_be_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_be_bytes(self.take(8)?.try_into().unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::encode_symbols;
    use proptest::prelude::*;

    fn minimal() -> Container {
        let table = FrequencyTable::from_counts([(3, 1)]).unwrap();
        Container::new(Codec::Huffman, SourceKind::Raw, 1, 1, 1, table, BitSequence::default()).unwrap()
    }

    #[test]
    fn minimal_layout() {
        let bytes = minimal().to_bytes();
        let mut want = b"ENTC".to_vec();
        want.extend([1, 0, 0]);
        want.extend([0, 0, 0, 1, 0, 0, 0, 1]);
        want.extend(1u64.to_be_bytes());
        want.extend([0, 1, 0, 3, 0, 0, 0, 1]);
        want.extend(0u64.to_be_bytes());
        assert_eq!(bytes, want);
        assert_eq!(bytes.len(), minimal().byte_len());
        assert_eq!(Container::from_bytes(&bytes).unwrap().to_bytes(), bytes);
    }

    #[test]
    fn rejects_corruption() {
        let good = minimal().to_bytes();
        let mut b = good.clone();
        b[5] = 7;
        assert!(matches!(Container::from_bytes(&b), Err(Error::BadContainer(_))));
        let mut b = good.clone();
        b[0] = b'X';
        assert!(Container::from_bytes(&b).is_err());
        let mut b = good.clone();
        b[4] = 2;
        assert!(Container::from_bytes(&b).is_err());
        let mut b = good.clone();
        b.push(0);
        assert!(Container::from_bytes(&b).is_err());
        assert!(Container::from_bytes(&good[..good.len() - 1]).is_err());
        // total of counts disagrees with symbol_count
        let mut b = good.clone();
        b[22] = 2;
        assert!(Container::from_bytes(&b).is_err());
    }

    #[test]
    fn rejects_unsorted_table() {
        let table = FrequencyTable::from_counts([(3, 1), (9, 1)]).unwrap();
        let c = Container::new(Codec::Huffman, SourceKind::Raw, 2, 1, 2, table, BitSequence::from_str_bits("01"))
            .unwrap();
        let mut b = c.to_bytes();
        // swap the two entries
        let e = 25;
        let (first, second) = (b[e..e + 6].to_vec(), b[e + 6..e + 12].to_vec());
        b[e..e + 6].copy_from_slice(&second);
        b[e + 6..e + 12].copy_from_slice(&first);
        assert!(matches!(Container::from_bytes(&b), Err(Error::BadContainer(_))));
    }

    #[test]
    fn huffman_payload_of_two_symbols() {
        let t1: Vec<u16> = [(0u16, 100), (2, 10), (14, 9), (136, 7), (222, 5)]
            .iter()
            .flat_map(|&(s, n)| std::iter::repeat_n(s, n))
            .collect();
        let table = FrequencyTable::build(&t1).unwrap();
        let book = crate::huffman::HuffmanCodebook::from_table(&table);
        let payload = crate::huffman::encode(&[0, 2], &book).unwrap();
        assert_eq!(payload.bit_len(), 4);
        let c = Container::new(Codec::Huffman, SourceKind::Raw, 2, 1, 131, table, payload).unwrap();
        let back = Container::from_bytes(&c.to_bytes()).unwrap();
        assert_eq!(back.payload().bit_len(), 4);
        assert_eq!(back, c);
    }

    proptest! {
        #[test]
        fn read_write_identity(
            msg in prop::collection::vec(any::<u16>(), 1..300),
            arith in any::<bool>(),
            pipeline in any::<bool>(),
            w in any::<u32>(), h in any::<u32>(),
        ) {
            let codec = if arith { Codec::Arithmetic } else { Codec::Huffman };
            let source = if pipeline { SourceKind::Pipeline } else { SourceKind::Raw };
            let c = encode_symbols(&msg, codec, source, w, h).unwrap();
            let bytes = c.to_bytes();
            let back = Container::from_bytes(&bytes).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(back.to_bytes(), bytes);
        }
    }
}
