//! Static Huffman coding.
//!
//! The tree is built by repeatedly merging the two lightest nodes. Ties are
//! broken by creation order: leaves are created in probability-model order
//! (descending count, ascending symbol) and merged nodes after them in the
//! order they are formed. The heavier child of each merge takes bit `1`; on
//! equal weights the earlier-created child takes `1`.
//!
//! The decoder never sees a code table: it rebuilds the same tree from the
//! transmitted frequency table.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::bitio::{BitReader, BitSequence, BitWriter};
use crate::symbol_model::{FrequencyTable, ProbabilityModel, Symbol};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Leaf { symbol: Symbol, weight: u64 },
    Internal { zero: usize, one: usize, weight: u64 },
}

impl Node {
    pub fn weight(&self) -> u64 {
        match *self {
            Node::Leaf { weight, .. } | Node::Internal { weight, .. } => weight,
        }
    }
}

/// Arena-allocated Huffman tree. Node indices equal creation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuffmanTree {
    nodes: Vec<Node>,
    root: usize,
}

impl HuffmanTree {
    pub fn build(table: &FrequencyTable) -> Self {
        let model = ProbabilityModel::from_table(table);
        let mut nodes: Vec<Node> = model
            .entries()
            .iter()
            .map(|e| Node::Leaf {
                symbol: e.symbol,
                weight: e.count,
            })
            .collect();
        let mut heap: BinaryHeap<Reverse<(u64, usize)>> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| Reverse((n.weight(), i)))
            .collect();
        while heap.len() > 1 {
            let Reverse((wa, a)) = heap.pop().unwrap();
            let Reverse((wb, b)) = heap.pop().unwrap();
            // `a` sorts before `b`: lighter, or equal weight and older.
            let (one, zero) = if wb > wa { (b, a) } else { (a, b) };
            let weight = wa + wb;
            let id = nodes.len();
            nodes.push(Node::Internal { zero, one, weight });
            heap.push(Reverse((weight, id)));
        }
        let root = nodes.len() - 1;
        Self { nodes, root }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    /// Depth of every leaf, keyed by symbol. A lone root leaf has depth 0.
    pub fn depths(&self) -> BTreeMap<Symbol, u32> {
        let mut out = BTreeMap::new();
        let mut stack = vec![(self.root, 0u32)];
        while let Some((i, d)) = stack.pop() {
            match self.nodes[i] {
                Node::Leaf { symbol, .. } => {
                    out.insert(symbol, d);
                }
                Node::Internal { zero, one, .. } => {
                    stack.push((zero, d + 1));
                    stack.push((one, d + 1));
                }
            }
        }
        out
    }
}

/// One codeword: the low `len` bits of `bits`, MSB first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Codeword {
    pub bits: u128,
    pub len: u32,
}

impl Codeword {
    pub fn to_bit_sequence(self) -> BitSequence {
        BitSequence::from_bits((0..self.len).rev().map(|i| (self.bits >> i) & 1 == 1))
    }

    /// True if `self` is a prefix of `other` (or equal to it).
    pub fn is_prefix_of(&self, other: &Codeword) -> bool {
        self.len <= other.len && (other.bits >> (other.len - self.len)) == self.bits
    }
}

impl std::fmt::Display for Codeword {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in (0..self.len).rev() {
            f.write_str(if (self.bits >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct HuffmanCodebook {
    /// Sorted by symbol.
    codes: Vec<(Symbol, Codeword)>,
    /// symbol -> position in `codes` + 1 (0 = absent)
    index: Vec<u32>,
}

impl HuffmanCodebook {
    pub fn from_tree(tree: &HuffmanTree) -> Self {
        let mut codes = Vec::new();
        if let Node::Leaf { symbol, .. } = tree.nodes[tree.root] {
            codes.push((symbol, Codeword { bits: 0, len: 1 }));
        } else {
            let mut stack = vec![(tree.root, Codeword::default())];
            while let Some((i, code)) = stack.pop() {
                match tree.nodes[i] {
                    Node::Leaf { symbol, .. } => codes.push((symbol, code)),
                    Node::Internal { zero, one, .. } => {
                        assert!(code.len < 128, "Huffman code deeper than 128 bits");
                        let next = |b: u128| Codeword {
                            bits: (code.bits << 1) | b,
                            len: code.len + 1,
                        };
                        stack.push((zero, next(0)));
                        stack.push((one, next(1)));
                    }
                }
            }
        }
        codes.sort_unstable_by_key(|&(s, _)| s);
        let max = codes.last().map_or(0, |&(s, _)| s as usize + 1);
        let mut index = vec![0u32; max];
        for (i, &(s, _)) in codes.iter().enumerate() {
            index[s as usize] = i as u32 + 1;
        }
        Self { codes, index }
    }

    pub fn from_table(table: &FrequencyTable) -> Self {
        Self::from_tree(&HuffmanTree::build(table))
    }

    #[inline]
    pub fn code(&self, symbol: Symbol) -> Option<Codeword> {
        match self.index.get(symbol as usize) {
            Some(&i) if i > 0 => Some(self.codes[i as usize - 1].1),
            _ => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, Codeword)> + '_ {
        self.codes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Total bits needed to code a source with the given counts.
    pub fn weighted_length(&self, table: &FrequencyTable) -> u64 {
        table
            .iter()
            .map(|(s, c)| c * self.code(s).map_or(0, |w| w.len as u64))
            .sum()
    }

    #[inline]
    fn lookup(&self, symbol: Symbol) -> Result<Codeword> {
        self.code(symbol).ok_or(Error::UnknownSymbol(symbol))
    }
}

pub fn encode(symbols: &[Symbol], codebook: &HuffmanCodebook) -> Result<BitSequence> {
    let mut w = BitWriter::with_capacity(symbols.len() * 2);
    encode_into(symbols, codebook, &mut w)?;
    Ok(w.finish())
}

pub fn encode_into(symbols: &[Symbol], codebook: &HuffmanCodebook, w: &mut BitWriter) -> Result<()> {
    for &s in symbols {
        let c = codebook.lookup(s)?;
        if c.len <= 64 {
            w.write_bits(c.bits as u64, c.len);
        } else {
            w.write_bits((c.bits >> 64) as u64, c.len - 64);
            w.write_bits(c.bits as u64, 64);
        }
    }
    Ok(())
}

/// Decodes exactly `count` symbols; every bit of `bits` must be consumed.
pub fn decode(bits: &BitSequence, tree: &HuffmanTree, count: u64) -> Result<Vec<Symbol>> {
    let mut reader = bits.reader();
    let out = decode_from(&mut reader, tree, count)?;
    match reader.remaining() {
        0 => Ok(out),
        n => Err(Error::TrailingGarbage(n)),
    }
}

pub fn decode_from(reader: &mut BitReader<'_>, tree: &HuffmanTree, count: u64) -> Result<Vec<Symbol>> {
    let mut out = Vec::with_capacity(count.min(reader.remaining().max(1)) as usize);
    let truncated = |_| Error::TruncatedStream;
    if let Node::Leaf { symbol, .. } = tree.nodes[tree.root] {
        for _ in 0..count {
            if reader.read_bit().map_err(truncated)? {
                return Err(Error::InvalidCode);
            }
            out.push(symbol);
        }
        return Ok(out);
    }
    for _ in 0..count {
        let mut i = tree.root;
        loop {
            match tree.nodes[i] {
                Node::Leaf { symbol, .. } => {
                    out.push(symbol);
                    break;
                }
                Node::Internal { zero, one, .. } => {
                    i = if reader.read_bit().map_err(truncated)? { one } else { zero };
                }
            }
        }
    }
    Ok(out)
}
