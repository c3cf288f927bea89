//! Symbol statistics shared by both entropy coders.
//!
//! A [`FrequencyTable`] holds exact occurrence counts; a [`ProbabilityModel`]
//! orders those counts (descending probability, ties by ascending symbol) and
//! assigns each symbol a half-open cumulative range `[low, high)` of `[0, 1)`.
//! All probabilities are exact rationals `count / total`.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::{Error, Result};

/// A coded symbol. Raw samples use `0..=255`; pipeline streams use the full
/// 16-bit alphabet.
pub type Symbol = u16;

const ALPHABET: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: BTreeMap<Symbol, u64>,
    total: u64,
}

impl FrequencyTable {
    /// Counts every symbol in `symbols`.
    pub fn build(symbols: &[Symbol]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut dense = vec![0u64; ALPHABET];
        for &s in symbols {
            dense[s as usize] += 1;
        }
        let counts: BTreeMap<Symbol, u64> = dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(s, &c)| (s as Symbol, c))
            .collect();
        Ok(Self {
            counts,
            total: symbols.len() as u64,
        })
    }

    /// Builds a table from explicit `(symbol, count)` pairs, as read back from
    /// a container.
    pub fn from_counts<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Symbol, u64)>,
    {
        let mut counts = BTreeMap::new();
        let mut total: u64 = 0;
        for (symbol, count) in pairs {
            if count == 0 {
                return Err(Error::BadConfig(format!("symbol {symbol} has zero count")));
            }
            if counts.insert(symbol, count).is_some() {
                return Err(Error::BadConfig(format!("symbol {symbol} listed twice")));
            }
            total = total
                .checked_add(count)
                .ok_or_else(|| Error::BadConfig("total count overflows".into()))?;
        }
        if counts.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { counts, total })
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, symbol: Symbol) -> Option<u64> {
        self.counts.get(&symbol).copied()
    }

    /// Entries in ascending symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, u64)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }

    /// Shannon entropy in bits per symbol.
    pub fn entropy_bits(&self) -> f64 {
        let total = self.total as f64;
        self.counts
            .values()
            .map(|&c| {
                let p = c as f64 / total;
                -p * p.log2()
            })
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelEntry {
    pub symbol: Symbol,
    pub count: u64,
    /// Sum of the counts of all entries ordered before this one.
    pub cumulative: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityModel {
    entries: Vec<ModelEntry>,
    index: BTreeMap<Symbol, usize>,
    total: u64,
}

impl ProbabilityModel {
    pub fn from_table(table: &FrequencyTable) -> Self {
        let mut pairs: Vec<(Symbol, u64)> = table.iter().collect();
        pairs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut cumulative = 0;
        let entries: Vec<ModelEntry> = pairs
            .into_iter()
            .map(|(symbol, count)| {
                let e = ModelEntry {
                    symbol,
                    count,
                    cumulative,
                };
                cumulative += count;
                e
            })
            .collect();
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.symbol, i))
            .collect();
        Self {
            entries,
            index,
            total: table.total(),
        }
    }

    pub fn entries(&self) -> &[ModelEntry] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Position of `symbol` in model order.
    pub fn position(&self, symbol: Symbol) -> Option<usize> {
        self.index.get(&symbol).copied()
    }

    pub fn entry(&self, symbol: Symbol) -> Result<&ModelEntry> {
        self.position(symbol)
            .map(|i| &self.entries[i])
            .ok_or(Error::UnknownSymbol(symbol))
    }

    pub fn probability(&self, symbol: Symbol) -> Result<Ratio<u64>> {
        let e = self.entry(symbol)?;
        Ok(Ratio::new(e.count, self.total))
    }

    /// The half-open cumulative range `[low, high)` assigned to `symbol`.
    pub fn lookup_range(&self, symbol: Symbol) -> Result<(Ratio<u64>, Ratio<u64>)> {
        let e = self.entry(symbol)?;
        Ok((
            Ratio::new(e.cumulative, self.total),
            Ratio::new(e.cumulative + e.count, self.total),
        ))
    }
}

impl From<&FrequencyTable> for ProbabilityModel {
    fn from(table: &FrequencyTable) -> Self {
        Self::from_table(table)
    }
}
