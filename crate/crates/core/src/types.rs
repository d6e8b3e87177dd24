use std::fmt;

use crate::error::Error;

/// A string over integer code points.
///
/// Text input is stored as Unicode scalar values, raw byte input as bytes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sequence {
    symbols: Vec<u32>,
}

impl Sequence {
    pub fn new(symbols: Vec<u32>) -> Self {
        Self { symbols }
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        Self {
            symbols: bytes.iter().map(|&b| u32::from(b)).collect(),
        }
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `X[start:end)`.
    pub fn slice(&self, start: usize, end: usize) -> &[u32] {
        &self.symbols[start..end]
    }

    /// Upper-cases every symbol that is a valid `char`.
    pub fn fold_case(&self) -> Self {
        let symbols = self
            .symbols
            .iter()
            .flat_map(|&s| match char::from_u32(s) {
                Some(c) if c.is_lowercase() => c.to_uppercase().map(u32::from).collect(),
                _ => vec![s],
            })
            .collect();
        Self { symbols }
    }

    /// Checks every symbol against a declared alphabet.
    pub fn check_alphabet(&self, alphabet: AlphabetKind) -> Result<(), Error> {
        for (position, &symbol) in self.symbols.iter().enumerate() {
            if !alphabet.contains(symbol) {
                return Err(Error::InvalidSymbol {
                    symbol,
                    position,
                    alphabet,
                });
            }
        }
        Ok(())
    }
}

impl From<&str> for Sequence {
    fn from(s: &str) -> Self {
        Self {
            symbols: s.chars().map(u32::from).collect(),
        }
    }
}

impl From<Vec<u32>> for Sequence {
    fn from(symbols: Vec<u32>) -> Self {
        Self { symbols }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            match char::from_u32(s) {
                Some(c) => write!(f, "{c}")?,
                None => write!(f, "\\u{{{s:x}}}")?,
            }
        }
        Ok(())
    }
}

/// How the alphabet of a problem instance is determined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum AlphabetKind {
    /// The distinct symbols occurring in the two inputs.
    #[default]
    Discover,
    /// `{A, C, G, T}`.
    Dna,
    /// All 256 byte values.
    Byte,
}

pub(crate) const DNA: [u32; 4] = ['A' as u32, 'C' as u32, 'G' as u32, 'T' as u32];

impl AlphabetKind {
    pub fn contains(self, symbol: u32) -> bool {
        match self {
            AlphabetKind::Discover => true,
            AlphabetKind::Dna => DNA.contains(&symbol),
            AlphabetKind::Byte => symbol < 256,
        }
    }
}

impl fmt::Display for AlphabetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphabetKind::Discover => "discovered",
            AlphabetKind::Dna => "DNA",
            AlphabetKind::Byte => "byte",
        })
    }
}

/// Which similarity measure a solve computes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Exactly-k blocks; scores count blocks.
    Lcsk,
    /// At-least-k substrings; scores count characters.
    #[default]
    LcskPlus,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Lcsk => "lcsk",
            Mode::LcskPlus => "lcskplus",
        })
    }
}

/// Start `(i, j)` of a length-k match: `A[i:i+k) == B[j:j+k)`.
///
/// The match length is not stored; it is shared by every pair of a solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatchPair {
    pub i: usize,
    pub j: usize,
}

impl MatchPair {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn start(self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn end(self, k: usize) -> (usize, usize) {
        (self.i + k - 1, self.j + k - 1)
    }

    /// `self` ends strictly above-left of where `later` starts.
    pub fn precedes(self, later: MatchPair, k: usize) -> bool {
        self.i + k <= later.i && self.j + k <= later.j
    }

    /// `self` starts one diagonal step after `earlier`.
    pub fn continues(self, earlier: MatchPair) -> bool {
        self.i == earlier.i + 1 && self.j == earlier.j + 1
    }
}

impl From<(usize, usize)> for MatchPair {
    fn from((i, j): (usize, usize)) -> Self {
        Self { i, j }
    }
}

/// One common substring `A[i:i+len) == B[j:j+len)` of a chain decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub i: usize,
    pub j: usize,
    pub len: usize,
}

impl Segment {
    pub const fn new(i: usize, j: usize, len: usize) -> Self {
        Self { i, j, len }
    }
}
