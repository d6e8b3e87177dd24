//! Enumeration of all k-length match pairs in row-major order.
//!
//! Two interchangeable back ends build a per-row index of matching columns:
//! perfect k-mer hashing (when `|Σ|^k` fits a 64-bit word) and a suffix array
//! with LCP grouping over `B#A` (any alphabet, any k). Both keep only
//! `O(m + n)` words; the pairs of a row are served as a slice on demand, so
//! the stream never buffers whole rows.

mod kmer;
mod suffix;

use std::collections::BTreeSet;
use std::fmt;

pub use kmer::{fingerprint_fits, fingerprints, KmerIndex};
pub use suffix::{build_lcp, build_suffix_array, SuffixStructures};

use crate::error::{Error, Result};
use crate::types::{AlphabetKind, MatchPair, Sequence, DNA};
use suffix::SuffixGroups;

/// Back end that produced a [`MatchPairStream`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Hashing,
    SuffixArray,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Hashing => "hashing",
            Generator::SuffixArray => "suffix-array",
        })
    }
}

/// Requested back end; `Auto` prefers hashing when it is feasible.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GeneratorChoice {
    #[default]
    Auto,
    Hashing,
    SuffixArray,
}

/// Start and end events of one row.
///
/// `starts` holds the columns of pairs starting in `row`; `ends` holds the
/// start columns of pairs starting in `row - k + 1`, i.e. ending in `row`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowEvents<'a> {
    pub row: usize,
    pub k: usize,
    pub starts: &'a [usize],
    pub ends: &'a [usize],
}

impl<'a> RowEvents<'a> {
    pub fn start_pairs(&self) -> impl Iterator<Item = MatchPair> + 'a {
        let row = self.row;
        self.starts.iter().map(move |&j| MatchPair::new(row, j))
    }

    pub fn end_pairs(&self) -> impl Iterator<Item = MatchPair> + 'a {
        let row = self.row + 1 - self.k;
        self.ends.iter().map(move |&j| MatchPair::new(row, j))
    }

    /// Number of pairs starting in this row.
    pub fn width(&self) -> usize {
        self.starts.len()
    }
}

#[derive(Clone, Debug)]
enum RowIndex {
    Empty,
    Kmer {
        index: KmerIndex,
        row_fingerprints: Vec<u64>,
    },
    Suffix(SuffixGroups),
}

/// All match pairs of `A` and `B`, row by row.
#[derive(Clone, Debug)]
pub struct MatchPairStream {
    index: RowIndex,
    generator: Generator,
    k: usize,
    rows: usize,
    cursor: usize,
    total: u64,
}

impl MatchPairStream {
    fn new(index: RowIndex, generator: Generator, k: usize, rows: usize) -> Self {
        let mut stream = Self {
            index,
            generator,
            k,
            rows,
            cursor: 0,
            total: 0,
        };
        stream.total = (0..rows).map(|i| stream.starts(i).len() as u64).sum();
        stream
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    /// Number of rows, `m`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Total number of match pairs, `r`.
    pub fn total_pairs(&self) -> u64 {
        self.total
    }

    /// Ascending columns of the pairs starting in `row`.
    pub fn starts(&self, row: usize) -> &[usize] {
        match &self.index {
            RowIndex::Empty => &[],
            RowIndex::Kmer {
                index,
                row_fingerprints,
            } => match row_fingerprints.get(row) {
                Some(&fp) => index.columns_for(fp),
                None => &[],
            },
            RowIndex::Suffix(groups) => groups.columns(row),
        }
    }

    pub fn events_for_row(&self, row: usize) -> RowEvents<'_> {
        let ends = match (row + 1).checked_sub(self.k) {
            Some(start_row) => self.starts(start_row),
            None => &[],
        };
        RowEvents {
            row,
            k: self.k,
            starts: self.starts(row),
            ends,
        }
    }

    /// Events of the next unvisited row.
    pub fn next_row(&mut self) -> Option<RowEvents<'_>> {
        if self.cursor >= self.rows {
            return None;
        }
        self.cursor += 1;
        Some(self.events_for_row(self.cursor - 1))
    }

    /// Every pair in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = MatchPair> + '_ {
        (0..self.rows).flat_map(move |i| self.starts(i).iter().map(move |&j| MatchPair::new(i, j)))
    }

    pub fn pair_set(&self) -> BTreeSet<MatchPair> {
        self.pairs().collect()
    }
}

/// Dense digit encoding of both inputs plus the alphabet size.
struct Encoded {
    a: Vec<u32>,
    b: Vec<u32>,
    sigma: usize,
}

/// Order-preserving ranks `0..sigma` over the symbols occurring in `a` or `b`.
fn encode_discovered(a: &Sequence, b: &Sequence) -> Encoded {
    let mut symbols: Vec<u32> = a.symbols().iter().chain(b.symbols()).copied().collect();
    symbols.sort_unstable();
    symbols.dedup();
    let rank = |s: &u32| symbols.binary_search(s).expect("symbol collected above") as u32;
    Encoded {
        a: a.symbols().iter().map(rank).collect(),
        b: b.symbols().iter().map(rank).collect(),
        sigma: symbols.len(),
    }
}

fn encode(a: &Sequence, b: &Sequence, alphabet: AlphabetKind) -> Result<Encoded> {
    match alphabet {
        AlphabetKind::Discover => Ok(encode_discovered(a, b)),
        AlphabetKind::Dna => {
            a.check_alphabet(alphabet)?;
            b.check_alphabet(alphabet)?;
            let digit = |s: &u32| DNA.iter().position(|d| d == s).expect("checked") as u32;
            Ok(Encoded {
                a: a.symbols().iter().map(digit).collect(),
                b: b.symbols().iter().map(digit).collect(),
                sigma: DNA.len(),
            })
        }
        AlphabetKind::Byte => {
            a.check_alphabet(alphabet)?;
            b.check_alphabet(alphabet)?;
            Ok(Encoded {
                a: a.symbols().to_vec(),
                b: b.symbols().to_vec(),
                sigma: 256,
            })
        }
    }
}

/// Alphabet size the hashing back end would use.
pub fn alphabet_size(a: &Sequence, b: &Sequence, alphabet: AlphabetKind) -> usize {
    match alphabet {
        AlphabetKind::Discover => encode_discovered(a, b).sigma,
        AlphabetKind::Dna => DNA.len(),
        AlphabetKind::Byte => 256,
    }
}

/// Whether [`generate_by_hashing`] accepts this instance.
pub fn hashing_feasible(a: &Sequence, b: &Sequence, k: usize, alphabet: AlphabetKind) -> bool {
    fingerprint_fits(alphabet_size(a, b, alphabet), k)
}

pub fn generate_by_hashing(
    a: &Sequence,
    b: &Sequence,
    k: usize,
    alphabet: AlphabetKind,
) -> Result<MatchPairStream> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let enc = encode(a, b, alphabet)?;
    if !fingerprint_fits(enc.sigma, k) {
        return Err(Error::AlphabetTooLarge {
            alphabet_size: enc.sigma,
            k,
        });
    }
    let rows = a.len();
    if k > a.len().min(b.len()) {
        return Ok(MatchPairStream::new(RowIndex::Empty, Generator::Hashing, k, rows));
    }
    let index = KmerIndex::build(&enc.b, enc.sigma, k);
    let row_fingerprints = fingerprints(&enc.a, enc.sigma, k);
    Ok(MatchPairStream::new(
        RowIndex::Kmer {
            index,
            row_fingerprints,
        },
        Generator::Hashing,
        k,
        rows,
    ))
}

pub fn generate_by_suffix_array(a: &Sequence, b: &Sequence, k: usize) -> Result<MatchPairStream> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let rows = a.len();
    if k > a.len().min(b.len()) {
        return Ok(MatchPairStream::new(RowIndex::Empty, Generator::SuffixArray, k, rows));
    }
    let enc = encode_discovered(a, b);
    let shift = |v: Vec<u32>| -> Vec<u32> { v.into_iter().map(|c| c + 1).collect() };
    let groups = SuffixGroups::build(&shift(enc.a), &shift(enc.b), k);
    Ok(MatchPairStream::new(
        RowIndex::Suffix(groups),
        Generator::SuffixArray,
        k,
        rows,
    ))
}

/// Dispatches on `choice`; `Auto` falls back to the suffix array when hashing
/// is infeasible.
pub fn generate(
    a: &Sequence,
    b: &Sequence,
    k: usize,
    choice: GeneratorChoice,
    alphabet: AlphabetKind,
) -> Result<MatchPairStream> {
    match choice {
        GeneratorChoice::Hashing => generate_by_hashing(a, b, k, alphabet),
        GeneratorChoice::SuffixArray => {
            if alphabet != AlphabetKind::Discover {
                a.check_alphabet(alphabet)?;
                b.check_alphabet(alphabet)?;
            }
            generate_by_suffix_array(a, b, k)
        }
        GeneratorChoice::Auto => {
            if k > 0 && hashing_feasible(a, b, k, alphabet) {
                generate_by_hashing(a, b, k, alphabet)
            } else {
                generate(a, b, k, GeneratorChoice::SuffixArray, alphabet)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequence {
        Sequence::from(s)
    }

    fn brute(a: &str, b: &str, k: usize) -> BTreeSet<MatchPair> {
        let (a, b) = (a.as_bytes(), b.as_bytes());
        let mut out = BTreeSet::new();
        if k > a.len() || k > b.len() {
            return out;
        }
        for i in 0..=a.len() - k {
            for j in 0..=b.len() - k {
                if a[i..i + k] == b[j..j + k] {
                    out.insert(MatchPair::new(i, j));
                }
            }
        }
        out
    }

    fn set(pairs: &[(usize, usize)]) -> BTreeSet<MatchPair> {
        pairs.iter().map(|&p| MatchPair::from(p)).collect()
    }

    fn both(a: &str, b: &str, k: usize) -> (BTreeSet<MatchPair>, BTreeSet<MatchPair>) {
        let h = generate_by_hashing(&seq(a), &seq(b), k, AlphabetKind::Discover).unwrap();
        let s = generate_by_suffix_array(&seq(a), &seq(b), k).unwrap();
        (h.pair_set(), s.pair_set())
    }

    #[test]
    fn attat_pairs() {
        let expected = set(&[(0, 2), (2, 1), (2, 3), (2, 8), (3, 2)]);
        let (h, s) = both("ATTAT", "CTATAGAGTA", 2);
        assert_eq!(h, expected);
        assert_eq!(s, expected);
    }

    #[test]
    fn unary_alphabet() {
        let expected = set(&[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]);
        let (h, s) = both("AAA", "AA", 1);
        assert_eq!(h, expected);
        assert_eq!(s, expected);
    }

    #[test]
    fn sparse_instance() {
        let expected = set(&[(0, 0), (5, 5), (6, 6)]);
        assert_eq!(brute("ABXXXCDE", "ABYYYCDE", 2), expected);
        let (h, s) = both("ABXXXCDE", "ABYYYCDE", 2);
        assert_eq!(h, expected);
        assert_eq!(s, expected);
    }

    #[test]
    fn self_comparison_k3() {
        let expected = set(&[(0, 0), (1, 1), (2, 2)]);
        let (h, s) = both("ABCBA", "ABCBA", 3);
        assert_eq!(h, expected);
        assert_eq!(s, expected);
    }

    #[test]
    fn empty_and_oversized_k() {
        let (h, s) = both("", "ABC", 1);
        assert!(h.is_empty() && s.is_empty());
        let (h, s) = both("AB", "ABC", 3);
        assert!(h.is_empty() && s.is_empty());
        let stream = generate_by_suffix_array(&seq("AB"), &seq("ABC"), 3).unwrap();
        assert_eq!(stream.rows(), 2);
        assert_eq!(stream.total_pairs(), 0);
    }

    #[test]
    fn hashing_rejects_wide_fingerprints() {
        let err = generate_by_hashing(&seq("ACGT"), &seq("ACGT"), 40, AlphabetKind::Dna).unwrap_err();
        assert_eq!(
            err,
            Error::AlphabetTooLarge {
                alphabet_size: 4,
                k: 40
            }
        );
        // Auto falls back and still works.
        let stream = generate(&seq("ACGT"), &seq("ACGT"), 40, GeneratorChoice::Auto, AlphabetKind::Dna).unwrap();
        assert_eq!(stream.generator(), Generator::SuffixArray);
        assert_eq!(stream.total_pairs(), 0);
    }

    #[test]
    fn declared_alphabet_is_enforced() {
        let err = generate_by_hashing(&seq("ACGN"), &seq("ACGT"), 2, AlphabetKind::Dna).unwrap_err();
        assert!(matches!(err, Error::InvalidSymbol { position: 3, .. }));
        let err = generate(&seq("ACGT"), &seq("ACxT"), 2, GeneratorChoice::SuffixArray, AlphabetKind::Dna)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidSymbol { position: 2, .. }));
    }

    #[test]
    fn events_attat() {
        let stream =
            generate_by_hashing(&seq("ATTAT"), &seq("CTATAGAGTA"), 2, AlphabetKind::Discover).unwrap();
        let row3 = stream.events_for_row(3);
        assert_eq!(row3.start_pairs().collect::<Vec<_>>(), vec![MatchPair::new(3, 2)]);
        let ends: Vec<_> = row3.end_pairs().collect();
        assert_eq!(ends, vec![MatchPair::new(2, 1), MatchPair::new(2, 3), MatchPair::new(2, 8)]);
        assert_eq!(
            ends.iter().map(|p| p.end(2)).collect::<Vec<_>>(),
            vec![(3, 2), (3, 4), (3, 9)]
        );

        let row0 = stream.events_for_row(0);
        assert!(row0.ends.is_empty());
        let row1 = stream.events_for_row(1);
        assert!(row1.starts.is_empty());
        assert_eq!(row1.end_pairs().collect::<Vec<_>>(), vec![MatchPair::new(0, 2)]);
        assert_eq!(MatchPair::new(0, 2).end(2), (1, 3));
    }

    #[test]
    fn next_row_visits_every_row_once() {
        let mut stream =
            generate_by_hashing(&seq("ATTAT"), &seq("CTATAGAGTA"), 2, AlphabetKind::Discover).unwrap();
        let mut rows = Vec::new();
        let mut ends = 0;
        while let Some(ev) = stream.next_row() {
            rows.push(ev.row);
            ends += ev.ends.len();
        }
        assert_eq!(rows, vec![0, 1, 2, 3, 4]);
        assert_eq!(ends, 5);
        assert_eq!(stream.total_pairs(), 5);
    }

    #[test]
    fn byte_alphabet_k_limit() {
        assert!(hashing_feasible(&seq("ab"), &seq("ab"), 8, AlphabetKind::Byte));
        assert!(!hashing_feasible(&seq("ab"), &seq("ab"), 9, AlphabetKind::Byte));
        assert!(hashing_feasible(&seq("ab"), &seq("ab"), 64, AlphabetKind::Discover));
    }
}
