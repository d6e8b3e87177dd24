//! Quadratic reference implementations for verification.
//!
//! Everything here works directly from substring comparisons on the inputs and
//! shares no code with the sparse sweep. Intended for inputs up to a few
//! hundred symbols.

use std::fmt;

use crate::types::{Mode, Segment};

/// Full `(m+1) x (n+1)` DP table; cell `(i, j)` scores `A[0:i)` against `B[0:j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTable {
    pub mode: Mode,
    pub k: usize,
    rows: usize,
    cols: usize,
    values: Vec<usize>,
}

impl DpTable {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.values[i * self.cols + j]
    }

    /// Value at `(m, n)`.
    pub fn result(&self) -> usize {
        self.get(self.rows - 1, self.cols - 1)
    }
}

/// Fills the LCSk (blocks) or LCSk+ (characters) table cell by cell.
///
/// The LCSk+ variant tries every match length `k' >= k` ending at `(i, j)`.
pub fn dp_table<T: PartialEq>(a: &[T], b: &[T], k: usize, mode: Mode) -> DpTable {
    assert!(k >= 1, "k must be at least 1");
    let (m, n) = (a.len(), b.len());
    let cols = n + 1;
    let mut values = vec![0usize; (m + 1) * cols];
    for i in 1..=m {
        for j in 1..=n {
            let mut best = values[(i - 1) * cols + j].max(values[i * cols + j - 1]);
            match mode {
                Mode::Lcsk => {
                    if i >= k && j >= k && a[i - k..i] == b[j - k..j] {
                        best = best.max(values[(i - k) * cols + j - k] + 1);
                    }
                }
                Mode::LcskPlus => {
                    // A[i-kk:i) == B[j-kk:j) holds for kk = 1, 2, ... up to the
                    // first mismatch, so walk back one symbol at a time.
                    let mut kk = 0;
                    while kk < i.min(j) && a[i - kk - 1] == b[j - kk - 1] {
                        kk += 1;
                        if kk >= k {
                            best = best.max(values[(i - kk) * cols + j - kk] + kk);
                        }
                    }
                }
            }
            values[i * cols + j] = best;
        }
    }
    DpTable {
        mode,
        k,
        rows: m + 1,
        cols,
        values,
    }
}

/// Why a chain decomposition is not a valid common subsequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainRejection {
    OutOfBounds { segment: usize },
    Mismatch { segment: usize },
    Overlap { segment: usize },
    TooShort { segment: usize },
    WrongLength { segment: usize },
}

impl fmt::Display for ChainRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfBounds { segment } => write!(f, "segment {segment} runs past the input"),
            Self::Mismatch { segment } => write!(f, "segment {segment} is not a common substring"),
            Self::Overlap { segment } => write!(f, "segment {segment} overlaps its predecessor"),
            Self::TooShort { segment } => write!(f, "segment {segment} is shorter than k"),
            Self::WrongLength { segment } => write!(f, "segment {segment} is not exactly k long"),
        }
    }
}

impl std::error::Error for ChainRejection {}

/// Checks a decomposition and returns its score: the segment count in LCSk
/// mode, the total segment length in LCSk+ mode.
pub fn validate_chain<T: PartialEq>(
    a: &[T],
    b: &[T],
    k: usize,
    mode: Mode,
    segments: &[Segment],
) -> Result<usize, ChainRejection> {
    let mut score = 0;
    for (s, seg) in segments.iter().enumerate() {
        match mode {
            Mode::Lcsk if seg.len != k => return Err(ChainRejection::WrongLength { segment: s }),
            Mode::LcskPlus if seg.len < k => return Err(ChainRejection::TooShort { segment: s }),
            _ => {}
        }
        if seg.i + seg.len > a.len() || seg.j + seg.len > b.len() {
            return Err(ChainRejection::OutOfBounds { segment: s });
        }
        if a[seg.i..seg.i + seg.len] != b[seg.j..seg.j + seg.len] {
            return Err(ChainRejection::Mismatch { segment: s });
        }
        if s > 0 {
            let prev = segments[s - 1];
            if prev.i + prev.len > seg.i || prev.j + prev.len > seg.j {
                return Err(ChainRejection::Overlap { segment: s });
            }
        }
        score += match mode {
            Mode::Lcsk => 1,
            Mode::LcskPlus => seg.len,
        };
    }
    Ok(score)
}

/// A cell `(i, j)` (1-based prefix lengths) where value `q` first appears.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantPoint {
    pub i: usize,
    pub j: usize,
    pub q: usize,
}

/// All q-dominant cells for every `q > 0`.
///
/// Since the table is monotone in both coordinates, a cell is dominated by
/// another cell of equal value weakly above-left of it exactly when its upper
/// or left neighbour already holds that value.
pub fn dominant_points(table: &DpTable) -> Vec<DominantPoint> {
    let mut out = Vec::new();
    for i in 1..table.rows() {
        for j in 1..table.cols() {
            let q = table.get(i, j);
            if q > 0 && table.get(i - 1, j) < q && table.get(i, j - 1) < q {
                out.push(DominantPoint { i, j, q });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: &str, b: &str, k: usize, mode: Mode) -> DpTable {
        dp_table(a.as_bytes(), b.as_bytes(), k, mode)
    }

    #[test]
    fn worked_examples() {
        assert_eq!(t("ABCBA", "ABCBA", 3, Mode::Lcsk).result(), 1);
        assert_eq!(t("ABCBA", "ABCBA", 3, Mode::LcskPlus).result(), 5);
        assert_eq!(t("ABXXXCDE", "ABYYYCDE", 2, Mode::Lcsk).result(), 2);
        assert_eq!(t("ABXXXCDE", "ABYYYCDE", 2, Mode::LcskPlus).result(), 5);
        assert_eq!(t("AAA", "AA", 1, Mode::Lcsk).result(), 2);
        assert_eq!(t("AAA", "AA", 1, Mode::LcskPlus).result(), 2);
        assert_eq!(t("ATTAT", "CTATAGAGTA", 2, Mode::Lcsk).result(), 2);
        assert_eq!(t("ATTAT", "CTATAGAGTA", 2, Mode::LcskPlus).result(), 4);
    }

    #[test]
    fn block_counts_for_unit_tables() {
        // Character-convention values of these tables are k times larger.
        assert_eq!(t("aaaaaaaa", "aaaaaaaa", 2, Mode::Lcsk).result(), 4);
        assert_eq!(t("aabbccdd", "bbaaddcc", 2, Mode::Lcsk).result(), 2);
    }

    #[test]
    fn table_borders_and_monotone() {
        let table = t("ABRACADABRA", "CADABRAB", 2, Mode::LcskPlus);
        for i in 0..table.rows() {
            assert_eq!(table.get(i, 0), 0);
            for j in 1..table.cols() {
                assert_eq!(table.get(0, j), 0);
                assert!(table.get(i, j) >= table.get(i, j - 1));
                if i > 0 {
                    assert!(table.get(i, j) >= table.get(i - 1, j));
                }
            }
        }
    }

    #[test]
    fn validate_attat() {
        let (a, b) = ("ATTAT".as_bytes(), "CTATAGAGTA".as_bytes());
        let chain = [Segment::new(0, 2, 2), Segment::new(2, 8, 2)];
        assert_eq!(validate_chain(a, b, 2, Mode::Lcsk, &chain), Ok(2));
        assert_eq!(validate_chain(a, b, 2, Mode::LcskPlus, &chain), Ok(4));
        let bad = [Segment::new(2, 1, 2), Segment::new(3, 2, 2)];
        assert_eq!(
            validate_chain(a, b, 2, Mode::Lcsk, &bad),
            Err(ChainRejection::Overlap { segment: 1 })
        );
        assert_eq!(validate_chain(a, b, 2, Mode::Lcsk, &[]), Ok(0));
    }

    #[test]
    fn validate_rejections() {
        let (a, b) = ("ATTAT".as_bytes(), "CTATAGAGTA".as_bytes());
        assert_eq!(
            validate_chain(a, b, 2, Mode::Lcsk, &[Segment::new(2, 1, 3)]),
            Err(ChainRejection::WrongLength { segment: 0 })
        );
        assert_eq!(
            validate_chain(a, b, 3, Mode::LcskPlus, &[Segment::new(2, 1, 2)]),
            Err(ChainRejection::TooShort { segment: 0 })
        );
        assert_eq!(
            validate_chain(a, b, 2, Mode::Lcsk, &[Segment::new(0, 0, 2)]),
            Err(ChainRejection::Mismatch { segment: 0 })
        );
        assert_eq!(
            validate_chain(a, b, 2, Mode::Lcsk, &[Segment::new(4, 2, 2)]),
            Err(ChainRejection::OutOfBounds { segment: 0 })
        );
        // b continued: (2,1,3) = "TAT" vs B[1:4) = "TAT".
        assert_eq!(validate_chain(a, b, 2, Mode::LcskPlus, &[Segment::new(2, 1, 3)]), Ok(3));
    }

    #[test]
    fn dominant_points_swapped_blocks() {
        let table = t("aabbccdd", "bbaaddcc", 2, Mode::Lcsk);
        let points = dominant_points(&table);
        assert_eq!(
            points,
            vec![
                DominantPoint { i: 2, j: 4, q: 1 },
                DominantPoint { i: 4, j: 2, q: 1 },
                DominantPoint { i: 6, j: 8, q: 2 },
                DominantPoint { i: 8, j: 6, q: 2 },
            ]
        );
    }

    #[test]
    fn dominant_points_unary() {
        let table = t("aaaaaaaa", "aaaaaaaa", 2, Mode::Lcsk);
        let points = dominant_points(&table);
        assert_eq!(
            points,
            (1..=4).map(|q| DominantPoint { i: 2 * q, j: 2 * q, q }).collect::<Vec<_>>()
        );
    }

    #[test]
    fn dominant_points_of_zero_table() {
        assert!(dominant_points(&t("abc", "xyz", 1, Mode::Lcsk)).is_empty());
    }

    #[test]
    fn neighbour_rule_matches_definition() {
        let table = t("abaabbab", "babbaaba", 2, Mode::LcskPlus);
        let mut literal = Vec::new();
        for i in 0..table.rows() {
            for j in 0..table.cols() {
                let q = table.get(i, j);
                if q == 0 {
                    continue;
                }
                let dominated = (0..=i).any(|x| {
                    (0..=j).any(|y| (x, y) != (i, j) && table.get(x, y) == q)
                });
                if !dominated {
                    literal.push(DominantPoint { i, j, q });
                }
            }
        }
        assert_eq!(dominant_points(&table), literal);
    }
}
