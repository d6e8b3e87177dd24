//! Compressed DP row: for every score `d`, the smallest column reaching it.
//!
//! The same array serves both measures. In LCSk mode entry `d` is the minimum
//! column at which a chain of exactly `d` blocks ends; in LCSk+ mode it is the
//! minimum end column of a match pair whose score is at least `d`. Either way
//! the array is non-decreasing, entry 0 is the sentinel `0`, and every index
//! past the end reads as [`INFINITY`].
//!
//! Callers store a point's 0-based column `c` as `c + 1` so that the sentinel
//! never collides with a real column.

/// Value of every entry past the end of a [`CompressedRow`].
pub const INFINITY: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedRow {
    thresholds: Vec<usize>,
}

impl Default for CompressedRow {
    fn default() -> Self {
        Self::new()
    }
}

impl CompressedRow {
    pub fn new() -> Self {
        Self {
            thresholds: vec![0],
        }
    }

    /// Builds a row from explicit finite entries.
    ///
    /// Panics unless `thresholds[0] == 0` and the entries are non-decreasing.
    pub fn from_thresholds(thresholds: Vec<usize>) -> Self {
        assert_eq!(thresholds.first(), Some(&0), "thresholds[0] must be 0");
        assert!(
            thresholds.windows(2).all(|w| w[0] <= w[1]),
            "thresholds must be non-decreasing"
        );
        Self { thresholds }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.thresholds
    }

    /// Largest `d` with a finite entry.
    pub fn best(&self) -> usize {
        self.thresholds.len() - 1
    }

    pub fn get(&self, d: usize) -> usize {
        self.thresholds.get(d).copied().unwrap_or(INFINITY)
    }

    /// The unique `d` with `thresholds[d] < j <= thresholds[d + 1]`.
    pub fn query(&self, j: usize) -> usize {
        debug_assert!(j >= 1, "column 0 is reserved for the sentinel");
        self.thresholds.partition_point(|&t| t < j) - 1
    }

    /// `thresholds[d] = min(thresholds[d], j)`. Returns whether the entry changed.
    pub fn update_min(&mut self, d: usize, j: usize) -> bool {
        debug_assert!(d >= 1);
        debug_assert!(d <= self.thresholds.len(), "update would leave a gap");
        debug_assert!(self.get(d - 1) <= j, "sweep order violated at d={d}, j={j}");
        if d == self.thresholds.len() {
            self.thresholds.push(j);
            return true;
        }
        let slot = &mut self.thresholds[d];
        if j < *slot {
            *slot = j;
            self.debug_check();
            true
        } else {
            false
        }
    }

    /// Lowers entries `d, d-1, ..., d-span+1` to `j`, stopping at the first one
    /// that is already `<= j`.
    ///
    /// Returns how many entries were lowered; they are always the topmost
    /// `count` of the range, i.e. `d-count+1 ..= d`.
    pub fn prefix_update_min(&mut self, d: usize, j: usize, span: usize) -> usize {
        debug_assert!(span >= 1 && d >= span, "span {span} out of range for d={d}");
        if d >= self.thresholds.len() {
            self.thresholds.resize(d + 1, INFINITY);
        }
        let mut lowered = 0;
        for idx in (d + 1 - span..=d).rev() {
            let slot = &mut self.thresholds[idx];
            if *slot <= j {
                break;
            }
            *slot = j;
            lowered += 1;
        }
        debug_assert!(
            !self.thresholds.contains(&INFINITY),
            "prefix update at d={d} left unfilled entries"
        );
        self.debug_check();
        lowered
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert!(
            self.thresholds.windows(2).all(|w| w[0] <= w[1]),
            "thresholds lost monotonicity: {:?}",
            self.thresholds
        );
    }
}
