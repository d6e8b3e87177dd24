//! Perfect k-mer hashing: a k-mer over digits `0..sigma` read as a base-`sigma`
//! number is injective as long as `sigma^k` fits in 64 bits.

use std::collections::HashMap;
use std::ops::Range;

/// Whether every k-mer over `sigma` symbols has a distinct 64-bit fingerprint.
pub fn fingerprint_fits(sigma: usize, k: usize) -> bool {
    if sigma <= 1 {
        return true;
    }
    let Ok(exp) = u32::try_from(k) else {
        return false;
    };
    (sigma as u128)
        .checked_pow(exp)
        .is_some_and(|v| v <= 1u128 << 64)
}

/// Rolling fingerprints of every k-mer of `digits`, by start position.
///
/// Callers must check [`fingerprint_fits`] first.
pub fn fingerprints(digits: &[u32], sigma: usize, k: usize) -> Vec<u64> {
    debug_assert!(k >= 1 && fingerprint_fits(sigma, k));
    if digits.len() < k {
        return Vec::new();
    }
    let sigma = sigma.max(1) as u64;
    // Weight of the leading digit, sigma^(k-1); below 2^64 because sigma^k fits.
    let lead = (1..k).fold(1u64, |acc, _| acc.wrapping_mul(sigma));
    let mut out = Vec::with_capacity(digits.len() - k + 1);
    let mut fp = digits[..k]
        .iter()
        .fold(0u64, |acc, &d| acc.wrapping_mul(sigma).wrapping_add(u64::from(d)));
    out.push(fp);
    for t in k..digits.len() {
        let dropped = u64::from(digits[t - k]) * lead;
        fp = (fp - dropped) * sigma + u64::from(digits[t]);
        out.push(fp);
    }
    out
}

/// Fingerprint to the ascending start columns of that k-mer in `B`.
#[derive(Clone, Debug, Default)]
pub struct KmerIndex {
    table: HashMap<u64, Range<usize>>,
    columns: Vec<usize>,
}

impl KmerIndex {
    pub fn build(b_digits: &[u32], sigma: usize, k: usize) -> Self {
        let mut keyed: Vec<(u64, usize)> = fingerprints(b_digits, sigma, k)
            .into_iter()
            .enumerate()
            .map(|(j, fp)| (fp, j))
            .collect();
        keyed.sort_unstable();

        let mut table = HashMap::new();
        let mut columns = Vec::with_capacity(keyed.len());
        let mut t = 0;
        while t < keyed.len() {
            let fp = keyed[t].0;
            let start = columns.len();
            while t < keyed.len() && keyed[t].0 == fp {
                columns.push(keyed[t].1);
                t += 1;
            }
            table.insert(fp, start..columns.len());
        }
        Self { table, columns }
    }

    pub fn columns_for(&self, fp: u64) -> &[usize] {
        match self.table.get(&fp) {
            Some(range) => &self.columns[range.clone()],
            None => &[],
        }
    }

    /// Number of distinct k-mers of `B`.
    pub fn distinct(&self) -> usize {
        self.table.len()
    }
}
