//! Suffix array and LCP table over `B#A`, and grouping of equal k-prefixes.

use std::ops::Range;

/// Sorts all suffixes of `text` by prefix doubling, `O(n log^2 n)` worst case.
///
/// A suffix that is a proper prefix of another sorts first.
pub fn build_suffix_array(text: &[u32]) -> Vec<usize> {
    let n = text.len();
    let mut sa: Vec<usize> = (0..n).collect();
    if n <= 1 {
        return sa;
    }
    sa.sort_unstable_by_key(|&i| text[i]);
    // Ranks start at 1 so that 0 can stand for "past the end".
    let mut rank = vec![0usize; n];
    let mut next = 1;
    for t in 0..n {
        if t > 0 && text[sa[t]] != text[sa[t - 1]] {
            next += 1;
        }
        rank[sa[t]] = next;
    }

    let mut tmp = vec![0usize; n];
    let mut h = 1;
    while next < n {
        let key = |i: usize| (rank[i], if i + h < n { rank[i + h] } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        next = 1;
        for t in 0..n {
            if t > 0 && key(sa[t]) != key(sa[t - 1]) {
                next += 1;
            }
            tmp[sa[t]] = next;
        }
        std::mem::swap(&mut rank, &mut tmp);
        h *= 2;
    }
    sa
}

/// Kasai's linear-time LCP: `lcp[t]` is the common prefix length of suffixes
/// `sa[t-1]` and `sa[t]`, with `lcp[0] = 0`.
pub fn build_lcp(text: &[u32], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0usize; n];
    for (t, &s) in sa.iter().enumerate() {
        rank[s] = t;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixStructures {
    pub sa: Vec<usize>,
    pub lcp: Vec<usize>,
}

impl SuffixStructures {
    pub fn build(text: &[u32]) -> Self {
        let sa = build_suffix_array(text);
        let lcp = build_lcp(text, &sa);
        Self { sa, lcp }
    }
}

const NO_GROUP: usize = usize::MAX;

/// For every row of `A`, the ascending columns of `B` sharing its k-prefix.
#[derive(Clone, Debug, Default)]
pub(crate) struct SuffixGroups {
    row_group: Vec<usize>,
    groups: Vec<Range<usize>>,
    columns: Vec<usize>,
}

impl SuffixGroups {
    /// `a_ranks` and `b_ranks` must use codes `>= 1`; 0 is the separator.
    pub(crate) fn build(a_ranks: &[u32], b_ranks: &[u32], k: usize) -> Self {
        let (m, n) = (a_ranks.len(), b_ranks.len());
        let mut out = Self::default();
        if k == 0 || k > m.min(n) {
            return out;
        }
        debug_assert!(a_ranks.iter().chain(b_ranks).all(|&c| c > 0));
        let mut text = Vec::with_capacity(m + n + 1);
        text.extend_from_slice(b_ranks);
        text.push(0);
        text.extend_from_slice(a_ranks);
        let SuffixStructures { sa, lcp } = SuffixStructures::build(&text);

        out.row_group = vec![NO_GROUP; m - k + 1];
        let mut rows = Vec::new();
        let mut run_start = 0;
        for t in 1..=sa.len() {
            if t < sa.len() && lcp[t] >= k {
                continue;
            }
            // sa[run_start..t] share a prefix of length >= k (if the run has
            // at least two members; a singleton has no partner anyway).
            if t - run_start >= 2 {
                let col_start = out.columns.len();
                rows.clear();
                for &s in &sa[run_start..t] {
                    if s < n {
                        out.columns.push(s);
                    } else {
                        rows.push(s - n - 1);
                    }
                }
                if !rows.is_empty() && out.columns.len() > col_start {
                    out.columns[col_start..].sort_unstable();
                    let group = out.groups.len();
                    out.groups.push(col_start..out.columns.len());
                    for &row in &rows {
                        out.row_group[row] = group;
                    }
                } else {
                    out.columns.truncate(col_start);
                }
            }
            run_start = t;
        }
        out
    }

    pub(crate) fn columns(&self, row: usize) -> &[usize] {
        match self.row_group.get(row) {
            Some(&g) if g != NO_GROUP => &self.columns[self.groups[g].clone()],
            _ => &[],
        }
    }
}
