use std::fmt::Write as _;

use lcsk::{MemoryStats, SolveResult, StrategyHistogram};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub match_pairs_total: u64,
    pub max_nodes_in_memory: u64,
    pub compression_factor: Option<f64>,
}

impl From<MemoryStats> for StatsReport {
    fn from(s: MemoryStats) -> Self {
        Self {
            match_pairs_total: s.match_pairs_total,
            max_nodes_in_memory: s.max_nodes_in_memory,
            compression_factor: s.compression_factor,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramReport {
    pub sparse: u64,
    pub dense: u64,
}

impl From<StrategyHistogram> for HistogramReport {
    fn from(h: StrategyHistogram) -> Self {
        Self {
            sparse: h.sparse as u64,
            dense: h.dense as u64,
        }
    }
}

/// Everything one solve reports, serialized flat with these exact keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub mode: String,
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<[usize; 3]>>,
    pub stats: StatsReport,
    pub wall_time: f64,
    pub generator_used: String,
    pub strategy_histogram: HistogramReport,
}

impl RunReport {
    pub fn new(res: &SolveResult, m: usize, n: usize, wall_time: f64) -> Self {
        Self {
            mode: res.mode.to_string(),
            k: res.k,
            m,
            n,
            length: res.length,
            chain: res
                .segments()
                .map(|segs| segs.iter().map(|s| [s.i, s.j, s.len]).collect()),
            stats: res.stats.into(),
            wall_time,
            generator_used: res.generator_used.to_string(),
            strategy_histogram: res.strategy_histogram.into(),
        }
    }

    /// `key: value` lines; statistics only when `stats` is set, the chain
    /// as one `i j len` line per segment after a `chain:` header.
    pub fn to_text(&self, stats: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mode: {}", self.mode);
        let _ = writeln!(out, "k: {}", self.k);
        let _ = writeln!(out, "m: {}", self.m);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "length: {}", self.length);
        if stats {
            let s = &self.stats;
            let _ = writeln!(out, "match_pairs_total: {}", s.match_pairs_total);
            let _ = writeln!(out, "max_nodes_in_memory: {}", s.max_nodes_in_memory);
            let _ = writeln!(out, "compression_factor: {}", format_factor(s.compression_factor));
            let _ = writeln!(out, "wall_time: {}", self.wall_time);
            let _ = writeln!(out, "generator_used: {}", self.generator_used);
            let _ = writeln!(out, "sparse_rows: {}", self.strategy_histogram.sparse);
            let _ = writeln!(out, "dense_rows: {}", self.strategy_histogram.dense);
        }
        if let Some(chain) = &self.chain {
            let _ = writeln!(out, "chain: {}", chain.len());
            for [i, j, len] in chain {
                let _ = writeln!(out, "{i} {j} {len}");
            }
        }
        out
    }
}

pub fn format_factor(factor: Option<f64>) -> String {
    factor.map_or_else(|| "-".to_string(), |f| format!("{f:.2}"))
}

/// One line of the bench table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub k: usize,
    pub label: String,
    pub match_pairs_total: u64,
    pub max_nodes_in_memory: u64,
    pub compression_factor: Option<f64>,
}

pub fn bench_table(rows: &[BenchRow]) -> String {
    let mut out = String::from("k\tlabel\tmatch_pairs_total\tmax_nodes_in_memory\tcompression_factor\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.k,
            r.label,
            r.match_pairs_total,
            r.max_nodes_in_memory,
            format_factor(r.compression_factor)
        );
    }
    out
}
