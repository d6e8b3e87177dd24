//! Row-major sparse sweep computing LCSk and LCSk+.
//!
//! Every match pair is touched twice: once in its start row, where the
//! compressed row is *read* to learn the best chain it can extend, and once in
//! its end row, where the pair's score is *written* back. Within a row all
//! reads happen before any write, so start points may be visited in any order.
//!
//! Reads use either a binary search per start point (sparse rows) or a single
//! merged walk over the row and the thresholds (dense rows); the choice is
//! made per row from an operation-count estimate.

mod tree;

use std::mem;

pub use tree::PrefixMinTree;

use crate::error::{Error, Result};
use crate::matchgen::{self, Generator, GeneratorChoice, RowEvents};
use crate::reconstruct::{chain_segments, ChainStore, MemoryStats, NodeId};
use crate::row::{CompressedRow, INFINITY};
use crate::types::{AlphabetKind, MatchPair, Mode, Segment, Sequence};

/// How start points of a row are resolved against the thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Binary search per start point.
    Sparse,
    /// One merged linear walk.
    Dense,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RowStrategy {
    #[default]
    Auto,
    ForceSparse,
    ForceDense,
}

/// How LCSk+ end points lower the thresholds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PlusUpdate {
    /// Up to k entries of a plain array, with early stop.
    #[default]
    KStep,
    /// Prefix-min tree, `O(log l)` per update and per point query.
    Tree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub mode: Mode,
    pub k: usize,
    pub row_strategy: RowStrategy,
    pub lcskplus_update: PlusUpdate,
    pub reconstruct: bool,
    pub generator: GeneratorChoice,
    pub alphabet: AlphabetKind,
}

impl SolverConfig {
    pub fn new(mode: Mode, k: usize) -> Self {
        Self {
            mode,
            k,
            row_strategy: RowStrategy::Auto,
            lcskplus_update: PlusUpdate::KStep,
            reconstruct: false,
            generator: GeneratorChoice::Auto,
            alphabet: AlphabetKind::Discover,
        }
    }

    pub fn with_reconstruction(mut self, reconstruct: bool) -> Self {
        self.reconstruct = reconstruct;
        self
    }

    pub fn with_row_strategy(mut self, row_strategy: RowStrategy) -> Self {
        self.row_strategy = row_strategy;
        self
    }

    pub fn with_update(mut self, update: PlusUpdate) -> Self {
        self.lcskplus_update = update;
        self
    }

    pub fn with_generator(mut self, generator: GeneratorChoice) -> Self {
        self.generator = generator;
        self
    }

    pub fn with_alphabet(mut self, alphabet: AlphabetKind) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::ZeroK);
        }
        if self.lcskplus_update == PlusUpdate::Tree && self.mode != Mode::LcskPlus {
            return Err(Error::TreeRequiresLcskPlus);
        }
        Ok(())
    }
}

/// Rows resolved with each strategy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StrategyHistogram {
    pub sparse: usize,
    pub dense: usize,
}

impl StrategyHistogram {
    pub fn total(&self) -> usize {
        self.sparse + self.dense
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub mode: Mode,
    pub k: usize,
    /// Blocks in LCSk mode, characters in LCSk+ mode.
    pub length: usize,
    /// Pairs of an optimal chain in row order, when reconstruction was requested.
    pub chain: Option<Vec<MatchPair>>,
    pub stats: MemoryStats,
    pub generator_used: Generator,
    pub strategy_histogram: StrategyHistogram,
}

impl SolveResult {
    /// The chain as common substrings; see [`chain_segments`].
    pub fn segments(&self) -> Option<Vec<Segment>> {
        self.chain
            .as_deref()
            .map(|chain| chain_segments(chain, self.k, self.mode))
    }
}

/// Sparse iff `r_i * ceil(log2(l + 2)) < r_i + l`.
pub fn choose_row_strategy(row_pairs: usize, best: usize) -> Strategy {
    let log = (best + 2).next_power_of_two().trailing_zeros() as usize;
    if row_pairs.saturating_mul(log) < row_pairs + best {
        Strategy::Sparse
    } else {
        Strategy::Dense
    }
}

pub fn solve(a: &Sequence, b: &Sequence, config: &SolverConfig) -> Result<SolveResult> {
    config.validate()?;
    let stream = matchgen::generate(a, b, config.k, config.generator, config.alphabet)?;
    let mut sweep = Sweep::new(config)?;
    for row in 0..stream.rows() {
        sweep.process_row(stream.events_for_row(row));
    }
    let outcome = sweep.finish();
    Ok(SolveResult {
        mode: config.mode,
        k: config.k,
        length: outcome.length,
        chain: outcome.chain,
        stats: MemoryStats::new(
            stream.total_pairs(),
            outcome.peak_nodes as u64,
            config.reconstruct,
        ),
        generator_used: stream.generator(),
        strategy_histogram: outcome.histogram,
    })
}

/// Value read at a start point, held until the pair's end row.
#[derive(Clone, Copy, Debug)]
struct PendingRead {
    col: usize,
    d: usize,
    pred: Option<NodeId>,
}

/// Score of a pair that ended in the previous row, for continuation lookups.
#[derive(Clone, Copy, Debug)]
struct EndRecord {
    end_col: usize,
    dp: usize,
    node: Option<NodeId>,
}

/// Thresholds plus, when reconstructing, the chain tail behind each entry.
#[derive(Debug)]
enum Frontier {
    Array {
        row: CompressedRow,
        slots: Vec<Option<NodeId>>,
    },
    Tree {
        tree: PrefixMinTree<NodeId>,
        best: usize,
    },
}

impl Frontier {
    fn best(&self) -> usize {
        match self {
            Frontier::Array { row, .. } => row.best(),
            Frontier::Tree { best, .. } => *best,
        }
    }

    fn get(&self, d: usize) -> usize {
        match self {
            Frontier::Array { row, .. } => row.get(d),
            Frontier::Tree { tree, best } if d <= *best => tree.query(d),
            Frontier::Tree { .. } => INFINITY,
        }
    }

    /// Largest `d` with `get(d) < q`.
    fn query(&self, q: usize) -> usize {
        match self {
            Frontier::Array { row, .. } => row.query(q),
            Frontier::Tree { best, .. } => {
                let (mut lo, mut hi) = (0, *best + 1);
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    if self.get(mid) < q {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                lo
            }
        }
    }

    fn slot(&self, d: usize) -> Option<NodeId> {
        match self {
            Frontier::Array { slots, .. } => slots.get(d).copied().flatten(),
            Frontier::Tree { tree, .. } => tree.query_entry(d).1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub length: usize,
    pub chain: Option<Vec<MatchPair>>,
    pub peak_nodes: usize,
    /// Nodes still allocated after every reference was dropped; always 0
    /// unless the store leaks.
    pub leaked_nodes: usize,
    pub histogram: StrategyHistogram,
}

/// Incremental driver of one solve; feed every row in order, then
/// [`finish`](Self::finish).
#[derive(Debug)]
pub struct Sweep {
    mode: Mode,
    k: usize,
    row_strategy: RowStrategy,
    reconstruct: bool,
    frontier: Frontier,
    store: ChainStore,
    // Ring of k rows of start reads, indexed by start row modulo k.
    pending: Vec<Vec<PendingRead>>,
    prev_ends: Vec<EndRecord>,
    cur_ends: Vec<EndRecord>,
    histogram: StrategyHistogram,
    next_row: usize,
    pairs_seen: u64,
    scratch: Vec<usize>,
}

impl Sweep {
    pub fn new(config: &SolverConfig) -> Result<Self> {
        config.validate()?;
        let frontier = match config.lcskplus_update {
            PlusUpdate::KStep => Frontier::Array {
                row: CompressedRow::new(),
                slots: vec![None],
            },
            PlusUpdate::Tree => {
                let mut tree = PrefixMinTree::new(16);
                tree.prefix_update(0, 0);
                Frontier::Tree { tree, best: 0 }
            }
        };
        Ok(Self {
            mode: config.mode,
            k: config.k,
            row_strategy: config.row_strategy,
            reconstruct: config.reconstruct,
            frontier,
            store: ChainStore::new(),
            pending: vec![Vec::new(); config.k],
            prev_ends: Vec::new(),
            cur_ends: Vec::new(),
            histogram: StrategyHistogram::default(),
            next_row: 0,
            pairs_seen: 0,
            scratch: Vec::new(),
        })
    }

    /// Current optimum over the processed rows.
    pub fn best(&self) -> usize {
        self.frontier.best()
    }

    /// Threshold entry `d` in stored (1-based column) units.
    pub fn threshold(&self, d: usize) -> usize {
        self.frontier.get(d)
    }

    pub fn live_nodes(&self) -> usize {
        self.store.live()
    }

    pub fn peak_nodes(&self) -> usize {
        self.store.peak()
    }

    pub fn pairs_seen(&self) -> u64 {
        self.pairs_seen
    }

    /// Processes one row. Rows must arrive in order starting at 0; `ends`
    /// must be ascending, `starts` may come in any order.
    pub fn process_row(&mut self, events: RowEvents<'_>) -> Strategy {
        debug_assert_eq!(events.row, self.next_row, "rows must be processed in order");
        debug_assert_eq!(events.k, self.k);
        self.next_row = events.row + 1;

        let strategy = match self.row_strategy {
            RowStrategy::ForceSparse => Strategy::Sparse,
            RowStrategy::ForceDense => Strategy::Dense,
            RowStrategy::Auto => choose_row_strategy(events.width(), self.frontier.best()),
        };
        match strategy {
            Strategy::Sparse => self.histogram.sparse += 1,
            Strategy::Dense => self.histogram.dense += 1,
        }
        self.pairs_seen += events.width() as u64;

        self.read_starts(events.row, events.starts, strategy);
        if let Some(start_row) = (events.row + 1).checked_sub(self.k) {
            self.write_ends(start_row, events.ends);
        } else {
            debug_assert!(events.ends.is_empty());
        }
        if self.mode == Mode::LcskPlus {
            for rec in self.prev_ends.drain(..) {
                if let Some(node) = rec.node {
                    self.store.release(node);
                }
            }
            mem::swap(&mut self.prev_ends, &mut self.cur_ends);
        }
        strategy
    }

    fn read_starts(&mut self, row: usize, starts: &[usize], strategy: Strategy) {
        let slot = row % self.k;
        let mut reads = mem::take(&mut self.pending[slot]);
        debug_assert!(reads.is_empty(), "start reads of row {row} would overwrite unconsumed reads");
        reads.clear();
        let sorted = starts.windows(2).all(|w| w[0] < w[1]);
        match strategy {
            Strategy::Sparse => {
                for &col in starts {
                    let d = self.frontier.query(col + 1);
                    reads.push(PendingRead { col, d, pred: None });
                }
                if !sorted {
                    reads.sort_unstable_by_key(|r| r.col);
                }
            }
            Strategy::Dense => {
                let cols = if sorted {
                    starts
                } else {
                    self.scratch.clear();
                    self.scratch.extend_from_slice(starts);
                    self.scratch.sort_unstable();
                    &self.scratch
                };
                let best = self.frontier.best();
                let mut d = 0;
                for &col in cols {
                    while d < best && self.frontier.get(d + 1) < col + 1 {
                        d += 1;
                    }
                    reads.push(PendingRead { col, d, pred: None });
                }
            }
        }
        if self.reconstruct {
            for read in &mut reads {
                if read.d > 0 {
                    let pred = self.frontier.slot(read.d).expect("finite threshold without a chain tail");
                    debug_assert_eq!(self.store.node(pred).dp, read.d);
                    self.store.retain(pred);
                    read.pred = Some(pred);
                }
            }
        }
        self.pending[slot] = reads;
    }

    fn write_ends(&mut self, start_row: usize, ends: &[usize]) {
        let slot = start_row % self.k;
        let mut reads = mem::take(&mut self.pending[slot]);
        debug_assert_eq!(
            reads.iter().map(|r| r.col).collect::<Vec<_>>(),
            ends,
            "end events of row {} do not match its start reads",
            start_row + self.k - 1
        );
        let mut g = 0;
        for read in reads.drain(..) {
            let pair = MatchPair::new(start_row, read.col);
            let end_col = read.col + self.k - 1;
            match self.mode {
                Mode::Lcsk => self.end_lcsk(pair, end_col, read),
                Mode::LcskPlus => {
                    let cont = match end_col.checked_sub(1) {
                        Some(target) => {
                            while g < self.prev_ends.len() && self.prev_ends[g].end_col < target {
                                g += 1;
                            }
                            self.prev_ends.get(g).filter(|rec| rec.end_col == target).copied()
                        }
                        None => None,
                    };
                    self.end_lcskplus(pair, end_col, read, cont);
                }
            }
            if let Some(pred) = read.pred {
                self.store.release(pred);
            }
        }
        self.pending[slot] = reads;
    }

    fn end_lcsk(&mut self, pair: MatchPair, end_col: usize, read: PendingRead) {
        let dp = read.d + 1;
        let Frontier::Array { row, slots } = &mut self.frontier else {
            unreachable!("tree frontier is rejected for lcsk mode");
        };
        if row.update_min(dp, end_col + 1) && self.reconstruct {
            if slots.len() <= dp {
                slots.resize(dp + 1, None);
            }
            let node = self.store.record_pair(pair, dp, read.pred);
            self.store.slot_replace(&mut slots[dp], node);
            self.store.release(node);
        }
    }

    fn end_lcskplus(
        &mut self,
        pair: MatchPair,
        end_col: usize,
        read: PendingRead,
        cont: Option<EndRecord>,
    ) {
        let precedence = read.d + self.k;
        // Ties go to the continuation.
        let (dp, pred, span) = match cont {
            Some(g) if g.dp + 1 >= precedence => (g.dp + 1, g.node, 1),
            _ => (precedence, read.pred, self.k),
        };
        let node = self
            .reconstruct
            .then(|| self.store.record_pair(pair, dp, pred));
        let q = end_col + 1;
        match &mut self.frontier {
            Frontier::Array { row, slots } => {
                let lowered = row.prefix_update_min(dp, q, span);
                if let Some(node) = node {
                    if slots.len() <= dp {
                        slots.resize(dp + 1, None);
                    }
                    for slot in &mut slots[dp + 1 - lowered..=dp] {
                        self.store.slot_replace(slot, node);
                    }
                }
            }
            Frontier::Tree { tree, best } => {
                let store = &mut self.store;
                tree.prefix_update_with(dp, q, node, |old| {
                    if let Some(node) = node {
                        store.retain(node);
                    }
                    if let Some(old) = old {
                        store.release(old);
                    }
                });
                *best = (*best).max(dp);
            }
        }
        self.cur_ends.push(EndRecord { end_col, dp, node });
    }

    pub fn finish(mut self) -> SweepOutcome {
        let length = self.frontier.best();
        let chain = self.reconstruct.then(|| match self.frontier.slot(length) {
            Some(tail) if length > 0 => self.store.extract_chain(tail),
            _ => Vec::new(),
        });
        let peak_nodes = self.store.peak();
        self.teardown();
        SweepOutcome {
            length,
            chain,
            peak_nodes,
            leaked_nodes: self.store.live(),
            histogram: self.histogram,
        }
    }

    /// Releases every reference the sweep still holds.
    fn teardown(&mut self) {
        let store = &mut self.store;
        for reads in &mut self.pending {
            for read in reads.drain(..) {
                if let Some(pred) = read.pred {
                    store.release(pred);
                }
            }
        }
        for rec in self.prev_ends.drain(..).chain(self.cur_ends.drain(..)) {
            if let Some(node) = rec.node {
                store.release(node);
            }
        }
        match &mut self.frontier {
            Frontier::Array { slots, .. } => {
                for slot in slots.iter_mut() {
                    store.slot_clear(slot);
                }
            }
            Frontier::Tree { tree, .. } => {
                for node in tree.drain_payloads() {
                    store.release(node);
                }
            }
        }
    }
}
