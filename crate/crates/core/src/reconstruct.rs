//! Reference-counted chain store for solution reconstruction.
//!
//! Every match pair that may end up on an optimal chain is recorded as a
//! [`ChainNode`] pointing at its predecessor. Nodes are kept alive only while
//! something refers to them: a threshold slot, a successor node, or a pending
//! read in the sweep. Once the last reference goes away the node is freed, and
//! the release cascades down the predecessor links. Peak memory therefore
//! follows the number of live reconstruction paths instead of the total number
//! of match pairs.
//!
//! Nodes live in an arena with a free list, so [`NodeId`]s are recycled and the
//! arena never grows past the peak live count.

use std::mem;

use crate::types::{MatchPair, Mode, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NodeId(usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainNode {
    pub pair: MatchPair,
    /// Chain score up to and including this pair.
    pub dp: usize,
    pub predecessor: Option<NodeId>,
    refs: u32,
}

#[derive(Debug, Default)]
pub struct ChainStore {
    nodes: Vec<ChainNode>,
    free: Vec<usize>,
    live: usize,
    peak: usize,
    recorded: u64,
}

impl ChainStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Creates a node holding one reference to `predecessor`.
    ///
    /// The returned id carries one reference owned by the caller, who must
    /// eventually hand it to [`release`](Self::release).
    pub fn record_pair(
        &mut self,
        pair: MatchPair,
        dp: usize,
        predecessor: Option<NodeId>,
    ) -> NodeId {
        if let Some(p) = predecessor {
            debug_assert!(self.node(p).dp < dp, "predecessor must score lower");
            self.retain(p);
        }
        let node = ChainNode {
            pair,
            dp,
            predecessor,
            refs: 1,
        };
        let idx = match self.free.pop() {
            Some(idx) => {
                self.nodes[idx] = node;
                idx
            }
            None => {
                self.nodes.push(node);
                self.nodes.len() - 1
            }
        };
        self.live += 1;
        self.peak = self.peak.max(self.live);
        self.recorded += 1;
        NodeId(idx)
    }

    pub fn node(&self, id: NodeId) -> &ChainNode {
        let node = &self.nodes[id.0];
        debug_assert!(node.refs > 0, "access to freed node {id:?}");
        node
    }

    pub fn retain(&mut self, id: NodeId) {
        let node = &mut self.nodes[id.0];
        debug_assert!(node.refs > 0, "retain of freed node {id:?}");
        node.refs += 1;
    }

    /// Drops one reference, freeing the node and any predecessors that become
    /// unreferenced.
    pub fn release(&mut self, id: NodeId) {
        let mut next = Some(id);
        while let Some(NodeId(idx)) = next {
            let node = &mut self.nodes[idx];
            debug_assert!(node.refs > 0, "double release of node {idx}");
            node.refs -= 1;
            if node.refs > 0 {
                break;
            }
            next = node.predecessor.take();
            self.free.push(idx);
            self.live -= 1;
        }
    }

    /// Points `slot` at `node`, releasing whatever it pointed at before.
    pub fn slot_replace(&mut self, slot: &mut Option<NodeId>, node: NodeId) {
        self.retain(node);
        if let Some(old) = slot.replace(node) {
            self.release(old);
        }
    }

    /// Releases the reference held by `slot`, if any.
    pub fn slot_clear(&mut self, slot: &mut Option<NodeId>) {
        if let Some(old) = slot.take() {
            self.release(old);
        }
    }

    /// Pairs of the chain ending at `tail`, in ascending row order.
    pub fn extract_chain(&self, tail: NodeId) -> Vec<MatchPair> {
        let mut chain = Vec::with_capacity(self.node(tail).dp);
        let mut next = Some(tail);
        while let Some(id) = next {
            let node = self.node(id);
            chain.push(node.pair);
            next = node.predecessor;
        }
        chain.reverse();
        chain
    }

    pub fn live(&self) -> usize {
        self.live
    }

    pub fn peak(&self) -> usize {
        self.peak
    }

    /// Total nodes ever created.
    pub fn recorded(&self) -> u64 {
        self.recorded
    }

    pub const fn bytes_per_node() -> usize {
        mem::size_of::<ChainNode>()
    }
}

/// Match-pair and memory counters of one solve.
///
/// Peak memory is measured in nodes; multiply by
/// [`bytes_per_node`](Self::bytes_per_node) for an estimate in bytes.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MemoryStats {
    pub match_pairs_total: u64,
    pub max_nodes_in_memory: u64,
    /// `match_pairs_total / max_nodes_in_memory`; `1` without reconstruction,
    /// `None` when reconstruction ran but never stored a node.
    pub compression_factor: Option<f64>,
}

impl MemoryStats {
    pub fn new(match_pairs_total: u64, max_nodes_in_memory: u64, reconstruct: bool) -> Self {
        let compression_factor = if !reconstruct {
            Some(1.0)
        } else if max_nodes_in_memory == 0 {
            None
        } else {
            Some(match_pairs_total as f64 / max_nodes_in_memory as f64)
        };
        Self {
            match_pairs_total,
            max_nodes_in_memory,
            compression_factor,
        }
    }

    pub const fn bytes_per_node() -> usize {
        ChainStore::bytes_per_node()
    }
}

/// Groups a chain of match pairs into common substrings.
///
/// In LCSk+ mode a pair that continues its predecessor extends the current
/// segment by one character; in LCSk mode every pair is its own k-block.
pub fn chain_segments(chain: &[MatchPair], k: usize, mode: Mode) -> Vec<Segment> {
    let mut segments: Vec<Segment> = Vec::with_capacity(chain.len());
    let mut prev: Option<MatchPair> = None;
    for &pair in chain {
        match (mode, prev, segments.last_mut()) {
            (Mode::LcskPlus, Some(p), Some(seg)) if pair.continues(p) => seg.len += 1,
            _ => segments.push(Segment::new(pair.i, pair.j, k)),
        }
        prev = Some(pair);
    }
    segments
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(i: usize, j: usize) -> MatchPair {
        MatchPair::new(i, j)
    }

    #[test]
    fn first_pair() {
        let mut store = ChainStore::new();
        let a = store.record_pair(p(0, 0), 1, None);
        assert_eq!(store.node(a).predecessor, None);
        assert_eq!((store.live(), store.peak()), (1, 1));
    }

    #[test]
    fn referenced_chain_stays_alive() {
        let mut store = ChainStore::new();
        let a = store.record_pair(p(0, 0), 1, None);
        let b = store.record_pair(p(2, 2), 2, Some(a));
        let c = store.record_pair(p(4, 4), 3, Some(b));
        store.release(a);
        store.release(b);
        assert_eq!(store.live(), 3);
        assert_eq!(store.extract_chain(c), vec![p(0, 0), p(2, 2), p(4, 4)]);
    }

    #[test]
    fn slot_replace_single_node() {
        let mut store = ChainStore::new();
        let mut slot = None;
        let a = store.record_pair(p(0, 0), 1, None);
        store.slot_replace(&mut slot, a);
        store.release(a);
        assert_eq!(store.live(), 1);

        let b = store.record_pair(p(0, 0), 1, None);
        store.slot_replace(&mut slot, b);
        store.release(b);
        assert_eq!(store.live(), 1);
        assert_eq!(slot, Some(b));
    }

    #[test]
    fn slot_replace_cascades() {
        let mut store = ChainStore::new();
        let mut slot = None;
        let a = store.record_pair(p(0, 0), 1, None);
        let b = store.record_pair(p(2, 2), 2, Some(a));
        let c = store.record_pair(p(4, 4), 3, Some(b));
        store.release(a);
        store.release(b);
        store.slot_replace(&mut slot, c);
        store.release(c);
        assert_eq!(store.live(), 3);

        let d = store.record_pair(p(5, 1), 1, None);
        store.slot_replace(&mut slot, d);
        store.release(d);
        // 3 freed, 1 added.
        assert_eq!(store.live(), 1);
        assert_eq!(store.peak(), 4);
    }

    #[test]
    fn slot_replace_keeps_shared_predecessor() {
        let mut store = ChainStore::new();
        let (mut s1, mut s2) = (None, None);
        let a = store.record_pair(p(0, 0), 1, None);
        let b = store.record_pair(p(2, 2), 2, Some(a));
        let c = store.record_pair(p(2, 5), 2, Some(a));
        store.release(a);
        store.slot_replace(&mut s1, b);
        store.slot_replace(&mut s2, c);
        store.release(b);
        store.release(c);
        assert_eq!(store.live(), 3);

        let x = store.record_pair(p(3, 0), 1, None);
        store.slot_replace(&mut s1, x);
        store.release(x);
        // Only b is freed; a is still referenced through c.
        assert_eq!(store.live(), 3);
        store.slot_clear(&mut s1);
        store.slot_clear(&mut s2);
        assert_eq!(store.live(), 0);
    }

    #[test]
    fn long_chain_release_is_iterative() {
        let mut store = ChainStore::new();
        let mut tail = store.record_pair(p(0, 0), 1, None);
        for t in 1..1_000_000 {
            let next = store.record_pair(p(t, t), t + 1, Some(tail));
            store.release(tail);
            tail = next;
        }
        assert_eq!(store.live(), 1_000_000);
        store.release(tail);
        assert_eq!(store.live(), 0);
        // Freed slots are reused.
        store.record_pair(p(0, 0), 1, None);
        assert_eq!(store.nodes.len(), 1_000_000);
    }

    #[test]
    fn segments_merge_continuations_only_in_plus_mode() {
        let chain = [p(0, 0), p(1, 1), p(2, 2), p(6, 7)];
        assert_eq!(
            chain_segments(&chain, 3, Mode::LcskPlus),
            vec![Segment::new(0, 0, 5), Segment::new(6, 7, 3)]
        );
        let chain = [p(0, 2), p(2, 8)];
        assert_eq!(
            chain_segments(&chain, 2, Mode::Lcsk),
            vec![Segment::new(0, 2, 2), Segment::new(2, 8, 2)]
        );
    }

    #[test]
    fn stats_factor() {
        assert_eq!(MemoryStats::new(10, 0, false).compression_factor, Some(1.0));
        assert_eq!(MemoryStats::new(0, 0, true).compression_factor, None);
        assert_eq!(MemoryStats::new(10, 4, true).compression_factor, Some(2.5));
    }
}
