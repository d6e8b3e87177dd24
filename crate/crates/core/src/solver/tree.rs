//! Complete binary tree supporting point queries and prefix `chmin` updates in
//! `O(log capacity)`.
//!
//! Each tree node holds a value (and an optional payload travelling with it).
//! A point query returns the minimum along the root-to-leaf path; a prefix
//! update on `[0..=i]` lowers the left siblings of the nodes on the path to
//! leaf `i + 1`, which together cover exactly `[0, i + 1)`.

use crate::row::INFINITY;

#[derive(Clone, Debug)]
pub struct PrefixMinTree<T: Copy = ()> {
    capacity: usize,
    // Heap layout, root at 1, leaf `i` at `capacity + i`.
    values: Vec<usize>,
    payloads: Vec<Option<T>>,
}

impl<T: Copy> Default for PrefixMinTree<T> {
    fn default() -> Self {
        Self::new(1)
    }
}

impl<T: Copy> PrefixMinTree<T> {
    /// A tree with at least `capacity` leaves, all at infinity.
    pub fn new(capacity: usize) -> Self {
        let capacity = capacity.max(1).next_power_of_two();
        Self {
            capacity,
            values: vec![INFINITY; 2 * capacity],
            payloads: vec![None; 2 * capacity],
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Current value at leaf `i`; leaves past the capacity were never covered.
    pub fn query(&self, i: usize) -> usize {
        self.query_entry(i).0
    }

    /// Value at leaf `i` together with the payload of the update that set it.
    pub fn query_entry(&self, i: usize) -> (usize, Option<T>) {
        if i >= self.capacity {
            return (INFINITY, None);
        }
        let mut x = self.capacity + i;
        let mut best = (INFINITY, None);
        loop {
            if self.values[x] < best.0 {
                best = (self.values[x], self.payloads[x]);
            }
            if x == 1 {
                return best;
            }
            x >>= 1;
        }
    }

    /// Sets every leaf in `[0..=i]` to `min(leaf, v)`.
    pub fn prefix_update(&mut self, i: usize, v: usize) {
        self.prefix_update_with(i, v, None, |_| {});
    }

    /// Like [`prefix_update`](Self::prefix_update), attaching `payload` to each
    /// tree node whose value is lowered. `on_write` sees the payload each of
    /// those nodes held before, once per lowered node.
    pub fn prefix_update_with(
        &mut self,
        i: usize,
        v: usize,
        payload: Option<T>,
        mut on_write: impl FnMut(Option<T>),
    ) {
        while i >= self.capacity {
            self.grow();
        }
        if i + 1 == self.capacity {
            self.lower(1, v, payload, &mut on_write);
            return;
        }
        let mut x = self.capacity + i + 1;
        while x > 1 {
            if x & 1 == 1 {
                self.lower(x - 1, v, payload, &mut on_write);
            }
            x >>= 1;
        }
    }

    fn lower(&mut self, x: usize, v: usize, payload: Option<T>, on_write: &mut impl FnMut(Option<T>)) {
        if v < self.values[x] {
            self.values[x] = v;
            on_write(std::mem::replace(&mut self.payloads[x], payload));
        }
    }

    /// Doubles the capacity; the old tree becomes the left subtree of a new
    /// root and the new right half starts at infinity.
    fn grow(&mut self) {
        let old = self.capacity;
        let cap = old * 2;
        let mut values = vec![INFINITY; 2 * cap];
        let mut payloads = vec![None; 2 * cap];
        let mut level = 1;
        while level <= old {
            // Old nodes [level, 2*level) shift to [2*level, 3*level).
            values[2 * level..3 * level].copy_from_slice(&self.values[level..2 * level]);
            payloads[2 * level..3 * level].copy_from_slice(&self.payloads[level..2 * level]);
            level *= 2;
        }
        self.capacity = cap;
        self.values = values;
        self.payloads = payloads;
    }

    /// Payloads still held by tree nodes, for releasing references.
    pub fn drain_payloads(&mut self) -> impl Iterator<Item = T> + '_ {
        self.payloads.iter_mut().filter_map(Option::take)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fresh_tree_is_infinite() {
        let tree: PrefixMinTree = PrefixMinTree::new(8);
        assert_eq!(tree.query(3), INFINITY);
    }

    #[test]
    fn prefix_updates() {
        let mut tree: PrefixMinTree = PrefixMinTree::new(8);
        tree.prefix_update(5, 7);
        assert_eq!(tree.query(5), 7);
        assert_eq!(tree.query(0), 7);
        assert_eq!(tree.query(6), INFINITY);
        tree.prefix_update(2, 3);
        assert_eq!(tree.query(1), 3);
        assert_eq!(tree.query(4), 7);
    }

    #[test]
    fn single_leaf_and_full_range() {
        let mut tree: PrefixMinTree = PrefixMinTree::new(8);
        tree.prefix_update(0, 5);
        assert_eq!(tree.query(0), 5);
        assert_eq!(tree.query(1), INFINITY);
        tree.prefix_update(7, 2);
        assert!((0..8).all(|x| tree.query(x) <= 2));
    }

    #[test]
    fn growth_preserves_values() {
        let mut tree: PrefixMinTree = PrefixMinTree::new(1);
        tree.prefix_update(0, 0);
        tree.prefix_update(2, 9);
        assert_eq!(tree.capacity(), 4);
        tree.prefix_update(12, 20);
        assert_eq!(tree.capacity(), 16);
        assert_eq!(
            (0..16).map(|x| tree.query(x)).collect::<Vec<_>>(),
            [0, 9, 9].into_iter().chain([20; 10]).chain([INFINITY; 3]).collect::<Vec<_>>()
        );
    }

    #[test]
    fn payload_follows_minimum() {
        let mut tree: PrefixMinTree<u32> = PrefixMinTree::new(4);
        let mut evicted = Vec::new();
        tree.prefix_update_with(3, 10, Some(1), |old| evicted.push(old));
        tree.prefix_update_with(1, 4, Some(2), |old| evicted.push(old));
        assert_eq!(tree.query_entry(0), (4, Some(2)));
        assert_eq!(tree.query_entry(3), (10, Some(1)));
        tree.prefix_update_with(3, 1, Some(3), |old| evicted.push(old));
        assert_eq!(tree.query_entry(0), (1, Some(3)));
        assert_eq!(evicted, vec![None, None, Some(1)]);
    }

    #[test]
    fn randomized_against_naive_array() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut tree: PrefixMinTree = PrefixMinTree::new(1);
        let mut naive = vec![INFINITY; 200];
        for _ in 0..10_000 {
            let i = rng.gen_range(0..200);
            if rng.gen_bool(0.5) {
                let v = rng.gen_range(0..1000);
                tree.prefix_update(i, v);
                for x in &mut naive[..=i] {
                    *x = (*x).min(v);
                }
            } else {
                assert_eq!(tree.query(i), naive[i]);
            }
        }
    }
}
