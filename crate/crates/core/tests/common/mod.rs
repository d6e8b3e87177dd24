#![allow(dead_code)]

use std::collections::BTreeSet;

use lcsk::oracle::{dp_table, validate_chain};
use lcsk::{solve, MatchPair, Mode, Segment, Sequence, SolveResult, SolverConfig};
use rand::seq::SliceRandom;
use rand::Rng;

pub const SIGMAS: [u32; 4] = [1, 2, 4, 20];

pub fn random_seq<R: Rng>(rng: &mut R, len: usize, sigma: u32) -> Sequence {
    Sequence::new((0..len).map(|_| u32::from(b'a') + rng.gen_range(0..sigma)).collect())
}

/// A copy of `seq` with random substitutions, insertions and deletions.
pub fn mutate<R: Rng>(rng: &mut R, seq: &Sequence, sigma: u32, rate: f64, max_len: usize) -> Sequence {
    let mut out = Vec::with_capacity(seq.len());
    for &s in seq.symbols() {
        if rng.gen_bool(rate) {
            match rng.gen_range(0..3) {
                0 => out.push(u32::from(b'a') + rng.gen_range(0..sigma)),
                1 => {
                    out.push(s);
                    out.push(u32::from(b'a') + rng.gen_range(0..sigma));
                }
                _ => {}
            }
        } else {
            out.push(s);
        }
    }
    out.truncate(max_len);
    Sequence::new(out)
}

pub struct Instance {
    pub a: Sequence,
    pub b: Sequence,
    pub k: usize,
    pub sigma: u32,
}

/// Random pair: half independent, half a mutated copy so that long matches occur.
pub fn random_instance<R: Rng>(rng: &mut R, max_len: usize, max_k: usize) -> Instance {
    let sigma = *SIGMAS.choose(rng).unwrap();
    let k = rng.gen_range(1..=max_k);
    let m = rng.gen_range(0..=max_len);
    let a = random_seq(rng, m, sigma);
    let b = if rng.gen_bool(0.5) {
        let n = rng.gen_range(0..=max_len);
        random_seq(rng, n, sigma)
    } else {
        let rate = rng.gen_range(0.0..0.3);
        mutate(rng, &a, sigma, rate, max_len)
    };
    Instance { a, b, k, sigma }
}

pub fn brute_pairs(a: &Sequence, b: &Sequence, k: usize) -> BTreeSet<MatchPair> {
    let mut out = BTreeSet::new();
    if k > a.len() || k > b.len() {
        return out;
    }
    for i in 0..=a.len() - k {
        for j in 0..=b.len() - k {
            if a.slice(i, i + k) == b.slice(j, j + k) {
                out.insert(MatchPair::new(i, j));
            }
        }
    }
    out
}

pub fn oracle_length(a: &Sequence, b: &Sequence, k: usize, mode: Mode) -> usize {
    dp_table(a.symbols(), b.symbols(), k, mode).result()
}

/// Solves, then checks the length against the oracle and the chain with the
/// validator. Returns the result for further comparison.
pub fn solve_checked(a: &Sequence, b: &Sequence, cfg: &SolverConfig) -> Result<SolveResult, String> {
    let res = solve(a, b, cfg).map_err(|e| e.to_string())?;
    let expected = oracle_length(a, b, cfg.k, cfg.mode);
    if res.length != expected {
        return Err(format!(
            "{:?} k={} A={} B={}: solver {} oracle {}",
            cfg.mode, cfg.k, a, b, res.length, expected
        ));
    }
    if let Some(segments) = res.segments() {
        check_chain(a, b, cfg.k, cfg.mode, &segments, res.length)?;
    }
    if res.stats.max_nodes_in_memory > res.stats.match_pairs_total {
        return Err(format!("peak {} exceeds r {}", res.stats.max_nodes_in_memory, res.stats.match_pairs_total));
    }
    Ok(res)
}

pub fn check_chain(
    a: &Sequence,
    b: &Sequence,
    k: usize,
    mode: Mode,
    segments: &[Segment],
    length: usize,
) -> Result<(), String> {
    match validate_chain(a.symbols(), b.symbols(), k, mode, segments) {
        Ok(score) if score == length => Ok(()),
        Ok(score) => Err(format!("chain {segments:?} scores {score}, expected {length}")),
        Err(why) => Err(format!("chain {segments:?} rejected: {why}")),
    }
}
