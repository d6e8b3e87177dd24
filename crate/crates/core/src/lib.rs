//! Longest common subsequence in k-length substrings.
//!
//! Computes LCSk (maximum number of shared, non-overlapping, in-order blocks
//! of exactly `k` symbols) and LCSk+ (maximum total length of shared,
//! non-overlapping, in-order substrings of at least `k` symbols) with a single
//! row-major sparse sweep over the k-length match pairs of the two inputs.
//!
//! ```
//! use lcsk::{solve, Mode, Sequence, SolverConfig};
//!
//! let a = Sequence::from("ABXXXCDE");
//! let b = Sequence::from("ABYYYCDE");
//! let cfg = SolverConfig::new(Mode::LcskPlus, 2).with_reconstruction(true);
//! let result = solve(&a, &b, &cfg).unwrap();
//! assert_eq!(result.length, 5);
//! assert_eq!(result.segments().unwrap().len(), 2);
//! ```

pub mod error;
pub mod matchgen;
pub mod oracle;
pub mod reconstruct;
pub mod row;
pub mod solver;
pub mod types;

pub use error::{Error, Result};
pub use matchgen::{Generator, GeneratorChoice, MatchPairStream, RowEvents};
pub use reconstruct::{chain_segments, ChainNode, ChainStore, MemoryStats, NodeId};
pub use row::CompressedRow;
pub use solver::{
    choose_row_strategy, solve, PlusUpdate, PrefixMinTree, RowStrategy, SolveResult,
    SolverConfig, Strategy, StrategyHistogram, Sweep,
};
pub use types::{AlphabetKind, MatchPair, Mode, Segment, Sequence};
