use thiserror::Error;

use crate::types::AlphabetKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least 1")]
    ZeroK,
    #[error(
        "alphabet of {alphabet_size} symbols does not admit 64-bit k-mer fingerprints for k = {k}; \
         use the suffix-array generator"
    )]
    AlphabetTooLarge { alphabet_size: usize, k: usize },
    #[error("symbol {symbol:#x} at position {position} is not in the {alphabet} alphabet")]
    InvalidSymbol {
        symbol: u32,
        position: usize,
        alphabet: AlphabetKind,
    },
    #[error("the tree update rule only applies to lcskplus mode")]
    TreeRequiresLcskPlus,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
