use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcsk::{AlphabetKind, GeneratorChoice, Mode, PlusUpdate, RowStrategy};

#[derive(Debug, Parser)]
#[command(
    name = "lcsk",
    version,
    about = "Longest common subsequence in k-length substrings (LCSk, LCSk+)",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Match pairs versus peak chain nodes over a range of k.
    Bench(BenchArgs),
    /// Quadratic reference DP, for debugging small inputs.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Lcskplus)]
    pub mode: ModeArg,

    /// Substring length.
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,

    #[command(flatten)]
    pub input: InputArgs,

    #[command(flatten)]
    pub solver: SolverArgs,

    /// Emit an optimal chain as `i j len` segments.
    #[arg(long)]
    pub reconstruct: bool,

    /// Print one JSON document instead of text.
    #[arg(long)]
    pub json: bool,

    /// Include memory statistics, timing and row strategies in text output.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// File holding the first sequence.
    #[arg(long = "a", value_name = "FILE", conflicts_with = "a_str")]
    pub a: Option<PathBuf>,

    /// File holding the second sequence.
    #[arg(long = "b", value_name = "FILE", conflicts_with = "b_str")]
    pub b: Option<PathBuf>,

    /// First sequence given inline.
    #[arg(long, value_name = "SEQ")]
    pub a_str: Option<String>,

    /// Second sequence given inline.
    #[arg(long, value_name = "SEQ")]
    pub b_str: Option<String>,

    /// Read input files as single-record FASTA.
    #[arg(long)]
    pub fasta: bool,

    /// Uppercase both sequences before solving.
    #[arg(long)]
    pub fold_case: bool,
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    #[arg(long, value_enum, default_value_t = AlphabetArg::Auto)]
    pub alphabet: AlphabetArg,

    #[arg(long, value_enum, default_value_t = GeneratorArg::Auto)]
    pub generator: GeneratorArg,

    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,

    #[arg(long, value_enum, default_value_t = UpdateArg::Kstep)]
    pub lcskplus_update: UpdateArg,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Lcsk)]
    pub mode: ModeArg,

    /// A single k.
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "k_range")]
    pub k: Option<u64>,

    /// Inclusive range of k, written LO..HI.
    #[arg(long, value_name = "LO..HI", value_parser = parse_k_range)]
    pub k_range: Option<RangeInclusive<usize>>,

    #[command(flatten)]
    pub input: InputArgs,

    #[command(flatten)]
    pub solver: SolverArgs,

    /// Use a uniform random DNA sequence of this length as the first input.
    #[arg(long, value_name = "N", conflicts_with_all = ["a", "a_str"])]
    pub random_dna: Option<usize>,

    /// Seed for `--random-dna`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Print a JSON array of rows instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Lcskplus)]
    pub mode: ModeArg,

    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,

    #[command(flatten)]
    pub input: InputArgs,

    /// Also list the dominant points as `i j q`.
    #[arg(long)]
    pub dominant: bool,
}

fn parse_k_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo == 0 || lo > hi {
        return Err(format!("need 1 <= LO <= HI, got {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Lcsk,
    Lcskplus,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Lcsk => Mode::Lcsk,
            ModeArg::Lcskplus => Mode::LcskPlus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphabetArg {
    Auto,
    Dna,
    Byte,
}

impl From<AlphabetArg> for AlphabetKind {
    fn from(a: AlphabetArg) -> Self {
        match a {
            AlphabetArg::Auto => AlphabetKind::Discover,
            AlphabetArg::Dna => AlphabetKind::Dna,
            AlphabetArg::Byte => AlphabetKind::Byte,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeneratorArg {
    Auto,
    Hashing,
    Sa,
}

impl From<GeneratorArg> for GeneratorChoice {
    fn from(g: GeneratorArg) -> Self {
        match g {
            GeneratorArg::Auto => GeneratorChoice::Auto,
            GeneratorArg::Hashing => GeneratorChoice::Hashing,
            GeneratorArg::Sa => GeneratorChoice::SuffixArray,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Sparse,
    Dense,
}

impl From<StrategyArg> for RowStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => RowStrategy::Auto,
            StrategyArg::Sparse => RowStrategy::ForceSparse,
            StrategyArg::Dense => RowStrategy::ForceDense,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UpdateArg {
    Kstep,
    Tree,
}

impl From<UpdateArg> for PlusUpdate {
    fn from(u: UpdateArg) -> Self {
        match u {
            UpdateArg::Kstep => PlusUpdate::KStep,
            UpdateArg::Tree => PlusUpdate::Tree,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_range_parsing() {
        assert_eq!(parse_k_range("26..30"), Ok(26..=30));
        assert_eq!(parse_k_range("3..3"), Ok(3..=3));
        assert!(parse_k_range("5..3").is_err());
        assert!(parse_k_range("0..3").is_err());
        assert!(parse_k_range("7").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
