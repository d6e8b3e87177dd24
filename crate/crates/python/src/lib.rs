//! Python module `pylcsk`.
//!
//! Sequences may be passed as `str` (one symbol per code point) or `bytes`.

use lcsk::matchgen::generate;
use lcsk::oracle::{self, dp_table};
use lcsk::{
    AlphabetKind, GeneratorChoice, Mode, PlusUpdate, RowStrategy, Segment, Sequence, SolverConfig,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

#[derive(FromPyObject)]
enum SeqInput {
    Text(String),
    Bytes(Vec<u8>),
}

impl SeqInput {
    fn into_sequence(self, fold_case: bool) -> Sequence {
        let seq = match self {
            SeqInput::Text(s) => Sequence::from(s.as_str()),
            SeqInput::Bytes(b) => Sequence::from_bytes(&b),
        };
        if fold_case {
            seq.fold_case()
        } else {
            seq
        }
    }
}

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    match mode {
        "lcsk" => Ok(Mode::Lcsk),
        "lcskplus" => Ok(Mode::LcskPlus),
        other => Err(value_error(format!("mode must be 'lcsk' or 'lcskplus', got {other:?}"))),
    }
}

fn parse_generator(generator: &str) -> PyResult<GeneratorChoice> {
    match generator {
        "auto" => Ok(GeneratorChoice::Auto),
        "hashing" => Ok(GeneratorChoice::Hashing),
        "sa" | "suffix-array" => Ok(GeneratorChoice::SuffixArray),
        other => Err(value_error(format!("unknown generator {other:?}"))),
    }
}

fn parse_alphabet(alphabet: &str) -> PyResult<AlphabetKind> {
    match alphabet {
        "auto" => Ok(AlphabetKind::Discover),
        "dna" => Ok(AlphabetKind::Dna),
        "byte" => Ok(AlphabetKind::Byte),
        other => Err(value_error(format!("unknown alphabet {other:?}"))),
    }
}

fn parse_strategy(strategy: &str) -> PyResult<RowStrategy> {
    match strategy {
        "auto" => Ok(RowStrategy::Auto),
        "sparse" => Ok(RowStrategy::ForceSparse),
        "dense" => Ok(RowStrategy::ForceDense),
        other => Err(value_error(format!("unknown strategy {other:?}"))),
    }
}

fn parse_update(update: &str) -> PyResult<PlusUpdate> {
    match update {
        "kstep" => Ok(PlusUpdate::KStep),
        "tree" => Ok(PlusUpdate::Tree),
        other => Err(value_error(format!("unknown update rule {other:?}"))),
    }
}

/// Outcome of one solve.
#[pyclass(frozen, get_all, skip_from_py_object, module = "pylcsk")]
#[derive(Clone, Debug)]
pub struct SolveResult {
    mode: String,
    k: usize,
    /// Blocks for "lcsk", characters for "lcskplus".
    length: usize,
    /// `(i, j, len)` segments of an optimal chain, or `None`.
    chain: Option<Vec<(usize, usize, usize)>>,
    /// Match pairs of that chain, or `None`.
    pairs: Option<Vec<(usize, usize)>>,
    match_pairs_total: u64,
    max_nodes_in_memory: u64,
    compression_factor: Option<f64>,
    generator_used: String,
    sparse_rows: usize,
    dense_rows: usize,
}

#[pymethods]
impl SolveResult {
    fn __repr__(&self) -> String {
        format!(
            "SolveResult(mode={:?}, k={}, length={}, match_pairs_total={}, max_nodes_in_memory={})",
            self.mode, self.k, self.length, self.match_pairs_total, self.max_nodes_in_memory
        )
    }
}

impl From<lcsk::SolveResult> for SolveResult {
    fn from(res: lcsk::SolveResult) -> Self {
        Self {
            mode: res.mode.to_string(),
            k: res.k,
            length: res.length,
            chain: res
                .segments()
                .map(|segs| segs.iter().map(|s| (s.i, s.j, s.len)).collect()),
            pairs: res
                .chain
                .as_ref()
                .map(|c| c.iter().map(|p| (p.i, p.j)).collect()),
            match_pairs_total: res.stats.match_pairs_total,
            max_nodes_in_memory: res.stats.max_nodes_in_memory,
            compression_factor: res.stats.compression_factor,
            generator_used: res.generator_used.to_string(),
            sparse_rows: res.strategy_histogram.sparse,
            dense_rows: res.strategy_histogram.dense,
        }
    }
}

/// Solve LCSk ("lcsk") or LCSk+ ("lcskplus") for `a` and `b`.
#[pyfunction]
#[pyo3(signature = (
    a, b, k, mode = "lcskplus", reconstruct = false, generator = "auto",
    alphabet = "auto", strategy = "auto", update = "kstep", fold_case = false
))]
#[allow(clippy::too_many_arguments)]
fn solve(
    py: Python<'_>,
    a: SeqInput,
    b: SeqInput,
    k: usize,
    mode: &str,
    reconstruct: bool,
    generator: &str,
    alphabet: &str,
    strategy: &str,
    update: &str,
    fold_case: bool,
) -> PyResult<SolveResult> {
    let mode = parse_mode(mode)?;
    let mut cfg = SolverConfig::new(mode, k)
        .with_reconstruction(reconstruct)
        .with_generator(parse_generator(generator)?)
        .with_alphabet(parse_alphabet(alphabet)?)
        .with_row_strategy(parse_strategy(strategy)?);
    let update = parse_update(update)?;
    if mode == Mode::LcskPlus || update == PlusUpdate::Tree {
        cfg = cfg.with_update(update);
    }
    let (a, b) = (a.into_sequence(fold_case), b.into_sequence(fold_case));
    py.detach(|| lcsk::solve(&a, &b, &cfg))
        .map(SolveResult::from)
        .map_err(value_error)
}

/// All `(i, j)` with `a[i:i+k] == b[j:j+k]`, in row-major order.
#[pyfunction]
#[pyo3(signature = (a, b, k, generator = "auto", alphabet = "auto"))]
fn match_pairs(
    a: SeqInput,
    b: SeqInput,
    k: usize,
    generator: &str,
    alphabet: &str,
) -> PyResult<Vec<(usize, usize)>> {
    let (a, b) = (a.into_sequence(false), b.into_sequence(false));
    let stream = generate(&a, &b, k, parse_generator(generator)?, parse_alphabet(alphabet)?)
        .map_err(value_error)?;
    Ok(stream.pairs().map(|p| (p.i, p.j)).collect())
}

/// Length from the quadratic reference DP. Meant for small inputs.
#[pyfunction]
#[pyo3(signature = (a, b, k, mode = "lcskplus"))]
fn oracle_length(a: SeqInput, b: SeqInput, k: usize, mode: &str) -> PyResult<usize> {
    if k == 0 {
        return Err(value_error(lcsk::Error::ZeroK));
    }
    let (a, b) = (a.into_sequence(false), b.into_sequence(false));
    Ok(dp_table(a.symbols(), b.symbols(), k, parse_mode(mode)?).result())
}

/// `(i, j, q)` cells where value `q` first appears in the reference table.
#[pyfunction]
#[pyo3(signature = (a, b, k, mode = "lcskplus"))]
fn dominant_points(a: SeqInput, b: SeqInput, k: usize, mode: &str) -> PyResult<Vec<(usize, usize, usize)>> {
    if k == 0 {
        return Err(value_error(lcsk::Error::ZeroK));
    }
    let (a, b) = (a.into_sequence(false), b.into_sequence(false));
    let table = dp_table(a.symbols(), b.symbols(), k, parse_mode(mode)?);
    Ok(oracle::dominant_points(&table).into_iter().map(|p| (p.i, p.j, p.q)).collect())
}

/// Score of a chain of `(i, j, len)` segments; raises `ValueError` if invalid.
#[pyfunction]
#[pyo3(signature = (a, b, k, segments, mode = "lcskplus"))]
fn validate_chain(
    a: SeqInput,
    b: SeqInput,
    k: usize,
    segments: Vec<(usize, usize, usize)>,
    mode: &str,
) -> PyResult<usize> {
    let (a, b) = (a.into_sequence(false), b.into_sequence(false));
    let segments: Vec<Segment> = segments.into_iter().map(|(i, j, len)| Segment::new(i, j, len)).collect();
    oracle::validate_chain(a.symbols(), b.symbols(), k, parse_mode(mode)?, &segments).map_err(value_error)
}

#[pymodule]
fn pylcsk(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SolveResult>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(match_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_length, m)?)?;
    m.add_function(wrap_pyfunction!(dominant_points, m)?)?;
    m.add_function(wrap_pyfunction!(validate_chain, m)?)?;
    Ok(())
}
