//! Command-line front end for the `lcsk` solver.
//!
//! [`run`] parses arguments, solves and writes the report. It returns the
//! process exit code: 0 on success, 1 on input or feasibility errors, 2 on
//! usage errors.

mod args;
mod input;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use lcsk::oracle::{dominant_points, dp_table, validate_chain};
use lcsk::{solve, Mode, Sequence, SolverConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use args::{BenchArgs, Cli, Command, InputArgs, OracleArgs, RunArgs, SolverArgs};
pub use input::{parse_fasta, parse_plain};
pub use report::{bench_table, BenchRow, HistogramReport, RunReport, StatsReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Solver(#[from] lcsk::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "lcsk: {}", line.trim_start_matches("error: "));
            return 2;
        }
    };
    let outcome = match &cli.command {
        None => run_solve(&cli.run, stdout),
        Some(Command::Bench(args)) => run_bench(args, stdout),
        Some(Command::Oracle(args)) => run_oracle(args, stdout),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "lcsk: {e}");
            e.exit_code()
        }
    }
}

fn config(mode: Mode, k: usize, solver: &SolverArgs) -> SolverConfig {
    let cfg = SolverConfig::new(mode, k)
        .with_row_strategy(solver.strategy.into())
        .with_generator(solver.generator.into())
        .with_alphabet(solver.alphabet.into());
    if mode == Mode::LcskPlus {
        cfg.with_update(solver.lcskplus_update.into())
    } else {
        cfg
    }
}

fn both_inputs(input: &InputArgs) -> Result<(Sequence, Sequence), CliError> {
    let a = input::load(input.a.as_deref(), input.a_str.as_deref(), input.fasta, input.fold_case)?
        .ok_or_else(|| CliError::Usage("missing first sequence: give --a FILE or --a-str SEQ".into()))?;
    let b = input::load(input.b.as_deref(), input.b_str.as_deref(), input.fasta, input.fold_case)?
        .ok_or_else(|| CliError::Usage("missing second sequence: give --b FILE or --b-str SEQ".into()))?;
    Ok((a.0, b.0))
}

fn run_solve(args: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let k = args
        .k
        .ok_or_else(|| CliError::Usage("missing -k".into()))? as usize;
    let (a, b) = both_inputs(&args.input)?;
    let mode = Mode::from(args.mode);
    if mode == Mode::Lcsk && args.solver.lcskplus_update == args::UpdateArg::Tree {
        return Err(CliError::Usage("--lcskplus-update tree requires --mode lcskplus".into()));
    }
    let cfg = config(mode, k, &args.solver).with_reconstruction(args.reconstruct);
    let start = Instant::now();
    let res = solve(&a, &b, &cfg)?;
    let wall_time = start.elapsed().as_secs_f64();
    if let Some(segments) = res.segments() {
        match validate_chain(a.symbols(), b.symbols(), k, mode, &segments) {
            Ok(score) if score == res.length => {}
            Ok(score) => {
                return Err(CliError::Input(format!(
                    "internal error: chain scores {score} but length is {}",
                    res.length
                )))
            }
            Err(why) => return Err(CliError::Input(format!("internal error: invalid chain, {why}"))),
        }
    }
    let report = RunReport::new(&res, a.len(), b.len(), wall_time);
    if args.json {
        serde_json::to_writer(&mut *out, &report).map_err(std::io::Error::from)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", report.to_text(args.stats))?;
    }
    Ok(())
}

fn random_dna(len: usize, seed: u64) -> Sequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Sequence::new((0..len).map(|_| u32::from(b"ACGT"[rng.gen_range(0..4)])).collect())
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ks = match (args.k, &args.k_range) {
        (Some(k), _) => k as usize..=k as usize,
        (None, Some(range)) => range.clone(),
        (None, None) => return Err(CliError::Usage("missing -k or --k-range".into())),
    };
    let inp = &args.input;
    let (a, a_label) = match args.random_dna {
        Some(n) => (random_dna(n, args.seed), format!("random-dna-{n}")),
        None => input::load(inp.a.as_deref(), inp.a_str.as_deref(), inp.fasta, inp.fold_case)?
            .ok_or_else(|| CliError::Usage("missing input: give --a, --a-str or --random-dna".into()))?,
    };
    let (b, label) = match input::load(inp.b.as_deref(), inp.b_str.as_deref(), inp.fasta, inp.fold_case)? {
        Some((b, b_label)) => (Some(b), format!("{a_label} vs {b_label}")),
        None => (None, format!("{a_label} self")),
    };
    let b = b.as_ref().unwrap_or(&a);
    let mode = Mode::from(args.mode);
    let mut rows = Vec::new();
    for k in ks {
        let cfg = config(mode, k, &args.solver).with_reconstruction(true);
        let res = solve(&a, b, &cfg)?;
        rows.push(BenchRow {
            k,
            label: label.clone(),
            match_pairs_total: res.stats.match_pairs_total,
            max_nodes_in_memory: res.stats.max_nodes_in_memory,
            compression_factor: res.stats.compression_factor,
        });
    }
    if args.json {
        serde_json::to_writer(&mut *out, &rows).map_err(std::io::Error::from)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", bench_table(&rows))?;
    }
    Ok(())
}

fn run_oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (a, b) = both_inputs(&args.input)?;
    let table = dp_table(a.symbols(), b.symbols(), args.k as usize, args.mode.into());
    writeln!(out, "length: {}", table.result())?;
    if args.dominant {
        for p in dominant_points(&table) {
            writeln!(out, "{} {} {}", p.i, p.j, p.q)?;
        }
    }
    Ok(())
}
