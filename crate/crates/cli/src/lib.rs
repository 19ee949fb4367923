//! Command-line front end for `hk-core`.
//!
//! Data goes to stdout as JSON (default) or CSV; diagnostics go to stderr.
//! Exit codes: 0 on success, 2 for bad arguments or inputs outside a
//! routine's domain, 3 when two independent computations disagree.

pub mod commands;
pub mod output;
pub mod sieve;

use std::io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::run;
pub use output::OutputRecord;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hk_core::Error),
    #[error("consistency failure: {0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_internal() => 3,
            CliError::Core(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hk", version, about = "Exact Hilbert-Kunz colengths and limits for sum x_i^d_i")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Add approximate decimal values next to the exact ones.
    #[arg(long, global = true)]
    pub decimal: bool,
    /// Largest quotient-ring dimension the brute-force routines will build.
    #[arg(long, default_value_t = hk_core::DEFAULT_MAX_DIM, global = true)]
    pub max_dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DpMethod {
    Formula,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Upper {
    /// v_i = ceil(p / d_i)
    Ceil,
    /// v_i = floor(p / d_i) + 1
    FloorPlusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Choice {
    /// a_i = floor(p / d_i), parity fixed by raising a_1
    Floor,
    /// a_i = ceil(p / d_i), parity fixed by lowering a_1
    Ceil,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalPoint {
    #[value(name = "1")]
    One,
    #[value(name = "-1")]
    MinusOne,
    #[value(name = "i")]
    I,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Limit of the Hilbert-Kunz multiplicity as p -> infinity, with the C_lambda table.
    Limit {
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        /// Evaluate C_lambda up to |lambda| = s and fail if any extra term is nonzero.
        #[arg(long)]
        verify_vanishing: bool,
    },
    /// D_p(a_1, ..., a_s), the colength of (sum x_i, x_1^a_1, ..., x_s^a_s).
    Dp {
        #[arg(long)]
        p: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<u64>,
        #[arg(long, value_enum, default_value_t = DpMethod::Formula)]
        method: DpMethod,
    },
    /// e_1(h) by brute force, with the D_p sandwich around it.
    E1 {
        #[arg(long)]
        p: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Upper::Ceil)]
        upper: Upper,
    },
    /// Table of d p^(1-s) D_p(a) against the limit for each prime in a range.
    Converge {
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[arg(long)]
        pmin: u64,
        #[arg(long)]
        pmax: u64,
        #[arg(long, value_enum, default_value_t = Choice::Floor)]
        choice: Choice,
    },
    /// Coefficients of sec z + tan z up to z^n and the zigzag numbers.
    Zigzag {
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of the Eulerian polynomial A_n, optionally evaluated.
    Eulerian {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        eval: Option<EvalPoint>,
    },
}
