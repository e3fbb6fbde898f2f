//! `dicolor`: command-line access to the digraph coloring toolkit.
//!
//! Every subcommand prints its result on stdout (JSON, or the native text
//! format for `gen`, `dot` and `lmatrix encode/decode`) and, with
//! `--json PATH`, writes a [`report::RunReport`] envelope.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 input error, 3 size limit.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "dicolor", version, about = "Order-dependent digraph coloring toolkit")]
pub struct Cli {
    /// Edge-list file (`p n`, `a u v`, `l v label`).
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write a JSON run report to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Size limit for the command's exact search.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scan {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Psi,
    Psisd,
    Grundy,
    Interpolate,
    Chain,
    ChiPsi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Sandwich,
    Prop8,
    Chain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact dichromatic number with a witness partition.
    Chid {
        /// Cross-check against the minimum over all vertex orders.
        #[arg(long)]
        oracle: bool,
        /// Compare chi_d = chi(G) with "every arc is symmetric"; without
        /// --input, search all digraphs on up to 4 vertices.
        #[arg(long)]
        check_iff_claim: bool,
    },
    /// Check a coloring (`<vertex> <colour>` lines) and find a realizing order.
    Validate {
        #[arg(long, value_name = "FILE")]
        colors: PathBuf,
    },
    /// Color along a vertex order, or scan all orders.
    Scolor {
        /// Comma-separated names, e.g. `v1,v3,v2`; defaults to index order.
        #[arg(long, conflicts_with = "scan")]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Mode::Greedy)]
        mode: Mode,
        #[arg(long, value_enum)]
        scan: Option<Scan>,
    },
    /// Every bound on the dichromatic number, each flagged hold or fail.
    Bounds,
    /// Complete-partition numbers.
    Partitions {
        #[arg(long, value_enum)]
        what: What,
    },
    /// L-matrix encoding, decoding and checks.
    Lmatrix {
        #[command(subcommand)]
        op: LmatrixOp,
    },
    /// Run a checker over seeded random digraphs.
    Ensemble {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 0.4)]
        prob: f64,
        #[arg(long)]
        no_digons: bool,
    },
    /// Recompute the quantities of the built-in figure instances.
    Figures,
    /// Generate a random digraph in edge-list format.
    Gen {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0.4)]
        prob: f64,
        /// Acyclic output.
        #[arg(long, conflicts_with = "no_digons")]
        dag: bool,
        #[arg(long)]
        no_digons: bool,
        /// Attach random labels from 1..=K.
        #[arg(long, value_name = "K")]
        labels: Option<u32>,
    },
    /// Export the input as Graphviz DOT.
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum LmatrixOp {
    /// Labeled edge list to matrix CSV.
    Encode {
        /// Aligned table instead of CSV.
        #[arg(long)]
        pretty: bool,
    },
    /// Matrix CSV to labeled edge list.
    Decode {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Check the triple conditions.
    Validate {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Literal and semantic acyclic color-matrix tests.
    AcyclicCheck {
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
