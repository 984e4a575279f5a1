use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "symbases",
    version,
    about = "Covers of additive bases and symmetric-basis analysis"
)]
pub struct Cli {
    /// Output format; defaults to `table` on a terminal and `json` otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Jsonl,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BasisInput {
    /// Comma-separated denominations, e.g. `1,3,6,10`.
    #[arg(long)]
    pub basis: Option<String>,
    /// File with one basis per line; `#` comments and blank lines are skipped.
    #[arg(long)]
    pub basis_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    A5,
    A9,
    A10,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Symmetric,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cover n(h, A): every 1..=n is a sum of at most h elements.
    Cover {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
    },
    /// Covers for h = 1..=h-max.
    Profile {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h_max: u32,
    },
    /// Minimal-weight generation of x with at most h stamps.
    Generation {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long)]
        x: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
    },
    /// Cover by exhaustive enumeration of coefficient vectors.
    BruteCover {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
        /// Maximum number of coefficient vectors to enumerate.
        #[arg(long, default_value_t = symbases::DEFAULT_ENUMERATION_CEILING)]
        ceiling: u128,
    },
    /// Symmetry, difference sequence and the a_{k-1} = a_k - 1 condition.
    Symmetry {
        #[command(flatten)]
        input: BasisInput,
    },
    /// Extend a half basis to a symmetric one.
    Symmetrize {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long, value_enum)]
        parity: Parity,
    },
    /// Reflect the h0-generation of x < a_k to one of h0 * a_k - x.
    Reflect {
        #[command(flatten)]
        input: BasisInput,
        #[arg(long)]
        x: u64,
    },
    /// h0, h1 and the conjecture verdict.
    Analyze {
        #[command(flatten)]
        input: BasisInput,
        /// Largest h tried for h1 (default: max(h0, 2h0-2) if symmetric, else 64).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        cap: Option<u32>,
    },
    /// Members of the parametric counterexample families.
    Family {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        p: u64,
    },
    /// List the bases in a box.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        ak_max: u64,
        #[arg(long, value_enum, default_value_t = Mode::Symmetric)]
        mode: Mode,
    },
    /// Analyze every basis in a box, writing JSONL.
    Scan {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        ak_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        cap: Option<u32>,
        #[arg(long, value_enum, default_value_t = Mode::Symmetric)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
        /// Continue from the checkpoint next to the output file.
        #[arg(long)]
        resume: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
        /// Stop after this many new records without writing the summary.
        #[arg(long, hide = true)]
        stop_after: Option<u64>,
    },
    /// Exhaustive search for extremal h-bases with k elements.
    Extremal {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Largest a_k considered (default: extremal cover for k-1, plus one).
        #[arg(long)]
        ak_ceiling: Option<u64>,
        /// Refuse search spaces with more candidates than this.
        #[arg(long, default_value_t = symbases::search::DEFAULT_CANDIDATE_CEILING)]
        candidate_ceiling: u128,
    },
}
