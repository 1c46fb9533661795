use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mshape", version, about = "Graded Artin-Tate shape calculus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Maximum number of tilings the exhaustive search collects.
    #[arg(long, default_value_t = 10_000, global = true)]
    pub cap: usize,

    /// Largest target rank the exhaustive search accepts.
    #[arg(long = "rank-bound", default_value_t = 200, global = true)]
    pub rank_bound: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Odd prime p.
    #[arg(long)]
    pub p: u64,
    /// Exponent n >= 1; the degree is N = p^n.
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    /// Projective space of dimension N-1: F F ... F.
    Proj,
    /// Weil transfer of P^{N-1}.
    Weil,
    /// Upper shape F F ... F.
    Upper1,
    /// Upper shape F A F ... F.
    Upper2,
    /// Unitary involution variety.
    My,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridKind {
    /// U{0} + (U*A){1} + U{2} + ... with U = F F ... F.
    #[value(name = "M")]
    M,
    /// U{0} + ... + U{N-1} with U = F A ... F.
    Second,
    /// U{0} + ... + U{N-2} with U = F A ... F.
    Third,
    /// Line grid of the Weil transfer shape.
    #[value(name = "shapeR")]
    ShapeR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TileSet {
    /// {U, U*A} with U = F F ... F.
    Case1,
    /// {U} with U = F A ... F.
    Case2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Main1,
    Main2,
    Main3,
    Lemma,
    Identity,
    Proposition,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a shape and its class counts.
    Shape {
        #[arg(value_enum)]
        kind: ShapeKind,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Draw a decomposition as rows of shifted classes.
    Grid {
        #[arg(value_enum)]
        decomposition: GridKind,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Tile a target shape with a tile set.
    Decompose {
        #[command(flatten)]
        params: ParamArgs,
        /// Generated target shape.
        #[arg(long, value_enum, default_value_t = ShapeKind::Weil, conflicts_with = "input")]
        target: ShapeKind,
        /// Read the target from a structured shape document instead.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        tiles: TileSet,
    },
    /// Run one verification and print its report.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run every verification over a range of parameters.
    Sweep {
        /// Comma-separated odd primes.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        p: Vec<u64>,
        #[arg(long = "n-max")]
        n_max: u32,
        /// Instances with p^n above this are skipped.
        #[arg(long = "max-degree", default_value_t = 81)]
        max_degree: u64,
    },
}
