use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use interp_core::Formula;

#[derive(Debug, Parser)]
#[command(
    name = "interp",
    version,
    about = "Interpolate finite cyclic groups of unitary matrices into one-parameter unitary groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate m(θ) for a permutation, a matrix file or a catalog entry.
    Eval(EvalArgs),
    /// Tabulate |m_j(θ)|² (and Re/Im in JSON) on a uniform θ grid over [0, 2π].
    Coeffs(CoeffsArgs),
    /// Print the Hermitian generator g of the curve.
    Generator(GeneratorArgs),
    /// Maximal cyclic subgroups of P(n) as DOT or JSON.
    CycleGraph(CycleGraphArgs),
    /// Table of the Landau function L(n) with witness partitions.
    Landau(LandauArgs),
    /// Check the group law, unitarity, XU, Cauchy and generator identities.
    Verify(VerifyArgs),
    /// Named gates and curves.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
    Pretty,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Dot => "dot",
            OutputFormat::Pretty => "pretty",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaArg {
    Direct,
    Compact,
    Barycentric,
    Fourier,
}

impl From<FormulaArg> for Formula {
    fn from(f: FormulaArg) -> Self {
        match f {
            FormulaArg::Direct => Formula::Direct,
            FormulaArg::Compact => Formula::Compact,
            FormulaArg::Barycentric => Formula::Barycentric,
            FormulaArg::Fourier => Formula::Fourier,
        }
    }
}

/// Exactly one source for the matrix q.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Permutation images, comma separated (0-indexed), e.g. `1,2,3,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub perm: Option<String>,
    /// Path to a JSON matrix `{"n": .., "entries": [[[re, im], ..], ..]}`.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Catalog entry name (see `catalog list`).
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct DetectArgs {
    /// Largest order searched for when q comes from a matrix.
    #[arg(long, default_value_t = 64)]
    pub p_max: usize,
    /// Require q to be 2^w x 2^w.
    #[arg(long)]
    pub qubits: Option<u32>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ThetaArgs {
    /// Angle in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Angle as a fraction `a/b` of a full turn: θ = 2π·a/b.
    #[arg(long, allow_hyphen_values = true)]
    pub theta_frac: Option<String>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub detect: DetectArgs,
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[arg(long, value_enum, default_value = "fourier")]
    pub formula: FormulaArg,
    /// json, csv or pretty.
    #[arg(long, value_enum, default_value = "pretty")]
    pub fmt: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub order: usize,
    /// Number of θ samples, both endpoints included.
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "fourier")]
    pub formula: FormulaArg,
    /// csv or json.
    #[arg(long, value_enum, default_value = "csv")]
    pub fmt: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratorForm {
    Closed,
    Fourier,
    Both,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub detect: DetectArgs,
    #[arg(long, value_enum, default_value = "closed")]
    pub form: GeneratorForm,
    /// json or pretty.
    #[arg(long, value_enum, default_value = "pretty")]
    pub fmt: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).multiple(false)))]
pub struct CycleGraphArgs {
    /// Degree of the permutation group P(n), at most 6.
    #[arg(long, group = "size")]
    pub n: Option<usize>,
    /// Use n = 2^w.
    #[arg(long, group = "size")]
    pub qubits: Option<u32>,
    /// dot or json.
    #[arg(long, value_enum, default_value = "dot")]
    pub fmt: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LandauArgs {
    /// Rows n = 1..=n_max, at most 120.
    #[arg(long)]
    pub n_max: usize,
    /// csv, json or pretty.
    #[arg(long, value_enum, default_value = "csv")]
    pub fmt: OutputFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(id = "source", required = true, multiple = false, args = ["perm", "matrix", "catalog", "random"])]
pub struct VerifySource {
    #[arg(long, allow_hyphen_values = true)]
    pub perm: Option<String>,
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    #[arg(long)]
    pub catalog: Option<String>,
    /// Random permutation curves: `--random n=<n> trials=<t>`.
    #[arg(long, num_args = 1..=2, value_name = "KEY=VALUE")]
    pub random: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: VerifySource,
    #[arg(long, default_value_t = 64)]
    pub p_max: usize,
    /// Seed for sampled angles and random permutations.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Where to write failure diagnostics (default ./interp-verify-<timestamp>.json).
    #[arg(long)]
    pub diagnostics: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List catalog entries.
    List {
        /// pretty or json.
        #[arg(long, value_enum, default_value = "pretty")]
        fmt: OutputFormat,
    },
}
