use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::grid::{parse_number, parse_triple};
use crate::report::Format;

/// Clausen 3F2 sums, coefficient class checks and theorem sweeps.
///
/// Exit codes: 0 success, 1 io error, 2 bad input, 3 non-convergence,
/// 4 a sweep violation.
#[derive(Debug, Parser)]
#[command(name = "clausen", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate 3F2(a, b, c; d, e; z); d and e default to b+1 and c+1.
    #[command(name = "eval3f2")]
    Eval3f2(Eval3f2Args),
    /// Closed forms of the sums at z = 1 against direct summation.
    Sums(SumsArgs),
    /// Coefficient criteria and disc probes for a truncated series.
    CheckClass(CheckClassArgs),
    /// Coefficients of the Clausen convolution operator applied to a series.
    ApplyOperator(ApplyOperatorArgs),
    /// Sweep one theorem over a parameter grid and write a report.
    Verify(VerifyArgs),
    /// Sweep several theorems, one report file each.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct Eval3f2Args {
    #[arg(long, value_parser = parse_number)]
    pub a_re: f64,
    #[arg(long, value_parser = parse_number, default_value = "0")]
    pub a_im: f64,
    #[arg(long, value_parser = parse_number)]
    pub b: f64,
    #[arg(long, value_parser = parse_number)]
    pub c: f64,
    #[arg(long, value_parser = parse_number, requires = "e")]
    pub d: Option<f64>,
    #[arg(long, value_parser = parse_number, requires = "d")]
    pub e: Option<f64>,
    #[arg(long, value_parser = parse_number, default_value = "1")]
    pub z_re: f64,
    #[arg(long, value_parser = parse_number, default_value = "0")]
    pub z_im: f64,
    /// Relative tolerance on the certified remainder.
    #[arg(long, value_parser = parse_number, default_value = "1e-12")]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SumsArgs {
    /// |a|; the sums depend on a only through its modulus.
    #[arg(long, value_parser = parse_number)]
    pub a: f64,
    #[arg(long, value_parser = parse_number)]
    pub b: f64,
    #[arg(long, value_parser = parse_number)]
    pub c: f64,
    #[arg(long, value_parser = parse_number, default_value = "1e-12")]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CheckClassArgs {
    /// Coefficients a_2, a_3, … inline as "[0.1, 0.02]" or a file path.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    #[arg(long, value_parser = parse_number)]
    pub lambda: f64,
    #[arg(long, value_parser = parse_number)]
    pub alpha: f64,
    /// Also sample the defining functionals on a polar grid.
    #[arg(long)]
    pub probe: bool,
    #[arg(long, value_parser = parse_number, default_value = "0.99")]
    pub radius: f64,
    /// Radial and angular grid size.
    #[arg(long, default_value_t = 300)]
    pub grid: usize,
    /// Also check the R^tau(A, B) coefficient bound, given as "A:B:tau".
    #[arg(long, allow_hyphen_values = true)]
    pub janowski: Option<String>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ApplyOperatorArgs {
    #[arg(long, value_parser = parse_number)]
    pub a_re: f64,
    #[arg(long, value_parser = parse_number, default_value = "0")]
    pub a_im: f64,
    #[arg(long, value_parser = parse_number)]
    pub b: f64,
    #[arg(long, value_parser = parse_number)]
    pub c: f64,
    /// Coefficients a_2, a_3, … inline as "[0.1, 0.02]" or a file path.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
}

/// Sweep axes. Each axis is a comma list; `p/q` fractions are accepted.
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long = "a", value_parser = parse_number, value_delimiter = ',', allow_hyphen_values = true, default_value = "0.1,0.3,0.5,0.9")]
    pub a_abs: Vec<f64>,
    #[arg(long, value_parser = parse_number, value_delimiter = ',', allow_hyphen_values = true, default_value = "0.5,1.5,2.5,3.5")]
    pub b: Vec<f64>,
    #[arg(long, value_parser = parse_number, value_delimiter = ',', allow_hyphen_values = true, default_value = "0.5,1.5,2.5,3.5")]
    pub c: Vec<f64>,
    #[arg(long, value_parser = parse_number, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0.25,0.5")]
    pub lambda: Vec<f64>,
    #[arg(long, value_parser = parse_number, value_delimiter = ',', allow_hyphen_values = true, default_value = "1.1,1.2,4/3")]
    pub alpha: Vec<f64>,
    /// `A:B:tau` triples for theorems 3 and 4.
    #[arg(long, value_parser = parse_triple, value_delimiter = ',', allow_hyphen_values = true, default_value = "1:-1:0.2,0.5:0:0.5,1:0:0.4")]
    pub janowski: Vec<(f64, f64, f64)>,
    /// Absolute slack added to alpha - 1 in the brute-force comparison.
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true, default_value = "1e-9")]
    pub tol: f64,
    /// Remainder target for the brute-force sums, relative to alpha - 1.
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true, default_value = "1e-12")]
    pub tail_target: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub theorem: u8,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4", value_parser = clap::value_parser!(u8).range(1..=4))]
    pub theorems: Vec<u8>,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Directory for `theorem<N>.<format>` reports.
    #[arg(long)]
    pub output_dir: PathBuf,
}
