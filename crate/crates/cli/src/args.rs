//! Command-line surface. Parameter values are free-form strings here and
//! parsed into exact rationals later, so `--beta -5/4` and `--beta 1.25`
//! both work; every flag that can start with a minus sign opts into hyphen
//! values explicitly.

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "ep-scan",
    version,
    about = "Exact spectral analysis of one-parameter matrix families",
    long_about = "Tracks the eigenvalues of H(β) = A + βB with exact arithmetic: where they \
collide, whether a collision keeps a full eigenspace or degrades into a Jordan block, and \
which permutation symmetries protect it. Ships with the built-in demonstration family \
'paper'; pass --family JSON for your own matrices."
)]
pub struct Cli {
    /// Also write the report as a JSON document to this file
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<std::path::PathBuf>,

    /// Residual tolerance for the numeric eigenvector backend; exact paths
    /// ignore it
    #[arg(long, global = true, default_value_t = 1e-10, value_name = "TOL", value_parser = parse_tol)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a number"))?;
    if !v.is_finite() || v <= 0.0 {
        return Err("tolerance must be positive and finite".into());
    }
    Ok(v)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, multiplicities, and eigenspaces at one parameter value
    Analyze(AtArgs),
    /// Locate and classify every parameter where eigenvalues collide
    Critical(FamilyArg),
    /// Permutation matrices leaving the matrix invariant, and whether the
    /// eigenspaces respect them
    Symmetry(AtArgs),
    /// Jordan block structure, chains, and the similarity transform
    Jordan(AtArgs),
    /// Sample eigenvalue branches over a parameter range; optionally write
    /// CSV and SVG files
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArg {
    /// Preset name, inline JSON {"n":2,"A":[[..]],"B":[[..]]}, or a file with that JSON
    #[arg(long, default_value = "paper")]
    pub family: String,
}

#[derive(Debug, Args)]
pub struct AtArgs {
    #[command(flatten)]
    pub family: FamilyArg,

    /// Parameter value: integer, fraction, or decimal (exact)
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArg,

    /// Parameter range as lo:hi (each an integer, fraction, or decimal)
    #[arg(long, allow_hyphen_values = true)]
    pub range: String,

    /// Number of evenly spaced samples
    #[arg(long, default_value_t = 401)]
    pub steps: usize,

    /// Write the branch and critical-point table as CSV
    #[arg(long, value_name = "PATH")]
    pub csv: Option<std::path::PathBuf>,

    /// Plot the real parts as SVG
    #[arg(long = "svg-re", value_name = "PATH")]
    pub svg_re: Option<std::path::PathBuf>,

    /// Plot the imaginary parts as SVG
    #[arg(long = "svg-im", value_name = "PATH")]
    pub svg_im: Option<std::path::PathBuf>,

    /// SVG width in pixels
    #[arg(long, default_value_t = 800)]
    pub width: u32,

    /// SVG height in pixels
    #[arg(long, default_value_t = 600)]
    pub height: u32,
}
