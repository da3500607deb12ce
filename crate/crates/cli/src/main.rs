//! `ep-scan`: track the eigenvalues of H(β) = A + βB exactly — collisions,
//! Jordan structure at the collisions, permutation symmetry, and parameter
//! sweeps with CSV/SVG output.
//!
//! Exit codes tell scripts what went wrong: 0 success, 2 bad input (CLI
//! usage, malformed family JSON, bad parameter spellings), 3 a mathematical
//! refusal (the method cannot certify an answer for this input and says so
//! instead of guessing), 4 I/O failure, 1 anything unexpected.

use clap::Parser;
use epscan::Error;

mod args;
mod commands;
mod family;
mod report;

fn main() {
    let cli = args::Cli::parse();
    if let Err(e) = commands::run(cli) {
        eprintln!("ep-scan: {e}");
        std::process::exit(exit_code(&e));
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        // the user gave us something malformed or out of supported range
        Error::DimensionCap { .. }
        | Error::NotAPermutation { .. }
        | Error::InvalidSweepRange { .. }
        | Error::InvalidSteps { .. }
        | Error::NotSquare { .. }
        | Error::DimensionMismatch { .. }
        | Error::ParseRational { .. }
        | Error::BadInput { .. }
        | Error::ZeroDenominator
        | Error::NonFinite { .. } => 2,
        // well-posed input, but no certified answer exists at this precision
        Error::DegenerateFamily
        | Error::IllPosedJordan { .. }
        | Error::RootFinderDiverged { .. }
        | Error::InternalRankInconsistency { .. }
        | Error::NoBranches
        | Error::NotAnEigenvalue { .. }
        | Error::NonSimpleEigenvalue { .. }
        | Error::InvalidChainHead { .. }
        | Error::NotAGroup => 3,
        Error::Io { .. } => 4,
        _ => 1,
    }
}
