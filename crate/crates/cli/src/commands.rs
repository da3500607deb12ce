//! One function per subcommand: resolve the family, run the library call,
//! build the report document, print it (and mirror it to a JSON file when
//! `--json PATH` asks for one). Every fallible step propagates the library
//! error unchanged so main can map it onto an exit code.

use std::path::Path;

use epscan::{
    analyze_with, check_eigenvector_symmetry, critical_points, invariance_group,
    jordan_decomposition_with, sweep, write_csv, write_svg, Error, NumericOpts, PlotComponent,
    Result,
};

use crate::args::{AtArgs, Cli, Command, FamilyArg, SweepArgs};
use crate::family::{parse_rational, resolve_family};
use crate::report::{AnalyzeDoc, CriticalDoc, JordanDoc, SweepDoc, SymmetryDoc};

pub fn run(cli: Cli) -> Result<()> {
    let json = cli.json.as_deref();
    // one user-facing knob; keep the default rank/residual ratio
    let opts = NumericOpts {
        rank_rel: cli.tol * 100.0,
        residual_tol: cli.tol,
    };
    match &cli.command {
        Command::Analyze(args) => cmd_analyze(args, json, &opts),
        Command::Critical(args) => cmd_critical(args, json),
        Command::Symmetry(args) => cmd_symmetry(args, json, &opts),
        Command::Jordan(args) => cmd_jordan(args, json, &opts),
        Command::Sweep(args) => cmd_sweep(args, json),
    }
}

/// Prints the human summary to stdout; when `json` names a file, also
/// writes the document there as pretty-printed JSON.
fn emit(json: Option<&Path>, doc: &impl serde::Serialize, human: String) -> Result<()> {
    print!("{human}");
    if let Some(path) = json {
        let mut rendered =
            serde_json::to_string_pretty(doc).expect("report documents always serialize");
        rendered.push('\n');
        std::fs::write(path, rendered).map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}

fn cmd_analyze(args: &AtArgs, json: Option<&Path>, opts: &NumericOpts) -> Result<()> {
    let (fam, name) = resolve_family(&args.family.family)?;
    let beta = parse_rational(&args.beta)?;
    let report = analyze_with(&fam.at(&beta), opts)?;
    let doc = AnalyzeDoc::new(&name, &beta.to_string(), &report);
    emit(json, &doc, doc.human())
}

fn cmd_critical(args: &FamilyArg, json: Option<&Path>) -> Result<()> {
    let (fam, name) = resolve_family(&args.family)?;
    let points = critical_points(&fam)?;
    let doc = CriticalDoc::new(&name, &points);
    emit(json, &doc, doc.human())
}

fn cmd_symmetry(args: &AtArgs, json: Option<&Path>, opts: &NumericOpts) -> Result<()> {
    let (fam, name) = resolve_family(&args.family.family)?;
    let beta = parse_rational(&args.beta)?;
    let h = fam.at(&beta);
    let group = invariance_group(&h)?;
    let report = analyze_with(&h, opts)?;
    let rows = check_eigenvector_symmetry(&h, &group, &report)?;
    let doc = SymmetryDoc::new(&name, &beta.to_string(), &group, &rows);
    emit(json, &doc, doc.human())
}

fn cmd_jordan(args: &AtArgs, json: Option<&Path>, opts: &NumericOpts) -> Result<()> {
    let (fam, name) = resolve_family(&args.family.family)?;
    let beta = parse_rational(&args.beta)?;
    let dec = jordan_decomposition_with(&fam.at(&beta), opts)?;
    let doc = JordanDoc::new(&name, &beta.to_string(), &dec);
    emit(json, &doc, doc.human())
}

fn cmd_sweep(args: &SweepArgs, json: Option<&Path>) -> Result<()> {
    let (fam, name) = resolve_family(&args.family.family)?;
    let (lo, hi) = parse_range(&args.range)?;
    let branches = sweep(&fam, lo, hi, args.steps)?;
    let criticals = critical_points(&fam)?;
    let mut doc = SweepDoc::new(&name, lo, hi, args.steps, &branches, &criticals);
    if let Some(path) = &args.csv {
        write_csv(path, &branches, &criticals)?;
        doc.csv = Some(path.display().to_string());
    }
    if let Some(path) = &args.svg_re {
        write_svg(
            path,
            &branches,
            &criticals,
            PlotComponent::Re,
            args.width,
            args.height,
        )?;
        doc.svg_re = Some(path.display().to_string());
    }
    if let Some(path) = &args.svg_im {
        write_svg(
            path,
            &branches,
            &criticals,
            PlotComponent::Im,
            args.width,
            args.height,
        )?;
        doc.svg_im = Some(path.display().to_string());
    }
    emit(json, &doc, doc.human())
}

fn parse_range(s: &str) -> Result<(f64, f64)> {
    let err = || Error::ParseRational {
        input: format!("range '{s}' (expected lo:hi)"),
    };
    let (lo, hi) = s.split_once(':').ok_or_else(err)?;
    Ok((
        parse_rational(lo)?.to_f64(),
        parse_rational(hi)?.to_f64(),
    ))
}
