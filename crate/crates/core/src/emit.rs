//! Plain-text and SVG output for sweep results.
//!
//! Both emitters are deterministic: the same branches and critical points
//! produce byte-identical output, so files can be diffed across runs and
//! checked into regression suites. The CSV format is versioned by its first
//! line (`# ep-scan v1`) and carries every f64 with 17 significant digits,
//! enough to round-trip exactly. The SVG is standalone 1.1 with no external
//! resources — no fonts fetched, no stylesheets, no scripts — so it renders
//! the same everywhere.
//!
//! Critical-point markers follow the plot semantics: an ordinary degeneracy
//! is a crossing of real curves, so its circle marker appears only on the
//! real-part plot; an exceptional point bends both the real and imaginary
//! sheets, so its cross marker appears on both.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::CplxF;
use crate::error::{Error, Result};
use crate::sweep::{Branch, CriticalKind, CriticalPoint};

/// Which component of the eigenvalue trajectories an SVG plot shows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotComponent {
    Re,
    Im,
}

impl PlotComponent {
    fn axis_label(self) -> &'static str {
        match self {
            PlotComponent::Re => "Re E",
            PlotComponent::Im => "Im E",
        }
    }

    fn of(self, v: CplxF) -> f64 {
        match self {
            PlotComponent::Re => v.re(),
            PlotComponent::Im => v.im(),
        }
    }
}

/// Renders the versioned CSV report. Branch rows are ordered by β
/// ascending, then branch id; the `[criticals]` section is omitted when
/// there is nothing to report.
pub fn render_csv(branches: &[Branch], criticals: &[CriticalPoint]) -> String {
    let mut out = String::new();
    out.push_str("# ep-scan v1\n");
    out.push_str("[branches]\n");
    out.push_str("beta,branch_id,re,im\n");
    let samples = branches.iter().map(|b| b.samples.len()).max().unwrap_or(0);
    for k in 0..samples {
        for b in branches {
            if let Some((beta, v)) = b.samples.get(k) {
                writeln!(
                    out,
                    "{:.16e},{},{:.16e},{:.16e}",
                    beta,
                    b.id,
                    v.re(),
                    v.im()
                )
                .expect("writing to String cannot fail");
            }
        }
    }
    if !criticals.is_empty() {
        out.push_str("[criticals]\n");
        out.push_str("beta,kind,lambda_re,lambda_im,alg_mult,geo_mult,disc_mult\n");
        for c in criticals {
            let lam = c.colliding_eigenvalue.to_cplx();
            writeln!(
                out,
                "{:.16e},{},{:.16e},{:.16e},{},{},{}",
                c.beta.location.approx(),
                c.kind,
                lam.re(),
                lam.im(),
                c.alg_mult,
                c.geo_mult,
                c.disc_multiplicity
            )
            .expect("writing to String cannot fail");
        }
    }
    out
}

/// Renders one component of the trajectories as a standalone SVG document.
pub fn render_svg(
    branches: &[Branch],
    criticals: &[CriticalPoint],
    component: PlotComponent,
    width: u32,
    height: u32,
) -> Result<String> {
    if branches.is_empty() || branches.iter().all(|b| b.samples.is_empty()) {
        return Err(Error::NoBranches);
    }
    let width = width.max(160) as f64;
    let height = height.max(120) as f64;
    let (left, right, top, bottom) = (56.0, 16.0, 20.0, 44.0);
    let plot_w = width - left - right;
    let plot_h = height - top - bottom;

    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for b in branches {
        for (beta, v) in &b.samples {
            xmin = xmin.min(*beta);
            xmax = xmax.max(*beta);
            let y = component.of(*v);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    // pad the value axis so flat data does not collapse the scale
    let ypad = if (ymax - ymin).abs() < 1e-12 {
        (ymax.abs() * 0.5).max(0.5)
    } else {
        (ymax - ymin) * 0.05
    };
    ymin -= ypad;
    ymax += ypad;
    if (xmax - xmin).abs() < 1e-12 {
        xmin -= 0.5;
        xmax += 0.5;
    }

    let sx = |x: f64| left + (x - xmin) / (xmax - xmin) * plot_w;
    let sy = |y: f64| top + (ymax - y) / (ymax - ymin) * plot_h;

    let mut s = String::new();
    writeln!(
        s,
        concat!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" "#,
            r#"width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        ),
        w = width,
        h = height
    )
    .expect("writing to String cannot fail");
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

    // axes
    writeln!(
        s,
        r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#000" stroke-width="1"/>"##,
        left,
        top + plot_h,
        left + plot_w,
        top + plot_h
    )
    .expect("writing to String cannot fail");
    writeln!(
        s,
        r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#000" stroke-width="1"/>"##,
        left,
        top,
        left,
        top + plot_h
    )
    .expect("writing to String cannot fail");

    for (value, label) in ticks(xmin, xmax) {
        let x = sx(value);
        writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#000" stroke-width="1"/>"##,
            top + plot_h,
            top + plot_h + 5.0
        )
        .expect("writing to String cannot fail");
        writeln!(
            s,
            concat!(
                r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="11" "#,
                r#"text-anchor="middle">{label}</text>"#
            ),
            x = x,
            y = top + plot_h + 18.0,
            label = label
        )
        .expect("writing to String cannot fail");
    }
    for (value, label) in ticks(ymin, ymax) {
        let y = sy(value);
        writeln!(
            s,
            r##"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#000" stroke-width="1"/>"##,
            left - 5.0,
            left
        )
        .expect("writing to String cannot fail");
        writeln!(
            s,
            concat!(
                r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="11" "#,
                r#"text-anchor="end">{label}</text>"#
            ),
            x = left - 8.0,
            y = y + 4.0,
            label = label
        )
        .expect("writing to String cannot fail");
    }
    writeln!(
        s,
        concat!(
            r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="12" "#,
            r#"text-anchor="middle">β</text>"#
        ),
        x = left + plot_w / 2.0,
        y = height - 8.0
    )
    .expect("writing to String cannot fail");
    writeln!(
        s,
        concat!(
            r#"<text x="{x:.2}" y="{y:.2}" font-family="monospace" font-size="12" "#,
            r#"text-anchor="start">{label}</text>"#
        ),
        x = 8.0,
        y = 14.0,
        label = component.axis_label()
    )
    .expect("writing to String cannot fail");

    const PALETTE: [&str; 8] = [
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
    ];
    for b in branches {
        let mut points = String::new();
        for (beta, v) in &b.samples {
            write!(points, "{:.2},{:.2} ", sx(*beta), sy(component.of(*v)))
                .expect("writing to String cannot fail");
        }
        writeln!(
            s,
            concat!(
                r#"<polyline class="branch" data-branch="{id}" fill="none" "#,
                r#"stroke="{color}" stroke-width="1.5" points="{points}"/>"#
            ),
            id = b.id,
            color = PALETTE[b.id % PALETTE.len()],
            points = points.trim_end()
        )
        .expect("writing to String cannot fail");
    }

    for c in criticals {
        let beta = c.beta.location.approx();
        if beta < xmin || beta > xmax {
            continue; // outside the swept window
        }
        let y = component.of(c.colliding_eigenvalue.to_cplx());
        if y < ymin || y > ymax {
            continue;
        }
        let (cx, cy) = (sx(beta), sy(y));
        match c.kind {
            CriticalKind::Degeneracy => {
                if component == PlotComponent::Re {
                    writeln!(
                        s,
                        concat!(
                            r#"<circle class="degeneracy" cx="{:.2}" cy="{:.2}" r="5" "#,
                            r##"fill="none" stroke="#000" stroke-width="1.5"/>"##
                        ),
                        cx, cy
                    )
                    .expect("writing to String cannot fail");
                }
            }
            CriticalKind::Exceptional => {
                writeln!(
                    s,
                    concat!(
                        r#"<path class="exceptional" d="M {x0:.2} {y0:.2} L {x1:.2} {y1:.2} "#,
                        r##"M {x0:.2} {y1:.2} L {x1:.2} {y0:.2}" fill="none" stroke="#000" stroke-width="1.5"/>"##
                    ),
                    x0 = cx - 5.0,
                    y0 = cy - 5.0,
                    x1 = cx + 5.0,
                    y1 = cy + 5.0
                )
                .expect("writing to String cannot fail");
            }
        }
    }

    s.push_str("</svg>\n");
    Ok(s)
}

/// Writes the CSV report to a file.
pub fn write_csv(
    path: impl AsRef<Path>,
    branches: &[Branch],
    criticals: &[CriticalPoint],
) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_csv(branches, criticals)).map_err(|e| Error::io(path, e))
}

/// Writes one SVG plot to a file.
pub fn write_svg(
    path: impl AsRef<Path>,
    branches: &[Branch],
    criticals: &[CriticalPoint],
    component: PlotComponent,
    width: u32,
    height: u32,
) -> Result<()> {
    let path = path.as_ref();
    let doc = render_svg(branches, criticals, component, width, height)?;
    std::fs::write(path, doc).map_err(|e| Error::io(path, e))
}

/// Tick positions and labels covering [lo, hi]: integer multiples of a
/// 1/2/5 × 10ᵏ step, labels printed with exactly the decimals the step
/// needs so repeated runs never wobble.
fn ticks(lo: f64, hi: f64) -> Vec<(f64, String)> {
    let raw = (hi - lo) / 4.0;
    let e = raw.log10().floor() as i32;
    let base = raw / 10f64.powi(e);
    let (mult, e) = if base <= 1.0 {
        (1.0, e)
    } else if base <= 2.0 {
        (2.0, e)
    } else if base <= 5.0 {
        (5.0, e)
    } else {
        (1.0, e + 1)
    };
    let step = mult * 10f64.powi(e);
    let decimals = (-e).max(0) as usize;
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last)
        .map(|i| {
            let v = i as f64 * step;
            (v, format!("{v:.decimals$}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::AffineFamily;
    use crate::sweep::{critical_points, sweep};

    fn paper_outputs() -> (Vec<Branch>, Vec<CriticalPoint>) {
        let fam = AffineFamily::preset("paper").unwrap();
        (
            sweep(&fam, -2.0, 2.0, 81).unwrap(),
            critical_points(&fam).unwrap(),
        )
    }

    #[test]
    fn csv_layout_and_versioned_header() {
        let (branches, criticals) = paper_outputs();
        let csv = render_csv(&branches, &criticals);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# ep-scan v1");
        assert_eq!(lines[1], "[branches]");
        assert_eq!(lines[2], "beta,branch_id,re,im");
        let crit_at = lines.iter().position(|l| *l == "[criticals]").unwrap();
        assert_eq!(crit_at, 3 + 81 * 3, "one row per sample per branch");
        assert_eq!(
            lines[crit_at + 1],
            "beta,kind,lambda_re,lambda_im,alg_mult,geo_mult,disc_mult"
        );
        assert_eq!(lines.len(), crit_at + 2 + criticals.len());
        assert!(lines[crit_at + 2].contains(",exceptional,"));
        assert!(lines[crit_at + 3].contains(",degeneracy,"));
    }

    #[test]
    fn csv_rows_are_beta_major_then_branch_id() {
        let (branches, criticals) = paper_outputs();
        let csv = render_csv(&branches, &criticals);
        let mut prev_beta = f64::NEG_INFINITY;
        for row in csv.lines().skip(3).take(81 * 3).collect::<Vec<_>>().chunks(3) {
            let cells: Vec<Vec<&str>> = row.iter().map(|r| r.split(',').collect()).collect();
            let beta: f64 = cells[0][0].parse().unwrap();
            assert!(beta > prev_beta);
            prev_beta = beta;
            for (id, cell) in cells.iter().enumerate() {
                assert_eq!(cell[1], id.to_string());
                assert_eq!(cell[0].parse::<f64>().unwrap(), beta);
            }
        }
    }

    #[test]
    fn csv_numbers_round_trip_exactly() {
        let (branches, criticals) = paper_outputs();
        let csv = render_csv(&branches, &criticals);
        for (row, b) in csv
            .lines()
            .skip(3)
            .take(81 * 3)
            .collect::<Vec<_>>()
            .chunks(3)
            .zip(branches[0].samples.iter().map(|(beta, _)| *beta))
        {
            for (line, branch) in row.iter().zip(&branches) {
                let cells: Vec<&str> = line.split(',').collect();
                assert_eq!(cells[0].parse::<f64>().unwrap(), b);
                let k = branch.samples.iter().position(|(x, _)| *x == b).unwrap();
                assert_eq!(cells[2].parse::<f64>().unwrap(), branch.samples[k].1.re());
                assert_eq!(cells[3].parse::<f64>().unwrap(), branch.samples[k].1.im());
            }
        }
    }

    #[test]
    fn criticals_section_is_omitted_when_empty() {
        let (branches, _) = paper_outputs();
        let csv = render_csv(&branches, &[]);
        assert!(!csv.contains("[criticals]"));
        assert!(csv.ends_with("e0\n") || csv.ends_with("e-1\n"));
    }

    #[test]
    fn svg_is_standalone_and_deterministic() {
        let (branches, criticals) = paper_outputs();
        let a = render_svg(&branches, &criticals, PlotComponent::Re, 800, 600).unwrap();
        let b = render_svg(&branches, &criticals, PlotComponent::Re, 800, 600).unwrap();
        assert_eq!(a, b, "byte-identical across calls");
        assert!(a.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
        assert!(a.contains("width=\"800\" height=\"600\""));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(!a.contains("http://") || a.matches("http://").count() == 1); // only the xmlns
        assert!(!a.contains("<script"));
    }

    #[test]
    fn svg_marks_both_kinds_on_the_real_part() {
        let (branches, criticals) = paper_outputs();
        let svg = render_svg(&branches, &criticals, PlotComponent::Re, 800, 600).unwrap();
        assert_eq!(svg.matches("class=\"branch\"").count(), 3);
        assert_eq!(svg.matches("class=\"degeneracy\"").count(), 1);
        assert_eq!(svg.matches("class=\"exceptional\"").count(), 1);
        assert!(svg.contains(">Re E</text>"));
        assert!(svg.contains(">β</text>"));
    }

    #[test]
    fn svg_imaginary_part_only_marks_exceptional_points() {
        let (branches, criticals) = paper_outputs();
        let svg = render_svg(&branches, &criticals, PlotComponent::Im, 800, 600).unwrap();
        assert_eq!(svg.matches("class=\"degeneracy\"").count(), 0);
        assert_eq!(svg.matches("class=\"exceptional\"").count(), 1);
        assert!(svg.contains(">Im E</text>"));
    }

    #[test]
    fn svg_skips_markers_outside_the_swept_window() {
        let fam = AffineFamily::preset("paper").unwrap();
        let branches = sweep(&fam, 0.0, 2.0, 41).unwrap();
        let criticals = critical_points(&fam).unwrap();
        let svg = render_svg(&branches, &criticals, PlotComponent::Re, 640, 480).unwrap();
        // the exceptional point sits left of the window; the crossing is inside
        assert_eq!(svg.matches("class=\"exceptional\"").count(), 0);
        assert_eq!(svg.matches("class=\"degeneracy\"").count(), 1);
    }

    #[test]
    fn svg_refuses_empty_input() {
        assert!(matches!(
            render_svg(&[], &[], PlotComponent::Re, 800, 600),
            Err(Error::NoBranches)
        ));
    }

    #[test]
    fn files_are_written_and_bad_paths_carry_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let (branches, criticals) = paper_outputs();
        let csv_path = dir.path().join("scan.csv");
        write_csv(&csv_path, &branches, &criticals).unwrap();
        assert!(std::fs::read_to_string(&csv_path)
            .unwrap()
            .starts_with("# ep-scan v1"));
        let svg_path = dir.path().join("scan.svg");
        write_svg(&svg_path, &branches, &criticals, PlotComponent::Im, 640, 480).unwrap();
        assert!(std::fs::read_to_string(&svg_path).unwrap().ends_with("</svg>\n"));

        let missing = dir.path().join("no-such-dir").join("x.csv");
        match write_csv(&missing, &branches, &criticals) {
            Err(Error::Io { path, .. }) => assert_eq!(path, missing),
            other => panic!("expected an I/O error, got {other:?}"),
        }
    }

    #[test]
    fn tick_labels_are_clean_decimals()  {
        let t = ticks(-2.0, 2.0);
        let labels: Vec<&str> = t.iter().map(|(_, l)| l.as_str()).collect();
        assert_eq!(labels, ["-2", "-1", "0", "1", "2"]);
        let t = ticks(-0.6, 0.6);
        assert!(t.iter().all(|(_, l)| l.len() <= 4), "{t:?}");
        assert!(t.iter().any(|(v, _)| *v == 0.0));
    }
}
