//! Report documents: one serializable shape per subcommand, rendered either
//! as JSON (`--json`) or as aligned human-readable text. Exact values
//! serialize as strings ("-5/4") and numeric ones as {re, im} objects, so
//! downstream tooling can tell certified values from floating-point ones.

use epscan::{
    Branch, CriticalPoint, JordanDecomposition, JordanMatrices, SpectralReport, SpectralValue,
    SymmetryGroup, VectorRepr,
};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum ValueDoc {
    Exact(String),
    Numeric { re: f64, im: f64 },
}

impl ValueDoc {
    pub fn from_value(v: &SpectralValue) -> Self {
        match v.exact() {
            Some(r) => ValueDoc::Exact(r.to_string()),
            None => {
                let c = v.to_cplx();
                ValueDoc::Numeric {
                    re: c.re(),
                    im: c.im(),
                }
            }
        }
    }

    pub fn display(&self) -> String {
        match self {
            ValueDoc::Exact(s) => s.clone(),
            ValueDoc::Numeric { re, im } => {
                if *im == 0.0 {
                    format!("{re:.12}")
                } else if *im > 0.0 {
                    format!("{re:.12}+{im:.12}i")
                } else {
                    format!("{re:.12}-{:.12}i", -im)
                }
            }
        }
    }
}

fn vector_doc(v: &VectorRepr) -> Vec<ValueDoc> {
    match v.exact() {
        Some(rs) => rs.iter().map(|r| ValueDoc::Exact(r.to_string())).collect(),
        None => v
            .to_complex()
            .iter()
            .map(|c| ValueDoc::Numeric {
                re: c.re(),
                im: c.im(),
            })
            .collect(),
    }
}

#[derive(Debug, Serialize)]
pub struct EigenvalueDoc {
    pub value: ValueDoc,
    pub alg_mult: usize,
    pub geo_mult: usize,
    pub defective: bool,
    pub eigenspace: Vec<Vec<ValueDoc>>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeDoc {
    pub family: String,
    pub beta: String,
    pub dim: usize,
    pub defective: bool,
    pub eigenvalues: Vec<EigenvalueDoc>,
}

impl AnalyzeDoc {
    pub fn new(family: &str, beta: &str, report: &SpectralReport) -> Self {
        AnalyzeDoc {
            family: family.into(),
            beta: beta.into(),
            dim: report.dim(),
            defective: report.defective().count() > 0,
            eigenvalues: report
                .eigenvalues
                .iter()
                .map(|e| EigenvalueDoc {
                    value: ValueDoc::from_value(&e.value),
                    alg_mult: e.alg_mult,
                    geo_mult: e.geo_mult,
                    defective: e.geo_mult < e.alg_mult,
                    eigenspace: e.eigenspace.iter().map(vector_doc).collect(),
                })
                .collect(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "family {} at β = {}", self.family, self.beta);
        for e in &self.eigenvalues {
            let flag = if e.defective { "  DEFECTIVE" } else { "" };
            let _ = writeln!(
                s,
                "λ = {:<24} alg {}  geo {}{}",
                e.value.display(),
                e.alg_mult,
                e.geo_mult,
                flag
            );
            for v in &e.eigenspace {
                let parts: Vec<String> = v.iter().map(ValueDoc::display).collect();
                let _ = writeln!(s, "    [{}]", parts.join(", "));
            }
        }
        if self.defective {
            let _ = writeln!(
                s,
                "matrix is defective: eigenvectors do not span the space"
            );
        } else {
            let _ = writeln!(s, "diagonalizable: yes");
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct CriticalRowDoc {
    pub beta_exact: Option<String>,
    pub beta: f64,
    pub kind: String,
    pub eigenvalue: ValueDoc,
    pub alg_mult: usize,
    pub geo_mult: usize,
    pub disc_multiplicity: usize,
}

impl CriticalRowDoc {
    pub fn new(p: &CriticalPoint) -> Self {
        CriticalRowDoc {
            beta_exact: p.beta.location.exact().map(|r| r.to_string()),
            beta: p.beta.location.approx(),
            kind: p.kind.to_string(),
            eigenvalue: ValueDoc::from_value(&p.colliding_eigenvalue),
            alg_mult: p.alg_mult,
            geo_mult: p.geo_mult,
            disc_multiplicity: p.disc_multiplicity,
        }
    }

    fn beta_display(&self) -> String {
        match &self.beta_exact {
            Some(s) => s.clone(),
            None => format!("≈{:.12}", self.beta),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CriticalDoc {
    pub family: String,
    pub critical_points: Vec<CriticalRowDoc>,
}

impl CriticalDoc {
    pub fn new(family: &str, points: &[CriticalPoint]) -> Self {
        CriticalDoc {
            family: family.into(),
            critical_points: points.iter().map(CriticalRowDoc::new).collect(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "critical points of family {}", self.family);
        if self.critical_points.is_empty() {
            let _ = writeln!(s, "none: the eigenvalues never collide");
            return s;
        }
        for row in &self.critical_points {
            let _ = writeln!(
                s,
                "β = {:<18} {:<12} λ = {:<18} alg {}  geo {}  disc mult {}",
                row.beta_display(),
                row.kind,
                row.eigenvalue.display(),
                row.alg_mult,
                row.geo_mult,
                row.disc_multiplicity
            );
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct SymmetryRowDoc {
    pub value: ValueDoc,
    pub invariant: bool,
}

#[derive(Debug, Serialize)]
pub struct SymmetryDoc {
    pub family: String,
    pub beta: String,
    pub order: usize,
    pub label: String,
    pub generators: Vec<String>,
    pub eigenspace_invariance: Vec<SymmetryRowDoc>,
}

impl SymmetryDoc {
    pub fn new(
        family: &str,
        beta: &str,
        group: &SymmetryGroup,
        rows: &[(SpectralValue, bool)],
    ) -> Self {
        SymmetryDoc {
            family: family.into(),
            beta: beta.into(),
            order: group.order(),
            label: group.label.to_string(),
            generators: group.generators.iter().map(|p| p.to_string()).collect(),
            eigenspace_invariance: rows
                .iter()
                .map(|(v, ok)| SymmetryRowDoc {
                    value: ValueDoc::from_value(v),
                    invariant: *ok,
                })
                .collect(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "invariance group of family {} at β = {}: order {} ({})",
            self.family, self.beta, self.order, self.label
        );
        if !self.generators.is_empty() {
            let _ = writeln!(s, "generators: {}", self.generators.join(", "));
        }
        for row in &self.eigenspace_invariance {
            let verdict = if row.invariant { "invariant" } else { "MOVED" };
            let _ = writeln!(
                s,
                "eigenspace of λ = {:<24} {}",
                row.value.display(),
                verdict
            );
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct BlockDoc {
    pub eigenvalue: ValueDoc,
    pub size: usize,
}

#[derive(Debug, Serialize)]
pub struct JordanDoc {
    pub family: String,
    pub beta: String,
    pub exact: bool,
    pub diagonal: bool,
    pub blocks: Vec<BlockDoc>,
    pub transform: Vec<Vec<ValueDoc>>,
    pub jordan: Vec<Vec<ValueDoc>>,
}

impl JordanDoc {
    pub fn new(family: &str, beta: &str, dec: &JordanDecomposition) -> Self {
        let (exact, transform, jordan) = match &dec.matrices {
            JordanMatrices::Exact { s, j } => (
                true,
                rational_matrix_doc(s.to_rows()),
                rational_matrix_doc(j.to_rows()),
            ),
            JordanMatrices::Numeric { s, j } => (
                false,
                complex_matrix_doc(s.to_rows()),
                complex_matrix_doc(j.to_rows()),
            ),
        };
        JordanDoc {
            family: family.into(),
            beta: beta.into(),
            exact,
            diagonal: dec.is_diagonal(),
            blocks: dec
                .block_structure
                .iter()
                .map(|(v, size)| BlockDoc {
                    eigenvalue: ValueDoc::from_value(v),
                    size: *size,
                })
                .collect(),
            transform,
            jordan,
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let kind = if self.exact { "exact" } else { "numeric" };
        let shape = if self.diagonal {
            "diagonalizable"
        } else {
            "defective"
        };
        let _ = writeln!(
            s,
            "Jordan form of family {} at β = {} ({kind}, {shape})",
            self.family, self.beta
        );
        for b in &self.blocks {
            let _ = writeln!(s, "block λ = {:<24} size {}", b.eigenvalue.display(), b.size);
        }
        let _ = writeln!(s, "transform S (columns are chain vectors):");
        push_matrix(&mut s, &self.transform);
        let _ = writeln!(s, "J:");
        push_matrix(&mut s, &self.jordan);
        s
    }
}

fn rational_matrix_doc(rows: Vec<Vec<epscan::Rational>>) -> Vec<Vec<ValueDoc>> {
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|r| ValueDoc::Exact(r.to_string()))
                .collect()
        })
        .collect()
}

fn complex_matrix_doc(rows: Vec<Vec<epscan::CplxF>>) -> Vec<Vec<ValueDoc>> {
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| ValueDoc::Numeric {
                    re: c.re(),
                    im: c.im(),
                })
                .collect()
        })
        .collect()
}

fn push_matrix(s: &mut String, rows: &[Vec<ValueDoc>]) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(ValueDoc::display).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1);
    for row in &cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "  [ {} ]", padded.join("  "));
    }
}

#[derive(Debug, Serialize)]
pub struct BranchDoc {
    pub id: usize,
    pub samples: Vec<(f64, f64, f64)>,
}

#[derive(Debug, Serialize)]
pub struct SweepDoc {
    pub family: String,
    pub beta_min: f64,
    pub beta_max: f64,
    pub steps: usize,
    pub branches: Vec<BranchDoc>,
    pub critical_points: Vec<CriticalRowDoc>,
    pub csv: Option<String>,
    pub svg_re: Option<String>,
    pub svg_im: Option<String>,
}

impl SweepDoc {
    pub fn new(
        family: &str,
        beta_min: f64,
        beta_max: f64,
        steps: usize,
        branches: &[Branch],
        criticals: &[CriticalPoint],
    ) -> Self {
        SweepDoc {
            family: family.into(),
            beta_min,
            beta_max,
            steps,
            branches: branches
                .iter()
                .map(|b| BranchDoc {
                    id: b.id,
                    samples: b
                        .samples
                        .iter()
                        .map(|(beta, v)| (*beta, v.re(), v.im()))
                        .collect(),
                })
                .collect(),
            critical_points: criticals.iter().map(CriticalRowDoc::new).collect(),
            csv: None,
            svg_re: None,
            svg_im: None,
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "swept family {} over β ∈ [{}, {}] with {} samples: {} branches",
            self.family,
            self.beta_min,
            self.beta_max,
            self.steps,
            self.branches.len()
        );
        let in_range = self
            .critical_points
            .iter()
            .filter(|c| c.beta >= self.beta_min && c.beta <= self.beta_max)
            .count();
        if !self.critical_points.is_empty() {
            let _ = writeln!(
                s,
                "critical points: {} total, {} inside the range",
                self.critical_points.len(),
                in_range
            );
            for row in &self.critical_points {
                let _ = writeln!(
                    s,
                    "  β = {:<18} {:<12} λ = {}",
                    row.beta_display(),
                    row.kind,
                    row.eigenvalue.display()
                );
            }
        }
        for (label, file) in [("csv", &self.csv), ("svg-re", &self.svg_re), ("svg-im", &self.svg_im)]
        {
            if let Some(path) = file {
                let _ = writeln!(s, "wrote {label}: {path}");
            }
        }
        s
    }
}
