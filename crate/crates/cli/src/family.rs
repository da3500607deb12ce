//! Turning the `--family` and `--beta` arguments into exact objects.
//!
//! Families come from a built-in preset name, an inline JSON object with
//! integer or "p/q" entries, or a file holding that same JSON object.
//! Parameters accept three spellings —
//! integer, fraction, decimal — and every one of them lands on an *exact*
//! rational: "0.1" becomes 1/10, not the nearest double.

use epscan::{AffineFamily, Error, Matrix, Rational, Result};
use num_bigint::BigInt;
use serde::Deserialize;

/// JSON shape for a user-supplied family: `{"n": 2, "A": [[0,1],[1,0]],
/// "B": [["1/2",0],[0,0]]}`. Lowercase `a`/`b` are accepted as aliases.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub n: usize,
    #[serde(rename = "A", alias = "a")]
    pub a: Vec<Vec<EntrySpec>>,
    #[serde(rename = "B", alias = "b")]
    pub b: Vec<Vec<EntrySpec>>,
    #[serde(default)]
    pub name: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum EntrySpec {
    Int(i64),
    Text(String),
}

impl EntrySpec {
    fn to_rational(&self) -> Result<Rational> {
        match self {
            EntrySpec::Int(n) => Ok(Rational::from_int(*n)),
            EntrySpec::Text(s) => parse_rational(s),
        }
    }
}

/// Resolves `--family`: a preset name, inline JSON when the argument starts
/// with `{`, or a path to a file holding the same JSON object. Unnamed
/// families from files borrow the file stem as their display name.
pub fn resolve_family(arg: &str) -> Result<(AffineFamily, String)> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return family_from_json(trimmed, None);
    }
    if let Some(fam) = AffineFamily::preset(trimmed) {
        return Ok((fam, trimmed.to_string()));
    }
    let path = std::path::Path::new(trimmed);
    if path.exists() {
        let body = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let stem = path.file_stem().and_then(|s| s.to_str());
        return family_from_json(body.trim(), stem);
    }
    Err(Error::ParseRational {
        input: format!(
            "unknown family '{trimmed}': not a preset ({}), not inline JSON, and no such file",
            AffineFamily::preset_names().join(", ")
        ),
    })
}

fn family_from_json(body: &str, fallback_name: Option<&str>) -> Result<(AffineFamily, String)> {
    let spec: FamilySpec = serde_json::from_str(body).map_err(|e| Error::ParseRational {
        input: format!("family JSON: {e}"),
    })?;
    let name = spec
        .name
        .clone()
        .or_else(|| fallback_name.map(str::to_string))
        .unwrap_or_else(|| "custom".into());
    Ok((spec.build()?, name))
}

impl FamilySpec {
    pub fn build(&self) -> Result<AffineFamily> {
        let a = self.matrix_from(&self.a)?;
        let b = self.matrix_from(&self.b)?;
        AffineFamily::new(a, b)
    }

    fn matrix_from(&self, rows: &[Vec<EntrySpec>]) -> Result<Matrix<Rational>> {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for row in rows {
            for e in row {
                entries.push(e.to_rational()?);
            }
        }
        Matrix::new(self.n, entries)
    }
}

/// Parses "3", "-5/4", or "1.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::ParseRational { input: s.into() };
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| err())?;
        let d: BigInt = den.trim().parse().map_err(|_| err())?;
        return Rational::new(n, d);
    }
    if let Some((whole, frac)) = s.split_once('.') {
        // exact decimal: sign applies to the fractional digits too
        let (negative, digits) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        if !digits.bytes().all(|b| b.is_ascii_digit())
            || frac.is_empty()
            || !frac.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(err());
        }
        let w: BigInt = if digits.is_empty() {
            BigInt::from(0)
        } else {
            digits.parse().map_err(|_| err())?
        };
        let f: BigInt = frac.parse().map_err(|_| err())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let magnitude = w * &scale + f;
        let signed = if negative { -magnitude } else { magnitude };
        return Rational::new(signed, scale);
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_int(n))
}
