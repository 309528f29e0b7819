//! Spec files and command-line overrides.

use std::fs;
use std::path::Path;

use isospectra_core::{Family, FamilySpec, C64};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A complex number as `[re, im]`. A bare number is read as real.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Complex {
    Pair([f64; 2]),
    Real(f64),
}

impl Complex {
    pub fn value(self) -> C64 {
        match self {
            Complex::Pair([re, im]) => C64::new(re, im),
            Complex::Real(re) => C64::new(re, 0.0),
        }
    }
}

impl From<C64> for Complex {
    fn from(z: C64) -> Self {
        Complex::Pair([z.re, z.im])
    }
}

pub fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn pairs(zs: &[C64]) -> Vec<[f64; 2]> {
    zs.iter().copied().map(pair).collect()
}

/// On-disk spec: `{"family", "N", "alphas", "betas", "q"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default)]
    pub alphas: Vec<Complex>,
    #[serde(default)]
    pub betas: Vec<Complex>,
    #[serde(default)]
    pub q: Option<Complex>,
}

impl SpecFile {
    pub fn read(path: &Path) -> Result<SpecFile, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    /// Canonical echo of a validated spec.
    pub fn echo(spec: &FamilySpec) -> SpecFile {
        SpecFile {
            family: spec.family.name().to_owned(),
            n: spec.n,
            alphas: spec.alphas.iter().copied().map(Complex::from).collect(),
            betas: spec.betas.iter().copied().map(Complex::from).collect(),
            q: spec.q.map(Complex::from),
        }
    }

    pub fn to_spec(&self) -> Result<FamilySpec, CliError> {
        let family: Family = self.family.parse()?;
        let values = |v: &[Complex]| v.iter().map(|c| c.value()).collect();
        Ok(FamilySpec::new(family, self.n, values(&self.alphas), values(&self.betas), self.q.map(Complex::value))?)
    }
}

/// Spec fields given on the command line; each replaces the file's value.
#[derive(Clone, Debug, Default)]
pub struct SpecOverrides {
    pub family: Option<String>,
    pub n: Option<usize>,
    pub alphas: Option<Vec<C64>>,
    pub betas: Option<Vec<C64>>,
    pub q: Option<C64>,
}

impl SpecOverrides {
    pub fn apply(&self, base: Option<SpecFile>) -> Result<SpecFile, CliError> {
        let mut file = match base {
            Some(f) => f,
            None => SpecFile {
                family: self.family.clone().ok_or_else(|| CliError::Input("--family is required".into()))?,
                n: self.n.ok_or_else(|| CliError::Input("-N is required".into()))?,
                alphas: Vec::new(),
                betas: Vec::new(),
                q: None,
            },
        };
        if let Some(f) = &self.family {
            file.family = f.clone();
        }
        if let Some(n) = self.n {
            file.n = n;
        }
        if let Some(a) = &self.alphas {
            file.alphas = a.iter().copied().map(Complex::from).collect();
        }
        if let Some(b) = &self.betas {
            file.betas = b.iter().copied().map(Complex::from).collect();
        }
        if let Some(q) = self.q {
            file.q = Some(q.into());
        }
        Ok(file)
    }
}

/// Reads the optional spec file, applies the overrides and validates.
pub fn resolve(path: Option<&Path>, overrides: &SpecOverrides) -> Result<FamilySpec, CliError> {
    let base = path.map(SpecFile::read).transpose()?;
    overrides.apply(base)?.to_spec()
}

/// Parses `2`, `-1.5`, `0.3+1.2i` or `2i`.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let z: C64 = s.trim().parse().map_err(|_| format!("not a number: {s:?}"))?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("not finite: {s:?}"));
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let v: Vec<Complex> = serde_json::from_str("[[1.5, -2], 3]").unwrap();
        assert_eq!(v[0].value(), C64::new(1.5, -2.0));
        assert_eq!(v[1].value(), C64::new(3.0, 0.0));
        assert_eq!(parse_complex("0.3+1.2i").unwrap(), C64::new(0.3, 1.2));
        assert_eq!(parse_complex("-2").unwrap(), C64::new(-2.0, 0.0));
        assert!(parse_complex("two").is_err());
        assert!(parse_complex("inf").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file: SpecFile =
            serde_json::from_str(r#"{"family":"ghyp","N":3,"alphas":[[2,0]],"betas":[[3,0]],"q":null}"#).unwrap();
        let o = SpecOverrides { n: Some(5), betas: Some(vec![C64::new(4.0, 0.0)]), ..Default::default() };
        let s = o.apply(Some(file)).unwrap().to_spec().unwrap();
        assert_eq!((s.n, s.alphas[0].re, s.betas[0].re), (5, 2.0, 4.0));
    }

    #[test]
    fn echo_round_trips() {
        let s = FamilySpec::gbasic(3, &[C64::new(0.7, 0.1)], &[C64::new(2.0, 0.0)], C64::new(1.5, 0.0)).unwrap();
        let text = serde_json::to_string(&SpecFile::echo(&s)).unwrap();
        let back: SpecFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_spec().unwrap(), s);
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<SpecFile>(r#"{"family":"ghyp","N":1,"gamma":2}"#).is_err());
    }
}
