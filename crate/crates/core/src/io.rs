//! JSON file formats.
//!
//! A field element is its coefficient array over `F_p`, little-endian in the
//! polynomial variable. Matrices are arrays of rows of elements.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::equivalence::RankEquivalence;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field, FieldOptions};
use crate::linalg::{Matrix, Subspace, Tag};
use crate::rankcore::LinearCode;
use crate::schemes::NestedCodePair;

pub type ElementJson = Vec<u32>;
pub type MatrixJson = Vec<Vec<ElementJson>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<u32>>>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Arc<Field>> {
        let opts = FieldOptions {
            modulus: self.modulus.clone(),
            basis: self.basis.clone(),
        };
        Field::with_options(self.p, self.e, self.m, &opts)
    }

    /// Description of a built field; the modulus is always spelled out, the basis
    /// only when it differs from the power basis.
    pub fn of(f: &Field) -> Self {
        let opts = FieldOptions {
            modulus: Some(f.modulus().to_vec()),
            basis: None,
        };
        let default = Field::with_options(f.p(), f.e(), f.m() as u32, &opts).expect("rebuilding an existing field");
        let basis = (f.basis() != default.basis()).then(|| f.basis().iter().map(|&b| f.to_coeffs(b)).collect());
        FieldSpec {
            p: f.p(),
            e: f.e(),
            m: f.m() as u32,
            modulus: Some(f.modulus().to_vec()),
            basis,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(rename = "G")]
    pub g: MatrixJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub field: FieldSpec,
    pub n: usize,
    #[serde(rename = "G2")]
    pub g2: MatrixJson,
    #[serde(rename = "Gprime")]
    pub g_prime: MatrixJson,
}

/// `c ↦ β·cA`, with `A` over `F_q`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub beta: ElementJson,
    #[serde(rename = "A")]
    pub a: MatrixJson,
}

pub fn element(f: &Field, x: &ElementJson) -> Result<Fe> {
    f.from_coeffs(x).map_err(|e| Error::Input(e.to_string()))
}

pub fn element_json(f: &Field, x: Fe) -> ElementJson {
    f.to_coeffs(x)
}

pub fn rows(f: &Field, n: usize, m: &MatrixJson) -> Result<Vec<Vec<Fe>>> {
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != n {
                return Err(Error::Input(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            row.iter().map(|x| element(f, x)).collect()
        })
        .collect()
}

pub fn matrix(f: &Field, cols: usize, m: &MatrixJson) -> Result<Matrix> {
    if m.is_empty() {
        return Ok(Matrix::zeros(0, cols));
    }
    Matrix::from_rows(cols, &rows(f, cols, m)?)
}

pub fn matrix_json(f: &Field, m: &Matrix) -> MatrixJson {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| element_json(f, x)).collect())
        .collect()
}

pub fn vector_json(f: &Field, v: &[Fe]) -> Vec<ElementJson> {
    v.iter().map(|&x| element_json(f, x)).collect()
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Parsed file contents as canonical JSON, for digests.
pub fn canonical(path: &Path) -> Result<serde_json::Value> {
    read_json(path)
}

pub struct LoadedCode {
    pub code: LinearCode,
    /// Rows dropped because they were dependent.
    pub dropped: usize,
}

impl CodeFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn to_code(&self) -> Result<LoadedCode> {
        let f = self.field.build().map_err(|e| Error::Input(e.to_string()))?;
        let g = rows(&f, self.n, &self.g)?;
        let code = LinearCode::new(f, self.n, &g)?;
        if code.k() == 0 {
            return Err(Error::Input("the generator matrix spans the zero code".into()));
        }
        Ok(LoadedCode {
            dropped: g.len() - code.k(),
            code,
        })
    }

    pub fn from_code(c: &LinearCode) -> Self {
        let f = c.field();
        CodeFile {
            field: FieldSpec::of(f),
            n: c.n(),
            g: matrix_json(f, c.generator()),
        }
    }
}

impl PairFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn to_pair(&self) -> Result<NestedCodePair> {
        let f = self.field.build().map_err(|e| Error::Input(e.to_string()))?;
        let g2 = rows(&f, self.n, &self.g2)?;
        let gp = rows(&f, self.n, &self.g_prime)?;
        NestedCodePair::new(f, self.n, &g2, &gp)
    }

    pub fn from_pair(p: &NestedCodePair) -> Self {
        let f = p.field();
        PairFile {
            field: FieldSpec::of(f),
            n: p.n(),
            g2: matrix_json(f, p.g2()),
            g_prime: matrix_json(f, p.g_prime()),
        }
    }
}

/// A matrix file: a bare JSON array of rows.
pub fn load_matrix(f: &Field, cols: usize, path: &Path) -> Result<Matrix> {
    let m: MatrixJson = read_json(path)?;
    matrix(f, cols, &m)
}

/// Row space over `F_q` of a matrix file.
pub fn load_base_subspace(f: &Field, n: usize, path: &Path) -> Result<Subspace> {
    let m = load_matrix(f, n, path)?;
    if !m.is_base(f) {
        return Err(Error::Input(format!("{}: entries must lie in F_q", path.display())));
    }
    Subspace::from_matrix(f, Tag::Base, &m)
}

impl WitnessFile {
    pub fn load(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn to_equivalence(&self, f: &Field, domain: &Subspace) -> Result<RankEquivalence> {
        let beta = element(f, &self.beta)?;
        let a = matrix(f, domain.n(), &self.a)?;
        RankEquivalence::new(f, beta, a, domain.clone())
    }

    pub fn from_equivalence(f: &Field, eq: &RankEquivalence) -> Self {
        WitnessFile {
            beta: element_json(f, eq.beta()),
            a: matrix_json(f, eq.a()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 4,
            "G": [[[1], [0, 1], [0], [0]], [[0], [0], [0, 1], [1]]]}"#;
        let cf: CodeFile = serde_json::from_str(text).unwrap();
        let c = cf.to_code().unwrap().code;
        assert_eq!(c.k(), 2);
        let back = CodeFile::from_code(&c);
        assert_eq!(back.field.modulus, Some(vec![1, 1, 1]));
        assert_eq!(back.field.basis, None);
        assert_eq!(back.to_code().unwrap().code, c);
    }

    #[test]
    fn rejects_bad_input() {
        let zero = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 2, "G": [[[0], [0]]]}"#;
        let cf: CodeFile = serde_json::from_str(zero).unwrap();
        assert!(matches!(cf.to_code(), Err(Error::Input(_))));
        let bad = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 2, "G": [[[2], [0]]]}"#;
        let cf: CodeFile = serde_json::from_str(bad).unwrap();
        assert!(cf.to_code().is_err());
        let short = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 3, "G": [[[1], [0]]]}"#;
        let cf: CodeFile = serde_json::from_str(short).unwrap();
        assert!(matches!(cf.to_code(), Err(Error::Input(_))));
        assert!(serde_json::from_str::<CodeFile>(r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 3}"#).is_err());
    }

    #[test]
    fn dependent_rows_are_reduced() {
        let text = r#"{"field": {"p": 2, "e": 1, "m": 2}, "n": 2, "G": [[[1], [0, 1]], [[0, 1], [1, 1]]]}"#;
        let cf: CodeFile = serde_json::from_str(text).unwrap();
        let loaded = cf.to_code().unwrap();
        assert_eq!((loaded.code.k(), loaded.dropped), (1, 1));
    }
}
