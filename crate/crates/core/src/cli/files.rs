//! On-disk formats: algebra files in, report files out. Both are JSON.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::assoc_algebra::AssocAlgebra;
use crate::exact_linalg::{format_rational, parse_rational, ExactMatrix, Rational};
use crate::lie_algebra::LieAlgebra;

/// A failure that maps to a process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or malformed input. Exit 2.
    Input(String),
    /// A mathematical check failed. Exit 1.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Check(m) => m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Lie,
    Assoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Product {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: String,
}

/// Sparse structure constants. Lie files store only `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: AlgebraKind,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub products: Vec<Product>,
}

pub enum Algebra {
    Lie(LieAlgebra),
    Assoc(AssocAlgebra),
}

fn sparse(n: usize, structure: &[Rational], keep: impl Fn(usize, usize) -> bool) -> Vec<Product> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !keep(i, j) {
                continue;
            }
            for k in 0..n {
                let c = &structure[(i * n + j) * n + k];
                if !num_traits::Zero::is_zero(c) {
                    out.push(Product {
                        i,
                        j,
                        k,
                        coeff: format_rational(c),
                    });
                }
            }
        }
    }
    out
}

impl AlgebraFile {
    pub fn from_lie(g: &LieAlgebra) -> Self {
        Self {
            kind: AlgebraKind::Lie,
            dim: g.dim(),
            basis: g.labels().to_vec(),
            unit: None,
            products: sparse(g.dim(), g.structure(), |i, j| i < j),
        }
    }

    pub fn from_assoc(a: &AssocAlgebra) -> Self {
        Self {
            kind: AlgebraKind::Assoc,
            dim: a.dim(),
            basis: a.labels().to_vec(),
            unit: Some(a.unit().iter().map(format_rational).collect()),
            products: sparse(a.dim(), a.structure(), |_, _| true),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    fn entries(&self) -> Result<Vec<(usize, usize, usize, Rational)>, CliError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(self.products.len());
        for p in &self.products {
            if p.i >= self.dim || p.j >= self.dim || p.k >= self.dim {
                return Err(CliError::Input(format!(
                    "product ({}, {}, {}) has an index outside dim {}",
                    p.i, p.j, p.k, self.dim
                )));
            }
            if self.kind == AlgebraKind::Lie && p.i >= p.j {
                return Err(CliError::Input(format!(
                    "lie product ({}, {}, {}) must have i < j",
                    p.i, p.j, p.k
                )));
            }
            if !seen.insert((p.i, p.j, p.k)) {
                return Err(CliError::Input(format!(
                    "duplicate product ({}, {}, {})",
                    p.i, p.j, p.k
                )));
            }
            let c = parse_rational(&p.coeff).map_err(|e| CliError::Input(e.to_string()))?;
            out.push((p.i, p.j, p.k, c));
        }
        Ok(out)
    }

    /// Builds the algebra and runs its axiom check.
    pub fn into_algebra(self) -> Result<Algebra, CliError> {
        if self.basis.len() != self.dim {
            return Err(CliError::Input(format!(
                "basis has {} labels but dim is {}",
                self.basis.len(),
                self.dim
            )));
        }
        let entries = self.entries()?;
        let input = |e: crate::Error| CliError::Input(e.to_string());
        let axioms = |e: crate::Error| CliError::Check(format!("axiom check failed: {e}"));
        match self.kind {
            AlgebraKind::Lie => {
                if self.unit.is_some() {
                    return Err(CliError::Input("lie files carry no unit".to_string()));
                }
                let g = LieAlgebra::from_brackets(self.basis, &entries).map_err(input)?;
                g.validate().map_err(axioms)?;
                Ok(Algebra::Lie(g))
            }
            AlgebraKind::Assoc => {
                let unit = self
                    .unit
                    .ok_or_else(|| CliError::Input("assoc files need a unit".to_string()))?
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(input)?;
                let a = AssocAlgebra::from_products(self.basis, &entries, unit).map_err(input)?;
                a.validate().map_err(axioms)?;
                Ok(Algebra::Assoc(a))
            }
        }
    }
}

/// Path and SHA-256 of an input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

pub fn load(path: &str) -> Result<(Algebra, InputDigest), CliError> {
    let bytes =
        std::fs::read(Path::new(path)).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let digest = InputDigest {
        path: path.to_string(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    };
    let file: AlgebraFile =
        serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let algebra = file.into_algebra().map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{path}: {m}")),
        CliError::Check(m) => CliError::Check(format!("{path}: {m}")),
    })?;
    Ok((algebra, digest))
}

pub fn load_lie(path: &str) -> Result<(LieAlgebra, InputDigest), CliError> {
    match load(path)? {
        (Algebra::Lie(g), d) => Ok((g, d)),
        _ => Err(CliError::Input(format!(
            "{path}: expected a lie algebra file"
        ))),
    }
}

pub fn load_assoc(path: &str) -> Result<(AssocAlgebra, InputDigest), CliError> {
    match load(path)? {
        (Algebra::Assoc(a), d) => Ok((a, d)),
        _ => Err(CliError::Input(format!(
            "{path}: expected an assoc algebra file"
        ))),
    }
}

/// A matrix as rows of rational strings.
pub type MatrixRows = Vec<Vec<String>>;

pub fn matrix_rows(m: &ExactMatrix) -> MatrixRows {
    m.row_vectors()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

/// Machine-readable result of one CLI run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub dimensions: BTreeMap<String, usize>,
    pub flags: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bases: BTreeMap<String, Vec<MatrixRows>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub status: String,
    pub exit_code: i32,
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
