//! JSON form of a gauge spec. Polynomials are strings in the expression
//! grammar; `p` is the 1-based direction of a ρ key.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{GaugeModuleSpec, PolyMatrix};
use crate::error::{AlgebraError, Result};
use crate::multi_index::MultiIndex;
use crate::parse::parse_polynomial;
use crate::witt::VectorFieldGen;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeSpecFile {
    pub n: usize,
    pub rank: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub rho: Vec<RhoEntryFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoEntryFile {
    pub k: Vec<u32>,
    pub p: usize,
    pub matrix: Vec<Vec<String>>,
}

fn matrix_from_strings(n: usize, rank: usize, rows: &[Vec<String>], what: &str) -> Result<PolyMatrix> {
    if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
        return Err(AlgebraError::MalformedSpec(format!("{what} is not {rank}x{rank}")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_polynomial(s, n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(n, parsed)
}

fn matrix_to_strings(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

impl GaugeSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::MalformedSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_spec(&self) -> Result<GaugeModuleSpec> {
        let (n, rank) = (self.n, self.rank);
        if n == 0 || rank == 0 {
            return Err(AlgebraError::MalformedSpec("n and rank must be positive".into()));
        }
        if self.b.len() != n {
            return Err(AlgebraError::MalformedSpec(format!(
                "expected {n} gauge fields, found {}",
                self.b.len()
            )));
        }
        let b = self
            .b
            .iter()
            .enumerate()
            .map(|(i, m)| matrix_from_strings(n, rank, m, &format!("B{}", i + 1)))
            .collect::<Result<Vec<_>>>()?;
        let mut rho = BTreeMap::new();
        for entry in &self.rho {
            if entry.k.len() != n {
                return Err(AlgebraError::MalformedSpec(format!("rho key {:?} has the wrong length", entry.k)));
            }
            if entry.p == 0 || entry.p > n {
                return Err(AlgebraError::MalformedSpec(format!("rho direction {} out of range", entry.p)));
            }
            let g = VectorFieldGen::new(MultiIndex::new(entry.k.clone()), entry.p - 1)?;
            let m = matrix_from_strings(n, rank, &entry.matrix, &format!("rho({g})"))?;
            if rho.insert(g.clone(), m).is_some() {
                return Err(AlgebraError::MalformedSpec(format!("duplicate rho key {g}")));
            }
        }
        GaugeModuleSpec::new(n, rank, b, rho)
    }

    pub fn from_spec(spec: &GaugeModuleSpec) -> Self {
        GaugeSpecFile {
            n: spec.n(),
            rank: spec.rank(),
            b: spec.gauge_fields().iter().map(matrix_to_strings).collect(),
            rho: spec
                .rho_support()
                .iter()
                .map(|(g, m)| RhoEntryFile {
                    k: g.k().exponents().to_vec(),
                    p: g.dir() + 1,
                    matrix: matrix_to_strings(m),
                })
                .collect(),
        }
    }
}

impl GaugeModuleSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        GaugeSpecFile::from_json(text)?.to_spec()
    }

    pub fn to_json(&self) -> String {
        GaugeSpecFile::from_spec(self).to_json()
    }
}
