use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::ComplexRational;
use crate::matrix::CMatrix;
use crate::symmat::{pauli, MatrixSet};

/// Standard representations of the Dirac matrices, stored exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// `beta = diag(1, 1, -1, -1)`, Pauli matrices in the off-diagonal blocks.
    DiracPauli,
    /// `beta` with identity off-diagonal blocks, `alpha` block diagonal.
    WeylChiral,
    /// Real `alpha`, purely imaginary `beta`.
    Majorana,
}

impl CatalogName {
    pub const ALL: [CatalogName; 3] = [CatalogName::DiracPauli, CatalogName::WeylChiral, CatalogName::Majorana];

    pub fn as_str(&self) -> &'static str {
        match self {
            CatalogName::DiracPauli => "dirac-pauli",
            CatalogName::WeylChiral => "weyl-chiral",
            CatalogName::Majorana => "majorana",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown representation {0:?} (known: dirac-pauli, weyl-chiral, majorana)")]
pub struct UnknownCatalogName(pub String);

impl FromStr for CatalogName {
    type Err = UnknownCatalogName;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCatalogName(s.to_string()))
    }
}

/// `[[a, b], [c, d]]` from 2x2 blocks.
pub fn block(a: &CMatrix, b: &CMatrix, c: &CMatrix, d: &CMatrix) -> CMatrix {
    CMatrix::from_fn(4, |i, j| {
        let src = match (i < 2, j < 2) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        src.get(i % 2, j % 2).clone()
    })
}

fn int_matrix(rows: [[(i64, i64); 4]; 4]) -> CMatrix {
    CMatrix::from_fn(4, |i, j| ComplexRational::from_ints(rows[i][j].0, rows[i][j].1))
}

pub fn catalog_set(name: CatalogName) -> MatrixSet {
    let z = CMatrix::zeros(2);
    let id = CMatrix::identity(2);
    let sigma = pauli();
    let (alphas, beta) = match name {
        CatalogName::DiracPauli => (
            sigma.clone().map(|s| block(&z, &s, &s, &z)),
            block(&id, &z, &z, &-&id),
        ),
        CatalogName::WeylChiral => (
            sigma.clone().map(|s| block(&-&s, &z, &z, &s)),
            block(&z, &id, &id, &z),
        ),
        CatalogName::Majorana => {
            let o = (0, 0);
            let p = (1, 0);
            let n = (-1, 0);
            let pi = (0, 1);
            let ni = (0, -1);
            (
                [
                    int_matrix([[o, o, o, n], [o, o, n, o], [o, n, o, o], [n, o, o, o]]),
                    int_matrix([[p, o, o, o], [o, p, o, o], [o, o, n, o], [o, o, o, n]]),
                    int_matrix([[o, o, n, o], [o, o, o, p], [n, o, o, o], [o, p, o, o]]),
                ],
                int_matrix([[o, o, o, ni], [o, o, pi, o], [o, ni, o, o], [pi, o, o, o]]),
            )
        }
    };
    MatrixSet::new(alphas, beta, name.as_str()).expect("catalog sets are Hermitian")
}

/// Looks up a representation by name.
pub fn catalog(name: &str) -> Result<MatrixSet, UnknownCatalogName> {
    Ok(catalog_set(name.parse()?))
}
