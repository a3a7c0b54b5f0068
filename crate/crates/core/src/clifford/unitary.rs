use thiserror::Error;

use crate::algebra::{rat, ComplexRational};
use crate::matrix::CMatrix;
use crate::symmat::{MatrixSet, SetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnitaryError {
    #[error("U U^dagger != I")]
    NotUnitary,
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
}

/// Matrix with `U U^dagger = I` in exact arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactUnitary(CMatrix);

impl ExactUnitary {
    pub fn new(m: CMatrix) -> Result<Self, UnitaryError> {
        if &m * &m.adjoint() == CMatrix::identity(m.n()) {
            Ok(Self(m))
        } else {
            Err(UnitaryError::NotUnitary)
        }
    }

    pub fn identity(n: usize) -> Self {
        Self(CMatrix::identity(n))
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// Sends basis vector `j` to `signs[j] * e_{perm[j]}`.
    pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> Result<Self, UnitaryError> {
        let n = perm.len();
        if signs.len() != n || signs.iter().any(|s| s.abs() != 1) {
            return Err(UnitaryError::InvalidGenerator("signs must be +-1, one per column".into()));
        }
        let mut m = CMatrix::zeros(n);
        for (j, (&i, &s)) in perm.iter().zip(signs).enumerate() {
            if i >= n {
                return Err(UnitaryError::InvalidGenerator(format!("index {i} out of range")));
            }
            m.set(i, j, ComplexRational::from_int(s));
        }
        Self::new(m).map_err(|_| UnitaryError::InvalidGenerator("not a permutation".into()))
    }

    /// Diagonal of unit phases; each entry must have modulus one.
    pub fn phases(entries: Vec<ComplexRational>) -> Result<Self, UnitaryError> {
        Self::new(CMatrix::diagonal(entries))
    }

    /// Rotation by `cos = a/c`, `sin = b/c` in the `(i, j)` plane, for a
    /// Pythagorean triple `a^2 + b^2 = c^2`. With `imaginary` the off-diagonal
    /// entries are `i*sin`.
    pub fn rotation(n: usize, i: usize, j: usize, (a, b, c): (i64, i64, i64), imaginary: bool) -> Result<Self, UnitaryError> {
        if i == j || i >= n || j >= n || c == 0 {
            return Err(UnitaryError::InvalidGenerator("bad rotation plane".into()));
        }
        let cos = ComplexRational::real(rat(a, c));
        let sin = ComplexRational::real(rat(b, c));
        let mut m = CMatrix::identity(n);
        m.set(i, i, cos.clone());
        m.set(j, j, cos);
        if imaginary {
            let isin = &sin * &ComplexRational::i();
            m.set(i, j, isin.clone());
            m.set(j, i, isin);
        } else {
            m.set(i, j, -&sin);
            m.set(j, i, sin);
        }
        Self::new(m).map_err(|_| UnitaryError::InvalidGenerator(format!("({a}, {b}, {c}) is not Pythagorean")))
    }

    pub fn compose(&self, other: &ExactUnitary) -> ExactUnitary {
        ExactUnitary(&self.0 * &other.0)
    }

    pub fn adjoint(&self) -> ExactUnitary {
        ExactUnitary(self.0.adjoint())
    }

    /// `U X U^dagger` applied to every matrix of the set.
    pub fn conjugate(&self, set: &MatrixSet) -> Result<MatrixSet, SetError> {
        set.map(|_, x| x.conjugate_by(&self.0))
    }
}
