//! Candidate Dirac matrix sets, the momentum-space hamiltonian built from
//! them, and its characteristic polynomial.

mod charpoly;

use std::fmt;

use thiserror::Error;

use crate::algebra::{ComplexRational, MultiPoly, Ring, Var};
use crate::matrix::{CMatrix, Matrix};

pub use charpoly::{char_poly, CharPoly};

/// Symbolic matrix with polynomial entries.
pub type PolyMatrix = Matrix<MultiPoly>;

/// Which of the four matrices of a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    /// `alpha_{k+1}` for `k` in 0..3.
    Alpha(u8),
    Beta,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::Alpha(0), Slot::Alpha(1), Slot::Alpha(2), Slot::Beta];
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Alpha(k) => write!(f, "alpha{}", k + 1),
            Slot::Beta => f.write_str("beta"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("unsupported dimension {0} (expected 2, 3 or 4)")]
    UnsupportedDimension(usize),
    #[error("{slot} is {found}x{found}, expected {expected}x{expected}")]
    DimensionMismatch { slot: Slot, expected: usize, found: usize },
    /// One-based row and column of the first offending entry.
    #[error("{slot} is not Hermitian: entry ({row},{col}) is not the conjugate of ({col},{row})")]
    NotHermitian { slot: Slot, row: usize, col: usize },
}

/// A candidate `(alpha1, alpha2, alpha3, beta)` of Hermitian `n x n` matrices.
///
/// Hermiticity is checked once, here; everything downstream relies on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixSet {
    n: usize,
    alphas: [CMatrix; 3],
    beta: CMatrix,
    label: String,
}

impl MatrixSet {
    pub fn new(alphas: [CMatrix; 3], beta: CMatrix, label: impl Into<String>) -> Result<Self, SetError> {
        let n = beta.n();
        if !(2..=4).contains(&n) {
            return Err(SetError::UnsupportedDimension(n));
        }
        let set = Self { n, alphas, beta, label: label.into() };
        for (slot, m) in set.slots() {
            if m.n() != n {
                return Err(SetError::DimensionMismatch { slot, expected: n, found: m.n() });
            }
            if let Some((i, j)) = m.hermitian_violation() {
                return Err(SetError::NotHermitian { slot, row: i + 1, col: j + 1 });
            }
        }
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphas(&self) -> &[CMatrix; 3] {
        &self.alphas
    }

    pub fn alpha(&self, k: usize) -> &CMatrix {
        &self.alphas[k]
    }

    pub fn beta(&self) -> &CMatrix {
        &self.beta
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn get(&self, slot: Slot) -> &CMatrix {
        match slot {
            Slot::Alpha(k) => &self.alphas[k as usize],
            Slot::Beta => &self.beta,
        }
    }

    /// The four matrices in the order `alpha1, alpha2, alpha3, beta`.
    pub fn slots(&self) -> impl Iterator<Item = (Slot, &CMatrix)> {
        Slot::ALL.into_iter().map(move |s| (s, self.get(s)))
    }

    /// Applies `f` to every matrix and revalidates.
    pub fn map(&self, mut f: impl FnMut(Slot, &CMatrix) -> CMatrix) -> Result<Self, SetError> {
        let alphas = [0u8, 1, 2].map(|k| f(Slot::Alpha(k), &self.alphas[k as usize]));
        let beta = f(Slot::Beta, &self.beta);
        Self::new(alphas, beta, self.label.clone())
    }
}

/// Whether the mass term enters the hamiltonian.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MassMode {
    #[default]
    Massive,
    /// `m` frozen to zero.
    Massless,
}

/// `h(p) = alpha1 p1 + alpha2 p2 + alpha3 p3 + beta m`.
pub fn build_hamiltonian(set: &MatrixSet) -> PolyMatrix {
    build_hamiltonian_with(set, MassMode::Massive)
}

pub fn build_hamiltonian_with(set: &MatrixSet, mode: MassMode) -> PolyMatrix {
    let vars = [Var::P1, Var::P2, Var::P3, Var::M];
    Matrix::from_fn(set.n(), |i, j| {
        let mut entry = MultiPoly::zero();
        for (slot, v) in Slot::ALL.into_iter().zip(vars) {
            if slot == Slot::Beta && mode == MassMode::Massless {
                continue;
            }
            let c = set.get(slot).get(i, j);
            if !c.is_zero() {
                entry = entry + MultiPoly::var(v).scale(c);
            }
        }
        entry
    })
}

/// Exact trace and determinant of one matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceDet {
    pub slot: Slot,
    pub trace: ComplexRational,
    pub det: ComplexRational,
}

/// Trace and determinant of each of `alpha1, alpha2, alpha3, beta`.
pub fn trace_and_det(set: &MatrixSet) -> Vec<TraceDet> {
    set.slots()
        .map(|(slot, m)| TraceDet { slot, trace: m.trace(), det: m.det_cofactor() })
        .collect()
}

/// The Pauli matrices.
pub fn pauli() -> [CMatrix; 3] {
    [
        CMatrix::from_int_pairs(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        CMatrix::from_int_pairs(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        CMatrix::from_int_pairs(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

/// Two-component set with the Pauli matrices as `alpha` and `beta = 0`.
pub fn pauli_set() -> MatrixSet {
    MatrixSet::new(pauli(), CMatrix::zeros(2), "pauli").expect("Pauli matrices are Hermitian")
}
