use super::solver::{derivative_name, Part};
use crate::algebra::{MultiPoly, Ring, Var};
use crate::symmat::{build_hamiltonian_with, char_poly, CharPoly, MassMode, MatrixSet};

/// One even or odd part of `P^(j)(E_p)`, as a polynomial in the momenta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub derivative: usize,
    pub part: Part,
    pub poly: MultiPoly,
}

impl Residual {
    pub fn label(&self) -> String {
        format!("{} part of {}", self.part, derivative_name(self.derivative))
    }
}

/// Outcome of imposing the multiplicity conditions on a concrete set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DispersionReport {
    pub multiplicity: usize,
    pub mode: MassMode,
    pub char_poly: CharPoly,
    /// Even then odd part for `P, P', ..., P^(r-1)`.
    pub residuals: Vec<Residual>,
    /// Every residual vanishes identically.
    pub pass: bool,
}

impl DispersionReport {
    pub fn failing(&self) -> impl Iterator<Item = &Residual> {
        self.residuals.iter().filter(|r| !r.poly.is_zero())
    }
}

/// Checks whether `E_p` is a root of multiplicity `r` of the
/// characteristic polynomial of `h(p)`, identically in `(p, m)`.
pub fn check_dispersion(set: &MatrixSet, r: usize) -> DispersionReport {
    check_dispersion_with(set, r, MassMode::Massive)
}

/// As [`check_dispersion`]; with [`MassMode::Massless`] the mass is frozen to
/// zero both in the hamiltonian and in `E_p = |p|`.
pub fn check_dispersion_with(set: &MatrixSet, r: usize, mode: MassMode) -> DispersionReport {
    let cp = char_poly(&build_hamiltonian_with(set, mode)).expect("matrix sets have n <= 4");
    let mut residuals = Vec::with_capacity(2 * r);
    let mut q = cp.as_epoly().clone();
    for j in 0..r {
        let pair = q.reduce_at_dispersion();
        let fix = |p: MultiPoly| match mode {
            MassMode::Massive => p,
            MassMode::Massless => p.drop_var(Var::M),
        };
        residuals.push(Residual { derivative: j, part: Part::Even, poly: fix(pair.even) });
        residuals.push(Residual { derivative: j, part: Part::Odd, poly: fix(pair.odd) });
        q = q.derivative();
    }
    let pass = residuals.iter().all(|r| r.poly.is_zero());
    DispersionReport { multiplicity: r, mode, char_poly: cp, residuals, pass }
}
