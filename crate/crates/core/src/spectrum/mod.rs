//! Floating-point cross-checks: eigenvalues and positive-energy spinors of
//! `h(p)` at concrete momenta, and sweeps over momentum grids.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::symmat::MatrixSet;

/// Bound on `|h u - E_p u|` relative to `1 + |p| + m`, and on orthonormality.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Agreement of computed eigenvalues with `+-E_p`.
pub const EIGENVALUE_TOLERANCE: f64 = 1e-9;
/// Splitting beyond which a row counts as a broken degeneracy.
pub const DEGENERACY_BREAK: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error("invalid sample: {0}")]
    InvalidSample(String),
    #[error("E_p = 0: the positive-energy eigenspace is undefined")]
    ZeroEnergy,
    #[error("eigenvalue E_p = {energy} has multiplicity {found}, expected 2")]
    EigenspaceDimension { energy: f64, found: usize },
    #[error("spinor check failed: residual {residual:e} exceeds {bound:e}")]
    Residual { residual: f64, bound: f64 },
}

/// Momentum `p` and mass `m >= 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumSample {
    pub p: [f64; 3],
    pub m: f64,
}

impl MomentumSample {
    pub fn new(p: [f64; 3], m: f64) -> Result<Self, SpectrumError> {
        if !p.iter().chain([&m]).all(|x| x.is_finite()) {
            return Err(SpectrumError::InvalidSample("non-finite component".into()));
        }
        if m < 0.0 {
            return Err(SpectrumError::InvalidSample(format!("negative mass {m}")));
        }
        Ok(Self { p, m })
    }

    pub fn momentum_norm(&self) -> f64 {
        self.p.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `E_p = sqrt(p . p + m^2)`.
    pub fn energy(&self) -> f64 {
        (self.p.iter().map(|x| x * x).sum::<f64>() + self.m * self.m).sqrt()
    }
}

/// `h(p) = alpha . p + beta m` in floating point.
pub fn hamiltonian_f64(set: &MatrixSet, sample: &MomentumSample) -> DMatrix<Complex64> {
    let mut h = set.beta().to_f64() * Complex64::new(sample.m, 0.0);
    for (k, pk) in sample.p.iter().enumerate() {
        h += set.alpha(k).to_f64() * Complex64::new(*pk, 0.0);
    }
    h
}

/// Eigenvalues of `h(p)` at one sample, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRow {
    pub sample: MomentumSample,
    pub eigenvalues: Vec<f64>,
}

impl SpectrumRow {
    /// Largest `|lambda_k + lambda_{n+1-k}|` and `|lambda_{2i-1} - lambda_{2i}|`.
    /// Infinite for odd `n`, which cannot pair up.
    pub fn degeneracy_defect(&self) -> f64 {
        let ev = &self.eigenvalues;
        let n = ev.len();
        if n % 2 == 1 {
            return f64::INFINITY;
        }
        let symmetry = (0..n).map(|k| (ev[k] + ev[n - 1 - k]).abs());
        let pairs = (0..n / 2).map(|i| (ev[2 * i] - ev[2 * i + 1]).abs());
        symmetry.chain(pairs).fold(0.0, f64::max)
    }

    /// Largest deviation from `(-E_p, ..., -E_p, E_p, ..., E_p)`.
    pub fn dispersion_error(&self) -> f64 {
        let e = self.sample.energy();
        let n = self.eigenvalues.len();
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(k, l)| {
                let want = if 2 * k < n { -e } else { e };
                (l - want).abs()
            })
            .fold(0.0, f64::max)
    }

    /// The `+-E_p` pairing is broken beyond [`DEGENERACY_BREAK`].
    pub fn is_flagged(&self) -> bool {
        self.degeneracy_defect() > DEGENERACY_BREAK
    }
}

pub fn eigensolve(set: &MatrixSet, sample: &MomentumSample) -> SpectrumRow {
    let eig = hamiltonian_f64(set, sample).symmetric_eigen();
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    SpectrumRow { sample: *sample, eigenvalues }
}

/// Two orthonormal eigenvectors of `h(p)` at `+E_p`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorBasis {
    pub vectors: [DVector<Complex64>; 2],
    pub energy: f64,
}

/// Makes the first component with modulus above `1e-12` real and positive.
fn fix_phase(v: &mut DVector<Complex64>) {
    if let Some(z) = v.iter().find(|z| z.norm() > 1e-12).copied() {
        let phase = z.conj() / z.norm();
        *v *= phase;
    }
}

/// Normalized column of `proj` with the largest norm; ties go to the
/// lowest index.
fn dominant_column(proj: &DMatrix<Complex64>) -> DVector<Complex64> {
    let mut best = 0;
    let mut best_norm = -1.0;
    for j in 0..proj.ncols() {
        let norm = proj.column(j).norm();
        if norm > best_norm + 1e-12 {
            best = j;
            best_norm = norm;
        }
    }
    let mut v: DVector<Complex64> = proj.column(best).into_owned();
    v /= Complex64::new(best_norm, 0.0);
    fix_phase(&mut v);
    v
}

/// Positive-energy plane-wave spinors `u1, u2` with `h(p) u = E_p u`.
///
/// The basis is made deterministic by projecting onto the eigenspace, taking
/// the dominant projected basis vector, and repeating on the remainder.
pub fn positive_energy_spinors(set: &MatrixSet, sample: &MomentumSample) -> Result<SpinorBasis, SpectrumError> {
    let energy = sample.energy();
    if energy <= 0.0 {
        return Err(SpectrumError::ZeroEnergy);
    }
    let h = hamiltonian_f64(set, sample);
    let eig = h.clone().symmetric_eigen();
    let n = set.n();
    let window = DEGENERACY_BREAK * (1.0 + energy);
    let selected: Vec<usize> = (0..n).filter(|&k| (eig.eigenvalues[k] - energy).abs() <= window).collect();
    if selected.len() != 2 {
        return Err(SpectrumError::EigenspaceDimension { energy, found: selected.len() });
    }
    let mut proj = DMatrix::<Complex64>::zeros(n, n);
    for &k in &selected {
        let v = eig.eigenvectors.column(k);
        proj += &v * v.adjoint();
    }
    let u1 = dominant_column(&proj);
    proj -= &u1 * u1.adjoint();
    let u2 = dominant_column(&proj);

    let bound = RESIDUAL_TOLERANCE * (1.0 + sample.momentum_norm() + sample.m);
    let e = Complex64::new(energy, 0.0);
    let residual = [&u1, &u2]
        .iter()
        .map(|u| (&h * *u - *u * e).norm())
        .fold(0.0, f64::max);
    let ortho = [
        (u1.norm() - 1.0).abs(),
        (u2.norm() - 1.0).abs(),
        u1.dotc(&u2).norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    if residual > bound || ortho > RESIDUAL_TOLERANCE {
        return Err(SpectrumError::Residual { residual: residual.max(ortho), bound });
    }
    Ok(SpinorBasis { vectors: [u1, u2], energy })
}

/// Rows of a sweep plus the indices of flagged rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Sweep {
    pub rows: Vec<SpectrumRow>,
    pub flagged: Vec<usize>,
    pub max_dispersion_error: f64,
}

/// Eigen-solves every sample, in parallel, keeping input order.
pub fn sweep(set: &MatrixSet, grid: &[MomentumSample]) -> Sweep {
    let rows: Vec<SpectrumRow> = grid.par_iter().map(|s| eigensolve(set, s)).collect();
    let flagged = rows.iter().enumerate().filter(|(_, r)| r.is_flagged()).map(|(i, _)| i).collect();
    let max_dispersion_error = rows.iter().map(SpectrumRow::dispersion_error).fold(0.0, f64::max);
    Sweep { rows, flagged, max_dispersion_error }
}

/// `count` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..count)
            .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}

/// Cartesian product of the three axes at fixed mass; `px` varies slowest.
pub fn product_grid(axes: [&[f64]; 3], m: f64) -> Vec<MomentumSample> {
    let mut out = Vec::with_capacity(axes.iter().map(|a| a.len()).product());
    for &x in axes[0] {
        for &y in axes[1] {
            for &z in axes[2] {
                out.push(MomentumSample { p: [x, y, z], m });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{catalog_set, CatalogName};

    fn sample(p: [f64; 3], m: f64) -> MomentumSample {
        MomentumSample::new(p, m).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= EIGENVALUE_TOLERANCE)
    }

    #[test]
    fn eigenvalues_of_standard_set() {
        let set = catalog_set(CatalogName::DiracPauli);
        assert!(close(&eigensolve(&set, &sample([0.0; 3], 1.0)).eigenvalues, &[-1.0, -1.0, 1.0, 1.0]));
        assert!(close(&eigensolve(&set, &sample([3.0, 4.0, 0.0], 0.0)).eigenvalues, &[-5.0, -5.0, 5.0, 5.0]));
        assert!(close(&eigensolve(&set, &sample([1.0, 2.0, 2.0], 0.0)).eigenvalues, &[-3.0, -3.0, 3.0, 3.0]));
    }

    #[test]
    fn spinors_at_rest_are_basis_vectors() {
        let set = catalog_set(CatalogName::DiracPauli);
        let b = positive_energy_spinors(&set, &sample([0.0; 3], 1.0)).unwrap();
        let e = |k: usize| DVector::from_fn(4, |i, _| Complex64::new(if i == k { 1.0 } else { 0.0 }, 0.0));
        assert!((&b.vectors[0] - e(0)).norm() < 1e-14);
        assert!((&b.vectors[1] - e(1)).norm() < 1e-14);
    }

    #[test]
    fn spinors_massless() {
        let set = catalog_set(CatalogName::DiracPauli);
        let s = sample([0.0, 0.0, 1.0], 0.0);
        let b = positive_energy_spinors(&set, &s).unwrap();
        let h = hamiltonian_f64(&set, &s);
        for u in &b.vectors {
            assert!((&h * u - u).norm() <= 1e-10);
        }
    }

    #[test]
    fn zero_energy_rejected() {
        let set = catalog_set(CatalogName::DiracPauli);
        assert_eq!(positive_energy_spinors(&set, &sample([0.0; 3], 0.0)), Err(SpectrumError::ZeroEnergy));
        assert!(MomentumSample::new([0.0; 3], -1.0).is_err());
    }

    #[test]
    fn empty_sweep() {
        let set = catalog_set(CatalogName::DiracPauli);
        let s = sweep(&set, &[]);
        assert!(s.rows.is_empty() && s.flagged.is_empty());
    }

    #[test]
    fn grid_helpers() {
        assert_eq!(linspace(-2.0, 2.0, 5), vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        let g = product_grid([&[0.0, 1.0], &[2.0], &[3.0, 4.0]], 1.0);
        assert_eq!(g.len(), 4);
        assert_eq!(g[1].p, [0.0, 2.0, 4.0]);
    }
}
