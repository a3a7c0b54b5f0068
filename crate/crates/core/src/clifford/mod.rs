//! Anticommutation relations and the trace, determinant and block-structure
//! conditions they come with.
//!
//! For a Hermitian set, `E_p` is a double root of `det(E - h(p))` for every
//! momentum exactly when
//!
//! ```text
//! {alpha_i, alpha_j} = 2 delta_ij I,   {alpha_i, beta} = 0,   beta^2 = I.
//! ```
//!
//! [`equivalence_audit`] runs both sides on a set and compares the verdicts.

mod canonical;
mod catalog;
mod unitary;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{rat, ComplexRational, Monomial, Ring, Var};
use crate::dispersion::{check_dispersion, DispersionReport};
use crate::matrix::CMatrix;
use crate::symmat::{build_hamiltonian, char_poly, trace_and_det, MatrixSet, SetError, Slot, TraceDet};

pub use canonical::{
    beta_spectrum, canonicalize_beta, check_alpha_structure, BasisChange, BetaSpectrum, CanonicalSet,
    Canonicalization, FloatSet, StructureReport, CANONICAL_TOLERANCE,
};
pub use catalog::{block, catalog, catalog_set, CatalogName, UnknownCatalogName};
pub use unitary::{ExactUnitary, UnitaryError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("this check needs four-component matrices, got n = {0}")]
    RequiresFourComponents(usize),
    #[error("beta^2 != I")]
    BetaSquareNotIdentity,
    #[error("beta eigenspaces have dimensions (+1: {plus}, -1: {minus}); expected (2, 2)")]
    EigenspaceDimensions { plus: usize, minus: usize },
}

/// Which relations to check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CliffordScope {
    #[default]
    Full,
    /// Only `{alpha_i, alpha_j} = 2 delta_ij I`; `beta` is ignored.
    AlphasOnly,
}

/// Exact defect of every relation; a relation holds iff its defect is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordReport {
    /// `{X, Y}` for each unordered pair of distinct slots.
    pub pairwise: BTreeMap<(Slot, Slot), CMatrix>,
    /// `X^2 - I` for each slot.
    pub squares: BTreeMap<Slot, CMatrix>,
    pub pass: bool,
}

impl CliffordReport {
    /// Relations with a nonzero defect, named like `{alpha1, beta}` or `alpha2^2 - I`.
    pub fn violations(&self) -> Vec<String> {
        let pairs = self
            .pairwise
            .iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|((a, b), _)| format!("{{{a}, {b}}} != 0"));
        let squares = self
            .squares
            .iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(a, _)| format!("{a}^2 != I"));
        pairs.chain(squares).collect()
    }
}

pub fn check_anticommutation(set: &MatrixSet) -> CliffordReport {
    check_anticommutation_with(set, CliffordScope::Full)
}

pub fn check_anticommutation_with(set: &MatrixSet, scope: CliffordScope) -> CliffordReport {
    let slots: Vec<Slot> = match scope {
        CliffordScope::Full => Slot::ALL.to_vec(),
        CliffordScope::AlphasOnly => Slot::ALL[..3].to_vec(),
    };
    let id = CMatrix::identity(set.n());
    let mut pairwise = BTreeMap::new();
    let mut squares = BTreeMap::new();
    for (i, &a) in slots.iter().enumerate() {
        let x = set.get(a);
        squares.insert(a, &(x * x) - &id);
        for &b in &slots[i + 1..] {
            pairwise.insert((a, b), x.anticommutator(set.get(b)));
        }
    }
    let pass = pairwise.values().chain(squares.values()).all(CMatrix::is_zero);
    CliffordReport { pairwise, squares, pass }
}

/// Traces and determinants against `Tr = 0`, `det = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceDetReport {
    pub entries: Vec<TraceDet>,
    pub traces_pass: bool,
    pub dets_pass: bool,
    pub pass: bool,
}

pub fn check_trace_det(set: &MatrixSet) -> Result<TraceDetReport, CliffordError> {
    if set.n() != 4 {
        return Err(CliffordError::RequiresFourComponents(set.n()));
    }
    let entries = trace_and_det(set);
    let traces_pass = entries.iter().all(|e| e.trace.is_zero());
    let dets_pass = entries.iter().all(|e| e.det == ComplexRational::one());
    Ok(TraceDetReport { entries, traces_pass, dets_pass, pass: traces_pass && dets_pass })
}

/// Dispersion and anticommutation verdicts side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceAudit {
    pub dispersion: DispersionReport,
    pub clifford: CliffordReport,
    pub agree: bool,
}

/// Runs the double-root check (`r = 2`) and the anticommutation check.
pub fn equivalence_audit(set: &MatrixSet) -> Result<EquivalenceAudit, CliffordError> {
    if set.n() != 4 {
        return Err(CliffordError::RequiresFourComponents(set.n()));
    }
    let dispersion = check_dispersion(set, 2);
    let clifford = check_anticommutation(set);
    let agree = dispersion.pass == clifford.pass;
    Ok(EquivalenceAudit { dispersion, clifford, agree })
}

/// The `p_i p_j` coefficient of `c2` for one pair `i < j` (zero-based).
///
/// For any matrices the coefficient equals
/// `Tr(alpha_i) Tr(alpha_j) - (1/2) sum_a {alpha_i, alpha_j}_aa`; it must
/// vanish for `c2 = -2 E_p^2`, which has no cross terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossTerm {
    pub pair: (usize, usize),
    pub c2_coefficient: ComplexRational,
    pub trace_product: ComplexRational,
    /// `sum_a {alpha_i, alpha_j}_aa`.
    pub anticommutator_diagonal: ComplexRational,
    pub identity_holds: bool,
    pub vanishes: bool,
}

pub fn cross_term_audit(set: &MatrixSet) -> Result<Vec<CrossTerm>, CliffordError> {
    let n = set.n();
    if n != 4 {
        return Err(CliffordError::RequiresFourComponents(n));
    }
    let c2 = char_poly(&build_hamiltonian(set)).expect("n = 4").coeff(n - 2);
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let mono = Monomial::var(Var::momentum(i)).mul(&Monomial::var(Var::momentum(j)));
            let c2_coefficient = c2.coeff(&mono);
            let (x, y) = (set.alpha(i), set.alpha(j));
            let trace_product = &x.trace() * &y.trace();
            let anticommutator_diagonal = x.anticommutator(y).trace();
            let predicted = &trace_product - &anticommutator_diagonal.scale(&rat(1, 2));
            out.push(CrossTerm {
                pair: (i, j),
                identity_holds: predicted == c2_coefficient,
                vanishes: c2_coefficient.is_zero(),
                c2_coefficient,
                trace_product,
                anticommutator_diagonal,
            });
        }
    }
    Ok(out)
}

/// Adds `delta` at `(i, j)` of one matrix and `conj(delta)` at `(j, i)`,
/// so the set stays Hermitian. On the diagonal only the real part is used.
pub fn perturb(set: &MatrixSet, slot: Slot, i: usize, j: usize, delta: &ComplexRational) -> Result<MatrixSet, SetError> {
    set.map(|s, m| {
        let mut m = m.clone();
        if s == slot {
            if i == j {
                let d = ComplexRational::real(delta.re.clone());
                m.set(i, i, m.get(i, i) + &d);
            } else {
                m.set(i, j, m.get(i, j) + delta);
                m.set(j, i, m.get(j, i) + &delta.conj());
            }
        }
        m
    })
}
