//! Requiring `E_p = sqrt(p^2 + m^2)` to be a repeated root of the
//! characteristic polynomial for all momenta.
//!
//! Because `E_p` is not a polynomial in `(p, m)`, any polynomial `Q(E)`
//! evaluated at `E_p` splits as `A + E_p B` with `A`, `B` polynomial, and
//! `Q(E_p) = 0` identically iff `A = 0` and `B = 0`. Applied to `P` and its
//! derivatives this turns the multiplicity requirement into linear
//! conditions on the coefficients `c_k`, written here in the symbol
//! `s = E_p^2`.

mod check;
mod solver;
mod svar;

pub use check::{check_dispersion, check_dispersion_with, DispersionReport, Residual};
pub use solver::{
    derivative_name, factorized_spectrum, multiplicity_conditions, solve_forced_coefficients, AffineExpr,
    DegeneracyRequirement, Factorization, FactorizationError, ForcedCoefficientSolution,
    InfeasibilityCertificate, LinearCondition, Obstruction, Part, RequirementError, SolveOutcome,
};
pub use svar::{RatFn, SPoly};
