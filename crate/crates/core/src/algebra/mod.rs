//! Exact scalars and polynomials.
//!
//! Everything here is arbitrary precision: the characteristic polynomial of a
//! symbolic 4x4 matrix carries coefficients that would overflow fixed-width
//! integers long before the proofs built on them finish.

mod complex;
mod epoly;
mod multipoly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use complex::{fmt_rational, ComplexRational};
pub use epoly::{EPoly, ReducedPair};
pub use multipoly::{Monomial, MultiPoly, Var};

pub(crate) use multipoly::{coeff_prefix, write_signed_terms};

/// Reduced fraction of big integers with positive denominator.
pub type Rational = num_rational::BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Commutative ring with exact equality, enough for matrix algebra.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
}
