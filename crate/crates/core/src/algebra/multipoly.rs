use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use super::complex::fmt_rational;
use super::{ComplexRational, Rational, Ring};

/// The four polynomial variables, listed in increasing variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    P1,
    P2,
    P3,
    M,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::P1, Var::P2, Var::P3, Var::M];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Momentum component `k` for `k` in 0..3.
    pub fn momentum(k: usize) -> Var {
        [Var::P1, Var::P2, Var::P3][k]
    }

    pub fn name(self) -> &'static str {
        ["p1", "p2", "p3", "m"][self.index()]
    }
}

/// Exponents of `(p1, p2, p3, m)`.
///
/// Ordered graded-lexicographically with `p1 < p2 < p3 < m`: total degree
/// first, then the exponent of `m`, then `p3`, `p2`, `p1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact polynomial in `(p1, p2, p3, m)` with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so equality of term maps is equality
/// of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, ComplexRational>,
}

impl MultiPoly {
    pub fn constant(c: ComplexRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(ComplexRational::one(), Monomial::var(v))
    }

    pub fn term(c: ComplexRational, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Self { terms }
    }

    /// `p1^2 + p2^2 + p3^2 + m^2`, the square of the positive energy.
    pub fn dispersion_modulus() -> Self {
        Var::ALL
            .iter()
            .map(|&v| Self::var(v) * Self::var(v))
            .fold(Self::zero(), |acc, t| acc + t)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ComplexRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> ComplexRational {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// True when every term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(ComplexRational::is_real)
    }

    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    pub fn scale(&self, k: &ComplexRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        self.scale(&ComplexRational::real(k.clone()))
    }

    pub fn imag_part(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, ComplexRational::real(c.im.clone()));
        }
        out
    }

    /// Sets variable `v` to zero.
    pub fn drop_var(&self, v: Var) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Exact substitution of `(p1, p2, p3, m)`.
    pub fn evaluate(&self, point: &[ComplexRational; 4]) -> ComplexRational {
        let mut acc = ComplexRational::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                for _ in 0..mono.exponent(v) {
                    t = &t * &point[v.index()];
                }
            }
            acc += &t;
        }
        acc
    }

    fn add_term(&mut self, mono: Monomial, c: ComplexRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(ComplexRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<ComplexRational> for MultiPoly {
    fn from(c: ComplexRational) -> Self {
        Self::constant(c)
    }
}

/// Writes `sign body` pieces for a sum of terms: the first term carries a
/// bare leading `-`, later ones are joined with ` + ` or ` - `.
pub(crate) fn write_signed_terms<I>(f: &mut fmt::Formatter<'_>, pieces: I) -> fmt::Result
where
    I: IntoIterator<Item = (bool, String)>,
{
    let mut first = true;
    for (negative, body) in pieces {
        match (first, negative) {
            (true, true) => write!(f, "-{body}")?,
            (true, false) => f.write_str(&body)?,
            (false, true) => write!(f, " - {body}")?,
            (false, false) => write!(f, " + {body}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Splits a coefficient into `(negative, text)` for use in front of a
/// non-constant factor. Unit magnitudes are dropped, complex coefficients
/// are parenthesized.
pub(crate) fn coeff_prefix(c: &ComplexRational, has_factor: bool) -> (bool, String) {
    if c.is_real() {
        let negative = c.re.is_negative();
        let mag = c.re.abs();
        if has_factor && mag.is_one() {
            (negative, String::new())
        } else if has_factor {
            (negative, format!("{}*", fmt_rational(&mag)))
        } else {
            (negative, fmt_rational(&mag))
        }
    } else if has_factor {
        (false, format!("({c})*"))
    } else {
        (false, format!("({c})"))
    }
}

/// Terms from highest to lowest in the monomial order, e.g. `m^2 - p1^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms.iter().rev().map(|(m, c)| {
                let has_factor = m.degree() > 0;
                let (neg, prefix) = coeff_prefix(c, has_factor);
                if has_factor {
                    (neg, format!("{prefix}{m}"))
                } else {
                    (neg, prefix)
                }
            }),
        )
    }
}
