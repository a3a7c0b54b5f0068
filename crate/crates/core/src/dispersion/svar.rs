use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{coeff_prefix, write_signed_terms, ComplexRational, MultiPoly, Rational};

/// Polynomial in the symbol `s`, which stands for `E_p^2 = p^2 + m^2`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct SPoly {
    /// `coeffs[k]` multiplies `s^k`; no trailing zeros.
    coeffs: Vec<Rational>,
}

impl SPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * s^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn s() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True for `c * s^k` with a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &SPoly) -> (SPoly, SPoly) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1;
            let q = &rem[k] / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k - d + i] -= &q * c;
            }
            quot[k - d] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (SPoly::from_coeffs(quot), SPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &SPoly) -> SPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Smallest positive multiple with integer coefficients and a positive
    /// leading coefficient. Integer content is kept.
    pub fn clear_denominators(&self) -> SPoly {
        let lcm = self
            .coeffs
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut out = self.scale(&Rational::from_integer(lcm));
        if out.leading().is_some_and(Signed::is_negative) {
            out = -out;
        }
        out
    }

    /// Substitutes `s = p1^2 + p2^2 + p3^2 + m^2`.
    pub fn to_multipoly(&self) -> MultiPoly {
        let s = MultiPoly::dispersion_modulus();
        self.coeffs.iter().rev().fold(MultiPoly::default(), |acc, c| {
            &(&acc * &s) + &MultiPoly::constant(ComplexRational::real(c.clone()))
        })
    }

    pub(crate) fn signed_pieces(&self) -> Vec<(bool, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let (neg, prefix) = coeff_prefix(&ComplexRational::real(c.clone()), k > 0);
                let body = match k {
                    0 => prefix,
                    1 => format!("{prefix}s"),
                    _ => format!("{prefix}s^{k}"),
                };
                (neg, body)
            })
            .collect()
    }
}

impl<'a> Add<&'a SPoly> for &'a SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a SPoly> for &'a SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        SPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a SPoly> for &'a SPoly {
    type Output = SPoly;
    fn mul(self, rhs: &SPoly) -> SPoly {
        if self.is_zero() || rhs.is_zero() {
            return SPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SPoly::from_coeffs(out)
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        SPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        -&self
    }
}

/// E.g. `-2*s`, `s^2`, `s^2 + 1/2*s - 3`, `0`.
impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(f, self.signed_pieces())
    }
}

/// Reduced quotient of two [`SPoly`] with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: SPoly,
    den: SPoly,
}

impl RatFn {
    pub fn new(num: SPoly, den: SPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").recip();
        Self { num: num.scale(&lead), den: den.scale(&lead) }
    }

    pub fn zero() -> Self {
        Self { num: SPoly::zero(), den: SPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &SPoly {
        &self.num
    }

    pub fn denom(&self) -> &SPoly {
        &self.den
    }

    /// The polynomial this is equal to, if any.
    pub fn as_poly(&self) -> Option<&SPoly> {
        (self.den == SPoly::one()).then_some(&self.num)
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        RatFn::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        RatFn::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(&self.num * &o.num, &self.den * &o.den)
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &RatFn) -> RatFn {
        RatFn::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl From<SPoly> for RatFn {
    fn from(p: SPoly) -> Self {
        Self { num: p, den: SPoly::one() }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == SPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
