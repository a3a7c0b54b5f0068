use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::multipoly::{coeff_prefix, write_signed_terms};
use super::{rat, ComplexRational, MultiPoly, Ring};

/// Polynomial in the energy `E` with [`MultiPoly`] coefficients.
///
/// `coeffs[k]` multiplies `E^k`; the last entry is never zero, and the zero
/// polynomial has no entries.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct EPoly {
    coeffs: Vec<MultiPoly>,
}

/// `Q(E) = even + E * odd` modulo `E^2 - (p1^2 + p2^2 + p3^2 + m^2)`.
///
/// At `E = E_p` this is `A + E_p * B`, and since `E_p` is not a polynomial in
/// the momenta, `Q(E_p)` vanishes identically iff both parts do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPair {
    pub even: MultiPoly,
    pub odd: MultiPoly,
}

impl ReducedPair {
    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

impl EPoly {
    pub fn from_coeffs(mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: MultiPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `E`.
    pub fn e() -> Self {
        Self::from_coeffs(vec![MultiPoly::zero(), MultiPoly::one()])
    }

    /// `E^k`.
    pub fn e_pow(k: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(); k];
        coeffs.push(MultiPoly::one());
        Self { coeffs }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `E^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == MultiPoly::one())
    }

    pub fn scale(&self, k: &MultiPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `d/dE`, applied coefficient-wise.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_rational(&rat(k as i64, 1)))
                .collect(),
        )
    }

    /// `j`-th derivative.
    pub fn nth_derivative(&self, j: usize) -> Self {
        (0..j).fold(self.clone(), |q, _| q.derivative())
    }

    /// Divides by the monic `E^2 - s` with `s = p1^2 + p2^2 + p3^2 + m^2`.
    ///
    /// Returns the quotient and the remainder as its even/odd split.
    pub fn divide_by_dispersion(&self) -> (EPoly, ReducedPair) {
        let s = MultiPoly::dispersion_modulus();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![MultiPoly::zero(); rem.len().saturating_sub(2)];
        for k in (2..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            if lead.is_zero() {
                continue;
            }
            rem[k - 2] = &rem[k - 2] + &(&lead * &s);
            quot[k - 2] = lead;
        }
        rem.resize(2, MultiPoly::zero());
        let odd = rem.pop().unwrap_or_default();
        let even = rem.pop().unwrap_or_default();
        (EPoly::from_coeffs(quot), ReducedPair { even, odd })
    }

    /// Even/odd split of `self` at `E = E_p`.
    pub fn reduce_at_dispersion(&self) -> ReducedPair {
        self.divide_by_dispersion().1
    }

    /// Substitutes `E = value` with `(p1, p2, p3, m)` fixed at `point`.
    pub fn evaluate(&self, value: &ComplexRational, point: &[ComplexRational; 4]) -> ComplexRational {
        self.coeffs.iter().rev().fold(ComplexRational::zero(), |acc, c| {
            &(&acc * value) + &c.evaluate(point)
        })
    }
}

impl Ring for EPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(MultiPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<'a> Add<&'a EPoly> for &'a EPoly {
    type Output = EPoly;
    fn add(self, rhs: &EPoly) -> EPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a EPoly> for &'a EPoly {
    type Output = EPoly;
    fn sub(self, rhs: &EPoly) -> EPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a EPoly> for &'a EPoly {
    type Output = EPoly;
    fn mul(self, rhs: &EPoly) -> EPoly {
        if self.is_zero() || rhs.is_zero() {
            return EPoly::zero();
        }
        let mut out = vec![MultiPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        EPoly::from_coeffs(out)
    }
}

impl Neg for &EPoly {
    type Output = EPoly;
    fn neg(self) -> EPoly {
        EPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EPoly {
            type Output = EPoly;
            fn $m(self, rhs: EPoly) -> EPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for EPoly {
    type Output = EPoly;
    fn neg(self) -> EPoly {
        -&self
    }
}

impl From<MultiPoly> for EPoly {
    fn from(c: MultiPoly) -> Self {
        Self::constant(c)
    }
}

/// Highest power first; multi-term coefficients are parenthesized,
/// e.g. `E^2 - (p1^2 + m^2)`.
impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let power = match k {
                    0 => String::new(),
                    1 => "E".to_string(),
                    _ => format!("E^{k}"),
                };
                if c.num_terms() == 1 {
                    let (mono, coef) = c.terms().next().expect("one term");
                    let mut factors = Vec::new();
                    if mono.degree() > 0 {
                        factors.push(mono.to_string());
                    }
                    if k > 0 {
                        factors.push(power);
                    }
                    let (negative, prefix) = coeff_prefix(coef, !factors.is_empty());
                    (negative, format!("{prefix}{}", factors.join("*")))
                } else {
                    let lead_negative = c
                        .terms()
                        .next_back()
                        .is_some_and(|(_, a)| a.is_real() && a.re.is_negative());
                    let shown = if lead_negative { -c } else { c.clone() };
                    let body = if k == 0 { format!("({shown})") } else { format!("({shown})*{power}") };
                    (lead_negative, body)
                }
            });
        write_signed_terms(f, pieces)
    }
}
