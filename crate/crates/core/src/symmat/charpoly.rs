use thiserror::Error;

use super::PolyMatrix;
use crate::algebra::{rat, EPoly, MultiPoly, Ring};
use crate::matrix::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("characteristic polynomial supported for 1 <= n <= 4, got n = {0}")]
pub struct UnsupportedDimension(pub usize);

/// `det(E I - M)`, monic of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    poly: EPoly,
}

impl CharPoly {
    pub fn n(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// `c_k`, the coefficient of `E^k`.
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.poly.coeff(k)
    }

    pub fn as_epoly(&self) -> &EPoly {
        &self.poly
    }

    pub fn into_epoly(self) -> EPoly {
        self.poly
    }

    /// True when no coefficient has an imaginary part.
    pub fn is_real(&self) -> bool {
        self.poly.coeffs().iter().all(MultiPoly::is_real)
    }
}

/// Characteristic polynomial by the Faddeev-LeVerrier recursion
///
/// ```text
/// M_1 = I,   c_{n-k} = -tr(A M_k) / k,   M_{k+1} = A M_k + c_{n-k} I.
/// ```
///
/// The divisions are by the integers `1..=n`, exact over the rationals.
pub fn char_poly(a: &PolyMatrix) -> Result<CharPoly, UnsupportedDimension> {
    let n = a.n();
    if !(1..=4).contains(&n) {
        return Err(UnsupportedDimension(n));
    }
    let mut coeffs = vec![MultiPoly::zero(); n + 1];
    coeffs[n] = MultiPoly::one();
    let mut mk: PolyMatrix = Matrix::identity(n);
    for k in 1..=n {
        let amk = a * &mk;
        let c = amk.trace().scale_rational(&rat(-1, k as i64));
        if k < n {
            mk = amk;
            for i in 0..n {
                let d = mk.get(i, i) + &c;
                mk.set(i, i, d);
            }
        }
        coeffs[n - k] = c;
    }
    Ok(CharPoly { poly: EPoly::from_coeffs(coeffs) })
}
