use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use super::CliffordError;
use crate::algebra::{rat, ComplexRational, Rational, Ring};
use crate::matrix::CMatrix;
use crate::symmat::{MatrixSet, Slot};

/// Tolerance for defect checks on floating-point canonical forms.
pub const CANONICAL_TOLERANCE: f64 = 1e-12;

/// Dimensions of the `+1` and `-1` eigenspaces of an involution `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BetaSpectrum {
    pub plus: usize,
    pub minus: usize,
}

impl BetaSpectrum {
    /// `{+1, +1, -1, -1}`.
    pub fn is_balanced(&self) -> bool {
        self.plus == 2 && self.minus == 2
    }
}

fn projectors(beta: &CMatrix) -> (CMatrix, CMatrix) {
    let n = beta.n();
    let half = ComplexRational::real(rat(1, 2));
    let id = CMatrix::identity(n);
    ((&id + beta).scale(&half), (&id - beta).scale(&half))
}

/// Exact eigenspace dimensions of `beta`, which must square to the identity.
pub fn beta_spectrum(set: &MatrixSet) -> Result<BetaSpectrum, CliffordError> {
    let beta = set.beta();
    if &(beta * beta) != &CMatrix::identity(set.n()) {
        return Err(CliffordError::BetaSquareNotIdentity);
    }
    let (plus, minus) = projectors(beta);
    Ok(BetaSpectrum { plus: plus.rank(), minus: minus.rank() })
}

/// Matrix set in floating point, for canonical forms reached through
/// irrational normalizations.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatSet {
    pub alphas: [DMatrix<Complex64>; 3],
    pub beta: DMatrix<Complex64>,
}

impl FloatSet {
    pub fn from_exact(set: &MatrixSet) -> Self {
        Self {
            alphas: [0, 1, 2].map(|k| set.alpha(k).to_f64()),
            beta: set.beta().to_f64(),
        }
    }

    pub fn get(&self, slot: Slot) -> &DMatrix<Complex64> {
        match slot {
            Slot::Alpha(k) => &self.alphas[k as usize],
            Slot::Beta => &self.beta,
        }
    }
}

/// A set with `beta = diag(1, 1, -1, -1)`, exact when the change of basis
/// is, floating point otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalSet {
    Exact(MatrixSet),
    Approximate { set: FloatSet, tolerance: f64 },
}

/// Change of basis `U = V D^(-1/2)`: the columns of `V` are exactly
/// orthogonal eigenvectors of `beta` (`+1` first), `D` their squared norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    pub columns: CMatrix,
    pub norms_sq: Vec<Rational>,
    /// `U` itself when every norm is a rational square.
    pub exact: Option<CMatrix>,
}

impl BasisChange {
    pub fn to_f64(&self) -> DMatrix<Complex64> {
        if let Some(u) = &self.exact {
            return u.to_f64();
        }
        let mut u = self.columns.to_f64();
        for (j, d) in self.norms_sq.iter().enumerate() {
            let inv = 1.0 / d.to_f64().unwrap_or(f64::NAN).sqrt();
            u.column_mut(j).scale_mut(inv);
        }
        u
    }

    fn describe(&self) -> String {
        let Some(u) = &self.exact else {
            let norms: Vec<String> = self.norms_sq.iter().map(|d| d.to_string()).collect();
            return format!(
                "unitary with irrational normalization (squared column norms {}); verified to tolerance {CANONICAL_TOLERANCE:e}",
                norms.join(", ")
            );
        };
        let n = u.n();
        if *u == CMatrix::identity(n) {
            return "identity".into();
        }
        let one = ComplexRational::one();
        let is_perm = (0..n).all(|j| (0..n).filter(|&i| !u.get(i, j).is_zero()).count() == 1)
            && u.rows().flatten().all(|x| x.is_zero() || *x == one);
        if is_perm {
            let images: Vec<String> = (0..n)
                .map(|j| {
                    let i = (0..n).find(|&i| !u.get(i, j).is_zero()).expect("one entry");
                    format!("e{}", i + 1)
                })
                .collect();
            return format!("permutation: new basis = ({})", images.join(", "));
        }
        "exact unitary change of basis".into()
    }
}

/// Result of bringing `beta` to `diag(1, 1, -1, -1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Canonicalization {
    pub transform: BasisChange,
    pub set: CanonicalSet,
    pub description: String,
    /// Largest deviation of `U^dagger U` from `I` and of the transformed
    /// `beta` from canonical form; zero for exact transforms.
    pub max_defect: f64,
}

fn inner(u: &[ComplexRational], v: &[ComplexRational]) -> ComplexRational {
    u.iter().zip(v).fold(ComplexRational::zero(), |acc, (a, b)| &acc + &(&a.conj() * b))
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let root = |x: &BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

/// Columns of `p` in index order, dependent ones dropped.
fn column_basis(p: &CMatrix) -> Vec<Vec<ComplexRational>> {
    p.independent_columns()
        .into_iter()
        .map(|j| (0..p.n()).map(|i| p.get(i, j).clone()).collect())
        .collect()
}

fn gram_schmidt(vectors: Vec<Vec<ComplexRational>>) -> Vec<Vec<ComplexRational>> {
    let mut out: Vec<Vec<ComplexRational>> = Vec::with_capacity(vectors.len());
    for w in vectors {
        let mut v = w.clone();
        for u in &out {
            let factor = inner(u, &w) / inner(u, u);
            for (x, y) in v.iter_mut().zip(u) {
                *x -= &(&factor * y);
            }
        }
        out.push(v);
    }
    out
}

fn max_abs_diff(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Conjugates the set into the basis where `beta = diag(1, 1, -1, -1)`.
///
/// Eigenvectors come from the columns of the projectors `(I +- beta)/2` in
/// index order, orthogonalized exactly. Normalization stays exact when the
/// squared norms are rational squares; otherwise the result is floating
/// point and checked to [`CANONICAL_TOLERANCE`].
pub fn canonicalize_beta(set: &MatrixSet) -> Result<Canonicalization, CliffordError> {
    let n = set.n();
    if n != 4 {
        return Err(CliffordError::RequiresFourComponents(n));
    }
    let spectrum = beta_spectrum(set)?;
    if !spectrum.is_balanced() {
        return Err(CliffordError::EigenspaceDimensions { plus: spectrum.plus, minus: spectrum.minus });
    }
    let (p_plus, p_minus) = projectors(set.beta());
    let mut vectors = gram_schmidt(column_basis(&p_plus));
    vectors.extend(gram_schmidt(column_basis(&p_minus)));
    let columns = CMatrix::from_fn(n, |i, j| vectors[j][i].clone());
    let norms_sq: Vec<Rational> = vectors.iter().map(|v| inner(v, v).re).collect();
    let roots: Option<Vec<Rational>> = norms_sq.iter().map(rational_sqrt).collect();
    let exact = roots.map(|r| {
        CMatrix::from_fn(n, |i, j| columns.get(i, j).scale(&r[j].recip()))
    });
    let transform = BasisChange { columns, norms_sq, exact };
    let description = transform.describe();
    let canonical_beta = CMatrix::diagonal([1, 1, -1, -1].map(ComplexRational::from_int).to_vec());

    if let Some(u) = &transform.exact {
        let u_dag = u.adjoint();
        let conj = set
            .map(|_, x| &(&u_dag * x) * u)
            .map_err(|_| CliffordError::BetaSquareNotIdentity)?;
        debug_assert_eq!(*conj.beta(), canonical_beta);
        return Ok(Canonicalization {
            transform,
            set: CanonicalSet::Exact(conj),
            description,
            max_defect: 0.0,
        });
    }

    let u = transform.to_f64();
    let u_dag = u.adjoint();
    let float = FloatSet::from_exact(set);
    let apply = |x: &DMatrix<Complex64>| &u_dag * x * &u;
    let out = FloatSet {
        alphas: [0, 1, 2].map(|k| apply(&float.alphas[k])),
        beta: apply(&float.beta),
    };
    let unitarity = max_abs_diff(&(&u_dag * &u), &DMatrix::identity(n, n));
    let beta_defect = max_abs_diff(&out.beta, &canonical_beta.to_f64());
    Ok(Canonicalization {
        transform,
        set: CanonicalSet::Approximate { set: out, tolerance: CANONICAL_TOLERANCE },
        description,
        max_defect: unitarity.max(beta_defect),
    })
}

/// Block structure of each `alpha` in the canonical `beta` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport {
    /// Eigenvalues of `beta`, descending.
    pub beta_spectrum: Vec<f64>,
    /// `beta` equals `diag(1, 1, -1, -1)`.
    pub beta_canonical: bool,
    /// Upper-left and lower-right 2x2 blocks of `alpha_k` vanish.
    pub alpha_blocks: [bool; 3],
    /// `|a13|^2 + |a14|^2 + |a23|^2 + |a24|^2` per `alpha`.
    pub norm_condition: [f64; 3],
    /// The same, exactly, for exact sets.
    pub norm_condition_exact: Option<[Rational; 3]>,
    /// `None` when every check was exact.
    pub tolerance: Option<f64>,
    pub pass: bool,
}

const UPPER_RIGHT: [(usize, usize); 4] = [(0, 2), (0, 3), (1, 2), (1, 3)];
const DIAGONAL_BLOCKS: [(usize, usize); 8] = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)];

fn spectrum_desc(beta: &DMatrix<Complex64>) -> Vec<f64> {
    let mut ev: Vec<f64> = beta.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Checks the off-diagonal block form of every `alpha` for a set already in
/// canonical `beta` form.
pub fn check_alpha_structure(set: &CanonicalSet) -> StructureReport {
    match set {
        CanonicalSet::Exact(s) => {
            let canonical = CMatrix::diagonal([1, 1, -1, -1].map(ComplexRational::from_int).to_vec());
            let beta_canonical = s.n() == 4 && *s.beta() == canonical;
            let alpha_blocks = [0, 1, 2].map(|k| {
                s.n() == 4 && DIAGONAL_BLOCKS.iter().all(|&(i, j)| s.alpha(k).get(i, j).is_zero())
            });
            let norms = [0, 1, 2].map(|k| {
                if s.n() != 4 {
                    return Rational::zero();
                }
                UPPER_RIGHT
                    .iter()
                    .fold(Rational::zero(), |acc, &(i, j)| acc + s.alpha(k).get(i, j).norm_sqr())
            });
            let two = rat(2, 1);
            let pass = beta_canonical && alpha_blocks.iter().all(|&b| b) && norms.iter().all(|x| *x == two);
            StructureReport {
                beta_spectrum: spectrum_desc(&s.beta().to_f64()),
                beta_canonical,
                alpha_blocks,
                norm_condition: norms.clone().map(|x| x.to_f64().unwrap_or(f64::NAN)),
                norm_condition_exact: Some(norms),
                tolerance: None,
                pass,
            }
        }
        CanonicalSet::Approximate { set: s, tolerance } => {
            let tol = *tolerance;
            let canonical = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(
                [1.0, 1.0, -1.0, -1.0].map(|x| Complex64::new(x, 0.0)).to_vec(),
            ));
            let beta_canonical = s.beta.nrows() == 4 && max_abs_diff(&s.beta, &canonical) <= tol;
            let alpha_blocks = [0, 1, 2]
                .map(|k| DIAGONAL_BLOCKS.iter().all(|&(i, j)| s.alphas[k][(i, j)].norm() <= tol));
            let norm_condition =
                [0, 1, 2].map(|k| UPPER_RIGHT.iter().map(|&(i, j)| s.alphas[k][(i, j)].norm_sqr()).sum::<f64>());
            let pass = beta_canonical
                && alpha_blocks.iter().all(|&b| b)
                && norm_condition.iter().all(|x| (x - 2.0).abs() <= tol);
            StructureReport {
                beta_spectrum: spectrum_desc(&s.beta),
                beta_canonical,
                alpha_blocks,
                norm_condition,
                norm_condition_exact: None,
                tolerance: Some(tol),
                pass,
            }
        }
    }
}
