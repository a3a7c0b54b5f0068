#![allow(dead_code)]

use dirac_core::algebra::{Monomial, Var};
use dirac_core::clifford::{catalog_set, perturb, CatalogName, ExactUnitary};
use dirac_core::symmat::Slot;
use dirac_core::{rat, CMatrix, ComplexRational, EPoly, MatrixSet, MultiPoly, PolyMatrix, Ring};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> dirac_core::Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn small_complex(rng: &mut impl Rng) -> ComplexRational {
    ComplexRational::new(small_rational(rng), small_rational(rng))
}

pub fn random_hermitian(rng: &mut impl Rng, n: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, ComplexRational::real(small_rational(rng)));
        for j in i + 1..n {
            let z = small_complex(rng);
            m.set(j, i, z.conj());
            m.set(i, j, z);
        }
    }
    m
}

pub fn random_set(rng: &mut impl Rng, n: usize) -> MatrixSet {
    let alphas = [0, 1, 2].map(|_| random_hermitian(rng, n));
    MatrixSet::new(alphas, random_hermitian(rng, n), "random").unwrap()
}

pub fn random_multipoly(rng: &mut impl Rng, max_terms: usize, max_degree: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let mut e = [0u32; 4];
        let deg = rng.gen_range(0..=max_degree);
        for _ in 0..deg {
            e[rng.gen_range(0..4)] += 1;
        }
        p = &p + &MultiPoly::term(small_complex(rng), Monomial(e));
    }
    p
}

pub fn random_homogeneous(rng: &mut impl Rng, degree: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let mut e = [0u32; 4];
        for _ in 0..degree {
            e[rng.gen_range(0..4)] += 1;
        }
        p = &p + &MultiPoly::term(small_complex(rng), Monomial(e));
    }
    p
}

pub fn random_point(rng: &mut impl Rng) -> [ComplexRational; 4] {
    [0, 1, 2, 3].map(|_| small_complex(rng))
}

/// Product of a few random exact generators.
pub fn random_unitary(rng: &mut impl Rng) -> ExactUnitary {
    const TRIPLES: [(i64, i64, i64); 3] = [(3, 4, 5), (5, 12, 13), (8, 15, 17)];
    let phases = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    let mut u = ExactUnitary::identity(4);
    for _ in 0..rng.gen_range(1..=4) {
        let g = match rng.gen_range(0..3) {
            0 => {
                let mut perm = vec![0, 1, 2, 3];
                perm.shuffle(rng);
                let signs: Vec<i64> = (0..4).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
                ExactUnitary::signed_permutation(&perm, &signs).unwrap()
            }
            1 => ExactUnitary::phases(
                (0..4)
                    .map(|_| {
                        let (a, b) = *phases.choose(rng).unwrap();
                        ComplexRational::from_ints(a, b)
                    })
                    .collect(),
            )
            .unwrap(),
            _ => {
                let i = rng.gen_range(0..4);
                let j = (i + rng.gen_range(1..4)) % 4;
                let t = *TRIPLES.choose(rng).unwrap();
                ExactUnitary::rotation(4, i, j, t, rng.gen_bool(0.5)).unwrap()
            }
        };
        u = u.compose(&g);
    }
    u
}

pub fn random_conjugate(rng: &mut impl Rng) -> MatrixSet {
    let base = catalog_set(*CatalogName::ALL.choose(rng).unwrap());
    random_unitary(rng).conjugate(&base).unwrap().with_label("conjugate")
}

/// A valid set with one Hermitian-symmetrized entry nudged by a nonzero rational.
pub fn random_perturbation(rng: &mut impl Rng) -> MatrixSet {
    let base = if rng.gen_bool(0.5) {
        catalog_set(*CatalogName::ALL.choose(rng).unwrap())
    } else {
        random_conjugate(rng)
    };
    let slot = *Slot::ALL.choose(rng).unwrap();
    let (i, j) = (rng.gen_range(0..4), rng.gen_range(0..4));
    let delta = loop {
        let d = small_complex(rng);
        if (i == j && !ComplexRational::real(d.re.clone()).is_zero()) || (i != j && !d.is_zero()) {
            break d;
        }
    };
    perturb(&base, slot, i, j, &delta).unwrap().with_label("perturbed")
}

/// `det(E I - M)` by Laplace expansion along the first row, in EPoly arithmetic.
pub fn cofactor_char_poly(m: &CMatrix) -> EPoly {
    cofactor_char_poly_symbolic(&m.map(|z| MultiPoly::constant(z.clone())))
}

pub fn cofactor_char_poly_symbolic(m: &PolyMatrix) -> EPoly {
    let n = m.n();
    let rows: Vec<Vec<EPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = EPoly::constant(m.get(i, j).clone());
                    if i == j {
                        &EPoly::e() - &c
                    } else {
                        -&c
                    }
                })
                .collect()
        })
        .collect();
    laplace(&rows)
}

fn laplace(rows: &[Vec<EPoly>]) -> EPoly {
    match rows.len() {
        0 => EPoly::one(),
        1 => rows[0][0].clone(),
        n => {
            let mut total = EPoly::zero();
            for j in 0..n {
                let minor: Vec<Vec<EPoly>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &rows[0][j] * &laplace(&minor);
                total = if j % 2 == 0 { &total + &term } else { &total - &term };
            }
            total
        }
    }
}

pub fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}
