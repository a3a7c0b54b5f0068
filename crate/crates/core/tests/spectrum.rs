mod common;

use common::*;
use dirac_core::clifford::{catalog_set, perturb, CatalogName};
use dirac_core::spectrum::{
    eigensolve, linspace, positive_energy_spinors, product_grid, sweep, MomentumSample, EIGENVALUE_TOLERANCE,
    RESIDUAL_TOLERANCE,
};
use dirac_core::symmat::{build_hamiltonian, char_poly, Slot};
use dirac_core::{rat, ComplexRational};
use rand::Rng;

fn grid(m: f64) -> Vec<MomentumSample> {
    let axis = linspace(-2.0, 2.0, 11);
    product_grid([&axis, &axis, &axis], m)
}

#[test]
fn standard_set_over_grid() {
    let set = catalog_set(CatalogName::DiracPauli);
    for m in [0.0, 1.0] {
        let g = grid(m);
        let out = sweep(&set, &g);
        assert_eq!(out.rows.len(), 1331);
        assert!(out.rows.iter().zip(&g).all(|(row, s)| row.sample == *s));
        assert!(out.max_dispersion_error <= EIGENVALUE_TOLERANCE, "{}", out.max_dispersion_error);
        assert!(out.flagged.is_empty());
    }
}

#[test]
fn perturbed_set_is_flagged() {
    let set = perturb(&catalog_set(CatalogName::DiracPauli), Slot::Alpha(0), 0, 2, &ComplexRational::real(rat(1, 10))).unwrap();
    let out = sweep(&set, &grid(1.0));
    assert!(!out.flagged.is_empty());
}

/// `e_k` of the eigenvalues equals `(-1)^k c_{n-k}` evaluated at the sample.
#[test]
fn eigenvalues_match_exact_char_poly() {
    let mut r = rng(5);
    let mut sets: Vec<_> = CatalogName::ALL.iter().map(|&c| catalog_set(c)).collect();
    sets.extend((0..5).map(|_| random_set(&mut r, 4)));
    sets.extend((0..5).map(|_| random_set(&mut r, 3)));
    for set in &sets {
        let n = set.n();
        let cp = char_poly(&build_hamiltonian(set)).unwrap();
        for _ in 0..10 {
            let q: Vec<_> = (0..4).map(|_| rat(r.gen_range(-9..=9), r.gen_range(1..=4))).collect();
            let q = [q[0].clone(), q[1].clone(), q[2].clone(), num_traits::Signed::abs(&q[3])];
            let f = q.clone().map(|x| num_traits::ToPrimitive::to_f64(&x).unwrap());
            let sample = MomentumSample::new([f[0], f[1], f[2]], f[3]).unwrap();
            let ev = eigensolve(set, &sample).eigenvalues;
            let point = q.map(ComplexRational::real);
            let mut elementary = vec![1.0];
            for &l in &ev {
                let mut next = vec![0.0; elementary.len() + 1];
                for (k, e) in elementary.iter().enumerate() {
                    next[k] += e;
                    next[k + 1] += e * l;
                }
                elementary = next;
            }
            for k in 1..=n {
                let exact = cp.coeff(n - k).evaluate(&point).to_f64_pair().0;
                let want = if k % 2 == 0 { exact } else { -exact };
                let scale = 1.0 + want.abs();
                assert!((elementary[k] - want).abs() <= 1e-8 * scale, "e{k}: {} vs {want}", elementary[k]);
            }
        }
    }
}

#[test]
fn spinor_residuals_random_samples() {
    let mut r = rng(6);
    for name in CatalogName::ALL {
        let set = catalog_set(name);
        for _ in 0..100 {
            let p = [r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0)];
            let sample = MomentumSample::new(p, r.gen_range(0.0..3.0)).unwrap();
            let basis = positive_energy_spinors(&set, &sample).unwrap();
            let bound = RESIDUAL_TOLERANCE * (1.0 + sample.momentum_norm() + sample.m);
            let h = dirac_core::spectrum::hamiltonian_f64(&set, &sample);
            let [u1, u2] = &basis.vectors;
            assert!((u1.norm() - 1.0).abs() <= RESIDUAL_TOLERANCE);
            assert!((u2.norm() - 1.0).abs() <= RESIDUAL_TOLERANCE);
            assert!(u1.dotc(u2).norm() <= RESIDUAL_TOLERANCE);
            for u in [u1, u2] {
                let e = num_complex::Complex64::new(sample.energy(), 0.0);
                assert!((&h * u - u * e).norm() <= bound);
            }
        }
    }
}

#[test]
fn spinors_rejected_for_broken_set() {
    let set = perturb(&catalog_set(CatalogName::DiracPauli), Slot::Beta, 0, 0, &ComplexRational::real(rat(1, 2))).unwrap();
    let sample = MomentumSample::new([0.3, 0.1, -0.2], 1.0).unwrap();
    assert!(positive_energy_spinors(&set, &sample).is_err());
}

#[test]
fn sweeps_are_deterministic() {
    let set = catalog_set(CatalogName::Majorana);
    let g = grid(0.5);
    assert_eq!(sweep(&set, &g), sweep(&set, &g));
}
