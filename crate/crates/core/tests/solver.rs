mod common;

use common::*;
use dirac_core::dispersion::{
    check_dispersion, check_dispersion_with, factorized_spectrum, solve_forced_coefficients, AffineExpr,
    DegeneracyRequirement, FactorizationError, ForcedCoefficientSolution, Obstruction, RequirementError, SPoly,
    SolveOutcome,
};
use dirac_core::clifford::{catalog_set, CatalogName};
use dirac_core::symmat::{build_hamiltonian_with, char_poly, pauli_set, MassMode};
use dirac_core::{rat, EPoly, MultiPoly, Ring, Var};

fn solve(n: usize, r: usize) -> SolveOutcome {
    solve_forced_coefficients(DegeneracyRequirement::new(n, r).unwrap())
}

fn s_poly(coeffs: &[i64]) -> SPoly {
    SPoly::from_coeffs(coeffs.iter().map(|&c| rat(c, 1)).collect())
}

#[test]
fn four_components_double_root() {
    let out = solve(4, 2);
    let sol = out.forced().expect("feasible");
    assert!(sol.is_complete());
    assert_eq!(sol.lines(), ["c3 = 0", "c2 = -2*s", "c1 = 0", "c0 = s^2"]);
    assert_eq!(sol.value(2), Some(&s_poly(&[0, -2])));
    assert_eq!(sol.value(0), Some(&s_poly(&[0, 0, 1])));
}

#[test]
fn two_components_double_root_is_infeasible() {
    let cert = solve(2, 2).certificate().cloned().expect("infeasible");
    assert_eq!(cert.witness, s_poly(&[2]));
    assert_eq!(cert.origin, "odd part of P'");
    assert_eq!(cert.obstruction, Obstruction::ForcedIdentity);
    assert_eq!(cert.witness_line(), "forced: 2 = 0 for all momenta");
}

#[test]
fn three_components_double_root_is_infeasible() {
    let cert = solve(3, 2).certificate().cloned().expect("infeasible");
    assert_eq!(cert.witness, s_poly(&[0, 2]));
    assert_eq!(cert.witness_line(), "forced: 2*s = 0 for all momenta");
    assert!(cert.narrative.contains("forces E_p = 0 for all momenta"), "{}", cert.narrative);
}

#[test]
fn two_components_single_root() {
    let sol = solve(2, 1).forced().cloned().unwrap();
    assert_eq!(sol.lines(), ["c1 = 0", "c0 = -s"]);
    assert_eq!(factorized_spectrum(&sol).unwrap().to_string(), "(E-E_p)(E+E_p)");
}

/// Substitutes `c_k` into `E^n + sum c_k E^k` with `s -> p^2 + m^2`.
fn char_poly_from(values: &[SPoly]) -> EPoly {
    let mut coeffs: Vec<MultiPoly> = values.iter().map(SPoly::to_multipoly).collect();
    coeffs.push(MultiPoly::one());
    EPoly::from_coeffs(coeffs)
}

fn instantiate(expr: &AffineExpr, free: &[(usize, SPoly)]) -> SPoly {
    free.iter().fold(expr.constant.clone(), |acc, (j, v)| match expr.params.get(j) {
        Some(c) => &acc + &(c * v),
        None => acc,
    })
}

#[test]
fn four_components_single_root_back_substitution() {
    let sol = solve(4, 1).forced().cloned().unwrap();
    assert_eq!(sol.free.iter().copied().collect::<Vec<_>>(), [2, 3]);
    assert_eq!(sol.lines(), ["c3 free", "c2 free", "c1 = -s*c3", "c0 = -s^2 - s*c2"]);
    let mut r = rng(11);
    for _ in 0..20 {
        let free: Vec<(usize, SPoly)> = sol
            .free
            .iter()
            .map(|&j| (j, SPoly::from_coeffs((0..3).map(|_| small_rational(&mut r)).collect())))
            .collect();
        let values: Vec<SPoly> = (0..4)
            .map(|k| match sol.assignments.get(&k) {
                Some(e) => instantiate(e, &free),
                None => free.iter().find(|(j, _)| *j == k).unwrap().1.clone(),
            })
            .collect();
        assert!(char_poly_from(&values).reduce_at_dispersion().is_zero());
    }
}

#[test]
fn every_feasible_requirement_round_trips() {
    for n in 1..=4 {
        for r in 1..=n {
            match solve(n, r) {
                SolveOutcome::Forced(sol) => assert!(sol.verify(), "({n}, {r})"),
                SolveOutcome::Infeasible(cert) => assert!(!cert.witness.is_zero(), "({n}, {r})"),
            }
        }
    }
}

#[test]
fn certificates_are_reproducible() {
    for (n, r) in [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)] {
        assert_eq!(solve(n, r), solve(n, r));
    }
}

#[test]
fn requirement_validation() {
    assert_eq!(DegeneracyRequirement::new(2, 3), Err(RequirementError::MultiplicityExceedsDegree { n: 2, r: 3 }));
    assert!(DegeneracyRequirement::new(4, 0).is_err());
    assert!(DegeneracyRequirement::new(5, 1).is_err());
}

#[test]
fn factorization_of_forced_quartic() {
    let sol = solve(4, 2).forced().cloned().unwrap();
    let f = factorized_spectrum(&sol).unwrap();
    assert_eq!(f.to_string(), "(E-E_p)^2(E+E_p)^2");
    // Independent expansion of (E^2 - s)^2 with s = p^2 + m^2.
    let values: Vec<SPoly> = (0..4).map(|k| sol.value(k).unwrap().clone()).collect();
    let quad = &EPoly::e_pow(2) - &EPoly::constant(MultiPoly::dispersion_modulus());
    assert_eq!(char_poly_from(&values), &quad * &quad);

    let mut tampered: ForcedCoefficientSolution = sol.clone();
    tampered.assignments.insert(2, AffineExpr::constant(s_poly(&[0, 2])));
    assert!(matches!(factorized_spectrum(&tampered), Err(FactorizationError::Mismatch { .. })));
    let partial = solve(4, 1).forced().cloned().unwrap();
    assert!(matches!(factorized_spectrum(&partial), Err(FactorizationError::Incomplete(_))));
}

/// `check_dispersion` passes iff the char poly equals the forced one.
fn consistent(set: &dirac_core::MatrixSet, r: usize, mode: MassMode) {
    let sol = solve(set.n(), r).forced().cloned().unwrap();
    let cp = char_poly(&build_hamiltonian_with(set, mode)).unwrap();
    let matches = (0..set.n()).all(|k| {
        let mut want = sol.value(k).unwrap().to_multipoly();
        if mode == MassMode::Massless {
            want = want.drop_var(Var::M);
        }
        cp.coeff(k) == want
    });
    assert_eq!(check_dispersion_with(set, r, mode).pass, matches, "{}", set.label());
}

#[test]
fn dispersion_check_agrees_with_solver() {
    let mut r = rng(12);
    let mut sets: Vec<_> = CatalogName::ALL.iter().map(|&c| catalog_set(c)).collect();
    sets.extend((0..10).map(|_| random_conjugate(&mut r)));
    sets.extend((0..10).map(|_| random_perturbation(&mut r)));
    sets.extend((0..5).map(|_| random_set(&mut r, 4)));
    for set in &sets {
        consistent(set, 2, MassMode::Massive);
    }
    consistent(&pauli_set(), 1, MassMode::Massless);
    consistent(&pauli_set(), 1, MassMode::Massive);
    for _ in 0..5 {
        consistent(&random_set(&mut r, 2), 1, MassMode::Massive);
    }
}

#[test]
fn higher_multiplicity_implies_lower() {
    let mut r = rng(13);
    let mut sets: Vec<_> = CatalogName::ALL.iter().map(|&c| catalog_set(c)).collect();
    sets.push(pauli_set());
    sets.extend((0..5).map(|_| random_perturbation(&mut r)));
    for n in 2..=4 {
        sets.extend((0..3).map(|_| random_set(&mut r, n)));
    }
    for set in &sets {
        for k in 2..=set.n() {
            if check_dispersion(set, k).pass {
                assert!(check_dispersion(set, k - 1).pass);
            }
        }
    }
}

#[test]
fn verdicts_invariant_under_exact_unitaries() {
    let mut r = rng(14);
    let mut sets: Vec<_> = CatalogName::ALL.iter().map(|&c| catalog_set(c)).collect();
    sets.extend((0..4).map(|_| random_perturbation(&mut r)));
    sets.extend((0..4).map(|_| random_set(&mut r, 4)));
    for set in &sets {
        let u = random_unitary(&mut r);
        let conj = u.conjugate(set).unwrap();
        let (a, b) = (check_dispersion(set, 2), check_dispersion(&conj, 2));
        assert_eq!(a.char_poly, b.char_poly);
        assert_eq!(a.pass, b.pass);
    }
}

#[test]
fn standard_set_passes_double_root_check() {
    let report = check_dispersion(&catalog_set(CatalogName::DiracPauli), 2);
    assert!(report.pass);
    assert_eq!(report.residuals.len(), 4);
}

#[test]
fn identity_beta_fails_through_c3() {
    let set = catalog_set(CatalogName::DiracPauli)
        .map(|s, x| if s == dirac_core::symmat::Slot::Beta { dirac_core::CMatrix::identity(4) } else { x.clone() })
        .unwrap();
    let report = check_dispersion(&set, 2);
    assert!(!report.pass);
    let c3 = report.char_poly.coeff(3);
    assert_eq!(c3, var(Var::M).scale_rational(&rat(-4, 1)));
    // Odd part of P(E_p) is c3 s + c1, computed here from the coefficients directly.
    let s = MultiPoly::dispersion_modulus();
    let odd = &(&c3 * &s) + &report.char_poly.coeff(1);
    assert_eq!(report.residuals[1].label(), "odd part of P");
    assert_eq!(report.residuals[1].poly, odd);
    assert!(!odd.is_zero());
}

#[test]
fn massless_pauli_single_root() {
    assert!(check_dispersion_with(&pauli_set(), 1, MassMode::Massless).pass);
    assert!(!check_dispersion(&pauli_set(), 1).pass);
}
