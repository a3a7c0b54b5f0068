use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::svar::{RatFn, SPoly};
use crate::algebra::{rat, write_signed_terms, Rational};

/// Demand that `E_p` be a root of multiplicity at least `r` of a monic
/// degree-`n` characteristic polynomial, for every momentum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegeneracyRequirement {
    n: usize,
    r: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RequirementError {
    #[error("dimension {0} is outside the supported range 1..=4")]
    UnsupportedDimension(usize),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("multiplicity {r} exceeds the degree {n} of the characteristic polynomial")]
    MultiplicityExceedsDegree { n: usize, r: usize },
}

impl DegeneracyRequirement {
    pub fn new(n: usize, r: usize) -> Result<Self, RequirementError> {
        if !(1..=4).contains(&n) {
            return Err(RequirementError::UnsupportedDimension(n));
        }
        if r == 0 {
            return Err(RequirementError::ZeroMultiplicity);
        }
        if r > n {
            return Err(RequirementError::MultiplicityExceedsDegree { n, r });
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// Even or odd part of a polynomial evaluated at `E_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Even,
    Odd,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::Even => "even",
            Part::Odd => "odd",
        })
    }
}

/// `P`, `P'`, `P''`, `P'''`, `P^(4)`, ...
pub fn derivative_name(j: usize) -> String {
    match j {
        0..=3 => format!("P{}", "'".repeat(j)),
        _ => format!("P^({j})"),
    }
}

/// `sum_k coeffs[k] * c_k + constant = 0`, one part of one derivative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCondition {
    pub derivative: usize,
    pub part: Part,
    pub coeffs: Vec<SPoly>,
    pub constant: SPoly,
}

impl LinearCondition {
    pub fn label(&self) -> String {
        format!("{} part of {}", self.part, derivative_name(self.derivative))
    }
}

fn falling(k: usize, j: usize) -> i64 {
    (0..j).map(|i| k as i64 - i as i64).product()
}

/// Places `E^d` at `E_p` into its part: `s^(d/2)` (even) or `s^((d-1)/2) E_p` (odd).
fn split_power(d: usize) -> (Part, usize) {
    if d % 2 == 0 {
        (Part::Even, d / 2)
    } else {
        (Part::Odd, (d - 1) / 2)
    }
}

/// The `2r` conditions: for `j = 0..r`, the even then the odd part of
/// `P^(j)(E_p)` with `P(E) = E^n + sum_{k<n} c_k E^k`.
pub fn multiplicity_conditions(req: &DegeneracyRequirement) -> Vec<LinearCondition> {
    let n = req.n;
    let mut out = Vec::with_capacity(2 * req.r);
    for j in 0..req.r {
        for part in [Part::Even, Part::Odd] {
            let mut coeffs = vec![SPoly::zero(); n];
            let mut constant = SPoly::zero();
            for k in j..=n {
                let (p, e) = split_power(k - j);
                if p != part {
                    continue;
                }
                let term = SPoly::monomial(rat(falling(k, j), 1), e);
                if k == n {
                    constant = term;
                } else {
                    coeffs[k] = term;
                }
            }
            out.push(LinearCondition { derivative: j, part, coeffs, constant });
        }
    }
    out
}

/// `constant + sum_j params[j] * c_j` for the free unknowns `c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffineExpr {
    pub constant: SPoly,
    pub params: BTreeMap<usize, SPoly>,
}

impl AffineExpr {
    pub fn constant(c: SPoly) -> Self {
        Self { constant: c, params: BTreeMap::new() }
    }

    pub fn is_constant(&self) -> bool {
        self.params.values().all(SPoly::is_zero)
    }
}

/// E.g. `-2*s` or `-s^2 - s*c2`.
impl fmt::Display for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pieces = self.constant.signed_pieces();
        for (j, coef) in self.params.iter().filter(|(_, c)| !c.is_zero()) {
            let inner = coef.signed_pieces();
            if inner.len() == 1 {
                let (neg, body) = inner.into_iter().next().expect("one term");
                let body = match body.as_str() {
                    "1" => format!("c{j}"),
                    _ => format!("{body}*c{j}"),
                };
                pieces.push((neg, body));
            } else {
                pieces.push((false, format!("({coef})*c{j}")));
            }
        }
        write_signed_terms(f, pieces)
    }
}

/// Coefficients forced by a feasible requirement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedCoefficientSolution {
    pub requirement: DegeneracyRequirement,
    /// `k -> c_k` for every constrained coefficient.
    pub assignments: BTreeMap<usize, AffineExpr>,
    /// Coefficients left unconstrained.
    pub free: BTreeSet<usize>,
}

impl ForcedCoefficientSolution {
    pub fn is_complete(&self) -> bool {
        self.free.is_empty()
    }

    /// `c_k` as a polynomial in `s`, for fully determined coefficients.
    pub fn value(&self, k: usize) -> Option<&SPoly> {
        self.assignments.get(&k).filter(|e| e.is_constant()).map(|e| &e.constant)
    }

    /// One line per coefficient from `c_{n-1}` down to `c_0`, e.g. `c2 = -2*s`.
    pub fn lines(&self) -> Vec<String> {
        (0..self.requirement.n)
            .rev()
            .map(|k| match self.assignments.get(&k) {
                Some(e) => format!("c{k} = {e}"),
                None => format!("c{k} free"),
            })
            .collect()
    }

    /// Each condition with the solution substituted, as the polynomial
    /// coefficients (constant, then one per free unknown) that must vanish.
    pub fn residuals(&self) -> Vec<(LinearCondition, Vec<SPoly>)> {
        multiplicity_conditions(&self.requirement)
            .into_iter()
            .map(|cond| {
                let mut constant = cond.constant.clone();
                let mut params: BTreeMap<usize, SPoly> =
                    self.free.iter().map(|&j| (j, cond.coeffs[j].clone())).collect();
                for (k, expr) in &self.assignments {
                    let a = &cond.coeffs[*k];
                    constant = &constant + &(a * &expr.constant);
                    for (j, pj) in &expr.params {
                        let slot = params.entry(*j).or_default();
                        *slot = &*slot + &(a * pj);
                    }
                }
                let mut all = vec![constant];
                all.extend(params.into_values());
                (cond, all)
            })
            .collect()
    }

    /// Substituting back leaves every condition identically zero.
    pub fn verify(&self) -> bool {
        self.residuals().iter().all(|(_, r)| r.iter().all(SPoly::is_zero))
    }
}

/// Why the requirement cannot be met.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// A combination of the conditions has no unknowns left and demands a
    /// nonzero polynomial in `s` vanish.
    ForcedIdentity,
    /// The linear system is consistent but pins `c_k` to a rational
    /// function of `s` that is not a polynomial.
    NonPolynomial { index: usize, expression: String },
}

/// Proof that no monic degree-`n` polynomial with polynomial coefficients
/// has `E_p` as a root of the required multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub requirement: DegeneracyRequirement,
    /// Nonzero polynomial in `s`; integer coefficients, positive leading one.
    pub witness: SPoly,
    /// The condition, after elimination, that produced the witness.
    pub origin: String,
    pub obstruction: Obstruction,
    pub narrative: String,
}

impl InfeasibilityCertificate {
    /// `forced: 2*s = 0 for all momenta`.
    pub fn witness_line(&self) -> String {
        format!("forced: {} = 0 for all momenta", self.witness)
    }

    pub fn lines(&self) -> Vec<String> {
        vec![self.witness_line(), self.narrative.clone()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Forced(ForcedCoefficientSolution),
    Infeasible(InfeasibilityCertificate),
}

impl SolveOutcome {
    pub fn lines(&self) -> Vec<String> {
        match self {
            SolveOutcome::Forced(s) => s.lines(),
            SolveOutcome::Infeasible(c) => c.lines(),
        }
    }

    pub fn forced(&self) -> Option<&ForcedCoefficientSolution> {
        match self {
            SolveOutcome::Forced(s) => Some(s),
            SolveOutcome::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&InfeasibilityCertificate> {
        match self {
            SolveOutcome::Forced(_) => None,
            SolveOutcome::Infeasible(c) => Some(c),
        }
    }
}

struct Row {
    label: String,
    coeffs: Vec<RatFn>,
    constant: RatFn,
}

/// Solution of a linear system over rational functions of `s`.
#[derive(Debug, PartialEq, Eq)]
pub(crate) enum LinearSolution {
    /// `unknown -> (constant, free unknown -> coefficient)`.
    Solved {
        pivots: BTreeMap<usize, (RatFn, BTreeMap<usize, RatFn>)>,
        free: BTreeSet<usize>,
    },
    /// The first row, in input order, that reduced to `0 = constant != 0`.
    Inconsistent { label: String, constant: RatFn },
}

/// Gauss-Jordan elimination, pivoting on the lowest-index unknown first and,
/// within a column, on the first unused row in input order.
pub(crate) fn eliminate(
    conditions: &[(String, Vec<SPoly>, SPoly)],
    unknowns: usize,
) -> LinearSolution {
    let mut rows: Vec<Row> = conditions
        .iter()
        .map(|(label, coeffs, constant)| Row {
            label: label.clone(),
            coeffs: coeffs.iter().cloned().map(RatFn::from).collect(),
            constant: RatFn::from(constant.clone()),
        })
        .collect();
    let mut used = vec![false; rows.len()];
    let mut pivot_rows = BTreeMap::new();
    for col in 0..unknowns {
        let Some(pr) = (0..rows.len()).find(|&i| !used[i] && !rows[i].coeffs[col].is_zero()) else {
            continue;
        };
        used[pr] = true;
        pivot_rows.insert(col, pr);
        let pivot_coeffs = rows[pr].coeffs.clone();
        let pivot_const = rows[pr].constant.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pr || row.coeffs[col].is_zero() {
                continue;
            }
            let factor = row.coeffs[col].div(&pivot_coeffs[col]);
            for (x, p) in row.coeffs.iter_mut().zip(&pivot_coeffs) {
                *x = x.sub(&factor.mul(p));
            }
            row.constant = row.constant.sub(&factor.mul(&pivot_const));
        }
    }
    if let Some(bad) = rows
        .iter()
        .enumerate()
        .find(|(i, r)| !used[*i] && !r.constant.is_zero())
        .map(|(_, r)| r)
    {
        return LinearSolution::Inconsistent { label: bad.label.clone(), constant: bad.constant.clone() };
    }
    let free: BTreeSet<usize> = (0..unknowns).filter(|c| !pivot_rows.contains_key(c)).collect();
    let pivots = pivot_rows
        .iter()
        .map(|(&col, &pr)| {
            let row = &rows[pr];
            let inv = RatFn::from(SPoly::one()).div(&row.coeffs[col]).neg();
            let constant = row.constant.mul(&inv);
            let params = free
                .iter()
                .filter(|&&j| !row.coeffs[j].is_zero())
                .map(|&j| (j, row.coeffs[j].mul(&inv)))
                .collect();
            (col, (constant, params))
        })
        .collect();
    LinearSolution::Solved { pivots, free }
}

fn narrative(origin: &str, witness: &SPoly) -> String {
    if witness.is_constant() {
        format!(
            "{origin} demands {witness} = 0 identically; no polynomial coefficients satisfy it \
             because E_p is not a polynomial in (p1, p2, p3, m)"
        )
    } else if witness.is_monomial() {
        format!("{origin} forces E_p = 0 for all momenta")
    } else {
        format!("{origin} forces E_p^2 to be a root of {witness} for all momenta, but E_p varies with p")
    }
}

/// Solves for the characteristic-polynomial coefficients that make `E_p`
/// a root of multiplicity `r` for every momentum.
///
/// The `c_k` are treated as unknowns over rational functions of `s`; a
/// solution counts only if every forced coefficient is a polynomial in `s`.
pub fn solve_forced_coefficients(req: DegeneracyRequirement) -> SolveOutcome {
    let conditions: Vec<_> = multiplicity_conditions(&req)
        .into_iter()
        .map(|c| (c.label(), c.coeffs, c.constant))
        .collect();
    match eliminate(&conditions, req.n) {
        LinearSolution::Inconsistent { label, constant } => {
            let witness = constant.numer().clear_denominators();
            let narrative = narrative(&label, &witness);
            SolveOutcome::Infeasible(InfeasibilityCertificate {
                requirement: req,
                witness,
                origin: label,
                obstruction: Obstruction::ForcedIdentity,
                narrative,
            })
        }
        LinearSolution::Solved { pivots, free } => {
            let mut assignments = BTreeMap::new();
            for (k, (constant, params)) in pivots {
                let parts = std::iter::once(&constant).chain(params.values());
                if let Some(bad) = parts.into_iter().find(|f| f.as_poly().is_none()) {
                    let expression = format!("c{k} involves {bad}");
                    return SolveOutcome::Infeasible(InfeasibilityCertificate {
                        requirement: req,
                        witness: bad.denom().clear_denominators(),
                        origin: format!("solution for c{k}"),
                        narrative: format!("{expression}, which is not a polynomial in s"),
                        obstruction: Obstruction::NonPolynomial { index: k, expression },
                    });
                }
                let expr = AffineExpr {
                    constant: constant.as_poly().cloned().unwrap_or_default(),
                    params: params
                        .into_iter()
                        .map(|(j, f)| (j, f.as_poly().cloned().unwrap_or_default()))
                        .collect(),
                };
                assignments.insert(k, expr);
            }
            SolveOutcome::Forced(ForcedCoefficientSolution { requirement: req, assignments, free })
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorizationError {
    #[error("solution leaves coefficients {0:?} free; the spectrum is not determined")]
    Incomplete(Vec<usize>),
    #[error("no even/odd factorization for odd degree {0}")]
    OddDegree(usize),
    #[error("forced polynomial {got} does not equal {expected}")]
    Mismatch { got: String, expected: String },
}

/// Exact factorization of a fully forced characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// Multiplicity of each of `E_p` and `-E_p`.
    pub multiplicity: usize,
    /// The forced polynomial, e.g. `E^4 - 2*s*E^2 + s^2`.
    pub polynomial: String,
}

impl fmt::Display for Factorization {
    /// `(E-E_p)^2(E+E_p)^2`, or `(E-E_p)(E+E_p)` for multiplicity one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exp = match self.multiplicity {
            1 => String::new(),
            k => format!("^{k}"),
        };
        write!(f, "(E-E_p){exp}(E+E_p){exp}")
    }
}

/// Polynomial in `E` with [`SPoly`] coefficients, lowest power first.
fn render_e_poly(coeffs: &[SPoly]) -> String {
    struct Show<'a>(&'a [SPoly]);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut pieces = Vec::new();
            for (k, c) in self.0.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
                let power = match k {
                    0 => String::new(),
                    1 => "E".into(),
                    _ => format!("E^{k}"),
                };
                let inner = c.signed_pieces();
                if k == 0 {
                    pieces.extend(inner);
                } else if inner.len() == 1 {
                    let (neg, body) = inner.into_iter().next().expect("one term");
                    let body = if body == "1" { power } else { format!("{body}*{power}") };
                    pieces.push((neg, body));
                } else {
                    pieces.push((false, format!("({c})*{power}")));
                }
            }
            write_signed_terms(f, pieces)
        }
    }
    Show(coeffs).to_string()
}

/// Substitutes a complete solution into `E^n + sum c_k E^k` and checks it
/// equals `(E^2 - s)^(n/2)`, i.e. `(E - E_p)^(n/2) (E + E_p)^(n/2)`.
pub fn factorized_spectrum(sol: &ForcedCoefficientSolution) -> Result<Factorization, FactorizationError> {
    if !sol.is_complete() {
        return Err(FactorizationError::Incomplete(sol.free.iter().copied().collect()));
    }
    let n = sol.requirement.n;
    if n % 2 == 1 {
        return Err(FactorizationError::OddDegree(n));
    }
    let mut got: Vec<SPoly> = (0..n)
        .map(|k| sol.value(k).cloned().unwrap_or_default())
        .collect();
    got.push(SPoly::one());
    let half = n / 2;
    // (E^2 - s)^half has coefficient binom(half, i) (-s)^(half - i) on E^(2i).
    let mut expected = vec![SPoly::zero(); n + 1];
    let mut binom: i64 = 1;
    for i in 0..=half {
        let sign = if (half - i) % 2 == 0 { 1 } else { -1 };
        expected[2 * i] = SPoly::monomial(Rational::from_integer((sign * binom).into()), half - i);
        binom = binom * (half - i) as i64 / (i as i64 + 1);
    }
    if got != expected {
        return Err(FactorizationError::Mismatch {
            got: render_e_poly(&got),
            expected: render_e_poly(&expected),
        });
    }
    Ok(Factorization { multiplicity: half, polynomial: render_e_poly(&got) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(n: usize, r: usize) -> DegeneracyRequirement {
        DegeneracyRequirement::new(n, r).unwrap()
    }

    fn s_pow(c: i64, k: usize) -> SPoly {
        SPoly::monomial(rat(c, 1), k)
    }

    #[test]
    fn conditions_for_two_components() {
        // P = E^2 + c1 E + c0: even s + c0, odd c1; P' = 2E + c1: even c1, odd 2.
        let c = multiplicity_conditions(&req(2, 2));
        assert_eq!(c.len(), 4);
        assert_eq!(c[0].coeffs, vec![s_pow(1, 0), SPoly::zero()]);
        assert_eq!(c[0].constant, s_pow(1, 1));
        assert_eq!(c[1].coeffs, vec![SPoly::zero(), s_pow(1, 0)]);
        assert_eq!(c[3].coeffs, vec![SPoly::zero(), SPoly::zero()]);
        assert_eq!(c[3].constant, s_pow(2, 0));
        assert_eq!(c[3].label(), "odd part of P'");
    }

    #[test]
    fn requirement_validation() {
        assert_eq!(
            DegeneracyRequirement::new(2, 3),
            Err(RequirementError::MultiplicityExceedsDegree { n: 2, r: 3 })
        );
        assert_eq!(DegeneracyRequirement::new(4, 0), Err(RequirementError::ZeroMultiplicity));
        assert_eq!(DegeneracyRequirement::new(5, 1), Err(RequirementError::UnsupportedDimension(5)));
    }

    #[test]
    fn non_polynomial_solution_is_rejected() {
        // s * c0 - 1 = 0 pins c0 = 1/s.
        let sys = vec![("only".to_string(), vec![s_pow(1, 1)], s_pow(-1, 0))];
        match eliminate(&sys, 1) {
            LinearSolution::Solved { pivots, free } => {
                assert!(free.is_empty());
                let (c, _) = &pivots[&0];
                assert_eq!(c.as_poly(), None);
                assert_eq!(c.to_string(), "(1)/(s)");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inconsistent_row_reported_in_input_order() {
        let sys = vec![
            ("a".to_string(), vec![s_pow(1, 0)], s_pow(1, 1)),
            ("b".to_string(), vec![s_pow(1, 0)], s_pow(3, 1)),
            ("c".to_string(), vec![SPoly::zero()], s_pow(1, 0)),
        ];
        assert_eq!(
            eliminate(&sys, 1),
            LinearSolution::Inconsistent { label: "b".into(), constant: s_pow(2, 1).into() }
        );
    }

    #[test]
    fn affine_rendering() {
        let mut e = AffineExpr::constant(-s_pow(1, 2));
        e.params.insert(2, -s_pow(1, 1));
        assert_eq!(e.to_string(), "-s^2 - s*c2");
        e.params.insert(3, &s_pow(1, 1) + &s_pow(1, 0));
        assert_eq!(e.to_string(), "-s^2 - s*c2 + (s + 1)*c3");
        assert_eq!(AffineExpr::default().to_string(), "0");
    }
}
