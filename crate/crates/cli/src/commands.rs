use std::path::Path;

use dirac_core::clifford::{
    beta_spectrum, canonicalize_beta, catalog, check_alpha_structure, check_anticommutation, check_trace_det,
    cross_term_audit, CliffordReport, StructureReport, TraceDetReport,
};
use dirac_core::dispersion::{
    check_dispersion_with, factorized_spectrum, solve_forced_coefficients, DegeneracyRequirement, DispersionReport,
    SolveOutcome,
};
use dirac_core::spectrum::{sweep, MomentumSample, DEGENERACY_BREAK, EIGENVALUE_TOLERANCE};
use dirac_core::symmat::{MassMode, MatrixSet, Slot};

use crate::file::{parse_matrix_file, to_json};
use crate::grid::GridSpec;
use crate::report::{RunReport, Section, Status, Verdict};
use crate::CliError;

fn dispersion_section(report: &DispersionReport) -> Section {
    let mut lines = vec![format!("P(E) = {}", report.char_poly.as_epoly())];
    lines.extend(report.residuals.iter().map(|r| format!("{}: {}", r.label(), r.poly)));
    let mode = match report.mode {
        MassMode::Massive => "",
        MassMode::Massless => ", m = 0",
    };
    Section::new(
        format!("E_p is a root of multiplicity {}{mode}", report.multiplicity),
        Status::from_pass(report.pass),
        lines,
    )
}

fn anticommutation_section(report: &CliffordReport) -> Section {
    let mut lines: Vec<String> = report
        .squares
        .iter()
        .map(|(s, d)| format!("{s}^2 = I: {}", if d.is_zero() { "holds" } else { "violated" }))
        .collect();
    lines.extend(
        report
            .pairwise
            .iter()
            .map(|((a, b), d)| format!("{{{a}, {b}}} = 0: {}", if d.is_zero() { "holds" } else { "violated" })),
    );
    Section::new("anticommutation relations", Status::from_pass(report.pass), lines)
}

fn trace_sections(report: &TraceDetReport) -> [Section; 2] {
    let traces = report.entries.iter().map(|e| format!("Tr({}) = {}", e.slot, e.trace)).collect();
    let dets = report.entries.iter().map(|e| format!("det({}) = {}", e.slot, e.det)).collect();
    [
        Section::new("trace conditions: Tr = 0", Status::from_pass(report.traces_pass), traces),
        Section::new("determinant conditions: det = 1", Status::from_pass(report.dets_pass), dets),
    ]
}

fn structure_lines(report: &StructureReport) -> Vec<String> {
    let mut lines = Vec::new();
    for k in 0..3 {
        let blocks = if report.alpha_blocks[k] { "diagonal blocks vanish" } else { "diagonal blocks nonzero" };
        let norm = match &report.norm_condition_exact {
            Some(exact) => exact[k].to_string(),
            None => format!("{:.12}", report.norm_condition[k]),
        };
        lines.push(format!("{}: {blocks}; off-diagonal block norm = {norm} (want 2)", Slot::Alpha(k as u8)));
    }
    if let Some(tol) = report.tolerance {
        lines.push(format!("checked in floating point to tolerance {tol:e}"));
    }
    lines
}

fn four_only(title: &str) -> Section {
    Section::new(title, Status::Skipped, vec!["needs four-component matrices".into()])
}

/// Canonicalization and block structure, or the reason they cannot run.
fn structure_sections(set: &MatrixSet) -> (Section, Section, Section) {
    if set.n() != 4 {
        return (four_only("beta spectrum"), four_only("canonical beta"), four_only("alpha block structure"));
    }
    let spectrum = match beta_spectrum(set) {
        Ok(s) => Section::new(
            "beta spectrum: {+1, +1, -1, -1}",
            Status::from_pass(s.is_balanced()),
            vec![format!("+1 with multiplicity {}, -1 with multiplicity {}", s.plus, s.minus)],
        ),
        Err(e) => Section::new("beta spectrum: {+1, +1, -1, -1}", Status::Fail, vec![e.to_string()]),
    };
    let skipped = |title: &str| Section::new(title, Status::Skipped, vec!["beta spectrum check failed".into()]);
    if spectrum.status != Status::Pass {
        return (spectrum, skipped("canonical beta"), skipped("alpha block structure"));
    }
    match canonicalize_beta(set) {
        Ok(c) => {
            let canon = Section::new(
                "canonical beta: diag(1, 1, -1, -1)",
                Status::Info,
                vec![format!("change of basis: {}", c.description)],
            );
            let report = check_alpha_structure(&c.set);
            let structure =
                Section::new("alpha block structure", Status::from_pass(report.pass), structure_lines(&report));
            (spectrum, canon, structure)
        }
        Err(e) => (spectrum, Section::new("canonical beta", Status::Fail, vec![e.to_string()]), skipped("alpha block structure")),
    }
}

fn load(path: &Path) -> Result<MatrixSet, CliError> {
    Ok(parse_matrix_file(path)?)
}

fn subject(set: &MatrixSet) -> String {
    format!("{} (n = {})", set.label(), set.n())
}

pub fn verify(path: &Path, multiplicity: usize, massless: bool) -> Result<RunReport, CliError> {
    let set = load(path)?;
    DegeneracyRequirement::new(set.n(), multiplicity)?;
    let mode = if massless { MassMode::Massless } else { MassMode::Massive };
    let mut sections = vec![
        dispersion_section(&check_dispersion_with(&set, multiplicity, mode)),
        anticommutation_section(&check_anticommutation(&set)),
    ];
    match check_trace_det(&set) {
        Ok(r) => sections.extend(trace_sections(&r)),
        Err(_) => sections.extend([four_only("trace conditions: Tr = 0"), four_only("determinant conditions: det = 1")]),
    }
    let (spectrum, canon, structure) = structure_sections(&set);
    sections.extend([spectrum, canon, structure]);
    Ok(RunReport::from_sections("verify", subject(&set), sections))
}

pub fn solve(n: usize, multiplicity: usize) -> Result<RunReport, CliError> {
    let req = DegeneracyRequirement::new(n, multiplicity)?;
    let subject = format!("n = {n}, multiplicity {multiplicity}");
    let report = match solve_forced_coefficients(req) {
        SolveOutcome::Forced(sol) => {
            let mut sections = vec![Section::new("forced coefficients", Status::Pass, sol.lines())];
            if let Ok(f) = factorized_spectrum(&sol) {
                sections.push(Section::new("factorization", Status::Info, vec![format!("{} = {f}", f.polynomial)]));
            }
            RunReport { command: "solve".into(), subject, verdict: Verdict::Pass, sections }
        }
        SolveOutcome::Infeasible(cert) => {
            let lines = vec![cert.witness_line(), format!("from: {}", cert.origin), cert.narrative.clone()];
            RunReport {
                command: "solve".into(),
                subject,
                verdict: Verdict::Infeasible,
                sections: vec![Section::new("infeasibility certificate", Status::Fail, lines)],
            }
        }
    };
    Ok(report)
}

pub fn derive(path: &Path) -> Result<RunReport, CliError> {
    let set = load(path)?;
    let mut sections = Vec::new();
    let mut dispersion = dispersion_section(&check_dispersion_with(&set, 2, MassMode::Massive));
    dispersion.title = "starting point: E_p is a double root of P(E)".into();
    sections.push(dispersion);
    if set.n() != 4 {
        sections.push(Section::new(
            "derivation",
            Status::Fail,
            vec![format!("the derivation applies to four-component matrices, got n = {}", set.n())],
        ));
        return Ok(RunReport::from_sections("derive", subject(&set), sections));
    }
    let [mut traces, mut dets] = trace_sections(&check_trace_det(&set).expect("n = 4"));
    traces.lines.insert(0, "c3 = -Tr(h) vanishes for all momenta".into());
    dets.lines.insert(0, "c0 = det(h) = E_p^4; on each coordinate axis of (p1, p2, p3, m) this fixes det = 1".into());
    sections.extend([traces, dets]);
    let (spectrum, canon, structure) = structure_sections(&set);
    sections.extend([spectrum, canon, structure]);

    let cross = cross_term_audit(&set).expect("n = 4");
    let lines = cross
        .iter()
        .map(|t| {
            let (i, j) = (t.pair.0 + 1, t.pair.1 + 1);
            format!(
                "p{i}*p{j} in c2: {} = Tr(alpha{i}) Tr(alpha{j}) - {}/2",
                t.c2_coefficient, t.anticommutator_diagonal
            )
        })
        .collect();
    sections.push(Section::new(
        "cross terms of c2 vanish",
        Status::from_pass(cross.iter().all(|t| t.vanishes && t.identity_holds)),
        lines,
    ));
    sections.push(anticommutation_section(&check_anticommutation(&set)));
    Ok(RunReport::from_sections("derive", subject(&set), sections))
}

fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn spectrum(path: &Path, mass: f64, grid: &str, out: &Path) -> Result<RunReport, CliError> {
    let set = load(path)?;
    if !(mass.is_finite() && mass >= 0.0) {
        return Err(CliError::Usage(format!("mass must be a non-negative number, got {mass}")));
    }
    let spec = GridSpec::parse(grid)?;
    let samples = spec.samples(mass);
    let result = sweep(&set, &samples);

    let io = |e: csv::Error| CliError::Io(format!("{}: {e}", out.display()));
    let mut w = csv::Writer::from_path(out).map_err(io)?;
    let mut header: Vec<String> = ["px", "py", "pz", "m"].map(String::from).to_vec();
    header.extend((1..=set.n()).map(|k| format!("e{k}")));
    w.write_record(&header).map_err(io)?;
    for row in &result.rows {
        let s: &MomentumSample = &row.sample;
        let fields = s.p.iter().chain([&s.m]).chain(&row.eigenvalues).map(|x| format_value(*x));
        w.write_record(fields).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;

    let mut lines = vec![
        format!("{} samples written to {}", result.rows.len(), out.display()),
        format!("largest deviation from -E_p, ..., +E_p: {:e}", result.max_dispersion_error),
        format!("rows with a broken +-E_p pairing (threshold {DEGENERACY_BREAK:e}): {}", result.flagged.len()),
    ];
    if let Some(&first) = result.flagged.first() {
        let s = &result.rows[first].sample;
        lines.push(format!("first flagged row: p = ({}, {}, {}), m = {}", s.p[0], s.p[1], s.p[2], s.m));
    }
    let pass = result.flagged.is_empty() && result.max_dispersion_error <= EIGENVALUE_TOLERANCE;
    let section = Section::new("eigenvalues are -E_p, -E_p, +E_p, +E_p", Status::from_pass(pass), lines);
    Ok(RunReport::from_sections("spectrum", subject(&set), vec![section]))
}

/// Returns the JSON for `name`; writes it to `out` when given.
pub fn catalog_file(name: &str, out: Option<&Path>) -> Result<String, CliError> {
    let set = catalog(name).map_err(|e| CliError::Usage(e.to_string()))?;
    let json = to_json(&set);
    if let Some(path) = out {
        std::fs::write(path, &json).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        return Ok(format!("wrote {} to {}\n", set.label(), path.display()));
    }
    Ok(json)
}
