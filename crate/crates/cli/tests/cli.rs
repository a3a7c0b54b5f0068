use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dirac_cli::{parse_matrix_file, parse_matrix_str, to_json};
use dirac_core::clifford::{catalog_set, perturb, CatalogName};
use dirac_core::symmat::{pauli_set, Slot};
use dirac_core::{rat, ComplexRational};

fn dirac(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac")).args(args).current_dir(dir).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

struct Fixtures {
    dir: tempfile::TempDir,
}

impl Fixtures {
    fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        let standard = catalog_set(CatalogName::DiracPauli);
        write(dir.path(), "dirac-pauli.json", &to_json(&standard));
        let bumped = perturb(&standard, Slot::Alpha(0), 0, 2, &ComplexRational::real(rat(1, 10)))
            .unwrap()
            .with_label("perturbed");
        write(dir.path(), "perturbed.json", &to_json(&bumped));
        let malformed = to_json(&standard).replacen("\"1\"", "\"1.5\"", 1);
        write(dir.path(), "malformed.json", &malformed);
        write(dir.path(), "pauli.json", &to_json(&pauli_set()));
        Self { dir }
    }

    fn path(&self) -> &Path {
        self.dir.path()
    }
}

#[test]
fn exit_code_matrix() {
    let fx = Fixtures::new();
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "dirac-pauli.json"], 0),
        (&["verify", "perturbed.json"], 1),
        (&["solve", "--n", "3", "--multiplicity", "2"], 2),
        (&["verify", "malformed.json"], 3),
        (&["solve", "--n", "4", "--multiplicity", "2"], 0),
        (&["solve", "--n", "2", "--multiplicity", "2"], 2),
        (&["solve", "--n", "2", "--multiplicity", "3"], 3),
        (&["derive", "dirac-pauli.json"], 0),
        (&["derive", "perturbed.json"], 1),
        (&["verify", "pauli.json", "--multiplicity", "1", "--massless"], 1),
        (&["spectrum", "dirac-pauli.json", "--mass", "1", "--grid", "lin:-2:2:3", "--out", "a.csv"], 0),
        (&["spectrum", "perturbed.json", "--mass", "1", "--grid", "lin:-2:2:3", "--out", "b.csv"], 1),
        (&["spectrum", "dirac-pauli.json", "--mass", "-1", "--out", "c.csv"], 3),
        (&["spectrum", "dirac-pauli.json", "--mass", "1", "--grid", "lin:0:1", "--out", "c.csv"], 3),
        (&["catalog", "majorana"], 0),
        (&["catalog", "gamma"], 3),
        (&["verify", "missing.json"], 3),
        (&["frobnicate"], 3),
        (&["solve", "--n", "four", "--multiplicity", "2"], 3),
    ];
    for (args, code) in cases {
        let out = dirac(args, fx.path());
        assert_eq!(out.status.code(), Some(*code), "{args:?}\n{}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn solve_output() {
    let fx = Fixtures::new();
    let out = String::from_utf8(dirac(&["solve", "--n", "4", "--multiplicity", "2"], fx.path()).stdout).unwrap();
    assert!(out.contains("  c3 = 0\n  c2 = -2*s\n  c1 = 0\n  c0 = s^2\n"), "{out}");
    assert!(out.contains("(E-E_p)^2(E+E_p)^2"));
    let out = String::from_utf8(dirac(&["solve", "--n", "3", "--multiplicity", "2"], fx.path()).stdout).unwrap();
    assert!(out.contains("forced: 2*s = 0 for all momenta"), "{out}");
    assert!(out.contains("E_p = 0 for all momenta"));
}

#[test]
fn reports_and_csv_are_byte_identical() {
    let fx = Fixtures::new();
    let runs: &[&[&str]] = &[
        &["verify", "dirac-pauli.json"],
        &["verify", "perturbed.json"],
        &["derive", "perturbed.json"],
        &["solve", "--n", "3", "--multiplicity", "2"],
        &["catalog", "weyl-chiral"],
    ];
    for args in runs {
        let (a, b) = (dirac(args, fx.path()), dirac(args, fx.path()));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
    let spec = ["spectrum", "perturbed.json", "--mass", "0", "--grid", "lin:-2:2:11"];
    let a = dirac(&[&spec[..], &["--out", "one.csv"]].concat(), fx.path());
    let b = dirac(&[&spec[..], &["--out", "two.csv"]].concat(), fx.path());
    let one = std::fs::read(fx.path().join("one.csv")).unwrap();
    assert_eq!(one, std::fs::read(fx.path().join("two.csv")).unwrap());
    let strip = |o: &Output| String::from_utf8_lossy(&o.stdout).replace("one.csv", "").replace("two.csv", "");
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn csv_layout() {
    let fx = Fixtures::new();
    dirac(&["spectrum", "dirac-pauli.json", "--mass", "1", "--grid", "lin:-2:2:11", "--out", "s.csv"], fx.path());
    let text = std::fs::read_to_string(fx.path().join("s.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("px,py,pz,m,e1,e2,e3,e4"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 1331);
    assert_eq!(&rows[0][..4], &[-2.0, -2.0, -2.0, 1.0]);
    assert_eq!(&rows[1][..3], &[-2.0, -2.0, -1.6]);
    for r in &rows {
        let e = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]).sqrt();
        for (k, want) in [-e, -e, e, e].iter().enumerate() {
            assert!((r[4 + k] - want).abs() <= 1e-9);
        }
    }
    let field = text.lines().nth(1).unwrap().split(',').next().unwrap();
    let mantissa = field.trim_start_matches('-').split('e').next().unwrap();
    assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);
}

#[test]
fn catalog_file_round_trip() {
    let fx = Fixtures::new();
    for name in CatalogName::ALL {
        let file = format!("{name}.json");
        let out = dirac(&["catalog", name.as_str(), "--out", &file], fx.path());
        assert_eq!(out.status.code(), Some(0));
        let parsed = parse_matrix_file(&fx.path().join(&file)).unwrap();
        assert_eq!(parsed, catalog_set(name));
        let printed = dirac(&["catalog", name.as_str()], fx.path()).stdout;
        assert_eq!(printed, std::fs::read(fx.path().join(&file)).unwrap());
        let verify = dirac(&["verify", &file], fx.path());
        assert_eq!(verify.status.code(), Some(0), "{name}");
    }
}

#[test]
fn malformed_literal_is_located() {
    let fx = Fixtures::new();
    let out = dirac(&["verify", "malformed.json"], fx.path());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a rational literal"), "{err}");
    assert!(err.contains("line 6") && err.contains("alpha[0][0][3][0]"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn pauli_file_parses() {
    let text = r#"{
  "n": 2,
  "alpha": [
    [[["0", "0"], ["1", "0"]], [["1", "0"], ["0", "0"]]],
    [[["0", "0"], ["0", "-1"]], [["0", "1"], ["0", "0"]]],
    [[["1", "0"], ["0", "0"]], [["0", "0"], ["-1", "0"]]]
  ],
  "beta": [[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]
}"#;
    let set = parse_matrix_str(text, "pauli").unwrap();
    assert_eq!(set, pauli_set());
}

#[test]
fn numbers_are_not_accepted_as_entries() {
    let text = to_json(&pauli_set()).replacen("\"1\"", "1", 1);
    let err = parse_matrix_str(&text, "x").unwrap_err().to_string();
    assert!(err.contains("rational string"), "{err}");
}
