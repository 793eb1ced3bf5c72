//! Shared plumbing for the subcommands: exit-code classification, JSON file
//! I/O, aligned table rendering, fraction parsing, and the seeded random
//! builders behind `assoc-check` and `generate`.

use std::fmt;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::DeserializeOwned;

use starprod::disc::{CnPolynomial, DiscElement, DiscIndex};
use starprod::gutt::LieStructure;
use starprod::multiindex::MultiIndex;
use starprod::rng::SplitMix64;
use starprod::scalar::{GaussianRational, Scalar};
use starprod::weyl::{BilinearForm, SeminormValue, SymElement};

/// Failure classes mapped onto the process exit code: input errors exit
/// with 1, failed checks with 2. Either way a single JSON object with the
/// message and the class lands on stderr.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Verification(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Verification(_) => "verification",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Verification(m) => m,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Verification(_) => 2,
        }
    }

    pub fn stderr_json(&self) -> String {
        serde_json::json!({ "error": self.message(), "kind": self.kind() }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

/// Sends any engine or I/O error to the input-error exit class; commands
/// that treat a failure as a broken check map it explicitly instead.
pub trait OrInput<T> {
    fn or_input(self) -> Result<T, CliError>;
}

impl<T, E: fmt::Display> OrInput<T> for Result<T, E> {
    fn or_input(self) -> Result<T, CliError> {
        self.map_err(|e| CliError::Input(e.to_string()))
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline, so files written twice from the same
/// configuration are byte-identical.
pub fn json_bytes(value: &serde_json::Value) -> String {
    let mut text =
        serde_json::to_string_pretty(value).expect("JSON values serialize without error");
    text.push('\n');
    text
}

pub fn element_json<T: serde::Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("domain types serialize without error")
}

/// Prints the table to stdout and mirrors the JSON form into a file when an
/// output path was given.
pub fn emit(table: &str, json: &serde_json::Value, output: Option<&Path>) -> Result<(), CliError> {
    print!("{table}");
    if let Some(path) = output {
        fs::write(path, json_bytes(json))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

/// Plain-text table: left-aligned columns padded to the widest cell, two
/// spaces between columns, no trailing whitespace.
pub struct Table {
    widths: Vec<usize>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            widths: headers.iter().map(|h| h.len()).collect(),
            rows: vec![headers.iter().map(|h| h.to_string()).collect()],
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.widths.len(), "ragged table row");
        for (w, c) in self.widths.iter_mut().zip(&cells) {
            *w = (*w).max(c.len());
        }
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                if i + 1 < row.len() {
                    line.extend(std::iter::repeat(' ').take(self.widths[i] - cell.len()));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Fixed-width scientific notation so numeric output is byte-stable.
pub fn sci(x: f64) -> String {
    format!("{x:.12e}")
}

fn bad_fraction(text: &str) -> CliError {
    CliError::Input(format!("expected a fraction like 3 or -5/7, got '{text}'"))
}

pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad_fraction(text))?;
    let d: BigInt = den.parse().map_err(|_| bad_fraction(text))?;
    if d.is_zero() {
        return Err(CliError::Input(format!("zero denominator in '{text}'")));
    }
    Ok(BigRational::new(n, d))
}

pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split(',').map(parse_rational).collect()
}

pub fn parse_exponents(text: &str) -> Result<MultiIndex, CliError> {
    let v = text
        .split(',')
        .map(|p| {
            p.trim().parse::<u32>().map_err(|_| {
                CliError::Input(format!(
                    "expected comma-separated exponents like 2,0,1, got '{text}'"
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MultiIndex(v))
}

/// Closed-form and decimal renderings of a seminorm value.
pub fn seminorm_strings(v: &SeminormValue) -> (String, String) {
    let exact = match v {
        SeminormValue::Exact(r) => r.to_string(),
        SeminormValue::Sqrt(s) => format!("sqrt({s})"),
        SeminormValue::Approx(x) => sci(*x),
    };
    (exact, sci(v.as_f64()))
}

/// Resolves a catalog name or a JSON file path into a Lie structure; the
/// dimension argument only matters for the abelian family.
pub fn load_lie(spec: &str, dim: usize) -> Result<LieStructure, CliError> {
    if let Some(lie) = LieStructure::by_name(spec, dim) {
        return Ok(lie);
    }
    let path = Path::new(spec);
    if path.exists() {
        return read_json(path);
    }
    Err(CliError::Input(format!(
        "unknown Lie structure '{spec}'; use heisenberg, so3, solvable2, abelian, or a JSON file"
    )))
}

/// Small Gaussian rational with numerators in [-3, 3] and denominators in
/// {1, 2}; the real part is kept nonzero so generated terms never vanish.
pub fn random_gaussian(rng: &mut SplitMix64) -> GaussianRational {
    let mut re_num = rng.next_range(-3, 3);
    if re_num == 0 {
        re_num = 1;
    }
    GaussianRational::from_parts(
        re_num,
        rng.next_range(1, 2),
        rng.next_range(-2, 2),
        rng.next_range(1, 2),
    )
}

pub fn random_constant(rng: &mut SplitMix64) -> Scalar {
    Scalar::param_pow(random_gaussian(rng), 0)
}

/// Exponent vector with total degree at most the cap, spread uniformly over
/// the slots one unit at a time.
pub fn random_index(rng: &mut SplitMix64, dim: usize, max_total: u32) -> MultiIndex {
    let mut v = vec![0u32; dim];
    if dim > 0 && max_total > 0 {
        let total = rng.next_range(0, max_total as i64) as u32;
        for _ in 0..total {
            v[rng.next_below(dim as u64) as usize] += 1;
        }
    }
    MultiIndex(v)
}

pub fn random_sym_element(
    rng: &mut SplitMix64,
    dim: usize,
    max_degree: u32,
    terms: u32,
) -> SymElement {
    let mut e = SymElement::zero(dim);
    for _ in 0..terms {
        let c = random_constant(rng);
        e.add_term(random_index(rng, dim, max_degree), c);
    }
    e
}

pub fn random_form(rng: &mut SplitMix64, dim: usize) -> BilinearForm {
    let mut f = BilinearForm::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            let c = random_constant(rng);
            f.set(i, j, c);
        }
    }
    f
}

pub fn random_disc_element(
    rng: &mut SplitMix64,
    n: usize,
    max_degree: u32,
    terms: u32,
) -> DiscElement {
    let mut e = DiscElement::zero(n);
    for _ in 0..terms {
        let p = random_index(rng, n, max_degree);
        let q = random_index(rng, n, max_degree);
        let c = random_constant(rng);
        e.add_term(DiscIndex::new(p, q), c);
    }
    e
}

/// Random polynomial upstairs whose every term has matching holomorphic and
/// antiholomorphic total degree.
pub fn random_invariant(
    rng: &mut SplitMix64,
    n: usize,
    max_degree: u32,
    terms: u32,
) -> CnPolynomial {
    let mut e = CnPolynomial::zero(n);
    for _ in 0..terms {
        let total = rng.next_range(0, max_degree as i64) as u32;
        let options = MultiIndex::all_with_total(n + 1, total);
        let p = options[rng.next_below(options.len() as u64) as usize].clone();
        let q = options[rng.next_below(options.len() as u64) as usize].clone();
        let c = random_constant(rng);
        e.add_term(p, q, c);
    }
    e
}
