//! Disc reduction diagnostics: kernel annihilation, pole confinement, the
//! parameter-zero limit, and contour recovery of coefficients.

use std::path::Path;

use num_complex::Complex64;
use serde_json::json;

use starprod::disc::{
    cauchy_coefficient, classical_product, kernel_membership, metric_minus_one, pole_report,
    reduced_poisson_bracket, semiclassical_limit, wick_star, CauchyOptions, CnPolynomial,
    DiscElement, DiscError, DiscIndex,
};
use starprod::multiindex::MultiIndex;
use starprod::numeric::FxComplex;
use starprod::scalar::Scalar;

use crate::commands::Precision;
use crate::support::{
    element_json, emit, parse_exponents, read_json, sci, CliError, OrInput, Table,
};

/// Largest acceptable distance between a contour-recovered coefficient and
/// its exact value.
const RECOVERY_TOLERANCE: f64 = 1e-6;

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn kernel_check_cmd(
    n: Option<usize>,
    max_degree: Option<u32>,
    input: Option<&Path>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    match (input, max_degree) {
        (Some(path), None) => kernel_check_single(path, n, output),
        (None, Some(cap)) => {
            let n = n.ok_or_else(|| {
                CliError::Input("--n is required when sweeping with --max-degree".into())
            })?;
            kernel_check_sweep(n, cap, output)
        }
        _ => Err(CliError::Input(
            "pass exactly one of --input (single element) or --max-degree (sweep)".into(),
        )),
    }
}

fn kernel_check_single(
    path: &Path,
    n: Option<usize>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let f: CnPolynomial = read_json(path)?;
    if let Some(nv) = n {
        if nv != f.n() {
            return Err(CliError::Input(format!(
                "--n {nv} does not match the element parameter count {}",
                f.n()
            )));
        }
    }
    let gm1 = metric_minus_one(f.n());
    let left = wick_star(&gm1, &f).or_input()?;
    let right = wick_star(&f, &gm1).or_input()?;
    let left_kernel = kernel_membership(&left).or_input()?;
    let right_kernel = kernel_membership(&right).or_input()?;
    let input_kernel = kernel_membership(&f).or_input()?;
    let mut table = Table::new(&["product", "restricts to zero"]);
    table.row(vec!["(g - 1) * f".into(), yes_no(left_kernel)]);
    table.row(vec!["f * (g - 1)".into(), yes_no(right_kernel)]);
    table.row(vec!["f itself".into(), yes_no(input_kernel)]);
    let json = json!({
        "n": f.n(),
        "left_in_kernel": left_kernel,
        "right_in_kernel": right_kernel,
        "input_in_kernel": input_kernel,
    });
    emit(&table.render(), &json, output)?;
    if !(left_kernel && right_kernel) {
        return Err(CliError::Verification(
            "a one-sided product with (g - 1) escaped the restriction kernel".into(),
        ));
    }
    Ok(())
}

fn kernel_check_sweep(n: usize, max_degree: u32, output: Option<&Path>) -> Result<(), CliError> {
    let gm1 = metric_minus_one(n);
    let mut table = Table::new(&["degree", "monomial pairs", "products", "all annihilated"]);
    let mut rows_json = Vec::new();
    let mut failures = 0u64;
    for t in 0..=max_degree {
        let idxs = MultiIndex::all_with_total(n + 1, t);
        let mut bad = 0u64;
        for p in &idxs {
            for q in &idxs {
                let mut f = CnPolynomial::zero(n);
                f.add_term(p.clone(), q.clone(), Scalar::one());
                let left = wick_star(&gm1, &f).or_input()?;
                let right = wick_star(&f, &gm1).or_input()?;
                if !kernel_membership(&left).or_input()? {
                    bad += 1;
                }
                if !kernel_membership(&right).or_input()? {
                    bad += 1;
                }
            }
        }
        let pairs = idxs.len() as u64 * idxs.len() as u64;
        failures += bad;
        table.row(vec![
            t.to_string(),
            pairs.to_string(),
            (2 * pairs).to_string(),
            yes_no(bad == 0),
        ]);
        rows_json.push(json!({
            "degree": t,
            "pairs": pairs,
            "products": 2 * pairs,
            "failures": bad,
        }));
    }
    let json = json!({ "n": n, "max_degree": max_degree, "rows": rows_json });
    emit(&table.render(), &json, output)?;
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "{failures} one-sided products with (g - 1) escaped the restriction kernel"
        )));
    }
    Ok(())
}

pub fn poles_cmd(n: usize, max_degree: u32, output: Option<&Path>) -> Result<(), CliError> {
    let rows = match pole_report(n, max_degree) {
        Ok(rows) => rows,
        Err(e @ DiscError::ForeignPole { .. }) => {
            return Err(CliError::Verification(e.to_string()))
        }
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    let mut table = Table::new(&["left", "right", "poles"]);
    let mut rows_json = Vec::new();
    for row in &rows {
        let poles = if row.poles.is_empty() {
            "none".to_string()
        } else {
            row.poles.join(", ")
        };
        table.row(vec![row.left.to_string(), row.right.to_string(), poles]);
        rows_json.push(json!({
            "left": row.left.to_string(),
            "right": row.right.to_string(),
            "poles": row.poles,
        }));
    }
    let mut text = table.render();
    text.push_str(&format!(
        "all coefficient poles over {} basis pairs lie in the family -1/(2m), m <= {max_degree}\n",
        rows.len()
    ));
    let json = json!({ "n": n, "max_degree": max_degree, "rows": rows_json });
    emit(&text, &json, output)
}

pub fn limit_cmd(a: &Path, b: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let a: DiscElement = read_json(a)?;
    let b: DiscElement = read_json(b)?;
    let lim = semiclassical_limit(&a, &b).or_input()?;
    let classical = classical_product(&a, &b).or_input()?;
    let bracket = reduced_poisson_bracket(&a, &b).or_input()?;
    let product_ok = lim.product == classical;
    let bracket_ok = lim.bracket == bracket;
    let mut table = Table::new(&["quantity", "value", "matches classical"]);
    table.row(vec![
        "product at parameter 0".into(),
        lim.product.to_string(),
        yes_no(product_ok),
    ]);
    table.row(vec![
        "first commutator coefficient".into(),
        lim.bracket.to_string(),
        yes_no(bracket_ok),
    ]);
    let json = json!({
        "product": element_json(&lim.product),
        "bracket": element_json(&lim.bracket),
        "product_matches_pointwise": product_ok,
        "bracket_matches_poisson": bracket_ok,
    });
    emit(&table.render(), &json, output)?;
    if !(product_ok && bracket_ok) {
        return Err(CliError::Verification(
            "the parameter-zero limit disagrees with the classical geometry".into(),
        ));
    }
    Ok(())
}

fn exact_coefficient(
    a: &DiscElement,
    idx: &DiscIndex,
    hbar: f64,
) -> Result<Complex64, CliError> {
    a.coeff(idx)
        .evaluate_numeric(Complex64::new(hbar, 0.0))
        .or_input()
}

fn complex_str(z: Complex64) -> String {
    format!("({}, {})", sci(z.re), sci(z.im))
}

#[allow(clippy::too_many_arguments)]
pub fn cauchy_cmd(
    input: &Path,
    p: Option<&str>,
    q: Option<&str>,
    hbar: f64,
    rho: f64,
    precision: Precision,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let a: DiscElement = read_json(input)?;
    if !(rho > 0.0 && rho < 1.0) {
        return Err(CliError::Input(format!(
            "--rho must lie strictly between 0 and 1, got {rho}"
        )));
    }
    let slots = a.n();
    let targets: Vec<DiscIndex> = match (p, q) {
        (Some(p), Some(q)) => {
            let pi = parse_exponents(p)?;
            let qi = parse_exponents(q)?;
            if pi.dim() != slots || qi.dim() != slots {
                return Err(CliError::Input(format!(
                    "--p and --q need {slots} exponents for this element"
                )));
            }
            vec![DiscIndex::new(pi, qi)]
        }
        (None, None) => a.terms().map(|(i, _)| i.clone()).collect(),
        _ => {
            return Err(CliError::Input(
                "--p and --q must be given together".into(),
            ))
        }
    };
    if targets.is_empty() {
        return Err(CliError::Input(
            "the element has no terms; pass --p and --q for an explicit index".into(),
        ));
    }
    let opts = CauchyOptions {
        radius: rho,
        hbar,
        ..CauchyOptions::default()
    };
    let mut table = Table::new(&[
        "index",
        "recovered",
        "exact",
        "difference",
        "grid",
        "doublings",
    ]);
    let mut rows_json = Vec::new();
    let mut worst = 0.0f64;
    for idx in &targets {
        let recovered = match precision {
            Precision::Double => cauchy_coefficient::<Complex64>(&a, idx, &opts),
            Precision::Extended => cauchy_coefficient::<FxComplex>(&a, idx, &opts),
        }
        .map_err(|e| CliError::Verification(e.to_string()))?;
        let exact = exact_coefficient(&a, idx, hbar)?;
        let diff = (recovered.value - exact).norm();
        worst = worst.max(diff);
        table.row(vec![
            idx.to_string(),
            complex_str(recovered.value),
            complex_str(exact),
            sci(diff),
            recovered.grid.to_string(),
            recovered.doublings.to_string(),
        ]);
        rows_json.push(json!({
            "index": idx.to_string(),
            "recovered": [sci(recovered.value.re), sci(recovered.value.im)],
            "exact": [sci(exact.re), sci(exact.im)],
            "difference": sci(diff),
            "grid": recovered.grid,
            "doublings": recovered.doublings,
        }));
    }
    let mut text = table.render();
    text.push_str(&format!("largest difference: {}\n", sci(worst)));
    let json = json!({
        "hbar": sci(hbar),
        "rho": sci(rho),
        "tolerance": sci(RECOVERY_TOLERANCE),
        "rows": rows_json,
        "largest_difference": sci(worst),
    });
    emit(&text, &json, output)?;
    if worst > RECOVERY_TOLERANCE {
        return Err(CliError::Verification(format!(
            "contour recovery missed an exact coefficient by {}",
            sci(worst)
        )));
    }
    Ok(())
}
