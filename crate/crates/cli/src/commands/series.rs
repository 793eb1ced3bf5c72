//! Free Lie series commands: the combined-exponent series, the coefficient
//! mass bound per degree, and the exponential check on nilpotent structures.

use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use starprod::gutt::{bch_truncated, exp_gutt_bch_check, goldberg_rows, PbwEngine};
use starprod::scalar::GaussianRational;

use crate::support::{
    element_json, emit, load_lie, parse_rational_list, CliError, OrInput, Table,
};

pub fn bch_cmd(max_n: u32, output: Option<&Path>) -> Result<(), CliError> {
    let series = bch_truncated(max_n).or_input()?;
    let mut per_degree: BTreeMap<u32, (usize, BigRational)> = BTreeMap::new();
    let mut terms = Vec::new();
    for (w, c) in series.terms() {
        let entry = per_degree
            .entry(w.len())
            .or_insert_with(|| (0, BigRational::zero()));
        entry.0 += 1;
        entry.1 += c.abs();
        terms.push(json!({ "word": w.to_string(), "coefficient": c.to_string() }));
    }
    let mut table = Table::new(&["degree", "words", "sum of |coefficients|"]);
    let mut degrees = Vec::new();
    for (n, (count, mass)) in &per_degree {
        table.row(vec![n.to_string(), count.to_string(), mass.to_string()]);
        degrees.push(json!({
            "degree": n,
            "words": count,
            "abs_sum": mass.to_string(),
        }));
    }
    let json = json!({ "max_n": max_n, "degrees": degrees, "terms": terms });
    emit(&table.render(), &json, output)
}

pub fn goldberg_cmd(max_n: u32, output: Option<&Path>) -> Result<(), CliError> {
    let rows = goldberg_rows(max_n).or_input()?;
    let mut table = Table::new(&["n", "sum", "bound", "status"]);
    let mut rows_json = Vec::new();
    let mut failures = 0u32;
    for row in &rows {
        let ok = row.sum_abs <= row.bound;
        if !ok {
            failures += 1;
        }
        table.row(vec![
            row.n.to_string(),
            row.sum_abs.to_string(),
            row.bound.to_string(),
            if ok { "pass" } else { "fail" }.into(),
        ]);
        rows_json.push(json!({
            "n": row.n,
            "sum": row.sum_abs.to_string(),
            "bound": row.bound.to_string(),
            "attained": row.attained,
            "pass": ok,
        }));
    }
    let json = json!({ "max_n": max_n, "rows": rows_json });
    emit(&table.render(), &json, output)?;
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "coefficient mass exceeded 2/n at {failures} degrees"
        )));
    }
    Ok(())
}

pub fn exp_bch_check_cmd(
    lie_spec: &str,
    xi_text: &str,
    eta_text: &str,
    max_degree: u32,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let to_vector = |text: &str| -> Result<Vec<GaussianRational>, CliError> {
        Ok(parse_rational_list(text)?
            .into_iter()
            .map(|r| GaussianRational::new(r, BigRational::from_integer(0.into())))
            .collect())
    };
    let xi = to_vector(xi_text)?;
    let eta = to_vector(eta_text)?;
    if xi.len() != eta.len() {
        return Err(CliError::Input(format!(
            "--xi has {} components but --eta has {}",
            xi.len(),
            eta.len()
        )));
    }
    let lie = load_lie(lie_spec, xi.len())?;
    if lie.dim() != xi.len() {
        return Err(CliError::Input(format!(
            "vectors have {} components but the structure has dimension {}",
            xi.len(),
            lie.dim()
        )));
    }
    let mut engine = PbwEngine::new(lie);
    let report = exp_gutt_bch_check(&mut engine, &xi, &eta, max_degree).or_input()?;
    let mut table = Table::new(&["quantity", "value"]);
    table.row(vec!["compared through total weight".into(), report.truncation.to_string()]);
    table.row(vec!["series degrees used".into(), report.bch_orders_used.to_string()]);
    table.row(vec![
        "exp(xi) * exp(eta) = exp(combined)".into(),
        if report.matches { "yes" } else { "no" }.into(),
    ]);
    table.row(vec!["difference".into(), report.difference.to_string()]);
    let json = json!({
        "truncation": report.truncation,
        "series_degrees_used": report.bch_orders_used,
        "matches": report.matches,
        "difference": element_json(&report.difference),
    });
    emit(&table.render(), &json, output)?;
    if !report.matches {
        return Err(CliError::Verification(
            "exponential product does not match the combined exponent".into(),
        ));
    }
    Ok(())
}
