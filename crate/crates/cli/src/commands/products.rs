//! The three product commands, order expansion, seminorm measurement, and
//! randomized associativity checking.

use std::fmt::Display;
use std::path::Path;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use starprod::disc::{reduced_star, DiscElement};
use starprod::gutt::PbwEngine;
use starprod::rng::SplitMix64;
use starprod::scalar::GaussianRational;
use starprod::weyl::{
    expand_orders, seminorm_pr, seminorm_pr_sup, weyl_star, BilinearForm, SeminormSpec,
    SymElement,
};

use crate::commands::StarKind;
use crate::support::{
    element_json, emit, load_lie, parse_rational, parse_rational_list, random_disc_element,
    random_form, random_sym_element, read_json, seminorm_strings, CliError, OrInput, Table,
};

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Table for a single product with the optional comparison against an
/// expected element; the JSON twin is the bare product element so star
/// outputs feed straight back into the other commands. The bool is false
/// when the comparison fails.
fn render_star<E>(
    a: &E,
    b: &E,
    product: &E,
    expected: Option<&E>,
) -> (String, serde_json::Value, bool)
where
    E: Display + Serialize + PartialEq,
{
    let mut table = Table::new(&["part", "value"]);
    table.row(vec!["a".into(), a.to_string()]);
    table.row(vec!["b".into(), b.to_string()]);
    table.row(vec!["a * b".into(), product.to_string()]);
    let matches = expected.map(|e| e == product);
    if let Some(m) = matches {
        table.row(vec!["matches expected".into(), yes_no(m)]);
    }
    (table.render(), element_json(product), matches != Some(false))
}

fn finish_star(
    rendered: (String, serde_json::Value, bool),
    output: Option<&Path>,
) -> Result<(), CliError> {
    let (table, json, ok) = rendered;
    emit(&table, &json, output)?;
    if !ok {
        return Err(CliError::Verification(
            "product does not match the expected element".into(),
        ));
    }
    Ok(())
}

pub fn weyl_star_cmd(
    lambda: &Path,
    a: &Path,
    b: &Path,
    dim: Option<usize>,
    expect: Option<&Path>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let lambda: BilinearForm = read_json(lambda)?;
    let a: SymElement = read_json(a)?;
    let b: SymElement = read_json(b)?;
    if let Some(d) = dim {
        if d != lambda.dim() {
            return Err(CliError::Input(format!(
                "--dim {d} does not match the coefficient matrix dimension {}",
                lambda.dim()
            )));
        }
    }
    let expected: Option<SymElement> = expect.map(read_json).transpose()?;
    let product = weyl_star(&lambda, &a, &b).or_input()?;
    finish_star(render_star(&a, &b, &product, expected.as_ref()), output)
}

pub fn gutt_star_cmd(
    lie_spec: &str,
    a: &Path,
    b: &Path,
    expect: Option<&Path>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let a: SymElement = read_json(a)?;
    let b: SymElement = read_json(b)?;
    let expected: Option<SymElement> = expect.map(read_json).transpose()?;
    let lie = load_lie(lie_spec, a.dim())?;
    let mut engine = PbwEngine::new(lie);
    let product = engine.gutt_star(&a, &b).or_input()?;
    finish_star(render_star(&a, &b, &product, expected.as_ref()), output)
}

pub fn disc_star_cmd(
    a: &Path,
    b: &Path,
    n: Option<usize>,
    expect: Option<&Path>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let a: DiscElement = read_json(a)?;
    let b: DiscElement = read_json(b)?;
    if let Some(nv) = n {
        if nv != a.n() {
            return Err(CliError::Input(format!(
                "--n {nv} does not match the element parameter count {}",
                a.n()
            )));
        }
    }
    let expected: Option<DiscElement> = expect.map(read_json).transpose()?;
    let product = reduced_star(&a, &b).or_input()?;
    finish_star(render_star(&a, &b, &product, expected.as_ref()), output)
}

pub fn seminorm_cmd(
    input: &Path,
    r_text: &str,
    weights: Option<&str>,
    param: Option<&str>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut a: SymElement = read_json(input)?;
    if let Some(p) = param {
        let v = GaussianRational::new(parse_rational(p)?, BigRational::from_integer(0.into()));
        a = a.evaluate_param(&v).or_input()?;
    }
    let r = parse_rational(r_text)?;
    let spec = match weights {
        Some(w) => SeminormSpec::new(parse_rational_list(w)?, r.clone()).or_input()?,
        None => SeminormSpec::uniform(a.dim(), BigRational::one(), r.clone()).or_input()?,
    };
    let total = seminorm_pr(&spec, &a).or_input()?;
    let sup = seminorm_pr_sup(&spec, &a).or_input()?;
    let (total_exact, total_dec) = seminorm_strings(&total);
    let (sup_exact, sup_dec) = seminorm_strings(&sup);
    let mut table = Table::new(&["seminorm", "value", "decimal"]);
    table.row(vec!["sum over degrees".into(), total_exact.clone(), total_dec.clone()]);
    table.row(vec!["sup over degrees".into(), sup_exact.clone(), sup_dec.clone()]);
    let json = json!({
        "element": element_json(&a),
        "R": r.to_string(),
        "weights": spec.weights().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "sum": {"value": total_exact, "decimal": total_dec},
        "sup": {"value": sup_exact, "decimal": sup_dec},
    });
    emit(&table.render(), &json, output)
}

pub fn orders_cmd(input: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let a: SymElement = read_json(input)?;
    let orders = expand_orders(&a).or_input()?;
    let mut table = Table::new(&["order", "terms", "element"]);
    for (r, e) in orders.iter().enumerate() {
        table.row(vec![
            r.to_string(),
            e.terms().count().to_string(),
            e.to_string(),
        ]);
    }
    let json = json!({
        "element": element_json(&a),
        "orders": orders.iter().map(element_json).collect::<Vec<_>>(),
    });
    emit(&table.render(), &json, output)
}

#[allow(clippy::too_many_arguments)]
pub fn assoc_check_cmd(
    kind: StarKind,
    dim: usize,
    lie_spec: &str,
    n: usize,
    triples: u32,
    seed: u64,
    max_degree: u32,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut rng = SplitMix64::new(seed);
    let mut failures = 0u32;
    let mut table = Table::new(&["trial", "status"]);
    let mut record = |table: &mut Table, t: u32, ok: bool| {
        if !ok {
            failures += 1;
        }
        table.row(vec![t.to_string(), if ok { "pass" } else { "fail" }.into()]);
    };
    match kind {
        StarKind::Weyl => {
            for t in 0..triples {
                let lambda = random_form(&mut rng, dim);
                let a = random_sym_element(&mut rng, dim, max_degree, 3);
                let b = random_sym_element(&mut rng, dim, max_degree, 3);
                let c = random_sym_element(&mut rng, dim, max_degree, 3);
                let ab = weyl_star(&lambda, &a, &b).or_input()?;
                let bc = weyl_star(&lambda, &b, &c).or_input()?;
                let left = weyl_star(&lambda, &ab, &c).or_input()?;
                let right = weyl_star(&lambda, &a, &bc).or_input()?;
                record(&mut table, t, left == right);
            }
        }
        StarKind::Gutt => {
            let lie = load_lie(lie_spec, dim)?;
            let d = lie.dim();
            let mut engine = PbwEngine::new(lie);
            for t in 0..triples {
                let a = random_sym_element(&mut rng, d, max_degree, 3);
                let b = random_sym_element(&mut rng, d, max_degree, 3);
                let c = random_sym_element(&mut rng, d, max_degree, 3);
                let ab = engine.gutt_star(&a, &b).or_input()?;
                let bc = engine.gutt_star(&b, &c).or_input()?;
                let left = engine.gutt_star(&ab, &c).or_input()?;
                let right = engine.gutt_star(&a, &bc).or_input()?;
                record(&mut table, t, left == right);
            }
        }
        StarKind::Disc => {
            for t in 0..triples {
                let a = random_disc_element(&mut rng, n, max_degree, 2);
                let b = random_disc_element(&mut rng, n, max_degree, 2);
                let c = random_disc_element(&mut rng, n, max_degree, 2);
                let ab = reduced_star(&a, &b).or_input()?;
                let bc = reduced_star(&b, &c).or_input()?;
                let left = reduced_star(&ab, &c).or_input()?;
                let right = reduced_star(&a, &bc).or_input()?;
                record(&mut table, t, left == right);
            }
        }
    }
    let mut text = table.render();
    text.push_str(&format!(
        "{} of {triples} associativity checks passed\n",
        triples - failures
    ));
    let json = json!({
        "kind": kind.name(),
        "triples": triples,
        "seed": seed,
        "max_degree": max_degree,
        "failures": failures,
    });
    emit(&text, &json, output)?;
    if failures > 0 {
        return Err(CliError::Verification(format!(
            "{failures} of {triples} associativity checks failed"
        )));
    }
    Ok(())
}
