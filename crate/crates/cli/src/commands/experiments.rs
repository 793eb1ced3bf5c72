//! Experiment runners: the two seminorm convergence demonstrations and the
//! deterministic instance generator.

use std::fs;
use std::path::Path;

use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use starprod::gutt::{LieStructure, PbwEngine};
use starprod::multiindex::MultiIndex;
use starprod::rng::SplitMix64;
use starprod::scalar::{GaussianRational, Scalar};
use starprod::weyl::{seminorm_pr, weyl_star, BilinearForm, SeminormSpec, SymElement};

use crate::commands::{DemoKind, GenKind};
use crate::support::{
    element_json, emit, json_bytes, random_disc_element, random_invariant, random_sym_element,
    sci, CliError, OrInput, Table,
};

pub fn convergence_demo_cmd(
    kind: DemoKind,
    max_n: Option<u32>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    match kind {
        DemoKind::Weyl => flat_demo(max_n.unwrap_or(40), output),
        DemoKind::Gutt => lie_demo(max_n.unwrap_or(30), output),
    }
}

/// Star squares of the truncated exponential in the first variable under the
/// standard symplectic form converge in the seminorm with exponent 1/2 and
/// weights 1/2: successive differences decrease monotonically.
fn flat_demo(max_n: u32, output: Option<&Path>) -> Result<(), CliError> {
    if max_n < 2 {
        return Err(CliError::Input("--max-n must be at least 2".into()));
    }
    let lambda = BilinearForm::symplectic_2d();
    let half = BigRational::new(1.into(), 2.into());
    let spec = SeminormSpec::uniform(2, half.clone(), half).or_input()?;
    let mut partial = SymElement::zero(2);
    let mut factorial = BigRational::one();
    let mut prev_product: Option<SymElement> = None;
    let mut diffs = Vec::new();
    for k in 0..=max_n {
        if k > 0 {
            factorial *= BigRational::from_integer(k.into());
        }
        partial.add_term(
            MultiIndex(vec![k, 0]),
            Scalar::from_rational(factorial.recip()),
        );
        let product = weyl_star(&lambda, &partial, &partial).or_input()?;
        if let Some(prev) = prev_product.replace(product.clone()) {
            diffs.push(seminorm_pr(&spec, &product.sub(&prev)).or_input()?.as_f64());
        }
    }
    let mut table = Table::new(&["N", "seminorm of step N - 1 -> N"]);
    let mut rows_json = Vec::new();
    for (i, d) in diffs.iter().enumerate() {
        let n = i + 1;
        table.row(vec![n.to_string(), sci(*d)]);
        rows_json.push(json!({ "n": n, "difference": sci(*d) }));
    }
    let monotone = diffs.windows(2).all(|w| w[1] < w[0]);
    let final_diff = *diffs.last().expect("max_n >= 2 yields at least two steps");
    let converged = max_n < 40 || final_diff < 1e-6;
    let mut text = String::from(
        "star squares of the truncated exponential, seminorm exponent 1/2, weights 1/2\n",
    );
    text.push_str(&table.render());
    text.push_str(&format!(
        "monotone decrease from N = 2: {}\n",
        if monotone { "yes" } else { "no" }
    ));
    let json = json!({
        "kind": "weyl",
        "max_n": max_n,
        "rows": rows_json,
        "monotone": monotone,
        "final_difference": sci(final_diff),
    });
    emit(&text, &json, output)?;
    if !monotone || !converged {
        return Err(CliError::Verification(
            "successive star squares stopped converging in the seminorm".into(),
        ));
    }
    Ok(())
}

/// Seminorm ratios for x^N * y^N over the Heisenberg structure at parameter
/// one. With exponent 1/2 and uniform weights 1/2 the product-to-factors
/// ratio grows without bound; raising the exponent to 1 and weighing the
/// factors with 3/2 instead (numerator weights 1/2) makes it decay.
fn lie_demo(max_n: u32, output: Option<&Path>) -> Result<(), CliError> {
    if max_n < 2 {
        return Err(CliError::Input("--max-n must be at least 2".into()));
    }
    let mut engine = PbwEngine::new(LieStructure::heisenberg());
    let half = BigRational::new(1.into(), 2.into());
    let spec_half = SeminormSpec::uniform(3, half.clone(), half.clone()).or_input()?;
    let spec_num = SeminormSpec::uniform(3, half, BigRational::one()).or_input()?;
    let spec_den = SeminormSpec::uniform(
        3,
        BigRational::new(3.into(), 2.into()),
        BigRational::one(),
    )
    .or_input()?;
    let mut table = Table::new(&["N", "growing ratio", "rescaled ratio"]);
    let mut rows_json = Vec::new();
    let mut growing = Vec::new();
    let mut rescaled = Vec::new();
    for n in 1..=max_n {
        let x = SymElement::monomial(3, MultiIndex(vec![n, 0, 0]), Scalar::one());
        let y = SymElement::monomial(3, MultiIndex(vec![0, n, 0]), Scalar::one());
        let star = engine
            .gutt_star(&x, &y)
            .or_input()?
            .evaluate_param(&GaussianRational::one())
            .or_input()?;
        let ratio = |top: &SeminormSpec, bottom: &SeminormSpec| -> Result<f64, CliError> {
            Ok(seminorm_pr(top, &star).or_input()?.as_f64()
                / (seminorm_pr(bottom, &x).or_input()?.as_f64()
                    * seminorm_pr(bottom, &y).or_input()?.as_f64()))
        };
        let g = ratio(&spec_half, &spec_half)?;
        let r = ratio(&spec_num, &spec_den)?;
        table.row(vec![n.to_string(), sci(g), sci(r)]);
        rows_json.push(json!({ "n": n, "growing": sci(g), "rescaled": sci(r) }));
        growing.push(g);
        rescaled.push(r);
    }
    let grows = growing.windows(2).all(|w| w[1] > w[0]);
    let decays = rescaled.windows(2).all(|w| w[1] < w[0]);
    let bounded = rescaled.iter().all(|r| *r <= 0.5);
    let mut text = String::from(
        "x^N * y^N over the Heisenberg structure at parameter 1; \
         growing: exponent 1/2, weights 1/2; \
         rescaled: exponent 1, weights 1/2 over 3/2\n",
    );
    text.push_str(&table.render());
    text.push_str(&format!(
        "growing ratio strictly increases: {}; rescaled ratio strictly decreases: {}\n",
        if grows { "yes" } else { "no" },
        if decays { "yes" } else { "no" }
    ));
    let json = json!({
        "kind": "gutt",
        "max_n": max_n,
        "rows": rows_json,
        "growing_monotone": grows,
        "rescaled_monotone": decays,
        "rescaled_bounded": bounded,
    });
    emit(&text, &json, output)?;
    if !(grows && decays && bounded) {
        return Err(CliError::Verification(
            "the seminorm ratio trajectories lost their expected monotonicity".into(),
        ));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn generate_cmd(
    kind: GenKind,
    seed: u64,
    dim: usize,
    n: usize,
    max_degree: u32,
    terms: u32,
    name: Option<&str>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut rng = SplitMix64::new(seed);
    let (label, json) = match kind {
        GenKind::SymElement => {
            if dim == 0 {
                return Err(CliError::Input("--dim must be positive".into()));
            }
            let e = random_sym_element(&mut rng, dim, max_degree, terms);
            (
                format!("element in {dim} variables, {} terms", e.terms().count()),
                element_json(&e),
            )
        }
        GenKind::LieStructure => {
            let name = name.unwrap_or("heisenberg");
            let lie = LieStructure::by_name(name, dim).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown catalog name '{name}'; use heisenberg, so3, solvable2, or abelian"
                ))
            })?;
            (
                format!("{name} structure, dimension {}", lie.dim()),
                element_json(&lie),
            )
        }
        GenKind::CnInvariant => {
            let e = random_invariant(&mut rng, n, max_degree, terms);
            (
                format!("invariant polynomial in {} + {} variables", n + 1, n + 1),
                element_json(&e),
            )
        }
        GenKind::DiscElement => {
            let e = random_disc_element(&mut rng, n, max_degree, terms);
            (
                format!("reduced element at n = {n}, {} terms", e.terms().count()),
                element_json(&e),
            )
        }
    };
    match output {
        Some(path) => {
            fs::write(path, json_bytes(&json))
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            println!("wrote {label} to {}", path.display());
        }
        None => print!("{}", json_bytes(&json)),
    }
    Ok(())
}
