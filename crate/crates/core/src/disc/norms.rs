//! Weighted coefficient norms for disc elements and their lifts.
//!
//! For a reduced element, the norm at radius rho and parameter value h0 is
//! sum |a_{P,Q}(h0)| rho^{|P|+|Q|}. Upstairs the same sum carries an extra
//! sqrt((|P|+|Q|)!) per term, matching the R = 1/2 seminorm of the
//! constant-form engine under the generator embedding.

use num_complex::Complex64;

use super::cn::CnPolynomial;
use super::element::DiscElement;
use super::DiscError;

fn modulus(c: Complex64) -> f64 {
    c.norm()
}

/// sum |a_{P,Q}(h0)| rho^{|P|+|Q|} over the support.
pub fn norm_disc(a: &DiscElement, rho: f64, hbar0: f64) -> Result<f64, DiscError> {
    assert!(rho > 0.0, "radius must be positive");
    let h = Complex64::new(hbar0, 0.0);
    let mut acc = 0.0;
    for (idx, c) in a.terms() {
        acc += modulus(c.evaluate_numeric(h)?) * rho.powi(idx.degree() as i32);
    }
    Ok(acc)
}

/// sum sqrt((|P|+|Q|)!) |a_{P,Q}(h0)| rho^{|P|+|Q|} over the support.
pub fn norm_cn(a: &CnPolynomial, rho: f64, hbar0: f64) -> Result<f64, DiscError> {
    assert!(rho > 0.0, "radius must be positive");
    let h = Complex64::new(hbar0, 0.0);
    let mut acc = 0.0;
    for ((p, q), c) in a.terms() {
        let degree = p.total() + q.total();
        let mut fact = 1.0f64;
        for k in 2..=degree as u64 {
            fact *= k as f64;
        }
        acc += fact.sqrt() * modulus(c.evaluate_numeric(h)?) * rho.powi(degree as i32);
    }
    Ok(acc)
}
