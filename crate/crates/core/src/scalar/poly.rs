//! Dense univariate polynomials over the Gaussian rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so two
//! polynomials are equal iff their coefficient vectors are. These are the
//! numerators and denominators of [`super::Scalar`]; the indeterminate is the
//! deformation parameter of whichever engine is using the scalar.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::gaussian::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c * t^k where t is the indeterminate.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The indeterminate itself.
    pub fn param() -> Self {
        Poly::monomial(GaussianRational::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<GaussianRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with deg 0 = None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    let inv = lc.inv().expect("leading coefficient is nonzero");
                    self.scale(&inv)
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            if k == 0 {
                return self.clone();
            }
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut q = vec![GaussianRational::zero(); self.coeffs.len() - dd];
        while let Some(n) = rem.degree() {
            if n < dd {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let k = n - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = &factor * dc;
                rem.coeffs[k + j] = &rem.coeffs[k + j] - &sub;
            }
            rem.trim();
            q[k] = factor;
        }
        (Poly::from_coeffs(q), rem)
    }

    /// Monic gcd via the Euclidean algorithm. gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            // Re-normalize each step to keep coefficient growth in check.
            let b_monic = b.monic();
            let (_, r) = a.divrem(&b_monic);
            a = b_monic;
            b = r;
        }
        a.monic()
    }

    /// Exact evaluation at a Gaussian rational point.
    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Floating evaluation at a complex point (Horner).
    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_complex64();
        }
        acc
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Render with the given name for the indeterminate.
    pub fn display_with(&self, param: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let needs_parens = cs.contains('+') || (cs.contains('-') && !cs.starts_with('-'));
            let cs = if needs_parens { format!("({cs})") } else { cs };
            let part = match k {
                0 => cs,
                1 if c.is_one() => param.to_string(),
                1 => format!("{cs}*{param}"),
                _ if c.is_one() => format!("{param}^{k}"),
                _ => format!("{cs}*{param}^{k}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Constant fast paths cover most scalar traffic in the engines.
        if self.is_constant() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_constant() {
            return self.scale(&rhs.coeffs[0]);
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&n| c(n)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = Poly::from_coeffs(vec![c(1), c(0), c(0)]);
        assert_eq!(a.degree(), Some(0));
        assert_eq!(a, Poly::one());
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[2, 0, -3, 1, 4]);
        let d = p(&[1, 2, 1]);
        let (q, r) = a.divrem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap() < d.degree().unwrap());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (t+1)(t+2) and (t+1)(t+3) share exactly t+1.
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[2, 2]);
        let b = p(&[4, 4]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn eval_matches_horner() {
        let a = p(&[1, -2, 3]);
        let x = GaussianRational::from_parts(1, 2, 0, 1);
        // 1 - 2*(1/2) + 3*(1/4) = 3/4
        assert_eq!(a.eval(&x), GaussianRational::from_parts(3, 4, 0, 1));
    }
}
