//! Rational functions in one indeterminate over Q(i), in canonical form.
//!
//! Canonical means gcd(num, den) = 1 and the denominator is monic, so
//! structural equality is mathematical equality. Every arithmetic operation
//! re-canonicalizes. The indeterminate is the deformation parameter (written
//! `z` by the Weyl and Gutt engines, `hbar` by the disc engine).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

use super::gaussian::GaussianRational;
use super::poly::Poly;
use super::ArithmeticError;

/// Tolerance below which a floating denominator value counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// The scalar field: rational functions num/den with den monic, gcd = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// Canonicalize num/den. Errors if den = 0.
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.inv().unwrap();
            Scalar {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: Poly::constant(GaussianRational::from_int(n)),
            den: Poly::one(),
        }
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::from_gaussian(GaussianRational::from_rational(r))
    }

    /// p/q as a constant scalar.
    pub fn from_frac(p: i64, q: i64) -> Self {
        Scalar::from_gaussian(GaussianRational::from_parts(p, q, 0, 1))
    }

    /// The deformation parameter itself.
    pub fn param() -> Self {
        Scalar {
            num: Poly::param(),
            den: Poly::one(),
        }
    }

    /// c * t^k.
    pub fn param_pow(c: GaussianRational, k: usize) -> Self {
        Scalar {
            num: Poly::monomial(c, k),
            den: Poly::one(),
        }
    }

    pub fn from_poly(num: Poly) -> Self {
        Scalar {
            num,
            den: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the scalar is a polynomial in the parameter (den = 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Scalar, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: usize) -> Scalar {
        Scalar::normalized(self.num.pow(e), self.den.pow(e))
    }

    /// Exact evaluation at a Gaussian rational point; pole detection is exact.
    pub fn eval(&self, x: &GaussianRational) -> Result<GaussianRational, ArithmeticError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ArithmeticError::PoleAtPoint);
        }
        Ok(&self.num.eval(x) / &d)
    }

    /// Floating evaluation; a denominator within `POLE_TOLERANCE` of zero is
    /// reported as a pole.
    pub fn evaluate_numeric(&self, x: Complex64) -> Result<Complex64, ArithmeticError> {
        let d = self.den.eval_complex(x);
        if d.norm() <= POLE_TOLERANCE {
            return Err(ArithmeticError::PoleAtPoint);
        }
        Ok(self.num.eval_complex(x) / d)
    }

    pub fn display_with(&self, param: &str) -> String {
        if self.den.is_one() {
            self.num.display_with(param)
        } else {
            format!(
                "({})/({})",
                self.num.display_with(param),
                self.den.display_with(param)
            )
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("z"))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: &self.num + &rhs.num,
                den: Poly::one(),
            };
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::normalized(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: &self.num * &rhs.num,
                den: Poly::one(),
            };
        }
        // Cross-reduce before multiplying to keep the gcd arguments small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.divrem(&g1).0 };
        let d2 = if g1.is_one() { rhs.den.clone() } else { rhs.den.divrem(&g1).0 };
        let n2 = if g2.is_one() { rhs.num.clone() } else { rhs.num.divrem(&g2).0 };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.divrem(&g2).0 };
        Scalar::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Rising factorial (s)_m = s (s+1) ... (s+m-1), with (s)_0 = 1.
pub fn pochhammer(s: &Scalar, m: usize) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..m {
        let shifted = s + &Scalar::from_int(j as i64);
        acc = &acc * &shifted;
    }
    acc
}

/// Exact pole locations of a scalar among the family -1/(2m), plus whatever
/// is left over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleSet {
    /// (m, multiplicity) for each denominator root at -1/(2m), ascending in m.
    pub poles: Vec<(u32, usize)>,
    /// Multiplicity of a denominator root at 0.
    pub zero_multiplicity: usize,
    /// Degree of the denominator factor whose roots are not of either form.
    pub cofactor_degree: usize,
}

impl PoleSet {
    /// True when every pole is some -1/(2m) with m <= max_m and the
    /// denominator does not vanish at 0.
    pub fn is_confined(&self, max_m: u32) -> bool {
        self.zero_multiplicity == 0
            && self.cofactor_degree == 0
            && self.poles.iter().all(|&(m, _)| m <= max_m)
    }

    /// Pole positions as exact fractions, e.g. "-1/2", repeated per
    /// multiplicity.
    pub fn pole_strings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for &(m, mult) in &self.poles {
            for _ in 0..mult {
                out.push(format!("-1/{}", 2 * m));
            }
        }
        out
    }
}

/// Factor the denominator over the candidate roots -1/(2m).
///
/// Candidates run over m = 1..=max(64, deg den); a cancellation can leave a
/// single high-m linear factor in a low-degree denominator, so the candidate
/// range is deliberately wider than the degree. Each hit is divided out to
/// full multiplicity; the remaining cofactor degree is reported so a caller
/// can tell whether any root escaped the family.
pub fn pole_set(s: &Scalar) -> PoleSet {
    let den = s.denom();
    let mut rest = den.clone();
    let mut poles = Vec::new();
    let deg = den.degree().unwrap_or(0) as u32;
    for m in 1..=deg.max(64) {
        if rest.is_constant() {
            break;
        }
        let root = GaussianRational::from_parts(-1, 2 * m as i64, 0, 1);
        let mut mult = 0;
        while !rest.is_constant() && rest.eval(&root).is_zero() {
            // Divide by (t + 1/(2m)).
            let factor = Poly::from_coeffs(vec![
                GaussianRational::from_parts(1, 2 * m as i64, 0, 1),
                GaussianRational::one(),
            ]);
            let (q, r) = rest.divrem(&factor);
            debug_assert!(r.is_zero());
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            poles.push((m, mult));
        }
    }
    let mut zero_multiplicity = 0;
    while !rest.is_constant() && rest.coeff(0).is_zero() {
        let (q, _) = rest.divrem(&Poly::param());
        rest = q;
        zero_multiplicity += 1;
    }
    PoleSet {
        poles,
        zero_multiplicity,
        cofactor_degree: rest.degree().unwrap_or(0),
    }
}
