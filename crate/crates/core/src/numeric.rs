//! Extended-precision complex arithmetic for contour sums.
//!
//! Values are fixed-point: an integer numerator over an implicit 2^SCALE
//! denominator, giving about 57 decimal digits of headroom. This is enough
//! to push trapezoid-rule contour integrals well past what f64 can resolve
//! while keeping every operation (including the square roots used for the
//! roots-of-unity table) deterministic.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Binary fraction bits carried by every fixed-point value.
pub const SCALE: u32 = 192;

/// Fixed-point real number: value = v / 2^SCALE.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fx {
    v: BigInt,
}

impl Fx {
    pub fn zero() -> Self {
        Fx { v: BigInt::zero() }
    }

    pub fn one() -> Self {
        Fx {
            v: BigInt::from(1) << SCALE,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Fx {
            v: BigInt::from(n) << SCALE,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        // Split into mantissa and exponent so the conversion is exact.
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        if exp == 0 && frac == 0 {
            return Fx::zero();
        }
        // Normal numbers: value = (1.frac) * 2^(exp - 1023).
        let mantissa = BigInt::from(frac | (1u64 << 52));
        let shift = exp - 1023 - 52 + SCALE as i64;
        let v = if shift >= 0 {
            mantissa << shift
        } else {
            mantissa >> (-shift)
        };
        Fx { v: v * sign }
    }

    pub fn from_ratio(num: i64, den: u64) -> Self {
        let scaled = BigInt::from(num) << SCALE;
        Fx {
            v: div_round(&scaled, &BigInt::from(den)),
        }
    }

    pub fn from_big_ratio(r: &num_rational::BigRational) -> Self {
        let scaled = r.numer() << SCALE;
        Fx {
            v: div_round(&scaled, r.denom()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Exact conversion of the leading bits; fine for reporting.
        let num = self.v.to_f64().unwrap_or(f64::NAN);
        num / 2f64.powi(SCALE as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn neg(&self) -> Fx {
        Fx { v: -&self.v }
    }

    pub fn abs(&self) -> Fx {
        Fx { v: self.v.abs() }
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx { v: &self.v + &o.v }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx { v: &self.v - &o.v }
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx {
            v: shift_round(&(&self.v * &o.v), SCALE),
        }
    }

    pub fn div(&self, o: &Fx) -> Fx {
        assert!(!o.v.is_zero(), "fixed-point division by zero");
        Fx {
            v: div_round(&(&self.v << SCALE), &o.v),
        }
    }

    /// Square root of a nonnegative value, correct to the fixed-point grid.
    pub fn sqrt(&self) -> Fx {
        assert!(!self.v.is_negative(), "fixed-point sqrt of negative value");
        // sqrt(v / 2^S) = sqrt(v * 2^S) / 2^S.
        Fx {
            v: (&self.v << SCALE).sqrt(),
        }
    }
}

/// Round-to-nearest right shift.
fn shift_round(v: &BigInt, bits: u32) -> BigInt {
    let half = BigInt::from(1) << (bits - 1);
    if v.is_negative() {
        -((half - v) >> bits)
    } else {
        (v + half) >> bits
    }
}

/// Round-to-nearest integer division.
fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(num, den);
    let two_r = BigInt::from(2) * r.abs();
    if two_r >= den.abs() {
        if (num.is_negative()) ^ (den.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Fixed-point complex number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FxComplex {
    pub re: Fx,
    pub im: Fx,
}

impl FxComplex {
    pub fn zero() -> Self {
        FxComplex {
            re: Fx::zero(),
            im: Fx::zero(),
        }
    }

    pub fn one() -> Self {
        FxComplex {
            re: Fx::one(),
            im: Fx::zero(),
        }
    }

    pub fn i() -> Self {
        FxComplex {
            re: Fx::zero(),
            im: Fx::one(),
        }
    }

    pub fn new(re: Fx, im: Fx) -> Self {
        FxComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        FxComplex {
            re: Fx::from_f64(re),
            im: Fx::from_f64(im),
        }
    }

    pub fn to_complex64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(&self, o: &FxComplex) -> FxComplex {
        FxComplex {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &FxComplex) -> FxComplex {
        FxComplex {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn mul(&self, o: &FxComplex) -> FxComplex {
        FxComplex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn conj(&self) -> FxComplex {
        FxComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn norm_sqr(&self) -> Fx {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn inv(&self) -> FxComplex {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "fixed-point complex inverse of zero");
        FxComplex {
            re: self.re.div(&n),
            im: self.im.neg().div(&n),
        }
    }

    pub fn div(&self, o: &FxComplex) -> FxComplex {
        self.mul(&o.inv())
    }

    pub fn scale(&self, s: &Fx) -> FxComplex {
        FxComplex {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    /// Principal square root (nonnegative real part).
    pub fn sqrt(&self) -> FxComplex {
        let r = self.norm_sqr().sqrt();
        // re(sqrt) = sqrt((r + re)/2), im(sqrt) = sign(im) sqrt((r - re)/2).
        let half = Fx::from_ratio(1, 2);
        let re_part = r.add(&self.re).mul(&half).sqrt();
        let im_mag = r.sub(&self.re).mul(&half).sqrt();
        let im_part = if self.im.v.is_negative() {
            im_mag.neg()
        } else {
            im_mag
        };
        FxComplex {
            re: re_part,
            im: im_part,
        }
    }

    pub fn powu(&self, mut k: u64) -> FxComplex {
        let mut base = self.clone();
        let mut acc = FxComplex::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

/// Primitive n-th root of unity e^{2 pi i / n} for n a power of two, built
/// by repeated half-angle square roots from i (so no transcendental input).
pub fn root_of_unity_pow2(n: u64) -> FxComplex {
    assert!(n.is_power_of_two() && n >= 1, "order must be a power of two");
    match n {
        1 => FxComplex::one(),
        2 => FxComplex {
            re: Fx::from_int(-1),
            im: Fx::zero(),
        },
        4 => FxComplex::i(),
        _ => {
            let mut w = FxComplex::i();
            let mut order = 4u64;
            while order < n {
                w = w.sqrt();
                order *= 2;
            }
            w
        }
    }
}

/// All n-th roots of unity in order w^0, w^1, ..., w^{n-1}.
pub fn roots_of_unity_pow2(n: u64) -> Vec<FxComplex> {
    let w = root_of_unity_pow2(n);
    let mut out = Vec::with_capacity(n as usize);
    let mut acc = FxComplex::one();
    for _ in 0..n {
        out.push(acc.clone());
        acc = acc.mul(&w);
    }
    out
}
