//! Exact scalars: Gaussian rationals and rational functions in the
//! deformation parameter.
//!
//! Serialized form, shared by every engine and the CLI:
//!
//! ```json
//! {"num": [["1","1","0","1"], ["2","1","0","1"]], "den": [["1","1","0","1"]]}
//! ```
//!
//! A scalar is `{"num": [...], "den": [...]}` with coefficient lists ordered
//! lowest degree first; each coefficient is a quadruple of integer strings
//! `[re_num, re_den, im_num, im_den]`. The example above is 1 + 2z.

mod gaussian;
mod poly;
mod rational;

pub use gaussian::GaussianRational;
pub use poly::Poly;
pub use rational::{pochhammer, pole_set, PoleSet, Scalar, POLE_TOLERANCE};

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors from exact scalar arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
}

fn rational_parts(r: &BigRational) -> (String, String) {
    (r.numer().to_string(), r.denom().to_string())
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s).map_err(|e| format!("bad integer string {s:?}: {e}"))
}

fn parse_rational(num: &str, den: &str) -> Result<BigRational, String> {
    let d = parse_bigint(den)?;
    if d.is_zero() {
        return Err(format!("zero denominator in {num}/{den}"));
    }
    Ok(BigRational::new(parse_bigint(num)?, d))
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (rp, rq) = rational_parts(&self.re);
        let (ip, iq) = rational_parts(&self.im);
        [rp, rq, ip, iq].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let quad = <[String; 4]>::deserialize(deserializer)?;
        let re = parse_rational(&quad[0], &quad[1]).map_err(D::Error::custom)?;
        let im = parse_rational(&quad[2], &quad[3]).map_err(D::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: Vec<GaussianRational>,
    den: Vec<GaussianRational>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            num: self.numer().coeffs().to_vec(),
            den: self.denom().coeffs().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let num = Poly::from_coeffs(repr.num);
        let den = Poly::from_coeffs(repr.den);
        Scalar::new(num, den).map_err(|_| D::Error::custom("zero denominator polynomial"))
    }
}
