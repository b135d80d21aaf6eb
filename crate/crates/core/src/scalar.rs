//! Exact rational scalars. Everything in this crate is computed over
//! arbitrary-precision rationals; there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn s(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn sr(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn is_zero(x: &Scalar) -> bool {
    x.is_zero()
}

/// Renders a scalar as `num` and `den` decimal strings (den always positive).
pub fn to_decimal_strings(x: &Scalar) -> (String, String) {
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    (n.to_string(), d.to_string())
}
