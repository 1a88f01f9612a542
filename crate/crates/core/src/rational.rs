//! Exact rational scalars.
//!
//! All symbolic coefficients in this crate are arbitrary-precision rationals;
//! `num_rational::BigRational` already keeps values in lowest terms with a
//! positive denominator, which is exactly the representation we rely on for
//! exact term merging and equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Lossy conversion used exactly once per numeric evaluation site.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Renders `-3/4` as `-3/4` and `5` as `5` (no denominator when it is 1).
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders the absolute value, for sign-aware joining of terms.
pub fn render_abs(r: &Rational) -> String {
    render(&r.abs())
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

pub fn rational_zero() -> Rational {
    Rational::zero()
}
