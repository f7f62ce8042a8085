//! Exact arithmetic: big rationals, linear forms in the parameter variables,
//! integer polynomials (cyclotomic, Poincaré) and truncated graded series.
//!
//! No floating point is used anywhere. Rationals are always reduced with a
//! positive denominator; the text form is `p/q`, with `/q` omitted when the
//! denominator is 1.

mod linear_form;
mod poly;
mod series;

pub use linear_form::{integer_difference, LinearForm, Var};
pub use poly::{cyclotomic, cyclotomic_multiplicity, poincare_polynomial, IntPoly};
pub use series::GradedSeries;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number: arbitrary-precision, always reduced, positive
/// denominator. Backed by [`num_rational::BigRational`].
pub type Rational = num_rational::BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse the text form `p/q` (or `p`). Rejects a zero denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a rational (expected `p` or `p/q`)"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (text, None),
    };
    let numer: BigInt = num.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(q) => q.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("`{text}` has denominator zero")));
    }
    Ok(Rational::new(numer, denom))
}

/// If `r` is an integer, return it.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

/// True if `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True if `r` is a strictly positive integer.
pub fn is_positive_integer(r: &Rational) -> bool {
    r.denom().is_one() && r.numer().is_positive()
}
