//! Exact scalars and sparse three-variable Laurent polynomials.
//!
//! Everything here is generic over the coefficient type through
//! `num-traits`; the crate root pins the concrete aliases
//! ([`crate::Rational`], [`crate::Weight`]).

mod laurent;
pub mod linalg;

pub use laurent::{Coefficient, Exponents, LaurentPolynomial};

use num_traits::{Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot substitute zero into a negative exponent of {var}")]
    ZeroToNegativePower { var: char },
    #[error("malformed rational `{text}`")]
    BadRational { text: String },
    #[error("malformed polynomial JSON: {reason}")]
    BadPolynomialJson { reason: String },
    #[error("linear system is singular beyond the expected rank")]
    SingularSystem,
}

/// Parses `p/q` (or a bare integer `p`) into a canonical rational.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    Rational::from_str(text.trim()).map_err(|_| AlgebraError::BadRational {
        text: text.to_string(),
    })
}

/// Canonical `num/den` form, denominator always spelled out (`3/1`, `-2/5`).
pub fn rational_to_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Requires a strictly positive rational, for rate parameters.
pub fn require_positive(name: &str, x: &Rational) -> Result<(), crate::asep::AsepError> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(crate::asep::AsepError::NonPositiveRate {
            name: name.to_string(),
            value: rational_to_string(x),
        })
    }
}

/// Requires a non-negative rational.
pub fn require_nonnegative(name: &str, x: &Rational) -> Result<(), crate::asep::AsepError> {
    if x.is_negative() {
        Err(crate::asep::AsepError::NegativeRate {
            name: name.to_string(),
            value: rational_to_string(x),
        })
    } else {
        Ok(())
    }
}

/// `n choose k` as an exact big integer.
pub fn binomial(n: u64, k: u64) -> crate::Int {
    if k > n {
        return crate::Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = crate::Int::from(1u32);
    for i in 0..k {
        acc = acc * crate::Int::from(n - i) / crate::Int::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_and_print_round_trip() {
        let x = parse_rational("5/6").unwrap();
        assert_eq!(rational_to_string(&x), "5/6");
        let y = parse_rational("-4/6").unwrap();
        assert_eq!(rational_to_string(&y), "-2/3");
        let z = parse_rational("7").unwrap();
        assert_eq!(rational_to_string(&z), "7/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), crate::Int::one());
        assert_eq!(binomial(7, 3), crate::Int::from(35u32));
        assert_eq!(binomial(3, 5), crate::Int::zero());
    }
}
