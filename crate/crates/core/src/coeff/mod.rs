//! Exact coefficient arithmetic on sign-plus-binary codes.
//!
//! Two coefficient domains are provided: [`IntCode`] for integers and
//! [`RatCode`] for rationals stored as unreduced mixed fractions. Both
//! implement [`Coefficient`], which is the only interface the list and
//! minimization modules depend on.
//!
//! Codes are *not* canonical. Several codes may interpret to the same
//! number (`ε`, `+0` and `-0` are all zero; `-11/10/101` and `-11/100/1010`
//! are both `-3 2/5`). `PartialEq` on codes therefore compares
//! interpretations, never spelling.

mod int;
mod nat;
mod rat;

pub use int::IntCode;
pub use nat::NatCode;
pub use rat::RatCode;

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

/// The two supported coefficient domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Int,
    Rat,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Int => "int",
            Domain::Rat => "rat",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Domain {
    type Err = ParseCoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "int" => Ok(Domain::Int),
            "rat" => Ok(Domain::Rat),
            other => Err(ParseCoeffError::UnknownDomain(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseCoeffError {
    #[error("empty coefficient")]
    Empty,
    #[error("malformed numeral {0:?}")]
    Malformed(String),
    #[error("bad sign in {0:?}")]
    BadSign(String),
    #[error("numerator must be smaller than denominator in {0:?}")]
    ImproperFraction(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("unknown coefficient domain {0:?}")]
    UnknownDomain(String),
}

/// The coefficient-domain contract.
///
/// `add`/`sub` are exact on interpretations, results that are exactly zero
/// come back as the empty code, and `size` is the memory measure used by
/// all size bounds in the minimization pipeline.
pub trait Coefficient: Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static {
    const DOMAIN: Domain;

    /// The empty code `ε`.
    fn zero() -> Self;

    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;

    fn sub(&self, rhs: &Self) -> Self;

    fn neg(&self) -> Self;

    fn size(&self) -> u64;

    /// Multiplies by a natural number. Only used for evaluating counting
    /// functions, never inside the minimization pipeline.
    fn mul_nat(&self, k: u64) -> Self;

    fn from_i64(v: i64) -> Self;

    fn to_rational(&self) -> BigRational;

    /// Parses the decimal text grammar of the domain.
    fn parse(text: &str) -> Result<Self, ParseCoeffError>;
}

/// Strips a leading sign. Accepts ASCII `+`/`-` and the Unicode minus sign.
fn split_sign(text: &str) -> (Option<bool>, &str) {
    if let Some(rest) = text.strip_prefix('+') {
        (Some(false), rest)
    } else if let Some(rest) = text.strip_prefix('-') {
        (Some(true), rest)
    } else if let Some(rest) = text.strip_prefix('\u{2212}') {
        (Some(true), rest)
    } else {
        (None, text)
    }
}

/// `0 | [1-9][0-9]*`
fn is_decimal_natural(s: &str) -> bool {
    match s.as_bytes() {
        [] => false,
        [b'0'] => true,
        [first, rest @ ..] => (b'1'..=b'9').contains(first) && rest.iter().all(u8::is_ascii_digit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_naturals() {
        assert!(is_decimal_natural("0"));
        assert!(is_decimal_natural("10"));
        assert!(!is_decimal_natural("01"));
        assert!(!is_decimal_natural(""));
        assert!(!is_decimal_natural("1a"));
    }

    #[test]
    fn sign_prefixes() {
        assert_eq!(split_sign("-3"), (Some(true), "3"));
        assert_eq!(split_sign("\u{2212}3"), (Some(true), "3"));
        assert_eq!(split_sign("+3"), (Some(false), "3"));
        assert_eq!(split_sign("3"), (None, "3"));
    }

    #[test]
    fn domain_names_round_trip() {
        for d in [Domain::Int, Domain::Rat] {
            assert_eq!(d.name().parse::<Domain>().unwrap(), d);
        }
        assert!("real".parse::<Domain>().is_err());
    }
}
