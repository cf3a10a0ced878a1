use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::Zero;

use super::{is_decimal_natural, split_sign, Coefficient, Domain, NatCode, ParseCoeffError};

/// An integer code: `ε`, or a sign followed by a binary magnitude.
/// Magnitudes below `2⁶⁴` are held inline.
#[derive(Clone, Debug, Default)]
pub enum IntCode {
    #[default]
    Empty,
    Small {
        negative: bool,
        magnitude: u64,
    },
    Signed {
        negative: bool,
        magnitude: NatCode,
    },
}

impl IntCode {
    pub fn new(negative: bool, magnitude: BigUint) -> Self {
        match u64::try_from(&magnitude) {
            Ok(m) => IntCode::Small { negative, magnitude: m },
            Err(_) => IntCode::Signed { negative, magnitude: NatCode(magnitude) },
        }
    }

    /// Builds the result of an arithmetic operation, collapsing zero to `ε`.
    fn normalized(negative: bool, magnitude: BigUint) -> Self {
        if magnitude.is_zero() {
            IntCode::Empty
        } else {
            IntCode::new(negative, magnitude)
        }
    }

    fn from_i128(v: i128) -> Self {
        let m = v.unsigned_abs();
        match u64::try_from(m) {
            Ok(0) => IntCode::Empty,
            Ok(m) => IntCode::Small { negative: v < 0, magnitude: m },
            Err(_) => IntCode::new(v < 0, BigUint::from(m)),
        }
    }

    pub fn is_empty_code(&self) -> bool {
        matches!(self, IntCode::Empty)
    }

    pub fn magnitude(&self) -> BigUint {
        match self {
            IntCode::Empty => BigUint::zero(),
            IntCode::Small { magnitude, .. } => BigUint::from(*magnitude),
            IntCode::Signed { magnitude, .. } => magnitude.0.clone(),
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            IntCode::Empty => false,
            IntCode::Small { negative, .. } | IntCode::Signed { negative, .. } => *negative,
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        let sign = if self.is_negative() { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, self.magnitude())
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        Self::normalized(v.sign() == Sign::Minus, v.magnitude().clone())
    }

    /// Parses the binary code notation, e.g. `-111` or `ε`.
    pub fn from_code_str(code: &str) -> Option<Self> {
        if code == "ε" {
            return Some(IntCode::Empty);
        }
        let (neg, bits) = match split_sign(code) {
            (Some(neg), bits) => (neg, bits),
            (None, _) => return None,
        };
        NatCode::from_binary(bits).map(|m| IntCode::new(neg, m.0))
    }

    /// The binary code notation, e.g. `-111`.
    pub fn to_code_string(&self) -> String {
        let sign = if self.is_negative() { '-' } else { '+' };
        match self {
            IntCode::Empty => "ε".to_string(),
            IntCode::Small { magnitude, .. } => format!("{sign}{magnitude:b}"),
            IntCode::Signed { magnitude, .. } => format!("{sign}{magnitude}"),
        }
    }

    fn signed_add(n1: bool, m1: &BigUint, n2: bool, m2: &BigUint) -> Self {
        if n1 == n2 {
            return Self::normalized(n1, m1 + m2);
        }
        match m1.cmp(m2) {
            Ordering::Equal => IntCode::Empty,
            Ordering::Greater => Self::normalized(n1, m1 - m2),
            Ordering::Less => Self::normalized(n2, m2 - m1),
        }
    }
}

fn signed(negative: bool, magnitude: u64) -> i128 {
    if negative {
        -(magnitude as i128)
    } else {
        magnitude as i128
    }
}

impl PartialEq for IntCode {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => match (self, other) {
                (IntCode::Small { negative: s1, magnitude: m1 }, IntCode::Small { negative: s2, magnitude: m2 }) => {
                    s1 == s2 && m1 == m2
                }
                _ => self.is_negative() == other.is_negative() && self.magnitude() == other.magnitude(),
            },
            _ => false,
        }
    }
}

impl Eq for IntCode {}

impl fmt::Display for IntCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.is_negative() {
            f.write_str("-")?;
        }
        match self {
            IntCode::Small { magnitude, .. } => write!(f, "{magnitude}"),
            IntCode::Signed { magnitude, .. } => write!(f, "{}", magnitude.0),
            IntCode::Empty => unreachable!(),
        }
    }
}

impl Coefficient for IntCode {
    const DOMAIN: Domain = Domain::Int;

    fn zero() -> Self {
        IntCode::Empty
    }

    fn is_zero(&self) -> bool {
        match self {
            IntCode::Empty => true,
            IntCode::Small { magnitude, .. } => *magnitude == 0,
            IntCode::Signed { magnitude, .. } => magnitude.is_zero(),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (IntCode::Empty, x) | (x, IntCode::Empty) => {
                if x.is_zero() {
                    IntCode::Empty
                } else {
                    x.clone()
                }
            }
            (IntCode::Small { negative: n1, magnitude: m1 }, IntCode::Small { negative: n2, magnitude: m2 }) => {
                Self::from_i128(signed(*n1, *m1) + signed(*n2, *m2))
            }
            _ => Self::signed_add(self.is_negative(), &self.magnitude(), rhs.is_negative(), &rhs.magnitude()),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        match self {
            IntCode::Empty => IntCode::Empty,
            IntCode::Small { negative, magnitude } => IntCode::Small { negative: !negative, magnitude: *magnitude },
            IntCode::Signed { negative, magnitude } => {
                IntCode::Signed { negative: !negative, magnitude: magnitude.clone() }
            }
        }
    }

    fn size(&self) -> u64 {
        match self {
            IntCode::Empty => 0,
            IntCode::Small { magnitude, .. } => (u64::BITS - magnitude.leading_zeros()) as u64 + 1,
            IntCode::Signed { magnitude, .. } => magnitude.bit_len() + 1,
        }
    }

    fn mul_nat(&self, k: u64) -> Self {
        match self {
            IntCode::Empty => IntCode::Empty,
            IntCode::Small { negative, magnitude } => {
                Self::normalized(*negative, BigUint::from(*magnitude as u128 * k as u128))
            }
            IntCode::Signed { negative, magnitude } => Self::normalized(*negative, &magnitude.0 * BigUint::from(k)),
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::from_i128(v as i128)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.to_bigint())
    }

    fn parse(text: &str) -> Result<Self, ParseCoeffError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ParseCoeffError::Empty);
        }
        if text == "0" {
            return Ok(IntCode::Empty);
        }
        let (sign, digits) = split_sign(text);
        if digits.starts_with(['+', '-', '\u{2212}']) {
            return Err(ParseCoeffError::BadSign(text.to_string()));
        }
        if !is_decimal_natural(digits) || digits == "0" {
            return Err(ParseCoeffError::Malformed(text.to_string()));
        }
        let mag =
            BigUint::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| ParseCoeffError::Malformed(text.to_string()))?;
        Ok(IntCode::new(sign.unwrap_or(false), mag))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> IntCode {
        IntCode::from_code_str(s).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(code("+101").add(&code("-11")).to_code_string(), "+10");
        assert!(matches!(IntCode::Empty.add(&IntCode::Empty), IntCode::Empty));
        let two = code("+1").add(&code("+1"));
        assert_eq!(two.to_code_string(), "+10");
        assert_eq!(two.size(), 3);
    }

    #[test]
    fn subtraction_examples() {
        assert!(code("+11").sub(&code("+11")).is_zero());
        assert!(code("+11").sub(&code("+11")).is_empty_code());
        assert_eq!(IntCode::Empty.sub(&code("+111")).to_code_string(), "-111");
        assert_eq!(code("-101").sub(&code("+1")).to_code_string(), "-110");
    }

    #[test]
    fn equality_examples() {
        assert_eq!(code("+0"), IntCode::Empty);
        assert_eq!(code("-0"), code("+0"));
        assert_ne!(code("+10"), code("-10"));
        assert_eq!(code("+101"), code("+101"));
    }

    #[test]
    fn size_examples() {
        assert_eq!(code("-111").size(), 4);
        assert_eq!(IntCode::Empty.size(), 0);
        assert_eq!(code("+10").size(), 3);
    }

    #[test]
    fn parse_and_format() {
        assert!(IntCode::parse("0").unwrap().is_empty_code());
        assert_eq!(IntCode::parse("\u{2212}7").unwrap(), IntCode::from_i64(-7));
        assert_eq!(IntCode::parse("+12").unwrap(), IntCode::from_i64(12));
        assert_eq!(IntCode::from_i64(-7).to_string(), "-7");
        assert_eq!(IntCode::Empty.to_string(), "0");
        assert_eq!(code("-0").to_string(), "0");
        for bad in ["", "007", "+0", "-0", "--3", "3.5", "1e4", "+-1"] {
            assert!(IntCode::parse(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn inline_and_big_magnitudes_agree() {
        let max = IntCode::from_i128(u64::MAX as i128);
        assert!(matches!(max, IntCode::Small { .. }));
        let over = max.add(&IntCode::from_i64(1));
        assert!(matches!(over, IntCode::Signed { .. }));
        assert_eq!(over.size(), 66);
        assert_eq!(over.to_string(), "18446744073709551616");
        assert_eq!(over.sub(&IntCode::from_i64(1)), max);
        assert!(matches!(over.sub(&IntCode::from_i64(1)), IntCode::Small { .. }));
        assert!(over.sub(&over).is_empty_code());
        assert_eq!(IntCode::parse("-18446744073709551616").unwrap(), over.neg());
        assert_eq!(max.neg().add(&max.neg()).to_rational(), BigRational::from_integer((-2 * u64::MAX as i128).into()));
        assert_eq!(max.mul_nat(3).to_bigint(), BigInt::from(3 * u64::MAX as u128));
    }

    #[test]
    fn mul_nat_scales() {
        assert_eq!(IntCode::from_i64(-3).mul_nat(4), IntCode::from_i64(-12));
        assert!(IntCode::from_i64(5).mul_nat(0).is_empty_code());
    }
}
