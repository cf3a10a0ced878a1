use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

/// A binary numeral for a natural number: `0`, or a bit string starting
/// with `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatCode(pub(crate) BigUint);

impl NatCode {
    pub fn zero() -> Self {
        NatCode(BigUint::zero())
    }

    pub fn from_u64(v: u64) -> Self {
        NatCode(BigUint::from(v))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `⌈log₂(v+1)⌉`, i.e. the number of significant bits.
    pub fn bit_len(&self) -> u64 {
        self.0.bits()
    }

    /// Parses a binary numeral without leading zeros.
    pub fn from_binary(bits: &str) -> Option<Self> {
        let ok = match bits.as_bytes() {
            [] => false,
            [b'0'] => true,
            [b'1', rest @ ..] => rest.iter().all(|b| matches!(b, b'0' | b'1')),
            _ => false,
        };
        if !ok {
            return None;
        }
        BigUint::parse_bytes(bits.as_bytes(), 2).map(NatCode)
    }

    pub fn to_binary(&self) -> String {
        self.0.to_str_radix(2)
    }
}

impl From<BigUint> for NatCode {
    fn from(v: BigUint) -> Self {
        NatCode(v)
    }
}

impl fmt::Display for NatCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_numerals() {
        assert_eq!(NatCode::from_binary("111").unwrap(), NatCode::from_u64(7));
        assert_eq!(NatCode::from_binary("0").unwrap(), NatCode::zero());
        assert!(NatCode::from_binary("011").is_none());
        assert!(NatCode::from_binary("").is_none());
        assert!(NatCode::from_binary("12").is_none());
        assert_eq!(NatCode::from_u64(5).to_binary(), "101");
        assert_eq!(NatCode::zero().to_binary(), "0");
    }

    #[test]
    fn bit_lengths() {
        assert_eq!(NatCode::zero().bit_len(), 0);
        assert_eq!(NatCode::from_u64(1).bit_len(), 1);
        assert_eq!(NatCode::from_u64(7).bit_len(), 3);
        assert_eq!(NatCode::from_u64(8).bit_len(), 4);
    }
}
