use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{is_decimal_natural, split_sign, Coefficient, Domain, NatCode, ParseCoeffError};

/// A rational code: `ε`, or `sK/m/n` meaning `s·(K + m/n)` with `m < n`.
/// Fractions are never reduced.
#[derive(Clone, Debug, Default)]
pub enum RatCode {
    #[default]
    Empty,
    Mixed {
        negative: bool,
        int_part: NatCode,
        num: NatCode,
        den: NatCode,
    },
}

impl RatCode {
    /// Returns `None` unless `num < den` and `den >= 1`.
    pub fn new(negative: bool, int_part: BigUint, num: BigUint, den: BigUint) -> Option<Self> {
        if den.is_zero() || num >= den {
            return None;
        }
        Some(RatCode::Mixed { negative, int_part: NatCode(int_part), num: NatCode(num), den: NatCode(den) })
    }

    fn normalized(negative: bool, int_part: BigUint, num: BigUint, den: BigUint) -> Self {
        if int_part.is_zero() && num.is_zero() {
            RatCode::Empty
        } else {
            RatCode::Mixed { negative, int_part: NatCode(int_part), num: NatCode(num), den: NatCode(den) }
        }
    }

    pub fn is_empty_code(&self) -> bool {
        matches!(self, RatCode::Empty)
    }

    /// The stored denominator, `None` for `ε`.
    pub fn denominator(&self) -> Option<&BigUint> {
        match self {
            RatCode::Empty => None,
            RatCode::Mixed { den, .. } => Some(&den.0),
        }
    }

    /// Parses the binary code notation, e.g. `-11/10/101` or `ε`.
    pub fn from_code_str(code: &str) -> Option<Self> {
        if code == "ε" {
            return Some(RatCode::Empty);
        }
        let (neg, rest) = match split_sign(code) {
            (Some(neg), rest) => (neg, rest),
            (None, _) => return None,
        };
        let mut parts = rest.split('/');
        let k = NatCode::from_binary(parts.next()?)?;
        let m = NatCode::from_binary(parts.next()?)?;
        let n = NatCode::from_binary(parts.next()?)?;
        if parts.next().is_some() {
            return None;
        }
        RatCode::new(neg, k.0, m.0, n.0)
    }

    pub fn to_code_string(&self) -> String {
        match self {
            RatCode::Empty => "ε".to_string(),
            RatCode::Mixed { negative, int_part, num, den } => {
                format!("{}{}/{}/{}", if *negative { '-' } else { '+' }, int_part, num, den)
            }
        }
    }

    /// Storage length `|x|_Σ`: the bit lengths of `K`, `m`, `n` plus three.
    pub fn sigma_len(&self) -> u64 {
        match self {
            RatCode::Empty => 0,
            RatCode::Mixed { int_part, num, den, .. } => int_part.bit_len() + num.bit_len() + den.bit_len() + 3,
        }
    }

    pub fn parts(&self) -> Option<(bool, &BigUint, &BigUint, &BigUint)> {
        match self {
            RatCode::Empty => None,
            RatCode::Mixed { negative, int_part, num, den } => Some((*negative, &int_part.0, &num.0, &den.0)),
        }
    }

    fn add_nonempty(&self, rhs: &Self) -> Self {
        let (s1, k1, m1, n1) = self.parts().unwrap();
        let (s2, k2, m2, n2) = rhs.parts().unwrap();
        let q = n1 * n2;
        let f1 = m1 * n2;
        let f2 = m2 * n1;
        if s1 == s2 {
            let mut p = f1 + f2;
            let mut k = k1 + k2;
            if p >= q {
                p -= &q;
                k += 1u32;
            }
            return Self::normalized(s1, k, p, q);
        }
        // Opposite signs: subtract the smaller magnitude from the larger.
        // Since f < q, (K, f) compares lexicographically like the magnitude.
        let (neg, big_k, big_f, small_k, small_f) = match (k1, &f1).cmp(&(k2, &f2)) {
            Ordering::Equal => return RatCode::Empty,
            Ordering::Greater => (s1, k1, &f1, k2, &f2),
            Ordering::Less => (s2, k2, &f2, k1, &f1),
        };
        let (k, p) = if big_f >= small_f {
            (big_k - small_k, big_f - small_f)
        } else {
            (big_k - small_k - 1u32, &q - (small_f - big_f))
        };
        Self::normalized(neg, k, p, q)
    }
}

impl PartialEq for RatCode {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => {
                let (s1, k1, m1, n1) = self.parts().unwrap();
                let (s2, k2, m2, n2) = other.parts().unwrap();
                s1 == s2 && (k1 * n1 + m1) * n2 == (k2 * n2 + m2) * n1
            }
            _ => false,
        }
    }
}

impl Eq for RatCode {}

impl fmt::Display for RatCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            Some((negative, k, m, n)) if !(k.is_zero() && m.is_zero()) => {
                write!(f, "{}{}/{}/{}", if negative { '-' } else { '+' }, k, m, n)
            }
            _ => f.write_str("0"),
        }
    }
}

impl Coefficient for RatCode {
    const DOMAIN: Domain = Domain::Rat;

    fn zero() -> Self {
        RatCode::Empty
    }

    fn is_zero(&self) -> bool {
        match self.parts() {
            None => true,
            Some((_, k, m, _)) => k.is_zero() && m.is_zero(),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        match (self.is_zero(), rhs.is_zero()) {
            (true, true) => RatCode::Empty,
            (true, false) => rhs.clone(),
            (false, true) => self.clone(),
            (false, false) => self.add_nonempty(rhs),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn neg(&self) -> Self {
        match self {
            RatCode::Empty => RatCode::Empty,
            RatCode::Mixed { negative, int_part, num, den } => {
                RatCode::Mixed { negative: !negative, int_part: int_part.clone(), num: num.clone(), den: den.clone() }
            }
        }
    }

    fn size(&self) -> u64 {
        match self {
            RatCode::Empty => 0,
            RatCode::Mixed { int_part, den, .. } => int_part.bit_len() + 2 * den.bit_len() + 3,
        }
    }

    fn mul_nat(&self, k: u64) -> Self {
        match self.parts() {
            None => RatCode::Empty,
            Some((neg, ki, m, n)) => {
                let k = BigUint::from(k);
                let mk = m * &k;
                let carry = &mk / n;
                let rem = mk % n;
                Self::normalized(neg, ki * &k + carry, rem, n.clone())
            }
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::normalized(v < 0, BigUint::from(v.unsigned_abs()), BigUint::zero(), BigUint::one())
    }

    fn to_rational(&self) -> BigRational {
        match self.parts() {
            None => BigRational::zero(),
            Some((neg, k, m, n)) => {
                let sign = if neg { Sign::Minus } else { Sign::Plus };
                let numer = BigInt::from_biguint(sign, k * n + m);
                BigRational::new(numer, BigInt::from(n.clone()))
            }
        }
    }

    fn parse(text: &str) -> Result<Self, ParseCoeffError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ParseCoeffError::Empty);
        }
        if text == "0" {
            return Ok(RatCode::Empty);
        }
        let (sign, rest) = split_sign(text);
        let neg = sign.ok_or_else(|| ParseCoeffError::BadSign(text.to_string()))?;
        if rest.starts_with(['+', '-', '\u{2212}']) {
            return Err(ParseCoeffError::BadSign(text.to_string()));
        }
        let fields: Vec<&str> = rest.split('/').collect();
        if fields.len() != 3 || !fields.iter().all(|f| is_decimal_natural(f)) {
            return Err(ParseCoeffError::Malformed(text.to_string()));
        }
        let nat = |s: &str| BigUint::parse_bytes(s.as_bytes(), 10).unwrap();
        let (k, m, n) = (nat(fields[0]), nat(fields[1]), nat(fields[2]));
        if n.is_zero() {
            return Err(ParseCoeffError::ZeroDenominator(text.to_string()));
        }
        if m >= n {
            return Err(ParseCoeffError::ImproperFraction(text.to_string()));
        }
        Ok(RatCode::Mixed { negative: neg, int_part: NatCode(k), num: NatCode(m), den: NatCode(n) })
    }
}
