use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hyperfield::{RealTropVal, Sign};

/// A signed subset of a ground set of at most 64 elements, stored as two
/// disjoint bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    plus: u64,
    minus: u64,
    len: usize,
}

pub const MAX_SIGN_VECTOR_LEN: usize = 64;

fn full(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl SignVector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_SIGN_VECTOR_LEN, "sign vectors hold at most 64 entries");
        SignVector { plus: 0, minus: 0, len }
    }

    pub fn from_masks(plus: u64, minus: u64, len: usize) -> Self {
        assert!(plus & minus == 0, "positive and negative parts must be disjoint");
        assert!((plus | minus) & !full(len) == 0, "mask exceeds length");
        SignVector { plus, minus, len }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut v = SignVector::zero(signs.len());
        for (i, s) in signs.iter().enumerate() {
            v.set(i, *s);
        }
        v
    }

    pub fn of_real_tropical(v: &[RealTropVal]) -> Self {
        SignVector::from_signs(&v.iter().map(RealTropVal::sign).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Sign {
        if self.plus & (1 << i) != 0 {
            Sign::Plus
        } else if self.minus & (1 << i) != 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, i: usize, s: Sign) {
        assert!(i < self.len);
        let bit = 1u64 << i;
        self.plus &= !bit;
        self.minus &= !bit;
        match s {
            Sign::Plus => self.plus |= bit,
            Sign::Minus => self.minus |= bit,
            Sign::Zero => {}
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn plus_mask(&self) -> u64 {
        self.plus
    }

    pub fn minus_mask(&self) -> u64 {
        self.minus
    }

    pub fn support(&self) -> u64 {
        self.plus | self.minus
    }

    pub fn zero_set(&self) -> u64 {
        full(self.len) & !self.support()
    }

    pub fn support_size(&self) -> u32 {
        self.support().count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    pub fn neg(&self) -> Self {
        SignVector {
            plus: self.minus,
            minus: self.plus,
            len: self.len,
        }
    }

    /// `(X ∘ Y)(e) = X(e)` if `X(e) ≠ 0`, else `Y(e)`.
    pub fn compose(&self, other: &Self) -> Self {
        let free = !self.support();
        SignVector {
            plus: self.plus | (other.plus & free),
            minus: self.minus | (other.minus & free),
            len: self.len,
        }
    }

    /// `S(X, Y) = {e : X(e) = -Y(e) ≠ 0}`.
    pub fn separation(&self, other: &Self) -> u64 {
        (self.plus & other.minus) | (self.minus & other.plus)
    }

    /// Conformal order: `X ≤ Y` iff `Y` agrees with `X` on the support of `X`.
    pub fn conforms_to(&self, other: &Self) -> bool {
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    /// Restriction to the coordinates in `mask` (others set to zero).
    pub fn masked(&self, mask: u64) -> Self {
        SignVector {
            plus: self.plus & mask,
            minus: self.minus & mask,
            len: self.len,
        }
    }

    /// Deterministic order: by support size, then by the string form.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.support_size()
            .cmp(&other.support_size())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let signs = s.trim().chars().map(Sign::from_char).collect::<Result<Vec<_>>>()?;
        if signs.len() > MAX_SIGN_VECTOR_LEN {
            return Err(Error::Invalid("sign vectors hold at most 64 entries".into()));
        }
        Ok(SignVector::from_signs(&signs))
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn composition_and_order() {
        assert_eq!(sv("0+-0").compose(&sv("-++0")), sv("-+-0"));
        assert!(sv("0+00").conforms_to(&sv("-+00")));
        assert!(!sv("0+00").conforms_to(&sv("0-00")));
        assert_eq!(sv("+-0+").separation(&sv("-+0+")), 0b0011);
        assert_eq!(sv("+-0").neg(), sv("-+0"));
        assert_eq!(sv("0+-").zero_set(), 0b001);
        assert_eq!(sv("0+-").to_string(), "0+-");
        assert!("0+x".parse::<SignVector>().is_err());
    }

    #[test]
    fn json() {
        let v = sv("+0-");
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "\"+0-\"");
        assert_eq!(serde_json::from_str::<SignVector>(&s).unwrap(), v);
    }
}
