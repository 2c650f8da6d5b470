//! Exact rational truth values.
//!
//! Everything downstream compares values with `≤` and `<`; those
//! comparisons decide implications, so they must be exact. No floating
//! point exists anywhere in this crate.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A rational number in `[0, 1]`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(Ratio<i64>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("value {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("malformed rational `{0}`, expected `p/q` or an integer")]
    Malformed(String),
}

impl TruthValue {
    /// Builds `num/den`, reduced; rejects values outside `[0, 1]`.
    pub fn new(num: i64, den: i64) -> Result<TruthValue, ValueError> {
        if den == 0 {
            return Err(ValueError::ZeroDenominator);
        }
        let r = Ratio::new(num, den);
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(ValueError::OutOfRange(format!("{num}/{den}")));
        }
        Ok(TruthValue(r))
    }

    pub fn zero() -> TruthValue {
        TruthValue(Ratio::zero())
    }

    pub fn one() -> TruthValue {
        TruthValue(Ratio::one())
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    /// Gödel implication: 1 when `self ≤ other`, otherwise `other`.
    pub fn implies(self, other: TruthValue) -> TruthValue {
        if self <= other {
            TruthValue::one()
        } else {
            other
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for TruthValue {
    type Err = ValueError;

    fn from_str(s: &str) -> Result<TruthValue, ValueError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim()
                    .parse::<i64>()
                    .map_err(|_| ValueError::Malformed(s.to_owned()))?,
                d.trim()
                    .parse::<i64>()
                    .map_err(|_| ValueError::Malformed(s.to_owned()))?,
            ),
            None => (
                s.parse::<i64>()
                    .map_err(|_| ValueError::Malformed(s.to_owned()))?,
                1,
            ),
        };
        TruthValue::new(num, den)
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<TruthValue, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let v = TruthValue::new(2, 4).unwrap();
        assert_eq!(v, TruthValue::new(1, 2).unwrap());
        assert_eq!(v.to_string(), "1/2");
    }

    #[test]
    fn rejects_out_of_range_and_zero_denominator() {
        assert!(matches!(
            TruthValue::new(3, 2),
            Err(ValueError::OutOfRange(_))
        ));
        assert!(matches!(
            TruthValue::new(-1, 2),
            Err(ValueError::OutOfRange(_))
        ));
        assert_eq!(TruthValue::new(1, 0), Err(ValueError::ZeroDenominator));
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("3/10".parse::<TruthValue>().unwrap(), TruthValue::new(3, 10).unwrap());
        assert_eq!("1".parse::<TruthValue>().unwrap(), TruthValue::one());
        assert_eq!("0".parse::<TruthValue>().unwrap(), TruthValue::zero());
        assert!("one".parse::<TruthValue>().is_err());
        assert!("1/0".parse::<TruthValue>().is_err());
    }

    #[test]
    fn implication_cases() {
        let a = TruthValue::new(3, 10).unwrap();
        let b = TruthValue::new(7, 10).unwrap();
        assert_eq!(a.implies(b), TruthValue::one());
        assert_eq!(b.implies(a), a);
        assert_eq!(a.implies(a), TruthValue::one());
    }

    #[test]
    fn ordering_is_exact() {
        let third = TruthValue::new(1, 3).unwrap();
        let point_333 = TruthValue::new(333, 1000).unwrap();
        assert!(point_333 < third);
    }

    #[test]
    fn serde_round_trip() {
        let v = TruthValue::new(1, 2).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "\"1/2\"");
        let back: TruthValue = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
