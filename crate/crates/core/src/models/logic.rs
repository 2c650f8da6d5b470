//! Naming the target logic of a query.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Which Gödel logic a query targets.
///
/// `Finite(m)` is the m-valued logic. `Infinite` stands for every
/// infinite-valued Gödel logic at once: on the fragments this crate
/// decides, all of them give the same verdicts, so one identifier covers
/// the lot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogicId {
    Finite(u32),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown logic `{0}`, expected `gm:<m>` with m >= 2, `ginf`, `g01`, `gup`, or `gdown`")]
pub struct LogicParseError(pub String);

impl LogicId {
    /// True when `name` is an alias for a specific infinite-valued logic
    /// rather than the canonical `ginf`.
    pub fn is_infinite_alias(name: &str) -> bool {
        matches!(name, "g01" | "gup" | "gdown")
    }
}

impl FromStr for LogicId {
    type Err = LogicParseError;

    fn from_str(s: &str) -> Result<LogicId, LogicParseError> {
        match s {
            "ginf" | "g01" | "gup" | "gdown" => Ok(LogicId::Infinite),
            _ => match s.strip_prefix("gm:") {
                Some(m) => match m.parse::<u32>() {
                    Ok(m) if m >= 2 => Ok(LogicId::Finite(m)),
                    _ => Err(LogicParseError(s.to_owned())),
                },
                None => Err(LogicParseError(s.to_owned())),
            },
        }
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicId::Finite(m) => write!(f, "gm:{m}"),
            LogicId::Infinite => f.write_str("ginf"),
        }
    }
}

impl Serialize for LogicId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LogicId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<LogicId, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_names() {
        assert_eq!("gm:3".parse::<LogicId>().unwrap(), LogicId::Finite(3));
        assert_eq!("ginf".parse::<LogicId>().unwrap(), LogicId::Infinite);
    }

    #[test]
    fn infinite_aliases_normalize() {
        for alias in ["g01", "gup", "gdown"] {
            assert_eq!(alias.parse::<LogicId>().unwrap(), LogicId::Infinite);
            assert!(LogicId::is_infinite_alias(alias));
        }
        assert!(!LogicId::is_infinite_alias("ginf"));
    }

    #[test]
    fn rejects_degenerate_and_unknown() {
        assert!("gm:1".parse::<LogicId>().is_err());
        assert!("gm:0".parse::<LogicId>().is_err());
        assert!("gm:".parse::<LogicId>().is_err());
        assert!("classical".parse::<LogicId>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for l in [LogicId::Finite(2), LogicId::Finite(17), LogicId::Infinite] {
            assert_eq!(l.to_string().parse::<LogicId>().unwrap(), l);
        }
    }
}
