//! Truth values, Gödel grids, finite interpretations, the many-valued
//! evaluator, the gluing transformation, and exhaustive enumeration.
//!
//! Everything here is exact and order-driven: which sentences evaluate
//! to 1 depends only on the relative order of atom values, so finite
//! equally spaced grids of rationals faithfully represent every
//! truth-value set the decision procedures need to distinguish.

pub mod enumerate;
pub mod grid;
pub mod interp;
pub mod logic;
pub mod value;

pub use enumerate::{enumerate_interpretations, interpretation_count, InterpretationIter};
pub use grid::{Grid, GridError};
pub use interp::{
    check_certificate, AtomEntry, EvalError, GlueError, Interpretation, InterpError,
};
pub use logic::{LogicId, LogicParseError};
pub use value::{TruthValue, ValueError};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Which question a query asks: validity (value 1 under every
/// interpretation) or 1-satisfiability (value 1 under some
/// interpretation). The two are not dual in Gödel logics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Validity,
    Sat1,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown mode `{0}`, expected `validity` or `1sat`")]
pub struct ModeParseError(pub String);

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Validity => f.write_str("validity"),
            Mode::Sat1 => f.write_str("1sat"),
        }
    }
}

impl FromStr for Mode {
    type Err = ModeParseError;

    fn from_str(s: &str) -> Result<Mode, ModeParseError> {
        match s {
            "validity" => Ok(Mode::Validity),
            "1sat" | "sat" => Ok(Mode::Sat1),
            _ => Err(ModeParseError(s.to_owned())),
        }
    }
}
