//! Resource caps shared by the enumeration-based procedures.
//!
//! Every exhaustive search refuses to run, with an explicit error, when its
//! total work would exceed the configured cap. Silent truncation is never an
//! option: a brute-force verdict is only trustworthy if the enumeration was
//! complete.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Work limits for interpretation enumeration and propositional search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of interpretations a single enumeration may visit.
    pub max_interpretations: u64,
    /// Maximum number of distinct atoms admitted by the exhaustive
    /// propositional procedures.
    pub max_prop_atoms: usize,
    /// Maximum number of grid assignments a propositional enumeration may
    /// visit.
    pub max_prop_assignments: u64,
    /// Maximum number of nodes the classical satisfiability search may
    /// explore.
    pub max_sat_nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_interpretations: 10_000_000,
            max_prop_atoms: 12,
            max_prop_assignments: 10_000_000,
            max_sat_nodes: 1 << 20,
        }
    }
}

impl Caps {
    /// Caps with every enumeration limit set to `cap`.
    ///
    /// The atom-count guard is left at its default; it exists to bound the
    /// exponent, not the base.
    pub fn with_global_cap(cap: u64) -> Self {
        Caps {
            max_interpretations: cap,
            max_prop_assignments: cap,
            max_sat_nodes: cap,
            ..Caps::default()
        }
    }
}

/// An exhaustive procedure refused to run because its total work would
/// exceed the configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cap exceeded in {site}: {required} units required, cap is {cap}")]
pub struct CapExceeded {
    /// Which procedure hit the cap.
    pub site: &'static str,
    /// Work the procedure would have needed (saturating).
    pub required: u128,
    /// The configured limit.
    pub cap: u64,
}
