//! Finite ordered Gödel sets.
//!
//! A grid represents a truth-value set up to order isomorphism. Which
//! formulas evaluate to 1 depends only on the relative order of atom
//! values, so the equally spaced grid is used as the canonical
//! representative of every m-element Gödel set.

use std::fmt;

use thiserror::Error;

use super::value::TruthValue;

/// A strictly increasing list of truth values from 0 to 1, length ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    points: Vec<TruthValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid needs at least 2 points, got {0}")]
    TooFew(usize),
    #[error("grid points must be strictly increasing")]
    NotIncreasing,
    #[error("grid must start at 0/1 and end at 1/1")]
    BadEndpoints,
}

impl Grid {
    pub fn new(points: Vec<TruthValue>) -> Result<Grid, GridError> {
        if points.len() < 2 {
            return Err(GridError::TooFew(points.len()));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GridError::NotIncreasing);
        }
        if !points[0].is_zero() || !points[points.len() - 1].is_one() {
            return Err(GridError::BadEndpoints);
        }
        Ok(Grid { points })
    }

    /// The canonical grid `{0, 1/(n-1), …, 1}` with `n ≥ 2` points.
    pub fn equally_spaced(n: usize) -> Grid {
        assert!(n >= 2, "a grid needs at least 2 points");
        let den = (n - 1) as i64;
        let points = (0..n as i64)
            .map(|k| TruthValue::new(k, den).expect("k/(n-1) is in [0,1]"))
            .collect();
        Grid { points }
    }

    /// The m-point grid standing for the truth-value set of the m-valued
    /// logic.
    pub fn for_finite_logic(m: u32) -> Grid {
        Grid::equally_spaced(m as usize)
    }

    pub fn points(&self) -> &[TruthValue] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: TruthValue) -> bool {
        self.points.binary_search(&v).is_ok()
    }

    /// Index of `v` in the grid, if present.
    pub fn position(&self, v: TruthValue) -> Option<usize> {
        self.points.binary_search(&v).ok()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
