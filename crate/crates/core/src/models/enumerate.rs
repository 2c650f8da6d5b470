//! Exhaustive interpretation enumeration.
//!
//! The oracle behind every brute-force cross-check: all interpretations of
//! a signature over a fixed domain size and grid, in a deterministic
//! lexicographic order. Refuses oversized jobs up front; a brute-force
//! verdict is only meaningful when the enumeration ran to completion.

use crate::limits::{CapExceeded, Caps};
use crate::syntax::Signature;

use super::grid::Grid;
use super::interp::Interpretation;
use super::value::TruthValue;

/// Total number of interpretations of `sig` over `domain_size` elements
/// and the given grid, saturating at `u128::MAX`.
pub fn interpretation_count(sig: &Signature, domain_size: usize, grid: &Grid) -> u128 {
    let n = domain_size as u128;
    let g = grid.len() as u128;
    let mut count: u128 = 1;
    for _ in sig.constants() {
        count = count.saturating_mul(n);
    }
    for (_, arity) in sig.predicates() {
        let slots = n.saturating_pow(arity as u32);
        let exp = u32::try_from(slots).unwrap_or(u32::MAX);
        count = count.saturating_mul(g.saturating_pow(exp));
    }
    count
}

/// Enumerates every interpretation of `sig` with the given domain size and
/// grid.
///
/// Order is lexicographic over the digit string (constant assignments in
/// signature order, then atom values predicate by predicate in row-major
/// tuple order), last digit fastest, all digits ascending. The first
/// interpretation maps every constant to `d0` and every atom to 0.
pub fn enumerate_interpretations(
    sig: &Signature,
    domain_size: usize,
    grid: &Grid,
    caps: &Caps,
) -> Result<InterpretationIter, CapExceeded> {
    assert!(domain_size >= 1, "domains are nonempty");
    let required = interpretation_count(sig, domain_size, grid);
    if required > caps.max_interpretations as u128 {
        return Err(CapExceeded {
            site: "enumerate_interpretations",
            required,
            cap: caps.max_interpretations,
        });
    }
    let domain: Vec<String> = (0..domain_size).map(|i| format!("d{i}")).collect();
    let constants: Vec<String> = sig.constants().map(str::to_owned).collect();
    let preds: Vec<(String, usize, usize)> = sig
        .predicates()
        .map(|(name, arity)| (name.to_owned(), arity, domain_size.pow(arity as u32)))
        .collect();
    let slot_count: usize = preds.iter().map(|&(_, _, s)| s).sum();
    let digits = vec![0usize; constants.len() + slot_count];
    Ok(InterpretationIter {
        domain,
        constants,
        preds,
        grid_points: grid.points().to_vec(),
        domain_size,
        digits,
        started: false,
        exhausted: false,
    })
}

#[derive(Debug)]
pub struct InterpretationIter {
    domain: Vec<String>,
    constants: Vec<String>,
    preds: Vec<(String, usize, usize)>,
    grid_points: Vec<TruthValue>,
    domain_size: usize,
    digits: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl InterpretationIter {
    fn radix(&self, digit: usize) -> usize {
        if digit < self.constants.len() {
            self.domain_size
        } else {
            self.grid_points.len()
        }
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radix(i) {
                return true;
            }
            self.digits[i] = 0;
        }
        // A fully constant-and-predicate-free signature still denotes one
        // interpretation (the bare domain), hence the empty-digits case.
        false
    }

    fn build(&self) -> Interpretation {
        let mut interp =
            Interpretation::new(self.domain.clone()).expect("generated domain is valid");
        for (i, name) in self.constants.iter().enumerate() {
            interp
                .set_constant_index(name, self.digits[i])
                .expect("digit < domain size");
        }
        let mut offset = self.constants.len();
        for (name, arity, slots) in &self.preds {
            let values: Vec<TruthValue> = self.digits[offset..offset + slots]
                .iter()
                .map(|&d| self.grid_points[d])
                .collect();
            interp
                .add_predicate(name, *arity, values)
                .expect("table sized by construction");
            offset += slots;
        }
        interp
    }
}

impl Iterator for InterpretationIter {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.build());
        }
        if self.advance() {
            Some(self.build())
        } else {
            self.exhausted = true;
            None
        }
    }
}
