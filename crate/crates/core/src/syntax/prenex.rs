//! Prenex views and BS-class shape classification.
//!
//! Input must already be syntactically prenex. Quantifier-shift rules are
//! never applied here: they are unsound in general Gödel logics, where for
//! example `A ⊃ ∃x B(x)` and `∃x (A ⊃ B(x))` can differ when the supremum
//! is not attained.

use std::fmt;

use thiserror::Error;

use super::ast::{Formula, Quantifier};

/// A prenex formula split into its quantifier prefix and quantifier-free
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrenexFormula {
    /// Outermost quantifier first; variables are pairwise distinct.
    pub prefix: Vec<(Quantifier, String)>,
    /// Quantifier-free body.
    pub matrix: Formula,
}

impl PrenexFormula {
    /// Reassembles the quantified formula, outermost quantifier first.
    pub fn to_formula(&self) -> Formula {
        let mut f = self.matrix.clone();
        for (q, v) in self.prefix.iter().rev() {
            f = Formula::quantify(*q, v.clone(), f);
        }
        f
    }

    /// The prefix quantifier string, e.g. `[Forall, Forall, Exists]`.
    pub fn prefix_kinds(&self) -> Vec<Quantifier> {
        self.prefix.iter().map(|(q, _)| *q).collect()
    }
}

/// Shape of a prenex prefix relative to the two BS-class readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsShape {
    /// `∀*∃*` with both blocks nonempty; decidable for validity.
    ValidityShape,
    /// `∃*∀*` with both blocks nonempty; decidable for 1-satisfiability.
    SatShape,
    /// At most one quantifier kind (`∀*`-only, `∃*`-only, or empty); fits
    /// both readings.
    Both,
    /// More than one quantifier alternation; outside the BS class.
    Neither,
}

impl fmt::Display for BsShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BsShape::ValidityShape => "a forall*exists* prefix",
            BsShape::SatShape => "an exists*forall* prefix",
            BsShape::Both => "a single-kind prefix",
            BsShape::Neither => "a prefix outside the forall*exists*/exists*forall* class",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrenexError {
    #[error("formula is not prenex: a quantifier occurs under a connective")]
    NotPrenex,
    #[error("prefix variable {0} is bound twice")]
    DuplicateVariable(String),
}

/// Splits an already-prenex formula into prefix and matrix.
///
/// No quantifier shifting is performed; a quantifier under a connective is
/// an error.
pub fn to_prenex_view(f: &Formula) -> Result<PrenexFormula, PrenexError> {
    let mut prefix: Vec<(Quantifier, String)> = Vec::new();
    let mut rest = f;
    while let Formula::Forall(v, body) | Formula::Exists(v, body) = rest {
        if prefix.iter().any(|(_, p)| p == v) {
            return Err(PrenexError::DuplicateVariable(v.clone()));
        }
        let q = match rest {
            Formula::Forall(..) => Quantifier::Forall,
            _ => Quantifier::Exists,
        };
        prefix.push((q, v.clone()));
        rest = body;
    }
    if rest.has_quantifier() {
        return Err(PrenexError::NotPrenex);
    }
    Ok(PrenexFormula {
        prefix,
        matrix: rest.clone(),
    })
}

/// Classifies the prefix quantifier string.
///
/// A pure function of the prefix: the matrix never influences the shape.
pub fn classify_bs(p: &PrenexFormula) -> BsShape {
    let mut blocks: Vec<Quantifier> = Vec::new();
    for (q, _) in &p.prefix {
        if blocks.last() != Some(q) {
            blocks.push(*q);
        }
    }
    match blocks.as_slice() {
        [] | [_] => BsShape::Both,
        [Quantifier::Forall, Quantifier::Exists] => BsShape::ValidityShape,
        [Quantifier::Exists, Quantifier::Forall] => BsShape::SatShape,
        _ => BsShape::Neither,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn prenex(text: &str) -> PrenexFormula {
        to_prenex_view(&parse(text).unwrap().formula).unwrap()
    }

    #[test]
    fn splits_prefix_and_matrix() {
        let p = prenex("forall x. exists y. (P(x) -> P(y))");
        assert_eq!(
            p.prefix_kinds(),
            vec![Quantifier::Forall, Quantifier::Exists]
        );
        assert_eq!(p.prefix[0].1, "x");
        assert_eq!(p.prefix[1].1, "y");
        assert!(!p.matrix.has_quantifier());
        assert_eq!(p.to_formula(), parse("forall x. exists y. (P(x) -> P(y))").unwrap().formula);
    }

    #[test]
    fn rejects_quantifier_under_connective() {
        let f = parse("P(c) & (forall x. P(x))").unwrap().formula;
        assert_eq!(to_prenex_view(&f), Err(PrenexError::NotPrenex));
    }

    #[test]
    fn quantifier_free_formula_has_empty_prefix() {
        let p = prenex("A -> B | C");
        assert!(p.prefix.is_empty());
        assert_eq!(p.to_formula(), p.matrix);
    }

    #[test]
    fn classifies_prefix_shapes() {
        assert_eq!(
            classify_bs(&prenex("forall x. forall y. exists z. R(x, y, z)")),
            BsShape::ValidityShape
        );
        assert_eq!(
            classify_bs(&prenex("exists x. forall y. R(x, y)")),
            BsShape::SatShape
        );
        assert_eq!(
            classify_bs(&prenex("forall x. exists y. forall z. R(x, y, z)")),
            BsShape::Neither
        );
        assert_eq!(classify_bs(&prenex("forall x. P(x)")), BsShape::Both);
        assert_eq!(
            classify_bs(&prenex("exists x. exists y. R(x, y)")),
            BsShape::Both
        );
        assert_eq!(classify_bs(&prenex("A -> B")), BsShape::Both);
    }
}
