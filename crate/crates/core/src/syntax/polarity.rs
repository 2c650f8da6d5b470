//! Quantifier polarity and strength analysis.
//!
//! A quantifier occurrence is strong when Skolemization must eliminate it:
//! a universal in positive position or an existential in negative position.
//! The dual occurrences are weak. Implication flips the polarity of its
//! left subformula; every other connective, and both quantifiers, preserve
//! polarity.

use super::ast::{Formula, Quantifier};

/// Positive or negative position of an occurrence within the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Positive,
    Negative,
}

impl Position {
    pub fn flip(self) -> Position {
        match self {
            Position::Positive => Position::Negative,
            Position::Negative => Position::Positive,
        }
    }
}

/// Strong quantifiers are eliminated by Skolemization; weak ones remain as
/// context parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strength {
    Strong,
    Weak,
}

/// One quantifier occurrence, in preorder traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantifierSite {
    pub quantifier: Quantifier,
    pub var: String,
    pub position: Position,
    pub strength: Strength,
    /// Weak-quantified variables whose scope contains this occurrence, in
    /// outside-in order. For a strong quantifier these are exactly the
    /// arguments its Skolem term receives.
    pub enclosing_weak: Vec<String>,
}

fn strength_of(q: Quantifier, pos: Position) -> Strength {
    match (q, pos) {
        (Quantifier::Forall, Position::Positive) | (Quantifier::Exists, Position::Negative) => {
            Strength::Strong
        }
        _ => Strength::Weak,
    }
}

/// Annotates every quantifier occurrence with position, strength, and the
/// enclosing weak variables.
pub fn annotate_polarity(f: &Formula) -> Vec<QuantifierSite> {
    let mut out = Vec::new();
    let mut weak_stack = Vec::new();
    walk(f, Position::Positive, &mut weak_stack, &mut out);
    out
}

fn walk(
    f: &Formula,
    pos: Position,
    weak_stack: &mut Vec<String>,
    out: &mut Vec<QuantifierSite>,
) {
    match f {
        Formula::Atom(..) | Formula::Bottom => {}
        Formula::And(a, b) | Formula::Or(a, b) => {
            walk(a, pos, weak_stack, out);
            walk(b, pos, weak_stack, out);
        }
        Formula::Implies(a, b) => {
            walk(a, pos.flip(), weak_stack, out);
            walk(b, pos, weak_stack, out);
        }
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let q = match f {
                Formula::Forall(..) => Quantifier::Forall,
                _ => Quantifier::Exists,
            };
            let strength = strength_of(q, pos);
            out.push(QuantifierSite {
                quantifier: q,
                var: v.clone(),
                position: pos,
                strength,
                enclosing_weak: weak_stack.clone(),
            });
            if strength == Strength::Weak {
                weak_stack.push(v.clone());
                walk(body, pos, weak_stack, out);
                weak_stack.pop();
            } else {
                walk(body, pos, weak_stack, out);
            }
        }
    }
}
