//! Formula printing.
//!
//! Output parses back to the structurally identical AST for any well-formed
//! function-free formula (round-trip law). Because negation and verum are
//! definitional sugar rather than constructors, `A ⊃ ⊥` prints as
//! `A -> bot`, never as `~A`, and verum prints as `bot -> bot`.

use std::fmt;

use super::ast::{Formula, Term};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => f.write_str(c),
            Term::App(fun, args) => {
                f.write_str(fun)?;
                f.write_str("(")?;
                write_args(f, args)?;
                f.write_str(")")
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[Term]) -> fmt::Result {
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

// Binding strengths, loose to tight. Implications and quantifiers share the
// loosest level; `or` then `and` bind tighter; atoms need no parentheses.
const LEVEL_IMPL: u8 = 0;
const LEVEL_OR: u8 = 1;
const LEVEL_AND: u8 = 2;
const LEVEL_ATOM: u8 = 3;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Atom(..) | Formula::Bottom => LEVEL_ATOM,
        Formula::And(..) => LEVEL_AND,
        Formula::Or(..) => LEVEL_OR,
        Formula::Implies(..) | Formula::Forall(..) | Formula::Exists(..) => LEVEL_IMPL,
    }
}

fn write_prec(f: &Formula, out: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
    let parens = level(f) < min;
    if parens {
        out.write_str("(")?;
    }
    match f {
        Formula::Atom(p, args) => {
            out.write_str(p)?;
            if !args.is_empty() {
                out.write_str("(")?;
                write_args(out, args)?;
                out.write_str(")")?;
            }
        }
        Formula::Bottom => out.write_str("bot")?,
        Formula::And(a, b) => {
            write_prec(a, out, LEVEL_AND)?;
            out.write_str(" & ")?;
            write_prec(b, out, LEVEL_ATOM)?;
        }
        Formula::Or(a, b) => {
            write_prec(a, out, LEVEL_OR)?;
            out.write_str(" | ")?;
            write_prec(b, out, LEVEL_AND)?;
        }
        Formula::Implies(a, b) => {
            write_prec(a, out, LEVEL_OR)?;
            out.write_str(" -> ")?;
            // The grammar admits a quantifier to the right of `->` only in
            // parentheses: the right-hand production is `impl`, not `formula`.
            if matches!(**b, Formula::Forall(..) | Formula::Exists(..)) {
                out.write_str("(")?;
                write_prec(b, out, LEVEL_IMPL)?;
                out.write_str(")")?;
            } else {
                write_prec(b, out, LEVEL_IMPL)?;
            }
        }
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let word = if matches!(f, Formula::Forall(..)) {
                "forall "
            } else {
                "exists "
            };
            out.write_str(word)?;
            out.write_str(v)?;
            out.write_str(". ")?;
            // Quantifiers extend maximally right, so a bare body would
            // round-trip too; explicit parentheses keep the scope readable.
            if matches!(
                **body,
                Formula::Atom(..) | Formula::Bottom | Formula::Forall(..) | Formula::Exists(..)
            ) {
                write_prec(body, out, LEVEL_IMPL)?;
            } else {
                out.write_str("(")?;
                write_prec(body, out, LEVEL_IMPL)?;
                out.write_str(")")?;
            }
        }
    }
    if parens {
        out.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, f, LEVEL_IMPL)
    }
}

#[cfg(test)]
mod tests {
    use crate::syntax::ast::{Formula, Term};
    use crate::syntax::parse;

    #[test]
    fn negation_prints_as_implies_bottom() {
        let f = Formula::not(Formula::atom("P", vec![Term::constant("c")]));
        assert_eq!(f.to_string(), "P(c) -> bot");
    }

    #[test]
    fn quantifier_body_is_parenthesized() {
        let f = Formula::forall(
            "x",
            Formula::and(Formula::atom("P", vec![Term::var("x")]), Formula::prop("Q")),
        );
        assert_eq!(f.to_string(), "forall x. (P(x) & Q)");
    }

    #[test]
    fn implication_prints_right_associatively() {
        let chain = Formula::implies(
            Formula::prop("A"),
            Formula::implies(Formula::prop("B"), Formula::prop("C")),
        );
        assert_eq!(chain.to_string(), "A -> B -> C");
        let nested_left = Formula::implies(
            Formula::implies(Formula::prop("A"), Formula::prop("B")),
            Formula::prop("C"),
        );
        assert_eq!(nested_left.to_string(), "(A -> B) -> C");
    }

    #[test]
    fn connective_precedence_drops_redundant_parens() {
        let f = Formula::or(
            Formula::prop("A"),
            Formula::and(Formula::prop("B"), Formula::prop("C")),
        );
        assert_eq!(f.to_string(), "A | B & C");
        let g = Formula::and(
            Formula::or(Formula::prop("A"), Formula::prop("B")),
            Formula::prop("C"),
        );
        assert_eq!(g.to_string(), "(A | B) & C");
    }

    #[test]
    fn quantifier_under_connective_is_parenthesized() {
        let f = Formula::implies(
            Formula::forall("x", Formula::atom("P", vec![Term::var("x")])),
            Formula::prop("B"),
        );
        assert_eq!(f.to_string(), "(forall x. P(x)) -> B");
        let g = Formula::implies(
            Formula::prop("B"),
            Formula::exists("y", Formula::atom("P", vec![Term::var("y")])),
        );
        assert_eq!(g.to_string(), "B -> (exists y. P(y))");
    }

    #[test]
    fn round_trip_on_mixed_formulas() {
        let texts = [
            "forall x. exists y. (P(x) -> P(y))",
            "forall x. (P(x) | (P(x) -> bot))",
            "(top -> A1) | (A1 -> bot)",
            "A -> B -> C",
            "(A -> B) -> C",
            "A | B & C -> bot",
            "exists x. forall y. (R(x, y) & (Q | bot))",
            "~~A",
            "P(c) & P(d) & Q(c, d)",
        ];
        for text in texts {
            let parsed = parse(text).unwrap();
            let reparsed = parse(&parsed.formula.to_string()).unwrap();
            assert_eq!(parsed.formula, reparsed.formula, "round-trip of {text}");
        }
    }
}
