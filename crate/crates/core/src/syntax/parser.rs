//! Recursive-descent parser for the formula grammar.
//!
//! Precedence, low to high: `->` (right-associative) < `|` (left) < `&`
//! (left) < `~` (prefix) < atoms and parentheses. Quantifiers extend as far
//! right as possible and are only admitted at formula level, so a quantifier
//! under a connective must be parenthesized.
//!
//! Identifier roles are inferred, not declared: an identifier bound by an
//! enclosing quantifier is a variable, any other identifier in term position
//! is a constant, and an identifier in formula position is a predicate
//! (0-ary when applied to no arguments). Each name gets exactly one role;
//! reuse across roles and rebinding of an already-bound variable are
//! rejected.

use std::collections::BTreeSet;

use thiserror::Error;

use super::ast::{Formula, Signature, SignatureError, Term};
use super::lexer::{tokenize, LexError, Spanned, Token};

/// A parsed sentence together with its inferred signature.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed {
    pub formula: Formula,
    pub signature: Signature,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("syntax error at offset {offset}: found {found}, expected {expected}")]
    Unexpected {
        offset: usize,
        found: String,
        expected: String,
    },
    #[error("syntax error: unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: String },
    #[error("variable {0} shadows an enclosing quantifier over the same name")]
    Shadowing(String),
    #[error("name {name} is used both as a bound variable and as a {other_role}")]
    RoleClash { name: String, other_role: &'static str },
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// Parses a sentence and infers its signature.
///
/// Free identifiers in term position are read as constants, so every
/// successfully parsed formula is a sentence.
pub fn parse(input: &str) -> Result<Parsed, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        signature: Signature::new(),
        bound: Vec::new(),
        binders_seen: BTreeSet::new(),
    };
    let formula = p.formula()?;
    if let Some(tok) = p.peek() {
        return Err(ParseError::Unexpected {
            offset: tok.offset,
            found: tok.token.describe(),
            expected: "end of input".into(),
        });
    }
    p.check_roles()?;
    Ok(Parsed {
        formula,
        signature: p.signature,
    })
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    signature: Signature,
    bound: Vec<String>,
    binders_seen: BTreeSet<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, expected: &str) -> Result<(), ParseError> {
        match self.advance() {
            Some(s) if s.token == *want => Ok(()),
            Some(s) => Err(ParseError::Unexpected {
                offset: s.offset,
                found: s.token.describe(),
                expected: expected.into(),
            }),
            None => Err(ParseError::UnexpectedEnd {
                expected: expected.into(),
            }),
        }
    }

    fn expect_ident(&mut self, expected: &str) -> Result<String, ParseError> {
        match self.advance() {
            Some(Spanned {
                token: Token::Ident(name),
                ..
            }) => Ok(name),
            Some(s) => Err(ParseError::Unexpected {
                offset: s.offset,
                found: s.token.describe(),
                expected: expected.into(),
            }),
            None => Err(ParseError::UnexpectedEnd {
                expected: expected.into(),
            }),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek().map(|s| s.token.clone()) {
            Some(Token::Forall) | Some(Token::Exists) => {
                let quant = self.advance().unwrap().token;
                let var = self.expect_ident("a variable name")?;
                if self.bound.contains(&var) {
                    return Err(ParseError::Shadowing(var));
                }
                self.expect(&Token::Dot, "`.` after the quantified variable")?;
                self.bound.push(var.clone());
                self.binders_seen.insert(var.clone());
                let body = self.formula()?;
                self.bound.pop();
                Ok(match quant {
                    Token::Forall => Formula::forall(var, body),
                    _ => Formula::exists(var, body),
                })
            }
            _ => self.implication(),
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let left = self.disjunction()?;
        if matches!(self.peek(), Some(s) if s.token == Token::Arrow) {
            self.advance();
            let right = self.implication()?;
            Ok(Formula::implies(left, right))
        } else {
            Ok(left)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunction()?;
        while matches!(self.peek(), Some(s) if s.token == Token::Or) {
            self.advance();
            let rhs = self.conjunction()?;
            f = Formula::or(f, rhs);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while matches!(self.peek(), Some(s) if s.token == Token::And) {
            self.advance();
            let rhs = self.unary()?;
            f = Formula::and(f, rhs);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if matches!(self.peek(), Some(s) if s.token == Token::Tilde) {
            self.advance();
            let inner = self.unary()?;
            Ok(Formula::not(inner))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.advance() {
            Some(Spanned {
                token: Token::Bot, ..
            }) => Ok(Formula::Bottom),
            Some(Spanned {
                token: Token::Top, ..
            }) => Ok(Formula::top()),
            Some(Spanned {
                token: Token::LParen,
                ..
            }) => {
                let f = self.formula()?;
                self.expect(&Token::RParen, "`)`")?;
                Ok(f)
            }
            Some(Spanned {
                token: Token::Ident(name),
                ..
            }) => {
                let mut args = Vec::new();
                if matches!(self.peek(), Some(s) if s.token == Token::LParen) {
                    self.advance();
                    args.push(self.term()?);
                    while matches!(self.peek(), Some(s) if s.token == Token::Comma) {
                        self.advance();
                        args.push(self.term()?);
                    }
                    self.expect(&Token::RParen, "`)` or `,` in the argument list")?;
                }
                self.signature.declare_predicate(&name, args.len())?;
                Ok(Formula::Atom(name, args))
            }
            Some(s) => Err(ParseError::Unexpected {
                offset: s.offset,
                found: s.token.describe(),
                expected: "a formula".into(),
            }),
            None => Err(ParseError::UnexpectedEnd {
                expected: "a formula".into(),
            }),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let name = self.expect_ident("a term")?;
        if self.bound.contains(&name) {
            Ok(Term::Var(name))
        } else {
            self.signature.declare_constant(&name)?;
            Ok(Term::Const(name))
        }
    }

    fn check_roles(&self) -> Result<(), ParseError> {
        for name in &self.binders_seen {
            if self.signature.has_constant(name) {
                return Err(ParseError::RoleClash {
                    name: name.clone(),
                    other_role: "constant",
                });
            }
            if self.signature.predicate_arity(name).is_some() {
                return Err(ParseError::RoleClash {
                    name: name.clone(),
                    other_role: "predicate",
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::ast::{Formula, Term};

    fn formula(text: &str) -> Formula {
        parse(text).unwrap().formula
    }

    #[test]
    fn quantifiers_extend_maximally_right() {
        assert_eq!(
            formula("forall x. exists y. P(x) -> P(y)"),
            Formula::forall(
                "x",
                Formula::exists(
                    "y",
                    Formula::implies(
                        Formula::atom("P", vec![Term::var("x")]),
                        Formula::atom("P", vec![Term::var("y")]),
                    ),
                ),
            )
        );
    }

    #[test]
    fn negation_and_top_desugar() {
        assert_eq!(
            formula("~A"),
            Formula::implies(Formula::prop("A"), Formula::Bottom)
        );
        assert_eq!(
            formula("top"),
            Formula::implies(Formula::Bottom, Formula::Bottom)
        );
    }

    #[test]
    fn free_term_identifier_becomes_constant() {
        let parsed = parse("P(x)").unwrap();
        assert_eq!(
            parsed.formula,
            Formula::atom("P", vec![Term::constant("x")])
        );
        assert_eq!(parsed.signature.predicate_arity("P"), Some(1));
        assert!(parsed.signature.has_constant("x"));
    }

    #[test]
    fn connective_precedence_and_associativity() {
        assert_eq!(
            formula("A | B & C -> D"),
            Formula::implies(
                Formula::or(
                    Formula::prop("A"),
                    Formula::and(Formula::prop("B"), Formula::prop("C")),
                ),
                Formula::prop("D"),
            )
        );
        assert_eq!(
            formula("A -> B -> C"),
            Formula::implies(
                Formula::prop("A"),
                Formula::implies(Formula::prop("B"), Formula::prop("C")),
            )
        );
        assert_eq!(
            formula("A & B & C"),
            Formula::and(
                Formula::and(Formula::prop("A"), Formula::prop("B")),
                Formula::prop("C"),
            )
        );
    }

    #[test]
    fn tilde_binds_tighter_than_and() {
        assert_eq!(
            formula("~A & B"),
            Formula::and(Formula::not(Formula::prop("A")), Formula::prop("B"))
        );
    }

    #[test]
    fn rejects_shadowing() {
        assert_eq!(
            parse("forall x. forall x. P(x)"),
            Err(ParseError::Shadowing("x".into()))
        );
    }

    #[test]
    fn rejects_arity_mismatch() {
        let err = parse("P(c) & P(c, d)").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Signature(SignatureError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn rejects_predicate_constant_clash() {
        let err = parse("P(P)").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Signature(SignatureError::NamespaceClash(_))
        ));
    }

    #[test]
    fn rejects_binder_reused_as_constant() {
        let err = parse("(forall x. P(x)) & P(x)").unwrap_err();
        assert!(matches!(err, ParseError::RoleClash { other_role: "constant", .. }));
    }

    #[test]
    fn rejects_trailing_input() {
        assert!(matches!(
            parse("A B"),
            Err(ParseError::Unexpected { .. })
        ));
    }

    #[test]
    fn rejects_dangling_connective() {
        assert!(matches!(
            parse("A ->"),
            Err(ParseError::UnexpectedEnd { .. })
        ));
    }

    #[test]
    fn accepted_sentences_have_no_free_variables() {
        for text in ["forall x. exists y. R(x, y)", "P(x) & Q(y)", "exists x. P(x, c)"] {
            assert!(formula(text).is_sentence(), "{text}");
        }
    }
}
