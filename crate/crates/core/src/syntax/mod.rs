//! Lexing, parsing, printing, polarity analysis, and BS-shape
//! classification of function-free first-order formulas.
//!
//! The surface grammar, precedence loose to tight: `->` (right-associative),
//! `|`, `&`, `~`, atoms and parentheses. Quantifiers are only admitted at
//! formula level and extend maximally to the right:
//!
//! ```text
//! formula := ('forall'|'exists') IDENT '.' formula | impl
//! impl    := or ('->' impl)?
//! or      := and ('|' and)*
//! and     := unary ('&' unary)*
//! unary   := '~' unary | primary
//! primary := 'bot' | 'top' | IDENT ('(' term (',' term)* ')')? | '(' formula ')'
//! term    := IDENT
//! ```
//!
//! `~A` desugars to `A -> bot` and `top` to `bot -> bot`; neither is an AST
//! node. Identifiers bound by an enclosing quantifier are variables, free
//! identifiers in term position are constants, and identifiers in formula
//! position are predicates, so every accepted input is a sentence.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod polarity;
pub mod prenex;
mod printer;

pub use ast::{Formula, Quantifier, Signature, SignatureError, Term};
pub use parser::{parse, ParseError, Parsed};
pub use polarity::{annotate_polarity, Position, QuantifierSite, Strength};
pub use prenex::{classify_bs, to_prenex_view, BsShape, PrenexError, PrenexFormula};
