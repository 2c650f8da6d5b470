//! Abstract syntax of function-free first-order formulas.

use std::collections::{BTreeMap, BTreeSet};

use indexmap::{IndexMap, IndexSet};
use thiserror::Error;

/// A term: a bound variable, a constant, or a Skolem function application.
///
/// The surface grammar only produces variables and constants. `App` terms
/// exist solely as output of general prenex Skolemization; user input can
/// never contain a function symbol of positive arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Const(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }

    /// True if this term or any subterm is a function application.
    pub fn has_app(&self) -> bool {
        matches!(self, Term::App(..))
    }
}

/// A first-order formula over `⊥`, `∧`, `∨`, `⊃` and the two quantifiers.
///
/// Negation and verum are definitional sugar, not constructors: the parser
/// desugars `~A` to `A ⊃ ⊥` and `top` to `⊥ ⊃ ⊥`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Bottom,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

/// Universal or existential quantifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn symbol(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        }
    }
}

impl Formula {
    pub fn atom(pred: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(pred.into(), args)
    }

    /// 0-ary atom, i.e. a propositional variable.
    pub fn prop(pred: impl Into<String>) -> Formula {
        Formula::Atom(pred.into(), Vec::new())
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn implies(left: Formula, right: Formula) -> Formula {
        Formula::Implies(Box::new(left), Box::new(right))
    }

    /// `~f`, desugared to `f ⊃ ⊥`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::implies(f, Formula::Bottom)
    }

    /// `top`, desugared to `⊥ ⊃ ⊥`.
    pub fn top() -> Formula {
        Formula::implies(Formula::Bottom, Formula::Bottom)
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn quantify(q: Quantifier, var: impl Into<String>, body: Formula) -> Formula {
        match q {
            Quantifier::Forall => Formula::forall(var, body),
            Quantifier::Exists => Formula::exists(var, body),
        }
    }

    /// True if any quantifier occurs anywhere in the formula.
    pub fn has_quantifier(&self) -> bool {
        match self {
            Formula::Atom(..) | Formula::Bottom => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.has_quantifier() || b.has_quantifier()
            }
            Formula::Forall(..) | Formula::Exists(..) => true,
        }
    }

    /// True if any atom argument contains a function application.
    pub fn has_function_terms(&self) -> bool {
        match self {
            Formula::Atom(_, args) => args.iter().any(Term::has_app),
            Formula::Bottom => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.has_function_terms() || b.has_function_terms()
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => f.has_function_terms(),
        }
    }

    /// Free variables, in first-occurrence order.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        match self {
            Formula::Atom(_, args) => {
                for t in args {
                    collect_free_term(t, bound, out);
                }
            }
            Formula::Bottom => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// True if the formula has no free variables.
    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Replaces free occurrences of the mapped variables by the given terms.
    ///
    /// A quantifier binding a mapped variable shadows the substitution in its
    /// body; the replacement terms are assumed ground (no capture check).
    pub fn substitute(&self, map: &BTreeMap<String, Term>) -> Formula {
        match self {
            Formula::Atom(p, args) => Formula::Atom(
                p.clone(),
                args.iter().map(|t| substitute_term(t, map)).collect(),
            ),
            Formula::Bottom => Formula::Bottom,
            Formula::And(a, b) => Formula::and(a.substitute(map), b.substitute(map)),
            Formula::Or(a, b) => Formula::or(a.substitute(map), b.substitute(map)),
            Formula::Implies(a, b) => Formula::implies(a.substitute(map), b.substitute(map)),
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                let body = if map.contains_key(v) {
                    let mut inner = map.clone();
                    inner.remove(v);
                    f.substitute(&inner)
                } else {
                    f.substitute(map)
                };
                match self {
                    Formula::Forall(..) => Formula::forall(v.clone(), body),
                    _ => Formula::exists(v.clone(), body),
                }
            }
        }
    }

    /// Distinct constant names occurring in atom arguments, in first-occurrence
    /// order.
    pub fn constants(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.walk_terms(&mut |t| {
            if let Term::Const(c) = t {
                if seen.insert(c.clone()) {
                    out.push(c.clone());
                }
            }
        });
        out
    }

    fn walk_terms(&self, visit: &mut impl FnMut(&Term)) {
        match self {
            Formula::Atom(_, args) => {
                for t in args {
                    walk_term(t, visit);
                }
            }
            Formula::Bottom => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.walk_terms(visit);
                b.walk_terms(visit);
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => f.walk_terms(visit),
        }
    }
}

fn collect_free_term(t: &Term, bound: &[String], out: &mut Vec<String>) {
    match t {
        Term::Var(v) => {
            if !bound.iter().any(|b| b == v) && !out.iter().any(|o| o == v) {
                out.push(v.clone());
            }
        }
        Term::Const(_) => {}
        Term::App(_, args) => {
            for a in args {
                collect_free_term(a, bound, out);
            }
        }
    }
}

fn substitute_term(t: &Term, map: &BTreeMap<String, Term>) -> Term {
    match t {
        Term::Var(v) => map.get(v).cloned().unwrap_or_else(|| t.clone()),
        Term::Const(_) => t.clone(),
        Term::App(f, args) => Term::App(
            f.clone(),
            args.iter().map(|a| substitute_term(a, map)).collect(),
        ),
    }
}

fn walk_term(t: &Term, visit: &mut impl FnMut(&Term)) {
    visit(t);
    if let Term::App(_, args) = t {
        for a in args {
            walk_term(a, visit);
        }
    }
}

/// Predicate arities and constant names of a parsed sentence.
///
/// Predicates and constants live in disjoint namespaces and no function
/// symbol of positive arity is ever admitted. Both collections preserve
/// first-appearance order, which downstream code relies on for deterministic
/// universes and enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    predicates: IndexMap<String, usize>,
    constants: IndexSet<String>,
}

/// Declaring a name in a role that collides with an existing declaration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("predicate {pred} used with arity {got} but declared with arity {expected}")]
    ArityMismatch {
        pred: String,
        expected: usize,
        got: usize,
    },
    #[error("name {0} is used both as a predicate and as a constant")]
    NamespaceClash(String),
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    /// Rebuilds the signature of a formula by walking it in preorder, so the
    /// first-appearance order matches what the parser produced for the same
    /// text. Useful after transformations that introduce fresh constants.
    pub fn of_formula(f: &Formula) -> Result<Signature, SignatureError> {
        fn walk(f: &Formula, sig: &mut Signature) -> Result<(), SignatureError> {
            match f {
                Formula::Atom(pred, args) => {
                    sig.declare_predicate(pred, args.len())?;
                    for t in args {
                        walk_term(t, &mut |t| {
                            if let Term::Const(c) = t {
                                sig.constants.insert(c.clone());
                            }
                        });
                    }
                    for c in sig.constants.iter() {
                        if sig.predicates.contains_key(c) {
                            return Err(SignatureError::NamespaceClash(c.clone()));
                        }
                    }
                    Ok(())
                }
                Formula::Bottom => Ok(()),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                    walk(a, sig)?;
                    walk(b, sig)
                }
                Formula::Forall(_, body) | Formula::Exists(_, body) => walk(body, sig),
            }
        }
        let mut sig = Signature::new();
        walk(f, &mut sig)?;
        Ok(sig)
    }

    /// Records a predicate use; errors if the arity differs from an earlier
    /// use or the name is already a constant.
    pub fn declare_predicate(&mut self, name: &str, arity: usize) -> Result<(), SignatureError> {
        if self.constants.contains(name) {
            return Err(SignatureError::NamespaceClash(name.to_owned()));
        }
        match self.predicates.get(name) {
            Some(&a) if a != arity => Err(SignatureError::ArityMismatch {
                pred: name.to_owned(),
                expected: a,
                got: arity,
            }),
            Some(_) => Ok(()),
            None => {
                self.predicates.insert(name.to_owned(), arity);
                Ok(())
            }
        }
    }

    /// Records a constant; errors if the name is already a predicate.
    pub fn declare_constant(&mut self, name: &str) -> Result<(), SignatureError> {
        if self.predicates.contains_key(name) {
            return Err(SignatureError::NamespaceClash(name.to_owned()));
        }
        self.constants.insert(name.to_owned());
        Ok(())
    }

    pub fn predicate_arity(&self, name: &str) -> Option<usize> {
        self.predicates.get(name).copied()
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    /// Predicates in first-appearance order.
    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.predicates.iter().map(|(n, &a)| (n.as_str(), a))
    }

    /// Constants in first-appearance order.
    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.constants.iter().map(String::as_str)
    }

    pub fn constant_count(&self) -> usize {
        self.constants.len()
    }

    pub fn predicate_count(&self) -> usize {
        self.predicates.len()
    }
}
