//! Finite interpretations and the evaluation clauses.
//!
//! An interpretation is a finite nonempty domain, a total constant map, and
//! a total atom valuation. Evaluation realizes the many-valued clauses with
//! inf/sup as min/max over the finite domain: `⊥ ↦ 0`, `∧ ↦ min`,
//! `∨ ↦ max`, implication residuated, `∀ ↦ min`, `∃ ↦ max`.

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::value::TruthValue;
use super::Mode;
use crate::syntax::{Formula, Term};

/// A finite interpretation: domain, constant map, atom valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    domain: Vec<String>,
    const_map: IndexMap<String, usize>,
    atoms: IndexMap<String, AtomTable>,
}

/// Row-major valuation of one predicate: the tuple `(t_0, …, t_{k-1})` maps
/// to index `Σ t_i · n^(k-1-i)`, so the last coordinate varies fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AtomTable {
    arity: usize,
    values: Vec<TruthValue>,
}

/// One row of the atom valuation, as serialized in certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomEntry {
    pub pred: String,
    pub args: Vec<String>,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("domain must be nonempty")]
    EmptyDomain,
    #[error("duplicate domain element {0}")]
    DuplicateElement(String),
    #[error("unknown domain element {0}")]
    UnknownElement(String),
    #[error("predicate {0} declared twice")]
    DuplicatePredicate(String),
    #[error("table for {pred} needs {expected} values, got {got}")]
    TableSize {
        pred: String,
        expected: usize,
        got: usize,
    },
    #[error("atom table for {pred} is missing {missing} tuple(s)")]
    IncompleteTable { pred: String, missing: usize },
    #[error("duplicate atom entry for {pred}({args})")]
    DuplicateAtomEntry { pred: String, args: String },
    #[error("predicate {pred} used with arity {got} but first seen with arity {expected}")]
    InconsistentArity {
        pred: String,
        expected: usize,
        got: usize,
    },
    #[error("grids have different sizes ({from} vs {to})")]
    GridLengthMismatch { from: usize, to: usize },
    #[error("atom value {0} is not a grid point")]
    ValueNotInGrid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("unknown constant {0}")]
    UnknownConstant(String),
    #[error("unknown predicate {0}")]
    UnknownPredicate(String),
    #[error("predicate {pred} applied to {got} argument(s), table has arity {expected}")]
    ArityMismatch {
        pred: String,
        expected: usize,
        got: usize,
    },
    #[error("function term {0}(…) cannot be evaluated over a finite interpretation")]
    FunctionTerm(String),
    #[error("unknown domain element {0}")]
    UnknownElement(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("gluing point must satisfy omega < 1, got {0}")]
    OmegaNotBelowOne(String),
}

impl Interpretation {
    pub fn new(domain: Vec<String>) -> Result<Interpretation, InterpError> {
        if domain.is_empty() {
            return Err(InterpError::EmptyDomain);
        }
        for (i, d) in domain.iter().enumerate() {
            if domain[..i].contains(d) {
                return Err(InterpError::DuplicateElement(d.clone()));
            }
        }
        Ok(Interpretation {
            domain,
            const_map: IndexMap::new(),
            atoms: IndexMap::new(),
        })
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn domain_size(&self) -> usize {
        self.domain.len()
    }

    pub fn element_index(&self, id: &str) -> Option<usize> {
        self.domain.iter().position(|d| d == id)
    }

    /// Maps a constant to a domain element by element id.
    pub fn set_constant(&mut self, name: &str, element: &str) -> Result<(), InterpError> {
        let idx = self
            .element_index(element)
            .ok_or_else(|| InterpError::UnknownElement(element.to_owned()))?;
        self.const_map.insert(name.to_owned(), idx);
        Ok(())
    }

    pub fn set_constant_index(&mut self, name: &str, element: usize) -> Result<(), InterpError> {
        if element >= self.domain.len() {
            return Err(InterpError::UnknownElement(format!("#{element}")));
        }
        self.const_map.insert(name.to_owned(), element);
        Ok(())
    }

    pub fn constant_element(&self, name: &str) -> Option<usize> {
        self.const_map.get(name).copied()
    }

    /// Constant map in insertion order, as (name, element id) pairs.
    pub fn constants(&self) -> impl Iterator<Item = (&str, &str)> {
        self.const_map
            .iter()
            .map(|(n, &i)| (n.as_str(), self.domain[i].as_str()))
    }

    /// Installs the full row-major table for one predicate.
    pub fn add_predicate(
        &mut self,
        name: &str,
        arity: usize,
        values: Vec<TruthValue>,
    ) -> Result<(), InterpError> {
        if self.atoms.contains_key(name) {
            return Err(InterpError::DuplicatePredicate(name.to_owned()));
        }
        let expected = self.domain.len().pow(arity as u32);
        if values.len() != expected {
            return Err(InterpError::TableSize {
                pred: name.to_owned(),
                expected,
                got: values.len(),
            });
        }
        self.atoms.insert(name.to_owned(), AtomTable { arity, values });
        Ok(())
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.atoms.iter().map(|(n, t)| (n.as_str(), t.arity))
    }

    pub fn atom_value(&self, pred: &str, tuple: &[usize]) -> Result<TruthValue, EvalError> {
        let table = self
            .atoms
            .get(pred)
            .ok_or_else(|| EvalError::UnknownPredicate(pred.to_owned()))?;
        if tuple.len() != table.arity {
            return Err(EvalError::ArityMismatch {
                pred: pred.to_owned(),
                expected: table.arity,
                got: tuple.len(),
            });
        }
        let n = self.domain.len();
        let mut idx = 0usize;
        for &t in tuple {
            if t >= n {
                return Err(EvalError::UnknownElement(format!("#{t}")));
            }
            idx = idx * n + t;
        }
        Ok(table.values[idx])
    }

    /// All atom values, predicates in insertion order, tuples row-major.
    pub fn values(&self) -> impl Iterator<Item = TruthValue> + '_ {
        self.atoms.values().flat_map(|t| t.values.iter().copied())
    }

    /// The valuation as flat rows, predicates in insertion order, tuples
    /// row-major.
    pub fn atom_entries(&self) -> Vec<AtomEntry> {
        let n = self.domain.len();
        let mut out = Vec::new();
        for (pred, table) in &self.atoms {
            for (idx, &value) in table.values.iter().enumerate() {
                let args = tuple_for_index(idx, n, table.arity)
                    .into_iter()
                    .map(|e| self.domain[e].clone())
                    .collect();
                out.push(AtomEntry {
                    pred: pred.clone(),
                    args,
                    value,
                });
            }
        }
        out
    }

    /// Rebuilds an interpretation from certificate parts, enforcing
    /// totality of the atom valuation.
    pub fn from_entries(
        domain: Vec<String>,
        constants: &[(String, String)],
        entries: &[AtomEntry],
    ) -> Result<Interpretation, InterpError> {
        let mut interp = Interpretation::new(domain)?;
        for (name, element) in constants {
            interp.set_constant(name, element)?;
        }
        let n = interp.domain.len();
        let mut tables: IndexMap<String, Vec<Option<TruthValue>>> = IndexMap::new();
        let mut arities: IndexMap<String, usize> = IndexMap::new();
        for e in entries {
            let arity = *arities.entry(e.pred.clone()).or_insert(e.args.len());
            if e.args.len() != arity {
                return Err(InterpError::InconsistentArity {
                    pred: e.pred.clone(),
                    expected: arity,
                    got: e.args.len(),
                });
            }
            let mut idx = 0usize;
            for a in &e.args {
                let i = interp
                    .element_index(a)
                    .ok_or_else(|| InterpError::UnknownElement(a.clone()))?;
                idx = idx * n + i;
            }
            let table = tables
                .entry(e.pred.clone())
                .or_insert_with(|| vec![None; n.pow(arity as u32)]);
            if table[idx].is_some() {
                return Err(InterpError::DuplicateAtomEntry {
                    pred: e.pred.clone(),
                    args: e.args.join(", "),
                });
            }
            table[idx] = Some(e.value);
        }
        for (pred, table) in tables {
            let missing = table.iter().filter(|v| v.is_none()).count();
            if missing > 0 {
                return Err(InterpError::IncompleteTable { pred, missing });
            }
            let values = table.into_iter().map(|v| v.unwrap()).collect();
            let arity = arities[&pred];
            interp.add_predicate(&pred, arity, values)?;
        }
        Ok(interp)
    }

    /// Evaluates a sentence.
    pub fn evaluate(&self, f: &Formula) -> Result<TruthValue, EvalError> {
        let mut env = Vec::new();
        self.eval(f, &mut env)
    }

    /// Evaluates a formula whose free variables are covered by `env`
    /// (variable name to domain element id).
    pub fn evaluate_with_env(
        &self,
        f: &Formula,
        env: &BTreeMap<String, String>,
    ) -> Result<TruthValue, EvalError> {
        let mut stack = Vec::with_capacity(env.len());
        for (var, id) in env {
            let idx = self
                .element_index(id)
                .ok_or_else(|| EvalError::UnknownElement(id.clone()))?;
            stack.push((var.clone(), idx));
        }
        self.eval(f, &mut stack)
    }

    fn eval(&self, f: &Formula, env: &mut Vec<(String, usize)>) -> Result<TruthValue, EvalError> {
        match f {
            Formula::Atom(pred, args) => {
                let mut tuple = Vec::with_capacity(args.len());
                for t in args {
                    tuple.push(self.resolve(t, env)?);
                }
                self.atom_value(pred, &tuple)
            }
            Formula::Bottom => Ok(TruthValue::zero()),
            Formula::And(a, b) => {
                let va = self.eval(a, env)?;
                let vb = self.eval(b, env)?;
                Ok(va.min(vb))
            }
            Formula::Or(a, b) => {
                let va = self.eval(a, env)?;
                let vb = self.eval(b, env)?;
                Ok(va.max(vb))
            }
            Formula::Implies(a, b) => {
                let va = self.eval(a, env)?;
                let vb = self.eval(b, env)?;
                Ok(va.implies(vb))
            }
            Formula::Forall(v, body) => {
                let mut acc = TruthValue::one();
                for e in 0..self.domain.len() {
                    env.push((v.clone(), e));
                    let val = self.eval(body, env);
                    env.pop();
                    acc = acc.min(val?);
                    if acc.is_zero() {
                        break;
                    }
                }
                Ok(acc)
            }
            Formula::Exists(v, body) => {
                let mut acc = TruthValue::zero();
                for e in 0..self.domain.len() {
                    env.push((v.clone(), e));
                    let val = self.eval(body, env);
                    env.pop();
                    acc = acc.max(val?);
                    if acc.is_one() {
                        break;
                    }
                }
                Ok(acc)
            }
        }
    }

    fn resolve(&self, t: &Term, env: &[(String, usize)]) -> Result<usize, EvalError> {
        match t {
            Term::Var(v) => env
                .iter()
                .rev()
                .find(|(name, _)| name == v)
                .map(|&(_, e)| e)
                .ok_or_else(|| EvalError::UnboundVariable(v.clone())),
            Term::Const(c) => self
                .constant_element(c)
                .ok_or_else(|| EvalError::UnknownConstant(c.clone())),
            Term::App(f, _) => Err(EvalError::FunctionTerm(f.clone())),
        }
    }

    /// The gluing transformation: atom values above `omega` become 1,
    /// values at most `omega` are preserved. Domain and constant map are
    /// untouched.
    ///
    /// `omega = 1` is rejected: the transformation's contract on compound
    /// formulas needs `omega < 1` in the implication case.
    pub fn glue(&self, omega: TruthValue) -> Result<Interpretation, GlueError> {
        if omega.is_one() {
            return Err(GlueError::OmegaNotBelowOne(omega.to_string()));
        }
        let mut glued = self.clone();
        for table in glued.atoms.values_mut() {
            for v in &mut table.values {
                if *v > omega {
                    *v = TruthValue::one();
                }
            }
        }
        Ok(glued)
    }

    /// Transports atom values along the order isomorphism sending the i-th
    /// point of `from` to the i-th point of `to`.
    pub fn transport(
        &self,
        from: &super::grid::Grid,
        to: &super::grid::Grid,
    ) -> Result<Interpretation, InterpError> {
        if from.len() != to.len() {
            return Err(InterpError::GridLengthMismatch {
                from: from.len(),
                to: to.len(),
            });
        }
        let mut moved = self.clone();
        for table in moved.atoms.values_mut() {
            for v in &mut table.values {
                let pos = from
                    .position(*v)
                    .ok_or_else(|| InterpError::ValueNotInGrid(v.to_string()))?;
                *v = to.points()[pos];
            }
        }
        Ok(moved)
    }
}

/// Decodes a row-major index back into its element tuple.
pub(crate) fn tuple_for_index(mut idx: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut tuple = vec![0; arity];
    for slot in tuple.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    tuple
}

/// Certificate check: a countermodel must give the sentence a value below
/// 1, a model must give it exactly 1.
pub fn check_certificate(i: &Interpretation, f: &Formula, mode: Mode) -> Result<bool, EvalError> {
    let v = i.evaluate(f)?;
    Ok(match mode {
        Mode::Validity => !v.is_one(),
        Mode::Sat1 => v.is_one(),
    })
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain: {{{}}}", self.domain.join(", "))?;
        if !self.const_map.is_empty() {
            let pairs: Vec<String> = self
                .constants()
                .map(|(n, e)| format!("{n} -> {e}"))
                .collect();
            write!(f, "\nconstants: {}", pairs.join(", "))?;
        }
        for entry in self.atom_entries() {
            if entry.args.is_empty() {
                write!(f, "\n{} = {}", entry.pred, entry.value)?;
            } else {
                write!(f, "\n{}({}) = {}", entry.pred, entry.args.join(", "), entry.value)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Interpretation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let constants: IndexMap<&str, &str> = self.constants().collect();
        let mut s = serializer.serialize_struct("Interpretation", 3)?;
        s.serialize_field("domain", &self.domain)?;
        s.serialize_field("constants", &constants)?;
        s.serialize_field("atoms", &self.atom_entries())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Interpretation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Interpretation, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            domain: Vec<String>,
            #[serde(default)]
            constants: IndexMap<String, String>,
            #[serde(default)]
            atoms: Vec<AtomEntry>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let constants: Vec<(String, String)> = repr.constants.into_iter().collect();
        Interpretation::from_entries(repr.domain, &constants, &repr.atoms)
            .map_err(D::Error::custom)
    }
}
