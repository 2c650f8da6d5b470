//! Polarity-respecting Skolemization of prenex sentences.
//!
//! Validity-Skolemization removes the strong quantifiers of a positive
//! prenex sentence (its universals): a strong variable becomes a fresh
//! constant when no weak quantifier precedes it, otherwise a fresh function
//! symbol applied to the preceding weak variables. 1-satisfiability
//! Skolemization is the dual pass, removing the existentials.
//!
//! On the two BS shapes the strong block precedes every weak quantifier, so
//! only constants are ever introduced; the decision pipeline rejects any
//! Skolemization that produced a positive-arity function symbol. The
//! general prenex case still emits function terms for inspection via
//! `--dump-skolem`, but nothing downstream evaluates them.

use std::collections::{BTreeMap, BTreeSet};

use crate::syntax::{PrenexFormula, Quantifier, Signature, Term};

/// Result of one Skolemization pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkolemResult {
    /// The Skolemized sentence; its prefix retains only the weak
    /// quantifiers, in their original order.
    pub formula: PrenexFormula,
    /// Input signature extended with the introduced constants. Function
    /// symbols are never added: the signature type has no slot for them by
    /// design, and only the general prenex case produces any.
    pub signature: Signature,
    /// Fresh constant names, in introduction order.
    pub introduced_constants: Vec<String>,
    /// Fresh function symbols with their arities, in introduction order.
    pub introduced_functions: Vec<(String, usize)>,
    /// What happened to each original prefix position, in prefix order.
    pub mapping: Vec<SkolemStep>,
}

/// Fate of one original prefix quantifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SkolemStep {
    /// Weak quantifier, kept in the output prefix.
    Kept { quantifier: Quantifier, var: String },
    /// Strong quantifier replaced by a fresh constant.
    Constant {
        quantifier: Quantifier,
        var: String,
        name: String,
    },
    /// Strong quantifier replaced by `name(args)` over the preceding weak
    /// variables.
    Function {
        quantifier: Quantifier,
        var: String,
        name: String,
        args: Vec<String>,
    },
}

/// Validity-Skolemization: removes every universal of the prefix.
pub fn skolemize_validity(p: &PrenexFormula, sig: &Signature) -> SkolemResult {
    skolemize(p, sig, Quantifier::Forall, "_skV")
}

/// 1-satisfiability Skolemization: removes every existential of the
/// prefix.
pub fn skolemize_sat(p: &PrenexFormula, sig: &Signature) -> SkolemResult {
    skolemize(p, sig, Quantifier::Exists, "_skS")
}

fn skolemize(
    p: &PrenexFormula,
    sig: &Signature,
    strong: Quantifier,
    name_prefix: &str,
) -> SkolemResult {
    let mut counter = 0usize;
    let mut taken: BTreeSet<String> = BTreeSet::new();
    let mut weak_vars: Vec<String> = Vec::new();
    let mut subst: BTreeMap<String, Term> = BTreeMap::new();
    let mut prefix = Vec::new();
    let mut introduced_constants = Vec::new();
    let mut introduced_functions = Vec::new();
    let mut mapping = Vec::new();
    let mut signature = sig.clone();

    for (q, var) in &p.prefix {
        if *q != strong {
            prefix.push((*q, var.clone()));
            weak_vars.push(var.clone());
            mapping.push(SkolemStep::Kept {
                quantifier: *q,
                var: var.clone(),
            });
            continue;
        }
        let name = fresh_name(name_prefix, &mut counter, sig, &mut taken);
        if weak_vars.is_empty() {
            subst.insert(var.clone(), Term::Const(name.clone()));
            signature
                .declare_constant(&name)
                .expect("fresh name cannot clash");
            introduced_constants.push(name.clone());
            mapping.push(SkolemStep::Constant {
                quantifier: *q,
                var: var.clone(),
                name,
            });
        } else {
            let args: Vec<Term> = weak_vars.iter().cloned().map(Term::Var).collect();
            subst.insert(var.clone(), Term::App(name.clone(), args));
            introduced_functions.push((name.clone(), weak_vars.len()));
            mapping.push(SkolemStep::Function {
                quantifier: *q,
                var: var.clone(),
                name,
                args: weak_vars.clone(),
            });
        }
    }

    SkolemResult {
        formula: PrenexFormula {
            prefix,
            matrix: p.matrix.substitute(&subst),
        },
        signature,
        introduced_constants,
        introduced_functions,
        mapping,
    }
}

/// Next `_skV<k>`/`_skS<k>` that collides with neither the input signature
/// nor an earlier introduction.
fn fresh_name(
    prefix: &str,
    counter: &mut usize,
    sig: &Signature,
    taken: &mut BTreeSet<String>,
) -> String {
    loop {
        let name = format!("{prefix}{}", *counter);
        *counter += 1;
        if sig.predicate_arity(&name).is_none()
            && !sig.has_constant(&name)
            && taken.insert(name.clone())
        {
            return name;
        }
    }
}
