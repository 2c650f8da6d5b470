//! Constant universes and ground expansion.
//!
//! After Skolemization a BS sentence has a one-block prefix over a
//! function-free signature, so its ground instances over the constants form
//! a finite set: an existential block expands into a disjunction, a
//! universal block into a conjunction. The expansion is the whole content
//! of the Herbrand step; nothing iterative or term-depth-bounded is needed
//! because the universe cannot grow.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::syntax::{Formula, PrenexFormula, Quantifier, Signature, Term};

/// The ground instances of a one-block prenex sentence over a constant
/// universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundExpansion {
    /// Constants, in first-appearance order.
    pub universe: Vec<String>,
    /// All `|universe|^k` substitutions in lexicographic order, duplicates
    /// kept: this is the audit trail of the expansion.
    pub instances: Vec<GroundInstance>,
    /// Disjunction or conjunction of the instances, in first-appearance
    /// order with syntactic duplicates dropped.
    pub combined: Formula,
}

/// One substitution row of the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundInstance {
    /// Prefix variables to constants, in prefix order.
    pub substitution: Vec<(String, String)>,
    pub instance: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroundError {
    #[error("constant universe is empty")]
    UniverseEmpty,
    #[error("function symbol {0} has no finite ground expansion")]
    FunctionSymbolPresent(String),
    #[error("prefix must be {expected}, found a {found} quantifier")]
    WrongPrefix {
        expected: &'static str,
        found: &'static str,
    },
}

/// All constants of the signature in first-appearance order; a single
/// fresh `_h0` when there are none, because interpretations have nonempty
/// domains.
pub fn herbrand_universe(sig: &Signature) -> Vec<String> {
    let constants: Vec<String> = sig.constants().map(str::to_owned).collect();
    if constants.is_empty() {
        vec!["_h0".to_owned()]
    } else {
        constants
    }
}

/// Expands an existential-only prenex sentence into the disjunction of its
/// ground instances.
pub fn expand_disjunction(
    f: &PrenexFormula,
    universe: &[String],
) -> Result<GroundExpansion, GroundError> {
    expand(f, universe, Quantifier::Exists)
}

/// Expands a universal-only prenex sentence into the conjunction of its
/// ground instances.
pub fn expand_conjunction(
    f: &PrenexFormula,
    universe: &[String],
) -> Result<GroundExpansion, GroundError> {
    expand(f, universe, Quantifier::Forall)
}

fn expand(
    f: &PrenexFormula,
    universe: &[String],
    kind: Quantifier,
) -> Result<GroundExpansion, GroundError> {
    if universe.is_empty() {
        return Err(GroundError::UniverseEmpty);
    }
    for (q, _) in &f.prefix {
        if *q != kind {
            return Err(GroundError::WrongPrefix {
                expected: match kind {
                    Quantifier::Exists => "existential-only",
                    Quantifier::Forall => "universal-only",
                },
                found: q.symbol(),
            });
        }
    }
    if let Some(name) = first_function_symbol(&f.matrix) {
        return Err(GroundError::FunctionSymbolPresent(name));
    }

    let vars: Vec<&String> = f.prefix.iter().map(|(_, v)| v).collect();
    let k = vars.len();
    let mut instances = Vec::with_capacity(universe.len().pow(k as u32));
    let mut seen: BTreeSet<Formula> = BTreeSet::new();
    let mut distinct: Vec<Formula> = Vec::new();
    let mut digits = vec![0usize; k];
    loop {
        let substitution: Vec<(String, String)> = vars
            .iter()
            .zip(&digits)
            .map(|(v, &d)| ((*v).clone(), universe[d].clone()))
            .collect();
        let map: BTreeMap<String, Term> = substitution
            .iter()
            .map(|(v, c)| (v.clone(), Term::Const(c.clone())))
            .collect();
        let instance = f.matrix.substitute(&map);
        if seen.insert(instance.clone()) {
            distinct.push(instance.clone());
        }
        instances.push(GroundInstance {
            substitution,
            instance,
        });
        // Lexicographic order: the last prefix variable steps fastest.
        let mut carried = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < universe.len() {
                carried = false;
                break;
            }
            *d = 0;
        }
        if carried {
            break;
        }
    }

    let combined = {
        let mut iter = distinct.into_iter();
        let first = iter.next().expect("at least one instance");
        iter.fold(first, |acc, inst| match kind {
            Quantifier::Exists => Formula::or(acc, inst),
            Quantifier::Forall => Formula::and(acc, inst),
        })
    };

    Ok(GroundExpansion {
        universe: universe.to_vec(),
        instances,
        combined,
    })
}

fn first_function_symbol(f: &Formula) -> Option<String> {
    match f {
        Formula::Atom(_, args) => args.iter().find_map(first_app_in_term),
        Formula::Bottom => None,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            first_function_symbol(a).or_else(|| first_function_symbol(b))
        }
        Formula::Forall(_, g) | Formula::Exists(_, g) => first_function_symbol(g),
    }
}

fn first_app_in_term(t: &Term) -> Option<String> {
    match t {
        Term::Var(_) | Term::Const(_) => None,
        Term::App(name, _) => Some(name.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse, to_prenex_view, Signature};

    fn prenex(text: &str) -> PrenexFormula {
        to_prenex_view(&parse(text).unwrap().formula).unwrap()
    }

    fn owned(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| (*s).to_owned()).collect()
    }

    #[test]
    fn universe_preserves_first_appearance_order() {
        let sig = parse("P(c) & Q(d) & P(c)").unwrap().signature;
        assert_eq!(herbrand_universe(&sig), owned(&["c", "d"]));
    }

    #[test]
    fn empty_signature_gets_fresh_constant() {
        let sig = Signature::new();
        assert_eq!(herbrand_universe(&sig), owned(&["_h0"]));
    }

    #[test]
    fn single_constant_single_instance() {
        let e = expand_disjunction(&prenex("exists y. (P(c) -> P(y))"), &owned(&["c"])).unwrap();
        assert_eq!(e.instances.len(), 1);
        assert_eq!(e.combined, parse("P(c) -> P(c)").unwrap().formula);
    }

    #[test]
    fn disjunction_over_two_constants() {
        let e = expand_disjunction(&prenex("exists y. A(c, y)"), &owned(&["c", "d"])).unwrap();
        assert_eq!(e.combined, parse("A(c, c) | A(c, d)").unwrap().formula);
        assert_eq!(e.instances[0].substitution, vec![("y".to_owned(), "c".to_owned())]);
        assert_eq!(e.instances[1].substitution, vec![("y".to_owned(), "d".to_owned())]);
    }

    #[test]
    fn two_variables_one_constant() {
        let e = expand_disjunction(&prenex("exists y. exists z. B(y, z)"), &owned(&["c"])).unwrap();
        assert_eq!(e.instances.len(), 1);
        assert_eq!(e.combined, parse("B(c, c)").unwrap().formula);
    }

    #[test]
    fn conjunction_single_constant() {
        let e = expand_conjunction(&prenex("forall y. (P(c) & ~P(y))"), &owned(&["c"])).unwrap();
        assert_eq!(e.combined, parse("P(c) & (P(c) -> bot)").unwrap().formula);
    }

    #[test]
    fn conjunction_is_lexicographic_and_left_associated() {
        let e = expand_conjunction(&prenex("forall y. forall z. R(y, z)"), &owned(&["c", "d"]))
            .unwrap();
        assert_eq!(e.instances.len(), 4);
        assert_eq!(
            e.combined,
            parse("R(c, c) & R(c, d) & R(d, c) & R(d, d)").unwrap().formula
        );
    }

    #[test]
    fn empty_prefix_passes_matrix_through() {
        let e = expand_conjunction(&prenex("P(c) -> Q"), &owned(&["c"])).unwrap();
        assert_eq!(e.instances.len(), 1);
        assert!(e.instances[0].substitution.is_empty());
        assert_eq!(e.combined, parse("P(c) -> Q").unwrap().formula);
    }

    #[test]
    fn combined_deduplicates_but_instances_do_not() {
        let e = expand_disjunction(&prenex("exists y. P(c)"), &owned(&["c", "d"])).unwrap();
        assert_eq!(e.instances.len(), 2);
        assert_eq!(e.combined, parse("P(c)").unwrap().formula);
    }

    #[test]
    fn rejects_wrong_prefix_and_empty_universe() {
        assert_eq!(
            expand_disjunction(&prenex("forall y. P(y)"), &owned(&["c"])),
            Err(GroundError::WrongPrefix {
                expected: "existential-only",
                found: "forall",
            })
        );
        assert_eq!(
            expand_disjunction(&prenex("exists y. P(y)"), &[]),
            Err(GroundError::UniverseEmpty)
        );
    }

    #[test]
    fn rejects_function_terms() {
        use crate::syntax::Term;
        let matrix = Formula::atom(
            "P",
            vec![Term::App("f".to_owned(), vec![Term::constant("c")])],
        );
        let p = PrenexFormula {
            prefix: vec![],
            matrix,
        };
        assert_eq!(
            expand_disjunction(&p, &owned(&["c"])),
            Err(GroundError::FunctionSymbolPresent("f".to_owned()))
        );
    }

    #[test]
    fn instance_count_is_universe_size_to_the_prefix_length() {
        let e = expand_disjunction(
            &prenex("exists y. exists z. B(y, z)"),
            &owned(&["c", "d", "e"]),
        )
        .unwrap();
        assert_eq!(e.instances.len(), 9);
        assert!(e.instances.iter().all(|i| i.instance.is_sentence()));
    }
}
