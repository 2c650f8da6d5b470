//! Propositional decision procedures over quantifier-free ground formulas.
//!
//! Three procedures share one ground-atom representation: validity in the
//! common infinite-valued logic, validity in the m-valued logic, and
//! classical satisfiability.
//!
//! Infinite-valued validity is decided on the equally spaced grid with
//! `n + 2` points for `n` distinct atoms. Any counter-assignment over any
//! truth-value set uses at most `n` distinct atom values besides 0 and 1,
//! and the connective clauses are determined by the relative order of
//! values alone, so such an assignment can be transported onto the
//! `(n + 2)`-point grid without changing which subformulas reach 1. A
//! grid counter-assignment transports into any infinite set the same way.
//! The grid-stability law re-checks this equivalence empirically on larger
//! grids.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::limits::{CapExceeded, Caps};
use crate::models::{Grid, TruthValue};
use crate::syntax::{Formula, Term};

/// A ground atom keyed by predicate name and constant argument tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundAtom {
    pub pred: String,
    pub args: Vec<String>,
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            f.write_str(&self.pred)
        } else {
            write!(f, "{}({})", self.pred, self.args.join(", "))
        }
    }
}

/// A total map from ground atoms to truth values.
pub type Assignment = BTreeMap<GroundAtom, TruthValue>;

/// Verdict of a propositional procedure.
///
/// The validity procedures return `Valid` or `CounterAssignment`; the
/// satisfiability procedure returns `Satisfiable` or `Unsatisfiable`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropVerdict {
    Valid,
    CounterAssignment(Assignment),
    Satisfiable(Assignment),
    Unsatisfiable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropError {
    #[error("formula contains a quantifier")]
    QuantifierPresent,
    #[error("atom argument {0} is a variable, not a constant")]
    NotGround(String),
    #[error("function term {0}(…) in ground formula")]
    FunctionSymbol(String),
    #[error("assignment is missing atom {0}")]
    MissingAtom(String),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

/// The distinct ground atoms of a quantifier-free ground formula, sorted.
///
/// The sorted order is the enumeration order of every procedure here, and
/// therefore fixes which counter-assignment is "lexicographically least".
pub fn ground_atoms(f: &Formula) -> Result<Vec<GroundAtom>, PropError> {
    let mut set = BTreeSet::new();
    collect_atoms(f, &mut set)?;
    Ok(set.into_iter().collect())
}

fn collect_atoms(f: &Formula, out: &mut BTreeSet<GroundAtom>) -> Result<(), PropError> {
    match f {
        Formula::Atom(pred, args) => {
            let mut names = Vec::with_capacity(args.len());
            for a in args {
                match a {
                    Term::Const(c) => names.push(c.clone()),
                    Term::Var(v) => return Err(PropError::NotGround(v.clone())),
                    Term::App(name, _) => return Err(PropError::FunctionSymbol(name.clone())),
                }
            }
            out.insert(GroundAtom {
                pred: pred.clone(),
                args: names,
            });
            Ok(())
        }
        Formula::Bottom => Ok(()),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            collect_atoms(a, out)?;
            collect_atoms(b, out)
        }
        Formula::Forall(..) | Formula::Exists(..) => Err(PropError::QuantifierPresent),
    }
}

/// Evaluates a quantifier-free ground formula under a total assignment.
pub fn eval_qf(f: &Formula, a: &Assignment) -> Result<TruthValue, PropError> {
    match f {
        Formula::Atom(pred, args) => {
            let mut names = Vec::with_capacity(args.len());
            for t in args {
                match t {
                    Term::Const(c) => names.push(c.clone()),
                    Term::Var(v) => return Err(PropError::NotGround(v.clone())),
                    Term::App(name, _) => return Err(PropError::FunctionSymbol(name.clone())),
                }
            }
            let key = GroundAtom {
                pred: pred.clone(),
                args: names,
            };
            a.get(&key)
                .copied()
                .ok_or_else(|| PropError::MissingAtom(key.to_string()))
        }
        Formula::Bottom => Ok(TruthValue::zero()),
        Formula::And(x, y) => Ok(eval_qf(x, a)?.min(eval_qf(y, a)?)),
        Formula::Or(x, y) => Ok(eval_qf(x, a)?.max(eval_qf(y, a)?)),
        Formula::Implies(x, y) => Ok(eval_qf(x, a)?.implies(eval_qf(y, a)?)),
        Formula::Forall(..) | Formula::Exists(..) => Err(PropError::QuantifierPresent),
    }
}

/// The finiteness axiom `(⊤ ⊃ A1) ∨ (A1 ⊃ A2) ∨ … ∨ (A_{m-1} ⊃ ⊥)`:
/// valid in the m-valued logic, refutable in the (m+1)-valued one, because
/// a falsifying assignment needs m-1 strictly descending values strictly
/// between 0 and 1.
pub fn fin_axiom(m: u32) -> Formula {
    assert!(m >= 2, "the axiom family starts at the two-valued logic");
    let atom = |i: u32| Formula::prop(format!("A{i}"));
    let mut disjuncts = vec![Formula::implies(Formula::top(), atom(1))];
    for i in 1..m - 1 {
        disjuncts.push(Formula::implies(atom(i), atom(i + 1)));
    }
    disjuncts.push(Formula::implies(atom(m - 1), Formula::Bottom));
    disjuncts.into_iter().reduce(Formula::or).unwrap()
}

/// Validity over a specific grid: value 1 under every grid assignment, or
/// the least counter-assignment in enumeration order (atoms sorted, values
/// ascending, last atom fastest).
pub fn goedel_valid_on_grid(
    f: &Formula,
    grid: &Grid,
    caps: &Caps,
) -> Result<PropVerdict, PropError> {
    let atoms = ground_atoms(f)?;
    if atoms.len() > caps.max_prop_atoms {
        return Err(PropError::Cap(CapExceeded {
            site: "goedel_valid atom count",
            required: atoms.len() as u128,
            cap: caps.max_prop_atoms as u64,
        }));
    }
    let total = (grid.len() as u128).saturating_pow(atoms.len() as u32);
    if total > caps.max_prop_assignments as u128 {
        return Err(PropError::Cap(CapExceeded {
            site: "goedel_valid assignments",
            required: total,
            cap: caps.max_prop_assignments,
        }));
    }
    let points = grid.points();
    let mut digits = vec![0usize; atoms.len()];
    loop {
        let assignment: Assignment = atoms
            .iter()
            .zip(&digits)
            .map(|(atom, &d)| (atom.clone(), points[d]))
            .collect();
        if !eval_qf(f, &assignment)?.is_one() {
            return Ok(PropVerdict::CounterAssignment(assignment));
        }
        let mut carried = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < points.len() {
                carried = false;
                break;
            }
            *d = 0;
        }
        if carried {
            return Ok(PropVerdict::Valid);
        }
    }
}

/// Validity in the common infinite-valued logic, decided on the
/// `(n + 2)`-point grid for `n` distinct atoms.
pub fn goedel_valid_infinite(f: &Formula, caps: &Caps) -> Result<PropVerdict, PropError> {
    let n = ground_atoms(f)?.len();
    goedel_valid_on_grid(f, &Grid::equally_spaced(n + 2), caps)
}

/// Validity in the m-valued logic, decided on the m-point grid.
pub fn goedel_valid_finite(f: &Formula, m: u32, caps: &Caps) -> Result<PropVerdict, PropError> {
    goedel_valid_on_grid(f, &Grid::for_finite_logic(m), caps)
}

/// Classical satisfiability with a deterministic witness.
///
/// Depth-first search over the sorted atoms, true branch first, pruning a
/// branch as soon as the partial assignment determines the classical value;
/// atoms left unassigned at success default to 0. The verdict is
/// strategy-independent; the witness is pinned by this strategy.
pub fn classical_sat(f: &Formula, caps: &Caps) -> Result<PropVerdict, PropError> {
    let atoms = ground_atoms(f)?;
    let mut partial: BTreeMap<GroundAtom, bool> = BTreeMap::new();
    let mut nodes = 0u64;
    match sat_dfs(f, &atoms, 0, &mut partial, &mut nodes, caps)? {
        Some(witness) => {
            let assignment: Assignment = atoms
                .iter()
                .map(|atom| {
                    let v = if witness.get(atom).copied().unwrap_or(false) {
                        TruthValue::one()
                    } else {
                        TruthValue::zero()
                    };
                    (atom.clone(), v)
                })
                .collect();
            Ok(PropVerdict::Satisfiable(assignment))
        }
        None => Ok(PropVerdict::Unsatisfiable),
    }
}

fn sat_dfs(
    f: &Formula,
    atoms: &[GroundAtom],
    next: usize,
    partial: &mut BTreeMap<GroundAtom, bool>,
    nodes: &mut u64,
    caps: &Caps,
) -> Result<Option<BTreeMap<GroundAtom, bool>>, PropError> {
    *nodes += 1;
    if *nodes > caps.max_sat_nodes {
        return Err(PropError::Cap(CapExceeded {
            site: "classical_sat nodes",
            required: *nodes as u128,
            cap: caps.max_sat_nodes,
        }));
    }
    match eval_partial(f, partial)? {
        Some(true) => return Ok(Some(partial.clone())),
        Some(false) => return Ok(None),
        None => {}
    }
    debug_assert!(next < atoms.len(), "undetermined value needs a free atom");
    for value in [true, false] {
        partial.insert(atoms[next].clone(), value);
        let found = sat_dfs(f, atoms, next + 1, partial, nodes, caps)?;
        partial.remove(&atoms[next]);
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Three-valued classical evaluation: `None` when unassigned atoms still
/// matter. At the endpoints 0 and 1 the many-valued connective clauses
/// agree with the Boolean ones.
fn eval_partial(
    f: &Formula,
    partial: &BTreeMap<GroundAtom, bool>,
) -> Result<Option<bool>, PropError> {
    match f {
        Formula::Atom(pred, args) => {
            let mut names = Vec::with_capacity(args.len());
            for t in args {
                match t {
                    Term::Const(c) => names.push(c.clone()),
                    Term::Var(v) => return Err(PropError::NotGround(v.clone())),
                    Term::App(name, _) => return Err(PropError::FunctionSymbol(name.clone())),
                }
            }
            Ok(partial
                .get(&GroundAtom {
                    pred: pred.clone(),
                    args: names,
                })
                .copied())
        }
        Formula::Bottom => Ok(Some(false)),
        Formula::And(a, b) => Ok(match (eval_partial(a, partial)?, eval_partial(b, partial)?) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        }),
        Formula::Or(a, b) => Ok(match (eval_partial(a, partial)?, eval_partial(b, partial)?) {
            (Some(true), _) | (_, Some(true)) => Some(true),
            (Some(false), Some(false)) => Some(false),
            _ => None,
        }),
        Formula::Implies(a, b) => {
            Ok(match (eval_partial(a, partial)?, eval_partial(b, partial)?) {
                (Some(false), _) | (_, Some(true)) => Some(true),
                (Some(true), Some(false)) => Some(false),
                _ => None,
            })
        }
        Formula::Forall(..) | Formula::Exists(..) => Err(PropError::QuantifierPresent),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn f(text: &str) -> Formula {
        parse(text).unwrap().formula
    }

    fn atom(name: &str) -> GroundAtom {
        GroundAtom {
            pred: name.to_owned(),
            args: Vec::new(),
        }
    }

    fn tv(n: i64, d: i64) -> TruthValue {
        TruthValue::new(n, d).unwrap()
    }

    fn counter(verdict: PropVerdict) -> Vec<(String, TruthValue)> {
        match verdict {
            PropVerdict::CounterAssignment(a) => {
                a.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
            }
            other => panic!("expected a counter-assignment, got {other:?}"),
        }
    }

    #[test]
    fn eval_qf_clause_cases() {
        let mut a = Assignment::new();
        a.insert(atom("A"), tv(1, 2));
        a.insert(atom("B"), tv(1, 2));
        assert_eq!(eval_qf(&f("A -> B"), &a).unwrap(), TruthValue::one());
        assert_eq!(eval_qf(&f("A | (A -> bot)"), &a).unwrap(), tv(1, 2));
        assert_eq!(eval_qf(&f("bot"), &a).unwrap(), TruthValue::zero());
    }

    #[test]
    fn eval_qf_reports_missing_atoms() {
        let a = Assignment::new();
        assert!(matches!(
            eval_qf(&f("A"), &a),
            Err(PropError::MissingAtom(_))
        ));
    }

    #[test]
    fn reflexive_implication_is_valid() {
        assert_eq!(
            goedel_valid_infinite(&f("A -> A"), &Caps::default()).unwrap(),
            PropVerdict::Valid
        );
    }

    #[test]
    fn excluded_middle_least_counter_is_one_half() {
        let v = goedel_valid_infinite(&f("A | ~A"), &Caps::default()).unwrap();
        assert_eq!(counter(v), vec![("A".to_owned(), tv(1, 2))]);
    }

    #[test]
    fn prelinearity_is_valid() {
        assert_eq!(
            goedel_valid_infinite(&f("(A -> B) | (B -> A)"), &Caps::default()).unwrap(),
            PropVerdict::Valid
        );
    }

    #[test]
    fn fin_axioms_separate_adjacent_finite_logics() {
        let caps = Caps::default();
        let fin2 = f("(top -> A1) | (A1 -> bot)");
        assert_eq!(goedel_valid_finite(&fin2, 2, &caps).unwrap(), PropVerdict::Valid);
        assert_eq!(
            counter(goedel_valid_finite(&fin2, 3, &caps).unwrap()),
            vec![("A1".to_owned(), tv(1, 2))]
        );

        let fin3 = f("(top -> A1) | (A1 -> A2) | (A2 -> bot)");
        assert_eq!(goedel_valid_finite(&fin3, 3, &caps).unwrap(), PropVerdict::Valid);
        assert_eq!(
            counter(goedel_valid_finite(&fin3, 4, &caps).unwrap()),
            vec![("A1".to_owned(), tv(2, 3)), ("A2".to_owned(), tv(1, 3))]
        );

        for m in [4, 5] {
            assert_eq!(
                goedel_valid_finite(&fin_axiom(m), m, &caps).unwrap(),
                PropVerdict::Valid
            );
        }
        assert_eq!(
            counter(goedel_valid_finite(&fin_axiom(4), 5, &caps).unwrap()),
            vec![
                ("A1".to_owned(), tv(3, 4)),
                ("A2".to_owned(), tv(1, 2)),
                ("A3".to_owned(), tv(1, 4)),
            ]
        );
        assert_eq!(
            counter(goedel_valid_finite(&fin_axiom(5), 6, &caps).unwrap()),
            vec![
                ("A1".to_owned(), tv(4, 5)),
                ("A2".to_owned(), tv(3, 5)),
                ("A3".to_owned(), tv(2, 5)),
                ("A4".to_owned(), tv(1, 5)),
            ]
        );
    }

    #[test]
    fn fin_axiom_builder_matches_concrete_syntax() {
        assert_eq!(fin_axiom(2), f("(top -> A1) | (A1 -> bot)"));
        assert_eq!(
            fin_axiom(4),
            f("(top -> A1) | (A1 -> A2) | (A2 -> A3) | (A3 -> bot)")
        );
    }

    #[test]
    fn excluded_middle_is_classical() {
        assert_eq!(
            goedel_valid_finite(&f("A | ~A"), 2, &Caps::default()).unwrap(),
            PropVerdict::Valid
        );
    }

    #[test]
    fn classical_sat_least_witness() {
        let v = classical_sat(&f("P(c) | Q(c)"), &Caps::default()).unwrap();
        match v {
            PropVerdict::Satisfiable(a) => {
                assert_eq!(
                    a.get(&GroundAtom {
                        pred: "P".into(),
                        args: vec!["c".into()],
                    }),
                    Some(&TruthValue::one())
                );
                assert_eq!(
                    a.get(&GroundAtom {
                        pred: "Q".into(),
                        args: vec!["c".into()],
                    }),
                    Some(&TruthValue::zero())
                );
            }
            other => panic!("expected satisfiable, got {other:?}"),
        }
    }

    #[test]
    fn contradiction_and_negated_excluded_middle_are_unsat() {
        let caps = Caps::default();
        assert_eq!(
            classical_sat(&f("P(c) & ~P(c)"), &caps).unwrap(),
            PropVerdict::Unsatisfiable
        );
        assert_eq!(
            classical_sat(&f("~(A | ~A)"), &caps).unwrap(),
            PropVerdict::Unsatisfiable
        );
    }

    #[test]
    fn atom_cap_is_enforced() {
        let caps = Caps {
            max_prop_atoms: 2,
            ..Caps::default()
        };
        let err = goedel_valid_infinite(&f("A1 & A2 & A3"), &caps).unwrap_err();
        assert!(matches!(err, PropError::Cap(c) if c.site == "goedel_valid atom count"));
    }

    #[test]
    fn assignment_cap_is_enforced() {
        let caps = Caps {
            max_prop_assignments: 10,
            ..Caps::default()
        };
        let err = goedel_valid_infinite(&f("A1 & A2"), &caps).unwrap_err();
        assert!(matches!(err, PropError::Cap(c) if c.required == 16));
    }

    #[test]
    fn ground_atoms_sorted_and_distinct() {
        let atoms = ground_atoms(&f("Q(d) & P(c) & Q(d)")).unwrap();
        let shown: Vec<String> = atoms.iter().map(GroundAtom::to_string).collect();
        assert_eq!(shown, vec!["P(c)", "Q(d)"]);
    }

    #[test]
    fn rejects_non_ground_input() {
        let g = parse("forall x. P(x)").unwrap().formula;
        assert_eq!(ground_atoms(&g), Err(PropError::QuantifierPresent));
        let open = Formula::atom("P", vec![Term::var("x")]);
        assert_eq!(ground_atoms(&open), Err(PropError::NotGround("x".into())));
    }
}
