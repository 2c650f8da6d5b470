//! Top-level decision pipeline for BS sentences.
//!
//! Validity mode handles `∀*∃*` prefixes, 1-satisfiability mode `∃*∀*`
//! prefixes; sentences with at most one quantifier kind fit both. The two
//! modes are not dual in Gödel logics, so neither is derived from the
//! other: each runs its own Skolemization, grounding, and propositional
//! decision, then lifts the propositional witness back to a first-order
//! certificate over the Herbrand universe.
//!
//! Prefixes outside these shapes are rejected instead of rotated into
//! them, because quantifier-shift rules are unsound here.

use thiserror::Error;

use crate::herbrand::{
    expand_conjunction, expand_disjunction, herbrand_universe, GroundError, GroundExpansion,
};
use crate::limits::{CapExceeded, Caps};
use crate::models::{
    check_certificate, enumerate_interpretations, EvalError, Grid, Interpretation, InterpError,
    LogicId, Mode, TruthValue,
};
use crate::propositional::{
    classical_sat, goedel_valid_on_grid, ground_atoms, Assignment, PropError, PropVerdict,
};
use crate::skolem::{skolemize_sat, skolemize_validity, SkolemResult};
use crate::syntax::{
    classify_bs, to_prenex_view, BsShape, Formula, PrenexError, Signature, SignatureError,
};

/// One decision request: what to decide, in which logic.
#[derive(Debug, Clone)]
pub struct Query {
    pub sentence: Formula,
    pub mode: Mode,
    pub logic: LogicId,
}

impl Query {
    pub fn validity(sentence: Formula, logic: LogicId) -> Query {
        Query {
            sentence,
            mode: Mode::Validity,
            logic,
        }
    }

    pub fn sat(sentence: Formula, logic: LogicId) -> Query {
        Query {
            sentence,
            mode: Mode::Sat1,
            logic,
        }
    }
}

/// The decision, with any first-order certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Valid,
    NotValid(Interpretation),
    Sat(Interpretation),
    Unsat,
}

impl Outcome {
    /// Stable lower-case token used in serialized output and corpora.
    pub fn token(&self) -> &'static str {
        match self {
            Outcome::Valid => "valid",
            Outcome::NotValid(_) => "not_valid",
            Outcome::Sat(_) => "sat",
            Outcome::Unsat => "unsat",
        }
    }

    pub fn certificate(&self) -> Option<&Interpretation> {
        match self {
            Outcome::NotValid(i) | Outcome::Sat(i) => Some(i),
            Outcome::Valid | Outcome::Unsat => None,
        }
    }
}

/// Outcome plus the intermediate artifacts that produced it, kept so every
/// verdict can be audited and re-checked without rerunning the pipeline.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub outcome: Outcome,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Default)]
pub struct Provenance {
    pub skolem: Option<SkolemResult>,
    pub ground: Option<GroundExpansion>,
    pub grid: Option<Grid>,
    pub prop_witness: Option<Assignment>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("query mode is {got}, this entry point decides {expected}")]
    ModeMismatch { expected: Mode, got: Mode },
    #[error("{mode} mode does not apply to a sentence with {found}")]
    WrongShape { mode: Mode, found: BsShape },
    #[error(transparent)]
    Prenex(#[from] PrenexError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("Skolemization produced function symbols ({0:?}); no finite grounding exists")]
    SkolemFunctions(Vec<(String, usize)>),
    #[error(transparent)]
    Ground(#[from] GroundError),
    #[error(transparent)]
    Prop(PropError),
    #[error(transparent)]
    Interp(#[from] InterpError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("a grid needs at least 2 points, got {0}")]
    GridTooSmall(usize),
    #[error("the brute-force oracle enumerates a finite truth-value set; pick gm:<m>")]
    OracleNeedsFiniteLogic,
}

impl From<PropError> for DecideError {
    fn from(e: PropError) -> DecideError {
        match e {
            PropError::Cap(c) => DecideError::Cap(c),
            other => DecideError::Prop(other),
        }
    }
}

impl DecideError {
    /// Pipeline stage for diagnostics: one of shape, skolem, ground,
    /// decide, cap. (A parse stage exists upstream of this module.)
    pub fn stage(&self) -> &'static str {
        match self {
            DecideError::ModeMismatch { .. }
            | DecideError::WrongShape { .. }
            | DecideError::Prenex(_) => "shape",
            DecideError::Signature(_) | DecideError::SkolemFunctions(_) => "skolem",
            DecideError::Ground(_) => "ground",
            DecideError::Prop(_)
            | DecideError::Interp(_)
            | DecideError::Eval(_)
            | DecideError::GridTooSmall(_)
            | DecideError::OracleNeedsFiniteLogic => "decide",
            DecideError::Cap(_) => "cap",
        }
    }
}

/// Decides validity of a `∀*∃*` sentence in the requested logic.
///
/// Pipeline: Skolemize the universals to fresh constants, expand the
/// remaining existentials into a ground disjunction over the Herbrand
/// universe, decide the disjunction propositionally, and lift any
/// counter-assignment to a countermodel of the original sentence.
pub fn decide_validity(q: &Query, caps: &Caps) -> Result<Verdict, DecideError> {
    decide_validity_on_grid(q, None, caps)
}

/// `decide_validity` with an explicit grid size, for stability
/// experiments. `None` keeps the default: `(n+2)`-point grid for the
/// infinite-valued logic with `n` ground atoms, m-point grid for `gm:m`.
pub fn decide_validity_on_grid(
    q: &Query,
    grid_points: Option<usize>,
    caps: &Caps,
) -> Result<Verdict, DecideError> {
    if q.mode != Mode::Validity {
        return Err(DecideError::ModeMismatch {
            expected: Mode::Validity,
            got: q.mode,
        });
    }
    let prenex = to_prenex_view(&q.sentence)?;
    let shape = classify_bs(&prenex);
    if !matches!(shape, BsShape::ValidityShape | BsShape::Both) {
        return Err(DecideError::WrongShape {
            mode: Mode::Validity,
            found: shape,
        });
    }
    let sig = Signature::of_formula(&q.sentence)?;
    let sk = skolemize_validity(&prenex, &sig);
    if !sk.introduced_functions.is_empty() {
        return Err(DecideError::SkolemFunctions(sk.introduced_functions));
    }
    let universe = herbrand_universe(&sk.signature);
    let ground = expand_disjunction(&sk.formula, &universe)?;

    let atom_count = ground_atoms(&ground.combined)?.len();
    let default_points = match q.logic {
        LogicId::Infinite => atom_count + 2,
        LogicId::Finite(m) => m as usize,
    };
    let mut notes = Vec::new();
    let points = match grid_points {
        Some(k) if k < 2 => return Err(DecideError::GridTooSmall(k)),
        Some(k) => {
            if k != default_points {
                notes.push(format!(
                    "grid override: {k} points (default {default_points})"
                ));
            }
            k
        }
        None => default_points,
    };
    let grid = Grid::equally_spaced(points);

    let prop = goedel_valid_on_grid(&ground.combined, &grid, caps)?;
    let (outcome, witness) = match prop {
        PropVerdict::Valid => (Outcome::Valid, None),
        PropVerdict::CounterAssignment(a) => {
            let model = lift_assignment(&universe, &sk.signature, &a)?;
            debug_assert_eq!(
                check_certificate(&model, &q.sentence, Mode::Validity),
                Ok(true)
            );
            (Outcome::NotValid(model), Some(a))
        }
        other => unreachable!("validity check returned {other:?}"),
    };
    Ok(Verdict {
        outcome,
        provenance: Provenance {
            skolem: Some(sk),
            ground: Some(ground),
            grid: Some(grid),
            prop_witness: witness,
            notes,
        },
    })
}

/// Decides 1-satisfiability of an `∃*∀*` sentence.
///
/// Pipeline: Skolemize the existentials to fresh constants, expand the
/// remaining universals into a ground conjunction, and run a classical
/// satisfiability check: a sentence of this shape takes value 1 in some
/// interpretation of one Gödel logic exactly when it does in all of them,
/// and exactly when its grounding is classically satisfiable. The logic
/// parameter therefore never changes the verdict.
pub fn decide_1sat(q: &Query, caps: &Caps) -> Result<Verdict, DecideError> {
    if q.mode != Mode::Sat1 {
        return Err(DecideError::ModeMismatch {
            expected: Mode::Sat1,
            got: q.mode,
        });
    }
    let prenex = to_prenex_view(&q.sentence)?;
    let shape = classify_bs(&prenex);
    if !matches!(shape, BsShape::SatShape | BsShape::Both) {
        return Err(DecideError::WrongShape {
            mode: Mode::Sat1,
            found: shape,
        });
    }
    let sig = Signature::of_formula(&q.sentence)?;
    let sk = skolemize_sat(&prenex, &sig);
    if !sk.introduced_functions.is_empty() {
        return Err(DecideError::SkolemFunctions(sk.introduced_functions));
    }
    let universe = herbrand_universe(&sk.signature);
    let ground = expand_conjunction(&sk.formula, &universe)?;

    let prop = classical_sat(&ground.combined, caps)?;
    let (outcome, witness) = match prop {
        PropVerdict::Satisfiable(a) => {
            let model = lift_assignment(&universe, &sk.signature, &a)?;
            debug_assert_eq!(check_certificate(&model, &q.sentence, Mode::Sat1), Ok(true));
            (Outcome::Sat(model), Some(a))
        }
        PropVerdict::Unsatisfiable => (Outcome::Unsat, None),
        other => unreachable!("satisfiability check returned {other:?}"),
    };
    Ok(Verdict {
        outcome,
        provenance: Provenance {
            skolem: Some(sk),
            ground: Some(ground),
            grid: None,
            prop_witness: witness,
            notes: vec!["verdict coincides for all Gödel logics".to_owned()],
        },
    })
}

/// Brute-force validity check of the original, un-Skolemized sentence:
/// evaluates it in every interpretation with domain sizes `1..=max_domain`
/// and truth values on the m-point grid. Independent of the Skolem and
/// Herbrand machinery, which is the point: agreement between this and
/// `decide_validity` is a cross-check of that machinery.
pub fn oracle_validity(
    sentence: &Formula,
    logic: LogicId,
    max_domain: usize,
    caps: &Caps,
) -> Result<Verdict, DecideError> {
    let LogicId::Finite(m) = logic else {
        return Err(DecideError::OracleNeedsFiniteLogic);
    };
    let sig = Signature::of_formula(sentence)?;
    let grid = Grid::for_finite_logic(m);
    let mut provenance = Provenance {
        grid: Some(grid.clone()),
        ..Provenance::default()
    };
    for size in 1..=max_domain {
        for interp in enumerate_interpretations(&sig, size, &grid, caps)? {
            if !interp.evaluate(sentence)?.is_one() {
                provenance
                    .notes
                    .push(format!("countermodel found at domain size {size}"));
                return Ok(Verdict {
                    outcome: Outcome::NotValid(interp),
                    provenance,
                });
            }
        }
    }
    provenance
        .notes
        .push(format!("valid up to domain size {max_domain}"));
    Ok(Verdict {
        outcome: Outcome::Valid,
        provenance,
    })
}

/// Turns a propositional witness into an interpretation over the Herbrand
/// universe: constants denote themselves, atoms take the witness values,
/// atoms the grounding never mentions default to 0 (their value cannot
/// matter).
fn lift_assignment(
    universe: &[String],
    sig: &Signature,
    assignment: &Assignment,
) -> Result<Interpretation, DecideError> {
    let mut interp = Interpretation::new(universe.to_vec())?;
    for c in sig.constants() {
        interp.set_constant(c, c)?;
    }
    let n = universe.len();
    for (pred, arity) in sig.predicates() {
        let mut values = vec![TruthValue::zero(); n.pow(arity as u32)];
        for (atom, &v) in assignment {
            if atom.pred != pred {
                continue;
            }
            let mut idx = 0usize;
            for name in &atom.args {
                let e = interp
                    .element_index(name)
                    .ok_or_else(|| EvalError::UnknownElement(name.clone()))?;
                idx = idx * n + e;
            }
            values[idx] = v;
        }
        interp.add_predicate(pred, arity, values)?;
    }
    Ok(interp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn sentence(text: &str) -> Formula {
        parse(text).unwrap().formula
    }

    fn tv(n: i64, d: i64) -> TruthValue {
        TruthValue::new(n, d).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn excluded_middle_pipeline_produces_checked_countermodel() {
        let f = sentence("forall x. P(x) | ~P(x)");
        let q = Query::validity(f.clone(), LogicId::Infinite);
        let v = decide_validity(&q, &caps()).unwrap();
        let Outcome::NotValid(model) = &v.outcome else {
            panic!("expected NotValid, got {:?}", v.outcome);
        };
        assert_eq!(model.domain(), ["_skV0"]);
        assert_eq!(model.atom_value("P", &[0]).unwrap(), tv(1, 2));
        assert_eq!(check_certificate(model, &f, Mode::Validity), Ok(true));

        let classical = Query::validity(f, LogicId::Finite(2));
        assert_eq!(
            decide_validity(&classical, &caps()).unwrap().outcome,
            Outcome::Valid
        );
    }

    #[test]
    fn reflexive_instance_is_valid() {
        let q = Query::validity(
            sentence("forall x. exists y. (P(x) -> P(y))"),
            LogicId::Infinite,
        );
        let v = decide_validity(&q, &caps()).unwrap();
        assert_eq!(v.outcome, Outcome::Valid);
        let ground = v.provenance.ground.unwrap();
        assert_eq!(ground.universe, ["_skV0"]);
        assert_eq!(ground.instances.len(), 1);
    }

    #[test]
    fn propositional_fin_axiom_splits_finite_logics() {
        let f = sentence("(top -> A1) | (A1 -> bot)");
        let at2 = Query::validity(f.clone(), LogicId::Finite(2));
        assert_eq!(
            decide_validity(&at2, &caps()).unwrap().outcome,
            Outcome::Valid
        );

        let at3 = Query::validity(f.clone(), LogicId::Finite(3));
        let v = decide_validity(&at3, &caps()).unwrap();
        let Outcome::NotValid(model) = &v.outcome else {
            panic!("expected NotValid");
        };
        assert_eq!(model.domain(), ["_h0"]);
        assert_eq!(model.atom_value("A1", &[]).unwrap(), tv(1, 2));
        assert_eq!(check_certificate(model, &f, Mode::Validity), Ok(true));
    }

    #[test]
    fn validity_mode_rejects_exists_forall_prefix() {
        let q = Query::validity(
            sentence("exists y. forall x. (P(y) -> P(x))"),
            LogicId::Infinite,
        );
        let err = decide_validity(&q, &caps()).unwrap_err();
        assert!(matches!(err, DecideError::WrongShape { .. }));
        assert_eq!(err.stage(), "shape");
    }

    #[test]
    fn non_bs_prefix_is_rejected_in_both_modes() {
        let f = sentence("forall x. exists y. forall z. R(x, y, z)");
        let err = decide_validity(&Query::validity(f.clone(), LogicId::Infinite), &caps())
            .unwrap_err();
        assert!(matches!(
            err,
            DecideError::WrongShape {
                found: BsShape::Neither,
                ..
            }
        ));
        let err = decide_1sat(&Query::sat(f, LogicId::Infinite), &caps()).unwrap_err();
        assert!(matches!(err, DecideError::WrongShape { .. }));
    }

    #[test]
    fn mode_mismatch_is_caught_before_shape() {
        let q = Query::sat(sentence("P(c)"), LogicId::Infinite);
        let err = decide_validity(&q, &caps()).unwrap_err();
        assert!(matches!(err, DecideError::ModeMismatch { .. }));
    }

    #[test]
    fn contradictory_sat_query_is_unsat() {
        let q = Query::sat(
            sentence("exists x. forall y. (P(x) & ~P(y))"),
            LogicId::Infinite,
        );
        let v = decide_1sat(&q, &caps()).unwrap();
        assert_eq!(v.outcome, Outcome::Unsat);
        assert_eq!(
            v.provenance.notes,
            ["verdict coincides for all Gödel logics"]
        );
    }

    #[test]
    fn simple_existential_has_two_valued_model() {
        let f = sentence("exists x. P(x)");
        let q = Query::sat(f.clone(), LogicId::Finite(4));
        let v = decide_1sat(&q, &caps()).unwrap();
        let Outcome::Sat(model) = &v.outcome else {
            panic!("expected Sat");
        };
        assert_eq!(model.domain(), ["_skS0"]);
        assert_eq!(model.atom_value("P", &[0]).unwrap(), TruthValue::one());
        assert_eq!(check_certificate(model, &f, Mode::Sat1), Ok(true));
    }

    #[test]
    fn drinker_shape_is_satisfiable() {
        let q = Query::sat(
            sentence("exists x. forall y. (P(x) -> P(y))"),
            LogicId::Finite(2),
        );
        let v = decide_1sat(&q, &caps()).unwrap();
        assert!(matches!(v.outcome, Outcome::Sat(_)));
    }

    #[test]
    fn oracle_finds_least_finite_countermodel() {
        let f = sentence("forall x. P(x) | ~P(x)");
        let v = oracle_validity(&f, LogicId::Finite(3), 2, &caps()).unwrap();
        let Outcome::NotValid(model) = &v.outcome else {
            panic!("expected NotValid");
        };
        assert_eq!(model.domain(), ["d0"]);
        assert_eq!(model.atom_value("P", &[0]).unwrap(), tv(1, 2));
    }

    #[test]
    fn oracle_confirms_reflexive_validity_up_to_bound() {
        let f = sentence("forall x. exists y. (P(x) -> P(y))");
        let v = oracle_validity(&f, LogicId::Finite(3), 2, &caps()).unwrap();
        assert_eq!(v.outcome, Outcome::Valid);
        assert_eq!(v.provenance.notes, ["valid up to domain size 2"]);
    }

    #[test]
    fn oracle_rejects_infinite_logic() {
        let f = sentence("P(c)");
        let err = oracle_validity(&f, LogicId::Infinite, 1, &caps()).unwrap_err();
        assert_eq!(err, DecideError::OracleNeedsFiniteLogic);
        assert_eq!(err.stage(), "decide");
    }

    #[test]
    fn grid_override_keeps_excluded_middle_not_valid() {
        let q = Query::validity(sentence("forall x. P(x) | ~P(x)"), LogicId::Infinite);
        for points in [3, 4, 7] {
            let v = decide_validity_on_grid(&q, Some(points), &caps()).unwrap();
            assert!(matches!(v.outcome, Outcome::NotValid(_)), "grid {points}");
        }
        let err = decide_validity_on_grid(&q, Some(1), &caps()).unwrap_err();
        assert_eq!(err, DecideError::GridTooSmall(1));
    }

    #[test]
    fn cap_errors_surface_with_cap_stage() {
        let tight = Caps {
            max_prop_atoms: 1,
            ..Caps::default()
        };
        let q = Query::validity(sentence("P(c) | Q(c)"), LogicId::Infinite);
        let err = decide_validity(&q, &tight).unwrap_err();
        assert_eq!(err.stage(), "cap");
    }
}
