//! Executable law suites: every module-level invariant, run against
//! seeded generators and reported one line per law.
//!
//! Policy: an instance that exceeds a resource cap is skipped and counted,
//! never silently dropped and never a failure. A law fails only on a real
//! counterexample (or when the generator cannot reach its quota, which
//! would make the suite vacuous).

pub mod gen;

use std::collections::{BTreeMap, BTreeSet};

use crate::decide::{
    decide_1sat, decide_validity, decide_validity_on_grid, oracle_validity, DecideError, Outcome,
    Query,
};
use crate::herbrand::{
    expand_conjunction, expand_disjunction, herbrand_universe, GroundError, GroundExpansion,
};
use crate::limits::Caps;
use crate::models::{
    check_certificate, enumerate_interpretations, interpretation_count, Grid, LogicId, Mode,
    TruthValue,
};
use crate::propositional::{
    classical_sat, eval_qf, goedel_valid_finite, goedel_valid_infinite, goedel_valid_on_grid,
    ground_atoms, GroundAtom, PropError, PropVerdict,
};
use crate::skolem::{skolemize_sat, skolemize_validity, SkolemResult, SkolemStep};
use crate::syntax::{
    annotate_polarity, classify_bs, parse, to_prenex_view, Formula, PrenexFormula, Quantifier,
    Signature, Term,
};
use gen::Gen;

/// Default generator seed for reproducible suite runs.
pub const DEFAULT_SEED: u64 = 42;

const STREAM_ROUND_TRIP: u64 = 1;
const STREAM_POLARITY: u64 = 2;
const STREAM_SHAPE: u64 = 3;
const STREAM_ORDER_INV: u64 = 4;
const STREAM_GLUING: u64 = 5;
const STREAM_MONOTONE: u64 = 6;
const STREAM_GRID_STAB: u64 = 7;
const STREAM_HIERARCHY: u64 = 8;
const STREAM_LIMIT: u64 = 9;
const STREAM_CLASSICAL: u64 = 10;
const STREAM_LEAST: u64 = 11;
const STREAM_HERBRAND_COUNTS: u64 = 12;
const STREAM_BRIDGE: u64 = 13;
const STREAM_SKOLEM_SHAPES: u64 = 14;
const STREAM_SKOLEM_ORACLE: u64 = 15;
const STREAM_SAT_COINCIDENCE: u64 = 16;
const STREAM_COINCIDENCE: u64 = 17;
const STREAM_CERTIFICATES: u64 = 18;

/// Outcome of one law suite.
#[derive(Debug, Clone)]
pub struct LawReport {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub skipped: u64,
    /// First counterexample, when the law failed.
    pub detail: Option<String>,
}

struct Tally {
    name: &'static str,
    cases: u64,
    skipped: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally {
            name,
            cases: 0,
            skipped: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.cases += 1;
        if self.failure.is_none() {
            self.failure = Some(detail);
        }
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Marks the whole suite vacuous; used when a generator misses quota.
    fn require_quota(&mut self, got: usize, want: usize) {
        if got < want && self.failure.is_none() {
            self.failure = Some(format!("generator produced only {got} of {want} instances"));
        }
    }

    fn report(self) -> LawReport {
        LawReport {
            name: self.name,
            passed: self.failure.is_none(),
            cases: self.cases,
            skipped: self.skipped,
            detail: self.failure,
        }
    }
}

/// Runs every law with one seed; report order is fixed.
pub fn run_all(seed: u64, caps: &Caps) -> Vec<LawReport> {
    vec![
        syntax_round_trip(seed),
        syntax_polarity_flip(seed),
        syntax_shape_matrix_independent(seed),
        models_order_invariance(seed, caps),
        models_gluing_exhaustive(seed, caps),
        models_monotone_containment(seed, caps),
        prop_grid_stability(seed, caps),
        prop_hierarchy(seed, caps),
        prop_infinite_as_limit(seed, caps),
        prop_classical_extremes(seed, caps),
        prop_least_witness(seed, caps),
        herbrand_counts(seed),
        herbrand_validity_bridge(seed, caps),
        skolem_shapes(seed),
        skolem_equivalence_oracle(seed, caps),
        sat_coincidence(seed, caps),
        infinite_coincidence_grids(seed, caps),
        certificate_soundness(seed, caps),
        finite_containment(seed, caps),
    ]
}

fn pv_valid(v: &PropVerdict) -> bool {
    matches!(v, PropVerdict::Valid)
}

fn outcome_valid(o: &Outcome) -> bool {
    matches!(o, Outcome::Valid)
}

fn tv(n: i64, d: i64) -> TruthValue {
    TruthValue::new(n, d).unwrap()
}

fn sig_p1c() -> Signature {
    let mut sig = Signature::new();
    sig.declare_predicate("P", 1).unwrap();
    sig.declare_constant("c").unwrap();
    sig
}

/// Cap-aware unwrap: cap overruns are skips, everything else is a
/// counterexample.
fn decide_or_skip<T>(t: &mut Tally, r: Result<T, DecideError>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) if e.stage() == "cap" => {
            t.skip();
            None
        }
        Err(e) => {
            t.fail(format!("pipeline error: {e}"));
            None
        }
    }
}

fn prop_or_skip<T>(t: &mut Tally, r: Result<T, PropError>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(PropError::Cap(_)) => {
            t.skip();
            None
        }
        Err(e) => {
            t.fail(format!("propositional error: {e}"));
            None
        }
    }
}

fn syntax_round_trip(seed: u64) -> LawReport {
    let mut t = Tally::new("syntax_round_trip");
    let mut g = Gen::new(seed, STREAM_ROUND_TRIP);
    for _ in 0..300 {
        let f = g.closed_formula(5);
        let text = f.to_string();
        match parse(&text) {
            Ok(parsed) => t.check(parsed.formula == f, || {
                format!("{text} reparsed as {}", parsed.formula)
            }),
            Err(e) => t.fail(format!("{text} failed to reparse: {e}")),
        }
    }
    t.report()
}

fn syntax_polarity_flip(seed: u64) -> LawReport {
    let mut t = Tally::new("syntax_polarity_flip");
    let mut g = Gen::new(seed, STREAM_POLARITY);
    for _ in 0..200 {
        let f = g.closed_formula(5);
        let plain = annotate_polarity(&f);
        let negated = annotate_polarity(&Formula::not(f.clone()));
        let aligned = plain.len() == negated.len()
            && plain.iter().zip(&negated).all(|(a, b)| {
                a.quantifier == b.quantifier
                    && a.var == b.var
                    && b.position == a.position.flip()
                    && a.strength != b.strength
            });
        t.check(aligned, || format!("negating {f} did not flip every site"));
    }
    t.report()
}

fn syntax_shape_matrix_independent(seed: u64) -> LawReport {
    let mut t = Tally::new("syntax_shape_matrix_independent");
    let mut g = Gen::new(seed, STREAM_SHAPE);
    for _ in 0..200 {
        let f = g.prenex_sentence(4);
        let view = to_prenex_view(&f).unwrap();
        let shape = classify_bs(&view);
        let vars: Vec<String> = view.prefix.iter().map(|(_, v)| v.clone()).collect();
        let replaced = PrenexFormula {
            prefix: view.prefix.clone(),
            matrix: g.replacement_matrix(&vars),
        };
        t.check(classify_bs(&replaced) == shape, || {
            format!("shape of {f} changed when its matrix was replaced")
        });
    }
    t.report()
}

fn models_order_invariance(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("models_order_invariance");
    let mut g = Gen::new(seed, STREAM_ORDER_INV);
    let formulas: Vec<Formula> = (0..40).map(|_| g.gluing_formula()).collect();
    let pairs = [
        (
            Grid::equally_spaced(3),
            Grid::new(vec![tv(0, 1), tv(2, 3), tv(1, 1)]).unwrap(),
        ),
        (
            Grid::equally_spaced(4),
            Grid::new(vec![tv(0, 1), tv(1, 5), tv(1, 2), tv(1, 1)]).unwrap(),
        ),
    ];
    let sig = sig_p1c();
    for (from, to) in &pairs {
        for n in 1..=2 {
            let iter = match enumerate_interpretations(&sig, n, from, caps) {
                Ok(it) => it,
                Err(_) => {
                    t.skip();
                    continue;
                }
            };
            for i in iter {
                let moved = i.transport(from, to).unwrap();
                for f in &formulas {
                    let v = i.evaluate(f).unwrap();
                    let expected = to.points()[from.position(v).unwrap()];
                    let got = moved.evaluate(f).unwrap();
                    t.check(got == expected, || {
                        format!("transporting {i} changed {f} from {v} to {got}, expected {expected}")
                    });
                }
            }
        }
    }
    t.report()
}

/// The gluing contract checked exhaustively: signature `{P/1, c}`, domain
/// sizes 1-2, grid sizes 3-4, every grid point `ω < 1`, 80 generated
/// formulas of depth ≤ 4. Over 10^4 (interpretation, ω, formula) cases.
fn models_gluing_exhaustive(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("models_gluing_exhaustive");
    let mut g = Gen::new(seed, STREAM_GLUING);
    let formulas: Vec<Formula> = (0..80).map(|_| g.gluing_formula()).collect();
    let sig = sig_p1c();
    for grid_size in [3, 4] {
        let grid = Grid::equally_spaced(grid_size);
        let omegas: Vec<TruthValue> = grid
            .points()
            .iter()
            .copied()
            .filter(|v| !v.is_one())
            .collect();
        for n in 1..=2 {
            let iter = match enumerate_interpretations(&sig, n, &grid, caps) {
                Ok(it) => it,
                Err(_) => {
                    t.skip();
                    continue;
                }
            };
            for i in iter {
                for &omega in &omegas {
                    let glued = i.glue(omega).unwrap();
                    for f in &formulas {
                        let before = i.evaluate(f).unwrap();
                        let after = glued.evaluate(f).unwrap();
                        let expected = if before <= omega {
                            before
                        } else {
                            TruthValue::one()
                        };
                        t.check(after == expected, || {
                            format!(
                                "gluing {i} at ω={omega}: {f} went {before} -> {after}, expected {expected}"
                            )
                        });
                    }
                }
            }
        }
    }
    t.report()
}

fn models_monotone_containment(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("models_monotone_containment");
    let mut g = Gen::new(seed, STREAM_MONOTONE);
    let formulas: Vec<Formula> = (0..60).map(|_| g.gluing_formula()).collect();
    let sig = sig_p1c();
    // Coarse grid ⊆ fine grid pointwise: (points−1) divides evenly.
    for (small, big) in [(2, 3), (3, 5), (2, 5)] {
        let small_grid = Grid::equally_spaced(small);
        let big_grid = Grid::equally_spaced(big);
        for f in &formulas {
            let valid_big = valid_on_grid_bounded(&sig, f, &big_grid, 2, caps);
            let valid_small = valid_on_grid_bounded(&sig, f, &small_grid, 2, caps);
            let (Some(vb), Some(vs)) = (valid_big, valid_small) else {
                t.skip();
                continue;
            };
            t.check(!vb || vs, || {
                format!("{f} valid over the {big}-point grid but not over the {small}-point grid")
            });
        }
    }
    t.report()
}

fn valid_on_grid_bounded(
    sig: &Signature,
    f: &Formula,
    grid: &Grid,
    max_domain: usize,
    caps: &Caps,
) -> Option<bool> {
    for n in 1..=max_domain {
        for i in enumerate_interpretations(sig, n, grid, caps).ok()? {
            if !i.evaluate(f).ok()?.is_one() {
                return Some(false);
            }
        }
    }
    Some(true)
}

fn prop_grid_stability(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("prop_grid_stability");
    let mut g = Gen::new(seed, STREAM_GRID_STAB);
    for _ in 0..250 {
        let f = g.ground_formula(4, 5);
        let n = ground_atoms(&f).unwrap().len();
        let Some(v_default) = prop_or_skip(&mut t, goedel_valid_infinite(&f, caps)) else {
            continue;
        };
        let mut agree = Some(true);
        for points in [n + 3, (2 * n + 2).max(2)] {
            match prop_or_skip(&mut t, goedel_valid_on_grid(&f, &Grid::equally_spaced(points), caps))
            {
                Some(v) => {
                    if pv_valid(&v) != pv_valid(&v_default) {
                        agree = Some(false);
                        break;
                    }
                }
                None => {
                    agree = None;
                    break;
                }
            }
        }
        if let Some(agree) = agree {
            t.check(agree, || {
                format!("{f}: verdict changed when the grid was enlarged")
            });
        }
    }
    t.report()
}

fn prop_hierarchy(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("prop_hierarchy");
    let mut g = Gen::new(seed, STREAM_HIERARCHY);
    for _ in 0..250 {
        let f = g.ground_formula(4, 5);
        let valid: Vec<bool> = (2..=6)
            .map(|m| pv_valid(&goedel_valid_finite(&f, m, caps).unwrap()))
            .collect();
        let monotone = valid.windows(2).all(|w| !w[1] || w[0]);
        t.check(monotone, || {
            format!("{f}: valid at some m+1 but not at m (validity by m: {valid:?})")
        });
    }
    t.report()
}

fn prop_infinite_as_limit(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("prop_infinite_as_limit");
    let mut g = Gen::new(seed, STREAM_LIMIT);
    for _ in 0..200 {
        let f = g.ground_formula(4, 5);
        let n = ground_atoms(&f).unwrap().len() as u32;
        let inf = pv_valid(&goedel_valid_infinite(&f, caps).unwrap());
        let all_fin = (2..=n + 2).all(|m| pv_valid(&goedel_valid_finite(&f, m, caps).unwrap()));
        t.check(inf == all_fin, || {
            format!("{f}: infinite-valued verdict {inf} but finite verdicts up to {} give {all_fin}", n + 2)
        });
    }
    t.report()
}

fn prop_classical_extremes(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("prop_classical_extremes");
    let mut g = Gen::new(seed, STREAM_CLASSICAL);
    for _ in 0..250 {
        let f = g.ground_formula(4, 5);
        let two = goedel_valid_finite(&f, 2, caps).unwrap();
        t.check(pv_valid(&two) == bool_tautology(&f), || {
            format!("{f}: two-valued verdict disagrees with truth-table tautology check")
        });
        for verdict in [
            two,
            goedel_valid_finite(&f, 3, caps).unwrap(),
            goedel_valid_infinite(&f, caps).unwrap(),
        ] {
            if let PropVerdict::CounterAssignment(a) = verdict {
                let v = eval_qf(&f, &a).unwrap();
                t.check(!v.is_one(), || {
                    format!("{f}: counter-assignment re-evaluates to 1")
                });
            }
        }
    }
    t.report()
}

/// Independent two-valued checker: plain booleans, no rational arithmetic.
fn bool_tautology(f: &Formula) -> bool {
    let atoms = ground_atoms(f).unwrap();
    debug_assert!(atoms.len() < 32);
    (0u32..1 << atoms.len()).all(|mask| {
        let vals: BTreeMap<GroundAtom, bool> = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), mask >> i & 1 == 1))
            .collect();
        bool_eval(f, &vals)
    })
}

fn bool_eval(f: &Formula, vals: &BTreeMap<GroundAtom, bool>) -> bool {
    match f {
        Formula::Atom(pred, args) => {
            let key = GroundAtom {
                pred: pred.clone(),
                args: args
                    .iter()
                    .map(|a| match a {
                        Term::Const(c) => c.clone(),
                        other => panic!("non-ground term {other:?}"),
                    })
                    .collect(),
            };
            vals[&key]
        }
        Formula::Bottom => false,
        Formula::And(a, b) => bool_eval(a, vals) && bool_eval(b, vals),
        Formula::Or(a, b) => bool_eval(a, vals) || bool_eval(b, vals),
        Formula::Implies(a, b) => !bool_eval(a, vals) || bool_eval(b, vals),
        Formula::Forall(..) | Formula::Exists(..) => panic!("quantifier in ground formula"),
    }
}

fn prop_least_witness(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("prop_least_witness");
    let mut g = Gen::new(seed, STREAM_LEAST);
    for _ in 0..150 {
        let f = g.ground_formula(3, 4);
        let first = goedel_valid_infinite(&f, caps).unwrap();
        let second = goedel_valid_infinite(&f, caps).unwrap();
        t.check(first == second, || format!("{f}: verdict not deterministic"));
        let PropVerdict::CounterAssignment(a) = first else {
            continue;
        };
        let atoms = ground_atoms(&f).unwrap();
        let grid = Grid::equally_spaced(atoms.len() + 2);
        let target: Vec<usize> = atoms
            .iter()
            .map(|atom| grid.position(a[atom]).unwrap())
            .collect();
        // Replay the enumeration up to the witness: everything before it
        // must evaluate to 1.
        let mut digits = vec![0usize; atoms.len()];
        let mut least = true;
        while digits < target {
            let assignment = atoms
                .iter()
                .zip(&digits)
                .map(|(atom, &d)| (atom.clone(), grid.points()[d]))
                .collect();
            if !eval_qf(&f, &assignment).unwrap().is_one() {
                least = false;
                break;
            }
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < grid.len() {
                    break;
                }
                *d = 0;
            }
        }
        t.check(least, || {
            format!("{f}: an earlier assignment than the reported witness already falsifies it")
        });
    }
    t.report()
}

fn herbrand_counts(seed: u64) -> LawReport {
    let mut t = Tally::new("herbrand_counts");
    let mut g = Gen::new(seed, STREAM_HERBRAND_COUNTS);
    let renames: BTreeMap<&str, &str> = [("c", "e0"), ("d", "e1")].into();
    for i in 0..150 {
        let kind = if i % 2 == 0 {
            Quantifier::Forall
        } else {
            Quantifier::Exists
        };
        let f = g.single_block_sentence(kind);
        let view = to_prenex_view(&f).unwrap();
        let sig = Signature::of_formula(&f).unwrap();
        let universe = herbrand_universe(&sig);
        let expand: fn(&PrenexFormula, &[String]) -> Result<GroundExpansion, GroundError> =
            match kind {
                Quantifier::Forall => expand_conjunction,
                Quantifier::Exists => expand_disjunction,
            };
        let exp = expand(&view, &universe).unwrap();

        let want = universe.len().pow(view.prefix.len() as u32);
        t.check(exp.instances.len() == want, || {
            format!("{f}: {} instances, expected {want}", exp.instances.len())
        });

        let union: BTreeSet<GroundAtom> = exp
            .instances
            .iter()
            .flat_map(|inst| ground_atoms(&inst.instance).unwrap())
            .collect();
        let combined: BTreeSet<GroundAtom> =
            ground_atoms(&exp.combined).unwrap().into_iter().collect();
        t.check(union == combined, || {
            format!("{f}: combined atom set differs from the union of instance atoms")
        });

        let f2 = rename_consts(&f, &renames);
        let sig2 = Signature::of_formula(&f2).unwrap();
        let exp2 = expand(&to_prenex_view(&f2).unwrap(), &herbrand_universe(&sig2)).unwrap();
        t.check(exp2.combined == rename_consts(&exp.combined, &renames), || {
            format!("{f}: expansion does not commute with constant renaming")
        });
    }
    t.report()
}

fn rename_consts(f: &Formula, map: &BTreeMap<&str, &str>) -> Formula {
    fn term(t: &Term, map: &BTreeMap<&str, &str>) -> Term {
        match t {
            Term::Const(c) => Term::constant(map.get(c.as_str()).copied().unwrap_or(c.as_str())),
            Term::Var(v) => Term::var(v.clone()),
            Term::App(name, args) => {
                Term::App(name.clone(), args.iter().map(|a| term(a, map)).collect())
            }
        }
    }
    match f {
        Formula::Atom(p, args) => {
            Formula::Atom(p.clone(), args.iter().map(|a| term(a, map)).collect())
        }
        Formula::Bottom => Formula::Bottom,
        Formula::And(a, b) => Formula::and(rename_consts(a, map), rename_consts(b, map)),
        Formula::Or(a, b) => Formula::or(rename_consts(a, map), rename_consts(b, map)),
        Formula::Implies(a, b) => Formula::implies(rename_consts(a, map), rename_consts(b, map)),
        Formula::Forall(v, b) => Formula::forall(v.clone(), rename_consts(b, map)),
        Formula::Exists(v, b) => Formula::exists(v.clone(), rename_consts(b, map)),
    }
}

/// For `∃*` sentences over constants, propositional validity of the ground
/// disjunction must coincide with bounded first-order enumeration of the
/// sentence itself on the matching grid.
fn herbrand_validity_bridge(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("herbrand_validity_bridge");
    let mut g = Gen::new(seed, STREAM_BRIDGE);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 4000 {
        attempts += 1;
        let f = g.single_block_sentence(Quantifier::Exists);
        let sig = Signature::of_formula(&f).unwrap();
        let universe = herbrand_universe(&sig);
        let exp = expand_disjunction(&to_prenex_view(&f).unwrap(), &universe).unwrap();
        let n = ground_atoms(&exp.combined).unwrap().len();
        if n > 5 {
            continue;
        }
        let m = (n + 2) as u32;
        let grid = Grid::for_finite_logic(m);
        let work: u128 = (1..=universe.len())
            .map(|s| interpretation_count(&sig, s, &grid))
            .sum();
        if work > 20_000 {
            continue;
        }
        accepted += 1;
        let prop = pv_valid(&goedel_valid_on_grid(&exp.combined, &grid, caps).unwrap());
        let oracle = oracle_validity(&f, LogicId::Finite(m), universe.len(), caps).unwrap();
        t.check(prop == outcome_valid(&oracle.outcome), || {
            format!(
                "{f}: ground disjunction validity {prop} vs first-order enumeration {}",
                outcome_valid(&oracle.outcome)
            )
        });
    }
    t.require_quota(accepted, 100);
    t.report()
}

fn skolem_shapes(seed: u64) -> LawReport {
    let mut t = Tally::new("skolem_shapes");
    let mut g = Gen::new(seed, STREAM_SKOLEM_SHAPES);
    for i in 0..200 {
        // Constants-only holds for the matching mode: the mismatched
        // direction meets strong quantifiers under weak ones and rightly
        // produces Skolem functions.
        let (f, const_only_validity, const_only_sat) = match i % 3 {
            0 => (g.validity_sentence(), true, false),
            1 => (g.sat_sentence(), false, true),
            _ => (g.prenex_sentence(4), false, false),
        };
        let view = to_prenex_view(&f).unwrap();
        let sig = Signature::of_formula(&f).unwrap();
        for (sk, weak_kind, check_constant_only) in [
            (
                skolemize_validity(&view, &sig),
                Quantifier::Exists,
                const_only_validity,
            ),
            (
                skolemize_sat(&view, &sig),
                Quantifier::Forall,
                const_only_sat,
            ),
        ] {
            let prefix_ok = sk.formula.prefix_kinds().iter().all(|&q| q == weak_kind);
            t.check(prefix_ok, || {
                format!("{f}: Skolemized prefix retains a strong quantifier")
            });
            t.check(mapping_consistent(&view, &sk, weak_kind), || {
                format!("{f}: Skolem mapping disagrees with the prefix walk")
            });
            let names: BTreeSet<&String> = sk.introduced_constants.iter().collect();
            let fresh = names.len() == sk.introduced_constants.len()
                && sk.introduced_constants.iter().all(|n| !sig.has_constant(n));
            t.check(fresh, || format!("{f}: Skolem constants are not fresh"));
            if check_constant_only {
                t.check(sk.introduced_functions.is_empty(), || {
                    format!("{f}: BS-shaped input produced Skolem functions")
                });
            }
        }
    }
    t.report()
}

/// Replays the prefix walk: strong quantifiers become constants until a
/// weak one is seen, then functions of exactly the preceding weak vars.
fn mapping_consistent(view: &PrenexFormula, sk: &SkolemResult, weak_kind: Quantifier) -> bool {
    if sk.mapping.len() != view.prefix.len() {
        return false;
    }
    let mut weak_so_far: Vec<String> = Vec::new();
    for ((q, var), step) in view.prefix.iter().zip(&sk.mapping) {
        let ok = if *q == weak_kind {
            weak_so_far.push(var.clone());
            matches!(step, SkolemStep::Kept { quantifier, var: v } if quantifier == q && v == var)
        } else if weak_so_far.is_empty() {
            matches!(step, SkolemStep::Constant { quantifier, var: v, .. } if quantifier == q && v == var)
        } else {
            matches!(step, SkolemStep::Function { quantifier, var: v, args, .. }
                if quantifier == q && v == var && *args == weak_so_far)
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Criterion: ≥ 200 `∀⁺∃⁺` sentences where the full pipeline and the
/// brute-force oracle agree at max_domain = #Herbrand constants, in the
/// 3- and 4-valued logics.
fn skolem_equivalence_oracle(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("skolem_equivalence_oracle");
    let mut g = Gen::new(seed, STREAM_SKOLEM_ORACLE);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 200 && attempts < 8000 {
        attempts += 1;
        let f = g.validity_sentence();
        let Some(hc) = oracle_budget_ok(&f, 10_000) else {
            continue;
        };
        accepted += 1;
        for m in [3u32, 4] {
            let q = Query::validity(f.clone(), LogicId::Finite(m));
            let (Some(dv), Some(ov)) = (
                decide_or_skip(&mut t, decide_validity(&q, caps)),
                decide_or_skip(&mut t, oracle_validity(&f, LogicId::Finite(m), hc, caps)),
            ) else {
                continue;
            };
            t.check(
                outcome_valid(&dv.outcome) == outcome_valid(&ov.outcome),
                || {
                    format!(
                        "{f} at m={m}: pipeline {} vs oracle {}",
                        dv.outcome.token(),
                        ov.outcome.token()
                    )
                },
            );
            for v in [&dv, &ov] {
                if let Outcome::NotValid(cert) = &v.outcome {
                    t.check(
                        check_certificate(cert, &f, Mode::Validity) == Ok(true),
                        || format!("{f} at m={m}: countermodel fails the certificate check"),
                    );
                }
            }
        }
    }
    t.require_quota(accepted, 200);
    t.report()
}

/// Herbrand-constant count and total oracle work for a `∀⁺∃⁺` sentence;
/// `None` when the sentence is over budget.
fn oracle_budget_ok(f: &Formula, budget: u128) -> Option<usize> {
    let view = to_prenex_view(f).ok()?;
    let sig = Signature::of_formula(f).ok()?;
    let n_forall = view
        .prefix
        .iter()
        .filter(|(q, _)| *q == Quantifier::Forall)
        .count();
    let hc = (sig.constant_count() + n_forall).max(1);
    let atoms: usize = sig.predicates().map(|(_, a)| hc.pow(a as u32)).sum();
    if atoms > 12 {
        return None;
    }
    let mut work: u128 = 0;
    for m in [3u32, 4] {
        let grid = Grid::for_finite_logic(m);
        for s in 1..=hc {
            work = work.saturating_add(interpretation_count(&sig, s, &grid));
        }
    }
    (work <= budget).then_some(hc)
}

/// Criterion: ≥ 200 `∃⁺∀⁺` sentences where 1-sat verdicts agree across
/// gm:2, gm:5, and the infinite-valued logic, and equal classical
/// satisfiability of the grounding.
fn sat_coincidence(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("sat_coincidence");
    let mut g = Gen::new(seed, STREAM_SAT_COINCIDENCE);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 200 && attempts < 8000 {
        attempts += 1;
        let f = g.sat_sentence();
        let view = to_prenex_view(&f).unwrap();
        let sig = Signature::of_formula(&f).unwrap();
        let n_exists = view
            .prefix
            .iter()
            .filter(|(q, _)| *q == Quantifier::Exists)
            .count();
        let hc = (sig.constant_count() + n_exists).max(1);
        let atoms: usize = sig.predicates().map(|(_, a)| hc.pow(a as u32)).sum();
        if atoms > 14 {
            continue;
        }
        accepted += 1;
        let logics = [LogicId::Finite(2), LogicId::Finite(5), LogicId::Infinite];
        let verdicts: Vec<_> = logics
            .iter()
            .map(|&l| decide_1sat(&Query::sat(f.clone(), l), caps).unwrap())
            .collect();
        let tokens: BTreeSet<&str> = verdicts.iter().map(|v| v.outcome.token()).collect();
        t.check(tokens.len() == 1, || {
            format!("{f}: 1-sat verdicts differ across logics: {tokens:?}")
        });
        let ground = verdicts[0].provenance.ground.as_ref().unwrap();
        let classical = classical_sat(&ground.combined, caps).unwrap();
        let classical_sat_ok = matches!(classical, PropVerdict::Satisfiable(_));
        t.check(
            classical_sat_ok == matches!(verdicts[0].outcome, Outcome::Sat(_)),
            || format!("{f}: pipeline disagrees with classical grounding satisfiability"),
        );
        for v in &verdicts {
            if let Outcome::Sat(model) = &v.outcome {
                t.check(check_certificate(model, &f, Mode::Sat1) == Ok(true), || {
                    format!("{f}: 1-sat model fails the certificate check")
                });
            }
        }
    }
    t.require_quota(accepted, 200);
    t.report()
}

/// The shared sentence corpus for the infinite-valued coincidence and
/// containment laws: 200 validity queries whose grounding has ≤ 4 atoms.
fn coincidence_corpus(seed: u64) -> Vec<Formula> {
    let mut g = Gen::new(seed, STREAM_COINCIDENCE);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < 200 && attempts < 10_000 {
        attempts += 1;
        let f = if attempts % 4 == 0 {
            g.ground_formula(3, 4)
        } else {
            g.validity_sentence()
        };
        let Ok(view) = to_prenex_view(&f) else {
            continue;
        };
        let Ok(sig) = Signature::of_formula(&f) else {
            continue;
        };
        let sk = skolemize_validity(&view, &sig);
        let universe = herbrand_universe(&sk.signature);
        let Ok(exp) = expand_disjunction(&sk.formula, &universe) else {
            continue;
        };
        if ground_atoms(&exp.combined).unwrap().len() > 4 {
            continue;
        }
        out.push(f);
    }
    out
}

/// Criterion: the infinite-valued verdict is stable under grid enlargement
/// and coincides with validity in every finite logic up to n+2 values.
fn infinite_coincidence_grids(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("infinite_coincidence_grids");
    let corpus = coincidence_corpus(seed);
    for f in &corpus {
        let q = Query::validity(f.clone(), LogicId::Infinite);
        let Some(base) = decide_or_skip(&mut t, decide_validity(&q, caps)) else {
            continue;
        };
        let n = base.provenance.grid.as_ref().unwrap().len() - 2;
        let v_inf = outcome_valid(&base.outcome);
        if let Outcome::NotValid(cert) = &base.outcome {
            t.check(check_certificate(cert, f, Mode::Validity) == Ok(true), || {
                format!("{f}: infinite-valued countermodel fails the certificate check")
            });
        }
        for points in [n + 3, (2 * n + 2).max(2)] {
            let Some(v) = decide_or_skip(&mut t, decide_validity_on_grid(&q, Some(points), caps))
            else {
                continue;
            };
            t.check(outcome_valid(&v.outcome) == v_inf, || {
                format!("{f}: verdict changed on the {points}-point grid")
            });
        }
        let mut all_fin = true;
        for m in 2..=(n + 2) as u32 {
            let fq = Query::validity(f.clone(), LogicId::Finite(m));
            let Some(fv) = decide_or_skip(&mut t, decide_validity(&fq, caps)) else {
                all_fin = false;
                break;
            };
            if let Outcome::NotValid(cert) = &fv.outcome {
                t.check(check_certificate(cert, f, Mode::Validity) == Ok(true), || {
                    format!("{f}: gm:{m} countermodel fails the certificate check")
                });
            }
            all_fin &= outcome_valid(&fv.outcome);
        }
        t.check(v_inf == all_fin, || {
            format!(
                "{f}: infinite-valued verdict {v_inf} but finite logics up to {} give {all_fin}",
                n + 2
            )
        });
    }
    t.require_quota(corpus.len(), 200);
    t.report()
}

/// Every certificate emitted by validity and 1-sat pipelines re-checks
/// against the original sentence.
fn certificate_soundness(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("certificate_soundness");
    let mut g = Gen::new(seed, STREAM_CERTIFICATES);
    for i in 0..150 {
        if i % 2 == 0 {
            let f = g.validity_sentence();
            if oracle_budget_ok(&f, 10_000).is_none() {
                t.skip();
                continue;
            }
            for logic in [LogicId::Infinite, LogicId::Finite(3)] {
                let q = Query::validity(f.clone(), logic);
                let Some(v) = decide_or_skip(&mut t, decide_validity(&q, caps)) else {
                    continue;
                };
                if let Outcome::NotValid(cert) = &v.outcome {
                    t.check(check_certificate(cert, &f, Mode::Validity) == Ok(true), || {
                        format!("{f} ({logic}): emitted countermodel fails the certificate check")
                    });
                } else {
                    t.check(true, String::new);
                }
            }
        } else {
            let f = g.sat_sentence();
            let q = Query::sat(f.clone(), LogicId::Infinite);
            let Some(v) = decide_or_skip(&mut t, decide_1sat(&q, caps)) else {
                continue;
            };
            if let Outcome::Sat(model) = &v.outcome {
                t.check(check_certificate(model, &f, Mode::Sat1) == Ok(true), || {
                    format!("{f}: emitted model fails the certificate check")
                });
            } else {
                t.check(true, String::new);
            }
        }
    }
    t.report()
}

/// Criterion: over the coincidence corpus, sentences valid in the
/// (m+1)-valued logic are valid in the m-valued one, m ∈ {2, 3, 4}.
fn finite_containment(seed: u64, caps: &Caps) -> LawReport {
    let mut t = Tally::new("finite_containment");
    let corpus = coincidence_corpus(seed);
    for f in &corpus {
        let valid: Vec<bool> = (2..=5u32)
            .map(|m| {
                let q = Query::validity(f.clone(), LogicId::Finite(m));
                outcome_valid(&decide_validity(&q, caps).unwrap().outcome)
            })
            .collect();
        let monotone = valid.windows(2).all(|w| !w[1] || w[0]);
        t.check(monotone, || {
            format!("{f}: valid at some m+1 but not at m (validity for m=2..5: {valid:?})")
        });
    }
    t.require_quota(corpus.len(), 200);
    t.report()
}
