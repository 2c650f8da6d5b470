//! Decision procedures for validity and 1-satisfiability of
//! Bernays-Schönfinkel sentences in Gödel logics.
//!
//! Gödel logics are many-valued logics over a closed truth-value set
//! `V ⊆ [0,1]` containing 0 and 1, with min/max/residuated-implication
//! semantics. Validity and satisfiability are not dual in these logics, so
//! the two problems are handled by separate pipelines:
//!
//! * **validity** of `∀*∃*`-prefix function-free sentences: Skolemize the
//!   universal block to fresh constants, expand the existential block into a
//!   finite ground disjunction over the constant universe, and decide the
//!   resulting propositional formula by exhaustive grid enumeration;
//! * **1-satisfiability** of `∃*∀*`-prefix sentences: Skolemize the
//!   existential block to fresh constants, expand the universal block into a
//!   ground conjunction, and decide it by classical two-valued search
//!   (1-satisfiability coincides with classical satisfiability on this
//!   fragment).
//!
//! Both pipelines emit certificates (finite countermodels or models) that an
//! independent evaluator re-checks, and the [`laws`] module bundles the
//! property suites that cross-validate every stage against brute-force
//! oracles.
//!
//! All arithmetic is exact rational arithmetic; there is no floating point
//! anywhere. All values are immutable and safe to share across threads.

pub mod decide;
pub mod herbrand;
pub mod laws;
pub mod limits;
pub mod models;
pub mod propositional;
pub mod skolem;
pub mod syntax;

pub use decide::{
    decide_1sat, decide_validity, decide_validity_on_grid, oracle_validity, DecideError, Outcome,
    Provenance, Query, Verdict,
};
pub use herbrand::{expand_conjunction, expand_disjunction, herbrand_universe, GroundExpansion};
pub use limits::{CapExceeded, Caps};
pub use models::{check_certificate, Grid, Interpretation, LogicId, Mode, TruthValue};
pub use propositional::{
    classical_sat, eval_qf, fin_axiom, goedel_valid_finite, goedel_valid_infinite, ground_atoms,
    Assignment, GroundAtom, PropVerdict,
};
pub use skolem::{skolemize_sat, skolemize_validity, SkolemResult};
pub use syntax::{parse, BsShape, Formula, PrenexFormula, Quantifier, Signature, Term};
