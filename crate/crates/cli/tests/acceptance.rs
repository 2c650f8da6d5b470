//! Acceptance gate: one test per criterion, named so the harness output
//! reads as a per-criterion pass/fail line. Criteria that are law suites
//! share a single seeded run through `reports()`.

use std::path::Path;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use goedel_bs::decide::{decide_1sat, decide_validity};
use goedel_bs::laws::{run_all, LawReport, DEFAULT_SEED};
use goedel_bs::{
    check_certificate, fin_axiom, parse, Caps, LogicId, Mode, Outcome, Query,
};

static REPORTS: OnceLock<(Vec<LawReport>, Duration)> = OnceLock::new();

fn reports() -> &'static (Vec<LawReport>, Duration) {
    REPORTS.get_or_init(|| {
        let start = Instant::now();
        let reports = run_all(DEFAULT_SEED, &Caps::default());
        (reports, start.elapsed())
    })
}

fn law(name: &str) -> &'static LawReport {
    reports()
        .0
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("no law named {name}"))
}

fn assert_law(criterion: &str, name: &str, min_cases: u64) {
    let r = law(name);
    println!(
        "{criterion}: {} ({} cases, {} skipped{})",
        if r.passed { "pass" } else { "FAIL" },
        r.cases,
        r.skipped,
        r.detail
            .as_deref()
            .map(|d| format!("; {d}"))
            .unwrap_or_default()
    );
    assert!(r.passed, "{criterion} failed: {:?}", r.detail);
    assert!(
        r.cases >= min_cases,
        "{criterion} ran only {} cases, need {min_cases}",
        r.cases
    );
}

#[test]
fn criterion_1_fin_hierarchy() {
    let caps = Caps::default();
    for m in 2..=5 {
        let fin = fin_axiom(m);
        let own = decide_validity(&Query::validity(fin.clone(), LogicId::Finite(m)), &caps).unwrap();
        assert!(
            matches!(own.outcome, Outcome::Valid),
            "Fin_{m} not valid in the {m}-valued logic"
        );
        let next =
            decide_validity(&Query::validity(fin.clone(), LogicId::Finite(m + 1)), &caps).unwrap();
        let Outcome::NotValid(cert) = &next.outcome else {
            panic!("Fin_{m} unexpectedly valid in the {}-valued logic", m + 1);
        };
        assert_eq!(check_certificate(cert, &fin, Mode::Validity), Ok(true));
    }
    println!("criterion 1 (Fin hierarchy, m = 2..5): pass");
}

#[test]
fn criterion_2_excluded_middle() {
    let caps = Caps::default();
    let lem = parse("forall x. P(x) | ~P(x)").unwrap().formula;
    for logic in [
        LogicId::Infinite,
        LogicId::Finite(3),
        LogicId::Finite(4),
        LogicId::Finite(9),
    ] {
        let v = decide_validity(&Query::validity(lem.clone(), logic), &caps).unwrap();
        let Outcome::NotValid(cert) = &v.outcome else {
            panic!("excluded middle unexpectedly valid in {logic}");
        };
        assert_eq!(check_certificate(cert, &lem, Mode::Validity), Ok(true));
    }
    let two = decide_validity(&Query::validity(lem, LogicId::Finite(2)), &caps).unwrap();
    assert!(matches!(two.outcome, Outcome::Valid));

    let neg = parse("~(A | ~A)").unwrap().formula;
    for logic in [
        LogicId::Finite(2),
        LogicId::Finite(3),
        LogicId::Finite(5),
        LogicId::Infinite,
    ] {
        let v = decide_1sat(&Query::sat(neg.clone(), logic), &caps).unwrap();
        assert!(
            matches!(v.outcome, Outcome::Unsat),
            "negated excluded middle unexpectedly 1-satisfiable in {logic}"
        );
    }
    println!("criterion 2 (excluded middle family): pass");
}

#[test]
fn criterion_3_gluing_law() {
    assert_law("criterion 3 (gluing law)", "models_gluing_exhaustive", 10_000);
    let elapsed = reports().1;
    assert!(
        elapsed <= Duration::from_secs(60),
        "law run took {elapsed:?}, budget is 60 s for the gluing suite alone"
    );
}

#[test]
fn criterion_4_skolemization_equivalence() {
    assert_law(
        "criterion 4 (pipeline vs oracle)",
        "skolem_equivalence_oracle",
        200,
    );
}

#[test]
fn criterion_5_one_sat_coincidence() {
    assert_law("criterion 5 (1-sat coincidence)", "sat_coincidence", 200);
}

#[test]
fn criterion_6_infinite_coincidence_and_grid_stability() {
    assert_law(
        "criterion 6 (grid stability + finite limit)",
        "infinite_coincidence_grids",
        200,
    );
}

#[test]
fn criterion_7_certificate_soundness() {
    // Criteria 4-6 re-check their own certificates inside their suites;
    // this suite covers the remaining emission paths.
    assert_law(
        "criterion 7 (certificate soundness)",
        "certificate_soundness",
        100,
    );
    for name in [
        "skolem_equivalence_oracle",
        "sat_coincidence",
        "infinite_coincidence_grids",
    ] {
        assert!(law(name).passed, "{name} embeds certificate checks");
    }
}

#[test]
fn criterion_8_containment_direction() {
    assert_law(
        "criterion 8 (finite containment)",
        "finite_containment",
        200,
    );
}

#[test]
fn criterion_9_cli_gates() {
    let laws = Command::new(env!("CARGO_BIN_EXE_goedel-bs"))
        .args(["laws"])
        .output()
        .unwrap();
    assert_eq!(
        laws.status.code(),
        Some(0),
        "laws subcommand failed:\n{}",
        String::from_utf8_lossy(&laws.stdout)
    );

    let corpus_path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("corpus/bs_basics.tsv");
    let corpus = Command::new(env!("CARGO_BIN_EXE_goedel-bs"))
        .arg("corpus")
        .arg(&corpus_path)
        .output()
        .unwrap();
    assert_eq!(
        corpus.status.code(),
        Some(0),
        "corpus run failed:\n{}",
        String::from_utf8_lossy(&corpus.stdout)
    );
    println!("criterion 9 (laws exit 0, corpus bs_basics exit 0): pass");
}
