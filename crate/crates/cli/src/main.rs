//! Command-line front end: parse a sentence, run validity or 1-sat
//! queries, print text or JSON verdicts, apply gluing to certificates,
//! run the law suites, and batch-process corpus files.
//!
//! Exit codes: `prove` 0 valid / 1 not valid, `sat` 0 sat / 1 unsat,
//! `glue` 0 all contract rows hold / 1 a row fails, `laws` 0 all pass /
//! 3 violation, `corpus` 0 expectations met / 1 mismatch. Any error exits
//! 2 and names the pipeline stage on stderr.

mod corpus;

use std::fs;
use std::io::{self, Read as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use goedel_bs::decide::{decide_1sat, decide_validity_on_grid, oracle_validity};
use goedel_bs::herbrand::GroundExpansion;
use goedel_bs::laws::{run_all, DEFAULT_SEED};
use goedel_bs::skolem::{SkolemResult, SkolemStep};
use goedel_bs::syntax::ParseError;
use goedel_bs::{
    parse, Caps, DecideError, Interpretation, LogicId, Mode, Outcome, Query, TruthValue, Verdict,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "goedel-bs", version, about = "Validity and 1-satisfiability in Gödel logics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide validity of a forall*exists* sentence.
    Prove(ProveArgs),
    /// Decide 1-satisfiability of an exists*forall* sentence.
    Sat(SatArgs),
    /// Apply the gluing transformation to a certificate.
    Glue(GlueArgs),
    /// Run the executable law suites.
    Laws(LawsArgs),
    /// Run a corpus file and compare verdicts to expectations.
    Corpus(CorpusArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ProveArgs {
    /// Input file; stdin when omitted.
    file: Option<PathBuf>,
    /// Target logic: gm:<m>, ginf, g01, gup, or gdown.
    #[arg(long, default_value = "ginf")]
    logic: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the Skolemization report in the output.
    #[arg(long)]
    dump_skolem: bool,
    /// Include the ground expansion in the text output.
    #[arg(long)]
    dump_ground: bool,
    /// Override the enumeration grid size (points, >= 2).
    #[arg(long)]
    grid_size: Option<usize>,
    /// Decide by brute-force interpretation search up to this domain size
    /// instead of the Skolem-Herbrand pipeline (finite logics only).
    #[arg(long)]
    max_domain: Option<usize>,
    /// Global work cap for enumeration and search.
    #[arg(long, env = "GOEDEL_BS_CAP")]
    cap: Option<u64>,
}

#[derive(Args)]
struct SatArgs {
    /// Input file; stdin when omitted.
    file: Option<PathBuf>,
    /// Target logic: gm:<m>, ginf, g01, gup, or gdown.
    #[arg(long, default_value = "ginf")]
    logic: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the Skolemization report in the output.
    #[arg(long)]
    dump_skolem: bool,
    /// Include the ground expansion in the text output.
    #[arg(long)]
    dump_ground: bool,
    /// Global work cap for enumeration and search.
    #[arg(long, env = "GOEDEL_BS_CAP")]
    cap: Option<u64>,
}

#[derive(Args)]
struct GlueArgs {
    /// Certificate JSON file; stdin when omitted.
    file: Option<PathBuf>,
    /// The cut value, a rational < 1 such as 1/2.
    #[arg(long)]
    omega: String,
    /// Formula to evaluate before and after gluing; repeatable.
    #[arg(long = "formula")]
    formulas: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct LawsArgs {
    /// Generator seed.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Global work cap for enumeration and search.
    #[arg(long, env = "GOEDEL_BS_CAP")]
    cap: Option<u64>,
}

#[derive(Args)]
pub(crate) struct CorpusArgs {
    /// Corpus file; stdin when omitted.
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Global work cap for enumeration and search.
    #[arg(long, env = "GOEDEL_BS_CAP")]
    pub cap: Option<u64>,
}

/// One error, tagged with the pipeline stage it came from
/// (parse | shape | skolem | ground | decide | cap).
pub(crate) struct CliError {
    pub stage: &'static str,
    pub message: String,
}

impl CliError {
    pub(crate) fn new(stage: &'static str, message: impl Into<String>) -> CliError {
        CliError {
            stage,
            message: message.into(),
        }
    }
}

impl From<DecideError> for CliError {
    fn from(e: DecideError) -> CliError {
        CliError::new(e.stage(), e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> CliError {
        CliError::new("parse", e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Prove(a) => run_prove(a),
        Command::Sat(a) => run_sat(a),
        Command::Glue(a) => run_glue(a),
        Command::Laws(a) => run_laws(a),
        Command::Corpus(a) => corpus::run(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error[{}]: {}", e.stage, e.message);
            ExitCode::from(2)
        }
    }
}

pub(crate) fn read_input(file: Option<&Path>) -> Result<String, CliError> {
    match file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::new("parse", format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::new("parse", format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

pub(crate) fn caps_from(cap: Option<u64>) -> Caps {
    match cap {
        Some(c) => Caps::with_global_cap(c),
        None => Caps::default(),
    }
}

pub(crate) fn parse_logic(raw: &str) -> Result<LogicId, CliError> {
    raw.parse()
        .map_err(|e: goedel_bs::models::LogicParseError| CliError::new("parse", e.to_string()))
}

fn alias_note(raw: &str) -> String {
    format!(
        "`{raw}` names one infinite-valued Gödel logic; on the decidable \
         fragments they all coincide, so the query is decided as `ginf`"
    )
}

fn run_prove(args: ProveArgs) -> Result<u8, CliError> {
    let text = read_input(args.file.as_deref())?;
    let sentence = parse(&text)?.formula;
    let logic = parse_logic(&args.logic)?;
    let caps = caps_from(args.cap);
    let mut verdict = match args.max_domain {
        Some(bound) => oracle_validity(&sentence, logic, bound, &caps)?,
        None => {
            let q = Query::validity(sentence, logic);
            decide_validity_on_grid(&q, args.grid_size, &caps)?
        }
    };
    if LogicId::is_infinite_alias(&args.logic) {
        verdict.provenance.notes.push(alias_note(&args.logic));
    }
    print_verdict(
        Mode::Validity,
        logic,
        &verdict,
        &caps,
        args.format,
        args.dump_skolem,
        args.dump_ground,
    );
    Ok(match verdict.outcome {
        Outcome::Valid => 0,
        Outcome::NotValid(_) => 1,
        Outcome::Sat(_) | Outcome::Unsat => unreachable!("validity query"),
    })
}

fn run_sat(args: SatArgs) -> Result<u8, CliError> {
    let text = read_input(args.file.as_deref())?;
    let sentence = parse(&text)?.formula;
    let logic = parse_logic(&args.logic)?;
    let caps = caps_from(args.cap);
    let q = Query::sat(sentence, logic);
    let mut verdict = decide_1sat(&q, &caps)?;
    if LogicId::is_infinite_alias(&args.logic) {
        verdict.provenance.notes.push(alias_note(&args.logic));
    }
    print_verdict(
        Mode::Sat1,
        logic,
        &verdict,
        &caps,
        args.format,
        args.dump_skolem,
        args.dump_ground,
    );
    Ok(match verdict.outcome {
        Outcome::Sat(_) => 0,
        Outcome::Unsat => 1,
        Outcome::Valid | Outcome::NotValid(_) => unreachable!("1-sat query"),
    })
}

fn print_verdict(
    mode: Mode,
    logic: LogicId,
    v: &Verdict,
    caps: &Caps,
    format: Format,
    dump_skolem: bool,
    dump_ground: bool,
) {
    match format {
        Format::Json => {
            let out = verdict_json(mode, logic, v, caps, dump_skolem);
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!("mode: {mode}");
            println!("logic: {logic}");
            println!("verdict: {}", v.outcome.token());
            let label = match v.outcome {
                Outcome::NotValid(_) => "countermodel",
                Outcome::Sat(_) => "model",
                _ => "",
            };
            if let Some(cert) = v.outcome.certificate() {
                println!("{label}:");
                println!("{}", indent(&cert.to_string()));
            }
            if dump_skolem {
                if let Some(sk) = &v.provenance.skolem {
                    print_skolem(sk);
                }
            }
            if dump_ground {
                if let Some(g) = &v.provenance.ground {
                    print_ground(g);
                }
            }
            if !v.provenance.notes.is_empty() {
                println!("notes:");
                for n in &v.provenance.notes {
                    println!("  - {n}");
                }
            }
        }
    }
}

fn indent(s: &str) -> String {
    s.lines()
        .map(|l| format!("  {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn print_skolem(sk: &SkolemResult) {
    println!("skolemization:");
    println!("  formula: {}", sk.formula.to_formula());
    if !sk.introduced_constants.is_empty() {
        println!("  constants: {}", sk.introduced_constants.join(", "));
    }
    if !sk.introduced_functions.is_empty() {
        let fns: Vec<String> = sk
            .introduced_functions
            .iter()
            .map(|(n, a)| format!("{n}/{a}"))
            .collect();
        println!("  functions: {}", fns.join(", "));
    }
    println!("  steps:");
    for step in &sk.mapping {
        match step {
            SkolemStep::Kept { quantifier, var } => {
                println!("    kept {} {var}", quantifier.symbol());
            }
            SkolemStep::Constant {
                quantifier,
                var,
                name,
            } => {
                println!("    {} {var} => constant {name}", quantifier.symbol());
            }
            SkolemStep::Function {
                quantifier,
                var,
                name,
                args,
            } => {
                println!(
                    "    {} {var} => function {name}({})",
                    quantifier.symbol(),
                    args.join(", ")
                );
            }
        }
    }
}

fn print_ground(g: &GroundExpansion) {
    println!("ground expansion:");
    println!("  universe: {}", g.universe.join(", "));
    println!("  instances:");
    for inst in &g.instances {
        let subst: Vec<String> = inst
            .substitution
            .iter()
            .map(|(v, c)| format!("{v} -> {c}"))
            .collect();
        println!("    [{}] {}", subst.join(", "), inst.instance);
    }
    println!("  combined: {}", g.combined);
}

fn verdict_json(mode: Mode, logic: LogicId, v: &Verdict, caps: &Caps, dump_skolem: bool) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("mode".into(), json!(mode.to_string()));
    obj.insert("logic".into(), json!(logic.to_string()));
    obj.insert("verdict".into(), json!(v.outcome.token()));
    obj.insert(
        "certificate".into(),
        match v.outcome.certificate() {
            Some(cert) => serde_json::to_value(cert).unwrap(),
            None => Value::Null,
        },
    );
    obj.insert(
        "ground".into(),
        match &v.provenance.ground {
            Some(g) => ground_json(g),
            None => Value::Null,
        },
    );
    if dump_skolem {
        obj.insert(
            "skolem".into(),
            match &v.provenance.skolem {
                Some(sk) => skolem_json(sk),
                None => Value::Null,
            },
        );
    }
    obj.insert(
        "meta".into(),
        json!({
            "caps": serde_json::to_value(caps).unwrap(),
            "grid": match &v.provenance.grid {
                Some(g) => serde_json::to_value(g.points()).unwrap(),
                None => Value::Null,
            },
            "notes": v.provenance.notes,
        }),
    );
    Value::Object(obj)
}

fn ground_json(g: &GroundExpansion) -> Value {
    json!({
        "universe": g.universe,
        "instances": g.instances.iter().map(|inst| {
            let subst: serde_json::Map<String, Value> = inst
                .substitution
                .iter()
                .map(|(v, c)| (v.clone(), Value::String(c.clone())))
                .collect();
            json!({"substitution": subst, "instance": inst.instance.to_string()})
        }).collect::<Vec<_>>(),
        "combined": g.combined.to_string(),
    })
}

fn skolem_json(sk: &SkolemResult) -> Value {
    json!({
        "formula": sk.formula.to_formula().to_string(),
        "constants": sk.introduced_constants,
        "functions": sk.introduced_functions.iter()
            .map(|(n, a)| json!({"name": n, "arity": a}))
            .collect::<Vec<_>>(),
        "steps": sk.mapping.iter().map(step_json).collect::<Vec<_>>(),
    })
}

fn step_json(step: &SkolemStep) -> Value {
    match step {
        SkolemStep::Kept { quantifier, var } => {
            json!({"kind": "kept", "quantifier": quantifier.symbol(), "var": var})
        }
        SkolemStep::Constant {
            quantifier,
            var,
            name,
        } => {
            json!({"kind": "constant", "quantifier": quantifier.symbol(), "var": var, "name": name})
        }
        SkolemStep::Function {
            quantifier,
            var,
            name,
            args,
        } => json!({
            "kind": "function",
            "quantifier": quantifier.symbol(),
            "var": var,
            "name": name,
            "args": args,
        }),
    }
}

fn run_glue(args: GlueArgs) -> Result<u8, CliError> {
    let text = read_input(args.file.as_deref())?;
    let before: Interpretation = serde_json::from_str(&text)
        .map_err(|e| CliError::new("parse", format!("malformed certificate: {e}")))?;
    let omega: TruthValue = args
        .omega
        .parse()
        .map_err(|e| CliError::new("parse", format!("invalid omega: {e}")))?;
    let after = before
        .glue(omega)
        .map_err(|e| CliError::new("decide", e.to_string()))?;

    let mut rows = Vec::new();
    let mut all_ok = true;
    for ftext in &args.formulas {
        let f = parse(ftext)?.formula;
        let b = before
            .evaluate(&f)
            .map_err(|e| CliError::new("decide", format!("{ftext}: {e}")))?;
        let a = after
            .evaluate(&f)
            .map_err(|e| CliError::new("decide", format!("{ftext}: {e}")))?;
        let expected = if b <= omega { b } else { TruthValue::one() };
        let ok = a == expected;
        all_ok &= ok;
        rows.push((ftext.clone(), b, a, ok));
    }

    match args.format {
        Format::Json => {
            let out = json!({
                "omega": omega,
                "before": before,
                "after": after,
                "checks": rows.iter().map(|(f, b, a, ok)| {
                    json!({"formula": f, "before": b, "after": a, "ok": ok})
                }).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!("omega: {omega}");
            println!("before:");
            println!("{}", indent(&before.to_string()));
            println!("after:");
            println!("{}", indent(&after.to_string()));
            if !rows.is_empty() {
                println!("checks:");
                for (f, b, a, ok) in &rows {
                    let mark = if *ok { "ok" } else { "VIOLATION" };
                    println!("  {f}: {b} -> {a} {mark}");
                }
            }
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn run_laws(args: LawsArgs) -> Result<u8, CliError> {
    let caps = caps_from(args.cap);
    let reports = run_all(args.seed, &caps);
    let all_passed = reports.iter().all(|r| r.passed);
    for r in reports.iter().filter(|r| r.skipped > 0) {
        eprintln!(
            "warning: {} skipped {} instance(s) over the work cap",
            r.name, r.skipped
        );
    }
    match args.format {
        Format::Json => {
            let out = json!({
                "seed": args.seed,
                "reports": reports.iter().map(|r| json!({
                    "name": r.name,
                    "passed": r.passed,
                    "cases": r.cases,
                    "skipped": r.skipped,
                    "detail": r.detail,
                })).collect::<Vec<_>>(),
                "meta": {"caps": serde_json::to_value(caps).unwrap()},
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!("seed: {}", args.seed);
            for r in &reports {
                println!(
                    "{:<34} {:>6} cases {:>4} skipped  {}",
                    r.name,
                    r.cases,
                    r.skipped,
                    if r.passed { "pass" } else { "FAIL" }
                );
            }
            for r in reports.iter().filter(|r| !r.passed) {
                println!(
                    "counterexample [{}]: {}",
                    r.name,
                    r.detail.as_deref().unwrap_or("(no detail)")
                );
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                println!("all {} laws passed", reports.len());
            } else {
                println!("{failed} of {} laws failed", reports.len());
            }
        }
    }
    Ok(if all_passed { 0 } else { 3 })
}
