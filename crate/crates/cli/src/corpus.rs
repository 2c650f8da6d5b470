//! Line-oriented corpus runner.
//!
//! Format: `name <TAB> mode <TAB> logic <TAB> expected <TAB> formula`,
//! one entry per line; blank lines and `#` comments are skipped. The mode
//! is `validity` or `1sat`; the expected field is a verdict token
//! (`valid`, `not_valid`, `sat`, `unsat`), an `error:<stage>` tag, or `-`
//! for "run but do not check". Rows are reported in input order.

use std::collections::BTreeSet;

use goedel_bs::decide::{decide_1sat, decide_validity};
use goedel_bs::{parse, Caps, LogicId, Mode, Query};
use serde_json::json;

use crate::{caps_from, parse_logic, read_input, CliError, CorpusArgs, Format};

struct Entry {
    name: String,
    mode: Mode,
    logic: LogicId,
    expected: Option<String>,
    formula: String,
}

struct Row {
    name: String,
    mode: Mode,
    logic: LogicId,
    expected: Option<String>,
    got: String,
    detail: Option<String>,
    status: &'static str,
}

pub(crate) fn run(args: &CorpusArgs) -> Result<u8, CliError> {
    let text = read_input(args.file.as_deref())?;
    let entries = parse_corpus(&text)?;
    let caps = caps_from(args.cap);

    let rows: Vec<Row> = entries
        .into_iter()
        .map(|e| {
            let (got, detail) = run_entry(&e, &caps);
            let status = match &e.expected {
                Some(want) if *want == got => "ok",
                _ if got.starts_with("error:") => "error",
                Some(_) => "mismatch",
                None => "ok",
            };
            Row {
                name: e.name,
                mode: e.mode,
                logic: e.logic,
                expected: e.expected,
                got,
                detail,
                status,
            }
        })
        .collect();

    let total = rows.len();
    let ok = rows.iter().filter(|r| r.status == "ok").count();
    let mismatched = rows.iter().filter(|r| r.status == "mismatch").count();
    let errored = rows.iter().filter(|r| r.status == "error").count();

    match args.format {
        Format::Json => {
            let out = json!({
                "entries": rows.iter().map(|r| json!({
                    "name": r.name,
                    "mode": r.mode.to_string(),
                    "logic": r.logic,
                    "expected": r.expected,
                    "got": r.got,
                    "status": r.status,
                    "detail": r.detail,
                })).collect::<Vec<_>>(),
                "summary": {
                    "total": total,
                    "ok": ok,
                    "mismatched": mismatched,
                    "errored": errored,
                },
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Text => {
            println!("name\tmode\tlogic\texpected\tgot\tstatus");
            for r in &rows {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.name,
                    r.mode,
                    r.logic,
                    r.expected.as_deref().unwrap_or("-"),
                    r.got,
                    r.status
                );
            }
            for r in rows.iter().filter(|r| r.status == "mismatch") {
                println!(
                    "mismatch {}: expected {}, got {}",
                    r.name,
                    r.expected.as_deref().unwrap_or("-"),
                    r.got
                );
            }
            for r in rows.iter().filter(|r| r.status == "error") {
                println!(
                    "error {}: {}",
                    r.name,
                    r.detail.as_deref().unwrap_or(&r.got)
                );
            }
            println!("summary: {total} entries, {ok} ok, {mismatched} mismatched, {errored} errored");
        }
    }

    Ok(if errored > 0 {
        2
    } else if mismatched > 0 {
        1
    } else {
        0
    })
}

fn parse_corpus(text: &str) -> Result<Vec<Entry>, CliError> {
    let mut entries = Vec::new();
    let mut names = BTreeSet::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.splitn(5, '\t').collect();
        if fields.len() != 5 {
            return Err(CliError::new(
                "parse",
                format!("line {lineno}: expected 5 tab-separated fields, found {}", fields.len()),
            ));
        }
        let name = fields[0].to_owned();
        if !names.insert(name.clone()) {
            return Err(CliError::new(
                "parse",
                format!("line {lineno}: duplicate corpus name `{name}`"),
            ));
        }
        let mode = match fields[1] {
            "validity" => Mode::Validity,
            "1sat" => Mode::Sat1,
            other => {
                return Err(CliError::new(
                    "parse",
                    format!("line {lineno}: unknown mode `{other}`, expected `validity` or `1sat`"),
                ))
            }
        };
        let logic = parse_logic(fields[2])
            .map_err(|e| CliError::new("parse", format!("line {lineno}: {}", e.message)))?;
        let expected = match fields[3] {
            "-" => None,
            tok @ ("valid" | "not_valid" | "sat" | "unsat") => Some(tok.to_owned()),
            tok if tok.strip_prefix("error:").is_some_and(|s| {
                matches!(s, "parse" | "shape" | "skolem" | "ground" | "decide" | "cap")
            }) =>
            {
                Some(tok.to_owned())
            }
            other => {
                return Err(CliError::new(
                    "parse",
                    format!("line {lineno}: unknown expectation `{other}`"),
                ))
            }
        };
        entries.push(Entry {
            name,
            mode,
            logic,
            expected,
            formula: fields[4].to_owned(),
        });
    }
    Ok(entries)
}

fn run_entry(e: &Entry, caps: &Caps) -> (String, Option<String>) {
    let sentence = match parse(&e.formula) {
        Ok(p) => p.formula,
        Err(err) => return ("error:parse".to_owned(), Some(err.to_string())),
    };
    let result = match e.mode {
        Mode::Validity => decide_validity(&Query::validity(sentence, e.logic), caps),
        Mode::Sat1 => decide_1sat(&Query::sat(sentence, e.logic), caps),
    };
    match result {
        Ok(v) => (v.outcome.token().to_owned(), None),
        Err(err) => (format!("error:{}", err.stage()), Some(err.to_string())),
    }
}
