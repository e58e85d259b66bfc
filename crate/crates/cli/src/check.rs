use std::fmt::Write;

use ins_core::laws::{check_law, Counterexample, Law, LawConfig, LawReport, Universes};
use serde::Serialize;

use crate::{emit, read_sets, CheckArgs, Failure, Format, Outcome};

#[derive(Serialize)]
struct JsonReport {
    laws: Vec<JsonLaw>,
    passed: bool,
}

#[derive(Serialize)]
struct JsonLaw {
    law: String,
    passed: bool,
    trials: usize,
    checks: usize,
    statements: Vec<String>,
    counterexample: Option<JsonCounterexample>,
}

#[derive(Serialize)]
struct JsonCounterexample {
    trial: usize,
    statement: String,
    inputs: Vec<JsonInput>,
    element: Option<JsonElement>,
}

#[derive(Serialize)]
struct JsonInput {
    name: String,
    set: String,
}

#[derive(Serialize)]
struct JsonElement {
    label: String,
    lhs: String,
    rhs: String,
}

impl From<&Counterexample> for JsonCounterexample {
    fn from(c: &Counterexample) -> Self {
        JsonCounterexample {
            trial: c.trial,
            statement: c.statement.clone(),
            inputs: c
                .inputs
                .iter()
                .map(|(name, set)| JsonInput {
                    name: name.clone(),
                    set: set.clone(),
                })
                .collect(),
            element: c.element.as_ref().map(|(label, lhs, rhs)| JsonElement {
                label: label.clone(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }),
        }
    }
}

impl From<&LawReport> for JsonLaw {
    fn from(r: &LawReport) -> Self {
        JsonLaw {
            law: r.law.name().to_string(),
            passed: r.passed(),
            trials: r.trials,
            checks: r.checks,
            statements: r.statements.clone(),
            counterexample: r.counterexample.as_ref().map(JsonCounterexample::from),
        }
    }
}

fn laws(args: &CheckArgs) -> Result<Vec<Law>, Failure> {
    match &args.law {
        _ if args.all => Ok(Law::ALL.to_vec()),
        Some(name) => name.parse::<Law>().map(|l| vec![l]).map_err(|e| {
            let known: Vec<&str> = Law::ALL.iter().map(|l| l.name()).collect();
            Failure::Usage(format!("{e}; known laws: {}", known.join(", ")))
        }),
        None => unreachable!("clap requires --law or --all"),
    }
}

fn universes(args: &CheckArgs) -> Result<Universes, Failure> {
    let Some(path) = &args.sets else {
        return Ok(Universes::Synthetic);
    };
    let env = read_sets(path)?;
    let mut found: Vec<Vec<String>> = Vec::new();
    for (_, set) in env.iter() {
        let u: Vec<String> = set.universe().cloned().collect();
        if !u.is_empty() && !found.contains(&u) {
            found.push(u);
        }
    }
    if found.is_empty() {
        return Err(Failure::Usage(format!(
            "{}: no non-empty set to take a universe from",
            path.display()
        )));
    }
    Ok(Universes::Fixed(found))
}

fn render_text(reports: &[LawReport]) -> String {
    let mut out = String::new();
    for r in reports {
        if r.passed() {
            let _ = writeln!(
                out,
                "{}: pass ({} trials, {} checks)",
                r.law, r.trials, r.checks
            );
            for s in &r.statements {
                let _ = writeln!(out, "  checked: {s}");
            }
        } else {
            let _ = writeln!(out, "{}: FAIL ({} checks)", r.law, r.checks);
            let c = r.counterexample.as_ref().expect("failed reports carry one");
            for line in c.to_string().lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        let _ = writeln!(out, "passed: {} of {} laws", reports.len(), reports.len());
    } else {
        let _ = writeln!(out, "failed: {failed} of {} laws", reports.len());
    }
    out
}

pub fn run(args: &CheckArgs) -> Outcome {
    let laws = laws(args)?;
    let config = LawConfig {
        trials: args.trials as usize,
        seed: args.seed,
        tol: args.tol,
        universes: universes(args)?,
    };
    let reports: Vec<LawReport> = laws.iter().map(|&l| check_law(l, &config)).collect();
    let passed = reports.iter().all(LawReport::passed);
    match args.format {
        Format::Text => emit(&render_text(&reports)),
        Format::Json => {
            let json = JsonReport {
                laws: reports.iter().map(JsonLaw::from).collect(),
                passed,
            };
            emit(&(serde_json::to_string_pretty(&json).expect("reports serialize") + "\n"));
        }
    }
    Ok(passed)
}
