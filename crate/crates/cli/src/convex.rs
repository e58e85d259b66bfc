use std::fmt::Write;

use ins_core::convexity::{
    check_convex, check_strongly_convex, CheckParams, ConvexityError, ConvexityReport, Family,
    FunctionalIns, SampleBox,
};
use serde::Serialize;

use crate::{emit, ConvexArgs, Failure, Format, Outcome};

#[derive(Serialize)]
struct JsonReport {
    family: String,
    intersect: Option<String>,
    check: &'static str,
    #[serde(rename = "box")]
    bounds: Vec<[f64; 2]>,
    verdict: String,
    samples_checked: usize,
    witness: Option<JsonWitness>,
}

#[derive(Serialize)]
struct JsonWitness {
    x1: Vec<f64>,
    x2: Vec<f64>,
    lambda: f64,
    component: String,
    lhs: f64,
    rhs: f64,
}

fn usage(e: ConvexityError) -> Failure {
    Failure::Usage(e.to_string())
}

fn build(spec: &str, dim: usize) -> Result<(Family, FunctionalIns), Failure> {
    let family: Family = spec.parse().map_err(usage)?;
    let set = family.build(dim).map_err(usage)?;
    Ok((family, set))
}

fn point(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn render_text(args: &ConvexArgs, domain: &SampleBox, r: &ConvexityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", args.family.trim());
    if let Some(other) = &args.intersect {
        let _ = writeln!(out, "intersect: {}", other.trim());
    }
    let check = if args.strict {
        "strongly-convex"
    } else {
        "convex"
    };
    let _ = writeln!(out, "check: {check}");
    let _ = writeln!(out, "box: {domain}");
    let _ = writeln!(out, "verdict: {}", r.verdict);
    let _ = writeln!(out, "samples checked: {}", r.samples_checked);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness:");
        let _ = writeln!(out, "  x1: {}", point(&w.x1));
        let _ = writeln!(out, "  x2: {}", point(&w.x2));
        let _ = writeln!(out, "  lambda: {}", w.lambda);
        let _ = writeln!(out, "  component: {}", w.endpoint);
        let _ = writeln!(out, "  lhs: {}", w.lhs);
        let _ = writeln!(out, "  rhs: {}", w.rhs);
    }
    out
}

pub fn run(args: &ConvexArgs) -> Outcome {
    let domain: SampleBox = args.bounds.parse().map_err(usage)?;
    let dim = domain.dimension();
    let (_, mut set) = build(&args.family, dim)?;
    if let Some(other) = &args.intersect {
        let (_, b) = build(other, dim)?;
        set = set.intersect(&b).map_err(usage)?;
    }
    let params = CheckParams {
        trials: args.trials as usize,
        lambda_grid: args.lambda_grid as usize,
        seed: args.seed,
        tol: args.tol,
    };
    let report = if args.strict {
        check_strongly_convex(&set, &domain, &params)
    } else {
        check_convex(&set, &domain, &params)
    }
    .map_err(usage)?;

    match args.format {
        Format::Text => emit(&render_text(args, &domain, &report)),
        Format::Json => {
            let json = JsonReport {
                family: args.family.trim().to_string(),
                intersect: args.intersect.as_ref().map(|s| s.trim().to_string()),
                check: if args.strict {
                    "strongly-convex"
                } else {
                    "convex"
                },
                bounds: domain.bounds().iter().map(|&(lo, hi)| [lo, hi]).collect(),
                verdict: report.verdict.to_string(),
                samples_checked: report.samples_checked,
                witness: report.witness.as_ref().map(|w| JsonWitness {
                    x1: w.x1.clone(),
                    x2: w.x2.clone(),
                    lambda: w.lambda,
                    component: w.endpoint.to_string(),
                    lhs: w.lhs,
                    rhs: w.rhs,
                }),
            };
            emit(&(serde_json::to_string_pretty(&json).expect("reports serialize") + "\n"));
        }
    }
    Ok(report.witness.is_none())
}
