use clap::Args;
use limpack::packing::{self, Invariant, Tier};
use limpack::tree::{tree_domination, tree_total_domination};
use limpack::{parse_graph6, Graph, PackingCertificate, SolveError};
use rayon::prelude::*;
use serde::Serialize;

use crate::io::{input_lines, Sink};
use crate::{Failure, RunArgs, EXIT_CAP, EXIT_INPUT};

#[derive(Args)]
pub struct ComputeArgs {
    /// One of Lk, LLk, rho, rhoL, rhoO, gamma, gammaT.
    #[arg(long, value_parser = ["Lk", "LLk", "rho", "rhoL", "rhoO", "gamma", "gammaT"])]
    invariant: String,
    /// The k of Lk and LLk.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: Option<u32>,
    #[command(flatten)]
    run: RunArgs,
}

enum Outcome {
    Value(PackingCertificate),
    Skipped(String),
    Undefined(String),
    ParseError(String),
}

struct Caps {
    cap: usize,
    lower_cap: usize,
}

fn compute(g: &Graph, inv: Invariant, caps: &Caps) -> Outcome {
    let as_outcome = |r: Result<PackingCertificate, SolveError>| match r {
        Ok(c) => Outcome::Value(c),
        Err(e) => Outcome::Undefined(e.to_string()),
    };
    if g.is_tree() {
        match inv {
            Invariant::Domination => return as_outcome(tree_domination(g)),
            Invariant::TotalDomination => return as_outcome(tree_total_domination(g)),
            _ => {}
        }
    }
    let cap = if inv.is_lower() {
        caps.lower_cap
    } else {
        caps.cap
    };
    // every vertex set qualifies once k exceeds Δ, so no search is needed
    let trivial = inv.k().is_some_and(|k| k as usize > g.max_degree());
    if g.order() > cap && !trivial {
        return Outcome::Skipped(format!("size cap: n = {} exceeds {cap}", g.order()));
    }
    as_outcome(packing::solve(g, inv, Tier::BranchAndBound))
}

#[derive(Serialize)]
struct Record<'a> {
    graph6: &'a str,
    invariant: &'static str,
    k: Option<u32>,
    status: &'static str,
    value: Option<usize>,
    set: Option<&'a [usize]>,
    reason: Option<&'a str>,
}

#[derive(Serialize)]
struct Row<'a> {
    graph6: &'a str,
    invariant: &'static str,
    k: Option<u32>,
    status: &'static str,
    value: Option<usize>,
    set: Option<String>,
    reason: Option<&'a str>,
}

const CHUNK: usize = 256;

pub fn run(args: ComputeArgs) -> Result<u8, Failure> {
    let inv = match (args.invariant.as_str(), args.k) {
        ("Lk" | "LLk", None) => {
            return Err(Failure::input(format!(
                "--invariant {} needs --k",
                args.invariant
            )))
        }
        ("Lk" | "LLk", Some(k)) => Invariant::from_name(&args.invariant, k),
        (_, Some(_)) => {
            return Err(Failure::input(format!(
                "--invariant {} does not take --k",
                args.invariant
            )))
        }
        (name, None) => Invariant::from_name(name, 1),
    }
    .ok_or_else(|| Failure::input("unknown invariant"))?;
    let caps = Caps {
        cap: args.run.cap as usize,
        lower_cap: args.run.lower_cap as usize,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.run.workers as usize)
        .build()
        .map_err(|e| Failure::input(e.to_string()))?;

    let mut lines = input_lines(&args.run.input)?
        .enumerate()
        .filter(|(_, l)| l.as_ref().map_or(true, |l| !l.trim().is_empty()));
    let mut sink = Sink::new(args.run.format);
    let (mut parse_errors, mut skipped) = (0usize, 0usize);
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for (i, line) in lines.by_ref().take(CHUNK) {
            chunk.push((i + 1, line?.trim().to_string()));
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(_, text)| match parse_graph6(text) {
                    Ok(g) => compute(&g, inv, &caps),
                    Err(e) => Outcome::ParseError(e.to_string()),
                })
                .collect()
        });
        for ((line, text), outcome) in chunk.iter().zip(outcomes) {
            let (status, cert, reason) = match &outcome {
                Outcome::Value(c) => ("ok", Some(c), None),
                Outcome::Skipped(r) => {
                    skipped += 1;
                    ("skipped", None, Some(r.as_str()))
                }
                Outcome::Undefined(r) => {
                    parse_errors += 1;
                    eprintln!("line {line}: {r}");
                    ("undefined", None, Some(r.as_str()))
                }
                Outcome::ParseError(r) => {
                    parse_errors += 1;
                    eprintln!("line {line}: parse error: {r}");
                    continue;
                }
            };
            let label = match inv.k() {
                Some(k) => format!("{inv} k={k}"),
                None => inv.to_string(),
            };
            let text_line = match cert {
                Some(c) => format!("{text}\t{label}\t{}\t{}", c.value, c.set),
                None => format!("{text}\t{label}\t{status}: {}", reason.unwrap_or("")),
            };
            let record = Record {
                graph6: text,
                invariant: inv.name(),
                k: inv.k(),
                status,
                value: cert.map(|c| c.value),
                set: cert.map(|c| c.set.as_slice()),
                reason,
            };
            let row = Row {
                graph6: text,
                invariant: inv.name(),
                k: inv.k(),
                status,
                value: record.value,
                set: cert.map(|c| c.set.to_string()),
                reason,
            };
            sink.emit(&text_line, &record, &row)?;
        }
    }
    sink.finish()?;
    Ok(if parse_errors > 0 {
        EXIT_INPUT
    } else if skipped > 0 {
        EXIT_CAP
    } else {
        0
    })
}
