use std::cell::RefCell;

use clap::Args;
use limpack::audit::{stream_audit_with, AuditConfig, AuditItem, CheckRecord, CsvRow};
use limpack::TheoremId;

use crate::io::{input_lines, Sink};
use crate::{Failure, RunArgs, EXIT_INPUT, EXIT_VIOLATION};

#[derive(Args)]
pub struct AuditArgs {
    /// Bound to evaluate, or `all`.
    #[arg(long, default_value = "all")]
    theorem: String,
    /// Evaluate LLP_LOWER at this k only, instead of 1..=Δ+1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: Option<u32>,
    #[command(flatten)]
    run: RunArgs,
}

pub fn run(args: AuditArgs) -> Result<u8, Failure> {
    let theorems = if args.theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![args.theorem.parse::<TheoremId>().map_err(Failure::input)?]
    };
    if args.k.is_some() && !theorems.iter().any(|t| t.takes_k()) {
        return Err(Failure::input(format!(
            "--k only applies to {}",
            TheoremId::LlpLower
        )));
    }
    let config = AuditConfig {
        lower_cap: args.run.lower_cap as usize,
        cap: args.run.cap as usize,
        workers: args.run.workers as usize,
        theorems,
        k: args.k,
    };

    let read_error = RefCell::new(None);
    let lines = input_lines(&args.run.input)?.map_while(|l| match l {
        Ok(l) => Some(l),
        Err(e) => {
            *read_error.borrow_mut() = Some(e);
            None
        }
    });
    let mut sink = Sink::new(args.run.format);
    let mut write_error = None;
    let summary = stream_audit_with(lines, &config, |item| {
        if write_error.is_some() {
            return;
        }
        match item {
            AuditItem::ParseError(p) => eprintln!("line {}: parse error: {}", p.line, p.message),
            AuditItem::Graph(audit) => {
                for check in &audit.checks {
                    let record = CheckRecord::new(&audit.graph6, check);
                    let row = CsvRow::from(record.clone());
                    if let Err(e) = sink.emit(&check.to_text(&audit.graph6), &record, &row) {
                        write_error = Some(e);
                        return;
                    }
                }
            }
        }
    });
    if let Some(e) = write_error {
        return Err(e);
    }
    if sink.is_text() {
        sink.write_raw(&summary.to_text())?;
    } else {
        eprint!("{}", summary.to_text());
    }
    sink.finish()?;
    if let Some(e) = read_error.into_inner() {
        return Err(e.into());
    }
    Ok(if summary.total_violations() > 0 {
        EXIT_VIOLATION
    } else if summary.parse_errors > 0 {
        EXIT_INPUT
    } else {
        0
    })
}
