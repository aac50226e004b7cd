//! Exact evaluation of the packing and domination bounds on concrete graphs.
//!
//! [`evaluate_bound`] checks one bound, [`audit_all`] every bound on one
//! graph, and [`stream_audit`] a whole corpus of graph6 lines. All sides are
//! [`Rational`]s; nothing is compared in floating point.

mod evaluate;
mod record;
mod theorem;

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{emit_graph6, parse_graph6, Graph};

pub use evaluate::{evaluate_bound, BoundCheck, CheckStatus, GraphAuditor};
pub use record::{CheckRecord, CsvRow, RationalRecord};
pub use theorem::{Relation, TheoremId};

pub type Rational = num_rational::Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("{0} needs a value of k")]
    MissingK(TheoremId),
    #[error("{0} does not take k")]
    UnexpectedK(TheoremId),
    #[error("k must be at least 1")]
    InvalidK,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditConfig {
    /// Largest order for which lower k-limited packing numbers are computed.
    pub lower_cap: usize,
    /// Largest order for every other exponential search.
    pub cap: usize,
    /// Threads used to evaluate distinct graphs.
    pub workers: usize,
    /// Bounds to evaluate, in this order.
    pub theorems: Vec<TheoremId>,
    /// Pin `LLP_LOWER` to one `k` instead of `1..=Δ+1`.
    pub k: Option<u32>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            lower_cap: 16,
            cap: 20,
            workers: 1,
            theorems: TheoremId::ALL.to_vec(),
            k: None,
        }
    }
}

/// Every check made on one input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAudit {
    /// 1-based input line.
    pub line: usize,
    /// The input line as read (trimmed).
    pub graph6: String,
    pub checks: Vec<BoundCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFailure {
    pub line: usize,
    pub text: String,
    pub message: String,
}

/// One unit of streamed output, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditItem {
    Graph(GraphAudit),
    ParseError(ParseFailure),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    /// Records produced, whatever their status.
    pub records: usize,
    pub applicable: usize,
    /// Applicable and actually evaluated.
    pub checked: usize,
    pub skipped: usize,
    pub holds: usize,
    pub sharp: usize,
    pub violations: usize,
}

impl Tally {
    pub fn inapplicable(&self) -> usize {
        self.records - self.applicable
    }
}

/// The evaluated instance with the smallest `|lhs - rhs|` seen for a bound;
/// the earliest one wins ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub graph6: String,
    pub k: Option<u32>,
    pub slack: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub graphs: usize,
    pub parse_errors: usize,
    pub tallies: BTreeMap<TheoremId, Tally>,
    pub extremal: BTreeMap<TheoremId, Extremal>,
    /// `(graph6, theorem, k)` of every violated check, in input order.
    pub violations: Vec<(String, TheoremId, Option<u32>)>,
}

impl AuditSummary {
    pub fn add(&mut self, item: &AuditItem) {
        let audit = match item {
            AuditItem::ParseError(_) => {
                self.parse_errors += 1;
                return;
            }
            AuditItem::Graph(a) => a,
        };
        self.graphs += 1;
        for check in &audit.checks {
            let t = self.tallies.entry(check.theorem).or_default();
            t.records += 1;
            if !check.applicable() {
                continue;
            }
            t.applicable += 1;
            match check.status {
                CheckStatus::Skipped => t.skipped += 1,
                CheckStatus::Inapplicable => {}
                CheckStatus::Evaluated => {
                    t.checked += 1;
                    if check.holds {
                        t.holds += 1;
                    } else {
                        t.violations += 1;
                        self.violations
                            .push((audit.graph6.clone(), check.theorem, check.k));
                    }
                    if check.sharp {
                        t.sharp += 1;
                    }
                }
            }
            if let Some(slack) = check.slack() {
                let better = self
                    .extremal
                    .get(&check.theorem)
                    .map_or(true, |e| slack < e.slack);
                if better {
                    self.extremal.insert(
                        check.theorem,
                        Extremal {
                            graph6: audit.graph6.clone(),
                            k: check.k,
                            slack,
                        },
                    );
                }
            }
        }
    }

    pub fn total_violations(&self) -> usize {
        self.tallies.values().map(|t| t.violations).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.parse_errors == 0 && self.total_violations() == 0
    }

    /// The summary footer as an aligned table.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# graphs {}  parse errors {}  violations {}\n",
            self.graphs,
            self.parse_errors,
            self.total_violations()
        );
        out.push_str(&format!(
            "# {:<18} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}  {}\n",
            "theorem",
            "records",
            "inapp",
            "skipped",
            "checked",
            "holds",
            "sharp",
            "violations",
            "min-slack"
        ));
        for (id, t) in &self.tallies {
            let extremal = match self.extremal.get(id) {
                Some(e) => match e.k {
                    Some(k) => format!("{} (k={k}, slack {})", e.graph6, e.slack),
                    None => format!("{} (slack {})", e.graph6, e.slack),
                },
                None => "-".into(),
            };
            out.push_str(&format!(
                "# {:<18} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}  {}\n",
                id.name(),
                t.records,
                t.inapplicable(),
                t.skipped,
                t.checked,
                t.holds,
                t.sharp,
                t.violations,
                extremal
            ));
        }
        for (g6, id, k) in &self.violations {
            match k {
                Some(k) => out.push_str(&format!("# VIOLATION {id} k={k} {g6}\n")),
                None => out.push_str(&format!("# VIOLATION {id} {g6}\n")),
            }
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub items: Vec<AuditItem>,
    pub summary: AuditSummary,
}

impl AuditReport {
    pub fn graphs(&self) -> impl Iterator<Item = &GraphAudit> {
        self.items.iter().filter_map(|i| match i {
            AuditItem::Graph(g) => Some(g),
            AuditItem::ParseError(_) => None,
        })
    }

    pub fn checks(&self) -> impl Iterator<Item = &BoundCheck> {
        self.graphs().flat_map(|g| g.checks.iter())
    }

    pub fn find(&self, id: TheoremId, k: Option<u32>) -> Option<&BoundCheck> {
        self.checks().find(|c| c.theorem == id && c.k == k)
    }
}

/// Runs every configured check on `g`.
pub fn audit_graph(g: &Graph, config: &AuditConfig) -> Vec<BoundCheck> {
    GraphAuditor::new(g, config).run()
}

/// Every bound on `g` under the default configuration, as a one-graph report.
pub fn audit_all(g: &Graph) -> AuditReport {
    let config = AuditConfig::default();
    let item = AuditItem::Graph(GraphAudit {
        line: 1,
        graph6: emit_graph6(g),
        checks: audit_graph(g, &config),
    });
    let mut summary = AuditSummary::default();
    summary.add(&item);
    AuditReport {
        items: vec![item],
        summary,
    }
}

fn audit_line(line: usize, text: String, config: &AuditConfig) -> AuditItem {
    match parse_graph6(&text) {
        Ok(g) => AuditItem::Graph(GraphAudit {
            line,
            checks: audit_graph(&g, config),
            graph6: text,
        }),
        Err(e) => AuditItem::ParseError(ParseFailure {
            line,
            text,
            message: e.to_string(),
        }),
    }
}

const CHUNK: usize = 256;

/// Audits each non-blank line, handing items to `sink` in input order.
/// Graphs are evaluated on `config.workers` threads in chunks; the output
/// does not depend on the worker count.
pub fn stream_audit_with<I, F>(lines: I, config: &AuditConfig, mut sink: F) -> AuditSummary
where
    I: IntoIterator<Item = String>,
    F: FnMut(&AuditItem),
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .expect("thread pool");
    let mut summary = AuditSummary::default();
    let mut lines = lines
        .into_iter()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty());
    loop {
        let chunk: Vec<(usize, String)> = lines.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let items: Vec<AuditItem> = pool.install(|| {
            chunk
                .into_par_iter()
                .map(|(line, text)| audit_line(line, text, config))
                .collect()
        });
        for item in &items {
            summary.add(item);
            sink(item);
        }
    }
    summary
}

pub fn stream_audit<I: IntoIterator<Item = String>>(lines: I, config: &AuditConfig) -> AuditReport {
    let mut items = Vec::new();
    let summary = stream_audit_with(lines, config, |item| items.push(item.clone()));
    AuditReport { items, summary }
}
