//! Flat, serializable views of a [`BoundCheck`] for machine-readable output.

use serde::Serialize;

use super::{BoundCheck, CheckStatus, Rational, Relation, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalRecord {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalRecord {
    fn from(r: Rational) -> Self {
        RationalRecord {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

/// One json-lines record. Field order is part of the output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord<'a> {
    pub graph6: &'a str,
    pub theorem: TheoremId,
    pub k: Option<u32>,
    pub applicable: bool,
    pub status: CheckStatus,
    pub reason: Option<&'a str>,
    pub lhs: Option<RationalRecord>,
    pub rhs: Option<RationalRecord>,
    pub relation: Relation,
    pub holds: bool,
    pub sharp: bool,
}

impl<'a> CheckRecord<'a> {
    pub fn new(graph6: &'a str, check: &'a BoundCheck) -> Self {
        CheckRecord {
            graph6,
            theorem: check.theorem,
            k: check.k,
            applicable: check.applicable(),
            status: check.status,
            reason: check.reason.as_deref(),
            lhs: check.lhs.map(Into::into),
            rhs: check.rhs.map(Into::into),
            relation: check.relation,
            holds: check.holds,
            sharp: check.sharp,
        }
    }
}

/// The same record with the rationals split into columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CsvRow<'a> {
    pub graph6: &'a str,
    pub theorem: TheoremId,
    pub k: Option<u32>,
    pub applicable: bool,
    pub status: CheckStatus,
    pub reason: Option<&'a str>,
    pub lhs_num: Option<i64>,
    pub lhs_den: Option<i64>,
    pub rhs_num: Option<i64>,
    pub rhs_den: Option<i64>,
    pub relation: Relation,
    pub holds: bool,
    pub sharp: bool,
}

impl<'a> From<CheckRecord<'a>> for CsvRow<'a> {
    fn from(r: CheckRecord<'a>) -> Self {
        CsvRow {
            graph6: r.graph6,
            theorem: r.theorem,
            k: r.k,
            applicable: r.applicable,
            status: r.status,
            reason: r.reason,
            lhs_num: r.lhs.map(|x| x.num),
            lhs_den: r.lhs.map(|x| x.den),
            rhs_num: r.rhs.map(|x| x.num),
            rhs_den: r.rhs.map(|x| x.den),
            relation: r.relation,
            holds: r.holds,
            sharp: r.sharp,
        }
    }
}

fn ratio(r: &Option<Rational>) -> String {
    match r {
        Some(r) if *r.denom() == 1 => r.numer().to_string(),
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => "-".into(),
    }
}

impl BoundCheck {
    /// One line of the text report.
    pub fn to_text(&self, graph6: &str) -> String {
        let label = match self.k {
            Some(k) => format!("{} k={k}", self.theorem),
            None => self.theorem.to_string(),
        };
        let reason = self.reason.as_deref().unwrap_or("");
        match self.status {
            CheckStatus::Inapplicable => format!("{graph6}\t{label}\tinapplicable: {reason}"),
            CheckStatus::Skipped => format!("{graph6}\t{label}\tskipped: {reason}"),
            CheckStatus::Evaluated => {
                let verdict = match (self.holds, self.sharp) {
                    (false, _) => "VIOLATION",
                    (true, true) => "sharp",
                    (true, false) => "holds",
                };
                format!(
                    "{graph6}\t{label}\t{verdict}\t{} {} {}",
                    ratio(&self.lhs),
                    self.relation.symbol(),
                    ratio(&self.rhs)
                )
            }
        }
    }
}
