use std::collections::HashMap;

use serde::Serialize;

use crate::graph::{structural_summary, Graph, StructuralSummary};
use crate::packing::{self, Invariant, PackingCertificate};
use crate::tree;

use super::{AuditConfig, AuditError, Rational, Relation, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Evaluated,
    Inapplicable,
    Skipped,
}

/// One bound evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub theorem: TheoremId,
    pub k: Option<u32>,
    pub status: CheckStatus,
    /// Why the check was inapplicable or skipped.
    pub reason: Option<String>,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub relation: Relation,
    pub holds: bool,
    pub sharp: bool,
    /// Certificates for the invariants on the left-hand side.
    pub witnesses: Vec<PackingCertificate>,
}

impl BoundCheck {
    fn not_evaluated(
        theorem: TheoremId,
        k: Option<u32>,
        status: CheckStatus,
        reason: String,
    ) -> Self {
        BoundCheck {
            theorem,
            k,
            status,
            reason: Some(reason),
            lhs: None,
            rhs: None,
            relation: theorem.relation(),
            holds: false,
            sharp: false,
            witnesses: Vec::new(),
        }
    }

    fn evaluated(
        theorem: TheoremId,
        k: Option<u32>,
        lhs: Rational,
        rhs: Rational,
        witnesses: Vec<PackingCertificate>,
    ) -> Self {
        let relation = theorem.relation();
        let holds = relation.holds(&lhs, &rhs);
        BoundCheck {
            theorem,
            k,
            status: CheckStatus::Evaluated,
            reason: None,
            lhs: Some(lhs),
            rhs: Some(rhs),
            relation,
            holds,
            sharp: holds && lhs == rhs,
            witnesses,
        }
    }

    pub fn applicable(&self) -> bool {
        self.status != CheckStatus::Inapplicable
    }

    /// Evaluated and false.
    pub fn is_violation(&self) -> bool {
        self.status == CheckStatus::Evaluated && !self.holds
    }

    /// `|lhs - rhs|` for evaluated checks.
    pub fn slack(&self) -> Option<Rational> {
        match (self.lhs, self.rhs) {
            (Some(l), Some(r)) if l >= r => Some(l - r),
            (Some(l), Some(r)) => Some(r - l),
            _ => None,
        }
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Quantity {
    Solver(Invariant),
    /// `L_2` of the complement.
    ComplementL2,
    TreeGamma,
    TreeGammaT,
}

/// Evaluates bounds on a single graph, computing each invariant at most once.
pub struct GraphAuditor<'g> {
    graph: &'g Graph,
    summary: StructuralSummary,
    config: &'g AuditConfig,
    complement: Option<Graph>,
    cache: HashMap<Quantity, Result<PackingCertificate, String>>,
}

impl<'g> GraphAuditor<'g> {
    pub fn new(graph: &'g Graph, config: &'g AuditConfig) -> Self {
        GraphAuditor {
            graph,
            summary: structural_summary(graph),
            config,
            complement: None,
            cache: HashMap::new(),
        }
    }

    pub fn summary(&self) -> &StructuralSummary {
        &self.summary
    }

    fn cap_for(&self, q: Quantity) -> Option<usize> {
        match q {
            Quantity::Solver(inv) if inv.is_lower() => Some(self.config.lower_cap),
            Quantity::TreeGamma | Quantity::TreeGammaT => None,
            _ => Some(self.config.cap),
        }
    }

    fn compute(&mut self, q: Quantity) -> Result<PackingCertificate, String> {
        if let Some(hit) = self.cache.get(&q) {
            return hit.clone();
        }
        let n = self.graph.order();
        // k >= Δ+1 is answered without search, so no cap applies.
        let trivial = match q {
            Quantity::Solver(Invariant::LimitedPacking(k) | Invariant::LowerLimitedPacking(k)) => {
                k as usize > self.summary.max_degree
            }
            _ => false,
        };
        let result = match self.cap_for(q) {
            Some(cap) if n > cap && !trivial => Err(format!("size cap: n = {n} exceeds {cap}")),
            _ => match q {
                Quantity::Solver(inv) => {
                    packing::solve(self.graph, inv, packing::Tier::BranchAndBound)
                        .map_err(|e| e.to_string())
                }
                Quantity::ComplementL2 => {
                    let co = self
                        .complement
                        .get_or_insert_with(|| self.graph.complement());
                    packing::max_k_limited_packing(co, 2).map_err(|e| e.to_string())
                }
                Quantity::TreeGamma => tree::tree_domination(self.graph).map_err(|e| e.to_string()),
                Quantity::TreeGammaT => {
                    tree::tree_total_domination(self.graph).map_err(|e| e.to_string())
                }
            },
        };
        self.cache.insert(q, result.clone());
        result
    }

    fn has_k2_component(&self) -> bool {
        let g = self.graph;
        g.vertices()
            .any(|v| g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 1)
    }

    /// Why `id` does not apply to this graph, if it does not.
    fn inapplicable(&self, id: TheoremId, k: Option<u32>) -> Option<String> {
        let s = &self.summary;
        let tree_needed = || (!s.is_tree).then(|| "not a tree".to_string());
        match id {
            TheoremId::LlpLower => {
                let k = k.unwrap_or(1) as usize;
                (s.max_degree > 0 && k > s.max_degree + 1)
                    .then(|| format!("k = {k} > max degree + 1 = {}", s.max_degree + 1))
            }
            // Every support is credited a leaf of its own, which a K2
            // component next to a vertex of degree >= 2 cannot provide.
            TheoremId::RhoSupportLower => (s.n > 2 && self.has_k2_component())
                .then(|| "K2 component in a larger graph".into()),
            TheoremId::NgL2 | TheoremId::RhoGzLower | TheoremId::RholHenning => None,
            TheoremId::RhoUpper | TheoremId::RhooUpper => {
                if s.n < 3 {
                    Some("n < 3".into())
                } else if !s.is_connected {
                    Some("not connected".into())
                } else if s.delta_prime.is_none() {
                    Some("delta' undefined".into())
                } else {
                    None
                }
            }
            TheoremId::TreeGammaUpper | TheoremId::TreeGammatUpper | TheoremId::RallEq => {
                tree_needed().or_else(|| (s.n < 2).then(|| "n < 2".into()))
            }
            TheoremId::MeirMoonEq => tree_needed(),
            TheoremId::CubicL2Balister => {
                (s.regular_degree != Some(3)).then(|| "not 3-regular".into())
            }
        }
    }

    /// Evaluates `id` (with `k` for `LLP_LOWER`).
    pub fn evaluate(&mut self, id: TheoremId, k: Option<u32>) -> Result<BoundCheck, AuditError> {
        match (id.takes_k(), k) {
            (true, None) => return Err(AuditError::MissingK(id)),
            (true, Some(0)) => return Err(AuditError::InvalidK),
            (false, Some(_)) => return Err(AuditError::UnexpectedK(id)),
            _ => {}
        }
        if let Some(reason) = self.inapplicable(id, k) {
            return Ok(BoundCheck::not_evaluated(
                id,
                k,
                CheckStatus::Inapplicable,
                reason,
            ));
        }
        let skip = |reason: String| {
            Ok(BoundCheck::not_evaluated(
                id,
                k,
                CheckStatus::Skipped,
                reason,
            ))
        };

        let s = self.summary.clone();
        let n = s.n as i64;
        let max_deg = s.max_degree as i64;
        let min_deg = s.min_degree as i64;
        let leaves = s.leaf_count as i64;
        let supports = s.support_count as i64;

        macro_rules! get {
            ($q:expr) => {
                match self.compute($q) {
                    Ok(cert) => cert,
                    Err(reason) => return skip(reason),
                }
            };
        }

        let check = match id {
            TheoremId::LlpLower => {
                let k = k.expect("checked above") as i64;
                let cert = get!(Quantity::Solver(Invariant::LowerLimitedPacking(k as u32)));
                let den = max_deg * (max_deg - k + 1) + k;
                BoundCheck::evaluated(
                    id,
                    Some(k as u32),
                    int(cert.value),
                    frac(k * n, den),
                    vec![cert],
                )
            }
            TheoremId::NgL2 => {
                let here = get!(Quantity::Solver(Invariant::LimitedPacking(2)));
                let there = get!(Quantity::ComplementL2);
                BoundCheck::evaluated(
                    id,
                    None,
                    int(here.value + there.value),
                    int(s.n + 2),
                    vec![here, there],
                )
            }
            TheoremId::RhoSupportLower => {
                let cert = get!(Quantity::Solver(Invariant::Packing));
                let rhs = frac(
                    n + supports * (max_deg * max_deg - max_deg),
                    1 + max_deg * max_deg,
                );
                BoundCheck::evaluated(id, None, int(cert.value), rhs, vec![cert])
            }
            TheoremId::RhoGzLower => {
                let cert = get!(Quantity::Solver(Invariant::Packing));
                let rhs = frac(n + max_deg * (max_deg - min_deg), max_deg * max_deg + 1);
                BoundCheck::evaluated(id, None, int(cert.value), rhs, vec![cert])
            }
            TheoremId::RholHenning => {
                let cert = get!(Quantity::Solver(Invariant::LowerPacking));
                BoundCheck::evaluated(
                    id,
                    None,
                    int(cert.value),
                    frac(n, max_deg * max_deg + 1),
                    vec![cert],
                )
            }
            TheoremId::RhoUpper => {
                let dp = s.delta_prime.expect("checked above") as i64;
                let cert = get!(Quantity::Solver(Invariant::Packing));
                let rhs = frac(n - leaves + dp * supports, 1 + dp);
                BoundCheck::evaluated(id, None, int(cert.value), rhs, vec![cert])
            }
            TheoremId::TreeGammaUpper => {
                let cert = get!(Quantity::TreeGamma);
                BoundCheck::evaluated(
                    id,
                    None,
                    int(cert.value),
                    frac(n - leaves + 2 * supports, 3),
                    vec![cert],
                )
            }
            TheoremId::RhooUpper => {
                let dp = s.delta_prime.expect("checked above") as i64;
                let cert = get!(Quantity::Solver(Invariant::OpenPacking));
                let rhs = frac(n + (dp - 1) * supports, dp);
                BoundCheck::evaluated(id, None, int(cert.value), rhs, vec![cert])
            }
            TheoremId::TreeGammatUpper => {
                let cert = get!(Quantity::TreeGammaT);
                BoundCheck::evaluated(id, None, int(cert.value), frac(n + supports, 2), vec![cert])
            }
            TheoremId::MeirMoonEq => {
                let gamma = get!(Quantity::TreeGamma);
                let rho = get!(Quantity::Solver(Invariant::Packing));
                BoundCheck::evaluated(id, None, int(gamma.value), int(rho.value), vec![gamma, rho])
            }
            TheoremId::RallEq => {
                let gamma_t = get!(Quantity::TreeGammaT);
                let rho_o = get!(Quantity::Solver(Invariant::OpenPacking));
                BoundCheck::evaluated(
                    id,
                    None,
                    int(gamma_t.value),
                    int(rho_o.value),
                    vec![gamma_t, rho_o],
                )
            }
            TheoremId::CubicL2Balister => {
                let cert = get!(Quantity::Solver(Invariant::LimitedPacking(2)));
                BoundCheck::evaluated(id, None, int(cert.value), frac(n, 3), vec![cert])
            }
        };
        Ok(check)
    }

    /// Right-hand side of `id` from the structural summary alone, where it
    /// does not depend on a computed invariant. `None` for the equalities and
    /// the Nordhaus-Gaddum bound, or when `id` is inapplicable.
    pub fn formula_rhs(&self, id: TheoremId, k: Option<u32>) -> Option<Rational> {
        if self.inapplicable(id, k).is_some() {
            return None;
        }
        let s = &self.summary;
        let (n, d, dmin, l, sc) = (
            s.n as i64,
            s.max_degree as i64,
            s.min_degree as i64,
            s.leaf_count as i64,
            s.support_count as i64,
        );
        Some(match id {
            TheoremId::LlpLower => {
                let k = k? as i64;
                frac(k * n, d * (d - k + 1) + k)
            }
            TheoremId::RhoSupportLower => frac(n + sc * (d * d - d), 1 + d * d),
            TheoremId::RhoGzLower => frac(n + d * (d - dmin), d * d + 1),
            TheoremId::RholHenning => frac(n, d * d + 1),
            TheoremId::RhoUpper => {
                let dp = s.delta_prime? as i64;
                frac(n - l + dp * sc, 1 + dp)
            }
            TheoremId::TreeGammaUpper => frac(n - l + 2 * sc, 3),
            TheoremId::RhooUpper => {
                let dp = s.delta_prime? as i64;
                frac(n + (dp - 1) * sc, dp)
            }
            TheoremId::TreeGammatUpper => frac(n + sc, 2),
            TheoremId::CubicL2Balister => frac(n, 3),
            TheoremId::NgL2 | TheoremId::MeirMoonEq | TheoremId::RallEq => return None,
        })
    }

    /// Every check selected by the configuration, in registry order;
    /// `LLP_LOWER` expands over `k = 1..=Δ+1` unless the config pins `k`.
    pub fn run(&mut self) -> Vec<BoundCheck> {
        let mut checks = Vec::new();
        let theorems = self.config.theorems.clone();
        for id in theorems {
            if id.takes_k() {
                let ks: Vec<u32> = match self.config.k {
                    Some(k) => vec![k],
                    None => (1..=self.summary.max_degree as u32 + 1).collect(),
                };
                for k in ks {
                    if let Ok(c) = self.evaluate(id, Some(k)) {
                        checks.push(c);
                    }
                }
            } else if let Ok(c) = self.evaluate(id, None) {
                checks.push(c);
            }
        }
        checks
    }
}

/// Evaluates one bound on `g` with the default size caps.
pub fn evaluate_bound(g: &Graph, id: TheoremId, k: Option<u32>) -> Result<BoundCheck, AuditError> {
    let config = AuditConfig::default();
    GraphAuditor::new(g, &config).evaluate(id, k)
}
