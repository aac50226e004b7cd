//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::Instant;

use limpack::audit::{stream_audit, AuditConfig, AuditReport, GraphAuditor};
use limpack::generators::{
    gen_complete, gen_corona_tree, gen_disjoint_copies, gen_gkr, gen_petersen, gen_star,
    random_graph,
};
use limpack::packing::{
    self, designated_pendants, exhaustive, is_maximal_k_limited_packing, lemma21_maximality,
    pendant_anchored_max_open_packing, pendant_anchored_max_packing, satisfies, Invariant, Tier,
};
use limpack::tree::{tree_domination, tree_total_domination};
use limpack::{
    emit_graph6, parse_graph6, structural_summary, Graph, PackingKind, Rational, TheoremId,
    VertexSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn corpus(name: &str) -> Vec<(String, Graph)> {
    let text =
        std::fs::read_to_string(data_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            (
                l.trim().to_string(),
                parse_graph6(l).unwrap_or_else(|e| panic!("{name}: {l}: {e}")),
            )
        })
        .collect()
}

/// 1000 seeded G(n, p) graphs with 1 <= n <= 12.
fn random_corpus(count: u64) -> Vec<Graph> {
    let ps = [0.2, 0.35, 0.5, 0.65, 0.8];
    (0..count)
        .map(|s| random_graph(1 + (s % 12) as usize, ps[(s % 5) as usize], s).unwrap())
        .collect()
}

fn lines_of(graphs: &[Graph]) -> Vec<String> {
    graphs.iter().map(emit_graph6).collect()
}

fn audit(lines: Vec<String>, theorems: &[TheoremId]) -> AuditReport {
    let config = AuditConfig {
        theorems: theorems.to_vec(),
        workers: 4,
        ..AuditConfig::default()
    };
    stream_audit(lines, &config)
}

/// No violations and nothing skipped for `id`; returns the number evaluated.
fn clean(report: &AuditReport, id: TheoremId, what: &str) -> Result<usize, String> {
    let t = report.summary.tallies.get(&id).copied().unwrap_or_default();
    if t.violations > 0 {
        let first = report
            .summary
            .violations
            .iter()
            .find(|v| v.1 == id)
            .unwrap();
        return Err(format!(
            "{id} on {what}: {} violations, first {}",
            t.violations, first.0
        ));
    }
    if t.skipped > 0 {
        return Err(format!(
            "{id} on {what}: {} checks skipped by the size cap",
            t.skipped
        ));
    }
    if report.summary.parse_errors > 0 {
        return Err(format!("{what}: parse errors"));
    }
    Ok(t.checked)
}

fn int(v: i64) -> Option<Rational> {
    Some(Rational::from_integer(v))
}

fn criterion_1() -> Outcome {
    let mut packings = 0usize;
    for (g6, g) in corpus("connected_le7.g6") {
        for k in 1..=3 {
            for b in exhaustive::all_k_limited_packings(&g, k).map_err(|e| e.to_string())? {
                let add = is_maximal_k_limited_packing(&g, &b, k).map_err(|e| e.to_string())?;
                let sat = lemma21_maximality(&g, &b, k).map_err(|e| e.to_string())?;
                if add != sat {
                    return Err(format!(
                        "{g6} k={k} B={b}: add-test {add}, saturation {sat}"
                    ));
                }
                packings += 1;
            }
        }
    }
    Ok(format!("996 graphs, k = 1..3, {packings} packings agree"))
}

fn criterion_2() -> Outcome {
    let id = TheoremId::LlpLower;
    let a = clean(
        &audit(
            lines_of(
                &corpus("connected_le7.g6")
                    .into_iter()
                    .map(|p| p.1)
                    .collect::<Vec<_>>(),
            ),
            &[id],
        ),
        id,
        "n <= 7 corpus",
    )?;
    let b = clean(
        &audit(lines_of(&random_corpus(1000)), &[id]),
        id,
        "random graphs",
    )?;
    for (k, r, n, value) in [(2u32, 3u32, 8usize, 2i64), (1, 2, 5, 1)] {
        let (g, bp) = gen_gkr(k, r, Some(1)).map_err(|e| e.to_string())?;
        if bp.n != n {
            return Err(format!("G({k},{r}) has n = {}", bp.n));
        }
        let c = limpack::audit::evaluate_bound(&g, id, Some(k)).map_err(|e| e.to_string())?;
        if !(c.sharp && c.lhs == int(value)) {
            return Err(format!("G({k},{r}): lhs {:?} rhs {:?}", c.lhs, c.rhs));
        }
    }
    let c5 = gen_gkr(1, 2, Some(1)).unwrap().0;
    if !(c5.is_connected() && c5.size() == 5 && (0..5).all(|v| c5.degree(v) == 2)) {
        return Err("G(1,2) is not C5".into());
    }
    Ok(format!(
        "{a} corpus checks, {b} random checks, sharp on G(2,3) and G(1,2) = C5"
    ))
}

fn criterion_3() -> Outcome {
    let id = TheoremId::NgL2;
    let a = clean(
        &audit(
            lines_of(
                &corpus("connected_le7.g6")
                    .into_iter()
                    .map(|p| p.1)
                    .collect::<Vec<_>>(),
            ),
            &[id],
        ),
        id,
        "n <= 7 corpus",
    )?;
    let b = clean(
        &audit(lines_of(&random_corpus(1000)), &[id]),
        id,
        "random graphs",
    )?;
    for n in 2..=8 {
        let c = limpack::audit::evaluate_bound(&gen_complete(n).unwrap(), id, None)
            .map_err(|e| e.to_string())?;
        if !(c.sharp && c.lhs == int(n as i64 + 2)) {
            return Err(format!("K{n}: lhs {:?}", c.lhs));
        }
    }
    Ok(format!(
        "{a} corpus checks, {b} random checks, equality on K2..K8"
    ))
}

fn criterion_4() -> Outcome {
    for n in 2..=10 {
        let c =
            limpack::audit::evaluate_bound(&gen_star(n).unwrap(), TheoremId::RhoSupportLower, None)
                .map_err(|e| e.to_string())?;
        if !(c.sharp && c.lhs == int(1)) {
            return Err(format!("K1,{}: lhs {:?} rhs {:?}", n - 1, c.lhs, c.rhs));
        }
    }
    let p = gen_petersen();
    let rho = packing::max_packing(&p).map_err(|e| e.to_string())?.value;
    let henning = limpack::audit::evaluate_bound(&p, TheoremId::RholHenning, None)
        .map_err(|e| e.to_string())?;
    if !(rho == 1 && henning.sharp && henning.lhs == int(1)) {
        return Err(format!(
            "Petersen: rho {rho}, rho_L {:?}, rhs {:?}",
            henning.lhs, henning.rhs
        ));
    }
    let three = gen_disjoint_copies(&p, 3).unwrap();
    let rho3 = packing::max_packing(&three)
        .map_err(|e| e.to_string())?
        .value;
    // n = 30 is past the audit's default cap, so the rhs comes from the formula
    let config = AuditConfig::default();
    let rhs = GraphAuditor::new(&three, &config).formula_rhs(TheoremId::RholHenning, None);
    if !(rho3 == 3 && rhs == int(3)) {
        return Err(format!("3 Petersen copies: rho {rho3}, n/10 = {rhs:?}"));
    }
    Ok("stars n = 2..10 sharp, Petersen rho_L = rho = 1 = n/10, 3 copies rho = 3 = n/10".into())
}

fn criterion_5() -> Outcome {
    let graphs: Vec<Graph> = corpus("connected_le7.g6")
        .into_iter()
        .map(|p| p.1)
        .collect();
    let report = audit(
        lines_of(&graphs),
        &[TheoremId::RhoUpper, TheoremId::RhooUpper],
    );
    let expected = graphs
        .iter()
        .filter(|g| g.order() >= 3 && structural_summary(g).delta_prime.is_some())
        .count();
    let a = clean(&report, TheoremId::RhoUpper, "n <= 7 corpus")?;
    let b = clean(&report, TheoremId::RhooUpper, "n <= 7 corpus")?;
    if a != expected || b != expected {
        return Err(format!("evaluated {a} and {b} graphs, expected {expected}"));
    }
    for n in 3..=10 {
        let c = limpack::audit::evaluate_bound(&gen_star(n).unwrap(), TheoremId::RhoUpper, None)
            .map_err(|e| e.to_string())?;
        if !c.sharp {
            return Err(format!("K1,{}: lhs {:?} rhs {:?}", n - 1, c.lhs, c.rhs));
        }
    }
    Ok(format!("{a} graphs with n >= 3 and delta' defined, both bounds hold; RHO_UPPER sharp on stars n = 3..10"))
}

fn criterion_6() -> Outcome {
    let trees = corpus("trees_le10.g6");
    let ids = [
        TheoremId::MeirMoonEq,
        TheoremId::RallEq,
        TheoremId::TreeGammaUpper,
        TheoremId::TreeGammatUpper,
        TheoremId::RhooUpper,
    ];
    let report = audit(trees.iter().map(|t| t.0.clone()).collect(), &ids);
    for id in ids {
        clean(&report, id, "trees n <= 10")?;
    }
    let meir = report.summary.tallies[&TheoremId::MeirMoonEq];
    let rall = report.summary.tallies[&TheoremId::RallEq];
    let with_two = trees.iter().filter(|t| t.1.order() >= 2).count();
    if meir.checked != trees.len() || rall.checked != with_two {
        return Err(format!(
            "equalities evaluated on {} and {} trees",
            meir.checked, rall.checked
        ));
    }
    let config = AuditConfig::default();
    let mut chain = 0;
    for (g6, t) in trees.iter().filter(|t| t.1.order() >= 3) {
        let a = GraphAuditor::new(t, &config);
        let open = a.formula_rhs(TheoremId::RhooUpper, None);
        let total = a.formula_rhs(TheoremId::TreeGammatUpper, None);
        match (open, total) {
            (Some(o), Some(t)) if o <= t => chain += 1,
            _ => return Err(format!("{g6}: chain fails, {open:?} vs {total:?}")),
        }
    }

    // coronas of every tree base up to 7 vertices, 1..=3 pendants each
    let mut coronas = 0;
    let mut exceptions = Vec::new();
    for (_, base) in trees.iter().filter(|t| t.1.order() <= 7) {
        for p in 1..=3 {
            let t = gen_corona_tree(base, p).unwrap();
            let s = structural_summary(&t);
            let gamma = tree_domination(&t).map_err(|e| e.to_string())?.value;
            let c = limpack::audit::evaluate_bound(&t, TheoremId::TreeGammaUpper, None)
                .map_err(|e| e.to_string())?;
            coronas += 1;
            if !(c.sharp && gamma == s.support_count) {
                exceptions.push(emit_graph6(&t));
            }
        }
    }
    if exceptions != ["A_"] {
        return Err(format!("corona trees not sharp: {exceptions:?}"));
    }
    println!("  FINDING: corona(K1, 1) = K2 has gamma = 1 < s = 2 and (n-l+2s)/3 = 4/3; every other corona is sharp");
    Ok(format!(
        "{} trees: gamma = rho, gamma_t = rho^o ({with_two} with n >= 2), both upper bounds hold, chain on {chain}; {} of {coronas} coronas sharp",
        trees.len(),
        coronas - 1
    ))
}

fn criterion_7() -> Outcome {
    let mut compared = 0usize;
    let invariants = |g: &Graph| {
        let mut all = vec![
            Invariant::Packing,
            Invariant::LowerPacking,
            Invariant::OpenPacking,
            Invariant::Domination,
            Invariant::TotalDomination,
        ];
        for k in 1..=(g.max_degree() as u32 + 1).min(4) {
            all.push(Invariant::LimitedPacking(k));
            all.push(Invariant::LowerLimitedPacking(k));
        }
        all
    };
    for (i, g) in random_corpus(200).iter().enumerate() {
        for inv in invariants(g) {
            let fast = packing::solve(g, inv, Tier::BranchAndBound);
            let slow = packing::solve(g, inv, Tier::Exhaustive);
            match (fast, slow) {
                (Ok(mut a), Ok(mut b)) => {
                    if a.value != b.value
                        || !a.verify(g)
                        || !b.verify(g)
                        || !satisfies(g, &a.set, a.kind)
                    {
                        return Err(format!("graph {i} {inv}: {} vs {}", a.value, b.value));
                    }
                    compared += 1;
                }
                (Err(a), Err(b)) if a == b => {}
                (a, b) => return Err(format!("graph {i} {inv}: {a:?} vs {b:?}")),
            }
        }
    }
    let trees = corpus("trees_le10.g6");
    for (g6, t) in &trees {
        let mut gd = tree_domination(t).map_err(|e| e.to_string())?;
        if !gd.verify(t) || gd.value != exhaustive::domination_number(t).unwrap().value {
            return Err(format!("{g6}: tree gamma {}", gd.value));
        }
        if t.order() >= 2 {
            let mut gt = tree_total_domination(t).map_err(|e| e.to_string())?;
            if !gt.verify(t) || gt.value != exhaustive::total_domination_number(t).unwrap().value {
                return Err(format!("{g6}: tree gamma_t {}", gt.value));
            }
        }
    }
    Ok(format!(
        "{compared} random-graph solves agree and re-verify; tree algorithms match on {} trees",
        trees.len()
    ))
}

fn criterion_8() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = corpus("trees_le10.g6");
    graphs.extend(corpus("connected_le7.g6"));
    let (mut checked, mut fallbacks, mut swaps) = (0usize, 0usize, 0usize);
    let mut impossible = Vec::new();
    for (g6, g) in graphs
        .iter()
        .filter(|(_, g)| structural_summary(g).support_count >= 1)
    {
        checked += 1;
        let all_pendants: VertexSet = designated_pendants(g).into_iter().map(|(_, l)| l).collect();
        for (kind, result) in [
            (PackingKind::PACKING, pendant_anchored_max_packing(g)),
            (
                PackingKind::OpenPacking,
                pendant_anchored_max_open_packing(g),
            ),
        ] {
            let a = result.map_err(|e| format!("{g6} {kind}: {e}"))?;
            let optimum = match kind {
                PackingKind::OpenPacking => exhaustive::max_open_packing(g),
                _ => exhaustive::max_k_limited_packing(g, 1),
            }
            .unwrap()
            .value;
            if a.certificate.value != optimum || !a.certificate.verified || !a.honors_anchors() {
                return Err(format!(
                    "{g6} {kind}: value {} of {optimum}",
                    a.certificate.value
                ));
            }
            fallbacks += a.used_fallback as usize;
            swaps += a.swaps.len();
            if !all_pendants.iter().all(|v| a.certificate.set.contains(v)) {
                // only acceptable if no maximum set of this kind holds them all
                let exists = exhaustive::find_containing(g, kind, optimum, &all_pendants).unwrap();
                if exists.is_some() {
                    return Err(format!("{g6} {kind}: a maximum set with every designated pendant exists but was missed"));
                }
                impossible.push(format!("{g6} ({kind})"));
            }
        }
    }
    if fallbacks > 0 {
        return Err(format!("exhaustive fallback triggered {fallbacks} times"));
    }
    // K2 appears once in each corpus
    if impossible != ["A_ (packing)", "A_ (packing)"] {
        return Err(format!(
            "designated pendants not all coverable on {impossible:?}"
        ));
    }
    println!("  FINDING: K2 (A_) has two mutually designated pendants and rho = 1, so no maximum packing contains both; the anchored packing keeps the lower support's pendant");
    Ok(format!("{checked} graphs with s >= 1, packing and open packing optimal and anchored, {swaps} swaps, 0 fallbacks"))
}

fn run_cli(args: &[&str], input: &str) -> (Vec<u8>, Vec<u8>, Option<i32>) {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_limpack"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn limpack");
    let mut stdin = child.stdin.take().unwrap();
    let input = input.to_string();
    let writer = std::thread::spawn(move || stdin.write_all(input.as_bytes()));
    let out = child.wait_with_output().unwrap();
    writer.join().unwrap().unwrap();
    (out.stdout, out.stderr, out.status.code())
}

fn criterion_9() -> Outcome {
    let path = data_dir().join("connected_le7.g6");
    let input = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    for format in ["text", "json-lines"] {
        let one = run_cli(
            &[
                "audit",
                "--theorem",
                "all",
                "--workers",
                "1",
                "--format",
                format,
            ],
            &input,
        );
        let eight = run_cli(
            &[
                "audit",
                "--theorem",
                "all",
                "--workers",
                "8",
                "--format",
                format,
            ],
            &input,
        );
        if one.2 != Some(0) {
            return Err(format!(
                "{format}: exit status {:?}: {}",
                one.2,
                String::from_utf8_lossy(&one.1)
            ));
        }
        if one != eight {
            return Err(format!("{format}: reports differ between 1 and 8 workers"));
        }
    }
    Ok("audit --theorem all over the n <= 7 corpus: text and json-lines output identical for 1 and 8 workers".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("add-test and saturation maximality agree", criterion_1),
        ("lower k-limited packing bound", criterion_2),
        ("Nordhaus-Gaddum for L_2", criterion_3),
        (
            "support lower bound and Henning bound sharpness",
            criterion_4,
        ),
        ("packing and open packing upper bounds", criterion_5),
        ("tree suite", criterion_6),
        ("solver cross-validation", criterion_7),
        ("pendant-anchored packings", criterion_8),
        ("determinism across worker counts", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS ({name}, {secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL ({name}, {secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
