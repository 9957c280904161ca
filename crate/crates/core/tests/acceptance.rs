//! Acceptance suite: every criterion runs exactly as stated and prints one
//! PASS/FAIL line. The process exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use knotspan::extremal::coefficient_from;
use knotspan::harness::corpus::CorpusEntry;
use knotspan::harness::generate::random_diagram;
use knotspan::harness::verify::{
    kauffman_adequacy_agrees, scan_table_1, span_records, verify_genus_one_degrees, verify_kauffman_span_bound,
    Evaluator, SpanClass,
};
use knotspan::kauffman::support_check;
use knotspan::tangle::EdgeKind;
use knotspan::*;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok { Ok(detail) } else { Err(detail) }
}

fn evaluator() -> Evaluator {
    Evaluator::new(16, None)
}

/// Seeded braid closures that are connected and have 1..=max_c crossings.
fn connected_random(count: usize, max_c: usize, salt: u64) -> Vec<LinkDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(salt);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let width = rng.gen_range(2..=5);
        let length = rng.gen_range(1..=max_c);
        let d = random_diagram(rng.gen(), width, length);
        if d.is_connected() {
            out.push(d);
        }
    }
    out
}

fn table_counts() -> Outcome {
    let mut ev = evaluator();
    let counts = scan_table_1(&mut ev, &common::knots_dir(), &[10, 11, 12]).map_err(|e| e.to_string())?;
    let expected = BTreeMap::from([(10, 3), (11, 15), (12, 78)]);
    ensure(counts == expected, format!("span V = c-1 counts {counts:?}, expected {expected:?}"))
}

fn span_equivalence() -> Outcome {
    let mut ev = evaluator();
    let mut checked = 0;
    let mut violations = Vec::new();
    for c in 10..=12 {
        let records = span_records(&mut ev, &common::knots(c)).map_err(|e| e.to_string())?;
        checked += records.len();
        violations.extend(records.into_iter().filter(|r| r.status == SpanClass::Violation).map(|r| r.name));
    }
    ensure(
        violations.is_empty(),
        format!("{checked} knots with c=10..12, span V = c-1 <=> adequate with g_T(D)=1; violations {violations:?}"),
    )
}

fn alternating_span() -> Outcome {
    let mut ev = evaluator();
    let (mut alternating, mut other, mut bad) = (0, 0, Vec::new());
    let mut flag_mismatch = 0;
    for entry in common::knots_up_to(12) {
        let d = &entry.pd;
        let c = d.crossing_count() as i64;
        let is_alternating = classify_edges(d).iter().all(|k| *k == EdgeKind::Alternating);
        if entry.declared_alternating.is_some_and(|a| a != is_alternating) {
            flag_mismatch += 1;
        }
        let span = ev.bracket(d).map_err(|e| e.to_string())?.span().map_err(|e| e.to_string())?;
        if is_alternating && d.is_reduced() {
            alternating += 1;
            if span != 4 * c {
                bad.push(entry.name.clone());
            }
        } else if !is_alternating {
            other += 1;
            if span > 4 * (c - 1) {
                bad.push(entry.name.clone());
            }
        }
    }
    ensure(
        bad.is_empty() && flag_mismatch == 0,
        format!(
            "{alternating} reduced alternating diagrams with span 4c, {other} non-alternating with span <= 4(c-1); \
             failures {bad:?}, alternation flag mismatches {flag_mismatch}"
        ),
    )
}

fn lambda_substitution() -> Outcome {
    let mut engine = SkeinEngine::new(16);
    let randoms: Vec<LinkDiagram> = common::random_diagrams(200, 10, 4).into_iter().map(|(_, d)| d).collect();
    let corpus: Vec<LinkDiagram> = common::knots_up_to(10).into_iter().map(|e| e.pd).collect();
    let mut mismatches = 0;
    for d in randoms.iter().chain(&corpus) {
        let lambda = engine.lambda(d).map_err(|e| e.to_string())?;
        if lambda.substitute_bracket().map_err(|e| e.to_string())? != kauffman_bracket(d).map_err(|e| e.to_string())? {
            mismatches += 1;
        }
    }
    ensure(
        mismatches == 0,
        format!(
            "Λ(-A^3, A+A^-1) = <D> on {} random closures and {} corpus knots; mismatches {mismatches}",
            randoms.len(),
            corpus.len()
        ),
    )
}

fn extremal_vs_state_sum() -> Outcome {
    let diagrams = connected_random(500, 12, 5);
    let mut mismatches = 0;
    let mut nonzero = 0;
    for d in &diagrams {
        let report = bracket_report(d).map_err(|e| e.to_string())?;
        let max = extreme_coefficient(d, Extreme::Max).map_err(|e| e.to_string())?;
        let min = extreme_coefficient(d, Extreme::Min).map_err(|e| e.to_string())?;
        if BigInt::from(max) != report.coeff_at_max || BigInt::from(min) != report.coeff_at_min {
            mismatches += 1;
        }
        nonzero += usize::from(max != 0) + usize::from(min != 0);
    }
    ensure(
        mismatches == 0,
        format!("{} connected closures (c <= 12), {nonzero}/1000 extremes nonzero; mismatches {mismatches}", diagrams.len()),
    )
}

fn interleave_example() -> Outcome {
    let g = InterleaveGraph::new(3, &[(0, 2), (1, 2)]).map_err(|e| e.to_string())?;
    let sum = g.independent_alternating_sum();
    // The path sits on the all-A side (9 circles); the all-B side has no chords.
    let b_sum = InterleaveGraph::new(0, &[]).map_err(|e| e.to_string())?.independent_alternating_sum();
    let a_max = coefficient_from(9, sum);
    let a_min = coefficient_from(6, b_sum);
    let d: LinkDiagram = common::TWO_TANGLE_15.parse().map_err(|e: DiagramError| e.to_string())?;
    let fixture_graph = interleave_graph(&d, Side::A).map_err(|e| e.to_string())?.edges();
    let report = bracket_report(&d).map_err(|e| e.to_string())?;
    let from_fixture = (
        extreme_coefficient(&d, Extreme::Max).map_err(|e| e.to_string())?,
        extreme_coefficient(&d, Extreme::Min).map_err(|e| e.to_string())?,
    );
    let ok = sum == -1
        && (a_max, a_min) == (-1, -1)
        && fixture_graph == vec![(0, 2), (1, 2)]
        && from_fixture == (-1, -1)
        && report.coeff_at_max == BigInt::from(-1)
        && report.coeff_at_min == BigInt::from(-1);
    ensure(
        ok,
        format!(
            "path graph sum {sum}, a_M {a_max}, a_m {a_min}; 15-crossing diagram graph {fixture_graph:?}, \
             extremes {from_fixture:?}, state sum ({}, {})",
            report.coeff_at_max, report.coeff_at_min
        ),
    )
}

fn edgeless_graphs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let n = rng.gen_range(1..=20);
        let g = InterleaveGraph::new(n, &[]).map_err(|e| e.to_string())?;
        if g.independent_alternating_sum() != 0 {
            bad.push(n);
        }
    }
    let empty = InterleaveGraph::new(0, &[]).map_err(|e| e.to_string())?.independent_alternating_sum();
    ensure(bad.is_empty() && empty == 1, format!("200 edgeless graphs (1..20 vertices) sum to 0, failures {bad:?}; empty graph {empty}"))
}

fn kauffman_adequacy() -> Outcome {
    let mut ev = evaluator();
    let entries = common::knots_up_to(10);
    let (mut disagree, mut support, mut adequate) = (Vec::new(), Vec::new(), 0);
    for e in &entries {
        let lambda = ev.lambda(&e.pd).map_err(|e| e.to_string())?;
        if !kauffman_adequacy_agrees(&e.pd, &lambda) {
            disagree.push(e.name.clone());
        }
        if !support_check(&lambda, e.pd.crossing_count()) {
            support.push(e.name.clone());
        }
        adequate += usize::from(is_adequate_diagram(&e.pd));
    }
    ensure(
        disagree.is_empty() && support.is_empty(),
        format!(
            "{} knots c <= 10 ({adequate} adequate diagrams): diagonal witness disagreements {disagree:?}, \
             |r|+s > c {support:?}",
            entries.len()
        ),
    )
}

fn genus_one_degrees() -> Outcome {
    let mut ev = evaluator();
    let entries: Vec<CorpusEntry> = common::knots_up_to(11);
    let rows = verify_genus_one_degrees(&mut ev, &entries, 11).map_err(|e| e.to_string())?;
    let failures: Vec<&str> = rows.iter().filter(|r| !r.check.holds()).map(|r| r.name.as_str()).collect();
    // Same numbers read with the state labels exchanged, i.e. for Λ(a^-1, z).
    let exchanged = rows
        .iter()
        .filter(|r| {
            let k = &r.check;
            k.max_deg_a == -k.expected_min && k.min_deg_a == -k.expected_max
        })
        .count();
    ensure(
        !rows.is_empty() && failures.is_empty(),
        format!(
            "{} adequate g_T(D)=1 knots c <= 11: maxdeg_a Λ = |sA|-1, mindeg_a Λ = 1-|sB|, span_a = c-2 \
             (bracket-substitution convention); failures {failures:?}. Informational: {exchanged}/{} also match \
             with the sA/sB roles exchanged",
            rows.len(),
            rows.len()
        ),
    )
}

fn kauffman_span_bound() -> Outcome {
    let mut ev = evaluator();
    let report = verify_kauffman_span_bound(&mut ev, &common::knots_up_to(10), 10).map_err(|e| e.to_string())?;
    let adequate = report.rows.iter().filter(|r| r.adequate).count();
    ensure(
        report.violations == 0,
        format!(
            "span_a Λ <= c - 2 g_T(D) on {adequate} adequate knots c <= 10: {} violations \
             ({} non-adequate diagrams exceed the diagram bound, not counted)",
            report.violations, report.flagged
        ),
    )
}

/// Alternating sum over independent sets by direct enumeration.
fn independent_sum_by_subsets(g: &InterleaveGraph) -> i64 {
    let n = g.vertex_count();
    let adj: Vec<u32> =
        (0..n).map(|u| (0..n).filter(|&v| v != u && g.adjacent(u, v)).fold(0, |m, v| m | 1 << v)).collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s & 1 << u == 0 || adj[u] & s == 0))
        .map(|s| if s.count_ones() % 2 == 0 { 1 } else { -1 })
        .sum()
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut failures: BTreeMap<&str, usize> = BTreeMap::new();
    let mut fail = |name: &'static str, ok: bool| {
        if !ok {
            *failures.entry(name).or_default() += 1;
        }
    };
    let (mut graphs, mut cycle_forms) = (0, 0);
    for _ in 0..1000 {
        let d = random_diagram(rng.gen(), rng.gen_range(2..=6), rng.gen_range(1..=14));
        let m = d.mirror();
        let b = kauffman_bracket(&d).map_err(|e| e.to_string())?;
        let sa = resolve_all(&d, Side::A);
        let sb = resolve_all(&d, Side::B);
        fail("mirror", m.writhe() == -d.writhe()
            && kauffman_bracket(&m).map_err(|e| e.to_string())? == b.scale_exponents(-1)
            && resolve_all(&m, Side::A).circle_count == sb.circle_count
            && resolve_all(&m, Side::B).circle_count == sa.circle_count
            && m.mirror() == d);
        fail("mod4", b.mod4_support_check().map_err(|e| e.to_string())?);
        fail("bounds", bracket_report(&d).map_err(|e| e.to_string())?.within_bounds());
        let back: Result<LinkDiagram, _> = d.to_pd_string().parse();
        fail("round-trip", back.as_ref() == Ok(&d));
        if !d.is_connected() {
            continue;
        }
        for side in [Side::A, Side::B] {
            let g = interleave_graph(&d, side).map_err(|e| e.to_string())?;
            if g.vertex_count() <= 20 {
                graphs += 1;
                fail("independence", g.independent_alternating_sum() == independent_sum_by_subsets(&g));
            }
        }
        if is_genus_one_cycle_form(&d).map_err(|e| e.to_string())?.holds {
            cycle_forms += 1;
            fail("cycle-form", turaev_genus_diagram(&d).map_err(|e| e.to_string())? <= 1);
        }
    }
    ensure(
        failures.is_empty(),
        format!(
            "1000 seeded closures: mirror, mod-4 support, degree bounds, PD round trip, independence recursion vs \
             enumeration ({graphs} graphs), cycle form => g_T <= 1 ({cycle_forms} cycle forms); failures {failures:?}"
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("span V = c-1 counts at c=10,11,12", table_counts),
        ("span V = c-1 iff adequate with diagram Turaev genus one", span_equivalence),
        ("bracket span of alternating and non-alternating diagrams", alternating_span),
        ("Kauffman polynomial substitutes to the bracket", lambda_substitution),
        ("extreme coefficients from interleave graphs", extremal_vs_state_sum),
        ("path interleave graph and the 15-crossing diagram", interleave_example),
        ("edgeless interleave graphs", edgeless_graphs),
        ("adequacy read off the Kauffman support", kauffman_adequacy),
        ("a-degrees of adequate Turaev genus one knots", genus_one_degrees),
        ("Kauffman a-span bound by diagram Turaev genus", kauffman_span_bound),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} [{:>2}] {title} ({secs:.1}s): {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
