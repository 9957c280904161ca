//! Batch checks over corpora and generated diagrams.
//!
//! Crossing numbers and link Turaev genus are global minima the library
//! cannot compute; the checks trust `c=` annotations for minimality and use
//! diagram-level quantities everywhere else.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::cache::{diagram_key, Cache};
use super::corpus::{ingest, CorpusEntry, CorpusError};
use crate::bracket::{jones_from_bracket, kauffman_bracket, BracketError};
use crate::diagram::LinkDiagram;
use crate::kauffman::{adequacy_witness, genus_one_degree_check, DegreeCheck, KauffmanError, SkeinEngine};
use crate::laurent::{LaurentPoly1, LaurentPoly2, PolyError};
use crate::states::{resolve_all, turaev_genus_from_counts, Side, StateError};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{name}: declared crossing number {declared} but the diagram has {actual} crossings")]
    NonMinimal { name: String, declared: usize, actual: usize },
    #[error("{name}: {crossings} crossings exceeds the limit of {limit}")]
    TooManyCrossings { name: String, crossings: usize, limit: usize },
    #[error("span/adequacy equivalence fails for {name}: {pd}")]
    Violation { name: String, pd: String },
    #[error("cache: {0}")]
    Cache(#[from] std::io::Error),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Kauffman(#[from] KauffmanError),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Computes invariants through an optional persistent cache.
pub struct Evaluator {
    pub max_crossings: usize,
    cache: Option<Cache>,
    skein: SkeinEngine,
}

impl Evaluator {
    pub fn new(max_crossings: usize, cache: Option<Cache>) -> Self {
        Self { max_crossings, cache, skein: SkeinEngine::new(max_crossings) }
    }

    fn check_size(&self, name: &str, d: &LinkDiagram) -> Result<(), VerifyError> {
        let c = d.crossing_count();
        if c > self.max_crossings {
            return Err(VerifyError::TooManyCrossings { name: name.to_string(), crossings: c, limit: self.max_crossings });
        }
        Ok(())
    }

    pub fn bracket(&mut self, d: &LinkDiagram) -> Result<LaurentPoly1, VerifyError> {
        let Some(cache) = self.cache.as_mut() else {
            return Ok(kauffman_bracket(d)?);
        };
        let key = diagram_key(d);
        if let Some(text) = cache.get(&key, "bracket") {
            return Ok(LaurentPoly1::parse(text, "A")?);
        }
        let value = kauffman_bracket(d)?;
        cache.put(&key, "bracket", &value.to_text("A"))?;
        Ok(value)
    }

    pub fn lambda(&mut self, d: &LinkDiagram) -> Result<LaurentPoly2, VerifyError> {
        let key = self.cache.as_ref().map(|_| diagram_key(d));
        if let (Some(cache), Some(key)) = (self.cache.as_ref(), key.as_ref()) {
            if let Some(text) = cache.get(key, "kauffman") {
                return Ok(LaurentPoly2::parse(text)?);
            }
        }
        let value = self.skein.lambda(d)?;
        if let (Some(cache), Some(key)) = (self.cache.as_mut(), key) {
            cache.put(&key, "kauffman", &value.to_text())?;
        }
        Ok(value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpanClass {
    #[serde(rename = "adequate-genus-one")]
    AdequateGenusOne,
    #[serde(rename = "alternating")]
    Alternating,
    #[serde(rename = "other")]
    Other,
    #[serde(rename = "VIOLATION")]
    Violation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub name: String,
    pub c: usize,
    pub writhe: i64,
    pub span_jones: i64,
    pub gt_diagram: Option<u32>,
    pub adequate: bool,
    pub a_max: String,
    pub a_min: String,
    pub span_a_lambda: Option<i64>,
    pub status: SpanClass,
    /// Leading and trailing Jones coefficients are both ±1.
    pub jones_unit_extremes: bool,
    /// For entries declared quasi-alternating: span is `c` or at most `c - 2`.
    pub qa_dichotomy: Option<bool>,
    pub millis: f64,
}

impl VerificationRecord {
    pub fn span_is_c_minus_one(&self) -> bool {
        self.span_jones == self.c as i64 - 1
    }
}

fn classify(span: i64, c: usize, adequate_genus_one: bool) -> SpanClass {
    let c = c as i64;
    match (span == c - 1, adequate_genus_one) {
        (true, true) => SpanClass::AdequateGenusOne,
        (true, false) | (false, true) => SpanClass::Violation,
        _ if span == c => SpanClass::Alternating,
        _ => SpanClass::Other,
    }
}

/// Computes one record; `with_lambda` adds the a-span of the Kauffman polynomial.
pub fn record(ev: &mut Evaluator, entry: &CorpusEntry, with_lambda: bool) -> Result<VerificationRecord, VerifyError> {
    let start = Instant::now();
    let d = &entry.pd;
    ev.check_size(&entry.name, d)?;
    let c = d.crossing_count();
    let bracket = ev.bracket(d)?;
    let jones = jones_from_bracket(&bracket, d.writhe());
    let span_jones = jones.span_t()?;
    let sa = resolve_all(d, Side::A);
    let sb = resolve_all(d, Side::B);
    let adequate = sa.chord_count() == 0 && sb.chord_count() == 0;
    let gt_diagram = if d.is_connected() {
        Some(turaev_genus_from_counts(c, sa.circle_count as i64, sb.circle_count as i64)?)
    } else {
        None
    };
    let c_i = c as i64;
    let max_bound = c_i + 2 * sa.circle_count as i64 - 2;
    let min_bound = -c_i - 2 * sb.circle_count as i64 + 2;
    let (lead, trail) = jones.0.extreme_coefficients().unwrap_or((BigInt::one(), BigInt::one()));
    let span_a_lambda = if with_lambda { Some(ev.lambda(d)?.span_a()?) } else { None };
    let status = classify(span_jones, c, adequate && gt_diagram == Some(1));
    Ok(VerificationRecord {
        name: entry.name.clone(),
        c,
        writhe: d.writhe(),
        span_jones,
        gt_diagram,
        adequate,
        a_max: bracket.coeff(max_bound).to_string(),
        a_min: bracket.coeff(min_bound).to_string(),
        span_a_lambda,
        status,
        jones_unit_extremes: lead.abs().is_one() && trail.abs().is_one(),
        qa_dichotomy: entry
            .declared_quasi_alternating
            .filter(|&qa| qa)
            .map(|_| span_jones == c_i || span_jones <= c_i - 2),
        millis: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn check_minimal(entry: &CorpusEntry) -> Result<(), VerifyError> {
    match entry.declared_crossings {
        Some(declared) if declared != entry.pd.crossing_count() => Err(VerifyError::NonMinimal {
            name: entry.name.clone(),
            declared,
            actual: entry.pd.crossing_count(),
        }),
        _ => Ok(()),
    }
}

/// Records for every entry; stops at the first entry where `span V = c - 1`
/// and "adequate with diagram Turaev genus one" disagree.
pub fn verify_span_equivalence(
    ev: &mut Evaluator,
    entries: &[CorpusEntry],
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let mut out = Vec::with_capacity(entries.len());
    for entry in entries {
        check_minimal(entry)?;
        let r = record(ev, entry, false)?;
        if r.status == SpanClass::Violation {
            return Err(VerifyError::Violation { name: entry.name.clone(), pd: entry.pd.to_pd_string() });
        }
        out.push(r);
    }
    Ok(out)
}

/// Records without aborting; violations stay visible in `status`.
pub fn span_records(ev: &mut Evaluator, entries: &[CorpusEntry]) -> Result<Vec<VerificationRecord>, VerifyError> {
    entries
        .iter()
        .map(|e| {
            check_minimal(e)?;
            record(ev, e, false)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundStatus {
    #[serde(rename = "holds")]
    Holds,
    /// Exceeds the bound on a non-adequate diagram, where the diagram genus
    /// only bounds the link genus from above.
    #[serde(rename = "flagged")]
    Flagged,
    #[serde(rename = "VIOLATION")]
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanBoundRow {
    pub name: String,
    pub c: usize,
    pub gt_diagram: u32,
    pub adequate: bool,
    pub span_a: i64,
    /// `c - 2 g_T(D)`.
    pub bound: i64,
    pub status: BoundStatus,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanBoundReport {
    pub rows: Vec<SpanBoundRow>,
    pub violations: usize,
    pub flagged: usize,
}

/// `span_a Λ <= c - 2 g_T(D)` for entries with at most `max_c` crossings.
pub fn verify_kauffman_span_bound(
    ev: &mut Evaluator,
    entries: &[CorpusEntry],
    max_c: usize,
) -> Result<SpanBoundReport, VerifyError> {
    let mut report = SpanBoundReport::default();
    for entry in entries.iter().filter(|e| e.pd.crossing_count() <= max_c) {
        check_minimal(entry)?;
        let d = &entry.pd;
        ev.check_size(&entry.name, d)?;
        let c = d.crossing_count();
        let sa = resolve_all(d, Side::A);
        let sb = resolve_all(d, Side::B);
        let gt = turaev_genus_from_counts(c, sa.circle_count as i64, sb.circle_count as i64)?;
        let adequate = sa.chord_count() == 0 && sb.chord_count() == 0;
        let span_a = ev.lambda(d)?.span_a()?;
        let bound = c as i64 - 2 * gt as i64;
        let status = match (span_a <= bound, adequate) {
            (true, _) => BoundStatus::Holds,
            (false, true) => BoundStatus::Violation,
            (false, false) => BoundStatus::Flagged,
        };
        match status {
            BoundStatus::Violation => report.violations += 1,
            BoundStatus::Flagged => report.flagged += 1,
            BoundStatus::Holds => {}
        }
        report.rows.push(SpanBoundRow { name: entry.name.clone(), c, gt_diagram: gt, adequate, span_a, bound, status });
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub name: String,
    pub c: usize,
    pub check: DegreeCheck,
}

/// Degree formulas on every adequate, diagram-genus-one entry with at most `max_c` crossings.
pub fn verify_genus_one_degrees(
    ev: &mut Evaluator,
    entries: &[CorpusEntry],
    max_c: usize,
) -> Result<Vec<DegreeRow>, VerifyError> {
    let mut rows = Vec::new();
    for entry in entries.iter().filter(|e| e.pd.crossing_count() <= max_c) {
        let d = &entry.pd;
        if !d.is_connected() || !crate::states::is_adequate_diagram(d) {
            continue;
        }
        if crate::states::turaev_genus_diagram(d)? != 1 {
            continue;
        }
        ev.check_size(&entry.name, d)?;
        let lambda = ev.lambda(d)?;
        rows.push(DegreeRow { name: entry.name.clone(), c: d.crossing_count(), check: genus_one_degree_check(d, &lambda)? });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitExtremesReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Entries with `span V = c - 1` have leading and trailing Jones coefficients ±1.
pub fn verify_unit_extremes(records: &[VerificationRecord]) -> UnitExtremesReport {
    let hits: Vec<&VerificationRecord> = records.iter().filter(|r| r.span_is_c_minus_one()).collect();
    UnitExtremesReport {
        checked: hits.len(),
        failures: hits.iter().filter(|r| !r.jones_unit_extremes).map(|r| r.name.clone()).collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NearExtremalBranch {
    #[serde(rename = "adequate-genus-one")]
    AdequateGenusOne,
    /// The other branch needs the link to be alternating with one crossing
    /// fewer, which a single diagram cannot decide; reported, not failed.
    #[serde(rename = "undecided")]
    Undecided,
}

/// For connected diagrams with `span <D> = 4(c - 1)`, which branch applies.
pub fn near_extremal_branches(
    ev: &mut Evaluator,
    diagrams: &[(String, LinkDiagram)],
) -> Result<Vec<(String, NearExtremalBranch)>, VerifyError> {
    let mut out = Vec::new();
    for (name, d) in diagrams {
        if !d.is_connected() || d.crossing_count() == 0 {
            continue;
        }
        ev.check_size(name, d)?;
        let span = ev.bracket(d)?.span()?;
        if span != 4 * (d.crossing_count() as i64 - 1) {
            continue;
        }
        let branch = if crate::states::is_adequate_diagram(d) && crate::states::turaev_genus_diagram(d)? == 1 {
            NearExtremalBranch::AdequateGenusOne
        } else {
            NearExtremalBranch::Undecided
        };
        out.push((name.clone(), branch));
    }
    Ok(out)
}

/// Knot-table corpus file for crossing number `c` inside `dir`.
pub fn corpus_path(dir: &Path, c: usize) -> std::path::PathBuf {
    dir.join(format!("c{c:02}.pd"))
}

/// Counts of entries with `span V = c - 1`, per crossing number.
pub fn scan_table_1(
    ev: &mut Evaluator,
    dir: &Path,
    crossing_numbers: &[usize],
) -> Result<BTreeMap<usize, usize>, VerifyError> {
    let mut counts = BTreeMap::new();
    for &c in crossing_numbers {
        let corpus = ingest(corpus_path(dir, c))?;
        let mut n = 0;
        for entry in &corpus.entries {
            check_minimal(entry)?;
            let d = &entry.pd;
            ev.check_size(&entry.name, d)?;
            let span = jones_from_bracket(&ev.bracket(d)?, d.writhe()).span_t()?;
            if span == d.crossing_count() as i64 - 1 {
                n += 1;
            }
        }
        counts.insert(c, n);
    }
    Ok(counts)
}

/// Both diagonals of the Kauffman support are touched exactly when the
/// diagram is adequate.
pub fn kauffman_adequacy_agrees(d: &LinkDiagram, lambda: &LaurentPoly2) -> bool {
    adequacy_witness(lambda, d.crossing_count()).is_some() == crate::states::is_adequate_diagram(d)
}
