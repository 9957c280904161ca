use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use knotspan::harness::cache::Cache;
use knotspan::harness::corpus::{parse_corpus, CorpusEntry};
use knotspan::harness::generate::random_diagram;
use knotspan::harness::verify::{self, Evaluator, SpanClass, VerificationRecord};
use knotspan::kauffman::KauffmanReport;
use knotspan::{bracket, extremal, states, tangle, LinkDiagram, Side};

#[derive(Parser)]
#[command(name = "knotspan", version, about = "Exact diagram invariants of knots and links")]
struct Cli {
    /// Largest diagram the state sum and skein engine will attempt.
    #[arg(long, global = true, default_value_t = 16)]
    max_crossings: usize,
    /// Emit one JSON object per diagram instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kauffman bracket in A.
    Bracket { pdfile: PathBuf },
    /// Jones polynomial in t.
    Jones { pdfile: PathBuf },
    /// Kauffman polynomial Λ(a, z) and F = a^-w Λ.
    Kauffman { pdfile: PathBuf },
    /// Circle and chord counts of the all-A and all-B states.
    States { pdfile: PathBuf },
    /// A-, B- and full adequacy.
    Adequacy { pdfile: PathBuf },
    /// Turaev genus of the diagram.
    TuraevGenus { pdfile: PathBuf },
    /// Alternating tangle decomposition and cycle-form test.
    Decompose { pdfile: PathBuf },
    /// Extreme bracket coefficients from chord interleaving.
    Extremal { pdfile: PathBuf },
    /// Batch checks over a corpus; exits non-zero on any violation.
    Verify {
        #[arg(long, value_enum)]
        theorem: Check,
        corpus: PathBuf,
        /// Largest crossing number included (checks using the skein engine only).
        #[arg(long)]
        max_c: Option<usize>,
        /// Write a CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Count corpus knots with span V = c - 1 per crossing number.
    ScanTable1 {
        dir: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [10, 11, 12])]
        c: Vec<usize>,
    },
    /// PD code of a seeded random braid closure.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        width: usize,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    /// span V = c - 1 exactly for adequate diagrams of Turaev genus one.
    #[value(name = "span-equivalence", alias = "1.1")]
    SpanEquivalence,
    /// span_a Λ <= c - 2 g_T.
    #[value(name = "kauffman-span", alias = "3.3")]
    KauffmanSpan,
    /// a-degree formulas for adequate genus-one diagrams.
    #[value(name = "genus-one-degrees", alias = "5.1")]
    GenusOneDegrees,
    /// Unit leading and trailing Jones coefficients when span V = c - 1.
    #[value(name = "unit-extremes", alias = "5.2")]
    UnitExtremes,
}

fn read_entries(path: &Path) -> Result<Vec<CorpusEntry>> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    // Bare PD lines get a name so the corpus grammar accepts them.
    let named: Vec<String> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') || t.contains(':') {
                l.to_string()
            } else {
                format!("line{} : {t}", i + 1)
            }
        })
        .collect();
    let corpus = parse_corpus(&named.join("\n"));
    for (line, err) in &corpus.rejected {
        eprintln!("{}:{line}: {err}", path.display());
    }
    if !corpus.rejected.is_empty() && corpus.entries.is_empty() {
        bail!("no valid diagrams in {}", path.display());
    }
    Ok(corpus.entries)
}

fn evaluator(max_crossings: usize) -> Result<Evaluator> {
    Ok(Evaluator::new(max_crossings, Cache::from_env().context("opening cache")?))
}

struct Out {
    json: bool,
    w: BufWriter<io::Stdout>,
}

impl Out {
    fn emit<T: Serialize>(&mut self, name: &str, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            #[derive(Serialize)]
            struct Named<'a, T> {
                name: &'a str,
                #[serde(flatten)]
                value: &'a T,
            }
            writeln!(self.w, "{}", serde_json::to_string(&Named { name, value })?)?;
        } else {
            writeln!(self.w, "{name}\t{}", text())?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Value<T> {
    value: T,
}

fn per_diagram(cli: &Cli, path: &Path, out: &mut Out) -> Result<()> {
    let mut ev = evaluator(cli.max_crossings)?;
    for e in read_entries(path)? {
        let d: &LinkDiagram = &e.pd;
        let name = e.name.as_str();
        let expensive = matches!(cli.command, Command::Bracket { .. } | Command::Jones { .. } | Command::Kauffman { .. });
        if expensive && d.crossing_count() > cli.max_crossings {
            bail!("{name}: {} crossings exceeds --max-crossings {}", d.crossing_count(), cli.max_crossings);
        }
        match &cli.command {
            Command::Bracket { .. } => {
                let b = ev.bracket(d)?.to_text("A");
                out.emit(name, &Value { value: &b }, || b.clone())?;
            }
            Command::Jones { .. } => {
                let j = bracket::jones_from_bracket(&ev.bracket(d)?, d.writhe());
                let t = j.to_text();
                out.emit(name, &Value { value: &t }, || format!("{t}\tspan={}", j.span_t().unwrap_or(0)))?;
            }
            Command::Kauffman { .. } => {
                let r = KauffmanReport::from_lambda(d, ev.lambda(d)?)?;
                out.emit(name, &r, || {
                    format!("{}\tspan_a={}\tsupport_ok={}\tadequate={}", r.lambda, r.span_a, r.support_ok, r.adequate())
                })?;
            }
            Command::States { .. } => {
                #[derive(Serialize)]
                struct S {
                    circles_a: usize,
                    circles_b: usize,
                    chords_a: usize,
                    chords_b: usize,
                }
                let (a, b) = (states::resolve_all(d, Side::A), states::resolve_all(d, Side::B));
                let s = S { circles_a: a.circle_count, circles_b: b.circle_count, chords_a: a.chord_count(), chords_b: b.chord_count() };
                out.emit(name, &s, || {
                    format!("|sA|={}\t|sB|={}\tA-chords={}\tB-chords={}", s.circles_a, s.circles_b, s.chords_a, s.chords_b)
                })?;
            }
            Command::Adequacy { .. } => {
                #[derive(Serialize)]
                struct A {
                    a_adequate: bool,
                    b_adequate: bool,
                    adequate: bool,
                }
                let (a, b) = (states::is_a_adequate(d), states::is_b_adequate(d));
                let v = A { a_adequate: a, b_adequate: b, adequate: a && b };
                out.emit(name, &v, || format!("A={a}\tB={b}\tadequate={}", a && b))?;
            }
            Command::TuraevGenus { .. } => {
                let g = states::turaev_genus_diagram(d)?;
                out.emit(name, &Value { value: g }, || g.to_string())?;
            }
            Command::Decompose { .. } => {
                let t = tangle::decompose(d)?;
                let form = t.cycle_form();
                #[derive(Serialize)]
                struct T<'a> {
                    decomposition: &'a tangle::TangleDecomposition,
                    cycle_form: &'a tangle::CycleForm,
                }
                out.emit(name, &T { decomposition: &t, cycle_form: &form }, || {
                    let plus = t.connectors.iter().filter(|c| c.sign == knotspan::Sign::Positive).count();
                    format!(
                        "tangles={}\tconnectors={} (+{plus} -{})\tends={:?}\tcycle_form={}",
                        t.tangles.len(),
                        t.connectors.len(),
                        t.connectors.len() - plus,
                        t.end_counts,
                        form.holds
                    )
                })?;
            }
            Command::Extremal { .. } => {
                #[derive(Serialize)]
                struct X {
                    a_max: i64,
                    a_min: i64,
                }
                let v = X {
                    a_max: extremal::extreme_coefficient(d, extremal::Extreme::Max)?,
                    a_min: extremal::extreme_coefficient(d, extremal::Extreme::Min)?,
                };
                out.emit(name, &v, || format!("aM={}\tam={}", v.a_max, v.a_min))?;
            }
            _ => unreachable!(),
        }
    }
    Ok(())
}

fn write_csv<T: Serialize>(path: &Path, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct RecordRow<'a> {
    name: &'a str,
    c: usize,
    writhe: i64,
    span_jones: i64,
    gt_diagram: Option<u32>,
    adequate: bool,
    a_max: &'a str,
    a_min: &'a str,
    status: SpanClass,
    jones_unit_extremes: bool,
    qa_dichotomy: Option<bool>,
    millis: f64,
}

fn record_row(r: &VerificationRecord) -> RecordRow<'_> {
    RecordRow {
        name: &r.name,
        c: r.c,
        writhe: r.writhe,
        span_jones: r.span_jones,
        gt_diagram: r.gt_diagram,
        adequate: r.adequate,
        a_max: &r.a_max,
        a_min: &r.a_min,
        status: r.status,
        jones_unit_extremes: r.jones_unit_extremes,
        qa_dichotomy: r.qa_dichotomy,
        millis: r.millis,
    }
}

/// Returns whether any violation was found.
fn run_verify(cli: &Cli, check: Check, corpus: &Path, max_c: Option<usize>, csv_path: Option<&Path>, out: &mut Out) -> Result<bool> {
    let entries = read_entries(corpus)?;
    let mut ev = evaluator(cli.max_crossings)?;
    let mut violated = false;
    match check {
        Check::SpanEquivalence | Check::UnitExtremes => {
            let records = verify::span_records(&mut ev, &entries)?;
            for r in &records {
                writeln!(out.w, "{}", serde_json::to_string(r)?)?;
                if r.status == SpanClass::Violation {
                    eprintln!("VIOLATION: {} : {}", r.name, entries.iter().find(|e| e.name == r.name).unwrap().pd);
                    violated = true;
                }
            }
            if let Some(p) = csv_path {
                write_csv(p, records.iter().map(record_row))?;
            }
            let hits = records.iter().filter(|r| r.span_is_c_minus_one()).count();
            eprintln!("{} entries, {hits} with span V = c - 1", records.len());
            if matches!(check, Check::UnitExtremes) {
                let rep = verify::verify_unit_extremes(&records);
                eprintln!("unit extreme Jones coefficients: {} checked, {} failures", rep.checked, rep.failures.len());
                for f in &rep.failures {
                    eprintln!("VIOLATION: {f}");
                }
                violated |= !rep.failures.is_empty();
            }
        }
        Check::KauffmanSpan => {
            let rep = verify::verify_kauffman_span_bound(&mut ev, &entries, max_c.unwrap_or(10))?;
            for r in &rep.rows {
                writeln!(out.w, "{}", serde_json::to_string(r)?)?;
            }
            if let Some(p) = csv_path {
                write_csv(p, &rep.rows)?;
            }
            eprintln!("{} entries, {} violations, {} flagged (non-adequate, genus bound not sharp)", rep.rows.len(), rep.violations, rep.flagged);
            violated = rep.violations > 0;
        }
        Check::GenusOneDegrees => {
            let rows = verify::verify_genus_one_degrees(&mut ev, &entries, max_c.unwrap_or(11))?;
            #[derive(Serialize)]
            struct Row<'a> {
                name: &'a str,
                c: usize,
                max_deg_a: i64,
                expected_max: i64,
                min_deg_a: i64,
                expected_min: i64,
                span_a: i64,
                holds: bool,
            }
            let flat: Vec<Row> = rows
                .iter()
                .map(|r| Row {
                    name: &r.name,
                    c: r.c,
                    max_deg_a: r.check.max_deg_a,
                    expected_max: r.check.expected_max,
                    min_deg_a: r.check.min_deg_a,
                    expected_min: r.check.expected_min,
                    span_a: r.check.span_a,
                    holds: r.check.holds(),
                })
                .collect();
            for r in &flat {
                writeln!(out.w, "{}", serde_json::to_string(r)?)?;
            }
            if let Some(p) = csv_path {
                write_csv(p, &flat)?;
            }
            let bad = flat.iter().filter(|r| !r.holds).count();
            eprintln!("{} adequate genus-one entries, {bad} failures", flat.len());
            violated = bad > 0;
        }
    }
    Ok(violated)
}

fn run(cli: &Cli) -> Result<bool> {
    let mut out = Out { json: cli.json, w: BufWriter::new(io::stdout()) };
    let violated = match &cli.command {
        Command::Bracket { pdfile }
        | Command::Jones { pdfile }
        | Command::Kauffman { pdfile }
        | Command::States { pdfile }
        | Command::Adequacy { pdfile }
        | Command::TuraevGenus { pdfile }
        | Command::Decompose { pdfile }
        | Command::Extremal { pdfile } => {
            per_diagram(cli, pdfile, &mut out)?;
            false
        }
        Command::Verify { theorem, corpus, max_c, csv } => run_verify(cli, *theorem, corpus, *max_c, csv.as_deref(), &mut out)?,
        Command::ScanTable1 { dir, c } => {
            let mut ev = evaluator(cli.max_crossings)?;
            let counts = verify::scan_table_1(&mut ev, dir, c)?;
            for (c, n) in counts {
                if cli.json {
                    writeln!(out.w, "{}", serde_json::json!({ "c": c, "span_c_minus_1": n }))?;
                } else {
                    writeln!(out.w, "{c}\t{n}")?;
                }
            }
            false
        }
        Command::Random { seed, width, length } => {
            if *width < 2 || *length < 1 {
                bail!("need width >= 2 and length >= 1");
            }
            writeln!(out.w, "{}", random_diagram(*seed, *width, *length))?;
            false
        }
    };
    out.w.flush()?;
    Ok(violated)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
