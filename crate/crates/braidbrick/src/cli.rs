//! The `braidbrick` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use braidbrick_core::braid::monoid_equal;
use braidbrick_core::brick::{extract_quiver, render_ascii};
use braidbrick_core::classify::{
    classify_with, component_table_check, expected_components, standard_link_word, ClassifyOptions, ClassifyVerdict,
};
use braidbrick_core::cluster::{bit_lengths, dt_orbit, filling_seeds, DtTransform, Seed};
use braidbrick_core::derivation::{endpoint_quiver_report, QuiverSummary};
use braidbrick_core::quiver::{is_finite_type, recognize, FiniteTypeOracle, DEFAULT_CAP};
use braidbrick_core::{BraidWord, DynkinType, ExchangeMatrix, GreedyNormalForm};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::corpus::{run_corpus, run_files, with_pool, Outcome};
use crate::deriv::load_derivation;
use crate::dot::{brick_quiver_dot, matrix_dot};
use crate::json::{
    parse_input, type_names, word_text, BraidJson, ClassifyJson, FillingsJson, Input, OrbitJson, QuiverJson,
    QuiverReport, VerdictJson,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "braidbrick", version, about = "Brick quivers, DT orbits and ADE classification of positive braids")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Strand count override for braid inputs.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Node cap for mutation-class searches.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "BRAIDBRICK_JOBS")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a braid word (text or JSON) and print it in normalized form.
    Parse { word: String },
    /// Brick quiver of a braid word, with type recognition and the finite-type verdict.
    Quiver { word: String },
    /// ASCII brick diagram.
    Render { word: String },
    /// Classify braids as finite (with ADE decomposition) or infinite (with a witness).
    Classify {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Orbit of the unit point under DT for an acyclic quiver (braid or quiver JSON).
    DtOrbit {
        input: String,
        #[arg(long, default_value_t = 50)]
        iters: usize,
    },
    /// Cluster seeds of the fillings DT^(-2m), m = 0..=m-max.
    Fillings {
        word: String,
        #[arg(long = "m-max", default_value_t = 10)]
        m_max: usize,
    },
    /// Check derivation files (text or JSON).
    CheckDerivation {
        files: Vec<PathBuf>,
        /// Check the bundled corpus, including negative controls.
        #[arg(long)]
        seed_fixtures: bool,
        /// Add brick-quiver summaries of the start and end words.
        #[arg(long)]
        report: bool,
    },
    /// Greedy normal form in the positive braid monoid.
    NormalForm {
        word: String,
        /// Another word to compare with.
        #[arg(long)]
        compare: Option<String>,
    },
    /// Table words of the standard ADE links.
    StandardLinks {
        #[arg(long, default_value_t = 10)]
        max_rank: usize,
    },
    /// Component counts of the standard links against the expected table.
    ComponentTable {
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
    },
}

/// Exit status with a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn compute(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> Failure {
    compute(format!("write failed: {}", e))
}

fn emit<T: Serialize>(out: Out, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(value).map_err(|e| compute(e.to_string()))?;
    writeln!(out, "{}", s).map_err(io)
}

fn braid_arg(text: &str, n: Option<usize>) -> Result<BraidWord, Failure> {
    match parse_input(text, n).map_err(usage)? {
        Input::Braid(w) => Ok(w),
        Input::Quiver(_) => Err(usage("expected a braid word, got a quiver")),
    }
}

fn no_dot(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        Err(usage("--format dot is only available for `quiver` and `dt-orbit`"))
    } else {
        Ok(())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{}", text) } else { write!(err, "{}", text) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: Out) -> Result<i32, Failure> {
    let jobs = cli.jobs.unwrap_or(0);
    match &cli.command {
        Command::Parse { word } => {
            no_dot(cli)?;
            let w = braid_arg(word, cli.n)?;
            match cli.format {
                Format::Text => writeln!(out, "n={} {}", w.strands(), word_text(&w)).map_err(io)?,
                _ => emit(out, &BraidJson::from(&w))?,
            }
            Ok(0)
        }
        Command::Quiver { word } => quiver(cli, word, out),
        Command::Render { word } => {
            no_dot(cli)?;
            let w = braid_arg(word, cli.n)?;
            let art = render_ascii(&w);
            match cli.format {
                Format::Text => write!(out, "{}", art).map_err(io)?,
                _ => emit(out, &json!({ "word": word_text(&w), "n": w.strands(), "ascii": art }))?,
            }
            Ok(0)
        }
        Command::Classify { words } => classify(cli, words, jobs, out),
        Command::DtOrbit { input, iters } => orbit(cli, input, *iters, out),
        Command::Fillings { word, m_max } => {
            no_dot(cli)?;
            let w = braid_arg(word, cli.n)?;
            let r = filling_seeds(&w, *m_max).map_err(|e| compute(e.to_string()))?;
            let j = FillingsJson::new(&r, *m_max);
            match cli.format {
                Format::Text => {
                    writeln!(out, "word: {}", word_text(&w)).map_err(io)?;
                    writeln!(out, "seeds: {} (m = 0..={})", j.seeds.len(), m_max).map_err(io)?;
                    writeln!(out, "pairwise distinct: {}", j.pairwise_distinct).map_err(io)?;
                    if let Some([a, b]) = j.first_repeat {
                        writeln!(out, "first repeat: m={} equals m={}", b, a).map_err(io)?;
                    }
                }
                _ => emit(out, &j)?,
            }
            Ok(0)
        }
        Command::CheckDerivation { files, seed_fixtures, report } => {
            no_dot(cli)?;
            check_derivations(cli, files, *seed_fixtures, *report, jobs, out)
        }
        Command::NormalForm { word, compare } => {
            no_dot(cli)?;
            let w = braid_arg(word, cli.n)?;
            let nf = GreedyNormalForm::of_word(&w);
            let factors: Vec<Vec<usize>> = nf.factors().iter().map(|p| p.images()).collect();
            let other = compare.as_deref().map(|c| braid_arg(c, cli.n.or(Some(w.strands())))).transpose()?;
            let equal = other.as_ref().map(|o| monoid_equal(&w, o)).transpose().map_err(|e| usage(e.to_string()))?;
            match cli.format {
                Format::Text => {
                    writeln!(out, "{}", word_text(&nf.to_word())).map_err(io)?;
                    writeln!(out, "factors: {} length: {}", nf.len(), nf.length()).map_err(io)?;
                    if let Some(e) = equal {
                        writeln!(out, "equal: {}", e).map_err(io)?;
                    }
                }
                _ => {
                    let mut j = json!({
                        "n": w.strands(),
                        "word": word_text(&nf.to_word()),
                        "length": nf.length(),
                        "factors": factors,
                    });
                    if let (Some(o), Some(e)) = (&other, equal) {
                        j["compare"] = json!({ "word": word_text(o), "equal": e });
                    }
                    emit(out, &j)?;
                }
            }
            Ok(0)
        }
        Command::StandardLinks { max_rank } => {
            no_dot(cli)?;
            let mut types: Vec<DynkinType> = (1..=*max_rank).map(DynkinType::a).collect();
            types.extend((4..=*max_rank).map(DynkinType::d));
            types.extend((6..=8).map(DynkinType::e));
            let rows: Vec<_> = types
                .iter()
                .map(|&t| {
                    let w = standard_link_word(t).expect("table type");
                    (t.name(), word_text(&w), w.components(), expected_components(t).expect("table type"))
                })
                .collect();
            match cli.format {
                Format::Text => {
                    for (t, w, c, _) in &rows {
                        writeln!(out, "{:<4} {:<24} components={}", t, w, c).map_err(io)?;
                    }
                }
                _ => emit(
                    out,
                    &rows
                        .iter()
                        .map(|(t, w, c, _)| json!({ "type": t, "word": w, "components": c }))
                        .collect::<Vec<_>>(),
                )?,
            }
            Ok(0)
        }
        Command::ComponentTable { max_rank } => {
            no_dot(cli)?;
            let rows = component_table_check(*max_rank);
            let ok = rows.iter().all(|r| r.ok());
            match cli.format {
                Format::Text => {
                    for r in &rows {
                        let mark = if r.ok() { "ok" } else { "MISMATCH" };
                        writeln!(out, "{:<4} components={} expected={} {}", r.ty, r.components, r.expected, mark)
                            .map_err(io)?;
                    }
                }
                _ => {
                    let rs: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({ "type": r.ty.name(), "components": r.components, "expected": r.expected, "ok": r.ok() })
                        })
                        .collect();
                    emit(out, &json!({ "ok": ok, "rows": rs }))?;
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn quiver(cli: &Cli, word: &str, out: Out) -> Result<i32, Failure> {
    let w = braid_arg(word, cli.n)?;
    let q = extract_quiver(&w);
    let b = q.to_matrix();
    let verdict = is_finite_type(&b, cli.cap);
    let code = if verdict.is_finite().is_none() { 1 } else { 0 };
    let report = QuiverReport {
        word: word_text(&w),
        n: w.strands(),
        quiver: QuiverJson::from(&q),
        types: type_names(&recognize(&b)),
        acyclic: b.is_acyclic(),
        verdict: VerdictJson::from(&verdict),
    };
    match cli.format {
        Format::Json => emit(out, &report)?,
        Format::Dot => write!(out, "{}", brick_quiver_dot(&q, &report.word)).map_err(io)?,
        Format::Text => {
            writeln!(out, "word: {} (n={})", report.word, report.n).map_err(io)?;
            writeln!(out, "vertices: {}", report.quiver.vertices.len()).map_err(io)?;
            for (i, v) in report.quiver.vertices.iter().enumerate() {
                writeln!(out, "  v{}: level {} [{}, {}]", i, v.level, v.left, v.right).map_err(io)?;
            }
            writeln!(out, "arrows: {}", report.quiver.arrows.len()).map_err(io)?;
            for [i, j] in &report.quiver.arrows {
                writeln!(out, "  v{} -> v{}", i, j).map_err(io)?;
            }
            writeln!(out, "types: {}", report.types.join(" + ")).map_err(io)?;
            writeln!(out, "acyclic: {}", report.acyclic).map_err(io)?;
            let f = match verdict.is_finite() {
                Some(true) => "finite",
                Some(false) => "infinite",
                None => "indeterminate",
            };
            writeln!(out, "mutation type: {}", f).map_err(io)?;
        }
    }
    Ok(code)
}

fn classify(cli: &Cli, words: &[String], jobs: usize, out: Out) -> Result<i32, Failure> {
    no_dot(cli)?;
    let ws = words.iter().map(|w| braid_arg(w, cli.n)).collect::<Result<Vec<_>, _>>()?;
    let opts = ClassifyOptions { cap: cli.cap, ..ClassifyOptions::default() };
    let verdicts: Vec<ClassifyVerdict> = with_pool(jobs, || {
        ws.par_iter().map(|w| classify_with(w, &mut FiniteTypeOracle::new(cli.cap), opts)).collect()
    });
    let indeterminate = verdicts.iter().any(|v| v.is_finite().is_none());
    match cli.format {
        Format::Text => {
            for (w, v) in ws.iter().zip(&verdicts) {
                writeln!(out, "{}", classify_line(w, v)).map_err(io)?;
            }
        }
        _ => {
            let js: Vec<ClassifyJson> = ws.iter().zip(&verdicts).map(|(w, v)| ClassifyJson::new(w, v)).collect();
            if js.len() == 1 {
                emit(out, &js[0])?;
            } else {
                emit(out, &js)?;
            }
        }
    }
    Ok(if indeterminate { 1 } else { 0 })
}

fn classify_line(w: &BraidWord, v: &ClassifyVerdict) -> String {
    let name = word_text(w);
    match v {
        ClassifyVerdict::Finite { decomposition, warnings, .. } => {
            let mut parts: Vec<String> = decomposition
                .factors
                .iter()
                .map(|f| f.iter().map(|s| s.ty.name()).collect::<Vec<_>>().join(" # "))
                .collect();
            if decomposition.unknots > 0 {
                parts.push(format!("{} unknot(s)", decomposition.unknots));
            }
            if parts.is_empty() {
                parts.push("unknot".into());
            }
            let mut s = format!("{}: finite, {}", name, parts.join(" + "));
            for warning in warnings {
                s.push_str(&format!(" [warning: {}]", warning));
            }
            s
        }
        ClassifyVerdict::Infinite { witness: Some(x), .. } => {
            format!("{}: infinite, dominates {} ({})", name, word_text(&x.result), type_names(&x.types).join(" + "))
        }
        ClassifyVerdict::Infinite { witness: None, .. } => format!("{}: infinite", name),
        ClassifyVerdict::Indeterminate { reason } => format!("{}: indeterminate ({})", name, reason),
    }
}

fn orbit_note(b: &ExchangeMatrix, cap: usize) -> Option<String> {
    match is_finite_type(b, cap).is_finite() {
        Some(true) => Some("finite mutation type: DT has finite order, so the orbit is periodic".into()),
        Some(false) => Some(
            "acyclic quiver of infinite mutation type: DT has infinite order and the orbit never closes; \
             this run is a bounded search with growth data, not a proof"
                .into(),
        ),
        None => None,
    }
}

fn orbit(cli: &Cli, input: &str, iters: usize, out: Out) -> Result<i32, Failure> {
    let b = match parse_input(input, cli.n).map_err(usage)? {
        Input::Braid(w) => extract_quiver(&w).to_matrix(),
        Input::Quiver(b) => b,
    };
    if iters == 0 {
        return Err(usage("--iters must be at least 1"));
    }
    match cli.format {
        Format::Dot => write!(out, "{}", matrix_dot(&b)).map_err(io)?,
        Format::Json => {
            let r = dt_orbit(&b, iters).map_err(|e| compute(e.to_string()))?;
            let mut j = OrbitJson::from(&r);
            j.note = orbit_note(&b, cli.cap);
            emit(out, &j)?;
        }
        Format::Text => {
            // one line per iteration, written as it is computed
            let dt = DtTransform::new(&b).map_err(|e| compute(e.to_string()))?;
            let mut x = Seed::unit(&b).x;
            let mut seen = BTreeMap::new();
            seen.insert(x.clone(), 0usize);
            writeln!(out, "iter\tnum_bits\tden_bits").map_err(io)?;
            let (nb, db) = bit_lengths(&x);
            writeln!(out, "0\t{}\t{}", nb, db).map_err(io)?;
            let mut period = None;
            for t in 1..=iters {
                x = dt.apply_point(&x);
                let (nb, db) = bit_lengths(&x);
                writeln!(out, "{}\t{}\t{}", t, nb, db).map_err(io)?;
                out.flush().map_err(io)?;
                if let Some(&i) = seen.get(&x) {
                    period = Some(t - i);
                    break;
                }
                seen.insert(x.clone(), t);
            }
            match period {
                Some(p) => writeln!(out, "period: {}", p).map_err(io)?,
                None => writeln!(out, "period: none within {} iterations", iters).map_err(io)?,
            }
            if let Some(n) = orbit_note(&b, cli.cap) {
                writeln!(out, "note: {}", n).map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn summary_json(s: &QuiverSummary) -> serde_json::Value {
    json!({
        "word": word_text(&s.word),
        "vertices": s.vertices,
        "types": type_names(&s.types),
        "acyclic": s.acyclic,
        "finite": s.finite,
    })
}

fn check_derivations(
    cli: &Cli,
    files: &[PathBuf],
    seed_fixtures: bool,
    report: bool,
    jobs: usize,
    out: Out,
) -> Result<i32, Failure> {
    if files.is_empty() && !seed_fixtures {
        return Err(usage("give derivation files or --seed-fixtures"));
    }
    let mut outcomes: Vec<Outcome> = Vec::new();
    if seed_fixtures {
        outcomes.extend(run_corpus(jobs));
    }
    outcomes.extend(run_files(files, jobs));
    let reports: Vec<Option<serde_json::Value>> = files
        .iter()
        .map(|p| {
            if !report {
                return None;
            }
            let d = load_derivation(p).ok()?;
            let r = endpoint_quiver_report(&d, cli.cap).ok()?;
            Some(json!({ "start": summary_json(&r.start), "end": summary_json(&r.end) }))
        })
        .collect();
    let offset = outcomes.len() - files.len();
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    match cli.format {
        Format::Text => {
            for (i, o) in outcomes.iter().enumerate() {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                let detail = match &o.result {
                    Ok(r) => r.to_string(),
                    Err(e) => e.clone(),
                };
                let neg = if o.expect_ok { "" } else { " (negative control)" };
                writeln!(out, "{} {}{}: {}", status, o.name, neg, detail).map_err(io)?;
                if let Some(Some(r)) = i.checked_sub(offset).and_then(|k| reports.get(k)) {
                    writeln!(out, "  start: {}", r["start"]).map_err(io)?;
                    writeln!(out, "  end:   {}", r["end"]).map_err(io)?;
                }
            }
            writeln!(out, "{} checked, {} failed", outcomes.len(), failed).map_err(io)?;
        }
        _ => {
            let js: Vec<_> = outcomes
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    let mut j = json!({
                        "name": o.name,
                        "expect_ok": o.expect_ok,
                        "passed": o.passed(),
                    });
                    match &o.result {
                        Ok(r) => j["relation"] = json!(r.name()),
                        Err(e) => j["error"] = json!(e),
                    }
                    if let Some(Some(r)) = i.checked_sub(offset).and_then(|k| reports.get(k)) {
                        j["endpoints"] = r.clone();
                    }
                    j
                })
                .collect();
            emit(out, &json!({ "checked": outcomes.len(), "failed": failed, "results": js }))?;
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
