use std::fs;
use std::io::Read;
use std::path::Path;
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use planar_c5::constructions::{expand, FamilySpec};
use planar_c5::counting::{count_cycles, count_cycles_bruteforce, cycle_report, CycleCountReport, SCHEMA_VERSION};
use planar_c5::enumeration::{corpus, enumerate_triangulations, EnumerationCertificate, MAX_ORDER};
use planar_c5::io::{detect_format, from_edge_list, parse_graph6_lines, to_edge_list, to_graph6, GraphFormat};
use planar_c5::verification::{
    edge_deleted_variants, verify_lemmas, verify_lemmas_for_order, verify_monotonicity, verify_theorem, LemmaReport,
    MonotonicityReport, VerificationCertificate, VERIFY_DEFAULT_MAX_ORDER, VERIFY_MIN_ORDER,
};
use planar_c5::Graph;

use crate::{BenchArgs, ConstructArgs, CountArgs, EnumerateArgs, Failure, Format, Orders, Suite, VerifyArgs};

type CmdResult = Result<(), Failure>;

const VARIANTS_PER_ORDER: usize = 100;
const MONOTONICITY_SAMPLES: usize = 200;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct ConstructRecord {
    schema_version: u32,
    family: String,
    n: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    c5: Option<u64>,
}

fn construct_specs(family: &str, n: Option<&Orders>) -> Result<Vec<FamilySpec>, Failure> {
    match n {
        None => Ok(vec![FamilySpec::from_name(family, None)?]),
        Some(orders) => orders
            .0
            .clone()
            .map(|k| FamilySpec::from_name(family, Some(k)).map_err(Failure::from))
            .collect(),
    }
}

pub fn construct(a: &ConstructArgs) -> CmdResult {
    let format = if a.json { Format::Json } else { a.format };
    if format == Format::Auto {
        return Err(usage("construct needs an output format: graph6, edgelist or json"));
    }
    let mut records = Vec::new();
    let mut text = String::new();
    let mut counts = Vec::new();
    for spec in construct_specs(&a.family, a.n.as_ref())? {
        let g = expand(&spec)?;
        let c5 = if a.count { Some(count_cycles(&g, 5)?) } else { None };
        match format {
            Format::Edgelist => text.push_str(&to_edge_list(&g)),
            _ => {
                text.push_str(&to_graph6(&g));
                text.push('\n');
            }
        }
        counts.extend(c5);
        records.push(ConstructRecord {
            schema_version: SCHEMA_VERSION,
            family: spec.name(),
            n: spec.n,
            graph6: to_graph6(&g),
            c5,
        });
    }
    if format == Format::Json {
        let json = to_json(&records);
        match &a.out {
            Some(p) => write_file(p, &json)?,
            None => print!("{json}"),
        }
        return Ok(());
    }
    match &a.out {
        Some(p) => write_file(p, &text)?,
        None => print!("{text}"),
    }
    for c in counts {
        println!("{c}");
    }
    Ok(())
}

fn parse_inputs(text: &str, format: Format) -> Result<Vec<Graph>, Failure> {
    let format = match format {
        Format::Auto => detect_format(text),
        Format::Graph6 => GraphFormat::Graph6,
        Format::Edgelist => GraphFormat::EdgeList,
        Format::Json => return Err(usage("json is an output format only")),
    };
    let graphs = match format {
        GraphFormat::Graph6 => parse_graph6_lines(text)?,
        GraphFormat::EdgeList => vec![from_edge_list(text)?],
    };
    if graphs.is_empty() {
        return Err(usage("input contains no graph"));
    }
    Ok(graphs)
}

pub fn count(a: &CountArgs) -> CmdResult {
    if !(3..=5).contains(&a.k) {
        return Err(usage(format!("--k must be 3, 4 or 5, got {}", a.k)));
    }
    let graphs = parse_inputs(&read_input(a.input.as_deref())?, a.format)?;
    let mut reports: Vec<CycleCountReport> = Vec::with_capacity(graphs.len());
    let mut mismatches = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let r = cycle_report(g)?;
        if a.oracle {
            let fast = r.count(a.k)?;
            let slow = count_cycles_bruteforce(g, a.k)?;
            if fast != slow {
                mismatches.push(format!("graph {i} ({}): counter {fast}, oracle {slow}", to_graph6(g)));
            }
        }
        reports.push(r);
    }
    let json = if reports.len() == 1 {
        to_json(&reports[0])
    } else {
        to_json(&reports)
    };
    if let Some(p) = &a.out {
        write_file(p, &json)?;
    }
    if a.json {
        print!("{json}");
    } else {
        for r in &reports {
            println!("{}", r.count(a.k)?);
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(format!(
            "oracle mismatch:\n{}",
            mismatches.join("\n")
        )))
    }
}

#[derive(Serialize)]
struct CertificateOut<'a> {
    schema_version: u32,
    #[serde(flatten)]
    certificate: &'a EnumerationCertificate,
}

pub fn enumerate(a: &EnumerateArgs) -> CmdResult {
    let workers = a.workers.get();
    let ranged = a.n.single().is_none();
    if let (true, Some(dir)) = (ranged, &a.out) {
        fs::create_dir_all(dir)?;
    }
    let mut certs = Vec::new();
    for n in a.n.0.clone() {
        let forms = Mutex::new(Vec::new());
        let cert = enumerate_triangulations(n, workers, |t| {
            forms.lock().expect("visitor lock").push(t.form.to_string());
        })?;
        let mut lines = forms.into_inner().expect("visitor lock");
        lines.sort_unstable();
        let mut dump = lines.join("\n");
        if !dump.is_empty() {
            dump.push('\n');
        }
        match &a.out {
            Some(dir) if ranged => write_file(&dir.join(format!("n{n}.g6")), &dump)?,
            Some(file) => write_file(file, &dump)?,
            None if !a.json => print!("{dump}"),
            None => {}
        }
        if a.out.is_some() && !a.json {
            println!("n={} count={} digest={}", cert.n, cert.count, cert.digest);
        }
        certs.push(cert);
    }
    if a.json {
        let out: Vec<CertificateOut> = certs
            .iter()
            .map(|c| CertificateOut {
                schema_version: SCHEMA_VERSION,
                certificate: c,
            })
            .collect();
        if out.len() == 1 {
            print!("{}", to_json(&out[0]));
        } else {
            print!("{}", to_json(&out));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOut {
    schema_version: u32,
    certificates: Vec<VerificationCertificate>,
    monotonicity: MonotonicityReport,
}

#[derive(Serialize)]
struct LemmaOrderOut {
    n: usize,
    corpus: LemmaReport,
    variants: LemmaReport,
}

#[derive(Serialize)]
struct LemmasOut {
    schema_version: u32,
    seed: u64,
    orders: Vec<LemmaOrderOut>,
}

fn check_verify_range(a: &VerifyArgs) -> CmdResult {
    let lo = if a.lemmas_only { 4 } else { VERIFY_MIN_ORDER };
    let hi = if a.allow_large {
        MAX_ORDER
    } else {
        VERIFY_DEFAULT_MAX_ORDER
    };
    let (s, e) = (*a.n.0.start(), *a.n.0.end());
    if s < lo || e > hi {
        let hint = if e > hi && e <= MAX_ORDER {
            " (pass --allow-large for 13 and 14)"
        } else {
            ""
        };
        return Err(usage(format!(
            "verify orders must lie in {lo}..={hi}, got {s}..={e}{hint}"
        )));
    }
    Ok(())
}

fn families(c: &VerificationCertificate) -> String {
    c.extremal
        .iter()
        .map(|e| e.family.as_str())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    check_verify_range(a)?;
    let workers = a.workers.get();
    if a.lemmas_only {
        return verify_lemmas_only(a, workers);
    }
    let mut certs = Vec::new();
    if !a.json {
        println!(
            "{:>3} {:>7} {:>6} {:>6} {:>6}  {:<9} {:>10}  match",
            "n", "classes", "max", "g(n)", "second", "extremal", "violations"
        );
    }
    for n in a.n.0.clone() {
        let c = verify_theorem(n, workers)?;
        if !a.json {
            let second = c.second_best.map_or("-".to_string(), |s| s.to_string());
            println!(
                "{:>3} {:>7} {:>6} {:>6} {:>6}  {:<9} {:>10}  {}",
                c.n,
                c.corpus.count,
                c.max_c5,
                c.g_n,
                second,
                families(&c),
                c.lemmas.violations(),
                c.theorem_match
            );
        }
        certs.push(c);
    }
    let mono = verify_monotonicity(MONOTONICITY_SAMPLES, a.seed)?;
    if !a.json {
        println!(
            "monotonicity: {} samples, {} additions, {}",
            mono.samples,
            mono.additions_checked,
            if mono.passed() { "pass" } else { "FAIL" }
        );
    }
    let mut problems: Vec<String> = certs
        .iter()
        .filter(|c| !c.theorem_match || c.lemmas.violations() > 0)
        .map(|c| format!("n={}", c.n))
        .collect();
    if let Some(cx) = &mono.counterexample {
        problems.push(format!("monotonicity counterexample {cx:?}"));
    }
    let out = VerifyOut {
        schema_version: SCHEMA_VERSION,
        certificates: certs,
        monotonicity: mono,
    };
    let json = to_json(&out);
    if let Some(p) = &a.out {
        write_file(p, &json)?;
    }
    if a.json {
        print!("{json}");
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(format!(
            "verification failed for {}",
            problems.join(", ")
        )))
    }
}

fn verify_lemmas_only(a: &VerifyArgs, workers: usize) -> CmdResult {
    let mut orders = Vec::new();
    let mut total = 0;
    for n in a.n.0.clone() {
        let on_corpus = verify_lemmas_for_order(n, workers)?;
        let sources: Vec<Graph> = corpus(n, workers)?.iter().map(|t| t.graph().clone()).collect();
        let variants = verify_lemmas(&edge_deleted_variants(&sources, VARIANTS_PER_ORDER, a.seed ^ n as u64))?;
        total += on_corpus.violations() + variants.violations();
        if !a.json {
            println!(
                "n={n}: lemma1 {} checks, lemma2 {} checks, lemma3 {} checks ({} apex-free); violations {}",
                on_corpus.lemma1.checked + variants.lemma1.checked,
                on_corpus.lemma2.checked + variants.lemma2.checked,
                on_corpus.lemma3.checked + variants.lemma3.checked,
                on_corpus.lemma3_apex_free.checked + variants.lemma3_apex_free.checked,
                on_corpus.violations() + variants.violations()
            );
        }
        orders.push(LemmaOrderOut {
            n,
            corpus: on_corpus,
            variants,
        });
    }
    let json = to_json(&LemmasOut {
        schema_version: SCHEMA_VERSION,
        seed: a.seed,
        orders,
    });
    if let Some(p) = &a.out {
        write_file(p, &json)?;
    }
    if a.json {
        print!("{json}");
    }
    if total == 0 {
        Ok(())
    } else {
        Err(Failure::Assertion(format!("{total} lemma violations")))
    }
}

#[derive(Serialize)]
struct BenchOut {
    schema_version: u32,
    suite: &'static str,
    n: usize,
    items: u64,
    /// Total five-cycles (counting) or corpus digest (enumeration).
    checksum: String,
    seconds: f64,
    rate: f64,
}

pub fn bench(a: &BenchArgs) -> CmdResult {
    let n = a.n.single().ok_or_else(|| usage("bench takes a single order"))?;
    let workers = a.workers.get();
    let out = match a.suite {
        Suite::Counting => {
            let graphs: Vec<Graph> = corpus(n, workers)?.iter().map(|t| t.graph().clone()).collect();
            let start = Instant::now();
            let mut total = 0u64;
            for g in &graphs {
                total += count_cycles(g, 5)?;
            }
            let seconds = start.elapsed().as_secs_f64();
            BenchOut {
                schema_version: SCHEMA_VERSION,
                suite: "counting",
                n,
                items: graphs.len() as u64,
                checksum: total.to_string(),
                seconds,
                rate: graphs.len() as f64 / seconds.max(f64::MIN_POSITIVE),
            }
        }
        Suite::Enumeration => {
            let start = Instant::now();
            let cert = enumerate_triangulations(n, workers, |_| {})?;
            let seconds = start.elapsed().as_secs_f64();
            BenchOut {
                schema_version: SCHEMA_VERSION,
                suite: "enumeration",
                n,
                items: cert.count,
                checksum: cert.digest,
                seconds,
                rate: cert.count as f64 / seconds.max(f64::MIN_POSITIVE),
            }
        }
    };
    let json = to_json(&out);
    if let Some(p) = &a.out {
        write_file(p, &json)?;
    }
    if a.json {
        print!("{json}");
    } else {
        let unit = if out.suite == "counting" { "graphs" } else { "classes" };
        println!(
            "{} n={}: {} {unit} in {:.3}s ({:.0} {unit}/s)",
            out.suite, out.n, out.items, out.seconds, out.rate
        );
    }
    Ok(())
}
