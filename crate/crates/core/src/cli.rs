//! Command-line front end. Exit codes: 0 when every check passes, 1 when a
//! verification fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::forms::{Family, Transcriptions};
use crate::graph::graph6::from_graph6;
use crate::graph::{distance_matrix, named_graph, Graph, NamedGraphSpec};
use crate::mates::{
    cospectral_classes, ds_verdict_from_table, ingest_graph6, load_source, GraphSource, MAX_BUILTIN_ORDER,
};
use crate::poly::charpoly_exact;
use crate::spectra::spectrum_of;
use crate::verify::{self, Bounds, Status, VerificationResult, SCHEMA_VERSION};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Order range covered by `report` without `--deep`.
const REPORT_ORDERS: std::ops::RangeInclusive<usize> = 5..=8;

#[derive(Parser, Debug)]
#[command(
    name = "specgraph",
    version,
    about = "Distance spectra of small graphs and verifiers for extended double stars"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenvalues and exact characteristic polynomial of a distance matrix.
    Spectrum {
        /// Named graph ("T:1,1", "C:7", "H3", ...) or a graph6 string.
        graph: String,
        /// Also print the distance matrix.
        #[arg(long)]
        matrix: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one verifier, or `all`.
    Verify {
        /// lemma22, interlacing, interval-table, cycles, fg-roots, theorem31,
        /// case:<family>, hats:<k> or all.
        id: String,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Transcribed polynomials to check instead of the built-in ones.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Group connected graphs by exact distance characteristic polynomial.
    MateSearch(MateArgs),
    /// Every verifier plus the mate search, as one report.
    Report {
        /// Accepted for symmetry with `verify all`; the report always covers everything.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Include the order-9 mate search.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        no_timestamp: bool,
        #[arg(long, env = "SPECGRAPH_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[arg(long, default_value_t = 8)]
    pub max_ab: u32,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long, default_value_t = 100)]
    pub max_c: i64,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("order").required(true).args(["n", "tab"])))]
pub struct MateArgs {
    /// Order of the graphs to classify.
    #[arg(long)]
    pub n: Option<usize>,
    /// Check T(a,b) for cospectral mates, as "a,b".
    #[arg(long)]
    pub tab: Option<String>,
    /// graph6 file to classify instead of the built-in generator.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, env = "SPECGRAPH_JOBS")]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Usage or input problem; always exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, UsageError>;

/// Parses `args` (program name first) and runs the command, writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Spectrum { graph, matrix, format } => cmd_spectrum(&graph, matrix, format, out),
        Command::Verify { id, bounds, output, golden } => cmd_verify(&id, &bounds, &output, golden.as_ref(), out),
        Command::MateSearch(args) => cmd_mate_search(&args, out, err),
        Command::Report { bounds, output, golden, deep, no_timestamp, jobs, .. } => {
            cmd_report(&bounds, &output, golden.as_ref(), deep, no_timestamp, jobs, out, err)
        }
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn parse_graph(text: &str) -> crate::Result<Graph> {
    match text.parse::<NamedGraphSpec>() {
        Ok(spec) => named_graph(&spec),
        Err(named) => from_graph6(text).map_err(|_| named),
    }
}

/// Six decimals, without a negative sign on zero.
fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn emit(text: &str, out_path: Option<&PathBuf>, out: &mut dyn Write) -> std::result::Result<(), UsageError> {
    match out_path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_spectrum(text: &str, matrix: bool, format: Format, out: &mut dyn Write) -> CmdResult {
    let g = parse_graph(text)?;
    let d = distance_matrix(&g)?;
    let m = d.to_int_matrix();
    let s = spectrum_of(&m)?;
    let cp = charpoly_exact(&m);
    let eig: Vec<String> = s.values.iter().map(|&x| fmt6(x)).collect();
    let body = match format {
        Format::Json => {
            let mut v = json!({
                "schema": SCHEMA_VERSION,
                "graph": text,
                "order": g.n(),
                "eigenvalues": eig,
                "charpoly": cp.to_string(),
            });
            if matrix {
                v["matrix"] = json!(d.rows());
            }
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut t = String::from("index,eigenvalue\n");
            for (i, e) in eig.iter().enumerate() {
                t.push_str(&format!("{},{e}\n", i + 1));
            }
            t
        }
        Format::Text => {
            let mut t = format!("graph: {text} ({} vertices)\n", g.n());
            if matrix {
                t.push_str("distance matrix:\n");
                for row in d.rows() {
                    let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                    t.push_str(&format!("  {}\n", cells.join(" ")));
                }
            }
            t.push_str(&format!("eigenvalues: {}\n", eig.join(" ")));
            t.push_str(&format!("charpoly: {cp}\n"));
            t
        }
    };
    out.write_all(body.as_bytes())?;
    Ok(EXIT_PASS)
}

fn transcriptions(golden: Option<&PathBuf>) -> std::result::Result<Transcriptions, UsageError> {
    match golden {
        Some(p) => Transcriptions::load(p).map_err(|e| UsageError(format!("golden file {}: {e}", p.display()))),
        None => Ok(Transcriptions::default()),
    }
}

fn bounds(b: &BoundArgs) -> std::result::Result<Bounds, UsageError> {
    if b.max_ab < 2 || b.max_n < 8 || b.max_c < 1 {
        return Err(UsageError("bounds need --max-ab ≥ 2, --max-n ≥ 8, --max-c ≥ 1".into()));
    }
    Ok(Bounds { max_ab: b.max_ab, max_n: b.max_n, max_c: b.max_c })
}

/// Runs the verifier named by `id`.
pub fn run_verifier(id: &str, b: Bounds, t: &Transcriptions) -> crate::Result<Vec<VerificationResult>> {
    let one = |r: VerificationResult| Ok(vec![r]);
    match id {
        "lemma22" => one(verify::verify_lemma22_with(b.max_ab, t)),
        "interlacing" => one(verify::verify_interlacing_bounds(b.max_ab)),
        "interval-table" => one(verify::verify_interval_table(b.max_ab)),
        "cycles" => one(verify::verify_cycle_lemmas(b.max_n)),
        "theorem31" => one(verify::verify_theorem31(b.max_ab)),
        "fg-roots" => one(verify::verify_fg_roots_with(b.max_c, t)),
        "all" => verify::verify_all(b, t),
        _ => {
            if let Some(fam) = id.strip_prefix("case:") {
                one(verify::verify_case_table(fam.parse::<Family>()?)?)
            } else if let Some(k) = id.strip_prefix("hats:") {
                let k: usize = k.parse().map_err(|_| Error::BadParameters {
                    family: "hat".into(),
                    reason: format!("k = {k:?} is not a number"),
                })?;
                one(verify::verify_hats_with(k, t)?)
            } else {
                Err(Error::UnknownFamily(format!("unknown verifier id {id:?}")))
            }
        }
    }
}

#[derive(Serialize)]
struct Consolidated<'a> {
    schema: u32,
    lemma: &'a str,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_unix: Option<u64>,
    results: &'a [VerificationResult],
    witnesses: Vec<String>,
}

fn overall(results: &[VerificationResult]) -> Status {
    if results.iter().all(VerificationResult::passed) {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render(label: &str, results: &[VerificationResult], format: Format, stamp: Option<u64>) -> String {
    match format {
        Format::Json if results.len() == 1 && label != "report" => results[0].to_json() + "\n",
        Format::Json => {
            let doc = Consolidated {
                schema: SCHEMA_VERSION,
                lemma: label,
                status: overall(results),
                generated_unix: stamp,
                results,
                witnesses: results
                    .iter()
                    .flat_map(|r| r.witnesses.iter().map(|w| format!("{}: {w}", r.lemma)))
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
        }
        Format::Csv => {
            let mut t = String::from("lemma,status,checks,failed,first_witness\n");
            for r in results {
                let failed = r.failures().count();
                let w = r.witnesses.first().map_or("", String::as_str);
                t.push_str(&format!(
                    "{},{},{},{failed},{}\n",
                    csv_field(&r.lemma),
                    r.status,
                    r.checks.len(),
                    csv_field(w)
                ));
            }
            t
        }
        Format::Text => {
            let mut t = String::new();
            for r in results {
                t.push_str(&format!("{} {}\n", r.status, r.lemma));
                for w in &r.witnesses {
                    t.push_str(&format!("    {w}\n"));
                }
            }
            t
        }
    }
}

fn cmd_verify(
    id: &str,
    b: &BoundArgs,
    output: &OutputArgs,
    golden: Option<&PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    let t = transcriptions(golden)?;
    let results = run_verifier(id, bounds(b)?, &t)?;
    emit(&render(id, &results, output.format, None), output.out.as_ref(), out)?;
    Ok(if overall(&results).is_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn pool(jobs: Option<usize>) -> std::result::Result<rayon::ThreadPool, UsageError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(UsageError("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(j);
    }
    builder.build().map_err(|e| UsageError(e.to_string()))
}

fn parse_tab(text: &str) -> std::result::Result<(usize, usize), UsageError> {
    let bad = || UsageError(format!("--tab expects \"a,b\" with a, b ≥ 1, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a == 0 || b == 0 {
        return Err(bad());
    }
    Ok((a, b))
}

fn cmd_mate_search(args: &MateArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let tab = args.tab.as_deref().map(parse_tab).transpose()?;
    let n = match (args.n, tab) {
        (_, Some((a, b))) => a + b + 3,
        (Some(n), None) => n,
        (None, None) => unreachable!("clap requires --n or --tab"),
    };
    let source = match &args.input {
        Some(p) => {
            let (_, bad) = ingest_graph6(p)?;
            for (line, e) in &bad {
                writeln!(err, "{}:{line}: {e}", p.display())?;
            }
            GraphSource::Graph6(p.clone())
        }
        None if n == 0 || n > MAX_BUILTIN_ORDER => {
            return Err(UsageError(format!(
                "order {n} is outside the built-in generator (1..={MAX_BUILTIN_ORDER}); supply --input <graph6 file>"
            )))
        }
        None => GraphSource::BuiltIn,
    };
    let (table, ds) = pool(args.jobs)?.install(|| -> crate::Result<_> {
        let table = cospectral_classes(&load_source(n, &source)?)?;
        let ds = tab.map(|(a, b)| ds_verdict_from_table(&table, a, b)).transpose()?;
        Ok((table, ds))
    })?;
    let body = match args.output.format {
        Format::Csv => table.to_csv(),
        Format::Text => {
            let multi = table.cospectral().count();
            format!(
                "order {n}: {} graphs, {} classes, {multi} with more than one member\n",
                table.total,
                table.classes.len()
            )
        }
        Format::Json => {
            let mut v: Value = serde_json::from_str(&table.to_json()).expect("class table is JSON");
            let status = ds.as_ref().map_or(Status::Pass, |r| r.status);
            v["lemma"] = json!("mate-search");
            v["status"] = json!(status);
            v["witnesses"] = json!(ds.as_ref().map_or(Vec::new(), |r| r.witnesses.clone()));
            if let Some(r) = &ds {
                v["ds"] = serde_json::to_value(r).expect("serializes");
            }
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
    };
    emit(&body, args.output.out.as_ref(), out)?;
    match ds {
        Some(r) => {
            let (a, b) = tab.expect("ds implies --tab");
            let size = table
                .class_of(&crate::mates::fingerprint(&named_graph(&NamedGraphSpec::Tab(a, b))?)?)
                .map_or(0, <[String]>::len);
            writeln!(err, "DS: {}, class size {size} of {} graphs", r.status, table.total)?;
            Ok(if r.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        None => Ok(EXIT_PASS),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_report(
    b: &BoundArgs,
    output: &OutputArgs,
    golden: Option<&PathBuf>,
    deep: bool,
    no_timestamp: bool,
    jobs: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let t = transcriptions(golden)?;
    let mut results = verify::verify_all(bounds(b)?, &t)?;
    let last = if deep { MAX_BUILTIN_ORDER } else { *REPORT_ORDERS.end() };
    let ds = pool(jobs)?.install(|| -> crate::Result<Vec<VerificationResult>> {
        let mut v = Vec::new();
        for n in *REPORT_ORDERS.start()..=last {
            let table = cospectral_classes(&load_source(n, &GraphSource::BuiltIn)?)?;
            for a in 1..=n - 4 {
                v.push(ds_verdict_from_table(&table, a, n - 3 - a)?);
            }
        }
        Ok(v)
    })?;
    results.extend(ds);
    for r in results.iter().filter(|r| !r.passed()) {
        writeln!(err, "FAIL {}", r.lemma)?;
    }
    let stamp = (!no_timestamp)
        .then(|| std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_secs()));
    emit(&render("report", &results, output.format, stamp), output.out.as_ref(), out)?;
    Ok(if overall(&results).is_pass() { EXIT_PASS } else { EXIT_FAIL })
}
