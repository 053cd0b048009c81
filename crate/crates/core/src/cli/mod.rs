//! The `cmreg` command line: `bound`, `analyze` and `verify`.
//!
//! [`run`] never touches the process: it returns the exit code together with
//! what would go to stdout and stderr, so the binary is a thin wrapper and
//! tests can drive the whole pipeline in-process.
//!
//! Exit codes: 0 when every enabled check passes or is skipped, 1 when any
//! check fails, 2 on usage or input errors.

pub mod input;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value;

use crate::bounds::{
    diagonal_cohomology_bound, eval_e, eval_f, eval_f_traced, eval_g, eval_h, gamma_ideal_bound, ideal_gendeg_bound,
    ideal_mumford_bound, lemma33_bound, mumford_t, submodule_gendeg_bound, BoundError, DiagonalVector,
    HilbertCoefficients,
};
use crate::homology::CohomologyProfile;
use crate::kernel::Field;
use crate::verify::{verify_profile, CheckGroup, VerifyInput, VerifyOptions};
pub use input::{parse_bigint, AnyInput, CapsSpec, CokerSpec, FieldSpec, InputDocument, InputError, ModuleSpec};
pub use parse::{parse_polynomial, ParseError};
pub use report::Format;

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn usage(msg: impl Into<String>) -> Self {
        RunOutput { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cmreg", version, about = "Regularity bounds for deficiency modules and a verifier for them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one bounding function.
    Bound(BoundArgs),
    /// Compute the cohomological profile of a module.
    Analyze(AnalyzeArgs),
    /// Compare computed invariants against the bounds.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundName {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "E")]
    E,
    #[value(name = "H")]
    H,
    Lemma33,
    Diag,
    Gamma44,
    Delta46,
    R47,
    T412,
    B414,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct BoundArgs {
    name: BoundName,
    #[arg(short = 'd')]
    d: Option<i64>,
    #[arg(short = 'i')]
    i: Option<i64>,
    /// Comma-separated caps x_0,..,x_k.
    #[arg(short = 'x', value_delimiter = ',', value_parser = parse_bigint, allow_hyphen_values = true)]
    x: Option<Vec<BigInt>>,
    #[arg(short = 'y', value_parser = parse_bigint)]
    y: Option<BigInt>,
    #[arg(short = 'u', value_parser = parse_bigint)]
    u: Option<BigInt>,
    #[arg(short = 'v', value_parser = parse_bigint)]
    v: Option<BigInt>,
    #[arg(short = 'w', value_parser = parse_bigint)]
    w: Option<BigInt>,
    #[arg(short = 'm', value_parser = parse_bigint)]
    m: Option<BigInt>,
    #[arg(short = 'r', value_parser = parse_bigint)]
    r: Option<BigInt>,
    #[arg(short = 'b', value_parser = parse_bigint)]
    b: Option<BigInt>,
    #[arg(short = 'g', value_parser = parse_bigint)]
    g: Option<BigInt>,
    #[arg(short = 'n')]
    n: Option<i64>,
    /// Comma-separated Hilbert coefficients e_0,..,e_{d-1}.
    #[arg(short = 'e', value_delimiter = ',', value_parser = parse_bigint, allow_hyphen_values = true)]
    e: Option<Vec<BigInt>>,
    #[arg(short = 't', value_parser = parse_bigint)]
    t: Option<BigInt>,
    #[arg(long, value_parser = parse_bigint, default_value = "1")]
    lambda: BigInt,
    /// Height `h = d - dim L` for t412.
    #[arg(long)]
    height: Option<i64>,
    /// Print intermediate quantities as well.
    #[arg(long)]
    verbose: bool,
    /// For F: print every recursive step.
    #[arg(long)]
    trace: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Degree window `lo:hi` for the tables.
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Record wall-clock time in the report (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    /// Number of files processed concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
    /// Comma-separated check groups, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    window: Option<(i64, i64)>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    timings: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad window start {lo:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad window end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                RunOutput { code: 2, stdout: String::new(), stderr: text }
            } else {
                RunOutput { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match cli.command {
        Command::Bound(a) => match run_bound(&a) {
            Ok(out) => RunOutput { code: 0, stdout: out, stderr: String::new() },
            Err(msg) => RunOutput::usage(format!("error: {msg}\n")),
        },
        Command::Analyze(a) => run_files(&a.files, a.jobs, a.format, |doc| analyze_doc(doc, &a)),
        Command::Verify(a) => match CheckGroup::parse_list(&a.checks) {
            Ok(groups) => run_files(&a.files, a.jobs, a.format, |doc| verify_doc(doc, &a, &groups)),
            Err(msg) => RunOutput::usage(format!("error: {msg}\n")),
        },
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str, name: BoundName) -> Result<T, String> {
    v.clone().ok_or_else(|| format!("bound {} needs {flag}", bound_label(name)))
}

fn bound_label(name: BoundName) -> String {
    name.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string())
}

fn run_bound(a: &BoundArgs) -> Result<String, String> {
    let be = |e: BoundError| e.to_string();
    let name = a.name;
    let lambda = &a.lambda;
    let mut out = String::new();
    let value = match name {
        BoundName::F => {
            let i = need(&a.i, "-i", name)?;
            let x = need(&a.x, "-x", name)?;
            if let Some(d) = a.d {
                if d != x.len() as i64 {
                    return Err(format!("-d {d} does not match the {} caps given with -x", x.len()));
                }
            }
            let diag = DiagonalVector::new(x, a.y.clone().unwrap_or_default()).map_err(be)?;
            if a.trace {
                let (v, trace) = eval_f_traced(i, &diag).map_err(be)?;
                for s in &trace.steps {
                    let _ = writeln!(
                        out,
                        "step i={} d={} x={} y={} m={} n={} t={} deltas={}",
                        s.i,
                        s.d,
                        join(&s.x),
                        s.y,
                        s.m,
                        s.n,
                        s.t,
                        join(&s.deltas)
                    );
                }
                v
            } else {
                eval_f(i, &diag).map_err(be)?
            }
        }
        BoundName::G => {
            let (i, d) = (need(&a.i, "-i", name)?, need(&a.d, "-d", name)?);
            let (u, v, w) = (need(&a.u, "-u", name)?, need(&a.v, "-v", name)?, need(&a.w, "-w", name)?);
            eval_g(i, d, &u, &v, &w).map_err(be)?
        }
        BoundName::E => eval_e(need(&a.i, "-i", name)?, &need(&a.x, "-x", name)?).map_err(be)?,
        BoundName::H => {
            let e = HilbertCoefficients::new(need(&a.e, "-e", name)?);
            eval_h(&need(&a.m, "-m", name)?, lambda, &e).map_err(be)?
        }
        BoundName::Lemma33 => {
            lemma33_bound(need(&a.i, "-i", name)?, need(&a.n, "-n", name)?, &need(&a.x, "-x", name)?).map_err(be)?
        }
        BoundName::Diag => {
            diagonal_cohomology_bound(need(&a.i, "-i", name)?, need(&a.n, "-n", name)?, &need(&a.x, "-x", name)?)
                .map_err(be)?
        }
        BoundName::Gamma44 => {
            let (i, d) = (need(&a.i, "-i", name)?, need(&a.d, "-d", name)?);
            gamma_ideal_bound(i, d, &need(&a.m, "-m", name)?, &need(&a.r, "-r", name)?, lambda).map_err(be)?
        }
        BoundName::Delta46 => {
            let (i, d) = (need(&a.i, "-i", name)?, need(&a.d, "-d", name)?);
            let (m, b, r) = (need(&a.m, "-m", name)?, need(&a.b, "-b", name)?, need(&a.r, "-r", name)?);
            let res = submodule_gendeg_bound(i, d, &m, lambda, &b, &r).map_err(be)?;
            if a.verbose {
                let _ = writeln!(out, "rho = {}\npi = {}", res.rho, res.pi);
            }
            res.delta
        }
        BoundName::R47 => {
            let (i, d) = (need(&a.i, "-i", name)?, need(&a.d, "-d", name)?);
            let (r, gamma) = ideal_gendeg_bound(i, d, &need(&a.g, "-g", name)?, lambda).map_err(be)?;
            if a.verbose {
                let _ = writeln!(out, "r = {r}");
            }
            gamma
        }
        BoundName::T412 => {
            let d = need(&a.d, "-d", name)?;
            let h = need(&a.height, "--height", name)?;
            let e = HilbertCoefficients::new(a.e.clone().unwrap_or_default());
            let res = mumford_t(&need(&a.m, "-m", name)?, d, lambda, h, &e).map_err(be)?;
            if a.verbose {
                let _ = writeln!(
                    out,
                    "args = {}\nreg1 offset = {}\nreg2 offset = {}",
                    join(res.args.coeffs()),
                    res.reg1_offset,
                    res.reg2_offset
                );
            }
            res.t
        }
        BoundName::B414 => {
            let (i, d) = (need(&a.i, "-i", name)?, need(&a.d, "-d", name)?);
            ideal_mumford_bound(i, d, &need(&a.t, "-t", name)?).map_err(be)?
        }
    };
    let _ = writeln!(out, "{value}");
    Ok(out)
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// What one input file contributed.
struct FileOutput {
    code: i32,
    rendered: Rendered,
    diagnostics: String,
}

enum Rendered {
    Json(Value),
    Text(String),
    Nothing,
}

fn run_files(files: &[PathBuf], jobs: usize, format: Format, work: impl Fn(&Loaded) -> FileOutput + Sync) -> RunOutput {
    let process = |k: usize| -> FileOutput {
        let label = files[k].display().to_string();
        let text = match std::fs::read_to_string(&files[k]) {
            Ok(t) => t,
            Err(e) => return input_failure(&label, &e.to_string()),
        };
        let doc = match InputDocument::parse(&text) {
            Ok(d) => d,
            Err(e) => return input_failure(&label, &e.to_string()),
        };
        let input = match doc.build() {
            Ok(i) => i,
            Err(e) => return input_failure(&label, &e.to_string()),
        };
        let opts = match doc.options() {
            Ok(o) => o,
            Err(e) => return input_failure(&label, &e.to_string()),
        };
        work(&Loaded { label, doc, input, opts, first: k == 0, format })
    };
    let results: Vec<FileOutput> = if jobs <= 1 || files.len() <= 1 {
        (0..files.len()).map(process).collect()
    } else {
        let next = AtomicUsize::new(0);
        let mut slots: Vec<Option<FileOutput>> = (0..files.len()).map(|_| None).collect();
        let done = std::sync::Mutex::new(Vec::new());
        std::thread::scope(|s| {
            for _ in 0..jobs.min(files.len()) {
                s.spawn(|| loop {
                    let k = next.fetch_add(1, Ordering::SeqCst);
                    if k >= files.len() {
                        break;
                    }
                    let r = process(k);
                    done.lock().expect("worker panicked").push((k, r));
                });
            }
        });
        for (k, r) in done.into_inner().expect("worker panicked") {
            slots[k] = Some(r);
        }
        slots.into_iter().map(|r| r.expect("every file processed")).collect()
    };
    let code = results.iter().map(|r| r.code).max().unwrap_or(0);
    let stderr: String = results.iter().map(|r| r.diagnostics.as_str()).collect();
    let stdout = match format {
        Format::Json => {
            let mut docs: Vec<Value> = results
                .into_iter()
                .filter_map(|r| match r.rendered {
                    Rendered::Json(v) => Some(v),
                    _ => None,
                })
                .collect();
            let value = match docs.len() {
                0 => None,
                1 if files.len() == 1 => docs.pop(),
                _ => Some(Value::Array(docs)),
            };
            value.map_or_else(String::new, |v| {
                serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
            })
        }
        Format::Csv | Format::Md => {
            let parts: Vec<String> = results
                .into_iter()
                .filter_map(|r| match r.rendered {
                    Rendered::Text(t) => Some(t),
                    _ => None,
                })
                .collect();
            parts.join(if format == Format::Md { "\n" } else { "" })
        }
    };
    RunOutput { code, stdout, stderr }
}

fn input_failure(label: &str, msg: &str) -> FileOutput {
    FileOutput { code: 2, rendered: Rendered::Nothing, diagnostics: format!("{label}: error: {msg}\n") }
}

struct Loaded {
    label: String,
    doc: InputDocument,
    input: AnyInput,
    opts: VerifyOptions,
    /// CSV headers are only written once.
    first: bool,
    format: Format,
}

fn analyze_doc(l: &Loaded, a: &AnalyzeArgs) -> FileOutput {
    match &l.input {
        AnyInput::Q(i) => analyze_generic(l, i, a),
        AnyInput::GF(i) => analyze_generic(l, i, a),
    }
}

fn verify_doc(l: &Loaded, a: &VerifyArgs, groups: &[CheckGroup]) -> FileOutput {
    match &l.input {
        AnyInput::Q(i) => verify_generic(l, i, a, groups),
        AnyInput::GF(i) => verify_generic(l, i, a, groups),
    }
}

fn analyze_generic<F: Field>(l: &Loaded, input: &VerifyInput<F>, a: &AnalyzeArgs) -> FileOutput {
    let start = Instant::now();
    let profile = match CohomologyProfile::new(&input.ring, &input.module) {
        Ok(p) => p,
        Err(e) => return input_failure(&l.label, &e.to_string()),
    };
    let window = a.window.unwrap_or(profile.window);
    let meta = report::Meta {
        field: input.ring.field().describe(),
        wall_time_ms: a.timings.then(|| start.elapsed().as_millis()),
    };
    let rendered = match l.format {
        Format::Json => {
            let mut v = report::analyze_json(&l.doc, &profile, window, &meta);
            v["window"] = serde_json::json!([window.0, window.1]);
            Rendered::Json(v)
        }
        Format::Csv => Rendered::Text(report::analyze_csv(&l.label, &profile, window, l.first)),
        Format::Md => Rendered::Text(report::analyze_md(&l.label, &profile, window)),
    };
    FileOutput { code: 0, rendered, diagnostics: String::new() }
}

fn verify_generic<F: Field>(l: &Loaded, input: &VerifyInput<F>, a: &VerifyArgs, groups: &[CheckGroup]) -> FileOutput {
    let start = Instant::now();
    let mut opts = l.opts.clone();
    if a.window.is_some() {
        opts.window = a.window;
    }
    let result = CohomologyProfile::new(&input.ring, &input.module)
        .and_then(|profile| verify_profile(input, profile, groups, &opts));
    let report = match result {
        Ok(r) => r,
        Err(e) => return input_failure(&l.label, &e.to_string()),
    };
    let meta = report::Meta {
        field: input.ring.field().describe(),
        wall_time_ms: a.timings.then(|| start.elapsed().as_millis()),
    };
    let failures = report.failures();
    let code = i32::from(!failures.is_empty());
    let diagnostics = if failures.is_empty() {
        String::new()
    } else {
        let ids: Vec<&str> = failures.iter().map(|c| c.id.as_str()).collect();
        format!("{}: {} failed: {}\n", l.label, ids.len(), ids.join(", "))
    };
    let rendered = match l.format {
        Format::Json => Rendered::Json(report::verify_json(&l.doc, &report, &meta)),
        Format::Csv => Rendered::Text(report::verify_csv(&l.label, &report.checks, l.first)),
        Format::Md => Rendered::Text(report::verify_md(&l.label, &report)),
    };
    FileOutput { code, rendered, diagnostics }
}
