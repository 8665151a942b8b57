//! `bn` — exact Brill-Noether counts, divisor classes, codimension-2
//! intersection numbers and verification sweeps on the command line.
//!
//! Output conventions:
//!
//! * `--format plain` (default): a bare value for single-result commands,
//!   short labelled lines otherwise;
//! * `--format tsv`: tab-separated with a header row, no quoting;
//! * `--format json`: one object per invocation (an array for `table`).
//!   Every number is serialized as a decimal string and rationals as `p` or
//!   `p/q`, so 64-bit consumers cannot corrupt values; booleans stay JSON
//!   booleans. Keys appear in a fixed order and re-serializing parsed output
//!   reproduces it byte for byte.
//!
//! Exit status: 0 on success, 1 when a verification suite fails or
//! `--method all` detects a disagreement, 2 on a precondition violation
//! (with a one-line diagnostic on stderr naming it). Timings go to stderr
//! only; stdout bytes are independent of `--jobs`.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use brill_noether::{
    adjusted_castelnuovo, castelnuovo_number, eh_exists, enumerate_sequences, mu_nu,
    pointed_class, pointed_count, pointed_via_det, pointed_via_sym, proportionality_report, rho,
    rho_adjusted, run_suite, surface_intersection, BnInput, Error, ExactInt, SurfaceIntersection,
    SweepParams, VanishingSeq, VerifyReport,
};

/// Write one line to stdout; when the consumer has closed the pipe (say,
/// `bn table ... | head`), stop quietly like any well-behaved filter
/// instead of panicking on the broken pipe.
fn out(args: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_fmt(args)
        .and_then(|()| stdout.write_all(b"\n"))
        .is_err()
    {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { crate::out(format_args!($($arg)*)) };
}

#[derive(Parser)]
#[command(
    name = "bn",
    version,
    about = "Exact counts of linear series on general curves, divisor classes \
             on the moduli of 1-pointed stable curves, and intersection numbers \
             of codimension-2 loci"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads for sweeps. Output bytes do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Pair-sum formula (the production route).
    Compact,
    /// Bracket-determinant route.
    Det,
    /// Symmetric-function route.
    Sym,
    /// All three; exits 1 if they disagree.
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    /// Catalan numbers as pencil counts on even-genus curves.
    Catalan,
    /// Classical counts over all (g, r) with rho = 0 in range.
    Castelnuovo,
    /// Pointed counts over all adjusted-rho = -1 instances in range.
    Pointed,
}

/// `(g, r, d)` with an optional vanishing sequence.
#[derive(Args)]
struct ProblemArgs {
    #[arg(short = 'g', long = "genus")]
    g: i64,
    #[arg(short = 'r', long = "rank")]
    r: i64,
    #[arg(short = 'd', long = "degree")]
    d: i64,
    /// Vanishing sequence a_0,a_1,...,a_r (comma-separated, strictly
    /// ascending, non-negative).
    #[arg(
        short = 'a',
        long = "sequence",
        value_delimiter = ',',
        allow_negative_numbers = true
    )]
    a: Option<Vec<i64>>,
}

/// `(g, r, d)` with a mandatory vanishing sequence.
#[derive(Args)]
struct InstanceArgs {
    #[arg(short = 'g', long = "genus")]
    g: i64,
    #[arg(short = 'r', long = "rank")]
    r: i64,
    #[arg(short = 'd', long = "degree")]
    d: i64,
    /// Vanishing sequence a_0,a_1,...,a_r (comma-separated, strictly
    /// ascending, non-negative).
    #[arg(
        short = 'a',
        long = "sequence",
        value_delimiter = ',',
        allow_negative_numbers = true,
        required = true
    )]
    a: Vec<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Brill-Noether number rho(g, r, d), or the adjusted number when a
    /// vanishing sequence is given.
    Rho(ProblemArgs),
    /// Existence test for a linear series with prescribed vanishing at one
    /// point of a general curve.
    Exists(InstanceArgs),
    /// Castelnuovo number (requires rho = 0), or the adjusted count at a
    /// fixed general point (requires adjusted rho = 0) with a sequence.
    Castelnuovo(ProblemArgs),
    /// Pointed Castelnuovo number: series with prescribed vanishing at a
    /// moving point (requires adjusted rho = -1, g >= 2).
    Pointed {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Which formula to evaluate.
        #[arg(long, value_enum, default_value_t = Method::Compact)]
        method: Method,
    },
    /// Divisor class of the pointed locus: mu, nu and the full coefficient
    /// vector in the (lambda, psi, delta_irr, delta_i) basis.
    DivisorClass(InstanceArgs),
    /// Intersection numbers of the rho = -2 locus with the one-nodal test
    /// surfaces, with optional per-sequence terms and a proportionality
    /// comparison against a second locus.
    Codim2 {
        #[arg(short = 'g', long = "genus")]
        g: i64,
        #[arg(short = 'r', long = "rank")]
        r: i64,
        #[arg(short = 'd', long = "degree")]
        d: i64,
        /// Component genera i (comma-separated list allowed).
        #[arg(short = 'i', long = "surfaces", value_delimiter = ',', required = true)]
        surfaces: Vec<i64>,
        /// Show the per-sequence terms of each sum.
        #[arg(long)]
        terms: bool,
        /// Second locus G,R,D: report whether the two intersection vectors
        /// over the listed surfaces are proportional.
        #[arg(long, value_delimiter = ',', value_name = "G,R,D")]
        compare: Option<Vec<i64>>,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: formulas, identities, divisors, paper-numbers.
        #[arg(long)]
        suite: String,
        /// Largest genus swept (default 12).
        #[arg(long)]
        gmax: Option<i64>,
        /// Largest rank swept (default 4).
        #[arg(long)]
        rmax: Option<i64>,
        /// Seed for the randomized identity checks (default 1729).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit a table of counts (TSV with a header row; an array of row
    /// objects under --format json).
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        /// Inclusive range LO..HI for the leading parameter (m for catalan,
        /// g otherwise).
        #[arg(long)]
        range: String,
        /// Largest rank for the castelnuovo and pointed tables.
        #[arg(long, default_value_t = 3)]
        rmax: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Output is byte-identical for any pool size, so a pool that was
        // already started is fine to keep.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let format = cli.format;
    match cli.command {
        Command::Rho(args) => cmd_rho(&args, format),
        Command::Exists(args) => cmd_exists(&args, format),
        Command::Castelnuovo(args) => cmd_castelnuovo(&args, format),
        Command::Pointed { instance, method } => cmd_pointed(&instance, method, format),
        Command::DivisorClass(args) => cmd_divisor_class(&args, format),
        Command::Codim2 {
            g,
            r,
            d,
            surfaces,
            terms,
            compare,
        } => cmd_codim2(g, r, d, &surfaces, terms, compare.as_deref(), format),
        Command::Verify {
            suite,
            gmax,
            rmax,
            seed,
        } => cmd_verify(&suite, gmax, rmax, seed, format),
        Command::Table { kind, range, rmax } => cmd_table(kind, &range, rmax, format),
    }
}

fn cmd_rho(args: &ProblemArgs, format: Format) -> Result<u8, Error> {
    let p = BnInput::new(args.g, args.r, args.d)?;
    let (label, a, value) = match &args.a {
        None => ("rho", None, rho(&p)),
        Some(entries) => {
            let a = VanishingSeq::new(entries.clone())?;
            let value = rho_adjusted(&p, &a)?;
            ("rho_adjusted", Some(a), value)
        }
    };
    match format {
        Format::Plain => outln!("{value}"),
        Format::Tsv => outln!("{label}\n{value}"),
        Format::Json => {
            let mut pairs = input_pairs("rho", &p, a.as_ref());
            pairs.push((label.into(), jstr(value)));
            emit_object(pairs);
        }
    }
    Ok(0)
}

fn cmd_exists(args: &InstanceArgs, format: Format) -> Result<u8, Error> {
    let p = BnInput::new(args.g, args.r, args.d)?;
    let a = VanishingSeq::new(args.a.clone())?;
    let value = eh_exists(&p, &a)?;
    match format {
        Format::Plain => outln!("{value}"),
        Format::Tsv => outln!("exists\n{value}"),
        Format::Json => {
            let mut pairs = input_pairs("exists", &p, Some(&a));
            pairs.push(("exists".into(), Value::Bool(value)));
            emit_object(pairs);
        }
    }
    Ok(0)
}

fn cmd_castelnuovo(args: &ProblemArgs, format: Format) -> Result<u8, Error> {
    let p = BnInput::new(args.g, args.r, args.d)?;
    let (a, value): (Option<VanishingSeq>, ExactInt) = match &args.a {
        None => (None, castelnuovo_number(&p)?),
        Some(entries) => {
            let a = VanishingSeq::new(entries.clone())?;
            let value = adjusted_castelnuovo(&p, &a)?;
            (Some(a), value)
        }
    };
    match format {
        Format::Plain => outln!("{value}"),
        Format::Tsv => outln!("count\n{value}"),
        Format::Json => {
            let mut pairs = input_pairs("castelnuovo", &p, a.as_ref());
            pairs.push(("count".into(), jstr(&value)));
            emit_object(pairs);
        }
    }
    Ok(0)
}

fn cmd_pointed(args: &InstanceArgs, method: Method, format: Format) -> Result<u8, Error> {
    let p = BnInput::new(args.g, args.r, args.d)?;
    let a = VanishingSeq::new(args.a.clone())?;
    if method == Method::All {
        let compact: ExactInt = pointed_count(&p, &a)?;
        let det: ExactInt = pointed_via_det(&p, &a)?;
        let sym: ExactInt = pointed_via_sym(&p, &a)?;
        let agree = compact == det && det == sym;
        match format {
            Format::Plain => {
                outln!("compact: {compact}");
                outln!("det: {det}");
                outln!("sym: {sym}");
            }
            Format::Tsv => {
                outln!("method\tcount");
                outln!("compact\t{compact}");
                outln!("det\t{det}");
                outln!("sym\t{sym}");
            }
            Format::Json => {
                let mut pairs = input_pairs("pointed", &p, Some(&a));
                pairs.push(("method".into(), jstr("all")));
                pairs.push(("compact".into(), jstr(&compact)));
                pairs.push(("det".into(), jstr(&det)));
                pairs.push(("sym".into(), jstr(&sym)));
                pairs.push(("agree".into(), Value::Bool(agree)));
                emit_object(pairs);
            }
        }
        if agree {
            return Ok(0);
        }
        eprintln!(
            "error: the three formulas disagree: compact = {compact}, det = {det}, sym = {sym}"
        );
        return Ok(1);
    }
    let (name, value): (&str, ExactInt) = match method {
        Method::Compact => ("compact", pointed_count(&p, &a)?),
        Method::Det => ("det", pointed_via_det(&p, &a)?),
        Method::Sym => ("sym", pointed_via_sym(&p, &a)?),
        Method::All => unreachable!(),
    };
    match format {
        Format::Plain => outln!("{value}"),
        Format::Tsv => outln!("count\n{value}"),
        Format::Json => {
            let mut pairs = input_pairs("pointed", &p, Some(&a));
            pairs.push(("method".into(), jstr(name)));
            pairs.push(("count".into(), jstr(&value)));
            emit_object(pairs);
        }
    }
    Ok(0)
}

fn cmd_divisor_class(args: &InstanceArgs, format: Format) -> Result<u8, Error> {
    let p = BnInput::new(args.g, args.r, args.d)?;
    let a = VanishingSeq::new(args.a.clone())?;
    let (mu, nu) = mu_nu::<ExactInt>(&p, &a)?;
    let class = pointed_class::<ExactInt>(&p, &a)?;
    match format {
        Format::Plain => {
            outln!("mu = {mu}");
            outln!("nu = {nu}");
            outln!("class = {class}");
            outln!("lambda = {}", class.lambda);
            outln!("psi = {}", class.psi);
            outln!("delta_irr = {}", class.delta_irr);
            for (k, c) in class.delta.iter().enumerate() {
                outln!("delta_{} = {c}", k + 1);
            }
        }
        Format::Tsv => {
            outln!("coefficient\tvalue");
            outln!("mu\t{mu}");
            outln!("nu\t{nu}");
            outln!("lambda\t{}", class.lambda);
            outln!("psi\t{}", class.psi);
            outln!("delta_irr\t{}", class.delta_irr);
            for (k, c) in class.delta.iter().enumerate() {
                outln!("delta_{}\t{c}", k + 1);
            }
        }
        Format::Json => {
            let mut pairs = input_pairs("divisor-class", &p, Some(&a));
            pairs.push(("mu".into(), jstr(&mu)));
            pairs.push(("nu".into(), jstr(&nu)));
            pairs.push(("class".into(), jstr(&class)));
            pairs.push(("lambda".into(), jstr(&class.lambda)));
            pairs.push(("psi".into(), jstr(&class.psi)));
            pairs.push(("delta_irr".into(), jstr(&class.delta_irr)));
            pairs.push((
                "delta".into(),
                Value::Array(class.delta.iter().map(jstr).collect()),
            ));
            emit_object(pairs);
        }
    }
    Ok(0)
}

fn cmd_codim2(
    g: i64,
    r: i64,
    d: i64,
    surfaces: &[i64],
    terms: bool,
    compare: Option<&[i64]>,
    format: Format,
) -> Result<u8, Error> {
    let p = BnInput::new(g, r, d)?;
    if let Some(other) = compare {
        if other.len() != 3 {
            return Err(Error::Precondition(format!(
                "--compare takes exactly three values G,R,D, got {}",
                other.len()
            )));
        }
        let p2 = BnInput::new(other[0], other[1], other[2])?;
        let report = proportionality_report::<ExactInt>(&p, &p2, surfaces)?;
        print_report(&report, "codim2", format);
        return Ok(if report.passed() { 0 } else { 1 });
    }
    let results = surfaces
        .iter()
        .map(|&i| surface_intersection::<ExactInt>(i, &p))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Plain => {
            if results.len() == 1 && !terms {
                outln!("{}", results[0].value);
            } else {
                for si in &results {
                    outln!("i = {}: {}", si.component_genus, si.value);
                    if terms {
                        for t in &si.terms {
                            outln!("  {}: {} * {} = {}", t.a, t.left, t.right, &t.left * &t.right);
                        }
                    }
                }
            }
        }
        Format::Tsv => {
            if terms {
                outln!("i\tsequence\tleft\tright");
                for si in &results {
                    for t in &si.terms {
                        outln!(
                            "{}\t{}\t{}\t{}",
                            si.component_genus,
                            seq_cell(&t.a),
                            t.left,
                            t.right
                        );
                    }
                }
            } else {
                outln!("i\tvalue");
                for si in &results {
                    outln!("{}\t{}", si.component_genus, si.value);
                }
            }
        }
        Format::Json => {
            let mut pairs = input_pairs("codim2", &p, None);
            pairs.push((
                "intersections".into(),
                Value::Array(results.iter().map(|si| intersection_json(si, terms)).collect()),
            ));
            emit_object(pairs);
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    gmax: Option<i64>,
    rmax: Option<i64>,
    seed: Option<u64>,
    format: Format,
) -> Result<u8, Error> {
    let mut params = SweepParams::default();
    if let Some(g) = gmax {
        params.gmax = g;
    }
    if let Some(r) = rmax {
        params.rmax = r;
    }
    if let Some(s) = seed {
        params.seed = s;
    }
    let report = run_suite(suite, params)?;
    print_report(&report, "verify", format);
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_table(kind: TableKind, range: &str, rmax: i64, format: Format) -> Result<u8, Error> {
    let (lo, hi) = parse_range(range)?;
    let (header, rows): (&[&str], Vec<Vec<String>>) = match kind {
        TableKind::Catalan => {
            let mut rows = Vec::new();
            for m in lo.max(1)..=hi {
                let p = BnInput::new(2 * m, 1, m + 1)?;
                let count: ExactInt = castelnuovo_number(&p)?;
                rows.push(vec![m.to_string(), count.to_string()]);
            }
            (&["m", "count"][..], rows)
        }
        TableKind::Castelnuovo => {
            let mut rows = Vec::new();
            for g in lo.max(0)..=hi {
                for r in 1..=rmax {
                    if g % (r + 1) != 0 {
                        continue;
                    }
                    let s = g / (r + 1);
                    let p = BnInput::new(g, r, g - s + r)?;
                    let count: ExactInt = castelnuovo_number(&p)?;
                    rows.push(vec![
                        g.to_string(),
                        r.to_string(),
                        p.d().to_string(),
                        count.to_string(),
                    ]);
                }
            }
            (&["g", "r", "d", "count"][..], rows)
        }
        TableKind::Pointed => {
            let mut rows = Vec::new();
            for g in lo.max(2)..=hi {
                for r in 1..=rmax {
                    for d in r..=g + r {
                        let p = BnInput::new(g, r, d)?;
                        for a in enumerate_sequences(&p, -1) {
                            let count: ExactInt = pointed_count(&p, &a)?;
                            rows.push(vec![
                                g.to_string(),
                                r.to_string(),
                                d.to_string(),
                                seq_cell(&a),
                                count.to_string(),
                            ]);
                        }
                    }
                }
            }
            (&["g", "r", "d", "a", "count"][..], rows)
        }
    };
    if format == Format::Json {
        let table = rows
            .iter()
            .map(|row| {
                let mut map = Map::new();
                for (k, cell) in header.iter().zip(row) {
                    map.insert((*k).to_string(), jstr(cell));
                }
                Value::Object(map)
            })
            .collect();
        emit(&Value::Array(table));
    } else {
        outln!("{}", header.join("\t"));
        for row in rows {
            outln!("{}", row.join("\t"));
        }
    }
    Ok(0)
}

/// Inclusive `LO..HI`.
fn parse_range(s: &str) -> Result<(i64, i64), Error> {
    let parsed = s.split_once("..").and_then(|(lo, hi)| {
        let lo: i64 = lo.trim().parse().ok()?;
        let hi: i64 = hi.trim().parse().ok()?;
        Some((lo, hi))
    });
    match parsed {
        Some((lo, hi)) if lo <= hi => Ok((lo, hi)),
        Some((lo, hi)) => Err(Error::Precondition(format!(
            "--range must be non-empty, got {lo}..{hi}"
        ))),
        None => Err(Error::Precondition(format!(
            "--range must be two integers LO..HI, got '{s}'"
        ))),
    }
}

/// Render a verification report on stdout; the wall-clock time goes to
/// stderr so stdout stays byte-identical across runs and `--jobs` values.
fn print_report(report: &VerifyReport, command: &str, format: Format) {
    match format {
        Format::Plain => outln!("{report}"),
        Format::Tsv => {
            outln!("suite\tcases\tfailures\tpassed\tverdict");
            outln!(
                "{}\t{}\t{}\t{}\t{}",
                report.suite,
                report.cases,
                report.failures.len(),
                report.passed(),
                report.verdict.as_deref().unwrap_or("-")
            );
        }
        Format::Json => {
            let mut params = Map::new();
            for (k, v) in &report.parameters {
                params.insert(k.clone(), jstr(v));
            }
            let failures = report
                .failures
                .iter()
                .map(|f| {
                    let mut map = Map::new();
                    map.insert("input".to_string(), jstr(&f.input));
                    map.insert("expected".to_string(), jstr(&f.expected));
                    map.insert("actual".to_string(), jstr(&f.actual));
                    Value::Object(map)
                })
                .collect();
            let notes = report.notes.iter().map(jstr).collect();
            let pairs = vec![
                ("command".to_string(), jstr(command)),
                ("suite".to_string(), jstr(&report.suite)),
                ("parameters".to_string(), Value::Object(params)),
                ("cases".to_string(), jstr(report.cases)),
                ("failures".to_string(), Value::Array(failures)),
                ("notes".to_string(), Value::Array(notes)),
                (
                    "verdict".to_string(),
                    report.verdict.as_ref().map_or(Value::Null, jstr),
                ),
                ("passed".to_string(), Value::Bool(report.passed())),
            ];
            emit_object(pairs);
        }
    }
    eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
}

fn intersection_json(si: &SurfaceIntersection<ExactInt>, terms: bool) -> Value {
    let mut map = Map::new();
    map.insert("i".to_string(), jstr(si.component_genus));
    map.insert("value".to_string(), jstr(&si.value));
    if terms {
        let rendered = si
            .terms
            .iter()
            .map(|t| {
                let mut term = Map::new();
                term.insert("a".to_string(), jseq(&t.a));
                term.insert("left".to_string(), jstr(&t.left));
                term.insert("right".to_string(), jstr(&t.right));
                Value::Object(term)
            })
            .collect();
        map.insert("terms".to_string(), Value::Array(rendered));
    }
    Value::Object(map)
}

/// `command`, the problem parameters and (when present) the sequence — the
/// echo prefix every JSON object starts with.
fn input_pairs(command: &str, p: &BnInput, a: Option<&VanishingSeq>) -> Vec<(String, Value)> {
    let mut pairs = vec![
        ("command".to_string(), jstr(command)),
        ("g".to_string(), jstr(p.g())),
        ("r".to_string(), jstr(p.r())),
        ("d".to_string(), jstr(p.d())),
    ];
    if let Some(a) = a {
        pairs.push(("a".to_string(), jseq(a)));
    }
    pairs
}

fn jstr(x: impl std::fmt::Display) -> Value {
    Value::String(x.to_string())
}

fn jseq(a: &VanishingSeq) -> Value {
    Value::Array(a.entries().iter().map(jstr).collect())
}

/// Comma-joined entries without parentheses (safe as a TSV cell).
fn seq_cell(a: &VanishingSeq) -> String {
    a.entries()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn emit_object(pairs: Vec<(String, Value)>) {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k, v);
    }
    emit(&Value::Object(map));
}

fn emit(v: &Value) {
    outln!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON serialization cannot fail")
    );
}
