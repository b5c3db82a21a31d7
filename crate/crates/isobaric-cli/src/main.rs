//! Command line front end. Every subcommand is a thin wrapper over one
//! library call chain; all arithmetic stays exact and rationals render as
//! `a/b`, never decimals. JSON output carries a `schema_version` field.

use std::fmt::Write as _;
use std::process::exit;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isobaric::ring::{int, render_rat, Int, Rat};
use isobaric::{
    companion_window, companion_window_symbolic, convolve, core_product, different_window,
    different_window_symbolic, family, fit_core_f, fit_core_g, gfp, glp, hessenberg_numeric,
    iso_exp, iso_log, isotrig, parse_bfile, period_mod, ramification_check, run_identity_suite,
    schur_hook, wip_explicit, Core, CoreKind, FamilyParams, FitResult, HessSign, MatrixWindow,
    SeqKind, SquareMatrix, ValueSeq, WeightVector, FAMILY_NAMES,
};
use serde_json::{json, Map, Number, Value};

#[derive(Parser)]
#[command(
    name = "isobaric",
    version,
    about = "Weighted isobaric polynomials, companion matrices, and exact sequence fitting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    F,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WindowKind {
    Companion,
    Different,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum G0Convention {
    /// Row 0 carries the part bound k.
    K,
    /// Row 0 carries the classical value 2.
    Two,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted polynomial for an explicit weight list
    Wip(WipArgs),
    /// All-ones polynomial, or its values at a core
    Gfp(SeqPolyArgs),
    /// Identity-weight polynomial, or its values at a core
    Glp(GlpArgs),
    /// Build a Hessenberg matrix and take its permanent and determinant
    Hessenberg(HessArgs),
    /// Rows of the companion or different orbit
    Window(WindowArgs),
    /// Hook-shaped Schur polynomial, or its value at a core
    SchurHook(SchurArgs),
    /// Convolution product of two value sequences
    Convolve(ConvolveArgs),
    /// Logarithm-style operator applied to a value sequence
    Log(OperatorArgs),
    /// Exponential-style operator applied to a value sequence
    Exp(OperatorArgs),
    /// Isosine and isocosine values of a core
    Trig(TrigArgs),
    /// Core whose characteristic polynomial is the product of two others
    CoreProduct(CoreProductArgs),
    /// Fit a recursion core to explicit values or a b-file
    Fit(FitArgs),
    /// Built-in family catalog
    Family(FamilyArgs),
    /// Period of a value sequence mod p
    Period(PeriodArgs),
    /// Discriminant divisibility against the period collapse at p
    Ramify(RamifyArgs),
    /// Run the full identity suite to a given depth
    Identities(IdentitiesArgs),
}

#[derive(Args)]
struct WipArgs {
    /// Comma-separated integer weights (1-indexed), or "ones" / "identity"
    #[arg(long)]
    weights: String,
    /// Part bound
    #[arg(long)]
    k: usize,
    /// Isobaric degree
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct SeqPolyArgs {
    /// Part bound (polynomial output; taken from the core when --core is given)
    #[arg(long, conflicts_with = "core")]
    k: Option<usize>,
    /// Degree, or last index when values are requested
    #[arg(long)]
    n: usize,
    /// Evaluate at this core instead of printing the polynomial
    #[arg(long)]
    core: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct GlpArgs {
    #[arg(long, conflicts_with = "core")]
    k: Option<usize>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    core: Option<String>,
    /// Also print row 0 under the chosen convention
    #[arg(long, value_enum, requires = "core")]
    g0: Option<G0Convention>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct HessArgs {
    #[arg(long, value_enum)]
    sign: Sign,
    /// "ones", "identity", or a comma-separated integer list
    #[arg(long)]
    weights: String,
    #[arg(long)]
    core: String,
    /// Matrix size
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long, value_enum, default_value = "companion")]
    kind: WindowKind,
    /// Numeric core; leave out for --symbolic
    #[arg(long, conflicts_with = "symbolic")]
    core: Option<String>,
    /// Symbolic entries in t1..tk
    #[arg(long, requires = "k")]
    symbolic: bool,
    /// Part bound for --symbolic
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    lo: i64,
    #[arg(long, allow_hyphen_values = true)]
    hi: i64,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct SchurArgs {
    #[arg(long)]
    k: usize,
    /// Arm length
    #[arg(long)]
    n: usize,
    /// Number of extra unit parts
    #[arg(long)]
    leg: usize,
    /// Evaluate at this core instead of printing the polynomial
    #[arg(long)]
    core: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct ConvolveArgs {
    /// Comma-separated rationals for the left factor, index 0 first
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Last index of the product; defaults to the shorter input's reach
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct OperatorArgs {
    #[arg(long)]
    core: String,
    /// Comma-separated rationals starting at --start
    #[arg(long)]
    values: String,
    /// Index of the first listed value
    #[arg(long, default_value = "1")]
    start: usize,
    /// Last output index; defaults to the last input index
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct TrigArgs {
    #[arg(long)]
    core: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct CoreProductArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct FitArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Comma-separated integer or rational values
    #[arg(long, conflicts_with = "bfile")]
    values: Option<String>,
    /// Read values from a b-file (`n a(n)` lines, `#` comments)
    #[arg(long)]
    bfile: Option<String>,
    /// Largest recursion order to try
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name; leave out to list all names
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<i64>,
    /// Last index of the generated run
    #[arg(long, default_value = "8")]
    n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct PeriodArgs {
    #[arg(long)]
    core: String,
    #[arg(long)]
    prime: u64,
    #[arg(long, value_enum)]
    kind: Mode,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct RamifyArgs {
    #[arg(long)]
    core: String,
    #[arg(long)]
    prime: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct IdentitiesArgs {
    #[arg(long, default_value = "12")]
    depth: usize,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<isobaric::Error> for Failure {
    fn from(e: isobaric::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type RunResult = Result<i32, Failure>;

fn main() {
    // Die quietly when the read end of a pipe goes away instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => exit(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            exit(2);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            exit(1);
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_int_list(flag: &str, text: &str) -> Result<Vec<Int>, Failure> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        let v = Int::from_str(part)
            .map_err(|_| usage(format!("{flag}: `{part}` is not an integer")))?;
        out.push(v);
    }
    if out.is_empty() {
        return Err(usage(format!("{flag}: empty list")));
    }
    Ok(out)
}

fn parse_rat(flag: &str, part: &str) -> Result<Rat, Failure> {
    let bad = || usage(format!("{flag}: `{part}` is not an integer or a/b rational"));
    match part.split_once('/') {
        Some((a, b)) => {
            let num = Int::from_str(a.trim()).map_err(|_| bad())?;
            let den = Int::from_str(b.trim()).map_err(|_| bad())?;
            if den == int(0) {
                return Err(usage(format!("{flag}: zero denominator in `{part}`")));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from(Int::from_str(part.trim()).map_err(|_| bad())?)),
    }
}

fn parse_rat_list(flag: &str, text: &str) -> Result<Vec<Rat>, Failure> {
    let out: Result<Vec<Rat>, Failure> =
        text.split(',').map(|p| parse_rat(flag, p.trim())).collect();
    let out = out?;
    if out.is_empty() {
        return Err(usage(format!("{flag}: empty list")));
    }
    Ok(out)
}

fn parse_core(flag: &str, text: &str) -> Result<Core, Failure> {
    Ok(Core::finite(parse_int_list(flag, text)?))
}

fn parse_weights(text: &str) -> Result<WeightVector, Failure> {
    match text {
        "ones" => Ok(WeightVector::AllOnes),
        "identity" => Ok(WeightVector::Identity),
        _ => Ok(WeightVector::Explicit(parse_int_list("--weights", text)?)),
    }
}

fn json_int(v: &Int) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn json_rat(v: &Rat) -> Value {
    if v.is_integer() {
        json_int(v.numer())
    } else {
        Value::String(render_rat(v))
    }
}

fn emit_json(mut payload: Map<String, Value>) -> i32 {
    payload.insert("schema_version".into(), json!(1));
    println!("{}", Value::Object(payload));
    0
}

fn no_csv(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(usage(format!("--format csv applies to sequence output only, not {what}")));
    }
    Ok(())
}

fn print_polynomial(poly: &isobaric::IsobaricPoly, format: Format) -> RunResult {
    no_csv(format, "a polynomial")?;
    match format {
        Format::Plain => {
            println!("{poly}");
            Ok(0)
        }
        Format::Json => {
            let mut m = Map::new();
            m.insert("polynomial".into(), json!(poly.to_string()));
            Ok(emit_json(m))
        }
        Format::Csv => unreachable!(),
    }
}

fn print_sequence(start: i64, values: &[Rat], format: Format) -> RunResult {
    match format {
        Format::Plain => {
            for (i, v) in values.iter().enumerate() {
                println!("{}\t{}", start + i as i64, render_rat(v));
            }
        }
        Format::Csv => {
            println!("n,value");
            for (i, v) in values.iter().enumerate() {
                println!("{},{}", start + i as i64, render_rat(v));
            }
        }
        Format::Json => {
            let mut m = Map::new();
            m.insert("start".into(), json!(start));
            m.insert(
                "values".into(),
                Value::Array(values.iter().map(json_rat).collect()),
            );
            return Ok(emit_json(m));
        }
    }
    Ok(0)
}

fn print_int_sequence(start: i64, values: &[Int], format: Format) -> RunResult {
    let rats: Vec<Rat> = values.iter().map(|v| Rat::from(v.clone())).collect();
    print_sequence(start, &rats, format)
}

fn matrix_json(m: &SquareMatrix<Rat>) -> Value {
    Value::Array(
        (0..m.size())
            .map(|i| Value::Array(m.row_slice(i).iter().map(json_rat).collect()))
            .collect(),
    )
}

fn matrix_plain(m: &SquareMatrix<Rat>) -> String {
    let mut out = String::new();
    for i in 0..m.size() {
        let row: Vec<String> = m.row_slice(i).iter().map(render_rat).collect();
        let _ = writeln!(out, "{}", row.join("\t"));
    }
    out
}

fn run(command: Command) -> RunResult {
    match command {
        Command::Wip(a) => {
            let omega = parse_weights(&a.weights)?;
            let poly = wip_explicit(&omega, a.k, a.n)?;
            print_polynomial(&poly, a.format)
        }
        Command::Gfp(a) => match a.core {
            Some(core) => {
                let core = parse_core("--core", &core)?;
                let values = core.gfp_values(a.n)?;
                print_int_sequence(0, &values, a.format)
            }
            None => {
                let k = a.k.ok_or_else(|| usage("--k is required without --core"))?;
                print_polynomial(&gfp(k, a.n), a.format)
            }
        },
        Command::Glp(a) => match a.core {
            Some(core) => {
                let core = parse_core("--core", &core)?;
                let values = core.glp_values(a.n)?;
                let (start, values) = match a.g0 {
                    None => (1, values),
                    Some(G0Convention::K) => {
                        let mut all = vec![int(core.coeffs().len() as i64)];
                        all.extend(values);
                        (0, all)
                    }
                    Some(G0Convention::Two) => {
                        let mut all = vec![int(2)];
                        all.extend(values);
                        (0, all)
                    }
                };
                print_int_sequence(start, &values, a.format)
            }
            None => {
                let k = a.k.ok_or_else(|| usage("--k is required without --core"))?;
                print_polynomial(&glp(k, a.n), a.format)
            }
        },
        Command::Hessenberg(a) => {
            no_csv(a.format, "a matrix report")?;
            let omega = parse_weights(&a.weights)?;
            let core = parse_core("--core", &a.core)?;
            let sign = match a.sign {
                Sign::Plus => HessSign::Plus,
                Sign::Minus => HessSign::Minus,
            };
            let m = hessenberg_numeric(sign, &omega, &core, a.n)?;
            let permanent = m.permanent_hessenberg()?;
            let determinant = m.determinant_hessenberg()?;
            match a.format {
                Format::Plain => {
                    print!("{}", matrix_plain(&m));
                    println!("permanent\t{}", render_rat(&permanent));
                    println!("determinant\t{}", render_rat(&determinant));
                    Ok(0)
                }
                Format::Json => {
                    let mut out = Map::new();
                    out.insert("matrix".into(), matrix_json(&m));
                    out.insert("permanent".into(), json_rat(&permanent));
                    out.insert("determinant".into(), json_rat(&determinant));
                    Ok(emit_json(out))
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Window(a) => {
            no_csv(a.format, "a matrix window")?;
            if a.symbolic {
                let k = a.k.expect("clap enforces --k with --symbolic");
                let w = match a.kind {
                    WindowKind::Companion => companion_window_symbolic(k, a.lo, a.hi)?,
                    WindowKind::Different => different_window_symbolic(k, a.lo, a.hi)?,
                };
                print_symbolic_window(&w, a.format)
            } else {
                let core = a
                    .core
                    .ok_or_else(|| usage("--core is required without --symbolic"))?;
                let core = parse_core("--core", &core)?;
                let w = match a.kind {
                    WindowKind::Companion => companion_window(&core, a.lo, a.hi)?,
                    WindowKind::Different => different_window(&core, a.lo, a.hi)?,
                };
                print_numeric_window(&w, a.format)
            }
        }
        Command::SchurHook(a) => {
            let poly = schur_hook(a.k, a.n, a.leg)?;
            match a.core {
                Some(core) => {
                    let core = parse_core("--core", &core)?;
                    let value = poly.evaluate(&core, None)?;
                    print_int_sequence(a.n as i64, &[value], a.format)
                }
                None => print_polynomial(&poly, a.format),
            }
        }
        Command::Convolve(a) => {
            let left = ValueSeq::new(0, parse_rat_list("--a", &a.a)?);
            let right = ValueSeq::new(0, parse_rat_list("--b", &a.b)?);
            let n = a.n.unwrap_or_else(|| left.end().min(right.end()));
            let product = convolve(&left, &right, n)?;
            print_sequence(0, product.values(), a.format)
        }
        Command::Log(a) => {
            let (core, seq, n) = operator_input(&a)?;
            let out = iso_log(&core, &seq, n)?;
            print_sequence(1, out.values(), a.format)
        }
        Command::Exp(a) => {
            let (core, seq, n) = operator_input(&a)?;
            let out = iso_exp(&core, &seq, n)?;
            print_sequence(1, out.values(), a.format)
        }
        Command::Trig(a) => {
            let core = parse_core("--core", &a.core)?;
            let pair = isotrig(&core, a.n)?;
            match a.format {
                Format::Plain | Format::Csv => {
                    if a.format == Format::Csv {
                        println!("n,sine,cosine");
                    }
                    for n in 0..=a.n {
                        let (s, c) = (pair.sine.get(n), pair.cosine.get(n));
                        match a.format {
                            Format::Plain => println!("{n}\t{}\t{}", render_rat(s), render_rat(c)),
                            _ => println!("{n},{},{}", render_rat(s), render_rat(c)),
                        }
                    }
                    Ok(0)
                }
                Format::Json => {
                    let mut m = Map::new();
                    m.insert(
                        "sine".into(),
                        Value::Array(pair.sine.values().iter().map(json_rat).collect()),
                    );
                    m.insert(
                        "cosine".into(),
                        Value::Array(pair.cosine.values().iter().map(json_rat).collect()),
                    );
                    m.insert("start".into(), json!(0));
                    Ok(emit_json(m))
                }
            }
        }
        Command::CoreProduct(a) => {
            no_csv(a.format, "a core")?;
            let left = parse_core("--a", &a.a)?;
            let right = parse_core("--b", &a.b)?;
            let product = core_product(&left, &right)?;
            let coeffs: Vec<String> = product.coeffs().iter().map(|t| t.to_string()).collect();
            match a.format {
                Format::Plain => {
                    println!("{}", coeffs.join(","));
                    Ok(0)
                }
                Format::Json => {
                    let mut m = Map::new();
                    m.insert(
                        "core".into(),
                        Value::Array(product.coeffs().iter().map(json_int).collect()),
                    );
                    Ok(emit_json(m))
                }
                Format::Csv => unreachable!(),
            }
        }
        Command::Fit(a) => {
            no_csv(a.format, "a fit report")?;
            let (seq, inferred) = fit_input(&a)?;
            let max_k = match a.max_k {
                Some(m) => m,
                None => seq.len().saturating_sub(2).clamp(1, 8),
            };
            let fit = match a.mode {
                Mode::F => fit_core_f(&seq, max_k)?,
                Mode::G => fit_core_g(&seq, max_k)?,
            };
            print_fit(&fit, a.mode, inferred, a.format)
        }
        Command::Family(a) => run_family(a),
        Command::Period(a) => {
            no_csv(a.format, "a period report")?;
            let core = parse_core("--core", &a.core)?;
            let kind = match a.kind {
                Mode::F => SeqKind::AllOnes,
                Mode::G => SeqKind::Identity,
            };
            let report = period_mod(&core, a.prime, kind)?;
            match a.format {
                Format::Json => {
                    let mut m = Map::new();
                    m.insert("p".into(), json!(report.p));
                    m.insert(
                        "kind".into(),
                        json!(match a.kind {
                            Mode::F => "f",
                            Mode::G => "g",
                        }),
                    );
                    m.insert("period".into(), json!(report.period));
                    m.insert("preperiod".into(), json!(report.preperiod));
                    m.insert("degenerate".into(), json!(report.degenerate));
                    Ok(emit_json(m))
                }
                _ => {
                    println!("p\t{}", report.p);
                    println!("period\t{}", report.period);
                    println!("preperiod\t{}", report.preperiod);
                    println!("degenerate\t{}", report.degenerate);
                    Ok(0)
                }
            }
        }
        Command::Ramify(a) => {
            no_csv(a.format, "a ramification report")?;
            let core = parse_core("--core", &a.core)?;
            let report = ramification_check(&core, a.prime)?;
            match a.format {
                Format::Json => {
                    let mut m = Map::new();
                    m.insert("p".into(), json!(report.p));
                    m.insert("delta".into(), json_int(&report.delta));
                    m.insert("divides".into(), json!(report.divides));
                    m.insert("f_period".into(), json!(report.f_period.period));
                    m.insert("g_period".into(), json!(report.g_period.period));
                    m.insert("agree".into(), json!(report.agree));
                    Ok(emit_json(m))
                }
                _ => {
                    println!("p\t{}", report.p);
                    println!("delta\t{}", report.delta);
                    println!("divides\t{}", report.divides);
                    println!("f_period\t{}", report.f_period.period);
                    println!("g_period\t{}", report.g_period.period);
                    println!("agree\t{}", report.agree);
                    Ok(0)
                }
            }
        }
        Command::Identities(a) => {
            let results = run_identity_suite(a.depth);
            let mut first_bad: Option<&str> = None;
            for r in &results {
                let tag = if r.ok { "ok  " } else { "FAIL" };
                println!("{tag} {}: {}", r.name, r.detail);
                if !r.ok && first_bad.is_none() {
                    first_bad = Some(r.name);
                }
            }
            match first_bad {
                None => Ok(0),
                Some(name) => {
                    eprintln!("first violated identity: {name}");
                    Ok(1)
                }
            }
        }
    }
}

fn operator_input(a: &OperatorArgs) -> Result<(Core, ValueSeq, usize), Failure> {
    if a.start > 1 {
        return Err(usage("--start must be 0 or 1"));
    }
    let core = parse_core("--core", &a.core)?;
    let values = parse_rat_list("--values", &a.values)?;
    let seq = ValueSeq::new(a.start, values);
    let n = a.n.unwrap_or_else(|| seq.end());
    if n < 1 {
        return Err(usage("--n must be at least 1"));
    }
    Ok((core, seq, n))
}

fn fit_input(a: &FitArgs) -> Result<(ValueSeq, Option<i64>), Failure> {
    let start = match a.mode {
        Mode::F => 0,
        Mode::G => 1,
    };
    match (&a.values, &a.bfile) {
        (Some(values), None) => {
            let values = parse_rat_list("--values", values)?;
            Ok((ValueSeq::new(start, values), None))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("--bfile: cannot read {path}: {e}")))?;
            let parsed = parse_bfile(&text)?;
            let offset = parsed.offset;
            let seq = parsed.value_seq()?;
            if seq.start() != start {
                return Err(Failure::Domain(format!(
                    "b-file starts at {} but the {} fit needs a run starting at {start}",
                    offset,
                    match a.mode {
                        Mode::F => "all-ones",
                        Mode::G => "identity-weight",
                    }
                )));
            }
            Ok((seq, Some(offset)))
        }
        (None, None) => Err(usage("one of --values or --bfile is required")),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn print_fit(fit: &FitResult, mode: Mode, offset: Option<i64>, format: Format) -> RunResult {
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert(
                "mode".into(),
                json!(match mode {
                    Mode::F => "f",
                    Mode::G => "g",
                }),
            );
            m.insert(
                "core".into(),
                Value::Array(fit.coeffs.iter().map(json_rat).collect()),
            );
            m.insert("terminating".into(), json!(fit.terminating));
            m.insert("k".into(), fit.k.map_or(Value::Null, |k| json!(k)));
            m.insert("verified_length".into(), json!(fit.verified_length));
            if let Some(offset) = offset {
                m.insert("offset".into(), json!(offset));
            }
            Ok(emit_json(m))
        }
        _ => {
            let coeffs: Vec<String> = fit.coeffs.iter().map(render_rat).collect();
            println!("core\t{}", coeffs.join(","));
            println!("terminating\t{}", fit.terminating);
            if let Some(k) = fit.k {
                println!("k\t{k}");
            }
            println!("verified_length\t{}", fit.verified_length);
            Ok(0)
        }
    }
}

fn run_family(a: FamilyArgs) -> RunResult {
    let Some(name) = a.name else {
        no_csv(a.format, "the name listing")?;
        match a.format {
            Format::Json => {
                let mut m = Map::new();
                m.insert(
                    "families".into(),
                    Value::Array(FAMILY_NAMES.iter().map(|n| json!(n)).collect()),
                );
                return Ok(emit_json(m));
            }
            _ => {
                for n in FAMILY_NAMES {
                    println!("{n}");
                }
                return Ok(0);
            }
        }
    };
    let params = FamilyParams {
        p: a.p,
        k: a.k,
        x: a.x,
        y: a.y,
    };
    let entry = family(&name, &params, a.n)?;
    let (start, values) = entry.headline();
    match a.format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("name".into(), json!(entry.name));
            m.insert(
                "params".into(),
                Value::Object(
                    entry
                        .params
                        .iter()
                        .map(|(k, v)| ((*k).into(), json!(v)))
                        .collect(),
                ),
            );
            m.insert(
                "core".into(),
                Value::Array(entry.core.coeffs().iter().map(json_int).collect()),
            );
            m.insert(
                "core_kind".into(),
                json!(match entry.core.kind() {
                    CoreKind::Finite => "finite",
                    CoreKind::TruncatedSeries => "series-prefix",
                }),
            );
            m.insert(
                "kind".into(),
                json!(match entry.kind {
                    SeqKind::AllOnes => "f",
                    SeqKind::Identity => "g",
                }),
            );
            m.insert("start".into(), json!(start));
            m.insert(
                "values".into(),
                Value::Array(values.iter().map(json_int).collect()),
            );
            m.insert(
                "g0".into(),
                entry.g0.as_ref().map_or(Value::Null, json_int),
            );
            Ok(emit_json(m))
        }
        format => {
            let coeffs: Vec<String> = entry.core.coeffs().iter().map(|t| t.to_string()).collect();
            let kind_label = match entry.core.kind() {
                CoreKind::Finite => "core",
                CoreKind::TruncatedSeries => "core-prefix",
            };
            if format == Format::Csv {
                println!("n,value");
            } else {
                println!("{kind_label}\t{}", coeffs.join(","));
                if let Some(g0) = &entry.g0 {
                    println!("g0\t{g0}");
                }
            }
            for (i, v) in values.iter().enumerate() {
                let n = start + i;
                match format {
                    Format::Csv => println!("{n},{v}"),
                    _ => println!("{n}\t{v}"),
                }
            }
            Ok(0)
        }
    }
}

fn print_numeric_window(w: &MatrixWindow<Rat>, format: Format) -> RunResult {
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("lo".into(), json!(w.lo()));
            m.insert("hi".into(), json!(w.hi()));
            m.insert(
                "rows".into(),
                Value::Array(
                    w.rows()
                        .map(|(_, row)| Value::Array(row.iter().map(json_rat).collect()))
                        .collect(),
                ),
            );
            Ok(emit_json(m))
        }
        _ => {
            for (n, row) in w.rows() {
                let cells: Vec<String> = row.iter().map(render_rat).collect();
                println!("{n}\t{}", cells.join("\t"));
            }
            Ok(0)
        }
    }
}

fn print_symbolic_window(w: &MatrixWindow<isobaric::IsobaricPoly>, format: Format) -> RunResult {
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("lo".into(), json!(w.lo()));
            m.insert("hi".into(), json!(w.hi()));
            m.insert(
                "rows".into(),
                Value::Array(
                    w.rows()
                        .map(|(_, row)| {
                            Value::Array(row.iter().map(|p| json!(p.to_string())).collect())
                        })
                        .collect(),
                ),
            );
            Ok(emit_json(m))
        }
        _ => {
            for (n, row) in w.rows() {
                let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
                println!("{n}\t{}", cells.join("\t"));
            }
            Ok(0)
        }
    }
}
