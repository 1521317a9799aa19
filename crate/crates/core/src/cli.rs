//! The `mzv` command-line front end.
//!
//! Exit codes: 0 success, 1 internal assertion failure, 2 malformed input,
//! 3 verification failures. Every number in the output is an exact "p/q".

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::chenint::{
    bir_factorize, chen_character, chen_rational, verify_shuffle_cont, ChenError, ChenWord,
};
use crate::emsum::{AffineExponent, Engine, EngineError};
use crate::exactnum::{LaurentSeries, Poly, Rational};
use crate::mzv::{self, CheckReport, MzvError, Variant, ZetaArgs};
use crate::words::Word;

#[derive(Parser, Debug)]
#[command(
    name = "mzv",
    version,
    about = "Renormalised multiple zeta values at nonpositive integers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Value of zeta(-a_1, ..., -a_k; v)
    Zeta(ZetaCmd),
    /// Table of zeta(-a, -b) for 0 <= a, b <= max
    Table(TableCmd),
    /// Higher-dimensional analog zeta_n
    Hdim(HdimCmd),
    /// Cut-off Chen integral of t^(-s_1 - z) ⊗ ... ⊗ t^(-s_k - z)
    Chen(ChenCmd),
    /// Run identity checks
    Verify(VerifyCmd),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Strict,
    Weak,
    Alt,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Strict => Variant::Strict,
            VariantArg::Weak => Variant::Weak,
            VariantArg::Alt => Variant::Alt,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Stuffle,
    Hurwitz,
    Table,
    ShuffleCont,
    Engine,
    All,
}

#[derive(Args, Debug)]
pub struct Limits {
    /// Largest accepted depth
    #[arg(long, default_value_t = 6)]
    pub depth_limit: usize,
    /// Largest accepted weight a_1 + ... + a_k
    #[arg(long, default_value_t = 24)]
    pub weight_limit: i64,
}

#[derive(Args, Debug)]
pub struct ZetaCmd {
    /// Exponents a_1,...,a_k (the value is at -a_1, ..., -a_k)
    #[arg(short = 'a', long = "args", value_parser = parse_word, allow_hyphen_values = true)]
    pub a: Word,
    /// Hurwitz shift v > -1
    #[arg(long, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    pub v: Rational,
    #[arg(long, value_enum, default_value_t = VariantArg::Strict)]
    pub variant: VariantArg,
    /// Also print the value as a polynomial in v
    #[arg(long)]
    pub poly_v: bool,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    #[command(flatten)]
    pub limits: Limits,
}

#[derive(Args, Debug)]
pub struct TableCmd {
    #[arg(long, default_value_t = 6)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
pub struct HdimCmd {
    #[arg(long)]
    pub dim: u32,
    #[arg(short = 'a', long = "args", value_parser = parse_word, allow_hyphen_values = true)]
    pub a: Word,
    #[arg(long, default_value = "0", value_parser = parse_rational, allow_hyphen_values = true)]
    pub v: Rational,
    #[arg(long, value_enum, default_value_t = VariantArg::Strict)]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    /// Largest accepted dimension
    #[arg(long, default_value_t = 5)]
    pub dim_limit: u32,
    #[command(flatten)]
    pub limits: Limits,
}

#[derive(Args, Debug)]
pub struct ChenCmd {
    /// Exponents s_1,...,s_k >= 1
    #[arg(long, value_parser = parse_word)]
    pub word: Word,
    /// Highest power of z kept in the Laurent window (default: the depth)
    #[arg(long)]
    pub laurent_order: Option<i64>,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    #[arg(long, default_value_t = 6)]
    pub depth_limit: usize,
}

#[derive(Args, Debug)]
pub struct VerifyCmd {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Total weight bound for the stuffle suite
    #[arg(long, default_value_t = 8)]
    pub max_weight: i64,
    /// Restrict v-dependent suites to this shift
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub v: Option<Rational>,
    /// Random exponent lists in the engine suite
    #[arg(long, default_value_t = 200)]
    pub engine_cases: usize,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    /// Include the wall time in JSON output
    #[arg(long)]
    pub timing: bool,
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse::<Word>()
        .map_err(|e| format!("expected comma-separated integers: {e}"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    /// Exit code 2.
    Input(String),
    /// Exit code 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<MzvError> for CliError {
    fn from(e: MzvError) -> Self {
        match e {
            MzvError::InvalidArgs(_) | MzvError::Engine(EngineError::BadShift(_)) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<ChenError> for CliError {
    fn from(e: ChenError) -> Self {
        match e {
            ChenError::InvalidSymbol(_) => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let msg = match &e {
                CliError::Input(m) => format!("error: {m}"),
                CliError::Internal(m) => format!("internal error: {m}"),
            };
            let _ = writeln!(err, "{msg}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Zeta(c) => cmd_zeta(&c, out).map(|_| 0),
        Command::Table(c) => cmd_table(&c, out).map(|_| 0),
        Command::Hdim(c) => cmd_hdim(&c, out).map(|_| 0),
        Command::Chen(c) => cmd_chen(&c, out).map(|_| 0),
        Command::Verify(c) => cmd_verify(&c, out, err),
    }
}

fn check_args(a: &Word, limits: &Limits) -> Result<Vec<i64>, CliError> {
    let vals = a.values();
    if vals.is_empty() {
        return Err(CliError::Input("at least one argument is required".into()));
    }
    if let Some(x) = vals.iter().find(|&&x| x < 0) {
        return Err(CliError::Input(format!(
            "exponent {x} is negative; pass a_i >= 0 for zeta(-a_i)"
        )));
    }
    if vals.len() > limits.depth_limit {
        return Err(CliError::Input(format!(
            "depth {} exceeds --depth-limit {}",
            vals.len(),
            limits.depth_limit
        )));
    }
    let w: i64 = vals.iter().sum();
    if w > limits.weight_limit {
        return Err(CliError::Input(format!(
            "weight {w} exceeds --weight-limit {}",
            limits.weight_limit
        )));
    }
    Ok(vals)
}

fn check_v(v: &Rational) -> Result<(), CliError> {
    if v <= &-Rational::one() {
        return Err(CliError::Input(format!("v = {v} must exceed -1")));
    }
    Ok(())
}

fn show_args(a: &[i64]) -> String {
    a.iter()
        .map(|x| (-x).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

#[derive(Serialize)]
struct ZetaJson<'a> {
    args: &'a [i64],
    v: &'a Rational,
    variant: Variant,
    value: &'a Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly_v: Option<Vec<String>>,
}

pub fn cmd_zeta(c: &ZetaCmd, out: &mut dyn Write) -> Result<(), CliError> {
    let a = check_args(&c.a, &c.limits)?;
    check_v(&c.v)?;
    let args = ZetaArgs::new(a.clone(), c.v.clone(), c.variant.into());
    let val = mzv::zeta(&args, c.poly_v)?;
    match c.format {
        OutFormat::Json => {
            let j = ZetaJson {
                args: &a,
                v: &c.v,
                variant: args.variant,
                value: &val.value,
                poly_v: val.as_poly_in_v.as_ref().map(poly_strings),
            };
            writeln!(out, "{}", serde_json::to_string(&j).expect("serializable"))?;
        }
        OutFormat::Text => {
            writeln!(
                out,
                "zeta({}; v={}) [{}] = {}",
                show_args(&a),
                c.v,
                args.variant,
                val.value
            )?;
            if let Some(p) = &val.as_poly_in_v {
                writeln!(
                    out,
                    "as polynomial in v: {}",
                    crate::exactnum::PolyDisplay(p, "v")
                )?;
            }
        }
    }
    Ok(())
}

pub fn cmd_table(c: &TableCmd, out: &mut dyn Write) -> Result<(), CliError> {
    if c.max > 12 {
        return Err(CliError::Input(format!("--max {} exceeds 12", c.max)));
    }
    let t = mzv::zeta_table(c.max)?;
    write!(out, "{}", render_table(&t, c.format))?;
    Ok(())
}

/// `t[b][a]` rendered with columns `a` and rows `b`.
pub fn render_table(t: &[Vec<Rational>], format: TableFormat) -> String {
    let n = t.len();
    let mut s = String::new();
    match format {
        TableFormat::Csv => {
            s.push_str("b\\a");
            for a in 0..n {
                s.push_str(&format!(",{a}"));
            }
            s.push('\n');
            for (b, row) in t.iter().enumerate() {
                s.push_str(&b.to_string());
                for x in row {
                    s.push_str(&format!(",{x}"));
                }
                s.push('\n');
            }
        }
        TableFormat::Json => {
            let rows: Vec<Vec<String>> = t
                .iter()
                .map(|r| r.iter().map(Rational::to_string).collect())
                .collect();
            s = serde_json::to_string(&json!({ "max": n - 1, "rows_b_cols_a": rows }))
                .expect("serializable");
            s.push('\n');
        }
        TableFormat::Latex => {
            s.push_str(&format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(n)));
            s.push_str("\\zeta(-a,-b)");
            for a in 0..n {
                s.push_str(&format!(" & a={a}"));
            }
            s.push_str(" \\\\ \\hline\n");
            for (b, row) in t.iter().enumerate() {
                s.push_str(&format!("b={b}"));
                for x in row {
                    s.push_str(" & ");
                    s.push_str(&latex_frac(x));
                }
                s.push_str(" \\\\\n");
            }
            s.push_str("\\end{array}\n");
        }
    }
    s
}

fn latex_frac(x: &Rational) -> String {
    if x.is_integer() {
        return x.to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", x.numer().magnitude(), x.denom())
}

pub fn cmd_hdim(c: &HdimCmd, out: &mut dyn Write) -> Result<(), CliError> {
    if c.dim == 0 || c.dim > c.dim_limit {
        return Err(CliError::Input(format!(
            "--dim must lie in 1..={}",
            c.dim_limit
        )));
    }
    let a = check_args(&c.a, &c.limits)?;
    check_v(&c.v)?;
    let args = ZetaArgs::new(a.clone(), c.v.clone(), c.variant.into());
    let val = mzv::hdim_zeta(c.dim, &args)?;
    match c.format {
        OutFormat::Json => {
            let j = json!({
                "dim": c.dim,
                "args": a,
                "v": c.v,
                "variant": args.variant,
                "value": val.value,
            });
            writeln!(out, "{j}")?;
        }
        OutFormat::Text => {
            writeln!(
                out,
                "zeta_{}({}; v={}) [{}] = {}",
                c.dim,
                show_args(&a),
                c.v,
                args.variant,
                val.value
            )?;
        }
    }
    Ok(())
}

pub fn cmd_chen(c: &ChenCmd, out: &mut dyn Write) -> Result<(), CliError> {
    let s = c.word.values();
    if s.is_empty() {
        return Err(CliError::Input("--word needs at least one exponent".into()));
    }
    if let Some(x) = s.iter().find(|&&x| x < 1) {
        return Err(CliError::Input(format!(
            "exponent {x} must be a positive integer"
        )));
    }
    if s.len() > c.depth_limit {
        return Err(CliError::Input(format!(
            "depth {} exceeds --depth-limit {}",
            s.len(),
            c.depth_limit
        )));
    }
    let order = c.laurent_order.unwrap_or(s.len() as i64);
    let word = ChenWord::from_exponents(&s);
    let phi = chen_rational(&word);
    let series = chen_character(&word, order);
    let renorm = crate::chenint::zeta_tilde_renorm(&s)?;
    let character = crate::chenint::sigma_character(s.len() as i64);
    let (minus, _) = bir_factorize(&character, &s)?;
    match c.format {
        OutFormat::Json => {
            let j = json!({
                "word": s,
                "phi": phi.to_string(),
                "laurent": laurent_json(&series),
                "counterterm": laurent_json(&minus),
                "renormalised": renorm,
            });
            writeln!(out, "{j}")?;
        }
        OutFormat::Text => {
            writeln!(out, "phi(z) = {phi}")?;
            writeln!(out, "laurent = {series}")?;
            writeln!(out, "counterterm = {minus}")?;
            writeln!(out, "renormalised = {renorm}")?;
        }
    }
    Ok(())
}

fn laurent_json(s: &LaurentSeries) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = s
        .terms()
        .map(|(e, c)| json!({ "exponent": e, "coeff": c }))
        .collect();
    if s.is_exact() {
        json!({ "terms": terms, "exact": true })
    } else {
        json!({ "terms": terms, "order": s.order() })
    }
}

#[derive(Serialize)]
struct SuiteReport {
    suite: String,
    cases: usize,
    failures: Vec<mzv::Failure>,
    parts: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

/// The `v`-set a suite runs at, unless one shift is forced.
fn shifts(forced: &Option<Rational>, default: &[(i64, i64)]) -> Vec<Rational> {
    match forced {
        Some(v) => vec![v.clone()],
        None => default.iter().map(|&(p, q)| Rational::frac(p, q)).collect(),
    }
}

pub fn stuffle_suite(max_weight: i64, v: &Option<Rational>) -> CheckReport {
    let mut rep = CheckReport::new("stuffle");
    for v in shifts(v, &[(0, 1), (1, 2)]) {
        for variant in [Variant::Strict, Variant::Weak] {
            rep.merge(mzv::verify_stuffle(max_weight, &v, variant));
        }
    }
    rep
}

pub fn hurwitz_suite(v: &Option<Rational>) -> CheckReport {
    let mut rep = CheckReport::new("hurwitz");
    let lists = mzv::words_up_to(9, 3);
    for v in shifts(v, &[(0, 1), (1, 2), (3, 4)]) {
        for w in &lists {
            let a = w.values();
            if a.iter().all(|&x| x <= 3) {
                rep.merge(mzv::verify_hurwitz_identities(&a, &v));
            }
        }
    }
    rep
}

/// J-stability on seeded random exponent lists, and vanishing residues on
/// every list with nonnegative exponents up to depth 3.
pub fn engine_suite(cases: usize, seed: u64) -> CheckReport {
    let mut rep = CheckReport::new("engine");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = Engine::new();
    let plus1 = Engine::with_j_offset(1);
    let plus2 = Engine::with_j_offset(2);
    let shifts = [
        Rational::zero(),
        Rational::frac(1, 3),
        Rational::frac(1, 2),
        Rational::from(2),
    ];
    for _ in 0..cases {
        let depth = rng.gen_range(1..=4usize);
        let exps: Vec<AffineExponent> = (0..depth)
            .map(|i| {
                let lo = if i + 1 == depth { -4 } else { 0 };
                AffineExponent::new(
                    rng.gen_range(lo..=4),
                    Rational::from(rng.gen_range(1..=3i64)),
                )
            })
            .collect();
        let v = &shifts[rng.gen_range(0..shifts.len())];
        let show = |d: Result<crate::emsum::LaurentData, EngineError>| {
            d.map(|d| format!("res {} fp {}", d.res, d.fp))
        };
        let reference = show(base.nested_fp_res(&exps, v));
        rep.check(
            format!("J+1 {exps:?} v={v}"),
            show(plus1.nested_fp_res(&exps, v)),
            reference.clone(),
        );
        rep.check(
            format!("J+2 {exps:?} v={v}"),
            show(plus2.nested_fp_res(&exps, v)),
            reference,
        );
    }
    for v in [Rational::zero(), Rational::frac(1, 3)] {
        for depth in 1..=3usize {
            let mut idx = vec![0i64; 2 * depth];
            loop {
                let exps: Vec<AffineExponent> = (0..depth)
                    .map(|i| AffineExponent::new(idx[2 * i], Rational::from(idx[2 * i + 1] + 1)))
                    .collect();
                let res = base.nested_fp_res(&exps, &v).map(|d| d.res);
                rep.check(format!("residue {exps:?} v={v}"), res, Ok(Rational::zero()));
                let mut p = 0;
                while p < idx.len() {
                    idx[p] += 1;
                    let cap = if p % 2 == 0 { 4 } else { 2 };
                    if idx[p] <= cap {
                        break;
                    }
                    idx[p] = 0;
                    p += 1;
                }
                if p == idx.len() {
                    break;
                }
            }
        }
    }
    rep
}

pub fn run_suite(
    suite: Suite,
    max_weight: i64,
    v: &Option<Rational>,
    engine_cases: usize,
    seed: u64,
) -> Vec<CheckReport> {
    match suite {
        Suite::Stuffle => vec![stuffle_suite(max_weight, v)],
        Suite::Hurwitz => vec![hurwitz_suite(v)],
        Suite::Table => vec![mzv::verify_table()],
        Suite::ShuffleCont => vec![verify_shuffle_cont(3, 4, 3)],
        Suite::Engine => vec![engine_suite(engine_cases, seed)],
        Suite::All => [
            Suite::Table,
            Suite::Engine,
            Suite::Stuffle,
            Suite::Hurwitz,
            Suite::ShuffleCont,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, max_weight, v, engine_cases, seed))
        .collect(),
    }
}

pub fn cmd_verify(
    c: &VerifyCmd,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if let Some(v) = &c.v {
        check_v(v)?;
    }
    let start = Instant::now();
    let parts = run_suite(c.suite, c.max_weight, &c.v, c.engine_cases, c.seed);
    let elapsed = start.elapsed();
    let suite_name = format!("{:?}", c.suite).to_lowercase();
    let cases = parts.iter().map(|p| p.cases).sum();
    let failures: Vec<mzv::Failure> = parts
        .iter()
        .flat_map(|p| p.failures.iter().cloned())
        .collect();
    let passed = failures.is_empty();
    match c.format {
        OutFormat::Json => {
            let r = SuiteReport {
                suite: suite_name,
                cases,
                failures,
                parts: parts.clone(),
                wall_time_ms: c.timing.then_some(elapsed.as_millis()),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&r).expect("serializable")
            )?;
        }
        OutFormat::Text => {
            for p in &parts {
                let status = if p.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {}: {} cases, {} failures",
                    p.suite,
                    p.cases,
                    p.failures.len()
                )?;
                for f in &p.failures {
                    writeln!(out, "  {}: {} != {}", f.case, f.lhs, f.rhs)?;
                }
            }
            let status = if passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {suite_name}: {cases} cases, {} failures",
                failures.len()
            )?;
        }
    }
    writeln!(err, "wall time: {:.3} s", elapsed.as_secs_f64())?;
    Ok(if passed { 0 } else { 3 })
}
