//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches a subcommand and returns the process exit status:
//! 0 on success, 1 when a verification fails, 2 on a usage error. Text output is the default;
//! `--json` prints one JSON object per line instead.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use crate::clock::Stopwatch;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bound::self_dual_bound;
use crate::circulant::{verify_algebra_identities, MaskVector};
use crate::code::LinearCode;
use crate::constructions::{
    binary_family, quaternary_family, reproduce_tables, search_self_dual, self_duality_criterion,
    ConstructionKind, ConstructionRequest,
};
use crate::cyclotomy::{
    cyclotomic_number_closed_form, mixed_residue_parities, CyclotomicContext, ResidueClass,
};
use crate::distance::{Budget, DistanceMethod};
use crate::gf::Field;
use crate::matrix::GfMatrix;
use crate::report::CodeReport;
use crate::Error;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "CYCLOCODE_THREADS";

/// Searches compute distances by default only up to this length.
pub const SEARCH_DISTANCE_MAX_LENGTH: usize = 80;

#[derive(Parser, Debug)]
#[command(
    name = "cyclocode",
    version,
    about = "Double circulant self-dual codes from generalized cyclotomy of order two"
)]
pub struct Cli {
    /// Print one JSON object per result line.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the residue partition R, P, Q, C0, C1 of Z_pq.
    Classes(PairArgs),
    /// Compare directly counted cyclotomic numbers with their closed forms.
    Numbers(PairArgs),
    /// Check the multiplication table of the difference-class matrices.
    Identities {
        #[command(flatten)]
        pair: PairArgs,
        /// Field order (characteristic 2 only).
        #[arg(long, default_value_t = 2)]
        field: u32,
    },
    /// Emit the generator matrix of a pure or bordered code.
    Build(SourceArgs),
    /// Decide self-duality and report the coefficient criteria.
    Check(SourceArgs),
    /// Compute the minimum distance with a certificate codeword.
    Mindist {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Upper bound on the minimum distance of a self-dual code.
    Bound {
        /// Field order.
        #[arg(long)]
        field: u32,
        /// Code length (even).
        #[arg(long)]
        n: usize,
    },
    /// Scan every mask (and corner value) for self-dual codes.
    Search {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, value_enum, default_value_t = KindArg::Pure)]
        kind: KindArg,
        /// Attach minimum distances; defaults to on for lengths up to 80.
        #[arg(long, value_enum)]
        distance: Option<Toggle>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Build the binary (field 2) or quaternary (field 4) family for a prime pair.
    Family {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        field: u32,
    },
    /// Rebuild the reference codes and compare [N, k, d] with the published values.
    ReproduceTables {
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
}

#[derive(Args, Debug)]
struct SourceArgs {
    #[arg(long, required_unless_present = "generator")]
    p: Option<u64>,
    #[arg(long, required_unless_present = "generator")]
    q: Option<u64>,
    /// Field order.
    #[arg(long, default_value_t = 2)]
    field: u32,
    #[arg(long, value_enum, default_value_t = KindArg::Pure)]
    kind: KindArg,
    /// Mask as comma-separated field tokens, e.g. 1,1,0,u+1,u.
    #[arg(long, required_unless_present = "generator")]
    m: Option<String>,
    /// Corner entry of a bordered code.
    #[arg(long)]
    alpha: Option<String>,
    /// Read the generator matrix from a file in matrix text format instead.
    #[arg(long, conflicts_with_all = ["p", "q", "m", "alpha"])]
    generator: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Maximum number of message evaluations for a distance computation.
    #[arg(long, default_value_t = 1_000_000_000)]
    budget: u64,
    /// Time limit in seconds for a distance computation.
    #[arg(long, default_value_t = 900)]
    time_limit: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_evaluations: self.budget,
            time_limit: Duration::from_secs(self.time_limit),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Pure,
    Bordered,
}

impl From<KindArg> for ConstructionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pure => ConstructionKind::Pure,
            KindArg::Bordered => ConstructionKind::Bordered,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Exhaustive,
    Infoset,
    Auto,
}

impl From<MethodArg> for DistanceMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Exhaustive => DistanceMethod::Exhaustive,
            MethodArg::Infoset => DistanceMethod::InfoSet,
            MethodArg::Auto => DistanceMethod::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Toggle {
    On,
    Off,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotSelfDual(_) | Error::NotInSpan { .. } | Error::BudgetExhausted { .. } => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
    timing: bool,
}

impl Ctx<'_> {
    fn line(&mut self, text: impl AsRef<str>) -> std::io::Result<()> {
        writeln!(self.out, "{}", text.as_ref())
    }

    fn record(&mut self, value: &impl Serialize) -> std::io::Result<()> {
        let s = serde_json::to_string(value).expect("records serialize");
        writeln!(self.out, "{s}")
    }

    fn elapsed(&self, t: Stopwatch) -> Option<u64> {
        self.timing.then(|| t.elapsed().as_millis() as u64)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Some(t),
            _ => {
                let _ = writeln!(err, "error: {THREADS_ENV} must be a positive integer, got {v:?}");
                return 2;
            }
        },
        Err(_) => None,
    };
    // buffered so the worker pool never touches the caller's writer
    let (result, buffer) = with_threads(threads, || {
        let mut buffer = Vec::new();
        let mut ctx = Ctx {
            out: &mut buffer,
            json: cli.json,
            timing: cli.timing,
        };
        (dispatch(&cli.command, &mut ctx), buffer)
    });
    if let Err(e) = out.write_all(&buffer) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match threads.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R>(_threads: Option<usize>, f: impl FnOnce() -> R) -> R {
    f()
}

fn dispatch(command: &Command, ctx: &mut Ctx<'_>) -> Outcome {
    match command {
        Command::Classes(pair) => classes(pair, ctx),
        Command::Numbers(pair) => numbers(pair, ctx),
        Command::Identities { pair, field } => identities(pair, *field, ctx),
        Command::Build(source) => build(source, ctx),
        Command::Check(source) => check(source, ctx),
        Command::Mindist {
            source,
            budget,
            method,
        } => mindist(source, budget.budget(), (*method).into(), ctx),
        Command::Bound { field, n } => bound(*field, *n, ctx),
        Command::Search {
            pair,
            field,
            kind,
            distance,
            budget,
        } => search(pair, *field, (*kind).into(), *distance, budget.budget(), ctx),
        Command::Family { pair, field } => family(pair, *field, ctx),
        Command::ReproduceTables { budget } => tables(budget.budget(), ctx),
    }
}

fn set_text(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn classes(pair: &PairArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let c = CyclotomicContext::new(pair.p, pair.q)?;
    if ctx.json {
        let mut obj = json!({
            "p": c.p(), "q": c.q(), "n": c.n(), "g": c.g(), "x": c.x(), "e": c.e(),
        });
        for class in ResidueClass::ALL {
            obj[class.to_string()] = json!(c.members(class));
        }
        ctx.record(&obj)?;
    } else {
        ctx.line(format!(
            "p={} q={} n={} g={} x={} e={}",
            c.p(),
            c.q(),
            c.n(),
            c.g(),
            c.x(),
            c.e()
        ))?;
        for class in ResidueClass::ALL {
            ctx.line(format!("{class}={}", set_text(&c.members(class))))?;
        }
    }
    Ok(true)
}

fn numbers(pair: &PairArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let c = CyclotomicContext::new(pair.p, pair.q)?;
    let direct = c.cyclotomic_numbers();
    let mut rows = Vec::new();
    let mut ok = true;
    for (idx, (i, j)) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        let closed = cyclotomic_number_closed_form(c.p(), c.q(), i, j)?;
        ok &= closed == direct[idx];
        rows.push((i, j, direct[idx], closed));
    }
    let minus_one = c.minus_one_class();
    let parity = mixed_residue_parities(c.p(), c.q()).ok();
    let parity_agrees = parity.map(|pp| {
        let d = |k: usize| (direct[k] % 2) as u8;
        d(0) == pp.diagonal && d(2) == pp.diagonal && d(3) == pp.diagonal && d(1) == pp.off_diagonal
    });
    ok &= parity_agrees.unwrap_or(true);
    if ctx.json {
        let numbers: Vec<_> = rows
            .iter()
            .map(|&(i, j, d, cf)| json!({"i": i, "j": j, "direct": d, "closed_form": cf, "agrees": d == cf}))
            .collect();
        ctx.record(&json!({
            "p": c.p(), "q": c.q(),
            "numbers": numbers,
            "minus_one": minus_one,
            "parity": parity,
            "parity_agrees": parity_agrees,
        }))?;
    } else {
        for (i, j, d, cf) in rows {
            let tag = if d == cf { "agree" } else { "MISMATCH" };
            ctx.line(format!("({i},{j}) direct={d} closed_form={cf} {tag}"))?;
        }
        ctx.line(minus_one.to_string())?;
        match (parity, parity_agrees) {
            (Some(pp), Some(agrees)) => ctx.line(format!(
                "parity from (p+q)/4 = {}: (0,0),(1,0),(1,1) = {} and (0,1) = {} mod 2 -> {}",
                pp.quarter_sum,
                pp.diagonal,
                pp.off_diagonal,
                if agrees { "agree" } else { "MISMATCH" }
            ))?,
            _ => ctx.line("parity prediction: not applicable (p = q mod 4)")?,
        }
    }
    Ok(ok)
}

fn identities(pair: &PairArgs, field: u32, ctx: &mut Ctx<'_>) -> Outcome {
    let c = CyclotomicContext::new(pair.p, pair.q)?;
    let f = Field::new(field)?;
    let report = verify_algebra_identities(&c, &f)?;
    if ctx.json {
        ctx.record(&report)?;
    } else {
        for check in &report.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            match (check.passed, check.lhs) {
                (false, Some(lhs)) => ctx.line(format!(
                    "{status} {}  (left side = {})",
                    check.name,
                    crate::circulant::DCoefficients(lhs).format(&f)
                ))?,
                (false, None) => {
                    ctx.line(format!("{status} {}  (left side outside the basis span)", check.name))?
                }
                _ => ctx.line(format!("{status} {}", check.name))?,
            }
        }
        let passed = report.checks.iter().filter(|c| c.passed).count();
        ctx.line(format!("{passed}/{} identities hold", report.checks.len()))?;
    }
    Ok(report.all_passed())
}

enum Source {
    Construction(ConstructionRequest),
    File(PathBuf),
}

fn resolve_source(args: &SourceArgs) -> Result<Source, Failure> {
    if let Some(path) = &args.generator {
        return Ok(Source::File(path.clone()));
    }
    let missing = |flag: &str| Failure::Usage(format!("--{flag} is required"));
    let p = args.p.ok_or_else(|| missing("p"))?;
    let q = args.q.ok_or_else(|| missing("q"))?;
    let field = Field::new(args.field)?;
    let mask = MaskVector::parse(&field, args.m.as_deref().ok_or_else(|| missing("m"))?)?;
    let kind: ConstructionKind = args.kind.into();
    let alpha = match (kind, &args.alpha) {
        (ConstructionKind::Pure, Some(_)) => {
            return Err(Failure::Usage("--alpha only applies to bordered codes".into()))
        }
        (ConstructionKind::Pure, None) => None,
        (ConstructionKind::Bordered, Some(a)) => Some(field.parse(a)?),
        (ConstructionKind::Bordered, None) => return Err(missing("alpha")),
    };
    Ok(Source::Construction(ConstructionRequest {
        p,
        q,
        field_order: args.field,
        kind,
        mask,
        alpha,
    }))
}

fn load(source: &Source) -> Result<LinearCode, Failure> {
    match source {
        Source::Construction(req) => Ok(req.build()?),
        Source::File(path) => {
            let text = std::fs::read_to_string(path)?;
            Ok(LinearCode::new(GfMatrix::from_text(&text)?))
        }
    }
}

fn build(args: &SourceArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let source = resolve_source(args)?;
    let code = load(&source)?;
    let g = code.generator();
    if ctx.json {
        let rows: Vec<String> = g
            .row_vecs()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| g.field().matrix_token(v))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let descriptor = match &source {
            Source::Construction(req) => Some(req.descriptor()),
            Source::File(_) => None,
        };
        ctx.record(&json!({
            "descriptor": descriptor,
            "field": g.field().order(),
            "rows": g.rows(),
            "cols": g.cols(),
            "generator": rows,
        }))?;
    } else {
        write!(ctx.out, "{}", g.to_text())?;
    }
    Ok(true)
}

fn check(args: &SourceArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let source = resolve_source(args)?;
    let code = load(&source)?;
    let self_dual = code.is_self_dual();
    let criterion = match &source {
        Source::Construction(req) => {
            let c = req.context()?;
            let f = req.field()?;
            Some((req, self_duality_criterion(&c, &f, req.kind, req.alpha, &req.mask)?))
        }
        Source::File(_) => None,
    };
    let agrees = criterion.as_ref().map(|(_, r)| r.verdict == self_dual);
    if ctx.json {
        ctx.record(&json!({
            "descriptor": criterion.as_ref().map(|(req, _)| req.descriptor()),
            "N": code.length(),
            "k": code.dimension(),
            "self_dual": self_dual,
            "criterion": criterion.as_ref().map(|(_, r)| r),
            "criterion_agrees": agrees,
        }))?;
    } else {
        if let Some((req, report)) = &criterion {
            let f = code.field();
            ctx.line(format!("code {}", req.descriptor()))?;
            ctx.line(format!("D = {}", report.coefficients.format(f)))?;
            for c in &report.conditions {
                let status = if c.passed { "ok  " } else { "FAIL" };
                ctx.line(format!("{status} {} {}", c.label, c.description))?;
            }
            if let Some(cf) = report.closed_form_agrees {
                ctx.line(format!(
                    "closed-form coefficients {}",
                    if cf { "agree" } else { "DISAGREE" }
                ))?;
            }
            ctx.line(format!("criterion verdict: {}", report.verdict))?;
        }
        ctx.line(format!(
            "[{}, {}] self-dual: {}",
            code.length(),
            code.dimension(),
            self_dual
        ))?;
        if agrees == Some(false) {
            ctx.line("criterion and direct check DISAGREE")?;
        }
    }
    Ok(self_dual && agrees.unwrap_or(true))
}

fn mindist(args: &SourceArgs, budget: Budget, method: DistanceMethod, ctx: &mut Ctx<'_>) -> Outcome {
    let source = resolve_source(args)?;
    let code = load(&source)?;
    let t = Stopwatch::start();
    let result = match code.min_distance(method, budget) {
        Ok(r) => r.clone(),
        Err(Error::BudgetExhausted {
            lower,
            upper,
            certificate,
        }) => {
            let f = code.field();
            if ctx.json {
                ctx.record(&json!({
                    "complete": false,
                    "lower": lower,
                    "upper": upper,
                    "certificate": certificate.map(|c| c.iter().map(|&v| f.token(v)).collect::<Vec<_>>()),
                }))?;
            } else {
                ctx.line(format!("budget exhausted: {lower} <= d <= {upper}"))?;
            }
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let elapsed = ctx.elapsed(t);
    let report = match &source {
        Source::Construction(req) => CodeReport::new(req, &code, Some(&result), elapsed),
        Source::File(_) => CodeReport::from_code(&code, Some(&result), elapsed),
    };
    let f = code.field();
    let cert: Vec<String> = result.certificate.iter().map(|&v| f.matrix_token(v)).collect();
    if ctx.json {
        let mut obj = serde_json::to_value(&report).expect("report serializes");
        obj["certificate"] = json!(cert.join(" "));
        ctx.record(&obj)?;
    } else {
        ctx.line(report.to_string())?;
        ctx.line(format!("certificate {}", cert.join(" ")))?;
    }
    Ok(true)
}

fn bound(field: u32, n: usize, ctx: &mut Ctx<'_>) -> Outcome {
    Field::new(field)?;
    if n == 0 || n % 2 == 1 {
        return Err(Failure::Usage(format!("length {n} must be even and positive")));
    }
    let (b, rule) = self_dual_bound(field, n);
    if ctx.json {
        ctx.record(&json!({"l": field, "N": n, "bound": b, "rule": rule.label()}))?;
    } else {
        ctx.line(format!("l={field} N={n} bound={b} rule={}", rule.label()))?;
    }
    Ok(true)
}

fn search(
    pair: &PairArgs,
    field: u32,
    kind: ConstructionKind,
    distance: Option<Toggle>,
    budget: Budget,
    ctx: &mut Ctx<'_>,
) -> Outcome {
    let c = CyclotomicContext::new(pair.p, pair.q)?;
    let f = Field::new(field)?;
    let length = 2 * c.n() as usize + if kind == ConstructionKind::Bordered { 2 } else { 0 };
    let compute = match distance {
        Some(Toggle::On) => true,
        Some(Toggle::Off) => false,
        None => length <= SEARCH_DISTANCE_MAX_LENGTH,
    };
    let mut result = search_self_dual(&c, &f, kind, compute, budget)?;
    if !ctx.timing {
        for hit in &mut result.hits {
            hit.report.elapsed_ms = None;
        }
    }
    for hit in &result.hits {
        if ctx.json {
            ctx.record(&hit.report)?;
        } else {
            ctx.line(format!("{} {}", hit.descriptor, hit.report))?;
        }
    }
    for d in &result.disagreements {
        let m = MaskVector(d.mask).format(&f);
        let a = d.alpha.map_or("-".to_string(), |a| f.token(a));
        if ctx.json {
            ctx.record(&json!({"disagreement": {"alpha": a, "m": m, "criterion": d.criterion, "direct": d.direct}}))?;
        } else {
            ctx.line(format!(
                "DISAGREE alpha={a} m=({m}) criterion={} direct={}",
                d.criterion, d.direct
            ))?;
        }
    }
    if ctx.json {
        ctx.record(&json!({
            "summary": {
                "p": result.p, "q": result.q, "l": result.l, "kind": result.kind,
                "scanned": result.scanned, "pruned": result.pruned, "hits": result.hits.len(),
                "disagreements": result.disagreements.len(), "complete": result.complete,
            }
        }))?;
    } else {
        ctx.line(format!(
            "scanned={} pruned={} hits={} disagreements={} complete={}",
            result.scanned,
            result.pruned,
            result.hits.len(),
            result.disagreements.len(),
            result.complete
        ))?;
    }
    Ok(result.disagreements.is_empty() && result.complete)
}

fn family(pair: &PairArgs, field: u32, ctx: &mut Ctx<'_>) -> Outcome {
    let codes = match field {
        2 => binary_family(pair.p, pair.q)?,
        4 => quaternary_family(pair.p, pair.q)?,
        _ => {
            return Err(Failure::Usage(format!(
                "families exist over fields 2 and 4, not {field}"
            )))
        }
    };
    for fc in &codes {
        let report = CodeReport::new(&fc.request, &fc.code, None, None);
        if ctx.json {
            ctx.record(&report)?;
        } else {
            ctx.line(format!("{} {}", fc.request.descriptor(), report))?;
        }
    }
    Ok(true)
}

fn tables(budget: Budget, ctx: &mut Ctx<'_>) -> Outcome {
    let mut report = reproduce_tables(budget)?;
    if !ctx.timing {
        for row in &mut report.rows {
            row.report.elapsed_ms = None;
        }
    }
    for row in &report.rows {
        if ctx.json {
            ctx.record(row)?;
        } else {
            let [n, k, d] = row.expected;
            let mut line = format!(
                "{} Table {}: {} {} expected [{n}, {k}, {d}] bound {}",
                if row.pass { "PASS" } else { "FAIL" },
                row.table,
                row.construction,
                row.report.parameters(),
                row.report.bound
            );
            if !row.comment.is_empty() {
                line.push_str(&format!(" ({})", row.comment));
            }
            if let Some(ms) = row.report.elapsed_ms {
                line.push_str(&format!(" {ms} ms"));
            }
            ctx.line(line)?;
        }
    }
    if ctx.json {
        ctx.record(&json!({"all_pass": report.all_pass}))?;
    } else {
        ctx.line(format!(
            "overall: {}",
            if report.all_pass { "PASS" } else { "FAIL" }
        ))?;
    }
    Ok(report.all_pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cyclocode").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn bound_subcommand() {
        let (code, out, _) = run_str(&["bound", "--field", "2", "--n", "70"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("l=2 N=70 bound=14 rule=(i)"), "{out}");
        assert_eq!(run_str(&["bound", "--field", "2", "--n", "71"]).0, 2);
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        assert_eq!(run_str(&["classes", "--p", "3", "--q", "5", "--nope"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
    }

    #[test]
    fn pure_with_alpha_rejected() {
        let (code, _, err) = run_str(&[
            "build", "--p", "3", "--q", "5", "--m", "1,0,0,0,0", "--alpha", "0",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("--alpha"));
    }

    #[test]
    fn check_reports_failure_status() {
        let (code, out, _) = run_str(&[
            "check", "--p", "5", "--q", "7", "--field", "3", "--m", "1,0,0,0,0",
        ]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL 1(a)"), "{out}");
    }
}
