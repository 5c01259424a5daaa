//! Command-line front end: corpus loading, numbering registry, the
//! verification suites and report emission.

pub mod corpus;
pub mod registry;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use goedelsim_core::loeb::fixed_point;
use goedelsim_core::numbering::translate;
use goedelsim_core::rewrite::{normal_form, provably_equal, weight_at_twos, RewriteTrace};
use goedelsim_core::syntax::{parse, SyntaxError};
use goedelsim_core::truth::Budget;
use goedelsim_core::{Code, Expr};
use serde_json::json;

use crate::corpus::{load_corpus, Corpus, CorpusError};
use crate::report::Report;
use crate::suites::Context;

#[derive(Debug, Parser)]
#[command(
    name = "goedelsim",
    version,
    about = "Numberings of arithmetical syntax and checks on their provability predicates"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Instances examined per oracle query.
    #[arg(long, global = true, default_value_t = 10_000)]
    budget: u64,
    /// Corpus file; the shipped base corpus when absent.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    /// Where to write the JSON report.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave the timestamp out of reports.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Code of an expression.
    Encode {
        #[arg(long)]
        numbering: String,
        expr: String,
    },
    /// Expression with a given code.
    Decode {
        #[arg(long)]
        numbering: String,
        code: String,
    },
    /// Carry a code from one numbering to another.
    Translate {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        code: String,
    },
    /// Rewrite a term to its AC normal form.
    Normalize { expr: String },
    /// Decide semiring-provable equality of two terms.
    DecideEq { left: String, right: String },
    /// Fragment verdict of a sentence.
    Classify { expr: String },
    /// Evaluate a code predicate.
    Predicate { name: String, code: String },
    /// Diagonal fixed point of a predicate's formula.
    FixedPoint {
        #[arg(long, default_value = "diag")]
        numbering: String,
        #[arg(long)]
        predicate: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifyCommand,
    },
    /// Run every suite and write the report.
    Report,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Injectivity, round trips, image tests and tracker diagrams.
    Simulation {
        #[arg(long)]
        numbering: Option<String>,
    },
    /// Round-trip translations between acceptable numberings.
    Equivalence { a: Option<String>, b: Option<String> },
    /// Loeb conditions, transfers and consistency forms.
    Loeb {
        #[arg(long)]
        numbering: Option<String>,
        #[arg(long)]
        predicate: Option<String>,
    },
    /// Parity, trisection and layering laws of the deviant numberings.
    Deviant,
    /// Diagonal fixed points and monotonicity.
    Diag,
    /// Rewriter against the polynomial oracle, weights and critical pairs.
    Rewriter,
    /// Every suite.
    All,
}

/// Sentences larger than this are shown as a formula and a numeral.
const PRINT_LIMIT: u128 = 10_000;

/// Marks errors caused by malformed input rather than failed checks.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

fn expr(text: &str) -> Result<Expr> {
    parse(text).map_err(anyhow::Error::new)
}

fn code(text: &str) -> Result<Code> {
    text.trim().parse::<Code>().map_err(|_| usage(format!("not a natural number: {text:?}")))
}

fn is_usage(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.is::<UsageError>()
            || c.is::<SyntaxError>()
            || matches!(c.downcast_ref::<CorpusError>(), Some(CorpusError::Parse { .. }))
    })
}

struct Out<'a> {
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn line(&mut self, s: impl std::fmt::Display) -> Result<()> {
        writeln!(self.w, "{s}")?;
        Ok(())
    }
}

fn trace_json(t: &RewriteTrace) -> serde_json::Value {
    let steps: Vec<_> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "rule": s.rule.label(),
                "position": s.position,
                "before": s.before.to_string(),
                "after": s.after.to_string(),
                "weight_before": s.weight_before.display_xyz(),
                "weight_after": s.weight_after.display_xyz(),
                "weight_before_at_twos": weight_at_twos(&s.weight_before).to_string(),
                "weight_after_at_twos": weight_at_twos(&s.weight_after).to_string(),
            })
        })
        .collect();
    json!(steps)
}

fn trace_text(out: &mut Out<'_>, t: &RewriteTrace) -> Result<()> {
    for (i, s) in t.steps.iter().enumerate() {
        out.line(format_args!(
            "  {:>3}. ({}) at {:?}: {} => {}   weight {} > {}",
            i + 1,
            s.rule.label(),
            s.position,
            s.before,
            s.after,
            weight_at_twos(&s.weight_before),
            weight_at_twos(&s.weight_after)
        ))?;
    }
    Ok(())
}

fn load(cli: &Cli) -> Result<Corpus> {
    match &cli.corpus {
        Some(p) => Ok(load_corpus(p)?),
        None => Ok(Corpus::base()),
    }
}

fn context(cli: &Cli) -> Result<Context> {
    Ok(Context::new(load(cli)?, Budget::new(cli.budget, Budget::default().max_depth)))
}

fn finish_report(cli: &Cli, out: &mut Out<'_>, suite: &str, checks: Vec<report::Check>) -> Result<bool> {
    let r = Report::new(suite, checks, !cli.no_timestamp);
    if let Some(p) = &cli.out {
        r.write(p)?;
    }
    if cli.json {
        out.w.write_all(r.to_json().as_bytes())?;
    } else {
        out.w.write_all(r.render().as_bytes())?;
    }
    Ok(!r.failed())
}

/// Executes a parsed command. `Ok(false)` means a check failed.
fn execute(cli: &Cli, out: &mut Out<'_>) -> Result<bool> {
    match &cli.command {
        Command::Encode { numbering, expr: text } => {
            let ctx = context(cli)?;
            let c = ctx.registry.numbering(numbering).map_err(|e| usage(e.to_string()))?.encode(&expr(text)?)?;
            out.line(c)?;
        }
        Command::Decode { numbering, code: text } => {
            let ctx = context(cli)?;
            let e = ctx.registry.numbering(numbering).map_err(|e| usage(e.to_string()))?.decode(&code(text)?)?;
            out.line(e)?;
        }
        Command::Translate { from, to, code: text } => {
            let ctx = context(cli)?;
            let a = ctx.registry.numbering(from).map_err(|e| usage(e.to_string()))?;
            let b = ctx.registry.numbering(to).map_err(|e| usage(e.to_string()))?;
            out.line(translate(a.as_ref(), b.as_ref(), &code(text)?)?)?;
        }
        Command::Normalize { expr: text } => {
            let (nf, trace) = normal_form(&expr(text)?)?;
            if cli.json {
                out.line(serde_json::to_string_pretty(
                    &json!({"normal_form": nf.to_string(), "steps": trace_json(&trace)}),
                )?)?;
            } else {
                out.line(format_args!("normal-form: {nf}"))?;
                trace_text(out, &trace)?;
            }
        }
        Command::DecideEq { left, right } => {
            let (s, t) = (expr(left)?, expr(right)?);
            let eq = provably_equal(&s, &t)?;
            let (ns, ts) = normal_form(&s)?;
            let (nt, tt) = normal_form(&t)?;
            if cli.json {
                out.line(serde_json::to_string_pretty(&json!({
                    "provably_equal": eq,
                    "left": {"normal_form": ns.to_string(), "steps": trace_json(&ts)},
                    "right": {"normal_form": nt.to_string(), "steps": trace_json(&tt)},
                }))?)?;
            } else {
                out.line(format_args!("provably-equal: {eq}"))?;
                out.line(format_args!("left normal-form: {ns}"))?;
                trace_text(out, &ts)?;
                out.line(format_args!("right normal-form: {nt}"))?;
                trace_text(out, &tt)?;
            }
        }
        Command::Classify { expr: text } => {
            let ctx = context(cli)?;
            let e = expr(text)?;
            let c = ctx.oracle().classify(&e);
            if cli.json {
                let witness = c.witness.as_ref().map(|w| {
                    w.iter()
                        .map(|(x, v)| json!({"variable": x.to_string(), "value": v.to_string()}))
                        .collect::<Vec<_>>()
                });
                out.line(serde_json::to_string_pretty(&json!({
                    "verdict": c.verdict.to_string(),
                    "budget_used": c.budget_used,
                    "witness": witness,
                }))?)?;
            } else {
                out.line(format_args!("verdict: {}", c.verdict))?;
                out.line(format_args!("budget-used: {}", c.budget_used))?;
                if let Some(w) = &c.witness {
                    let parts: Vec<String> = w.iter().map(|(x, v)| format!("{x} := {v}")).collect();
                    out.line(format_args!("witness: {}", parts.join(", ")))?;
                }
            }
        }
        Command::Predicate { name, code: text } => {
            let ctx = context(cli)?;
            let p = ctx.registry.predicate(name).map_err(|e| usage(e.to_string()))?;
            out.line(p.decide(&code(text)?))?;
        }
        Command::FixedPoint { numbering, predicate } => {
            let ctx = context(cli)?;
            let n = ctx.registry.numbering(numbering).map_err(|e| usage(e.to_string()))?;
            let p = ctx.registry.predicate(predicate).map_err(|e| usage(e.to_string()))?;
            let fp = fixed_point(n.as_ref(), &p, ctx.oracle())?;
            if fp.sentence.size() <= PRINT_LIMIT {
                out.line(format_args!("sentence: {}", fp.sentence))?;
            } else {
                let x = p.variable().expect("fixed points come from syntactic forms");
                out.line(format_args!("sentence: {} with {x} := numeral {}", fp.psi, fp.k))?;
                out.line(format_args!("sentence-size: {}", fp.sentence.size()))?;
            }
            out.line(format_args!("diagonal-code: {}", fp.k))?;
            out.line(format_args!("code: {}", fp.code))?;
            out.line(format_args!("truth: {}", fp.truth))?;
            out.line(format_args!("predicate: {}", fp.decided))?;
            return Ok(fp.holds());
        }
        Command::Verify { suite } => {
            let ctx = context(cli)?;
            let (name, checks) = match suite {
                VerifyCommand::Simulation { numbering } => {
                    ("simulation", suites::simulation(&ctx, numbering.as_deref())?)
                }
                VerifyCommand::Equivalence { a, b } => {
                    let pair = match (a, b) {
                        (Some(a), Some(b)) => Some((a.as_str(), b.as_str())),
                        (None, None) => None,
                        _ => return Err(usage("verify equivalence takes two numberings or none")),
                    };
                    ("equivalence", suites::equivalence(&ctx, pair)?)
                }
                VerifyCommand::Loeb { numbering, predicate } => {
                    let only = match (numbering, predicate) {
                        (Some(n), Some(p)) => Some((n.as_str(), p.as_str())),
                        (None, None) => None,
                        _ => return Err(usage("verify loeb takes --numbering and --predicate together")),
                    };
                    ("loeb", suites::loeb(&ctx, only)?)
                }
                VerifyCommand::Deviant => ("deviant", suites::deviant(&ctx)?),
                VerifyCommand::Diag => ("diag", suites::diag(&ctx)?),
                VerifyCommand::Rewriter => ("rewriter", suites::rewriter(&ctx)?),
                VerifyCommand::All => ("all", suites::run_suite(&ctx, "all")?),
            };
            return finish_report(cli, out, name, checks);
        }
        Command::Report => {
            if cli.out.is_none() {
                bail!(usage("report needs --out FILE"));
            }
            let ctx = context(cli)?;
            let checks = suites::run_suite(&ctx, "all")?;
            return finish_report(cli, out, "all", checks);
        }
    }
    Ok(true)
}

/// Runs the binary on `args`, writing to the given streams. Returns the
/// exit code: 0 when every check passed, 1 on a failed check or runtime
/// error, 2 on usage or parse errors.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut out = Out { w: stdout };
    match execute(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            if is_usage(&e) {
                2
            } else {
                1
            }
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
