//! Runs the thirteen acceptance criteria and prints one line per criterion.
//!
//! Each criterion combines the relevant checks of a full `verify all` run
//! with an independent recomputation done here.

use std::process::Command;
use std::time::{Duration, Instant};

use goedelsim_cli::corpus::Corpus;
use goedelsim_cli::suites::{self, Context};
use goedelsim_core::deviant::{pr_delta_neg, pr_delta_star, tr_delta_forall, DeltaStar};
use goedelsim_core::loeb::{fixed_point, unary_family};
use goedelsim_core::numbering::translate;
use goedelsim_core::rewrite::{critical_pairs, normal_key, provably_equal, to_polynomial, Rule};
use goedelsim_core::samples::seeded;
use goedelsim_core::syntax::{is_term, subexpressions};
use goedelsim_core::truth::{Budget, Truth};
use goedelsim_core::{parse, BigUint, Ctor, Expr, View};
use rand::Rng;
use serde_json::Value;

const REWRITER_LIMIT: Duration = Duration::from_secs(30);
const FULL_SUITE_LIMIT: Duration = Duration::from_secs(300);
const PAIR_COUNT: usize = 1000;
const EQUIVALENCE_PAIRS: usize = 6;
const FIXED_POINTS: usize = 50;
const PSI_CHOICES: usize = 5;
/// Random assignments used to separate pairs with distinct polynomials.
const PROBES: usize = 4;
const PROBE_RANGE: u64 = 1 << 32;
const ACCEPTABLE: [&str; 4] = ["gamma", "diag", "twist", "split-provable"];

struct Verdict {
    ok: bool,
    note: String,
}

fn verdict(ok: bool, note: impl Into<String>) -> Verdict {
    Verdict { ok, note: note.into() }
}

/// Value of a term under `env`, or `None` for formulas.
fn eval(t: &Expr, env: &[BigUint]) -> Option<BigUint> {
    if let Some(k) = t.var_index() {
        return env.get(k).cloned();
    }
    match t.view() {
        View::Leaf(Ctor::Zero) => Some(BigUint::from(0u32)),
        View::Leaf(Ctor::One) => Some(BigUint::from(1u32)),
        View::Num(n) => Some(n.clone()),
        View::Un(Ctor::S, a) => eval(a, env).map(|v| v + 1u32),
        View::Bin(Ctor::Add, a, b) => Some(eval(a, env)? + eval(b, env)?),
        View::Bin(Ctor::Mul, a, b) => Some(eval(a, env)? * eval(b, env)?),
        _ => None,
    }
}

/// Truth of a closed quantifier-free sentence; `None` outside that class.
fn holds(e: &Expr) -> Option<bool> {
    match e.view() {
        View::Bin(Ctor::Eq, a, b) => Some(eval(a, &[])? == eval(b, &[])?),
        View::Un(Ctor::Not, a) => holds(a).map(|v| !v),
        View::Bin(Ctor::And, a, b) => Some(holds(a)? && holds(b)?),
        _ => None,
    }
}

fn checks<'a>(report: &'a Value, prefix: &str) -> Vec<&'a Value> {
    report["checks"]
        .as_array()
        .expect("checks array")
        .iter()
        .filter(|c| c["id"].as_str().is_some_and(|id| id.starts_with(prefix)))
        .collect()
}

fn all_pass(cs: &[&Value]) -> bool {
    !cs.is_empty() && cs.iter().all(|c| c["status"] == "pass")
}

fn check<'a>(report: &'a Value, id: &str) -> &'a Value {
    checks(report, id).into_iter().find(|c| c["id"] == id).unwrap_or_else(|| panic!("missing check {id}"))
}

fn rewriter_agreement() -> Verdict {
    let pairs = suites::rewrite_pairs(0x5eed);
    let start = Instant::now();
    let decided: Vec<bool> = pairs.iter().map(|(s, t)| provably_equal(s, t).expect("terms")).collect();
    let elapsed = start.elapsed();
    let mut rng = seeded(7);
    let mut agree = 0;
    for ((s, t), &eq) in pairs.iter().zip(&decided) {
        let by_poly = to_polynomial(s).unwrap() == to_polynomial(t).unwrap();
        let separated = (0..PROBES).any(|_| {
            let env: Vec<BigUint> = (0..3).map(|_| BigUint::from(rng.gen_range(0..PROBE_RANGE))).collect();
            eval(s, &env) != eval(t, &env)
        });
        agree += usize::from(eq == by_poly && eq != separated);
    }
    verdict(
        pairs.len() == PAIR_COUNT && agree == PAIR_COUNT && elapsed <= REWRITER_LIMIT,
        format!("{agree}/{} agree in {:.1}s (limit {}s)", pairs.len(), elapsed.as_secs_f64(), REWRITER_LIMIT.as_secs()),
    )
}

fn termination() -> Verdict {
    let pairs = suites::rewrite_pairs(0x5eed);
    let (mut steps, mut bad) = (0, 0);
    for (s, t) in &pairs {
        for e in [s, t] {
            let (_, trace) = normal_key(e).unwrap();
            steps += trace.steps.len();
            bad += trace.non_decreasing_steps();
        }
    }
    let deltas: Vec<String> = Rule::ALL.iter().map(|r| r.weight_delta().display_xyz()).collect();
    let expected = ["X - 1", "1", "X", "2X - 2", "3"];
    verdict(
        bad == 0 && steps > 0 && deltas == expected,
        format!("{steps} steps, {bad} non-decreasing; deltas [{}]", deltas.join(", ")),
    )
}

fn critical_pairs_join() -> Verdict {
    let cps = critical_pairs();
    let joined = cps
        .iter()
        .filter(|(a, b)| {
            normal_key(a).unwrap().0 == normal_key(b).unwrap().0
                && to_polynomial(a).unwrap() == to_polynomial(b).unwrap()
        })
        .count();
    verdict(cps.len() == 3 && joined == 3, format!("{joined}/3 joined"))
}

fn equivalence(ctx: &Context, report: &Value) -> Verdict {
    let corpus = suites::expression_corpus(ctx);
    let mut failures = 0;
    let mut pairs = 0;
    for (i, a) in ACCEPTABLE.iter().enumerate() {
        for b in &ACCEPTABLE[i + 1..] {
            pairs += 1;
            let (na, nb) = (ctx.registry.numbering(a).unwrap(), ctx.registry.numbering(b).unwrap());
            for e in &corpus {
                let ca = na.encode(e).unwrap();
                let there = translate(na.as_ref(), nb.as_ref(), &ca).unwrap();
                let back = translate(nb.as_ref(), na.as_ref(), &there).unwrap();
                failures += usize::from(back != ca || there != nb.encode(e).unwrap());
            }
        }
    }
    let suite = checks(report, "equivalence.");
    verdict(
        pairs == EQUIVALENCE_PAIRS
            && failures == 0
            && corpus.len() == 500
            && suite.len() == EQUIVALENCE_PAIRS
            && all_pass(&suite),
        format!("{pairs} pairs x {} expressions, {failures} round-trip failures", corpus.len()),
    )
}

fn simulation(ctx: &Context, report: &Value) -> Verdict {
    let neg = ctx.registry.numbering("delta-neg").unwrap().trackers();
    let all = ctx.registry.numbering("delta-forall").unwrap().trackers();
    let structural = !neg.contains(&Ctor::Not) && !all.contains(&Ctor::Forall);
    let suite = checks(report, "simulation.");
    let tracker_failures: u64 = suite.iter().filter_map(|c| c["details"]["tracker_failures"].as_u64()).sum();
    verdict(
        structural && suite.len() == 8 && all_pass(&suite) && tracker_failures == 0,
        format!(
            "{} numberings, {tracker_failures} tracker failures, trackers absent: not/delta-neg, forall/delta-forall",
            suite.len() - 1
        ),
    )
}

fn delta_neg(ctx: &Context, report: &Value) -> Verdict {
    let d = ctx.registry.numbering("delta-neg").unwrap();
    let sentences = suites::fragment_sentences(ctx).unwrap();
    let (mut direct, mut bad) = (0, 0);
    for e in &sentences {
        if let Some(v) = holds(e) {
            direct += 1;
            let c = d.encode(e).unwrap();
            bad += usize::from((&c % 2u32 == BigUint::from(0u32)) != v || pr_delta_neg(&c) != v);
        }
    }
    let inconsistency = d.encode(&parse("(= 0 (S 0))").unwrap()).unwrap();
    let ok = sentences.len() == 300
        && bad == 0
        && !pr_delta_neg(&inconsistency)
        && check(report, "deviant.delta-neg.parity")["status"] == "pass"
        && check(report, "deviant.delta-neg.loeb.pr-neg")["status"] == "pass";
    verdict(
        ok,
        format!(
            "{} sentences, {direct} re-evaluated directly with {bad} mismatches; pr(0=S0) = false",
            sentences.len()
        ),
    )
}

fn delta_forall(ctx: &Context, report: &Value) -> Verdict {
    let d = ctx.registry.numbering("delta-forall").unwrap();
    let items = suites::closed_items(ctx).unwrap();
    let (mut direct, mut bad) = (0, 0);
    for e in &items {
        let want = if is_term(e) { Some(2u32) } else { holds(e).map(|v| if v { 0 } else { 1 }) };
        if let Some(want) = want {
            direct += 1;
            let c = d.encode(e).unwrap();
            bad += usize::from(&c % 3u32 != BigUint::from(want) || tr_delta_forall(&c) != (want == 0));
        }
    }
    let ok = items.len() == 300
        && bad == 0
        && check(report, "deviant.delta-forall.trisection")["status"] == "pass"
        && check(report, "deviant.delta-forall.loeb.tr-forall")["status"] == "pass";
    verdict(ok, format!("{} items, {direct} re-evaluated directly with {bad} mismatches", items.len()))
}

fn delta_star(ctx: &Context, report: &Value) -> Verdict {
    let d = ctx.registry.numbering("delta-star").unwrap();
    let base = suites::layer_sentences(ctx).unwrap();
    let (mut direct, mut bad) = (0, 0);
    for e in &base {
        let Some(v) = holds(e) else { continue };
        let mut f = e.clone();
        for k in 0..=3u32 {
            direct += 1;
            let c = d.encode(&f).unwrap();
            let want = if v == (k % 2 == 0) { 0 } else { 1 };
            let ok = DeltaStar::layout(&c).is_some_and(|(i, _, r)| i == BigUint::from(k) && r == want);
            bad += usize::from(!ok || pr_delta_star(&c) != (want == 0));
            f = Expr::not(f);
        }
    }
    let ok = base.len() == 100 && bad == 0 && check(report, "deviant.delta-star.layers")["status"] == "pass";
    verdict(ok, format!("{} sentences, {direct} layered codes re-derived with {bad} mismatches", base.len()))
}

fn fixed_points(ctx: &Context, report: &Value) -> Verdict {
    let d = ctx.registry.numbering("diag").unwrap();
    let family = unary_family();
    let mut held = 0;
    for p in &family {
        let fp = fixed_point(d.as_ref(), p, ctx.oracle()).unwrap();
        let code = d.encode(&fp.sentence).unwrap();
        let truth = ctx.oracle().truth(&fp.sentence).unwrap();
        held += usize::from(truth != Truth::Unknown && (truth == Truth::True) == p.decide(&code));
    }
    let suite: Vec<&Value> =
        checks(report, "fixed-point.").into_iter().filter(|c| c["id"] != "fixed-point.outside-fragment").collect();
    verdict(
        family.len() >= FIXED_POINTS && held == family.len() && all_pass(&suite) && suite.len() == family.len(),
        format!("{held}/{} fixed points verified", family.len()),
    )
}

fn transfer(report: &Value) -> Verdict {
    let suite = checks(report, "transfer.");
    let same = suite
        .iter()
        .filter(|c| {
            let target = &c["details"]["target"]["consistency_code_value"];
            !target.is_null() && *target == c["details"]["source_consistency_code_value"]
        })
        .count();
    verdict(
        suite.len() == 12 && all_pass(&suite) && same == suite.len(),
        format!("{} transfers pass, {same} keep the consistency value", suite.len()),
    )
}

fn consistency_forms(report: &Value) -> Verdict {
    let suite = checks(report, "consistency-forms.");
    let shipped = suites::SHIPPED.len();
    verdict(
        suite.len() == shipped * PSI_CHOICES && all_pass(&suite),
        format!("{} checks over {shipped} pairs x {PSI_CHOICES} psi", suite.len()),
    )
}

fn monotone(ctx: &Context, report: &Value) -> Verdict {
    let gamma = check(report, "monotone.gamma");
    let diag = check(report, "monotone.diag");
    let w = &diag["details"]["witness"];
    let d = ctx.registry.numbering("diag").unwrap();
    let witnessed = (|| {
        let sub = parse(w["sub"].as_str()?).ok()?;
        let whole = parse(w["expr"].as_str()?).ok()?;
        let proper = subexpressions(&whole).contains(&sub) && sub != whole;
        Some(proper && d.encode(&sub).ok()? >= d.encode(&whole).ok()?)
    })()
    .unwrap_or(false);
    verdict(
        gamma["status"] == "pass" && gamma["details"]["violations"] == 0 && diag["status"] == "pass" && witnessed,
        format!(
            "gamma {} violations over {} pairs; diag {} violations, witness re-checked",
            gamma["details"]["violations"], gamma["details"]["pairs_checked"], diag["details"]["violations"]
        ),
    )
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_goedelsim"))
        .args(["--json", "--no-timestamp", "verify", "all"])
        .output()
        .expect("run goedelsim");
    let full = start.elapsed();
    let report: Value = serde_json::from_slice(&out.stdout).expect("JSON report");
    let ctx = Context::new(Corpus::base(), Budget::default());

    let results = [
        ("rewriter-oracle equivalence", rewriter_agreement()),
        ("termination certificate", termination()),
        ("critical pairs", critical_pairs_join()),
        ("numbering equivalence", equivalence(&ctx, &report)),
        ("simulation diagram", simulation(&ctx, &report)),
        ("delta-neg parity law", delta_neg(&ctx, &report)),
        ("delta-forall trisection", delta_forall(&ctx, &report)),
        ("delta-star layering", delta_star(&ctx, &report)),
        ("diagonal fixed points", fixed_points(&ctx, &report)),
        ("loeb transfer", transfer(&report)),
        ("consistency forms", consistency_forms(&report)),
        ("monotonicity", monotone(&ctx, &report)),
        (
            "full suite",
            verdict(
                out.status.code() == Some(0) && full <= FULL_SUITE_LIMIT,
                format!(
                    "exit {:?} in {:.1}s (limit {}s), {} checks",
                    out.status.code(),
                    full.as_secs_f64(),
                    FULL_SUITE_LIMIT.as_secs(),
                    report["checks"].as_array().map_or(0, Vec::len)
                ),
            ),
        ),
    ];
    let mut failed = Vec::new();
    for (i, (name, v)) in results.iter().enumerate() {
        println!("criterion {:>2} {} {name}: {}", i + 1, if v.ok { "PASS" } else { "FAIL" }, v.note);
        if !v.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
