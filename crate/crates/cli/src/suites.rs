//! Verification suites. Each returns a list of checks; ids are stable so
//! reports can be compared across runs.

use std::collections::BTreeSet;
use std::sync::Arc;

use anyhow::Result;
use goedelsim_core::deviant::{pr_delta_neg, pr_delta_star, tr_delta_forall, DeltaStar};
use goedelsim_core::loeb::{
    consistency_forms_check, fixed_point, implies, loeb_check, tr_forall, transfer_predicate, unary_family,
    CodePredicate, LoebReport,
};
use goedelsim_core::numbering::{check_monotone, verify_equivalence, verify_simulation};
use goedelsim_core::order::DEFAULT_ENUM_LIMIT;
use goedelsim_core::poly::Polynomial;
use goedelsim_core::rewrite::{ac_equal, critical_pairs, normal_form, normal_key, to_polynomial, Rule};
use goedelsim_core::samples::{random_expr, random_formula, random_sentence, random_term, seeded};
use goedelsim_core::syntax::{free_variables, is_sentence, is_term, neg_height, parse};
use goedelsim_core::truth::{Budget, Oracle, Truth, Verdict};
use goedelsim_core::{Code, Ctor, Error, Expr};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corpus::Corpus;
use crate::registry::{Registry, ACCEPTABLE, NUMBERINGS};
use crate::report::{Check, Status};

pub const REWRITE_PAIRS: usize = 1000;
pub const REWRITE_DEPTH: usize = 6;
pub const REWRITE_VARS: usize = 3;
pub const EXPR_CORPUS: usize = 500;
pub const FRAGMENT_SENTENCES: usize = 300;
pub const CLOSED_ITEMS: usize = 300;
pub const LAYER_SENTENCES: usize = 100;
pub const MAX_NEG_LAYER: u64 = 3;
/// Sentences of at most this size form the Loeb pairs.
pub const PAIR_SENTENCE_SIZE: u128 = 6;
const ATTEMPTS: usize = 60_000;

/// Choices of psi for the consistency forms; `psi and not psi` stays
/// within the enumeration limit.
pub const PSI: [&str; 5] = ["(= 0 0)", "(= 0 1)", "(= (S 0) 1)", "(= (S 0) 0)", "(not (= 1 0))"];

/// Numbering and predicate pairs shipped together.
/// Diagonal sentences above this size are left out of the monotonicity corpus.
pub const MONOTONE_SENTENCE_SIZE: u128 = 1_000;

pub const SHIPPED: [(&str, &str); 9] = [
    ("delta-neg", "pr-neg"),
    ("delta-neg", "even"),
    ("delta-star", "pr-star"),
    ("delta-forall", "tr-forall"),
    ("gamma", "pr[gamma]"),
    ("diag", "pr[diag]"),
    ("twist", "pr[twist]"),
    ("split-provable", "pr[split-provable]"),
    ("gamma", "const-true"),
];

pub const SUITES: [&str; 6] = ["rewriter", "simulation", "equivalence", "deviant", "loeb", "diag"];

pub struct Context {
    pub registry: Registry,
    pub corpus: Corpus,
    pub seed: u64,
}

impl Context {
    pub fn new(corpus: Corpus, budget: Budget) -> Context {
        let oracle = Oracle::new(budget).with_independent(corpus.tagged("independent"));
        Context { registry: Registry::new(Arc::new(oracle), DEFAULT_ENUM_LIMIT), corpus, seed: 0x5eed }
    }

    pub fn oracle(&self) -> &Arc<Oracle> {
        self.registry.oracle()
    }

    fn limit(&self) -> u128 {
        DEFAULT_ENUM_LIMIT as u128
    }
}

fn empty_corpus(suite: &str) -> Vec<Check> {
    vec![Check::with_status(format!("{suite}.corpus"), Status::Skipped, json!({"reason": "empty corpus"}))]
}

fn show(c: &Code) -> String {
    if c.bits() <= 200 {
        c.to_string()
    } else {
        format!("<{} bits>", c.bits())
    }
}

/// Pushes items from `seed` then from `gen` until `target` distinct ones
/// pass `accept`.
fn collect(
    target: usize,
    seed: Vec<Expr>,
    mut gen: impl FnMut() -> Expr,
    accept: impl Fn(&Expr) -> bool + Sync,
) -> Vec<Expr> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in seed {
        if out.len() < target && seen.insert(e.clone()) && accept(&e) {
            out.push(e);
        }
    }
    let mut attempts = 0;
    while out.len() < target && attempts < ATTEMPTS {
        let batch: Vec<Expr> = (0..256).map(|_| gen()).filter(|e| seen.insert(e.clone())).collect();
        attempts += 256;
        let ok: Vec<bool> = batch.par_iter().map(&accept).collect();
        out.extend(batch.into_iter().zip(ok).filter(|(_, k)| *k).map(|(e, _)| e).take(target - out.len()));
    }
    out
}

/// Corpus expressions within the enumeration limit, topped up with random
/// ones to [`EXPR_CORPUS`].
pub fn expression_corpus(ctx: &Context) -> Vec<Expr> {
    let mut rng = seeded(ctx.seed);
    let limit = ctx.limit();
    collect(
        EXPR_CORPUS,
        ctx.corpus.exprs(),
        || match rng.gen_range(0..3) {
            0 => random_expr(&mut rng, 3),
            1 => random_formula(&mut rng, 2, 1, 2),
            _ => random_term(&mut rng, 3, 2),
        },
        |e| e.size() <= limit,
    )
}

/// Sentences `delta-neg` encodes and the oracle classifies.
pub fn fragment_sentences(ctx: &Context) -> Result<Vec<Expr>> {
    let d = ctx.registry.numbering("delta-neg")?;
    let o = ctx.oracle().clone();
    let mut rng = seeded(ctx.seed + 1);
    Ok(collect(
        FRAGMENT_SENTENCES,
        ctx.corpus.sentences(),
        || random_sentence(&mut rng, 3, 1, 2),
        |e| o.verdict(e).is_definite() && d.encode(e).is_ok(),
    ))
}

fn is_closed(e: &Expr) -> bool {
    free_variables(e).is_empty()
}

/// Closed terms and sentences with a definite truth value that
/// `delta-forall` encodes.
pub fn closed_items(ctx: &Context) -> Result<Vec<Expr>> {
    let d = ctx.registry.numbering("delta-forall")?;
    let o = ctx.oracle().clone();
    let mut rng = seeded(ctx.seed + 2);
    let seed: Vec<Expr> =
        ctx.corpus.exprs().into_iter().filter(|e| is_closed(e) && (is_term(e) || is_sentence(e))).collect();
    Ok(collect(
        CLOSED_ITEMS,
        seed,
        || if rng.gen_bool(0.3) { random_term(&mut rng, 2, 0) } else { random_sentence(&mut rng, 3, 1, 2) },
        |e| {
            let definite = is_term(e) || matches!(o.truth(e), Ok(Truth::True | Truth::False));
            definite && d.encode(e).is_ok()
        },
    ))
}

/// Sentences without leading negation whose negations up to
/// [`MAX_NEG_LAYER`] all have `delta-star` codes.
pub fn layer_sentences(ctx: &Context) -> Result<Vec<Expr>> {
    let d = ctx.registry.numbering("delta-star")?;
    let o = ctx.oracle().clone();
    let mut rng = seeded(ctx.seed + 3);
    Ok(collect(
        LAYER_SENTENCES,
        ctx.corpus.sentences(),
        || random_sentence(&mut rng, 3, 1, 2),
        |e| {
            neg_height(e) == 0
                && matches!(o.verdict(e), Verdict::Provable | Verdict::Refutable | Verdict::Independent)
                && d.encode(&negations(e, MAX_NEG_LAYER)).is_ok()
        },
    ))
}

fn negations(e: &Expr, k: u64) -> Expr {
    (0..k).fold(e.clone(), |acc, _| Expr::not(acc))
}

/// Small corpus sentences.
pub fn pair_sentences(ctx: &Context) -> Vec<Expr> {
    let set: BTreeSet<Expr> = ctx.corpus.sentences().into_iter().filter(|e| e.size() <= PAIR_SENTENCE_SIZE).collect();
    set.into_iter().collect()
}

pub fn loeb_pairs(sentences: &[Expr]) -> Vec<(Expr, Expr)> {
    sentences.iter().flat_map(|a| sentences.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

// ---- rewriter

fn mutate_leaf<R: Rng>(t: &Expr, rng: &mut R) -> Expr {
    let kids = if t.var_index().is_some() { Vec::new() } else { t.children() };
    if kids.is_empty() {
        let choices = [Expr::zero(), Expr::one(), Expr::var(0), Expr::var(1), Expr::var(2)];
        let others: Vec<&Expr> = choices.iter().filter(|c| *c != t).collect();
        return others[rng.gen_range(0..others.len())].clone();
    }
    let i = rng.gen_range(0..kids.len());
    let mut kids = kids;
    kids[i] = mutate_leaf(&kids[i], rng);
    Expr::app(t.ctor(), &kids)
}

/// A term equal to `t` in every commutative semiring.
fn scramble<R: Rng>(t: &Expr, rng: &mut R) -> Expr {
    let kids: Vec<Expr> = match t.var_index() {
        Some(_) => Vec::new(),
        None => t.children().iter().map(|k| scramble(k, rng)).collect(),
    };
    match (t.ctor(), kids.as_slice()) {
        (Ctor::S, [a]) if rng.gen_bool(0.5) => Expr::add(a.clone(), Expr::one()),
        (Ctor::Add, [a, b]) if rng.gen_bool(0.5) => Expr::add(b.clone(), a.clone()),
        (Ctor::Mul, [a, b]) => {
            let (a, b) = if rng.gen_bool(0.5) { (b.clone(), a.clone()) } else { (a.clone(), b.clone()) };
            match b.view() {
                goedelsim_core::View::Bin(Ctor::Add, u, v) if rng.gen_bool(0.5) => {
                    Expr::add(Expr::mul(a.clone(), u.clone()), Expr::mul(a, v.clone()))
                }
                _ => Expr::mul(a, b),
            }
        }
        (_, []) if rng.gen_bool(0.1) => Expr::mul(Expr::one(), t.clone()),
        _ if kids.is_empty() => t.clone(),
        _ => Expr::app(t.ctor(), &kids),
    }
}

/// Term pairs: a third unrelated, a third equal by construction and a
/// third one leaf away from equal.
pub fn rewrite_pairs(seed: u64) -> Vec<(Expr, Expr)> {
    let mut rng = seeded(seed);
    (0..REWRITE_PAIRS)
        .map(|i| {
            let s = random_term(&mut rng, REWRITE_DEPTH, REWRITE_VARS);
            let t = match i % 3 {
                0 => random_term(&mut rng, REWRITE_DEPTH, REWRITE_VARS),
                1 => scramble(&s, &mut rng),
                _ => {
                    let m = mutate_leaf(&s, &mut rng);
                    scramble(&m, &mut rng)
                }
            };
            (s, t)
        })
        .collect()
}

struct PairOutcome {
    agree: bool,
    equal: bool,
    steps: usize,
    bad_steps: usize,
}

fn rewrite_outcome(s: &Expr, t: &Expr) -> Result<PairOutcome> {
    let (ns, ts) = normal_key(s)?;
    let (nt, tt) = normal_key(t)?;
    let by_rewrite = ns == nt;
    let by_poly = to_polynomial(s)? == to_polynomial(t)?;
    let steps = ts.steps.len() + tt.steps.len();
    let bad_steps = ts.non_decreasing_steps() + tt.non_decreasing_steps();
    Ok(PairOutcome { agree: by_rewrite == by_poly, equal: by_poly, steps, bad_steps })
}

/// `X - 1, 1, X, 2X - 2, 3` in rule order, with `X` the weight of the
/// first rule variable.
pub fn expected_rule_deltas() -> Vec<Polynomial> {
    let x = Polynomial::var(0);
    let c = Polynomial::constant;
    vec![x.sub(&c(1)), c(1), x.clone(), x.add(&x).sub(&c(2)), c(3)]
}

pub fn rewriter(ctx: &Context) -> Result<Vec<Check>> {
    let pairs = rewrite_pairs(ctx.seed);
    let outcomes: Vec<PairOutcome> = pairs.par_iter().map(|(s, t)| rewrite_outcome(s, t)).collect::<Result<_>>()?;
    let disagreements: Vec<String> =
        pairs.iter().zip(&outcomes).filter(|(_, o)| !o.agree).take(5).map(|((s, t), _)| format!("{s} = {t}")).collect();
    let n_dis = outcomes.iter().filter(|o| !o.agree).count();
    let steps: usize = outcomes.iter().map(|o| o.steps).sum();
    let bad: usize = outcomes.iter().map(|o| o.bad_steps).sum();
    let mut checks = vec![
        Check::new(
            "rewriter.oracle-agreement",
            n_dis == 0,
            json!({
                "pairs": pairs.len(),
                "equal_pairs": outcomes.iter().filter(|o| o.equal).count(),
                "disagreements": n_dis,
                "examples": disagreements,
            }),
        ),
        Check::new("rewriter.termination", bad == 0 && steps > 0, json!({"steps": steps, "non_decreasing_steps": bad})),
    ];
    let deltas: Vec<Polynomial> = Rule::ALL.iter().map(|r| r.weight_delta()).collect();
    let shown: serde_json::Map<String, Value> =
        Rule::ALL.iter().zip(&deltas).map(|(r, d)| (r.label().to_string(), json!(d.display_xyz()))).collect();
    checks.push(Check::new("rewriter.rule-deltas", deltas == expected_rule_deltas(), Value::Object(shown)));
    let mut joined = 0;
    let mut shown = Vec::new();
    for (a, b) in critical_pairs() {
        let (na, nb) = (normal_form(&a)?.0, normal_form(&b)?.0);
        let ok = ac_equal(&na, &nb)?;
        joined += usize::from(ok);
        shown.push(json!({"left": a.to_string(), "right": b.to_string(), "normal_form": na.to_string(), "joined": ok}));
    }
    checks.push(Check::new(
        "rewriter.critical-pairs",
        joined == shown.len() && joined == 3,
        json!({"joined": joined, "pairs": shown}),
    ));
    Ok(checks)
}

// ---- numberings

pub fn simulation(ctx: &Context, only: Option<&str>) -> Result<Vec<Check>> {
    if ctx.corpus.is_empty() {
        return Ok(empty_corpus("simulation"));
    }
    let corpus = expression_corpus(ctx);
    let names: Vec<&str> = match only {
        Some(n) => vec![n],
        None => NUMBERINGS.to_vec(),
    };
    let mut checks = Vec::new();
    for name in names {
        let n = ctx.registry.numbering(name)?;
        let r = verify_simulation(n.as_ref(), &corpus);
        checks.push(Check::new(
            format!("simulation.{name}"),
            r.passed() && r.encode_errors < corpus.len(),
            json!({
                "numbering": r.numbering,
                "corpus_size": r.corpus_size,
                "encode_errors": r.encode_errors,
                "injectivity_failures": r.injectivity_failures,
                "round_trip_failures": r.round_trip_failures,
                "image_failures": r.image_failures,
                "tracker_checks": r.tracker_checks,
                "tracker_failures": r.tracker_failures,
            }),
        ));
    }
    if only.is_none() {
        let trackers = |name: &str| -> Result<Vec<Ctor>> { Ok(ctx.registry.numbering(name)?.trackers()) };
        let (neg, all) = (trackers("delta-neg")?, trackers("delta-forall")?);
        let names = |v: &[Ctor]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        checks.push(Check::new(
            "simulation.tracker-sets",
            !neg.contains(&Ctor::Not) && !all.contains(&Ctor::Forall),
            json!({"delta-neg": names(&neg), "delta-forall": names(&all), "delta-star": names(&trackers("delta-star")?)}),
        ));
    }
    Ok(checks)
}

pub fn equivalence(ctx: &Context, pair: Option<(&str, &str)>) -> Result<Vec<Check>> {
    if ctx.corpus.is_empty() {
        return Ok(empty_corpus("equivalence"));
    }
    let corpus = expression_corpus(ctx);
    let pairs: Vec<(&str, &str)> = match pair {
        Some(p) => vec![p],
        None => {
            ACCEPTABLE.iter().enumerate().flat_map(|(i, a)| ACCEPTABLE[i + 1..].iter().map(move |b| (*a, *b))).collect()
        }
    };
    let mut checks = Vec::new();
    for (a, b) in pairs {
        let (na, nb) = (ctx.registry.numbering(a)?, ctx.registry.numbering(b)?);
        let r = verify_equivalence(na.as_ref(), nb.as_ref(), &corpus);
        checks.push(Check::new(
            format!("equivalence.{a}.{b}"),
            r.passed() && r.skipped < corpus.len(),
            json!({
                "corpus_size": r.corpus_size,
                "skipped": r.skipped,
                "round_trip_failures": r.round_trip_failures,
                "tracker_failures": r.tracker_failures,
            }),
        ));
    }
    Ok(checks)
}

fn loeb_details(r: &LoebReport) -> Value {
    json!({
        "numbering": r.numbering,
        "predicate": r.predicate,
        "corpus_size": r.corpus_size,
        "encode_skipped": r.encode_skipped,
        "checked": {"loeb1": r.checked[0], "loeb2": r.checked[1], "loeb3": r.checked[2]},
        "failures": {"loeb1": r.failures[0], "loeb2": r.failures[1], "loeb3": r.failures[2]},
        "loeb3_skipped": r.loeb3_skipped,
        "consistency_code_value": r.consistency_code_value,
        "failure_examples": r.failure_examples,
    })
}

fn loeb_check_named(ctx: &Context, numbering: &str, predicate: &str, pairs: &[(Expr, Expr)]) -> Result<Check> {
    let n = ctx.registry.numbering(numbering)?;
    let p = ctx.registry.predicate(predicate)?;
    let r = loeb_check(n.as_ref(), &p, ctx.oracle(), pairs)?;
    Ok(Check::new(format!("loeb.{numbering}.{predicate}"), r.passed(), loeb_details(&r)))
}

pub fn deviant(ctx: &Context) -> Result<Vec<Check>> {
    if ctx.corpus.is_empty() {
        return Ok(empty_corpus("deviant"));
    }
    let o = ctx.oracle();
    let pairs = loeb_pairs(&pair_sentences(ctx));
    let mut checks = Vec::new();

    let dneg = ctx.registry.numbering("delta-neg")?;
    let sentences = fragment_sentences(ctx)?;
    let mut bad = Vec::new();
    let mut provable = 0;
    for e in &sentences {
        let c = dneg.encode(e)?;
        let p = o.verdict(e) == Verdict::Provable;
        provable += usize::from(p);
        let even = (&c % 2u32) == Code::from(0u32);
        if even != p || pr_delta_neg(&c) != p {
            bad.push(e.to_string());
        }
    }
    checks.push(Check::new(
        "deviant.delta-neg.parity",
        bad.is_empty() && sentences.len() >= FRAGMENT_SENTENCES,
        json!({"sentences": sentences.len(), "provable": provable, "mismatches": bad}),
    ));
    let c = dneg.encode(&parse("(= 0 (S 0))")?)?;
    checks.push(Check::new(
        "deviant.delta-neg.consistency",
        !pr_delta_neg(&c),
        json!({"code": show(&c), "pr": pr_delta_neg(&c)}),
    ));
    for p in ["pr-neg", "even"] {
        let mut ch = loeb_check_named(ctx, "delta-neg", p, &pairs)?;
        ch.id = format!("deviant.delta-neg.loeb.{p}");
        checks.push(ch);
    }

    let dall = ctx.registry.numbering("delta-forall")?;
    let items = closed_items(ctx)?;
    let mut bad = Vec::new();
    let mut counts = [0usize; 3];
    for e in &items {
        let c = dall.encode(e)?;
        let want = if is_term(e) {
            2
        } else {
            match o.truth(e)? {
                Truth::True => 0,
                _ => 1,
            }
        };
        counts[want] += 1;
        let r = (&c % 3u32).to_u32_digits().first().copied().unwrap_or(0) as usize;
        if r != want || tr_delta_forall(&c) != (want == 0) {
            bad.push(e.to_string());
        }
    }
    checks.push(Check::new(
        "deviant.delta-forall.trisection",
        bad.is_empty() && items.len() >= CLOSED_ITEMS,
        json!({"items": items.len(), "true": counts[0], "false": counts[1], "terms": counts[2], "mismatches": bad}),
    ));
    let mut ch = loeb_check_named(ctx, "delta-forall", "tr-forall", &pairs)?;
    ch.id = "deviant.delta-forall.loeb.tr-forall".into();
    checks.push(ch);

    let dstar = ctx.registry.numbering("delta-star")?;
    let base = layer_sentences(ctx)?;
    let mut bad = Vec::new();
    let mut checked = 0;
    for e in &base {
        for k in 0..=MAX_NEG_LAYER {
            let f = negations(e, k);
            let c = dstar.encode(&f)?;
            let want = match o.verdict(&f) {
                Verdict::Provable => 0,
                Verdict::Refutable => 1,
                _ => 2,
            };
            checked += 1;
            let ok = match DeltaStar::layout(&c) {
                Some((i, _, r)) => i == Code::from(k) && r == want && pr_delta_star(&c) == (want == 0),
                None => false,
            };
            if !ok {
                bad.push(f.to_string());
            }
        }
    }
    checks.push(Check::new(
        "deviant.delta-star.layers",
        bad.is_empty() && base.len() >= LAYER_SENTENCES,
        json!({"sentences": base.len(), "codes_checked": checked, "mismatches": bad}),
    ));
    Ok(checks)
}

pub fn loeb(ctx: &Context, only: Option<(&str, &str)>) -> Result<Vec<Check>> {
    if ctx.corpus.is_empty() {
        return Ok(empty_corpus("loeb"));
    }
    let small = pair_sentences(ctx);
    let pairs = loeb_pairs(&small);
    if let Some((n, p)) = only {
        return Ok(vec![loeb_check_named(ctx, n, p, &pairs)?]);
    }
    let mut checks = Vec::new();
    for (n, p) in SHIPPED {
        checks.push(loeb_check_named(ctx, n, p, &pairs)?);
    }
    checks.extend(transfers(ctx, &small, &pairs)?);
    checks.extend(consistency_forms(ctx, &small)?);
    Ok(checks)
}

fn transfers(ctx: &Context, small: &[Expr], pairs: &[(Expr, Expr)]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (source, pname) in [("delta-neg", "pr-neg"), ("gamma", "pr[gamma]")] {
        let a = ctx.registry.numbering(source)?;
        let p = ctx.registry.predicate(pname)?;
        let pairs: Vec<(Expr, Expr)> = pairs
            .iter()
            .filter(|(f, g)| [f.clone(), g.clone(), implies(f, g)].iter().all(|e| a.encode(e).is_ok()))
            .cloned()
            .collect();
        let pairs = pairs.as_slice();
        let before = loeb_check(a.as_ref(), &p, ctx.oracle(), pairs)?;
        for target in NUMBERINGS.iter().filter(|t| **t != source) {
            let b = ctx.registry.numbering(target)?;
            let id = format!("transfer.{pname}.{source}.{target}");
            let moved: CodePredicate = match transfer_predicate(a.clone(), b.clone(), &p, small) {
                Ok(q) => q,
                Err(e) => {
                    checks.push(Check::new(id, false, json!({"error": e.to_string()})));
                    continue;
                }
            };
            let after = loeb_check(b.as_ref(), &moved, ctx.oracle(), pairs)?;
            let same_value = before.consistency_code_value.is_some()
                && before.consistency_code_value == after.consistency_code_value;
            checks.push(Check::new(
                id,
                (!before.passed() || after.passed()) && same_value,
                json!({
                    "source_passed": before.passed(),
                    "target": loeb_details(&after),
                    "source_consistency_code_value": before.consistency_code_value,
                    "provenance": moved.provenance(),
                }),
            ));
        }
    }
    Ok(checks)
}

fn consistency_forms(ctx: &Context, small: &[Expr]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (n, p) in SHIPPED {
        let num = ctx.registry.numbering(n)?;
        let pred = ctx.registry.predicate(p)?;
        for (i, psi) in PSI.iter().enumerate() {
            let psi = parse(psi)?;
            let id = format!("consistency-forms.{n}.{p}.psi{i}");
            let r = match consistency_forms_check(num.as_ref(), &pred, &psi, small, ctx.oracle()) {
                Ok(r) => r,
                Err(e @ (Error::OracleIncomplete(_) | Error::CodeTooLarge(_))) => {
                    checks.push(Check::with_status(
                        id,
                        Status::OracleIncomplete,
                        json!({"psi": psi.to_string(), "error": e.to_string()}),
                    ));
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            let truths = r.sentence_truths.map(|ts| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>());
            checks.push(Check::new(
                id,
                r.passed(),
                json!({
                    "psi": psi.to_string(),
                    "values": r.values,
                    "sentence_truths": truths,
                    "iv": r.iv,
                    "v": r.v,
                }),
            ));
        }
    }
    Ok(checks)
}

pub fn diag(ctx: &Context) -> Result<Vec<Check>> {
    let o = ctx.oracle();
    let d = ctx.registry.numbering("diag")?;
    let family = unary_family();
    let results: Vec<_> = family.par_iter().map(|p| fixed_point(d.as_ref(), p, o)).collect();
    let mut checks = Vec::new();
    let mut diagonal = Vec::new();
    for (p, r) in family.iter().zip(results) {
        let id = format!("fixed-point.{}", p.name());
        checks.push(match r {
            Ok(fp) => {
                diagonal.push(fp.sentence.clone());
                Check::new(
                    id,
                    fp.holds(),
                    json!({"k": show(&fp.k), "sentence_size": fp.sentence.size().to_string(), "truth": fp.truth, "decided": fp.decided}),
                )
            }
            Err(e) => Check::new(id, false, json!({"error": e.to_string()})),
        });
    }
    let g = ctx.registry.numbering("gamma")?;
    let outside = fixed_point(g.as_ref(), &tr_forall(), o);
    let (ok, what) = match &outside {
        Err(Error::FixedPointOutsideFragment(m)) => (true, m.clone()),
        Ok(fp) if !fp.holds() => (true, "definite mismatch".to_string()),
        Ok(_) => (false, "fixed point verified".to_string()),
        Err(e) => (false, e.to_string()),
    };
    checks.push(Check::new(
        "fixed-point.outside-fragment",
        ok,
        json!({"numbering": "gamma", "predicate": "tr-forall", "outcome": what}),
    ));

    if ctx.corpus.is_empty() {
        checks.extend(empty_corpus("monotone"));
        return Ok(checks);
    }
    let mut corpus = ctx.corpus.exprs();
    corpus.extend(diagonal.into_iter().filter(|e| e.size() <= MONOTONE_SENTENCE_SIZE).take(8));
    for name in ["gamma", "diag"] {
        let n = ctx.registry.numbering(name)?;
        let r = check_monotone(n.as_ref(), &corpus);
        let witness = r.violations.first().map(|(s, t, cs, ct)| {
            json!({"sub": s.to_string(), "expr": t.to_string(), "sub_code": show(cs), "code": show(ct)})
        });
        let ok = if name == "gamma" { r.violations.is_empty() } else { !r.violations.is_empty() };
        checks.push(Check::new(
            format!("monotone.{name}"),
            ok && r.pairs_checked > 0,
            json!({
                "pairs_checked": r.pairs_checked,
                "skipped": r.skipped,
                "violations": r.violations.len(),
                "witness": witness,
                "expect_violations": name != "gamma",
            }),
        ));
    }
    Ok(checks)
}

pub fn run_suite(ctx: &Context, suite: &str) -> Result<Vec<Check>> {
    match suite {
        "rewriter" => rewriter(ctx),
        "simulation" => simulation(ctx, None),
        "equivalence" => equivalence(ctx, None),
        "deviant" => deviant(ctx),
        "loeb" => loeb(ctx, None),
        "diag" => diag(ctx),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(ctx, s)?);
            }
            Ok(out)
        }
        _ => anyhow::bail!("unknown suite {suite:?}"),
    }
}
