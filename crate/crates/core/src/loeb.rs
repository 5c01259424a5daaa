//! Truth-level checks of the Loeb conditions relative to a numbering,
//! the five consistency statements, the diagonal fixed point, predicate
//! transfer between equivalent numberings and the generic provability
//! predicate of a numbering.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::deviant::{pr_delta_neg, pr_delta_star, tr_delta_forall};
use crate::error::{Error, Result};
use crate::numbering::{diag_numbering, is_unary_formula, transfer_set, verify_equivalence, CodeSet, Numbering};
use crate::syntax::{parse, substitute_numeral, Expr};
use crate::truth::{Oracle, Truth, Verdict};
use crate::Code;

/// A decidable set of codes, optionally with a formula in one free
/// variable that defines it.
#[derive(Clone)]
pub struct CodePredicate {
    name: String,
    decide: CodeSet,
    form: Option<(Expr, Expr)>,
    provenance: Vec<String>,
}

impl fmt::Debug for CodePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CodePredicate")
            .field("name", &self.name)
            .field("form", &self.form.as_ref().map(|(e, _)| e.to_string()))
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl CodePredicate {
    pub fn new(name: impl Into<String>, decide: impl Fn(&Code) -> bool + Send + Sync + 'static) -> CodePredicate {
        CodePredicate { name: name.into(), decide: Arc::new(decide), form: None, provenance: Vec::new() }
    }

    /// Attaches a defining formula; it must have exactly one free variable.
    pub fn with_form(mut self, form: Expr) -> Result<CodePredicate> {
        let x = is_unary_formula(&form).ok_or_else(|| Error::NotAFormula(form.clone()))?;
        self.form = Some((form, x));
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn decide(&self, c: &Code) -> bool {
        (self.decide)(c)
    }

    pub fn code_set(&self) -> CodeSet {
        self.decide.clone()
    }

    pub fn form(&self) -> Option<&Expr> {
        self.form.as_ref().map(|(e, _)| e)
    }

    pub fn variable(&self) -> Option<&Expr> {
        self.form.as_ref().map(|(_, x)| x)
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    /// The defining formula at the numeral of `c`.
    pub fn instance(&self, c: &Code) -> Result<Expr> {
        let (f, x) = self.form.as_ref().ok_or_else(|| Error::MissingSyntacticForm(self.name.clone()))?;
        substitute_numeral(f, x, c)
    }

    /// `(checked, mismatches, unknown)` comparing the truth of the formula
    /// instance with `decide`.
    pub fn form_agreement(&self, oracle: &Oracle, codes: &[Code]) -> Result<(usize, usize, usize)> {
        let mut out = (0, 0, 0);
        for c in codes {
            match oracle.truth(&self.instance(c)?)?.definite() {
                Some(t) => {
                    out.0 += 1;
                    if t != self.decide(c) {
                        out.1 += 1;
                    }
                }
                None => out.2 += 1,
            }
        }
        Ok(out)
    }
}

fn formula(text: &str) -> Expr {
    parse(text).expect("built-in formula parses")
}

fn positive_multiple(c: &Code, m: u32) -> bool {
    !c.is_zero() && (c % m).is_zero()
}

/// Even and nonzero: `not(x = 0) and not forall y not(x = y + y)`.
pub fn parity() -> CodePredicate {
    CodePredicate::new("even", |c| positive_multiple(c, 2))
        .with_form(formula("(and (not (= (v 0) 0)) (not (forall (v 1) (not (= (v 0) (+ (v 1) (v 1)))))))"))
        .expect("unary")
}

fn mod3_form() -> Expr {
    formula("(and (not (= (v 0) 0)) (not (forall (v 1) (not (= (v 0) (+ (v 1) (+ (v 1) (v 1))))))))")
}

/// A positive multiple of three, with its defining formula.
pub fn mod3() -> CodePredicate {
    CodePredicate::new("mod3", |c| positive_multiple(c, 3)).with_form(mod3_form()).expect("unary")
}

/// The derivation predicate of `delta-neg`. It carries no formula.
pub fn pr_neg() -> CodePredicate {
    CodePredicate::new("pr-neg", pr_delta_neg)
}

pub fn pr_star() -> CodePredicate {
    CodePredicate::new("pr-star", pr_delta_star).with_form(mod3_form()).expect("unary")
}

pub fn tr_forall() -> CodePredicate {
    CodePredicate::new("tr-forall", tr_delta_forall).with_form(mod3_form()).expect("unary")
}

pub fn const_true() -> CodePredicate {
    CodePredicate::new("const-true", |_| true).with_form(formula("(= (v 0) (v 0))")).expect("unary")
}

pub fn const_false() -> CodePredicate {
    CodePredicate::new("const-false", |_| false).with_form(formula("(not (= (v 0) (v 0)))")).expect("unary")
}

/// Predicate by name: the shipped ones plus members of [`unary_family`].
pub fn predicate_by_name(name: &str) -> Option<CodePredicate> {
    match name {
        "even" => Some(parity()),
        "mod3" => Some(mod3()),
        "pr-neg" => Some(pr_neg()),
        "pr-star" => Some(pr_star()),
        "tr-forall" => Some(tr_forall()),
        "const-true" => Some(const_true()),
        "const-false" => Some(const_false()),
        _ => unary_family().into_iter().find(|p| p.name() == name),
    }
}

/// Small arithmetic predicates of codes, each with a defining formula in
/// the decidable fragment.
pub fn unary_family() -> Vec<CodePredicate> {
    let mk = |name: String, text: String, f: Box<dyn Fn(&Code) -> bool + Send + Sync>| {
        CodePredicate::new(name, f).with_form(formula(&text)).expect("unary")
    };
    let mut out = Vec::new();
    for j in 0..8u32 {
        out.push(mk(
            format!("eq-{j}"),
            format!("(= (v 0) {})", Expr::numeral(j.into())),
            Box::new(move |c| *c == Code::from(j)),
        ));
    }
    for m in 2..=5u32 {
        for r in 0..m {
            let text = format!(
                "(not (forall (v 1) (not (= (v 0) (+ (* {} (v 1)) {})))))",
                Expr::numeral(m.into()),
                Expr::numeral(r.into())
            );
            out.push(mk(format!("res-{r}-mod-{m}"), text, Box::new(move |c| (c % m) == Code::from(r))));
        }
    }
    for j in 1..=8u32 {
        let n = Expr::numeral(j.into());
        let ge = format!("(not (forall (v 1) (not (= (v 0) (+ (v 1) {n})))))");
        out.push(mk(format!("ge-{j}"), ge, Box::new(move |c| *c >= Code::from(j))));
        let lt = format!("(forall (v 1) (not (= (v 0) (+ (v 1) {n}))))");
        out.push(mk(format!("lt-{j}"), lt, Box::new(move |c| *c < Code::from(j))));
    }
    out.push(mk(
        "square".into(),
        "(not (forall (v 1) (not (= (v 0) (* (v 1) (v 1))))))".into(),
        Box::new(|c| {
            let r = c.sqrt();
            &r * &r == *c
        }),
    ));
    out.push(mk("double-is-self".into(), "(= (+ (v 0) (v 0)) (v 0))".into(), Box::new(|c| c.is_zero())));
    out.push(mk("idempotent".into(), "(= (* (v 0) (v 0)) (v 0))".into(), Box::new(|c| *c <= Code::from(1u32))));
    out.push(mk("unit-law".into(), "(= (* (v 0) 1) (v 0))".into(), Box::new(|_| true)));
    out.push(mk(
        "odd".into(),
        "(not (not (forall (v 1) (not (= (v 0) (+ (v 1) (v 1)))))))".into(),
        Box::new(|c| c.is_odd()),
    ));
    for j in 1..=4u32 {
        let n = Expr::numeral(j.into());
        let text = format!(
            "(and (not (forall (v 1) (not (= (v 0) (+ (v 1) (v 1)))))) (not (forall (v 1) (not (= (v 0) (+ (v 1) {n}))))))"
        );
        out.push(mk(format!("even-ge-{j}"), text, Box::new(move |c| c.is_even() && *c >= Code::from(j))));
    }
    for p in [parity(), mod3(), const_true(), const_false()] {
        out.push(p);
    }
    out
}

/// `a -> b`, written with the primitive connectives.
pub fn implies(a: &Expr, b: &Expr) -> Expr {
    Expr::implies(a.clone(), b.clone())
}

pub fn contradiction() -> Expr {
    formula("(= 0 (S 0))")
}

/// Encodes, treating codes out of reach as skipped and every other error
/// as fatal.
fn try_code(n: &dyn Numbering, e: &Expr) -> Result<Option<Code>> {
    match n.encode(e) {
        Ok(c) => Ok(Some(c)),
        Err(err @ Error::UnsupportedShape { .. }) => Err(err),
        Err(_) => Ok(None),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoebReport {
    pub numbering: String,
    pub predicate: String,
    pub corpus_size: usize,
    /// Sentences whose code is out of reach.
    pub encode_skipped: usize,
    /// Instances checked per condition (non-vacuous ones).
    pub checked: [usize; 3],
    pub failures: [usize; 3],
    /// Loeb3 instances not checked, by reason.
    pub loeb3_skipped: BTreeMap<String, usize>,
    /// The predicate on the code of `0 = S0`.
    pub consistency_code_value: Option<bool>,
    pub failure_examples: Vec<String>,
}

impl LoebReport {
    pub fn passed(&self) -> bool {
        self.failures.iter().all(|&f| f == 0)
    }

    fn fail(&mut self, cond: usize, what: String) {
        self.failures[cond] += 1;
        if self.failure_examples.len() < 8 {
            self.failure_examples.push(what);
        }
    }
}

enum Loeb3 {
    Vacuous,
    Skipped(&'static str),
    Checked { a: bool, b: Option<bool> },
}

fn loeb3_instance(n: &dyn Numbering, p: &CodePredicate, oracle: &Oracle, c: &Code) -> Result<Loeb3> {
    if !p.decide(c) {
        return Ok(Loeb3::Vacuous);
    }
    if p.form().is_none() {
        return Ok(Loeb3::Skipped("no syntactic form"));
    }
    let s = p.instance(c)?;
    let a = match oracle.truth(&s).ok().and_then(Truth::definite) {
        Some(t) => t,
        None => return Ok(Loeb3::Skipped("truth unknown")),
    };
    let b = try_code(n, &s)?.map(|cs| p.decide(&cs));
    Ok(Loeb3::Checked { a, b })
}

/// Truth-level Loeb conditions on a corpus of sentence pairs:
/// 1. provable `phi` has `p(n(phi))`;
/// 2. `p(n(phi))` and `p(n(phi -> psi))` give `p(n(psi))`;
/// 3. `p(n(phi))` makes the formula instance at `n(phi)` true and, when its
///    code is in reach, `p` holds of that code.
pub fn loeb_check(n: &dyn Numbering, p: &CodePredicate, oracle: &Oracle, pairs: &[(Expr, Expr)]) -> Result<LoebReport> {
    let mut r = LoebReport {
        numbering: n.name().to_string(),
        predicate: p.name().to_string(),
        corpus_size: pairs.len(),
        ..Default::default()
    };
    let sentences: BTreeSet<Expr> = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone(), implies(a, b)]).collect();
    let sentences: Vec<Expr> = sentences.into_iter().collect();
    let codes: Vec<Option<Code>> = sentences.par_iter().map(|e| try_code(n, e)).collect::<Result<_>>()?;
    let code_of: BTreeMap<&Expr, &Code> =
        sentences.iter().zip(&codes).filter_map(|(e, c)| c.as_ref().map(|c| (e, c))).collect();
    r.encode_skipped = codes.iter().filter(|c| c.is_none()).count();

    let verdicts: Vec<Verdict> = sentences.par_iter().map(|e| oracle.verdict(e)).collect();
    for ((e, c), v) in sentences.iter().zip(&codes).zip(verdicts) {
        if let (Some(c), Verdict::Provable) = (c, v) {
            r.checked[0] += 1;
            if !p.decide(c) {
                r.fail(0, format!("Loeb1: {e} is provable but its code {c} is rejected"));
            }
        }
    }

    for (a, b) in pairs {
        let ab = implies(a, b);
        let (Some(ca), Some(cab), Some(cb)) = (code_of.get(a), code_of.get(&ab), code_of.get(b)) else { continue };
        if p.decide(ca) && p.decide(cab) {
            r.checked[1] += 1;
            if !p.decide(cb) {
                r.fail(1, format!("Loeb2: {a} and {ab} accepted, {b} rejected"));
            }
        }
    }

    let accepted: Vec<(&Expr, &Code)> = code_of.iter().map(|(e, c)| (*e, *c)).collect();
    let third: Vec<Loeb3> = accepted.par_iter().map(|(_, c)| loeb3_instance(n, p, oracle, c)).collect::<Result<_>>()?;
    for ((e, c), out) in accepted.iter().zip(third) {
        match out {
            Loeb3::Vacuous => {}
            Loeb3::Skipped(why) => *r.loeb3_skipped.entry(why.to_string()).or_default() += 1,
            Loeb3::Checked { a, b } => {
                r.checked[2] += 1;
                if !a {
                    r.fail(2, format!("Loeb3: {e} accepted but the formula at {c} is false"));
                }
                match b {
                    Some(true) => {}
                    Some(false) => r.fail(2, format!("Loeb3: the provability sentence for {e} is rejected")),
                    None => *r.loeb3_skipped.entry("code-size".to_string()).or_default() += 1,
                }
            }
        }
    }

    r.consistency_code_value = try_code(n, &contradiction())?.map(|c| p.decide(&c));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConsistencyForm {
    I,
    II,
    III,
    IV,
    V,
}

impl ConsistencyForm {
    pub const ALL: [ConsistencyForm; 5] =
        [ConsistencyForm::I, ConsistencyForm::II, ConsistencyForm::III, ConsistencyForm::IV, ConsistencyForm::V];
}

impl fmt::Display for ConsistencyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConsistencyForm::I => "i",
            ConsistencyForm::II => "ii",
            ConsistencyForm::III => "iii",
            ConsistencyForm::IV => "iv",
            ConsistencyForm::V => "v",
        })
    }
}

impl FromStr for ConsistencyForm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ConsistencyForm::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| format!("unknown consistency form {s}"))
    }
}

/// A universally quantified consistency statement evaluated over corpus
/// sentences, with sentencehood, negation and conjunction computed on
/// codes by the numbering itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemanticCheck {
    pub form: ConsistencyForm,
    pub instances: usize,
    pub skipped: usize,
    pub violations: Vec<Expr>,
}

impl SemanticCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConsistencyStatement {
    Sentence(Expr),
    Semantic(SemanticCheck),
}

fn need_psi(psi: Option<&Expr>) -> Result<&Expr> {
    psi.ok_or(Error::MissingPsi)
}

fn code(n: &dyn Numbering, e: &Expr) -> Result<Code> {
    n.encode(e)
}

fn semantic(form: ConsistencyForm, n: &dyn Numbering, p: &CodePredicate, corpus: &[Expr]) -> Result<SemanticCheck> {
    let mut out = SemanticCheck { form, instances: 0, skipped: 0, violations: Vec::new() };
    for chi in corpus {
        let neg = Expr::not(chi.clone());
        let bad = match form {
            ConsistencyForm::IV => try_code(n, &Expr::and(chi.clone(), neg))?.map(|c| p.decide(&c)),
            _ => match (try_code(n, chi)?, try_code(n, &neg)?) {
                (Some(a), Some(b)) => Some(p.decide(&a) && p.decide(&b)),
                _ => None,
            },
        };
        match bad {
            None => out.skipped += 1,
            Some(b) => {
                out.instances += 1;
                if b {
                    out.violations.push(chi.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Forms (i)-(iii) as sentences built from the predicate's formula; forms
/// (iv) and (v) as checks over the corpus sentences.
pub fn consistency_sentence(
    form: ConsistencyForm,
    n: &dyn Numbering,
    p: &CodePredicate,
    psi: Option<&Expr>,
    corpus: &[Expr],
) -> Result<ConsistencyStatement> {
    let not_pr = |e: &Expr| -> Result<Expr> { Ok(Expr::not(p.instance(&code(n, e)?)?)) };
    Ok(match form {
        ConsistencyForm::I => ConsistencyStatement::Sentence(not_pr(&contradiction())?),
        ConsistencyForm::II => {
            let psi = need_psi(psi)?;
            ConsistencyStatement::Sentence(not_pr(&Expr::and(psi.clone(), Expr::not(psi.clone())))?)
        }
        ConsistencyForm::III => {
            let psi = need_psi(psi)?;
            ConsistencyStatement::Sentence(Expr::or(not_pr(psi)?, not_pr(&Expr::not(psi.clone()))?))
        }
        _ => ConsistencyStatement::Semantic(semantic(form, n, p, corpus)?),
    })
}

/// Truth value of a consistency form read through `decide`.
pub fn consistency_value(
    form: ConsistencyForm,
    n: &dyn Numbering,
    p: &CodePredicate,
    psi: Option<&Expr>,
    corpus: &[Expr],
) -> Result<bool> {
    Ok(match form {
        ConsistencyForm::I => !p.decide(&code(n, &contradiction())?),
        ConsistencyForm::II => {
            let psi = need_psi(psi)?;
            !p.decide(&code(n, &Expr::and(psi.clone(), Expr::not(psi.clone())))?)
        }
        ConsistencyForm::III => {
            let psi = need_psi(psi)?;
            !p.decide(&code(n, psi)?) || !p.decide(&code(n, &Expr::not(psi.clone()))?)
        }
        _ => semantic(form, n, p, corpus)?.holds(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyFormsReport {
    pub numbering: String,
    pub predicate: String,
    pub psi: Expr,
    /// Forms (i)-(iii) read through `decide`.
    pub values: [bool; 3],
    /// Truth of the sentences (i)-(iii), when the predicate has a formula.
    pub sentence_truths: Option<[Truth; 3]>,
    pub iv: bool,
    pub v: bool,
}

impl ConsistencyFormsReport {
    pub fn forms_agree(&self) -> bool {
        let same = self.values.iter().all(|&v| v == self.values[0]);
        let sentences = self
            .sentence_truths
            .is_none_or(|ts| ts.iter().zip(self.values).all(|(t, v)| t.definite().is_none_or(|t| t == v)));
        same && sentences
    }

    pub fn iv_implies_ii(&self) -> bool {
        !self.iv || self.values[1]
    }

    pub fn v_implies_iii(&self) -> bool {
        !self.v || self.values[2]
    }

    pub fn passed(&self) -> bool {
        self.forms_agree() && self.iv_implies_ii() && self.v_implies_iii()
    }
}

/// Forms (i)-(iii) have equal truth values, and (iv), (v) imply (ii),
/// (iii). The quantified forms range over the corpus plus `psi`.
pub fn consistency_forms_check(
    n: &dyn Numbering,
    p: &CodePredicate,
    psi: &Expr,
    corpus: &[Expr],
    oracle: &Oracle,
) -> Result<ConsistencyFormsReport> {
    let mut range = corpus.to_vec();
    range.push(psi.clone());
    let forms = [ConsistencyForm::I, ConsistencyForm::II, ConsistencyForm::III];
    let mut values = [false; 3];
    for (slot, f) in values.iter_mut().zip(forms) {
        *slot = consistency_value(f, n, p, Some(psi), &range)?;
    }
    let sentence_truths = match p.form() {
        None => None,
        Some(_) => {
            let mut ts = [Truth::Unknown; 3];
            for (slot, f) in ts.iter_mut().zip(forms) {
                if let ConsistencyStatement::Sentence(s) = consistency_sentence(f, n, p, Some(psi), &range)? {
                    *slot = oracle.truth(&s)?;
                }
            }
            Some(ts)
        }
    };
    Ok(ConsistencyFormsReport {
        numbering: n.name().to_string(),
        predicate: p.name().to_string(),
        psi: psi.clone(),
        values,
        sentence_truths,
        iv: consistency_value(ConsistencyForm::IV, n, p, None, &range)?,
        v: consistency_value(ConsistencyForm::V, n, p, None, &range)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub numbering: String,
    pub predicate: String,
    /// The formula whose diagonal instance is the fixed point.
    pub psi: Expr,
    /// The diagonal code: `D(psi(k)) = k`.
    pub k: Code,
    pub sentence: Expr,
    /// Code of the sentence under the target numbering.
    pub code: Code,
    pub truth: bool,
    pub decided: bool,
}

impl FixedPoint {
    pub fn holds(&self) -> bool {
        self.truth == self.decided
    }
}

fn outside(what: impl fmt::Display) -> Error {
    Error::FixedPointOutsideFragment(what.to_string())
}

/// The diagonal instance `gamma = psi(k)` of the predicate's formula,
/// where `k` is the diagonal code of `psi`, together with the truth of
/// `gamma` and the predicate on `n(gamma)`.
pub fn fixed_point(n: &dyn Numbering, phi: &CodePredicate, oracle: &Oracle) -> Result<FixedPoint> {
    let (psi, x) = phi.form.clone().ok_or_else(|| Error::MissingSyntacticForm(phi.name.clone()))?;
    let d = diag_numbering();
    let k = d.diag_index(&psi)?;
    let sentence = substitute_numeral(&psi, &x, &k)?;
    match d.encode(&sentence) {
        Ok(back) if back == k => {}
        Ok(back) => return Err(outside(format_args!("diagonal code {back} differs from {k}"))),
        Err(e) => return Err(outside(e)),
    }
    let code = n.encode(&sentence).map_err(|e| outside(format_args!("code under {}: {e}", n.name())))?;
    let truth = oracle
        .truth(&sentence)
        .ok()
        .and_then(Truth::definite)
        .ok_or_else(|| outside(format_args!("truth of {sentence} is unknown")))?;
    Ok(FixedPoint {
        numbering: n.name().to_string(),
        predicate: phi.name.clone(),
        psi,
        k,
        decided: phi.decide(&code),
        sentence,
        code,
        truth,
    })
}

/// `p` on `a`-codes read on `b`-codes through the translation. The result
/// has no formula; its provenance records the transfer.
pub fn transfer_predicate(
    a: Arc<dyn Numbering>,
    b: Arc<dyn Numbering>,
    p: &CodePredicate,
    corpus: &[Expr],
) -> Result<CodePredicate> {
    if !verify_equivalence(a.as_ref(), b.as_ref(), corpus).passed() {
        return Err(Error::NotEquivalent(a.name().to_string(), b.name().to_string()));
    }
    let mut provenance = p.provenance.clone();
    provenance.push(format!("{} transferred from {} to {}", p.name, a.name(), b.name()));
    Ok(CodePredicate {
        name: format!("{}@{}", p.name, b.name()),
        decide: transfer_set(a, b, p.decide.clone()),
        form: None,
        provenance,
    })
}

/// Provability composed with decoding: `c` decodes to an expression whose
/// universal closure is provable.
pub fn construct_pr(n: Arc<dyn Numbering>, oracle: Arc<Oracle>) -> CodePredicate {
    let name = format!("pr[{}]", n.name());
    CodePredicate::new(name, move |c| match n.decode(c) {
        Ok(e) => oracle.closure_verdict(&e) == Verdict::Provable,
        Err(_) => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deviant::{delta_forall, delta_neg};
    use crate::numbering::standard_gamma;
    use crate::order::DEFAULT_ENUM_LIMIT;
    use crate::truth::Budget;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn oracle() -> Arc<Oracle> {
        Arc::new(Oracle::new(Budget::default()))
    }

    fn small_sentences() -> Vec<Expr> {
        ["(= 0 0)", "(= 0 1)", "(= 1 1)", "(= 1 0)", "(not (= 0 0))", "(not (= 0 1))", "(= (S 0) 1)", "(= (S 0) 0)"]
            .iter()
            .map(|s| p(s))
            .collect()
    }

    fn pairs() -> Vec<(Expr, Expr)> {
        let s = small_sentences();
        s.iter().flat_map(|a| s.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }

    #[test]
    fn forms_agree_with_decide() {
        let o = oracle();
        let codes: Vec<Code> = (0..60u32).map(Code::from).chain([Code::from(28216u32)]).collect();
        for pred in unary_family() {
            let (checked, bad, unknown) = pred.form_agreement(&o, &codes).unwrap();
            assert_eq!((bad, unknown), (0, 0), "{}", pred.name());
            assert_eq!(checked, codes.len());
        }
        assert!(unary_family().len() >= 50);
    }

    #[test]
    fn delta_neg_loeb() {
        let o = oracle();
        let d = delta_neg(o.clone(), DEFAULT_ENUM_LIMIT);
        for pred in [pr_neg(), parity()] {
            let r = loeb_check(&d, &pred, &o, &pairs()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.checked[0] > 0 && r.checked[1] > 0, "{r:?}");
            assert_eq!(r.consistency_code_value, Some(false));
        }
        let r = loeb_check(&d, &pr_neg(), &o, &pairs()).unwrap();
        assert!(r.loeb3_skipped.contains_key("no syntactic form"));
    }

    #[test]
    fn delta_forall_loeb() {
        let o = oracle();
        let d = delta_forall(o.clone(), DEFAULT_ENUM_LIMIT);
        let r = loeb_check(&d, &tr_forall(), &o, &pairs()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.checked[2] > 0);
    }

    #[test]
    fn constant_true_passes_trivially() {
        let o = oracle();
        let r = loeb_check(&standard_gamma(), &const_true(), &o, &pairs()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.consistency_code_value, Some(true));
    }

    #[test]
    fn consistency_forms() {
        let o = oracle();
        let d = delta_neg(o.clone(), DEFAULT_ENUM_LIMIT);
        let psi = p("(= 0 0)");
        let rep = consistency_forms_check(&d, &pr_neg(), &psi, &small_sentences(), &o).unwrap();
        assert_eq!(rep.values, [true, true, true]);
        assert!(rep.passed());
        let rep = consistency_forms_check(&d, &parity(), &psi, &small_sentences(), &o).unwrap();
        assert_eq!(rep.sentence_truths, Some([Truth::True; 3]));
        assert!(rep.passed());
        assert!(matches!(
            consistency_sentence(ConsistencyForm::I, &d, &pr_neg(), None, &[]),
            Err(Error::MissingSyntacticForm(_))
        ));
        assert!(matches!(consistency_sentence(ConsistencyForm::II, &d, &parity(), None, &[]), Err(Error::MissingPsi)));
        let ConsistencyStatement::Sentence(s) =
            consistency_sentence(ConsistencyForm::I, &d, &parity(), None, &[]).unwrap()
        else {
            panic!("form (i) is a sentence")
        };
        assert_eq!(o.truth(&s).unwrap(), Truth::True);
    }

    #[test]
    fn consistency_forms_flag_a_broken_predicate() {
        let o = oracle();
        let g = standard_gamma();
        let psi = p("(= 0 0)");
        let bad = g.encode(&Expr::and(psi.clone(), Expr::not(psi.clone()))).unwrap();
        let pred = CodePredicate::new("only-the-contradiction", move |c| *c == bad);
        let rep = consistency_forms_check(&g, &pred, &psi, &[], &o).unwrap();
        assert!(!rep.forms_agree());
    }

    #[test]
    fn fixed_points_under_diag() {
        let o = oracle();
        let d = diag_numbering();
        for pred in unary_family() {
            let fp = fixed_point(&d, &pred, &o).unwrap();
            assert_eq!(fp.code, fp.k);
            assert!(fp.holds(), "{}", pred.name());
        }
    }

    #[test]
    fn fixed_point_out_of_reach_under_gamma() {
        let o = oracle();
        let r = fixed_point(&standard_gamma(), &mod3(), &o);
        assert!(matches!(r, Err(Error::FixedPointOutsideFragment(_))));
        assert!(matches!(fixed_point(&standard_gamma(), &pr_neg(), &o), Err(Error::MissingSyntacticForm(_))));
    }

    #[test]
    fn transfer_round_trip() {
        let o = oracle();
        let a: Arc<dyn Numbering> = Arc::new(delta_neg(o.clone(), DEFAULT_ENUM_LIMIT));
        let b: Arc<dyn Numbering> = Arc::new(standard_gamma());
        let corpus = small_sentences();
        let there = transfer_predicate(a.clone(), b.clone(), &pr_neg(), &corpus).unwrap();
        assert!(there.form().is_none());
        assert_eq!(there.provenance().len(), 1);
        let back = transfer_predicate(b.clone(), a.clone(), &there, &corpus).unwrap();
        for e in &corpus {
            let c = a.encode(e).unwrap();
            assert_eq!(back.decide(&c), pr_delta_neg(&c));
        }
        assert!(!there.decide(&b.encode(&contradiction()).unwrap()));
        let f = transfer_predicate(a, b.clone(), &const_false(), &corpus).unwrap();
        assert!(corpus.iter().all(|e| !f.decide(&b.encode(e).unwrap())));
    }

    #[test]
    fn construct_pr_matches_pr_neg() {
        let o = oracle();
        let d: Arc<dyn Numbering> = Arc::new(delta_neg(o.clone(), DEFAULT_ENUM_LIMIT));
        let pr = construct_pr(d.clone(), o.clone());
        for e in small_sentences().iter().chain(&[p("(= (+ (v 0) 0) (v 0))"), p("(forall (v 0) (= (v 0) 0))")]) {
            let c = d.encode(e).unwrap();
            assert_eq!(pr.decide(&c), pr_delta_neg(&c), "{e}");
        }
        assert!(!pr.decide(&Code::from(7u32)));
    }
}
