//! Standard-model evaluation and the budgeted classification oracle for
//! the arithmetical fragment.
//!
//! Definite answers come only from exact reasoning: closed atoms are
//! evaluated, innermost universal quantifiers over quantifier-free bodies
//! are decided by isolating the integer roots of the atoms' polynomials,
//! a few symbolic certificates settle whole quantifier blocks, and
//! counterexample search refutes the rest. Anything else is `Unknown`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rewrite::term_poly;
use crate::syntax::{free_variables, is_formula, is_sentence, is_term, universal_closure, Ctor, Expr, View};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    /// Instances examined by counterexample search, per query.
    pub max_instances: u64,
    /// Nesting depth of quantifier blocks that may be searched.
    pub max_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_instances: 10_000, max_depth: 12 }
    }
}

impl Budget {
    pub fn new(max_instances: u64, max_depth: usize) -> Budget {
        Budget { max_instances: max_instances.max(1), max_depth: max_depth.max(1) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Provable,
    Refutable,
    Independent,
    NotASentence,
    Unknown,
}

impl Verdict {
    pub fn is_definite(self) -> bool {
        matches!(self, Verdict::Provable | Verdict::Refutable)
    }

    fn negate(self) -> Verdict {
        match self {
            Verdict::Provable => Verdict::Refutable,
            Verdict::Refutable => Verdict::Provable,
            v => v,
        }
    }

    fn conj(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Refutable, _) | (_, Refutable) => Refutable,
            (Provable, Provable) => Provable,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Independent,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Provable => "provable",
            Verdict::Refutable => "refutable",
            Verdict::Independent => "independent",
            Verdict::NotASentence => "not-a-sentence",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub budget_used: u64,
    /// Counterexample to an outermost universal block, when one was found.
    pub witness: Option<Vec<(Expr, BigUint)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn definite(self) -> Option<bool> {
        match self {
            Truth::True => Some(true),
            Truth::False => Some(false),
            Truth::Unknown => None,
        }
    }

    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }

    fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Unknown => "unknown",
        })
    }
}

/// Value of a closed term.
pub fn eval_closed_term(t: &Expr) -> Result<BigUint> {
    if !is_term(t) {
        return Err(Error::NotATerm(t.clone()));
    }
    if !free_variables(t).is_empty() {
        return Err(Error::NotClosed(t.clone()));
    }
    let v = term_poly(t, &|_| None).constant_term();
    Ok(v.to_biguint().expect("term values are natural"))
}

/// Variable bindings, innermost last; `None` marks a variable as free
/// again below a quantifier that rebinds it.
type Env = Vec<(usize, Option<BigInt>)>;

fn lookup(env: &Env, k: usize) -> Option<BigInt> {
    env.iter().rev().find(|(v, _)| *v == k).and_then(|(_, x)| x.clone())
}

fn atom_poly(s: &Expr, t: &Expr, env: &Env) -> Polynomial {
    let fixed = |k: usize| lookup(env, k);
    term_poly(s, &fixed).sub(&term_poly(t, &fixed))
}

fn var_of(x: &Expr) -> usize {
    x.var_index().expect("quantified position holds a variable")
}

/// Pushes universal quantifiers through conjunctions and drops vacuous ones.
pub fn miniscope(e: &Expr) -> Expr {
    match e.view() {
        View::Un(Ctor::Not, a) => Expr::not(miniscope(a)),
        View::Bin(Ctor::And, a, b) => Expr::and(miniscope(a), miniscope(b)),
        View::Bin(Ctor::Forall, x, b) => push_forall(x, miniscope(b)),
        _ => e.clone(),
    }
}

fn push_forall(x: &Expr, body: Expr) -> Expr {
    if let View::Bin(Ctor::And, a, b) = body.view() {
        return Expr::and(push_forall(x, a.clone()), push_forall(x, b.clone()));
    }
    if free_variables(&body).contains(x) {
        Expr::forall(x.clone(), body)
    } else {
        body
    }
}

fn has_quantifier(e: &Expr) -> bool {
    match e.view() {
        View::Bin(Ctor::Forall, ..) => true,
        View::Un(Ctor::Not, a) => has_quantifier(a),
        View::Bin(Ctor::And, a, b) => has_quantifier(a) || has_quantifier(b),
        _ => false,
    }
}

/// No natural assignment makes `f` vanish: either all coefficients share
/// the sign of a nonzero constant term, or `f` has no root modulo a small m.
fn never_zero(f: &Polynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.definite_sign().is_some() {
        return true;
    }
    let vars = f.variables();
    if vars.len() > 3 {
        return false;
    }
    for m in 2u32..=5 {
        let m_big = BigInt::from(m);
        let total = (m as usize).pow(vars.len() as u32);
        let all_nonzero = (0..total).all(|mut code| {
            let mut residues = HashMap::new();
            for &v in &vars {
                residues.insert(v, BigInt::from(code % m as usize));
                code /= m as usize;
            }
            let val = f.eval(|v| residues.get(&v).cloned().unwrap_or_default());
            !val.mod_floor(&m_big).is_zero()
        });
        if all_nonzero {
            return true;
        }
    }
    false
}

/// Truth value shared by every assignment of the free variables, when a
/// symbolic certificate shows there is one.
fn symbolic(e: &Expr, env: &Env) -> Option<bool> {
    match e.view() {
        View::Bin(Ctor::Eq, s, t) => {
            let f = atom_poly(s, t, env);
            if f.is_zero() {
                Some(true)
            } else if never_zero(&f) {
                Some(false)
            } else {
                None
            }
        }
        View::Un(Ctor::Not, a) => symbolic(a, env).map(|b| !b),
        View::Bin(Ctor::And, a, b) => match (symbolic(a, env), symbolic(b, env)) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        },
        View::Bin(Ctor::Forall, x, body) => {
            let k = var_of(x);
            let mut inner = env.clone();
            inner.push((k, None));
            if let Some(b) = symbolic(body, &inner) {
                return Some(b);
            }
            // A body equation whose x-dependence never vanishes fails at
            // some x for every choice of the other variables.
            if let View::Bin(Ctor::Eq, s, t) = body.view() {
                let f = atom_poly(s, t, &inner);
                if f.coefficients_in(k).iter().skip(1).any(never_zero) {
                    return Some(false);
                }
            }
            None
        }
        _ => None,
    }
}

fn horner(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Coefficients of `f(x+1) - f(x)`.
fn forward_difference(f: &[BigInt]) -> Vec<BigInt> {
    let n = f.len();
    let mut out = vec![BigInt::zero(); n.saturating_sub(1).max(1)];
    // (x+1)^j - x^j = sum_{i<j} C(j,i) x^i
    for (j, c) in f.iter().enumerate().skip(1) {
        let mut binom = BigInt::one();
        for (i, slot) in out.iter_mut().enumerate().take(j) {
            *slot += c * &binom;
            binom = binom * BigInt::from(j - i) / BigInt::from(i + 1);
        }
    }
    out
}

fn trim(mut f: Vec<BigInt>) -> Vec<BigInt> {
    while f.len() > 1 && f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

/// Maximal runs of constant sign of `f` on the integers of `[lo, hi]`.
fn sign_runs(f: &[BigInt], lo: &BigInt, hi: &BigInt) -> Vec<(BigInt, BigInt, Sign)> {
    let f = trim(f.to_vec());
    if f.len() == 1 || lo == hi {
        if f.len() == 1 {
            return vec![(lo.clone(), hi.clone(), f[0].sign())];
        }
        return vec![(lo.clone(), hi.clone(), horner(&f, lo).sign())];
    }
    let g = forward_difference(&f);
    let mut runs: Vec<(BigInt, BigInt, Sign)> = Vec::new();
    let push = |runs: &mut Vec<(BigInt, BigInt, Sign)>, a: BigInt, b: BigInt, s: Sign| {
        let a = match runs.last() {
            Some((_, end, _)) if *end >= a => end + 1,
            _ => a,
        };
        if a > b {
            return;
        }
        match runs.last_mut() {
            Some((_, end, s0)) if *s0 == s && &*end + 1 == a => *end = b,
            _ => runs.push((a, b, s)),
        }
    };
    for (a, b, s) in sign_runs(&g, lo, &(hi - 1)) {
        let end = &b + 1;
        match s {
            Sign::NoSign => {
                let sg = horner(&f, &a).sign();
                push(&mut runs, a, end, sg);
            }
            _ => {
                let up = s == Sign::Plus;
                // first x in [a, end] with f(x) >= 0 (increasing) or <= 0 (decreasing)
                let first = |pred: &dyn Fn(&BigInt) -> bool| -> BigInt {
                    let (mut l, mut h) = (a.clone(), &end + 1);
                    while l < h {
                        let mid: BigInt = (&l + &h) >> 1;
                        if pred(&horner(&f, &mid)) {
                            h = mid;
                        } else {
                            l = mid + 1;
                        }
                    }
                    l
                };
                let (s_lo, s_hi) = if up { (Sign::Minus, Sign::Plus) } else { (Sign::Plus, Sign::Minus) };
                let x0 = if up { first(&|v| !v.is_negative()) } else { first(&|v| !v.is_positive()) };
                let x1 = if up { first(&|v| v.is_positive()) } else { first(&|v| v.is_negative()) };
                if a < x0 {
                    push(&mut runs, a.clone(), &x0 - 1, s_lo);
                }
                if x0 < x1 {
                    push(&mut runs, x0.clone(), &x1 - 1, Sign::NoSign);
                }
                if x1 <= end {
                    push(&mut runs, x1, end.clone(), s_hi);
                }
            }
        }
    }
    runs
}

/// Natural roots of a nonzero univariate integer polynomial.
pub fn natural_roots(f: &[BigInt]) -> Vec<BigInt> {
    let f = trim(f.to_vec());
    assert!(!(f.len() == 1 && f[0].is_zero()), "zero polynomial has every root");
    let mut roots = Vec::new();
    let shift = f.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(BigInt::zero());
    }
    let g: Vec<BigInt> = f[shift..].to_vec();
    if g.len() <= 1 {
        return roots;
    }
    let lead = g.last().expect("non-empty").abs();
    let bound = BigInt::one() + g.iter().map(|c| c.abs()).max().expect("non-empty") / lead;
    for (a, b, s) in sign_runs(&g, &BigInt::one(), &bound) {
        if s == Sign::NoSign {
            let mut x = a;
            while x <= b {
                roots.push(x.clone());
                x += 1;
            }
        }
    }
    roots
}

struct Ctx<'a> {
    budget: &'a Budget,
    used: u64,
    depth: usize,
    record: bool,
    witness: Option<Vec<(Expr, BigUint)>>,
}

fn eval(e: &Expr, env: &mut Env, ctx: &mut Ctx) -> Truth {
    match e.view() {
        View::Bin(Ctor::Eq, s, t) => {
            let f = atom_poly(s, t, env);
            if f.is_constant() {
                Truth::from_bool(f.is_zero())
            } else {
                Truth::Unknown
            }
        }
        View::Un(Ctor::Not, a) => eval(a, env, ctx).not(),
        View::Bin(Ctor::And, a, b) => {
            let l = eval(a, env, ctx);
            if l == Truth::False {
                return Truth::False;
            }
            l.and(eval(b, env, ctx))
        }
        View::Bin(Ctor::Forall, ..) => eval_block(e, env, ctx),
        _ => Truth::Unknown,
    }
}

fn eval_block(e: &Expr, env: &mut Env, ctx: &mut Ctx) -> Truth {
    let top = ctx.record && ctx.depth == 0;
    match symbolic(e, env) {
        Some(true) => return Truth::True,
        Some(false) if !top => return Truth::False,
        Some(false) => {
            // Still look for a counterexample to report.
            let found = eval_block_search(e, env, ctx);
            return if found == Truth::Unknown { Truth::False } else { found };
        }
        None => {}
    }
    eval_block_search(e, env, ctx)
}

fn eval_block_search(e: &Expr, env: &mut Env, ctx: &mut Ctx) -> Truth {
    let mut vars = Vec::new();
    let mut body = e.clone();
    while let View::Bin(Ctor::Forall, x, b) = body.view() {
        vars.push(x.clone());
        body = b.clone();
    }
    let qf = !has_quantifier(&body);
    let top = ctx.record && ctx.depth == 0;
    if qf && vars.len() == 1 {
        let (t, w) = exact_univariate(var_of(&vars[0]), &body, env, ctx);
        if top && t == Truth::False {
            ctx.witness = w.map(|w| vec![(vars[0].clone(), w)]);
        }
        return t;
    }
    if ctx.depth >= ctx.budget.max_depth {
        return Truth::Unknown;
    }
    let searched = if qf { &vars[..vars.len() - 1] } else { &vars[..] };
    let mut tuple = vec![0u64; searched.len()];
    let mut total = 0u64;
    loop {
        if ctx.used >= ctx.budget.max_instances {
            return Truth::Unknown;
        }
        ctx.used += 1;
        let mark = env.len();
        for (x, n) in searched.iter().zip(&tuple) {
            env.push((var_of(x), Some(BigInt::from(*n))));
        }
        ctx.depth += 1;
        let (t, w) = if qf {
            exact_univariate(var_of(vars.last().expect("block")), &body, env, ctx)
        } else {
            (eval(&body, env, ctx), None)
        };
        ctx.depth -= 1;
        env.truncate(mark);
        if t == Truth::False {
            if top {
                let mut wit: Vec<(Expr, BigUint)> =
                    searched.iter().cloned().zip(tuple.iter().map(|&n| BigUint::from(n))).collect();
                if let Some(w) = w {
                    wit.push((vars.last().expect("block").clone(), w));
                }
                ctx.witness = Some(wit);
            }
            return Truth::False;
        }
        next_tuple(&mut tuple, &mut total);
    }
}

/// Dovetailing order: by coordinate sum, then lexicographically.
fn next_tuple(t: &mut [u64], total: &mut u64) {
    let n = t.len();
    if n == 0 {
        return;
    }
    // find rightmost position (excluding the last) that can move one unit right
    for i in (0..n - 1).rev() {
        if t[i + 1..].iter().sum::<u64>() > 0 {
            let rest: u64 = t[i + 1..].iter().sum::<u64>() - 1;
            t[i] += 1;
            for x in t[i + 1..].iter_mut() {
                *x = 0;
            }
            t[n - 1] = rest;
            return;
        }
    }
    *total += 1;
    for x in t.iter_mut() {
        *x = 0;
    }
    t[n - 1] = *total;
}

fn collect_atoms(e: &Expr, out: &mut Vec<(Expr, Expr)>) {
    match e.view() {
        View::Bin(Ctor::Eq, s, t) => out.push((s.clone(), t.clone())),
        View::Un(Ctor::Not, a) => collect_atoms(a, out),
        View::Bin(Ctor::And, a, b) => {
            collect_atoms(a, out);
            collect_atoms(b, out);
        }
        _ => {}
    }
}

/// Decides `forall x. body` for a quantifier-free body whose other
/// variables are bound by `env`. Returns a counterexample when false.
fn exact_univariate(x: usize, body: &Expr, env: &mut Env, ctx: &mut Ctx) -> (Truth, Option<BigUint>) {
    let mut atoms = Vec::new();
    collect_atoms(body, &mut atoms);
    let mut inner = env.clone();
    inner.push((x, None));
    let mut special: BTreeSet<BigInt> = BTreeSet::new();
    for (s, t) in &atoms {
        let f = atom_poly(s, t, &inner);
        if f.is_zero() {
            continue;
        }
        let Some(coeffs) = f.univariate(x) else {
            return (Truth::Unknown, None);
        };
        special.extend(natural_roots(&coeffs));
    }
    // Outside the special points every atom takes its generic value.
    let mut generic = 0u64;
    while special.contains(&BigInt::from(generic)) {
        generic += 1;
    }
    let at = |n: BigInt, env: &mut Env, ctx: &mut Ctx| {
        env.push((x, Some(n)));
        let t = eval(body, env, ctx);
        env.pop();
        t
    };
    match at(BigInt::from(generic), env, ctx) {
        Truth::True => {}
        t => return (t, (t == Truth::False).then(|| BigUint::from(generic))),
    }
    for p in special {
        match at(p.clone(), env, ctx) {
            Truth::True => {}
            t => return (t, p.to_biguint().filter(|_| t == Truth::False)),
        }
    }
    (Truth::True, None)
}

fn run_truth(e: &Expr, budget: &Budget, record: bool) -> (Truth, u64, Option<Vec<(Expr, BigUint)>>) {
    let m = miniscope(e);
    let mut ctx = Ctx { budget, used: 0, depth: 0, record, witness: None };
    let t = eval(&m, &mut Vec::new(), &mut ctx);
    (t, ctx.used, ctx.witness)
}

/// Standard-model truth of a sentence of the fragment.
pub fn truth(e: &Expr, budget: &Budget) -> Result<Truth> {
    if !is_sentence(e) {
        return Err(Error::NotASentence(e.clone()));
    }
    Ok(run_truth(e, budget, false).0)
}

/// Fragment classification without independence overrides.
pub fn classify(e: &Expr, budget: &Budget) -> Classification {
    classify_with(e, budget, &HashSet::new(), true)
}

fn classify_with(e: &Expr, budget: &Budget, independent: &HashSet<Expr>, record: bool) -> Classification {
    if !is_sentence(e) {
        return Classification { verdict: Verdict::NotASentence, budget_used: 0, witness: None };
    }
    if independent.contains(e) {
        return Classification { verdict: Verdict::Independent, budget_used: 0, witness: None };
    }
    match e.view() {
        View::Un(Ctor::Not, a) if !independent.is_empty() => {
            let c = classify_with(a, budget, independent, record);
            Classification { verdict: c.verdict.negate(), budget_used: c.budget_used, witness: None }
        }
        View::Bin(Ctor::And, a, b) if !independent.is_empty() => {
            let ca = classify_with(a, budget, independent, record);
            let cb = classify_with(b, budget, independent, record);
            Classification {
                verdict: ca.verdict.conj(cb.verdict),
                budget_used: ca.budget_used + cb.budget_used,
                witness: None,
            }
        }
        _ => {
            let (t, used, witness) = run_truth(e, budget, record);
            let verdict = match t {
                Truth::True => Verdict::Provable,
                Truth::False => Verdict::Refutable,
                Truth::Unknown => Verdict::Unknown,
            };
            Classification { verdict, budget_used: used, witness: witness.filter(|_| t == Truth::False) }
        }
    }
}

/// Budget plus the curated set of sentences treated as independent, with
/// a verdict cache.
pub struct Oracle {
    pub budget: Budget,
    independent: HashSet<Expr>,
    cache: RwLock<HashMap<Expr, Verdict>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(Budget::default())
    }
}

impl Oracle {
    pub fn new(budget: Budget) -> Oracle {
        Oracle { budget, independent: HashSet::new(), cache: RwLock::new(HashMap::new()) }
    }

    pub fn with_independent(mut self, items: impl IntoIterator<Item = Expr>) -> Oracle {
        self.independent.extend(items.into_iter().filter(is_sentence));
        self
    }

    pub fn independent(&self) -> &HashSet<Expr> {
        &self.independent
    }

    pub fn classify(&self, e: &Expr) -> Classification {
        classify_with(e, &self.budget, &self.independent, true)
    }

    /// Cached verdict.
    pub fn verdict(&self, e: &Expr) -> Verdict {
        if let Some(v) = self.cache.read().get(e) {
            return *v;
        }
        let v = classify_with(e, &self.budget, &self.independent, false).verdict;
        self.cache.write().insert(e.clone(), v);
        v
    }

    /// Verdict of the universal closure; `NotASentence` for non-formulas.
    pub fn closure_verdict(&self, e: &Expr) -> Verdict {
        match universal_closure(e) {
            Ok(c) => self.verdict(&c),
            Err(_) => Verdict::NotASentence,
        }
    }

    /// Standard-model truth, ignoring independence overrides.
    pub fn truth(&self, e: &Expr) -> Result<Truth> {
        truth(e, &self.budget)
    }

    pub fn is_formula(&self, e: &Expr) -> bool {
        is_formula(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn v(s: &str) -> Verdict {
        classify(&p(s), &Budget::default()).verdict
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn closed_terms() {
        assert_eq!(eval_closed_term(&p("(S (S 0))")).unwrap(), BigUint::from(2u32));
        assert_eq!(eval_closed_term(&p("(* (S (S 0)) (S (S (S 0))))")).unwrap(), BigUint::from(6u32));
        assert_eq!(eval_closed_term(&p("(+ 1 (* 1 1))")).unwrap(), BigUint::from(2u32));
        assert!(matches!(eval_closed_term(&p("(v 0)")), Err(Error::NotClosed(_))));
        assert!(matches!(eval_closed_term(&p("(= 0 0)")), Err(Error::NotATerm(_))));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(v("(= 0 (S 0))"), Verdict::Refutable);
        assert_eq!(v("(forall (v 0) (= (+ (v 0) 0) (v 0)))"), Verdict::Provable);
        let c = classify(&p("(forall (v 0) (= (* (v 0) (v 0)) (v 0)))"), &Budget::default());
        assert_eq!(c.verdict, Verdict::Refutable);
        assert_eq!(c.witness, Some(vec![(Expr::v(), BigUint::from(2u32))]));
        assert_eq!(v("(= (v 0) 0)"), Verdict::NotASentence);
        assert_eq!(v("(forall 0 (= 0 0))"), Verdict::NotASentence);
    }

    #[test]
    fn truth_examples() {
        let b = Budget::default();
        assert_eq!(truth(&p("(= 0 0)"), &b).unwrap(), Truth::True);
        assert_eq!(truth(&p("(not (= 0 (S 0)))"), &b).unwrap(), Truth::True);
        assert_eq!(truth(&p("(and (= 0 0) (= (S 0) 0))"), &b).unwrap(), Truth::False);
        assert!(truth(&p("(= (v 0) 0)"), &b).is_err());
    }

    #[test]
    fn quantifier_reasoning() {
        // exact univariate decisions
        assert_eq!(v("(forall (v 0) (not (= (+ (v 0) (v 0)) 1)))"), Verdict::Provable);
        assert_eq!(v("(not (forall (v 0) (not (= (+ (v 0) (v 0)) (S (S (S (S 0))))))))"), Verdict::Provable);
        // nested quantifiers refuted by search
        assert_eq!(v("(forall (v 0) (forall (v 1) (= (v 0) (v 1))))"), Verdict::Refutable);
        // certificates
        assert_eq!(v("(forall (v 0) (forall (v 1) (= (+ (v 0) (v 1)) (+ (v 1) (v 0)))))"), Verdict::Provable);
        assert_eq!(v("(forall (v 0) (forall (v 1) (not (= (+ (v 0) (+ (v 1) 1)) 0))))"), Verdict::Provable);
        assert_eq!(
            v("(forall (v 0) (forall (v 1) (not (= (+ (v 0) (v 0)) (+ (+ (v 1) (v 1)) 1)))))"),
            Verdict::Provable
        );
        assert_eq!(v("(forall (v 0) (not (forall (v 1) (= (v 0) (v 1)))))"), Verdict::Provable);
        // miniscoping splits independent conjuncts
        assert_eq!(
            v("(forall (v 0) (forall (v 1) (and (= (+ (v 0) 0) (v 0)) (not (= (S (v 1)) 0)))))"),
            Verdict::Provable
        );
    }

    #[test]
    fn roots_of_univariate_polynomials() {
        assert_eq!(natural_roots(&big(&[0, -1, 1])), big(&[0, 1]));
        assert_eq!(natural_roots(&big(&[-6, 11, -6, 1])), big(&[1, 2, 3]));
        assert_eq!(natural_roots(&big(&[1, 1])), big(&[]));
        assert_eq!(natural_roots(&big(&[-10, 0, 1])), big(&[]));
        let huge = BigInt::from(10).pow(40);
        assert_eq!(natural_roots(&[-huge.clone(), BigInt::one()]), vec![huge]);
    }

    #[test]
    fn overrides_only_touch_classification() {
        let s = p("(= (+ 1 1) (S (S 0)))");
        let o = Oracle::default().with_independent([s.clone()]);
        assert_eq!(o.classify(&s).verdict, Verdict::Independent);
        assert_eq!(o.classify(&Expr::not(s.clone())).verdict, Verdict::Independent);
        assert_eq!(o.truth(&s).unwrap(), Truth::True);
    }

    #[test]
    fn dovetailing_visits_every_tuple() {
        let mut t = vec![0u64; 2];
        let mut total = 0;
        let mut seen = Vec::new();
        for _ in 0..6 {
            seen.push(t.clone());
            next_tuple(&mut t, &mut total);
        }
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![0, 2], vec![1, 1], vec![2, 0]]);
    }
}
