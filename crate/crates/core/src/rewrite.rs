//! Class rewriting modulo associativity and commutativity of `+` and `·`
//! for the five semiring rules, with polynomial weights as termination
//! certificates and a polynomial-expansion oracle for provable equality.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::syntax::{is_term, Ctor, Expr, View};

/// Terms above this many nodes are decided by polynomial expansion only.
pub const REWRITE_NODE_LIMIT: u128 = 4_000;

/// AC-canonical term: `+` and `·` are flattened into sorted multisets of
/// at least two elements each. Nodes are shared and cache their weight,
/// their tree form and whether some rule applies inside them.
#[derive(Clone)]
pub struct Ac(Arc<AcNode>);

struct AcNode {
    kind: Kind,
    weight: Polynomial,
    expr: Expr,
    normal: bool,
    printed: OnceLock<String>,
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Zero,
    One,
    Var(usize),
    S(Ac),
    Add(Vec<Ac>),
    Mul(Vec<Ac>),
}

/// The AC-congruence class key of a term.
pub type AcKey = Ac;

impl PartialEq for Ac {
    fn eq(&self, other: &Ac) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for Ac {}

impl Hash for Ac {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.0.kind.hash(h)
    }
}

impl fmt::Debug for Ac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.printed())
    }
}

impl Kind {
    fn children(&self) -> &[Ac] {
        match self {
            Kind::S(t) => std::slice::from_ref(t),
            Kind::Add(cs) | Kind::Mul(cs) => cs,
            _ => &[],
        }
    }
}

impl Ac {
    /// Builds a node; `weight` may be supplied when the caller already knows it.
    fn build(kind: Kind, weight: Option<Polynomial>) -> Ac {
        let weight = weight.unwrap_or_else(|| match &kind {
            Kind::Zero | Kind::One => Polynomial::constant(2),
            Kind::Var(k) => Polynomial::var(*k),
            Kind::S(t) => t.weight().add(&Polynomial::constant(4)),
            Kind::Add(cs) => cs.iter().fold(Polynomial::constant(cs.len() as i64 - 1), |acc, c| acc.add(c.weight())),
            Kind::Mul(cs) => cs.iter().fold(Polynomial::constant(1), |acc, c| acc.mul(c.weight())),
        });
        let expr = match &kind {
            Kind::Zero => Expr::zero(),
            Kind::One => Expr::one(),
            Kind::Var(k) => Expr::var(*k),
            Kind::S(t) => Expr::s(t.to_expr()),
            Kind::Add(cs) | Kind::Mul(cs) => {
                let op = if matches!(kind, Kind::Add(_)) { Expr::add } else { Expr::mul };
                let mut it = cs.iter();
                let first = it.next().expect("non-empty").to_expr();
                it.fold(first, |acc, c| op(acc, c.to_expr()))
            }
        };
        let normal = kind.children().iter().all(|c| c.0.normal) && root_matches(&kind).is_empty();
        Ac(Arc::new(AcNode { kind, weight, expr, normal, printed: OnceLock::new() }))
    }

    fn zero() -> Ac {
        Ac::build(Kind::Zero, None)
    }

    fn one() -> Ac {
        Ac::build(Kind::One, None)
    }

    fn s(t: Ac) -> Ac {
        Ac::build(Kind::S(t), None)
    }

    fn add(cs: Vec<Ac>) -> Ac {
        Ac::assoc(cs, true, None)
    }

    fn mul(cs: Vec<Ac>) -> Ac {
        Ac::assoc(cs, false, None)
    }

    /// Flattens nested nodes of the same operator and sorts by print string.
    fn assoc(cs: Vec<Ac>, is_add: bool, weight: Option<Polynomial>) -> Ac {
        let mut flat = Vec::with_capacity(cs.len());
        for c in cs {
            match c.kind() {
                Kind::Add(inner) if is_add => flat.extend(inner.iter().cloned()),
                Kind::Mul(inner) if !is_add => flat.extend(inner.iter().cloned()),
                _ => flat.push(c),
            }
        }
        if flat.len() == 1 {
            return flat.pop().expect("one element");
        }
        flat.sort_by(print_cmp);
        Ac::build(if is_add { Kind::Add(flat) } else { Kind::Mul(flat) }, weight)
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    fn children(&self) -> &[Ac] {
        self.kind().children()
    }

    fn with_child(&self, i: usize, new: Ac) -> Ac {
        match self.kind() {
            Kind::S(_) => Ac::s(new),
            Kind::Add(cs) => {
                let w = self.weight().sub(cs[i].weight()).add(new.weight());
                let mut cs = cs.clone();
                cs[i] = new;
                Ac::assoc(cs, true, Some(w))
            }
            Kind::Mul(cs) => {
                let mut cs = cs.clone();
                cs[i] = new;
                Ac::mul(cs)
            }
            _ => unreachable!("leaves have no children"),
        }
    }

    pub fn to_expr(&self) -> Expr {
        self.0.expr.clone()
    }

    fn weight(&self) -> &Polynomial {
        &self.0.weight
    }

    fn printed(&self) -> &str {
        self.0.printed.get_or_init(|| match self.kind() {
            Kind::Zero => "0".to_owned(),
            Kind::One => "1".to_owned(),
            Kind::Var(k) => format!("(v {k})"),
            Kind::S(t) => format!("(S {})", t.printed()),
            Kind::Add(cs) | Kind::Mul(cs) => {
                let mut out = String::from(if matches!(self.kind(), Kind::Add(_)) { "(+" } else { "(*" });
                for c in cs {
                    out.push(' ');
                    out.push_str(c.printed());
                }
                out.push(')');
                out
            }
        })
    }
}

fn print_cmp(a: &Ac, b: &Ac) -> std::cmp::Ordering {
    if Arc::ptr_eq(&a.0, &b.0) {
        return std::cmp::Ordering::Equal;
    }
    a.printed().cmp(b.printed())
}

fn require_term(e: &Expr) -> Result<()> {
    if is_term(e) {
        Ok(())
    } else {
        Err(Error::NotATerm(e.clone()))
    }
}

/// AC-canonical form of a term.
pub fn ac_key(t: &Expr) -> Result<AcKey> {
    require_term(t)?;
    Ok(to_ac(t))
}

fn to_ac(t: &Expr) -> Ac {
    if let Some(k) = t.var_index() {
        return Ac::build(Kind::Var(k), None);
    }
    match t.view() {
        View::Leaf(Ctor::Zero) => Ac::zero(),
        View::Leaf(_) => Ac::one(),
        View::Num(n) => {
            let n: u64 = n.try_into().expect("numeral within rewrite limit");
            (0..n).fold(Ac::zero(), |acc, _| Ac::s(acc))
        }
        View::Un(_, a) => Ac::s(to_ac(a)),
        View::Bin(Ctor::Add, a, b) => Ac::add(vec![to_ac(a), to_ac(b)]),
        View::Bin(_, a, b) => Ac::mul(vec![to_ac(a), to_ac(b)]),
    }
}

pub fn ac_equal(s: &Expr, t: &Expr) -> Result<bool> {
    Ok(ac_key(s)? == ac_key(t)?)
}

/// The five rules, in priority order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Distribute,
    Succ,
    MulOne,
    MulZero,
    AddZero,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::Distribute, Rule::Succ, Rule::MulOne, Rule::MulZero, Rule::AddZero];

    /// Roman numeral label.
    pub fn label(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v"][self as usize]
    }

    /// Left and right sides, with `v`, `v'`, `v''` standing for `t`, `u`, `v`.
    pub fn sides(self) -> (Expr, Expr) {
        let (t, u, v) = (Expr::var(0), Expr::var(1), Expr::var(2));
        match self {
            Rule::Distribute => (
                Expr::mul(t.clone(), Expr::add(u.clone(), v.clone())),
                Expr::add(Expr::mul(t.clone(), u), Expr::mul(t, v)),
            ),
            Rule::Succ => (Expr::s(t.clone()), Expr::add(t, Expr::one())),
            Rule::MulOne => (Expr::mul(Expr::one(), t.clone()), t),
            Rule::MulZero => (Expr::mul(Expr::zero(), t), Expr::zero()),
            Rule::AddZero => (Expr::add(t.clone(), Expr::zero()), t),
        }
    }

    /// `weight(lhs) - weight(rhs)` with `X, Y, Z` the weights of `t, u, v`.
    pub fn weight_delta(self) -> Polynomial {
        let (l, r) = self.sides();
        weight(&l).expect("rule sides are terms").sub(&weight(&r).expect("rule sides are terms"))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Symbolic weight: 0, 1 ↦ 2; a variable with `k` primes ↦ indeterminate
/// `k`; S ↦ X+4; + ↦ X+Y+1; · ↦ XY.
pub fn weight(e: &Expr) -> Result<Polynomial> {
    require_term(e)?;
    Ok(to_ac(e).weight().clone())
}

pub fn weight_at_twos(p: &Polynomial) -> BigInt {
    p.eval(|_| BigInt::from(2))
}

/// One rewrite site: the rule, the path of child indices into the
/// AC-canonical form, and a choice index for the AC match.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Redex {
    rule: Rule,
    path: Vec<usize>,
    choice: (usize, usize),
}

/// Matches of every rule at the root of `t`.
fn root_matches(t: &Kind) -> Vec<(Rule, (usize, usize))> {
    let mut out = Vec::new();
    match t {
        Kind::Mul(cs) => {
            for (i, c) in cs.iter().enumerate() {
                if let Kind::Add(ss) = c.kind() {
                    for j in 0..ss.len() {
                        out.push((Rule::Distribute, (i, j)));
                    }
                }
            }
            if let Some(i) = cs.iter().position(|c| *c.kind() == Kind::One) {
                out.push((Rule::MulOne, (i, 0)));
            }
            if let Some(i) = cs.iter().position(|c| *c.kind() == Kind::Zero) {
                out.push((Rule::MulZero, (i, 0)));
            }
        }
        Kind::S(_) => out.push((Rule::Succ, (0, 0))),
        Kind::Add(cs) => {
            if let Some(i) = cs.iter().position(|c| *c.kind() == Kind::Zero) {
                out.push((Rule::AddZero, (i, 0)));
            }
        }
        _ => {}
    }
    out
}

fn apply_root(t: &Ac, rule: Rule, (i, j): (usize, usize)) -> Ac {
    match (rule, t.kind()) {
        (Rule::Distribute, Kind::Mul(cs)) => {
            let sum = &cs[i];
            let Kind::Add(ss) = sum.kind() else { unreachable!("matched an Add child") };
            let others: Vec<Ac> = cs.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, c)| c.clone()).collect();
            let tt = Ac::mul(others);
            let u = ss[j].clone();
            let rest: Vec<Ac> = ss.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, c)| c.clone()).collect();
            let v = if rest.len() == 1 {
                rest[0].clone()
            } else {
                let w = sum.weight().sub(u.weight()).sub(&Polynomial::constant(1));
                Ac::assoc(rest, true, Some(w))
            };
            Ac::add(vec![Ac::mul(vec![tt.clone(), u]), Ac::mul(vec![tt, v])])
        }
        (Rule::Succ, Kind::S(inner)) => Ac::add(vec![inner.clone(), Ac::one()]),
        (Rule::MulOne, Kind::Mul(cs)) | (Rule::AddZero, Kind::Add(cs)) => {
            let mut cs = cs.clone();
            cs.remove(i);
            if rule == Rule::MulOne {
                Ac::mul(cs)
            } else {
                Ac::add(cs)
            }
        }
        (Rule::MulZero, Kind::Mul(_)) => Ac::zero(),
        _ => unreachable!("rule {rule:?} does not match {t}"),
    }
}

fn subterm<'a>(t: &'a Ac, path: &[usize]) -> &'a Ac {
    path.iter().fold(t, |acc, &i| &acc.children()[i])
}

fn replace(t: &Ac, path: &[usize], new: Ac) -> Ac {
    match path.split_first() {
        None => new,
        Some((&i, rest)) => t.with_child(i, replace(&t.children()[i], rest, new)),
    }
}

fn leftmost_innermost(t: &Ac, path: &mut Vec<usize>) -> Option<Redex> {
    if t.0.normal {
        return None;
    }
    if let Some(i) = t.children().iter().position(|c| !c.0.normal) {
        path.push(i);
        return leftmost_innermost(&t.children()[i], path);
    }
    root_matches(t.kind()).into_iter().min_by_key(|(rule, _)| *rule).map(|(rule, choice)| Redex {
        rule,
        path: path.clone(),
        choice,
    })
}

fn all_redexes(t: &Ac, path: &mut Vec<usize>, out: &mut Vec<Redex>) {
    if t.0.normal {
        return;
    }
    for (rule, choice) in root_matches(t.kind()) {
        out.push(Redex { rule, path: path.clone(), choice });
    }
    for (i, c) in t.children().iter().enumerate() {
        path.push(i);
        all_redexes(c, path, out);
        path.pop();
    }
}

fn apply(t: &Ac, r: &Redex) -> Ac {
    replace(t, &r.path, apply_root(subterm(t, &r.path), r.rule, r.choice))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: Rule,
    pub position: Vec<usize>,
    pub before: Expr,
    pub after: Expr,
    pub weight_before: Polynomial,
    pub weight_after: Polynomial,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    /// Every step lowers the weight evaluated at the all-2s assignment.
    pub fn weights_decrease(&self) -> bool {
        self.non_decreasing_steps() == 0
    }

    /// Steps whose weight at the all-2s assignment does not drop.
    pub fn non_decreasing_steps(&self) -> usize {
        let mut bad = 0;
        let mut prev: Option<(&Polynomial, BigInt)> = None;
        for s in &self.steps {
            let before = match prev.take() {
                Some((p, v)) if *p == s.weight_before => v,
                _ => weight_at_twos(&s.weight_before),
            };
            let after = weight_at_twos(&s.weight_after);
            bad += usize::from(before <= after);
            prev = Some((&s.weight_after, after));
        }
        bad
    }
}

/// One leftmost-innermost step on the AC-canonical form, lowest rule first.
pub fn rewrite_step(e: &Expr) -> Result<Option<(Expr, Rule, Vec<usize>)>> {
    require_term(e)?;
    let t = to_ac(e);
    Ok(leftmost_innermost(&t, &mut Vec::new()).map(|r| (apply(&t, &r).to_expr(), r.rule, r.path)))
}

fn run(e: &Expr, mut pick: impl FnMut(&Ac) -> Option<Redex>) -> Result<(Ac, RewriteTrace)> {
    require_term(e)?;
    let mut t = to_ac(e);
    let mut trace = RewriteTrace::default();
    let mut w = t.weight().clone();
    let mut shown = t.to_expr();
    while let Some(r) = pick(&t) {
        let next = apply(&t, &r);
        let w_next = next.weight().clone();
        let after = next.to_expr();
        trace.steps.push(RewriteStep {
            rule: r.rule,
            position: r.path,
            before: shown,
            after: after.clone(),
            weight_before: w,
            weight_after: w_next.clone(),
        });
        t = next;
        w = w_next;
        shown = after;
    }
    Ok((t, trace))
}

/// Exhaustive leftmost-innermost rewriting.
pub fn normal_form(e: &Expr) -> Result<(Expr, RewriteTrace)> {
    normal_key(e).map(|(t, trace)| (t.to_expr(), trace))
}

/// As [`normal_form`], returning the AC key of the result.
pub fn normal_key(e: &Expr) -> Result<(AcKey, RewriteTrace)> {
    run(e, |t| leftmost_innermost(t, &mut Vec::new()))
}

/// Exhaustive rewriting picking a uniformly random redex (rule, position
/// and AC match) at every step.
pub fn normal_form_random<R: Rng>(e: &Expr, rng: &mut R) -> Result<(Expr, RewriteTrace)> {
    let (t, trace) = run(e, |t| {
        let mut all = Vec::new();
        all_redexes(t, &mut Vec::new(), &mut all);
        if all.is_empty() {
            None
        } else {
            let i = rng.gen_range(0..all.len());
            Some(all.swap_remove(i))
        }
    })?;
    Ok((t.to_expr(), trace))
}

/// Full distributive expansion: S t ↦ p_t + 1, 0 ↦ 0, 1 ↦ 1, variable
/// with `k` primes ↦ `x_k`.
pub fn to_polynomial(t: &Expr) -> Result<Polynomial> {
    require_term(t)?;
    Ok(term_poly(t, &|_| None))
}

/// Expansion where `fixed(k)` supplies a value for variable `k`.
pub(crate) fn term_poly(t: &Expr, fixed: &dyn Fn(usize) -> Option<BigInt>) -> Polynomial {
    if let Some(k) = t.var_index() {
        return fixed(k).map_or_else(|| Polynomial::var(k), Polynomial::constant);
    }
    match t.view() {
        View::Leaf(Ctor::Zero) => Polynomial::zero(),
        View::Leaf(_) => Polynomial::constant(1),
        View::Num(n) => Polynomial::constant(BigInt::from(n.clone())),
        View::Un(_, a) => term_poly(a, fixed).add(&Polynomial::constant(1)),
        View::Bin(Ctor::Add, a, b) => term_poly(a, fixed).add(&term_poly(b, fixed)),
        View::Bin(_, a, b) => term_poly(a, fixed).mul(&term_poly(b, fixed)),
    }
}

/// Decides semiring provability of `s = t` by comparing AC normal forms.
/// The polynomial expansion is computed alongside; the two must agree.
pub fn provably_equal(s: &Expr, t: &Expr) -> Result<bool> {
    let by_poly = to_polynomial(s)? == to_polynomial(t)?;
    if s.size() > REWRITE_NODE_LIMIT || t.size() > REWRITE_NODE_LIMIT {
        return Ok(by_poly);
    }
    let by_rewrite = normal_key(s)?.0 == normal_key(t)?.0;
    assert_eq!(by_rewrite, by_poly, "rewriter and polynomial oracle disagree on {s} = {t}");
    Ok(by_rewrite)
}

/// The three critical pairs of the rule set, instantiated with `t, u, v`
/// as the variables `v, v', v''`.
pub fn critical_pairs() -> Vec<(Expr, Expr)> {
    let (t, u, v) = (Expr::var(0), Expr::var(1), Expr::var(2));
    let one = Expr::one;
    let zero = Expr::zero;
    vec![
        (Expr::add(u.clone(), v.clone()), Expr::add(Expr::mul(one(), u.clone()), Expr::mul(one(), v.clone()))),
        (zero(), Expr::add(Expr::mul(zero(), u.clone()), Expr::mul(zero(), v))),
        (Expr::mul(t.clone(), u.clone()), Expr::add(Expr::mul(t.clone(), u), Expr::mul(t, zero()))),
    ]
}
