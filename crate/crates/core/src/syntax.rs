//! Raw expression trees over the fixed arithmetical signature.
//!
//! Expressions are immutable, reference counted trees. Numerals `S...S0`
//! are stored compactly so that numerals of large codes stay cheap; the
//! compact form is invisible through the public API, which always presents
//! a numeral `n > 0` as an `S` node over the numeral `n - 1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error as ThisError;

use crate::error::{Error, Result};

/// The eleven symbols of the signature, in tag order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ctor {
    Zero,
    One,
    V,
    S,
    Prime,
    Add,
    Mul,
    Eq,
    Not,
    And,
    Forall,
}

impl Ctor {
    pub const ALL: [Ctor; 11] = [
        Ctor::Zero,
        Ctor::One,
        Ctor::V,
        Ctor::S,
        Ctor::Prime,
        Ctor::Add,
        Ctor::Mul,
        Ctor::Eq,
        Ctor::Not,
        Ctor::And,
        Ctor::Forall,
    ];

    /// Generators of arity zero.
    pub const GENERATORS: [Ctor; 3] = [Ctor::Zero, Ctor::One, Ctor::V];

    /// Constructors of positive arity.
    pub const CONSTRUCTORS: [Ctor; 8] =
        [Ctor::S, Ctor::Prime, Ctor::Add, Ctor::Mul, Ctor::Eq, Ctor::Not, Ctor::And, Ctor::Forall];

    pub fn arity(self) -> usize {
        match self {
            Ctor::Zero | Ctor::One | Ctor::V => 0,
            Ctor::S | Ctor::Prime | Ctor::Not => 1,
            _ => 2,
        }
    }

    pub fn tag(self) -> u32 {
        self as u32
    }

    pub fn from_tag(tag: u32) -> Option<Ctor> {
        Ctor::ALL.get(tag as usize).copied()
    }

    /// Symbol used in the alphabet of the sequence representations.
    pub fn symbol(self) -> &'static str {
        match self {
            Ctor::Zero => "0",
            Ctor::One => "1",
            Ctor::V => "v",
            Ctor::S => "S",
            Ctor::Prime => "'",
            Ctor::Add => "+",
            Ctor::Mul => "·",
            Ctor::Eq => "=",
            Ctor::Not => "¬",
            Ctor::And => "∧",
            Ctor::Forall => "∀",
        }
    }

    /// Head keyword in the textual grammar.
    fn keyword(self) -> &'static str {
        match self {
            Ctor::Zero => "0",
            Ctor::One => "1",
            Ctor::V => "v",
            Ctor::S => "S",
            Ctor::Prime => "p",
            Ctor::Add => "+",
            Ctor::Mul => "*",
            Ctor::Eq => "=",
            Ctor::Not => "not",
            Ctor::And => "and",
            Ctor::Forall => "forall",
        }
    }

    pub fn is_term_ctor(self) -> bool {
        matches!(self, Ctor::Zero | Ctor::One | Ctor::V | Ctor::S | Ctor::Prime | Ctor::Add | Ctor::Mul)
    }
}

impl fmt::Display for Ctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(PartialEq, Eq, Hash)]
enum Node {
    Leaf(Ctor),
    /// `S^n(0)` with `n >= 1`.
    Num(BigUint),
    Un(Ctor, Expr),
    Bin(Ctor, Expr, Expr),
}

struct Inner {
    node: Node,
    /// Node count, saturating.
    size: u128,
}

/// A raw expression tree; possibly not well formed.
#[derive(Clone)]
pub struct Expr(Arc<Inner>);

/// Borrowed view of the top constructor of an expression.
pub enum View<'a> {
    Leaf(Ctor),
    /// Numeral `n >= 1`; logically `S` applied to the numeral `n - 1`.
    Num(&'a BigUint),
    Un(Ctor, &'a Expr),
    Bin(Ctor, &'a Expr, &'a Expr),
}

#[allow(clippy::should_implement_trait)]
impl Expr {
    fn mk(node: Node) -> Expr {
        let size = match &node {
            Node::Leaf(_) => 1,
            Node::Num(n) => n.to_u128().and_then(|n| n.checked_add(1)).unwrap_or(u128::MAX),
            Node::Un(_, a) => a.0.size.saturating_add(1),
            Node::Bin(_, a, b) => a.0.size.saturating_add(b.0.size).saturating_add(1),
        };
        Expr(Arc::new(Inner { node, size }))
    }

    pub fn leaf(c: Ctor) -> Expr {
        assert_eq!(c.arity(), 0, "{c:?} is not a generator");
        Expr::mk(Node::Leaf(c))
    }

    pub fn zero() -> Expr {
        Expr::leaf(Ctor::Zero)
    }

    pub fn one() -> Expr {
        Expr::leaf(Ctor::One)
    }

    pub fn v() -> Expr {
        Expr::leaf(Ctor::V)
    }

    /// `v` under `primes` prime applications.
    pub fn var(primes: usize) -> Expr {
        let mut e = Expr::v();
        for _ in 0..primes {
            e = Expr::prime(e);
        }
        e
    }

    pub fn s(a: Expr) -> Expr {
        match &a.0.node {
            Node::Leaf(Ctor::Zero) => Expr::mk(Node::Num(BigUint::one())),
            Node::Num(n) => Expr::mk(Node::Num(n + 1u32)),
            _ => Expr::mk(Node::Un(Ctor::S, a)),
        }
    }

    pub fn prime(a: Expr) -> Expr {
        Expr::mk(Node::Un(Ctor::Prime, a))
    }

    pub fn not(a: Expr) -> Expr {
        Expr::mk(Node::Un(Ctor::Not, a))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::mk(Node::Bin(Ctor::Add, a, b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::mk(Node::Bin(Ctor::Mul, a, b))
    }

    pub fn eq(a: Expr, b: Expr) -> Expr {
        Expr::mk(Node::Bin(Ctor::Eq, a, b))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::mk(Node::Bin(Ctor::And, a, b))
    }

    pub fn forall(x: Expr, body: Expr) -> Expr {
        Expr::mk(Node::Bin(Ctor::Forall, x, body))
    }

    /// `a → b`, written with the primitive connectives as `¬(a ∧ ¬b)`.
    pub fn implies(a: Expr, b: Expr) -> Expr {
        Expr::not(Expr::and(a, Expr::not(b)))
    }

    /// `a ∨ b` as `¬(¬a ∧ ¬b)`.
    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::not(Expr::and(Expr::not(a), Expr::not(b)))
    }

    /// Applies `c` to `kids`; panics on an arity mismatch.
    pub fn app(c: Ctor, kids: &[Expr]) -> Expr {
        assert_eq!(kids.len(), c.arity(), "arity mismatch for {c:?}");
        match c.arity() {
            0 => Expr::leaf(c),
            1 => {
                let a = kids[0].clone();
                match c {
                    Ctor::S => Expr::s(a),
                    _ => Expr::mk(Node::Un(c, a)),
                }
            }
            _ => Expr::mk(Node::Bin(c, kids[0].clone(), kids[1].clone())),
        }
    }

    pub fn view(&self) -> View<'_> {
        match &self.0.node {
            Node::Leaf(c) => View::Leaf(*c),
            Node::Num(n) => View::Num(n),
            Node::Un(c, a) => View::Un(*c, a),
            Node::Bin(c, a, b) => View::Bin(*c, a, b),
        }
    }

    pub fn ctor(&self) -> Ctor {
        match &self.0.node {
            Node::Leaf(c) | Node::Un(c, _) | Node::Bin(c, _, _) => *c,
            Node::Num(_) => Ctor::S,
        }
    }

    /// Immediate children, in order.
    pub fn children(&self) -> Vec<Expr> {
        match &self.0.node {
            Node::Leaf(_) => Vec::new(),
            Node::Num(n) => vec![Expr::numeral_big(&(n - 1u32))],
            Node::Un(_, a) => vec![a.clone()],
            Node::Bin(_, a, b) => vec![a.clone(), b.clone()],
        }
    }

    /// Node count, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        self.0.size
    }

    /// Exact node count.
    pub fn size_big(&self) -> BigUint {
        if self.0.size < u128::MAX {
            return BigUint::from(self.0.size);
        }
        match &self.0.node {
            Node::Leaf(_) => BigUint::one(),
            Node::Num(n) => n + 1u32,
            Node::Un(_, a) => a.size_big() + 1u32,
            Node::Bin(_, a, b) => a.size_big() + b.size_big() + 1u32,
        }
    }

    pub fn numeral(n: u64) -> Expr {
        Expr::numeral_big(&BigUint::from(n))
    }

    pub fn numeral_big(n: &BigUint) -> Expr {
        if n.is_zero() {
            Expr::zero()
        } else {
            Expr::mk(Node::Num(n.clone()))
        }
    }

    /// The value of `e` if it is a numeral `S...S0`.
    pub fn numeral_value(&self) -> Option<BigUint> {
        match &self.0.node {
            Node::Leaf(Ctor::Zero) => Some(BigUint::zero()),
            Node::Num(n) => Some(n.clone()),
            _ => None,
        }
    }

    /// Number of primes if `e` is a variable.
    pub fn var_index(&self) -> Option<usize> {
        let mut e = self;
        let mut k = 0;
        loop {
            match &e.0.node {
                Node::Leaf(Ctor::V) => return Some(k),
                Node::Un(Ctor::Prime, a) => {
                    k += 1;
                    e = a;
                }
                _ => return None,
            }
        }
    }

    pub fn ptr_eq(a: &Expr, b: &Expr) -> bool {
        Arc::ptr_eq(&a.0, &b.0)
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.size == other.0.size && self.0.node == other.0.node)
    }
}

impl Eq for Expr {}

impl Hash for Expr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.node.hash(state)
    }
}

/// Graded order: node count first, then constructor tag, then the
/// children from left to right under the same order.
impl Ord for Expr {
    fn cmp(&self, other: &Self) -> Ordering {
        if Expr::ptr_eq(self, other) {
            return Ordering::Equal;
        }
        let (sa, sb) = (self.0.size, other.0.size);
        let by_size =
            if sa == u128::MAX || sb == u128::MAX { self.size_big().cmp(&other.size_big()) } else { sa.cmp(&sb) };
        if by_size != Ordering::Equal {
            return by_size;
        }
        match self.ctor().cmp(&other.ctor()) {
            Ordering::Equal => {}
            o => return o,
        }
        match (&self.0.node, &other.0.node) {
            (Node::Leaf(_), Node::Leaf(_)) => Ordering::Equal,
            // Equal sizes force equal numerals.
            (Node::Num(a), Node::Num(b)) => a.cmp(b),
            (Node::Un(_, a), Node::Un(_, b)) => a.cmp(b),
            (Node::Bin(_, a1, a2), Node::Bin(_, b1, b2)) => a1.cmp(b1).then_with(|| a2.cmp(b2)),
            // A numeral against an `S` node over a non-numeral.
            _ => {
                let (a, b) = (self.children(), other.children());
                a[0].cmp(&b[0])
            }
        }
    }
}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.node {
            Node::Leaf(Ctor::V) => f.write_str("(v 0)"),
            Node::Leaf(c) => f.write_str(c.keyword()),
            Node::Num(n) => {
                let n = n.to_usize().expect("numeral too large to print");
                for _ in 0..n {
                    f.write_str("(S ")?;
                }
                f.write_str("0")?;
                for _ in 0..n {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Node::Un(Ctor::Prime, a) => match self.var_index() {
                Some(k) => write!(f, "(v {k})"),
                None => write!(f, "(p {a})"),
            },
            Node::Un(c, a) => write!(f, "({} {a})", c.keyword()),
            Node::Bin(c, a, b) => write!(f, "({} {a} {b})", c.keyword()),
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
#[error("syntax error at byte {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> std::result::Result<T, SyntaxError> {
        Err(SyntaxError { offset: at, message: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let b = self.src[self.pos];
            if b.is_ascii_whitespace() || b == b'(' || b == b')' {
                break;
            }
            self.pos += 1;
        }
        // Input came from a &str and we split on ASCII bytes only.
        (start, std::str::from_utf8(&self.src[start..self.pos]).unwrap_or(""))
    }

    fn expect_close(&mut self) -> std::result::Result<(), SyntaxError> {
        self.skip_ws();
        if self.pos < self.src.len() && self.src[self.pos] == b')' {
            self.pos += 1;
            Ok(())
        } else {
            self.err(self.pos, "expected ')'")
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, SyntaxError> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return self.err(self.pos, "unexpected end of input");
        }
        if self.src[self.pos] != b'(' {
            let (at, w) = self.word();
            return match w {
                "0" => Ok(Expr::zero()),
                "1" => Ok(Expr::one()),
                "" => self.err(at, "unexpected ')'"),
                _ => self.err(at, format!("unknown atom '{w}'")),
            };
        }
        self.pos += 1;
        let (at, head) = self.word();
        let e = match head {
            "v" => {
                let (nat_at, n) = self.word();
                let k: usize = match n.parse() {
                    Ok(k) if n.bytes().all(|b| b.is_ascii_digit()) => k,
                    _ => return self.err(nat_at, format!("expected a prime count, got '{n}'")),
                };
                Expr::var(k)
            }
            "S" => Expr::s(self.expr()?),
            "p" => Expr::prime(self.expr()?),
            "not" => Expr::not(self.expr()?),
            "+" | "*" | "=" | "and" | "forall" | "implies" | "or" => {
                let a = self.expr()?;
                let b = self.expr()?;
                match head {
                    "+" => Expr::add(a, b),
                    "*" => Expr::mul(a, b),
                    "=" => Expr::eq(a, b),
                    "and" => Expr::and(a, b),
                    "forall" => Expr::forall(a, b),
                    "implies" => Expr::implies(a, b),
                    _ => Expr::or(a, b),
                }
            }
            "" => return self.err(at, "missing constructor after '('"),
            _ => return self.err(at, format!("unknown constructor '{head}'")),
        };
        self.expect_close()?;
        Ok(e)
    }
}

/// Parses one expression; trailing input other than whitespace is an error.
pub fn parse(text: &str) -> std::result::Result<Expr, SyntaxError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err(p.pos, "trailing input");
    }
    Ok(e)
}

pub fn is_variable(e: &Expr) -> bool {
    e.var_index().is_some()
}

pub fn is_term(e: &Expr) -> bool {
    match e.view() {
        View::Leaf(_) | View::Num(_) => true,
        View::Un(Ctor::S, a) => is_term(a),
        View::Un(Ctor::Prime, _) => is_variable(e),
        View::Bin(Ctor::Add | Ctor::Mul, a, b) => is_term(a) && is_term(b),
        _ => false,
    }
}

/// Built from term equations by ¬, ∧ and ∀ over variables.
pub fn is_formula(e: &Expr) -> bool {
    match e.view() {
        View::Bin(Ctor::Eq, a, b) => is_term(a) && is_term(b),
        View::Un(Ctor::Not, a) => is_formula(a),
        View::Bin(Ctor::And, a, b) => is_formula(a) && is_formula(b),
        View::Bin(Ctor::Forall, x, b) => is_variable(x) && is_formula(b),
        _ => false,
    }
}

pub fn is_sentence(e: &Expr) -> bool {
    is_formula(e) && free_variables(e).is_empty()
}

/// Term-layer expressions: generated from 0, 1, v by S, ', + and ·.
pub fn is_term_layer(e: &Expr) -> bool {
    match e.view() {
        View::Leaf(_) | View::Num(_) => true,
        View::Un(Ctor::S | Ctor::Prime, a) => is_term_layer(a),
        View::Bin(Ctor::Add | Ctor::Mul, a, b) => is_term_layer(a) && is_term_layer(b),
        _ => false,
    }
}

/// Free variables. A variable node is atomic; `∀(x, b)` binds `x` in `b`
/// when `x` is a variable.
pub fn free_variables(e: &Expr) -> BTreeSet<Expr> {
    let mut out = BTreeSet::new();
    collect_free(e, &mut Vec::new(), &mut out);
    out
}

fn collect_free(e: &Expr, bound: &mut Vec<Expr>, out: &mut BTreeSet<Expr>) {
    if is_variable(e) {
        if !bound.contains(e) {
            out.insert(e.clone());
        }
        return;
    }
    match e.view() {
        View::Leaf(_) | View::Num(_) => {}
        View::Un(_, a) => collect_free(a, bound, out),
        View::Bin(Ctor::Forall, x, b) if is_variable(x) => {
            bound.push(x.clone());
            collect_free(b, bound, out);
            bound.pop();
        }
        View::Bin(_, a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
    }
}

/// All proper subexpressions of `e`.
pub fn subexpressions(e: &Expr) -> BTreeSet<Expr> {
    let mut out = BTreeSet::new();
    let mut stack = e.children();
    while let Some(x) = stack.pop() {
        if out.insert(x.clone()) {
            stack.extend(x.children());
        }
    }
    out
}

/// The standard numeral `S^n 0`.
pub fn numeral(n: u64) -> Expr {
    Expr::numeral(n)
}

/// Replaces the free occurrences of the variable `x` in `psi` by the
/// numeral of `n`.
pub fn substitute_numeral(psi: &Expr, x: &Expr, n: &BigUint) -> Result<Expr> {
    if !is_variable(x) {
        return Err(Error::NotAVariable(x.clone()));
    }
    Ok(substitute(psi, x, &Expr::numeral_big(n)))
}

/// Replaces the free occurrences of the variable `x` in `e` by the closed
/// term `t`.
pub fn substitute(e: &Expr, x: &Expr, t: &Expr) -> Expr {
    if e == x {
        return t.clone();
    }
    if is_variable(e) {
        return e.clone();
    }
    match e.view() {
        View::Leaf(_) | View::Num(_) => e.clone(),
        View::Un(c, a) => Expr::app(c, &[substitute(a, x, t)]),
        View::Bin(Ctor::Forall, y, _) if y == x => e.clone(),
        View::Bin(c, a, b) => Expr::app(c, &[substitute(a, x, t), substitute(b, x, t)]),
    }
}

/// Binds the free variables of a formula; the variable with the fewest
/// primes ends up outermost.
pub fn universal_closure(phi: &Expr) -> Result<Expr> {
    if !is_formula(phi) {
        return Err(Error::NotAFormula(phi.clone()));
    }
    let fv = free_variables(phi);
    let mut out = phi.clone();
    for x in fv.into_iter().rev() {
        out = Expr::forall(x, out);
    }
    Ok(out)
}

/// Number of leading negations.
pub fn neg_height(e: &Expr) -> usize {
    let mut k = 0;
    let mut cur = e;
    while let View::Un(Ctor::Not, a) = cur.view() {
        k += 1;
        cur = a;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    #[test]
    fn parses_grammar_cases() {
        assert_eq!(p("(S 0)"), Expr::s(Expr::zero()));
        assert_eq!(p("(= (+ (v 1) 0) (v 1))"), Expr::eq(Expr::add(Expr::var(1), Expr::zero()), Expr::var(1)));
        assert_eq!(p("(forall 0 (= 0 0))").ctor(), Ctor::Forall);
        assert_eq!(p("(p (v 2))"), Expr::var(3));
        assert_eq!(p("(p 0)").to_string(), "(p 0)");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(parse("(S 0").unwrap_err().offset, 4);
        assert_eq!(parse("(Q 0)").unwrap_err().offset, 1);
        assert_eq!(parse("(v x)").unwrap_err().offset, 3);
        assert_eq!(parse("0 0").unwrap_err().offset, 2);
        assert!(parse("").is_err());
    }

    #[test]
    fn sugar_expands_to_primitives() {
        let e = p("(implies (= 0 0) (= 1 1))");
        assert_eq!(e.to_string(), "(not (and (= 0 0) (not (= 1 1))))");
        let e = p("(or (= 0 0) (= 1 1))");
        assert_eq!(e.to_string(), "(not (and (not (= 0 0)) (not (= 1 1))))");
    }

    #[test]
    fn numerals_are_s_chains() {
        let two = numeral(2);
        assert_eq!(two, Expr::s(Expr::s(Expr::zero())));
        assert_eq!(two.to_string(), "(S (S 0))");
        assert_eq!(two.size(), 3);
        assert_eq!(two.children(), vec![numeral(1)]);
        assert_eq!(two.ctor(), Ctor::S);
        let big = Expr::numeral_big(&(BigUint::from(10u32).pow(40)));
        assert_eq!(big.size(), u128::MAX);
        assert_eq!(big.size_big(), BigUint::from(10u32).pow(40) + 1u32);
    }

    #[test]
    fn well_formedness() {
        assert!(is_variable(&Expr::var(2)));
        assert!(!is_term(&p("(forall (v 0) (= 0 0))")));
        assert!(is_sentence(&p("(forall (v 0) (= (+ (v 0) 0) (v 0)))")));
        assert_eq!(free_variables(&p("(= (v 0) 0)")), BTreeSet::from([Expr::v()]));
        assert!(!is_term(&p("(p 0)")));
        assert!(is_term_layer(&p("(p 0)")));
        assert!(!is_formula(&p("(forall 0 (= 0 0))")));
    }

    #[test]
    fn subexpressions_are_proper() {
        assert!(subexpressions(&Expr::zero()).is_empty());
        assert_eq!(subexpressions(&numeral(1)), BTreeSet::from([Expr::zero()]));
        assert_eq!(subexpressions(&p("(= (S 0) 0)")), BTreeSet::from([numeral(1), Expr::zero()]));
    }

    #[test]
    fn substitution_and_closure() {
        let r = substitute_numeral(&p("(= (v 0) 0)"), &Expr::v(), &BigUint::one()).unwrap();
        assert_eq!(r, p("(= (S 0) 0)"));
        assert!(matches!(
            substitute_numeral(&p("(= (v 0) 0)"), &Expr::zero(), &BigUint::one()),
            Err(Error::NotAVariable(_))
        ));
        let bound = p("(and (= (v 0) 0) (forall (v 0) (= (v 0) (v 0))))");
        let r = substitute_numeral(&bound, &Expr::v(), &BigUint::from(2u32)).unwrap();
        assert_eq!(r, p("(and (= (S (S 0)) 0) (forall (v 0) (= (v 0) (v 0))))"));
        assert_eq!(universal_closure(&p("(= (+ (v 0) 0) (v 0))")).unwrap(), p("(forall (v 0) (= (+ (v 0) 0) (v 0)))"));
        assert_eq!(
            universal_closure(&p("(= (v 1) (v 0))")).unwrap(),
            p("(forall (v 0) (forall (v 1) (= (v 1) (v 0))))")
        );
        assert!(universal_closure(&Expr::zero()).is_err());
    }

    #[test]
    fn graded_order_basics() {
        assert!(Expr::zero() < Expr::one());
        assert!(Expr::one() < Expr::v());
        assert!(Expr::v() < numeral(1));
        assert!(numeral(1) < Expr::s(Expr::one()));
        assert!(Expr::s(Expr::v()) < Expr::var(1));
        assert!(numeral(3) > Expr::add(Expr::zero(), Expr::zero()));
        assert!(Expr::s(Expr::add(Expr::zero(), Expr::zero())) > numeral(3));
        assert_eq!(neg_height(&p("(not (not (= 0 0)))")), 2);
        assert_eq!(neg_height(&p("(= 0 0)")), 0);
    }
}
