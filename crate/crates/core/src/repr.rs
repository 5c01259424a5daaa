//! Alternative representations of expressions: prefix symbol sequences
//! (with or without the empty word) and nested-pair S-expressions.
//! Trees are canonical; every other style converts through them.

use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{Ctor, Expr, View};

/// Largest expression materialised into a flat representation.
const MAX_REPR_NODES: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Style {
    Tree,
    Sequence,
    SequenceWithEmpty,
    SExpr,
}

impl Style {
    pub const ALL: [Style; 4] = [Style::Tree, Style::Sequence, Style::SequenceWithEmpty, Style::SExpr];
}

/// Nested pairs over constructor atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SVal {
    Atom(Ctor),
    Pair(Box<SVal>, Box<SVal>),
}

impl SVal {
    fn pair(a: SVal, b: SVal) -> SVal {
        SVal::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for SVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SVal::Atom(c) => write!(f, "{c}"),
            SVal::Pair(a, b) => write!(f, "P({a}, {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Tree(Expr),
    Symbols(Vec<Ctor>),
    Pairs(SVal),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReprValue {
    pub style: Style,
    pub payload: Payload,
}

pub fn to_representation(e: &Expr, style: Style) -> Result<ReprValue> {
    if style != Style::Tree && e.size() > MAX_REPR_NODES {
        return Err(Error::CodeTooLarge(format!("{} nodes", e.size_big())));
    }
    let payload = match style {
        Style::Tree => Payload::Tree(e.clone()),
        Style::Sequence | Style::SequenceWithEmpty => {
            let mut out = Vec::new();
            let mut stack = vec![e.clone()];
            while let Some(x) = stack.pop() {
                out.push(x.ctor());
                stack.extend(x.children().into_iter().rev());
            }
            Payload::Symbols(out)
        }
        Style::SExpr => Payload::Pairs(to_pairs(e)),
    };
    Ok(ReprValue { style, payload })
}

fn to_pairs(e: &Expr) -> SVal {
    match e.view() {
        View::Leaf(c) => SVal::Atom(c),
        View::Num(_) | View::Un(..) => SVal::pair(SVal::Atom(e.ctor()), to_pairs(&e.children()[0])),
        View::Bin(c, a, b) => SVal::pair(SVal::Atom(c), SVal::pair(to_pairs(a), to_pairs(b))),
    }
}

pub fn from_representation(r: &ReprValue) -> Result<Expr> {
    match (&r.payload, r.style) {
        (Payload::Tree(e), Style::Tree) => Ok(e.clone()),
        (Payload::Symbols(syms), Style::Sequence | Style::SequenceWithEmpty) => from_prefix(syms),
        (Payload::Pairs(p), Style::SExpr) => from_pairs(p),
        _ => Err(Error::IllFormedPayload(format!("payload does not match style {:?}", r.style))),
    }
}

fn from_prefix(syms: &[Ctor]) -> Result<Expr> {
    if syms.is_empty() {
        return Err(Error::IllFormedPayload("empty sequence".into()));
    }
    // Right-to-left evaluation with an operand stack.
    let mut stack: Vec<Expr> = Vec::new();
    for &c in syms.iter().rev() {
        let k = c.arity();
        if stack.len() < k {
            return Err(Error::IllFormedPayload(format!("{c} lacks operands")));
        }
        let mut kids = Vec::with_capacity(k);
        for _ in 0..k {
            kids.push(stack.pop().expect("checked length"));
        }
        stack.push(Expr::app(c, &kids));
    }
    match stack.len() {
        1 => Ok(stack.pop().expect("one element")),
        n => Err(Error::IllFormedPayload(format!("{n} expressions in one sequence"))),
    }
}

fn from_pairs(p: &SVal) -> Result<Expr> {
    match p {
        SVal::Atom(c) if c.arity() == 0 => Ok(Expr::leaf(*c)),
        SVal::Atom(c) => Err(Error::IllFormedPayload(format!("bare constructor {c}"))),
        SVal::Pair(head, rest) => {
            let SVal::Atom(c) = **head else {
                return Err(Error::IllFormedPayload("pair head is not an atom".into()));
            };
            match (c.arity(), &**rest) {
                (1, child) => Ok(Expr::app(c, &[from_pairs(child)?])),
                (2, SVal::Pair(a, b)) => Ok(Expr::app(c, &[from_pairs(a)?, from_pairs(b)?])),
                _ => Err(Error::IllFormedPayload(format!("bad operands for {c}"))),
            }
        }
    }
}

/// The constructor `c` as it acts inside a representation style.
pub fn simulate(style: Style, c: Ctor, args: &[ReprValue]) -> Result<ReprValue> {
    if args.len() != c.arity() {
        return Err(Error::IllFormedPayload(format!("{c} takes {} operands", c.arity())));
    }
    if args.iter().any(|a| a.style != style) {
        return Err(Error::IllFormedPayload("mixed styles".into()));
    }
    let payload = match style {
        Style::Tree => {
            let kids = args.iter().map(from_representation).collect::<Result<Vec<_>>>()?;
            Payload::Tree(Expr::app(c, &kids))
        }
        Style::Sequence | Style::SequenceWithEmpty => {
            // With the empty word the fold starts from the unit.
            let mut out = match style {
                Style::SequenceWithEmpty => concat(Vec::new(), vec![c]),
                _ => vec![c],
            };
            for a in args {
                let Payload::Symbols(s) = &a.payload else {
                    return Err(Error::IllFormedPayload("expected symbols".into()));
                };
                out = concat(out, s.clone());
            }
            Payload::Symbols(out)
        }
        Style::SExpr => {
            let mut parts = Vec::new();
            for a in args {
                let Payload::Pairs(p) = &a.payload else {
                    return Err(Error::IllFormedPayload("expected pairs".into()));
                };
                parts.push(p.clone());
            }
            let atom = SVal::Atom(c);
            Payload::Pairs(match parts.len() {
                0 => atom,
                1 => SVal::pair(atom, parts.pop().expect("one part")),
                _ => {
                    let b = parts.pop().expect("two parts");
                    let a = parts.pop().expect("two parts");
                    SVal::pair(atom, SVal::pair(a, b))
                }
            })
        }
    };
    Ok(ReprValue { style, payload })
}

fn concat(mut a: Vec<Ctor>, b: Vec<Ctor>) -> Vec<Ctor> {
    a.extend(b);
    a
}
