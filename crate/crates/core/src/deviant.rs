//! Deviant numberings. Codes are placed in affine slots over the pairing
//! function so that a residue test on the code decides provability
//! (`delta-neg`, `delta-star`) or truth (`delta-forall`).
//!
//! The dense enumerations inside each scheme (negations, the base layer,
//! universal sentences) are lazy [`MemberTable`]s capped at a node count.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::numbering::{check_arity, no_tracker, not_in_image, Numbering};
use crate::order::{contains, residual_rank, residual_unrank, Cat, MemberTable, Universe};
use crate::pairing::{pair, unpair};
use crate::rewrite::provably_equal;
use crate::syntax::{free_variables, is_sentence, is_term, is_term_layer, is_variable, Ctor, Expr, View};
use crate::truth::{eval_closed_term, Oracle, Truth, Verdict};
use crate::Code;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Neg,
    Forall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Lambda,
    Theta,
    Upsilon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotCat {
    Tm,
    Eq,
    Not,
    And,
    Forall,
}

/// `(family, category, multiplier, offset)`.
type SlotRow = (Family, SlotCat, u32, u32);

const NEG_SLOTS: [SlotRow; 9] = [
    (Family::Lambda, SlotCat::Eq, 8, 0),
    (Family::Lambda, SlotCat::Not, 8, 2),
    (Family::Lambda, SlotCat::And, 8, 4),
    (Family::Lambda, SlotCat::Forall, 8, 6),
    (Family::Theta, SlotCat::Tm, 10, 1),
    (Family::Theta, SlotCat::Eq, 10, 3),
    (Family::Theta, SlotCat::Not, 10, 5),
    (Family::Theta, SlotCat::And, 10, 7),
    (Family::Theta, SlotCat::Forall, 10, 9),
];

const FORALL_SLOTS: [SlotRow; 13] = [
    (Family::Lambda, SlotCat::Eq, 12, 0),
    (Family::Lambda, SlotCat::Not, 12, 3),
    (Family::Lambda, SlotCat::And, 12, 6),
    (Family::Lambda, SlotCat::Forall, 12, 9),
    (Family::Theta, SlotCat::Eq, 12, 1),
    (Family::Theta, SlotCat::Not, 12, 4),
    (Family::Theta, SlotCat::And, 12, 7),
    (Family::Theta, SlotCat::Forall, 12, 10),
    (Family::Upsilon, SlotCat::Tm, 15, 2),
    (Family::Upsilon, SlotCat::Eq, 15, 5),
    (Family::Upsilon, SlotCat::Not, 15, 8),
    (Family::Upsilon, SlotCat::And, 15, 11),
    (Family::Upsilon, SlotCat::Forall, 15, 14),
];

pub fn slot_table(scheme: Scheme) -> &'static [SlotRow] {
    match scheme {
        Scheme::Neg => &NEG_SLOTS,
        Scheme::Forall => &FORALL_SLOTS,
    }
}

/// `mult * <x, y> + offset` for the slot, if the scheme has it.
pub fn slot(scheme: Scheme, family: Family, cat: SlotCat, x: &Code, y: &Code) -> Option<Code> {
    slot_table(scheme).iter().find(|r| r.0 == family && r.1 == cat).map(|&(_, _, m, o)| pair(x, y) * m + o)
}

fn slot_u(scheme: Scheme, family: Family, cat: SlotCat, x: &Code, y: &Code) -> Code {
    slot(scheme, family, cat, x, y).expect("slot exists in scheme")
}

/// Every slot containing `c`, with its unpaired arguments.
pub fn slots_of(scheme: Scheme, c: &Code) -> Vec<(Family, SlotCat, Code, Code)> {
    slot_table(scheme)
        .iter()
        .filter_map(|&(f, k, m, o)| {
            if *c < Code::from(o) {
                return None;
            }
            let (q, r) = (c - o).div_rem(&Code::from(m));
            if !r.is_zero() {
                return None;
            }
            unpair(&q).ok().map(|(x, y)| (f, k, x, y))
        })
        .collect()
}

/// The unique slot containing `c`.
pub fn slot_of(scheme: Scheme, c: &Code) -> Option<(Family, SlotCat, Code, Code)> {
    slots_of(scheme, c).into_iter().next()
}

/// Largest exponent `term_code` will materialise.
pub const MAX_TERM_EXPONENT: u64 = 200_000;

fn capped_pow(base: u32, e: &Code) -> Result<Code> {
    match e.to_u64().filter(|&e| e <= MAX_TERM_EXPONENT) {
        Some(e) => Ok(Code::from(base).pow(e as u32)),
        None => Err(Error::CodeTooLarge(format!("term exponent of {} bits exceeds {MAX_TERM_EXPONENT}", e.bits()))),
    }
}

fn term_track(c: Ctor, args: &[Code]) -> Result<Code> {
    Ok(match c {
        Ctor::Zero => Code::from(1u32),
        Ctor::One => Code::from(2u32),
        Ctor::V => Code::from(3u32),
        Ctor::S => capped_pow(3, &args[0])? << 1u32,
        Ctor::Prime => capped_pow(3, &args[0])? << 2u32,
        Ctor::Add => (capped_pow(3, &args[0])? * capped_pow(5, &args[1])?) << 3u32,
        Ctor::Mul => (capped_pow(3, &args[0])? * capped_pow(5, &args[1])?) << 4u32,
        _ => unreachable!("term tracker for {c}"),
    })
}

/// The term-layer code: leaves 1, 2, 3 and prime-power trackers.
pub fn term_code(t: &Expr) -> Result<Code> {
    if !is_term_layer(t) {
        return Err(Error::NotTermLayer(t.clone()));
    }
    fn go(t: &Expr) -> Result<Code> {
        if let Some(n) = t.numeral_value() {
            let mut c = Code::from(1u32);
            let mut i = Code::zero();
            while i < n {
                c = term_track(Ctor::S, &[c])?;
                i += 1u32;
            }
            return Ok(c);
        }
        let kids = t.children().iter().map(go).collect::<Result<Vec<_>>>()?;
        term_track(t.ctor(), &kids)
    }
    go(t)
}

/// `(v, c / p^v)` with `p^v` the largest power dividing `c`.
fn valuation(c: &Code, p: u32) -> (Code, Code) {
    let mut rest = c.clone();
    let mut pows = Vec::new();
    let mut q = Code::from(p);
    while (&rest % &q).is_zero() {
        pows.push(q.clone());
        q = &q * &q;
    }
    let mut v = Code::zero();
    for (i, q) in pows.iter().enumerate().rev() {
        if (&rest % q).is_zero() {
            rest /= q;
            v += Code::one() << i;
        }
    }
    (v, rest)
}

fn bad_term_code(c: &Code) -> Error {
    Error::NotInImage { numbering: "delta-tm".into(), code: c.clone() }
}

pub fn term_decode(c: &Code) -> Result<Expr> {
    match c.to_u32() {
        Some(1) => return Ok(Expr::zero()),
        Some(2) => return Ok(Expr::one()),
        Some(3) => return Ok(Expr::v()),
        _ => {}
    }
    if c.is_zero() {
        return Err(bad_term_code(c));
    }
    let tz = c.trailing_zeros().unwrap_or(0);
    let rest = c >> tz;
    let (n, rest) = valuation(&rest, 3);
    let (m, rest) = valuation(&rest, 5);
    let cap = Code::from(MAX_TERM_EXPONENT);
    if !rest.is_one() || n.is_zero() || n > cap || m > cap {
        return Err(bad_term_code(c));
    }
    let unary = m.is_zero();
    Ok(match (tz, unary) {
        (1, true) => Expr::s(term_decode(&n)?),
        (2, true) => Expr::prime(term_decode(&n)?),
        (3, false) => Expr::add(term_decode(&n)?, term_decode(&m)?),
        (4, false) => Expr::mul(term_decode(&n)?, term_decode(&m)?),
        _ => return Err(bad_term_code(c)),
    })
}

fn unsupported(name: &str, e: &Expr) -> Error {
    Error::UnsupportedShape { numbering: name.to_string(), expr: e.clone() }
}

fn bin(e: &Expr) -> (Expr, Expr) {
    let k = e.children();
    (k[0].clone(), k[1].clone())
}

fn is_closed_term(e: &Expr) -> bool {
    is_term(e) && free_variables(e).is_empty()
}

/// Term from a code in the term slot `(family, Tm, 0, t)`.
fn slot_term(scheme: Scheme, family: Family, c: &Code) -> Option<Expr> {
    match slot_of(scheme, c)? {
        (f, SlotCat::Tm, x, t) if f == family && x.is_zero() => term_decode(&t).ok(),
        _ => None,
    }
}

fn term_slot_track(scheme: Scheme, family: Family, c: Ctor, args: &[Code], name: &str) -> Result<Code> {
    let mut inner = Vec::with_capacity(args.len());
    for a in args {
        match slot_of(scheme, a) {
            Some((f, SlotCat::Tm, x, t)) if f == family && x.is_zero() => inner.push(t),
            _ => return Err(Error::NotInImage { numbering: name.to_string(), code: a.clone() }),
        }
    }
    Ok(slot_u(scheme, family, SlotCat::Tm, &Code::zero(), &term_track(c, &inner)?))
}

// ---------------------------------------------------------------- delta-neg

/// Codes of fragment theorems are even. Every constructor except `¬` has
/// a closed-form tracker.
pub struct DeltaNeg {
    oracle: Arc<Oracle>,
    provable_neg: Arc<MemberTable>,
}

fn neg_universe() -> Universe {
    Universe::head(Cat::Gen, Ctor::Not)
}

pub fn delta_neg(oracle: Arc<Oracle>, limit: usize) -> DeltaNeg {
    let o = oracle.clone();
    let table =
        MemberTable::new("delta-neg provable negations", Universe::head(Cat::Form, Ctor::Not), limit, move |e| match o
            .closure_verdict(e)
        {
            Verdict::Provable => Some(true),
            Verdict::Unknown => None,
            _ => Some(false),
        });
    DeltaNeg { oracle, provable_neg: Arc::new(table) }
}

impl DeltaNeg {
    pub fn oracle(&self) -> &Arc<Oracle> {
        &self.oracle
    }

    fn enc(&self, e: &Expr) -> Result<Code> {
        use SlotCat as K;
        let s = Scheme::Neg;
        if is_term_layer(e) {
            return Ok(slot_u(s, Family::Theta, K::Tm, &Code::zero(), &term_code(e)?));
        }
        let lam = |b: bool| if b { Family::Lambda } else { Family::Theta };
        match e.ctor() {
            Ctor::Eq => {
                let (a, b) = bin(e);
                let (ca, cb) = (self.enc(&a)?, self.enc(&b)?);
                let thm = is_term(&a) && is_term(&b) && provably_equal(&a, &b)?;
                Ok(slot_u(s, lam(thm), K::Eq, &ca, &cb))
            }
            Ctor::And => {
                let (a, b) = bin(e);
                let (ca, cb) = (self.enc(&a)?, self.enc(&b)?);
                let thm = ca.is_even() && cb.is_even();
                Ok(slot_u(s, lam(thm), K::And, &ca, &cb))
            }
            Ctor::Forall => {
                let (x, b) = bin(e);
                let (cx, cb) = (self.enc(&x)?, self.enc(&b)?);
                let thm = is_variable(&x) && cb.is_even();
                Ok(slot_u(s, lam(thm), K::Forall, &cx, &cb))
            }
            Ctor::Not => {
                let t = &self.provable_neg;
                if t.is_member(e)? {
                    Ok(slot_u(s, Family::Lambda, K::Not, &Code::zero(), &t.members_before(e)?))
                } else {
                    let r = residual_rank(&neg_universe(), &[t], e)?;
                    Ok(slot_u(s, Family::Theta, K::Not, &Code::zero(), &r))
                }
            }
            _ => Err(unsupported(self.name(), e)),
        }
    }

    fn dec(&self, c: &Code) -> Result<Expr> {
        let (f, k, x, y) = slot_of(Scheme::Neg, c).ok_or_else(|| not_in_image(self, c))?;
        Ok(match k {
            SlotCat::Tm if x.is_zero() => term_decode(&y).map_err(|_| not_in_image(self, c))?,
            SlotCat::Eq => Expr::eq(self.dec(&x)?, self.dec(&y)?),
            SlotCat::And => Expr::and(self.dec(&x)?, self.dec(&y)?),
            SlotCat::Forall => Expr::forall(self.dec(&x)?, self.dec(&y)?),
            SlotCat::Not if x.is_zero() => match f {
                Family::Lambda => self.provable_neg.nth(&y)?,
                _ => residual_unrank(&neg_universe(), &[&self.provable_neg], &y)?,
            },
            _ => return Err(not_in_image(self, c)),
        })
    }

    /// `h`: the number of distinct subformulas of the coded expression,
    /// by recursion on the slot structure.
    pub fn subformula_count(&self, c: &Code) -> Result<usize> {
        self.decode(c)?;
        let mut seen = BTreeSet::new();
        self.sub_codes(c, &mut seen)?;
        Ok(seen.len())
    }

    fn sub_codes(&self, c: &Code, seen: &mut BTreeSet<Code>) -> Result<()> {
        let (_, k, x, y) = slot_of(Scheme::Neg, c).ok_or_else(|| not_in_image(self, c))?;
        if k == SlotCat::Tm || !seen.insert(c.clone()) {
            return Ok(());
        }
        if k == SlotCat::Not {
            let child = self.dec(c)?.children().remove(0);
            return self.sub_codes(&self.enc(&child)?, seen);
        }
        self.sub_codes(&x, seen)?;
        self.sub_codes(&y, seen)
    }
}

impl Numbering for DeltaNeg {
    fn name(&self) -> &str {
        "delta-neg"
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        if !contains(Cat::Gen, e) {
            return Err(unsupported(self.name(), e));
        }
        self.enc(e)
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let e = self.dec(c)?;
        match self.encode(&e) {
            Ok(d) if &d == c => Ok(e),
            _ => Err(not_in_image(self, c)),
        }
    }

    fn trackers(&self) -> Vec<Ctor> {
        Ctor::ALL.into_iter().filter(|&c| c != Ctor::Not).collect()
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        check_arity(c, args)?;
        let s = Scheme::Neg;
        let lam = |b: bool| if b { Family::Lambda } else { Family::Theta };
        match c {
            Ctor::Not => Err(no_tracker(self, c)),
            Ctor::Eq => {
                let thm = match (slot_term(s, Family::Theta, &args[0]), slot_term(s, Family::Theta, &args[1])) {
                    (Some(a), Some(b)) => is_term(&a) && is_term(&b) && provably_equal(&a, &b)?,
                    _ => false,
                };
                Ok(slot_u(s, lam(thm), SlotCat::Eq, &args[0], &args[1]))
            }
            Ctor::And => {
                let thm = pr_delta_neg(&args[0]) && pr_delta_neg(&args[1]);
                Ok(slot_u(s, lam(thm), SlotCat::And, &args[0], &args[1]))
            }
            Ctor::Forall => {
                let var = slot_term(s, Family::Theta, &args[0]).is_some_and(|x| is_variable(&x));
                let thm = var && pr_delta_neg(&args[1]);
                Ok(slot_u(s, lam(thm), SlotCat::Forall, &args[0], &args[1]))
            }
            _ => term_slot_track(s, Family::Theta, c, args, self.name()),
        }
    }
}

/// Distinct Lambda-slot codes of a derivation of `c`, ascending; `None`
/// when no derivation exists.
pub fn pr_delta_neg_witness(c: &Code) -> Option<Vec<Code>> {
    fn go(c: &Code, out: &mut BTreeSet<Code>) -> bool {
        if out.contains(c) {
            return true;
        }
        let Some((Family::Lambda, k, x, y)) = slot_of(Scheme::Neg, c) else {
            return false;
        };
        let ok = match k {
            SlotCat::Not => x.is_zero(),
            SlotCat::Eq => match (slot_term(Scheme::Neg, Family::Theta, &x), slot_term(Scheme::Neg, Family::Theta, &y))
            {
                (Some(p), Some(q)) => is_term(&p) && is_term(&q) && provably_equal(&p, &q).unwrap_or(false),
                _ => false,
            },
            SlotCat::And => go(&x, out) && go(&y, out),
            SlotCat::Forall => {
                slot_term(Scheme::Neg, Family::Theta, &x).is_some_and(|v| is_variable(&v)) && go(&y, out)
            }
            SlotCat::Tm => false,
        };
        if ok {
            out.insert(c.clone());
        }
        ok
    }
    let mut out = BTreeSet::new();
    if !go(c, &mut out) {
        return None;
    }
    let w: Vec<Code> = out.into_iter().collect();
    (w.len() <= formula_slot_count(c)).then_some(w)
}

/// Distinct formula-slot codes reachable through the slot arguments,
/// without entering negation enumerations. A lower bound for `h`.
fn formula_slot_count(c: &Code) -> usize {
    fn go(c: &Code, seen: &mut BTreeSet<Code>) {
        let Some((_, k, x, y)) = slot_of(Scheme::Neg, c) else { return };
        if k == SlotCat::Tm || !seen.insert(c.clone()) || k == SlotCat::Not {
            return;
        }
        go(&x, seen);
        go(&y, seen);
    }
    let mut seen = BTreeSet::new();
    go(c, &mut seen);
    seen.len()
}

/// The provability predicate for `delta-neg`: a bounded derivation of
/// Lambda-slot codes.
pub fn pr_delta_neg(c: &Code) -> bool {
    pr_delta_neg_witness(c).is_some()
}

// --------------------------------------------------------------- delta-star

/// Base layer in residues mod 3 by classification; each `¬` moves to the
/// next pair row and swaps provable and refutable.
pub struct DeltaStar {
    oracle: Arc<Oracle>,
    provable: Arc<MemberTable>,
    refutable: Arc<MemberTable>,
}

fn base_universe() -> Universe {
    Universe::except(Cat::Any, Ctor::Not)
}

/// Largest negation row `decode` will unfold.
pub const MAX_NEG_ROW: u64 = 1 << 16;

pub fn delta_star(oracle: Arc<Oracle>, limit: usize) -> DeltaStar {
    let table = |name: &str, want: Verdict| {
        let o = oracle.clone();
        Arc::new(MemberTable::new(name, Universe::except(Cat::Form, Ctor::Not), limit, move |e| {
            if !is_sentence(e) {
                return Some(false);
            }
            match o.verdict(e) {
                Verdict::Unknown => None,
                v => Some(v == want),
            }
        }))
    };
    let provable = table("delta-star theorems", Verdict::Provable);
    let refutable = table("delta-star refutables", Verdict::Refutable);
    DeltaStar { oracle, provable, refutable }
}

fn swap(r: u32, times: u64) -> u32 {
    if r == 2 || times.is_multiple_of(2) {
        r
    } else {
        1 - r
    }
}

impl DeltaStar {
    pub fn oracle(&self) -> &Arc<Oracle> {
        &self.oracle
    }

    /// `(j, r)` for a non-negation.
    fn base(&self, e: &Expr) -> Result<(Code, u32)> {
        if self.provable.is_member(e)? {
            return Ok((self.provable.members_before(e)?, 0));
        }
        if self.refutable.is_member(e)? {
            return Ok((self.refutable.members_before(e)?, 1));
        }
        Ok((residual_rank(&base_universe(), &[&self.provable, &self.refutable], e)?, 2))
    }

    /// `(row, j, residue)` of a code.
    pub fn layout(c: &Code) -> Option<(Code, Code, u32)> {
        let (q, r) = c.div_rem(&Code::from(3u32));
        let (i, j) = unpair(&q).ok()?;
        Some((i, j, r.to_u32().expect("residue")))
    }
}

impl Numbering for DeltaStar {
    fn name(&self) -> &str {
        "delta-star"
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        let mut h = 0u64;
        let mut core = e.clone();
        while let View::Un(Ctor::Not, a) = core.view() {
            let a = a.clone();
            core = a;
            h += 1;
        }
        let (j, r) = self.base(&core)?;
        Ok(pair(&Code::from(h), &j) * 3u32 + swap(r, h))
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let (i, j, r) = DeltaStar::layout(c).ok_or_else(|| not_in_image(self, c))?;
        let i =
            i.to_u64().filter(|&i| i <= MAX_NEG_ROW).ok_or_else(|| Error::CodeTooLarge(format!("negation row {i}")))?;
        let mut e = match swap(r, i) {
            0 => self.provable.nth(&j)?,
            1 => self.refutable.nth(&j)?,
            _ => residual_unrank(&base_universe(), &[&self.provable, &self.refutable], &j)?,
        };
        for _ in 0..i {
            e = Expr::not(e);
        }
        Ok(e)
    }

    fn trackers(&self) -> Vec<Ctor> {
        vec![Ctor::Not]
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        check_arity(c, args)?;
        if c != Ctor::Not {
            return Err(no_tracker(self, c));
        }
        let (i, j, r) = DeltaStar::layout(&args[0]).ok_or_else(|| not_in_image(self, &args[0]))?;
        Ok(pair(&(i + 1u32), &j) * 3u32 + swap(r, 1))
    }
}

/// `exists y < x. x = 3y`.
pub fn pr_delta_star(c: &Code) -> bool {
    !c.is_zero() && (c % 3u32).is_zero()
}

// ------------------------------------------------------------- delta-forall

/// True sentences get codes in `3N`, false ones `3N+1`, everything else
/// `3N+2`. Every constructor except `∀` has a closed-form tracker.
pub struct DeltaForall {
    oracle: Arc<Oracle>,
    true_all: Arc<MemberTable>,
    false_all: Arc<MemberTable>,
}

fn forall_universe() -> Universe {
    Universe::head(Cat::Gen, Ctor::Forall)
}

pub fn delta_forall(oracle: Arc<Oracle>, limit: usize) -> DeltaForall {
    let cache: Arc<RwLock<HashMap<Expr, Truth>>> = Arc::default();
    let table = |name: &str, want: Truth| {
        let (o, cache) = (oracle.clone(), cache.clone());
        Arc::new(MemberTable::new(name, Universe::head(Cat::Form, Ctor::Forall), limit, move |e| {
            if !is_sentence(e) {
                return Some(false);
            }
            let cached = cache.read().get(e).copied();
            let t = match cached {
                Some(t) => t,
                None => {
                    let t = o.truth(e).unwrap_or(Truth::Unknown);
                    cache.write().insert(e.clone(), t);
                    t
                }
            };
            match t {
                Truth::Unknown => None,
                t => Some(t == want),
            }
        }))
    };
    let true_all = table("delta-forall true universals", Truth::True);
    let false_all = table("delta-forall false universals", Truth::False);
    DeltaForall { oracle, true_all, false_all }
}

fn residue_family(c: &Code) -> Family {
    match (c % 3u32).to_u32() {
        Some(0) => Family::Lambda,
        Some(1) => Family::Theta,
        _ => Family::Upsilon,
    }
}

impl DeltaForall {
    pub fn oracle(&self) -> &Arc<Oracle> {
        &self.oracle
    }

    fn eq_family(a: &Expr, b: &Expr) -> Result<Family> {
        if is_closed_term(a) && is_closed_term(b) {
            let t = eval_closed_term(a)? == eval_closed_term(b)?;
            Ok(if t { Family::Lambda } else { Family::Theta })
        } else {
            Ok(Family::Upsilon)
        }
    }

    fn not_family(c: &Code) -> Family {
        match residue_family(c) {
            Family::Lambda => Family::Theta,
            Family::Theta => Family::Lambda,
            Family::Upsilon => Family::Upsilon,
        }
    }

    fn and_family(a: &Code, b: &Code) -> Family {
        match (residue_family(a), residue_family(b)) {
            (Family::Upsilon, _) | (_, Family::Upsilon) => Family::Upsilon,
            (Family::Lambda, Family::Lambda) => Family::Lambda,
            _ => Family::Theta,
        }
    }

    fn enc(&self, e: &Expr) -> Result<Code> {
        use SlotCat as K;
        let s = Scheme::Forall;
        let zero = Code::zero();
        if is_term_layer(e) {
            return Ok(slot_u(s, Family::Upsilon, K::Tm, &zero, &term_code(e)?));
        }
        match e.ctor() {
            Ctor::Eq => {
                let (a, b) = bin(e);
                let (ca, cb) = (self.enc(&a)?, self.enc(&b)?);
                Ok(slot_u(s, DeltaForall::eq_family(&a, &b)?, K::Eq, &ca, &cb))
            }
            Ctor::Not => {
                let c = self.enc(&e.children()[0])?;
                Ok(slot_u(s, DeltaForall::not_family(&c), K::Not, &zero, &c))
            }
            Ctor::And => {
                let (a, b) = bin(e);
                let (ca, cb) = (self.enc(&a)?, self.enc(&b)?);
                Ok(slot_u(s, DeltaForall::and_family(&ca, &cb), K::And, &ca, &cb))
            }
            Ctor::Forall => {
                let (t, f) = (&self.true_all, &self.false_all);
                if t.is_member(e)? {
                    Ok(slot_u(s, Family::Lambda, K::Forall, &zero, &t.members_before(e)?))
                } else if f.is_member(e)? {
                    Ok(slot_u(s, Family::Theta, K::Forall, &zero, &f.members_before(e)?))
                } else {
                    let r = residual_rank(&forall_universe(), &[t, f], e)?;
                    Ok(slot_u(s, Family::Upsilon, K::Forall, &zero, &r))
                }
            }
            _ => Err(unsupported(self.name(), e)),
        }
    }

    fn dec(&self, c: &Code) -> Result<Expr> {
        let (f, k, x, y) = slot_of(Scheme::Forall, c).ok_or_else(|| not_in_image(self, c))?;
        Ok(match k {
            SlotCat::Tm if x.is_zero() => term_decode(&y).map_err(|_| not_in_image(self, c))?,
            SlotCat::Eq => Expr::eq(self.dec(&x)?, self.dec(&y)?),
            SlotCat::Not if x.is_zero() => Expr::not(self.dec(&y)?),
            SlotCat::And => Expr::and(self.dec(&x)?, self.dec(&y)?),
            SlotCat::Forall if x.is_zero() => match f {
                Family::Lambda => self.true_all.nth(&y)?,
                Family::Theta => self.false_all.nth(&y)?,
                Family::Upsilon => residual_unrank(&forall_universe(), &[&self.true_all, &self.false_all], &y)?,
            },
            _ => return Err(not_in_image(self, c)),
        })
    }
}

impl Numbering for DeltaForall {
    fn name(&self) -> &str {
        "delta-forall"
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        if !contains(Cat::Gen, e) {
            return Err(unsupported(self.name(), e));
        }
        self.enc(e)
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let e = self.dec(c)?;
        match self.encode(&e) {
            Ok(d) if &d == c => Ok(e),
            _ => Err(not_in_image(self, c)),
        }
    }

    fn trackers(&self) -> Vec<Ctor> {
        Ctor::ALL.into_iter().filter(|&c| c != Ctor::Forall).collect()
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        check_arity(c, args)?;
        let s = Scheme::Forall;
        match c {
            Ctor::Forall => Err(no_tracker(self, c)),
            Ctor::Eq => {
                let fam = match (slot_term(s, Family::Upsilon, &args[0]), slot_term(s, Family::Upsilon, &args[1])) {
                    (Some(a), Some(b)) => DeltaForall::eq_family(&a, &b)?,
                    _ => Family::Upsilon,
                };
                Ok(slot_u(s, fam, SlotCat::Eq, &args[0], &args[1]))
            }
            Ctor::Not => Ok(slot_u(s, DeltaForall::not_family(&args[0]), SlotCat::Not, &Code::zero(), &args[0])),
            Ctor::And => Ok(slot_u(s, DeltaForall::and_family(&args[0], &args[1]), SlotCat::And, &args[0], &args[1])),
            _ => term_slot_track(s, Family::Upsilon, c, args, self.name()),
        }
    }
}

/// `exists y < x. x = 3y`.
pub fn tr_delta_forall(c: &Code) -> bool {
    pr_delta_star(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbering::verify_simulation;
    use crate::order::DEFAULT_ENUM_LIMIT;
    use crate::syntax::{neg_height, parse};
    use crate::truth::Budget;
    use proptest::prelude::*;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn b(n: u64) -> Code {
        Code::from(n)
    }

    fn oracle() -> Arc<Oracle> {
        Arc::new(Oracle::new(Budget::default()))
    }

    /// Independent slot oracle: `mult * <x, y> + off` with the pairing
    /// evaluated from its defining formula.
    fn slot_oracle(mult: u64, off: u64, x: u64, y: u64) -> Code {
        let s = x + y;
        b(mult * ((s + 1) * (s + 2) / 2 + y) + off)
    }

    #[test]
    fn term_codes() {
        assert_eq!(term_code(&p("(S 0)")).unwrap(), b(6));
        assert_eq!(term_code(&p("(+ 0 1)")).unwrap(), b(600));
        let pp = term_code(&p("(p (p (v 0)))")).unwrap();
        assert_eq!(pp, Code::from(4u32) * Code::from(3u32).pow(4 * 27));
        assert_eq!(term_decode(&pp).unwrap(), p("(p (p (v 0)))"));
        assert!(matches!(term_code(&p("(= 0 0)")), Err(Error::NotTermLayer(_))));
        assert!(matches!(term_code(&p("(S (S (S (S 0))))")), Err(Error::CodeTooLarge(_))));
        for bad in [0u64, 4, 5, 7, 162, 30, 32] {
            assert!(term_decode(&b(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn delta_neg_frozen_values() {
        let d = delta_neg(oracle(), DEFAULT_ENUM_LIMIT);
        assert_eq!(d.encode(&p("0")).unwrap(), slot_oracle(10, 1, 0, 1));
        assert_eq!(d.encode(&p("0")).unwrap(), b(41));
        assert_eq!(d.encode(&p("(S 0)")).unwrap(), b(341));
        let c = d.encode(&p("(= 0 0)")).unwrap();
        assert_eq!(c, b(28216));
        assert_eq!(c, slot_oracle(8, 0, 41, 41));
        let c = d.encode(&p("(= 0 (S 0))")).unwrap();
        assert_eq!(c, slot_oracle(10, 3, 41, 341));
        assert!(!pr_delta_neg(&c));
        assert!(pr_delta_neg(&b(28216)));
        assert!(!pr_delta_neg(&b(7)));
        assert_eq!(d.subformula_count(&b(28216)).unwrap(), 1);
        assert_eq!(d.decode(&b(28216)).unwrap(), p("(= 0 0)"));
    }

    #[test]
    fn delta_neg_parity() {
        let o = oracle();
        let d = delta_neg(o.clone(), DEFAULT_ENUM_LIMIT);
        let items = [
            "(= (+ (v 0) 1) (S (v 0)))",
            "(= (v 0) 0)",
            "(not (= 0 1))",
            "(not (= (v 0) (v 0)))",
            "(and (= 0 0) (not (= 1 0)))",
            "(forall (v 0) (= (* (v 0) 0) 0))",
            "(forall 0 (= 0 0))",
            "(not (not (= 0 0)))",
            "(and (= 0 0) (= (v 0) 1))",
        ];
        for s in items {
            let e = p(s);
            let c = d.encode(&e).unwrap();
            let thm = o.closure_verdict(&e) == Verdict::Provable;
            assert_eq!(c.is_even(), thm, "{s}");
            assert_eq!(pr_delta_neg(&c), thm, "{s}");
            assert_eq!(d.decode(&c).unwrap(), e, "{s}");
        }
    }

    #[test]
    fn delta_neg_subformulas() {
        let d = delta_neg(oracle(), DEFAULT_ENUM_LIMIT);
        let e = p("(and (not (= 0 1)) (and (= 0 0) (= 0 0)))");
        let c = d.encode(&e).unwrap();
        // the whole, both conjunctions, the negation, = 0 1, = 0 0
        assert_eq!(d.subformula_count(&c).unwrap(), 5);
        assert!(pr_delta_neg_witness(&c).unwrap().len() <= 5);
    }

    #[test]
    fn delta_neg_trackers() {
        let d = delta_neg(oracle(), DEFAULT_ENUM_LIMIT);
        assert!(!d.trackers().contains(&Ctor::Not));
        let corpus: Vec<Expr> =
            ["(= 0 0)", "(and (= 0 0) (= (v 0) 1))", "(forall (v 0) (= (+ (v 0) 0) (v 0)))", "(not (= 0 0))"]
                .iter()
                .map(|s| p(s))
                .collect();
        let r = verify_simulation(&d, &corpus);
        assert!(r.passed(), "{r:?}");
        assert!(matches!(d.track(Ctor::Not, &[b(28216)]), Err(Error::NoTracker { .. })));
    }

    #[test]
    fn delta_neg_rejects_terms_over_formulas() {
        let d = delta_neg(oracle(), DEFAULT_ENUM_LIMIT);
        assert!(matches!(d.encode(&p("(S (= 0 0))")), Err(Error::UnsupportedShape { .. })));
    }

    #[test]
    fn delta_star_layers() {
        let d = delta_star(oracle(), DEFAULT_ENUM_LIMIT);
        assert_eq!(d.encode(&p("(= 0 0)")).unwrap(), b(3));
        assert_eq!(d.decode(&b(3)).unwrap(), p("(= 0 0)"));
        for s in ["(= 0 0)", "(= 0 1)", "(= (v 0) 0)", "(and (= 0 0) (= 1 1))"] {
            let e = p(s);
            let base = d.encode(&e).unwrap();
            let (_, j, r) = DeltaStar::layout(&base).unwrap();
            let mut cur = e.clone();
            for k in 1..=3u64 {
                cur = Expr::not(cur);
                let c = d.encode(&cur).unwrap();
                let (i, j2, r2) = DeltaStar::layout(&c).unwrap();
                assert_eq!((i, &j2, r2), (b(k), &j, swap(r, k)));
                assert_eq!(d.decode(&c).unwrap(), cur);
                assert_eq!(d.track(Ctor::Not, &[d.encode(&cur.children()[0]).unwrap()]).unwrap(), c);
                assert_eq!(neg_height(&cur), k as usize);
            }
        }
        assert!(!pr_delta_star(&b(5)));
        assert!(!pr_delta_star(&b(0)));
    }

    #[test]
    fn delta_star_independent_overrides() {
        let ind = p("(forall (v 0) (= (* (v 0) (v 0)) (v 0)))");
        let o = Arc::new(Oracle::new(Budget::default()).with_independent([ind.clone()]));
        let d = delta_star(o, DEFAULT_ENUM_LIMIT);
        let c = d.encode(&ind).unwrap();
        assert_eq!(&c % 3u32, b(2));
        assert_eq!(d.encode(&Expr::not(ind)).unwrap() % 3u32, b(2));
    }

    #[test]
    fn delta_forall_frozen_values() {
        let d = delta_forall(oracle(), DEFAULT_ENUM_LIMIT);
        assert_eq!(d.encode(&p("0")).unwrap(), b(62));
        assert_eq!(d.encode(&p("(S 0)")).unwrap(), b(512));
        let c = d.encode(&p("(= 0 0)")).unwrap();
        assert_eq!(c, b(95244));
        assert_eq!(c, slot_oracle(12, 0, 62, 62));
        assert!(tr_delta_forall(&c));
        let c = d.encode(&p("(= 0 (S 0))")).unwrap();
        assert_eq!(c, slot_oracle(12, 1, 62, 512));
        assert!(!tr_delta_forall(&c));
    }

    #[test]
    fn delta_forall_trisection() {
        let d = delta_forall(oracle(), DEFAULT_ENUM_LIMIT);
        let cases = [
            ("(= (+ 1 1) (S 1))", 0),
            ("(not (= 0 0))", 1),
            ("(and (= 0 0) (not (= 0 1)))", 0),
            ("(forall (v 0) (= (+ (v 0) 0) (v 0)))", 0),
            ("(forall (v 0) (= (v 0) 0))", 1),
            ("(not (forall (v 0) (= (v 0) 0)))", 0),
            ("(= (v 0) 0)", 2),
            ("(forall 0 (= 0 0))", 2),
            ("(and (= 0 0) (= (v 0) 0))", 2),
            ("(S 0)", 2),
        ];
        for (s, r) in cases {
            let e = p(s);
            let c = d.encode(&e).unwrap();
            assert_eq!(&c % 3u32, b(r), "{s}");
            assert_eq!(d.decode(&c).unwrap(), e, "{s}");
        }
        assert!(!d.trackers().contains(&Ctor::Forall));
        let corpus: Vec<Expr> = cases.iter().map(|(s, _)| p(s)).collect();
        let r = verify_simulation(&d, &corpus);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn valuation_matches_division() {
        for (c, p_, v) in [(b(81 * 7), 3, 4u64), (b(7), 3, 0), (b(5u64.pow(13) * 2), 5, 13)] {
            let (got, rest) = valuation(&c, p_);
            assert_eq!(got, b(v));
            assert_eq!(rest * Code::from(p_).pow(v as u32), c);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn slot_partition(start in 0u64..1_000_000) {
            for n in start..start + 6_250 {
                let c = b(n);
                for scheme in [Scheme::Neg, Scheme::Forall] {
                    let hits = slots_of(scheme, &c);
                    prop_assert!(hits.len() <= 1);
                    if let Some((f, _, _, _)) = hits.first() {
                        let want = match (scheme, f) {
                            (Scheme::Neg, Family::Lambda) => 0,
                            (Scheme::Neg, _) => 1,
                            (Scheme::Forall, Family::Lambda) => 0,
                            (Scheme::Forall, Family::Theta) => 1,
                            (Scheme::Forall, Family::Upsilon) => 2,
                        };
                        let m = if scheme == Scheme::Neg { 2u64 } else { 3 };
                        prop_assert_eq!(n % m, want);
                    }
                }
            }
        }

        #[test]
        fn term_code_roundtrip(seed in any::<u64>()) {
            let t = crate::samples::random_term_layer(&mut crate::samples::seeded(seed), 3);
            if let Ok(c) = term_code(&t) {
                prop_assert_eq!(term_decode(&c).unwrap(), t);
            }
        }
    }
}
