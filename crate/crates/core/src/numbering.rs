//! Numberings of the expression universe: the standard tag-and-pair
//! coding, a diagonal numbering with built-in fixed codes, the twist
//! numbering, even/odd split numberings, and the generic translation,
//! simulation and monotonicity checks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::order::{residual_rank, residual_unrank, Cat, MemberTable, Universe};
use crate::pairing::{pair, unpair};
use crate::syntax::{free_variables, is_formula, is_sentence, subexpressions, substitute, Ctor, Expr, View};
use crate::truth::{Oracle, Verdict};
use crate::Code;

/// Bit length above which codes are refused.
pub const MAX_CODE_BITS: u64 = 1 << 23;

fn too_large(what: &str) -> Error {
    Error::CodeTooLarge(format!("{what} exceeds {MAX_CODE_BITS} bits"))
}

/// An injective coding of expressions with a decoder and tracking
/// procedures for (some of) the constructors.
pub trait Numbering: Send + Sync {
    fn name(&self) -> &str;

    fn encode(&self, e: &Expr) -> Result<Code>;

    fn decode(&self, c: &Code) -> Result<Expr>;

    fn in_image(&self, c: &Code) -> bool {
        self.decode(c).is_ok()
    }

    /// Constructors with a closed-form tracker.
    fn trackers(&self) -> Vec<Ctor>;

    /// The numeric counterpart of `c` acting on codes.
    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code>;
}

impl fmt::Debug for dyn Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Numbering({})", self.name())
    }
}

pub(crate) fn not_in_image(n: &dyn Numbering, c: &Code) -> Error {
    Error::NotInImage { numbering: n.name().to_string(), code: c.clone() }
}

pub(crate) fn no_tracker(n: &dyn Numbering, c: Ctor) -> Error {
    Error::NoTracker { numbering: n.name().to_string(), ctor: c }
}

pub(crate) fn check_arity(c: Ctor, args: &[Code]) -> Result<()> {
    if args.len() == c.arity() {
        Ok(())
    } else {
        Err(Error::IllFormedPayload(format!("{c} takes {} codes, got {}", c.arity(), args.len())))
    }
}

/// Tracker realised by decoding the arguments, applying the constructor
/// and re-encoding.
pub fn track_by_decoding(n: &dyn Numbering, c: Ctor, args: &[Code]) -> Result<Code> {
    check_arity(c, args)?;
    let kids = args.iter().map(|a| n.decode(a)).collect::<Result<Vec<_>>>()?;
    n.encode(&Expr::app(c, &kids))
}

/// Tag-and-pair coding: leaves `<tag, 0>`, unary nodes `<tag, c>`,
/// binary nodes `<tag, <c1, c2>>`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Gamma;

pub fn standard_gamma() -> Gamma {
    Gamma
}

impl Gamma {
    fn node(c: Ctor, args: &[Code]) -> Result<Code> {
        // <x, y> has at least 2 * bits(x + y) - 2 bits
        let widest = args.iter().map(|a| a.bits()).max().unwrap_or(0);
        let least = match args.len() {
            1 => (2 * widest).saturating_sub(2),
            2 => (4 * widest).saturating_sub(6),
            _ => 0,
        };
        if least > MAX_CODE_BITS {
            return Err(too_large("standard code"));
        }
        let tag = BigUint::from(c.tag());
        let out = match args {
            [] => pair(&tag, &BigUint::zero()),
            [a] => pair(&tag, a),
            [a, b] => pair(&tag, &pair(a, b)),
            _ => unreachable!("arity at most two"),
        };
        if out.bits() > MAX_CODE_BITS {
            return Err(too_large("standard code"));
        }
        Ok(out)
    }

    /// Codes of every numeral whose standard code fits, computed once.
    fn numeral_codes() -> &'static [Code] {
        static CODES: OnceLock<Vec<Code>> = OnceLock::new();
        CODES.get_or_init(|| {
            let mut codes = vec![Gamma::node(Ctor::Zero, &[]).expect("zero fits")];
            while let Ok(c) = Gamma::node(Ctor::S, &[codes[codes.len() - 1].clone()]) {
                codes.push(c);
            }
            codes
        })
    }

    fn encode_numeral(n: &BigUint) -> Result<Code> {
        n.to_usize()
            .and_then(|k| Gamma::numeral_codes().get(k))
            .cloned()
            .ok_or_else(|| too_large("standard code of a numeral"))
    }
}

impl Numbering for Gamma {
    fn name(&self) -> &str {
        "gamma"
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        if let View::Num(n) = e.view() {
            return Gamma::encode_numeral(n);
        }
        let kids = e.children().iter().map(|k| self.encode(k)).collect::<Result<Vec<_>>>()?;
        Gamma::node(e.ctor(), &kids)
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let bad = || not_in_image(self, c);
        let (tag, rest) = unpair(c).map_err(|_| bad())?;
        let ctor = tag.to_u32().and_then(Ctor::from_tag).ok_or_else(bad)?;
        match ctor.arity() {
            0 if rest.is_zero() => Ok(Expr::leaf(ctor)),
            0 => Err(bad()),
            1 => Ok(Expr::app(ctor, &[self.decode(&rest).map_err(|_| bad())?])),
            _ => {
                let (a, b) = unpair(&rest).map_err(|_| bad())?;
                let (a, b) = (self.decode(&a).map_err(|_| bad())?, self.decode(&b).map_err(|_| bad())?);
                Ok(Expr::app(ctor, &[a, b]))
            }
        }
    }

    fn trackers(&self) -> Vec<Ctor> {
        Ctor::ALL.to_vec()
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        check_arity(c, args)?;
        Gamma::node(c, args)
    }
}

/// The free variable of a formula with exactly one.
pub fn is_unary_formula(e: &Expr) -> Option<Expr> {
    if !is_formula(e) {
        return None;
    }
    let fv = free_variables(e);
    (fv.len() == 1).then(|| fv.into_iter().next().expect("one variable"))
}

/// Numbering in which every formula `psi` with one free variable has a
/// code `k` with `D(psi(k)) = k`. Those diagonal sentences take the even
/// codes `2 rank(psi) + 2` (rank in the graded order of formulas); every
/// other expression takes `2 gamma(e) + 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Diag;

pub fn diag_numbering() -> Diag {
    Diag
}

impl Diag {
    /// The fixed code of a unary formula.
    pub fn diag_index(&self, psi: &Expr) -> Result<Code> {
        if is_unary_formula(psi).is_none() {
            return Err(Error::NotAFormula(psi.clone()));
        }
        let r = Universe::all(Cat::Form).rank(psi)?;
        Ok((r << 1u32) + 2u32)
    }

    /// The formula whose fixed code would be `k`, for even `k >= 2`.
    fn formula_at(&self, k: &Code) -> Option<Expr> {
        if k.is_odd() || *k < BigUint::from(2u32) {
            return None;
        }
        Universe::all(Cat::Form).unrank(&((k - 2u32) >> 1u32)).ok()
    }

    /// The diagonal sentence `psi(k)` when `k` is the fixed code of `psi`.
    fn diagonal_at(&self, k: &Code) -> Option<Expr> {
        let psi = self.formula_at(k)?;
        let x = is_unary_formula(&psi)?;
        Some(substitute(&psi, &x, &Expr::numeral_big(k)))
    }

    /// If `e` is a diagonal sentence, the code it takes.
    fn diagonal_code(&self, e: &Expr) -> Option<Code> {
        if !is_sentence(e) {
            return None;
        }
        let mut values = BTreeSet::new();
        collect_numerals(e, &mut values);
        let mut best: Option<(Code, Code)> = None;
        for n in values {
            // x may sit under j successors inside psi, so the numeral of
            // k shows up as the numeral of k + j with j below |psi|.
            let mut j = 0u64;
            let mut bound = 1u64;
            while j <= bound && BigUint::from(j) <= n {
                let m = &n - j;
                j += 1;
                let Some(psi) = self.formula_at(&m) else { continue };
                bound = bound.max(psi.size().min(u64::MAX as u128) as u64);
                let Some(x) = is_unary_formula(&psi) else { continue };
                if substitute(&psi, &x, &Expr::numeral_big(&m)) != *e {
                    continue;
                }
                let g = Gamma.encode(&psi).unwrap_or_else(|_| BigUint::one() << MAX_CODE_BITS);
                if best.as_ref().is_none_or(|(bg, _)| g < *bg) {
                    best = Some((g, m));
                }
            }
        }
        best.map(|(_, k)| k)
    }
}

fn collect_numerals(e: &Expr, out: &mut BTreeSet<BigUint>) {
    if let Some(n) = e.numeral_value() {
        out.insert(n);
        return;
    }
    for k in e.children() {
        collect_numerals(&k, out);
    }
}

impl Numbering for Diag {
    fn name(&self) -> &str {
        "diag"
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        if let Some(k) = self.diagonal_code(e) {
            return Ok(k);
        }
        Ok((Gamma.encode(e)? << 1u32) + 1u32)
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let e = if c.is_odd() {
            Gamma.decode(&(c >> 1u32)).map_err(|_| not_in_image(self, c))?
        } else {
            self.diagonal_at(c).ok_or_else(|| not_in_image(self, c))?
        };
        match self.encode(&e) {
            Ok(back) if back == *c => Ok(e),
            _ => Err(not_in_image(self, c)),
        }
    }

    fn trackers(&self) -> Vec<Ctor> {
        Ctor::ALL.to_vec()
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        track_by_decoding(self, c, args)
    }
}

type Forward = Arc<dyn Fn(&BigUint) -> Result<BigUint> + Send + Sync>;
type Inverse = Arc<dyn Fn(&BigUint) -> Option<BigUint> + Send + Sync>;

/// A strictly increasing map used by the twist numbering.
#[derive(Clone)]
pub struct Growth {
    pub name: String,
    apply: Forward,
    invert: Option<Inverse>,
}

impl Growth {
    pub fn new(name: impl Into<String>, apply: impl Fn(&BigUint) -> Result<BigUint> + Send + Sync + 'static) -> Growth {
        Growth { name: name.into(), apply: Arc::new(apply), invert: None }
    }

    pub fn with_inverse(mut self, inv: impl Fn(&BigUint) -> Option<BigUint> + Send + Sync + 'static) -> Growth {
        self.invert = Some(Arc::new(inv));
        self
    }

    /// `n -> 2^n`.
    pub fn pow2() -> Growth {
        Growth::new("pow2", |n| {
            let k = n.to_u64().filter(|&k| k < MAX_CODE_BITS).ok_or_else(|| too_large("2^n"))?;
            Ok(BigUint::one() << k)
        })
        .with_inverse(|m| {
            let tz = m.trailing_zeros()?;
            (m.count_ones() == 1).then(|| BigUint::from(tz))
        })
    }

    pub fn apply(&self, n: &BigUint) -> Result<BigUint> {
        (self.apply)(n)
    }

    pub fn invert(&self, m: &BigUint) -> Option<BigUint> {
        if let Some(inv) = &self.invert {
            return inv(m);
        }
        let mut n = BigUint::zero();
        loop {
            let v = self.apply(&n).ok()?;
            if v == *m {
                return Some(n);
            }
            if v > *m {
                return None;
            }
            n += 1u32;
        }
    }
}

/// Samples checked for strict monotonicity of a growth function.
pub const GROWTH_SAMPLES: u64 = 256;

/// `beta(phi) = 2 h(beta(chi))` when `phi` is `chi -> 0=0`, otherwise
/// `2 base(phi) + 1`.
pub struct Twist {
    name: String,
    base: Arc<dyn Numbering>,
    h: Growth,
}

fn trigger() -> Expr {
    Expr::eq(Expr::zero(), Expr::zero())
}

/// `chi` when `e` is `chi -> 0=0`, i.e. `not(chi and not(0=0))`.
fn twist_premise(e: &Expr) -> Option<Expr> {
    let View::Un(Ctor::Not, inner) = e.view() else { return None };
    let View::Bin(Ctor::And, chi, rhs) = inner.view() else { return None };
    let View::Un(Ctor::Not, t) = rhs.view() else { return None };
    (*t == trigger()).then(|| chi.clone())
}

pub fn twist_numbering(base: Arc<dyn Numbering>, h: Growth) -> Result<Twist> {
    let mut prev = h.apply(&BigUint::zero())?;
    for n in 1..GROWTH_SAMPLES {
        let v = h.apply(&BigUint::from(n))?;
        if v <= prev {
            return Err(Error::NotMonotoneH(n));
        }
        prev = v;
    }
    Ok(Twist { name: format!("twist({},{})", base.name(), h.name), base, h })
}

impl Twist {
    pub fn base(&self) -> &Arc<dyn Numbering> {
        &self.base
    }
}

impl Numbering for Twist {
    fn name(&self) -> &str {
        &self.name
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        match twist_premise(e) {
            Some(chi) => Ok(self.h.apply(&self.encode(&chi)?)? << 1u32),
            None => Ok((self.base.encode(e)? << 1u32) + 1u32),
        }
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let bad = || not_in_image(self, c);
        if c.is_odd() {
            let e = self.base.decode(&(c >> 1u32)).map_err(|_| bad())?;
            return if twist_premise(&e).is_some() { Err(bad()) } else { Ok(e) };
        }
        if c.is_zero() {
            return Err(bad());
        }
        let inner = self.h.invert(&(c >> 1u32)).ok_or_else(bad)?;
        let chi = self.decode(&inner).map_err(|_| bad())?;
        Ok(Expr::implies(chi, trigger()))
    }

    fn trackers(&self) -> Vec<Ctor> {
        Ctor::ALL.to_vec()
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        track_by_decoding(self, c, args)
    }
}

/// Members of a class take the even codes `2k`, everything else the odd
/// codes `2k + 1`, both in graded order over all raw expressions.
pub struct Split {
    name: String,
    members: Arc<MemberTable>,
}

pub fn split_numbering(name: impl Into<String>, members: Arc<MemberTable>) -> Split {
    Split { name: name.into(), members }
}

/// Split numbering over the fragment-provable sentences.
pub fn split_provable(oracle: Arc<Oracle>, limit: usize) -> Split {
    let table = MemberTable::new("split-provable members", Universe::all(Cat::Form), limit, move |e| {
        if !is_sentence(e) {
            return Some(false);
        }
        match oracle.verdict(e) {
            Verdict::Provable => Some(true),
            Verdict::Unknown => None,
            _ => Some(false),
        }
    });
    split_numbering("split-provable", Arc::new(table))
}

impl Split {
    pub fn members(&self) -> &MemberTable {
        &self.members
    }
}

impl Numbering for Split {
    fn name(&self) -> &str {
        &self.name
    }

    fn encode(&self, e: &Expr) -> Result<Code> {
        if self.members.is_member(e)? {
            Ok(self.members.members_before(e)? << 1u32)
        } else {
            Ok((residual_rank(&Universe::all(Cat::Any), &[&self.members], e)? << 1u32) + 1u32)
        }
    }

    fn decode(&self, c: &Code) -> Result<Expr> {
        let k = c >> 1u32;
        if c.is_even() {
            self.members.nth(&k)
        } else {
            residual_unrank(&Universe::all(Cat::Any), &[&self.members], &k)
        }
    }

    fn in_image(&self, c: &Code) -> bool {
        self.decode(c).is_ok()
    }

    fn trackers(&self) -> Vec<Ctor> {
        Ctor::ALL.to_vec()
    }

    fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
        track_by_decoding(self, c, args)
    }
}

/// `b.encode(a.decode(c))`.
pub fn translate(a: &dyn Numbering, b: &dyn Numbering, c: &Code) -> Result<Code> {
    let e = a.decode(c).map_err(|_| not_in_image(a, c))?;
    b.encode(&e)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimulationReport {
    pub numbering: String,
    pub corpus_size: usize,
    /// Items whose code is out of reach (too large, or beyond the oracle).
    pub encode_errors: usize,
    pub injectivity_failures: usize,
    pub round_trip_failures: usize,
    pub image_failures: usize,
    pub tracker_checks: usize,
    pub tracker_failures: usize,
}

impl SimulationReport {
    pub fn passed(&self) -> bool {
        self.injectivity_failures + self.round_trip_failures + self.image_failures + self.tracker_failures == 0
    }
}

/// Number of small codes probed for image/decoder consistency.
pub const IMAGE_PROBES: u64 = 200;

pub fn verify_simulation(n: &dyn Numbering, corpus: &[Expr]) -> SimulationReport {
    let mut r = SimulationReport { numbering: n.name().to_string(), corpus_size: corpus.len(), ..Default::default() };
    let trackers: BTreeSet<Ctor> = n.trackers().into_iter().collect();
    let mut seen: HashMap<Code, Expr> = HashMap::new();
    for e in corpus {
        let c = match n.encode(e) {
            Ok(c) => c,
            Err(_) => {
                r.encode_errors += 1;
                continue;
            }
        };
        if let Some(prev) = seen.insert(c.clone(), e.clone()) {
            if prev != *e {
                r.injectivity_failures += 1;
            }
        }
        match n.decode(&c) {
            Ok(d) if d == *e => {}
            _ => r.round_trip_failures += 1,
        }
        if !n.in_image(&c) {
            r.image_failures += 1;
        }
        if trackers.contains(&e.ctor()) {
            let kids: Result<Vec<Code>> = e.children().iter().map(|k| n.encode(k)).collect();
            if let Ok(kids) = kids {
                r.tracker_checks += 1;
                if n.track(e.ctor(), &kids).ok().as_ref() != Some(&c) {
                    r.tracker_failures += 1;
                }
            }
        }
    }
    for c in 0..IMAGE_PROBES {
        let c = BigUint::from(c);
        let decoded = n.decode(&c);
        let consistent = match &decoded {
            Ok(e) => n.in_image(&c) && n.encode(e).ok().as_ref() == Some(&c),
            Err(_) => !n.in_image(&c),
        };
        if !consistent {
            r.image_failures += 1;
        }
    }
    r
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TranslationReport {
    pub from: String,
    pub to: String,
    pub corpus_size: usize,
    pub skipped: usize,
    pub round_trip_failures: usize,
    pub tracker_failures: usize,
}

impl TranslationReport {
    pub fn passed(&self) -> bool {
        self.round_trip_failures + self.tracker_failures == 0
    }
}

/// Both composed translations are the identity on the images of the
/// corpus, and the translation agrees with direct encoding.
pub fn verify_equivalence(a: &dyn Numbering, b: &dyn Numbering, corpus: &[Expr]) -> TranslationReport {
    let mut r = TranslationReport {
        from: a.name().to_string(),
        to: b.name().to_string(),
        corpus_size: corpus.len(),
        ..Default::default()
    };
    for e in corpus {
        let (ca, cb) = match (a.encode(e), b.encode(e)) {
            (Ok(ca), Ok(cb)) => (ca, cb),
            _ => {
                r.skipped += 1;
                continue;
            }
        };
        let forward = translate(a, b, &ca);
        if forward.as_ref().ok() != Some(&cb) {
            r.tracker_failures += 1;
        }
        let ok_ab = forward.and_then(|x| translate(b, a, &x)).ok() == Some(ca.clone());
        let ok_ba = translate(b, a, &cb).and_then(|x| translate(a, b, &x)).ok() == Some(cb);
        if !ok_ab || !ok_ba {
            r.round_trip_failures += 1;
        }
    }
    r
}

/// A decidable set of codes.
pub type CodeSet = Arc<dyn Fn(&Code) -> bool + Send + Sync>;

/// The set `p` on `a`-codes carried over to `b`-codes.
pub fn transfer_set(a: Arc<dyn Numbering>, b: Arc<dyn Numbering>, p: CodeSet) -> CodeSet {
    Arc::new(move |c: &Code| match translate(b.as_ref(), a.as_ref(), c) {
        Ok(ca) => p(&ca),
        Err(_) => false,
    })
}

#[derive(Clone, Debug, Default)]
pub struct MonotoneReport {
    pub numbering: String,
    pub pairs_checked: usize,
    pub skipped: usize,
    /// (subexpression, expression, code of subexpression, code of expression)
    pub violations: Vec<(Expr, Expr, Code, Code)>,
}

/// Forward monotonicity: a proper subexpression gets a smaller code.
pub fn check_monotone(n: &dyn Numbering, corpus: &[Expr]) -> MonotoneReport {
    let mut r = MonotoneReport { numbering: n.name().to_string(), ..Default::default() };
    for t in corpus {
        let Ok(ct) = n.encode(t) else {
            r.skipped += 1;
            continue;
        };
        for s in subexpressions(t) {
            match n.encode(&s) {
                Ok(cs) => {
                    r.pairs_checked += 1;
                    if cs >= ct {
                        r.violations.push((s, t.clone(), cs, ct.clone()));
                    }
                }
                Err(_) => r.skipped += 1,
            }
        }
    }
    r
}

/// `(c1, c2)` is related when `c1` codes a proper subexpression of the
/// expression coded by `c2`.
pub fn tracking_relation(n: Arc<dyn Numbering>) -> impl Fn(&Code, &Code) -> bool {
    move |c1, c2| match (n.decode(c1), n.decode(c2)) {
        (Ok(s), Ok(t)) => subexpressions(&t).contains(&s),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;
    use crate::truth::Budget;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn gamma_frozen_values() {
        assert_eq!(Gamma.encode(&Expr::zero()).unwrap(), b(1));
        assert_eq!(Gamma.encode(&p("(S 0)")).unwrap(), b(16));
        assert_eq!(Gamma.decode(&b(16)).unwrap(), p("(S 0)"));
        // <1, 1> = 3*4/2 + 1 = 7 and <7, 7> = 15*16/2 + 7
        assert_eq!(Gamma.encode(&p("(= 0 0)")).unwrap(), b(127));
        assert!(Gamma.decode(&b(0)).is_err());
        assert!(Gamma.encode(&Expr::numeral(200)).is_err());
    }

    #[test]
    fn diag_fixed_codes() {
        let d = Diag;
        assert_eq!(d.encode(&Expr::zero()).unwrap(), b(3));
        let psi = p("(= 0 (v 0))");
        let k = d.diag_index(&psi).unwrap();
        assert_eq!(k, b(6));
        let sentence = p("(= 0 (S (S (S (S (S (S 0)))))))");
        assert_eq!(d.encode(&sentence).unwrap(), b(6));
        assert_eq!(d.decode(&b(6)).unwrap(), sentence);
        let psi = p("(= (S (v 0)) (S (v 0)))");
        let k = d.diag_index(&psi).unwrap();
        let g = substitute(&psi, &Expr::v(), &Expr::numeral_big(&k));
        assert_eq!(d.encode(&g).unwrap(), k);
        assert!(!d.in_image(&b(2)));
    }

    #[test]
    fn diag_is_not_monotone() {
        let r = check_monotone(&Diag, &[p("(= 0 (S (S (S (S (S (S 0)))))))")]);
        assert!(!r.violations.is_empty());
        let r = check_monotone(&Gamma, &[p("(= (+ 0 (v 1)) (S 0))")]);
        assert!(r.violations.is_empty() && r.pairs_checked > 0);
    }

    #[test]
    fn twist_cases() {
        let t = twist_numbering(Arc::new(Gamma), Growth::pow2()).unwrap();
        let phi = p("(= 0 1)");
        assert_eq!(t.encode(&phi).unwrap(), Gamma.encode(&phi).unwrap() * 2u32 + 1u32);
        let imp = Expr::implies(phi.clone(), p("(= 0 0)"));
        let c = t.encode(&imp).unwrap();
        assert!(c.is_even());
        assert_eq!(t.decode(&c).unwrap(), imp);
        let bad = Growth::new("flat", |_| Ok(BigUint::one()));
        assert!(matches!(twist_numbering(Arc::new(Gamma), bad), Err(Error::NotMonotoneH(1))));
    }

    #[test]
    fn split_parity() {
        let s = split_provable(Arc::new(Oracle::new(Budget::default())), 6);
        let first = s.members().nth(&BigUint::zero()).unwrap();
        assert_eq!(first, p("(= 0 0)"));
        assert_eq!(s.encode(&first).unwrap(), b(0));
        assert_eq!(s.encode(&Expr::zero()).unwrap(), b(1));
        for text in ["(= 1 1)", "(= 0 1)", "(S (v 0))", "(not (= 0 1))"] {
            let e = p(text);
            let c = s.encode(&e).unwrap();
            assert_eq!(s.decode(&c).unwrap(), e);
            let provable = Oracle::default().verdict(&e) == Verdict::Provable;
            assert_eq!(c.is_even(), provable, "{text}");
        }
    }

    #[test]
    fn translation_identities() {
        let g: Arc<dyn Numbering> = Arc::new(Gamma);
        let d: Arc<dyn Numbering> = Arc::new(Diag);
        let c = b(16);
        assert_eq!(translate(g.as_ref(), g.as_ref(), &c).unwrap(), c);
        let corpus = vec![p("(= 0 (S (S (S (S (S (S 0)))))))"), p("(S 0)"), p("(and (= 0 0) (= 1 1))")];
        assert!(verify_equivalence(g.as_ref(), d.as_ref(), &corpus).passed());
        let is_term_code: CodeSet =
            Arc::new(|c: &Code| Gamma.decode(c).map(|e| crate::syntax::is_term(&e)).unwrap_or(false));
        let q = transfer_set(g.clone(), d.clone(), is_term_code);
        assert!(q(&d.encode(&p("(S 0)")).unwrap()));
        assert!(!q(&b(6)));
        let rel = tracking_relation(g);
        assert!(rel(&b(1), &b(16)));
        assert!(!rel(&b(16), &b(1)));
    }

    #[test]
    fn broken_tracker_is_detected() {
        struct Broken;
        impl Numbering for Broken {
            fn name(&self) -> &str {
                "broken"
            }
            fn encode(&self, e: &Expr) -> Result<Code> {
                Gamma.encode(e)
            }
            fn decode(&self, c: &Code) -> Result<Expr> {
                Gamma.decode(c)
            }
            fn trackers(&self) -> Vec<Ctor> {
                Ctor::ALL.to_vec()
            }
            fn track(&self, c: Ctor, args: &[Code]) -> Result<Code> {
                let out = Gamma.track(c, args)?;
                Ok(if c == Ctor::Add { out + 1u32 } else { out })
            }
        }
        let corpus = vec![p("(+ 0 1)"), p("(S 0)")];
        let r = verify_simulation(&Broken, &corpus);
        assert_eq!(r.tracker_failures, 1);
        assert!(verify_simulation(&Gamma, &corpus).passed());
    }
}
