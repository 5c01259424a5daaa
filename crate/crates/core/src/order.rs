//! Graded enumeration of expression classes.
//!
//! Each class is a context-free category over the signature with at most
//! one production per head constructor, so the graded order (size, then
//! head tag, then children) can be counted, ranked and unranked exactly by
//! dynamic programming. Sorted listings per size are memoised and feed the
//! membership tables that number classified sentences densely.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use parking_lot::{Mutex, RwLock};
use rayon::prelude::*;
use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::syntax::{Ctor, Expr};

/// Largest size handled by counting, ranking and unranking.
pub const MAX_RANK_SIZE: usize = 512;

/// Largest listing materialised for a single size.
pub const MAX_LISTING: u64 = 6_000_000;

/// Default size bound for membership tables.
pub const DEFAULT_ENUM_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cat {
    /// Every raw expression.
    Any,
    /// Generated from 0, 1, v by S, ', + and ·.
    Tl,
    /// Term-layer constructors over term-layer children, logical ones over
    /// anything in the class.
    Gen,
    Var,
    Term,
    Form,
}

impl Cat {
    pub const ALL: [Cat; 6] = [Cat::Any, Cat::Tl, Cat::Gen, Cat::Var, Cat::Term, Cat::Form];
}

/// Child categories of the production for `c` in `cat`.
pub fn production(cat: Cat, c: Ctor) -> Option<&'static [Cat]> {
    use Cat::*;
    use Ctor as C;
    match (cat, c) {
        (Any, _) => Some(match c.arity() {
            0 => &[],
            1 => &[Any],
            _ => &[Any, Any],
        }),
        (Tl | Gen | Term, C::Zero | C::One | C::V) => Some(&[]),
        (Tl | Gen, C::S | C::Prime) => Some(&[Tl]),
        (Tl | Gen, C::Add | C::Mul) => Some(&[Tl, Tl]),
        (Gen, C::Eq | C::And | C::Forall) => Some(&[Gen, Gen]),
        (Gen, C::Not) => Some(&[Gen]),
        (Var, C::V) => Some(&[]),
        (Var | Term, C::Prime) => Some(&[Var]),
        (Term, C::S) => Some(&[Term]),
        (Term, C::Add | C::Mul) => Some(&[Term, Term]),
        (Form, C::Eq) => Some(&[Term, Term]),
        (Form, C::Not) => Some(&[Form]),
        (Form, C::And) => Some(&[Form, Form]),
        (Form, C::Forall) => Some(&[Var, Form]),
        _ => None,
    }
}

pub fn contains(cat: Cat, e: &Expr) -> bool {
    if e.numeral_value().is_some() {
        return matches!(cat, Cat::Any | Cat::Tl | Cat::Gen | Cat::Term);
    }
    match production(cat, e.ctor()) {
        None => false,
        Some(kids) => kids.iter().zip(e.children()).all(|(k, child)| contains(*k, &child)),
    }
}

const CELLS: usize = 6 * 11;

/// Counts for one size: a cell per (category, head) and a total per category.
type Row = Vec<BigUint>;

fn cell(cat: Cat, c: Ctor) -> usize {
    cat as usize * 11 + c as usize
}

fn total(cat: Cat) -> usize {
    CELLS + cat as usize
}

static COUNTS: LazyLock<RwLock<Arc<Vec<Row>>>> =
    LazyLock::new(|| RwLock::new(Arc::new(vec![vec![BigUint::zero(); CELLS + 6]])));

fn too_large(n: usize) -> Error {
    Error::CodeTooLarge(format!("graded rank of an expression of size {n} exceeds the size bound {MAX_RANK_SIZE}"))
}

/// Count rows for sizes `0..=n`.
fn counts(n: usize) -> Result<Arc<Vec<Row>>> {
    if n > MAX_RANK_SIZE {
        return Err(too_large(n));
    }
    {
        let rows = COUNTS.read();
        if rows.len() > n {
            return Ok(rows.clone());
        }
    }
    let mut guard = COUNTS.write();
    let mut rows: Vec<Row> = (**guard).clone();
    while rows.len() <= n {
        let size = rows.len();
        let mut row = vec![BigUint::zero(); CELLS + 6];
        for cat in Cat::ALL {
            let mut sum = BigUint::zero();
            for c in Ctor::ALL {
                let Some(kids) = production(cat, c) else { continue };
                let v = match kids {
                    [] => BigUint::from((size == 1) as u8),
                    [k] => rows[size - 1][total(*k)].clone(),
                    [k0, k1] => {
                        let mut acc = BigUint::zero();
                        for m in 1..size.saturating_sub(1) {
                            let (a, b) = (&rows[m][total(*k0)], &rows[size - 1 - m][total(*k1)]);
                            if !a.is_zero() && !b.is_zero() {
                                acc += a * b;
                            }
                        }
                        acc
                    }
                    _ => unreachable!("arity at most two"),
                };
                sum += &v;
                row[cell(cat, c)] = v;
            }
            row[total(cat)] = sum;
        }
        rows.push(row);
    }
    let rows = Arc::new(rows);
    *guard = rows.clone();
    Ok(rows)
}

pub fn count(cat: Cat, n: usize) -> Result<BigUint> {
    Ok(counts(n)?[n][total(cat)].clone())
}

pub fn count_head(cat: Cat, c: Ctor, n: usize) -> Result<BigUint> {
    Ok(counts(n)?[n][cell(cat, c)].clone())
}

fn size_of(e: &Expr) -> Result<usize> {
    e.size()
        .to_usize()
        .filter(|&n| n <= MAX_RANK_SIZE)
        .ok_or_else(|| Error::CodeTooLarge(format!("graded rank of an expression of size {}", e.size_big())))
}

/// Members of `cat` of the same size and head as `e` that precede it.
fn within(rows: &[Row], cat: Cat, e: &Expr, n: usize) -> BigUint {
    let kids = production(cat, e.ctor()).expect("caller checked membership");
    let children = e.children();
    match kids {
        [] => BigUint::zero(),
        [k] => less_same_size(rows, *k, &children[0], n - 1),
        [k0, k1] => {
            let (a, b) = (&children[0], &children[1]);
            let sa = a.size() as usize;
            let mut acc = BigUint::zero();
            for m in 1..sa {
                acc += &rows[m][total(*k0)] * &rows[n - 1 - m][total(*k1)];
            }
            acc += less_same_size(rows, *k0, a, sa) * &rows[n - 1 - sa][total(*k1)];
            acc + less_same_size(rows, *k1, b, n - 1 - sa)
        }
        _ => unreachable!("arity at most two"),
    }
}

fn less_same_size(rows: &[Row], cat: Cat, e: &Expr, n: usize) -> BigUint {
    let head = e.ctor();
    let mut acc: BigUint = Ctor::ALL.iter().filter(|&&c| c < head).map(|&c| &rows[n][cell(cat, c)]).sum();
    acc += within(rows, cat, e, n);
    acc
}

fn unrank_same_size(rows: &[Row], cat: Cat, n: usize, mut r: BigUint, heads: u16) -> Expr {
    for c in Ctor::ALL {
        if heads & (1 << c as u16) == 0 || production(cat, c).is_none() {
            continue;
        }
        let block = &rows[n][cell(cat, c)];
        if r < *block {
            return build(rows, cat, c, n, r);
        }
        r -= block;
    }
    unreachable!("rank within the size block")
}

fn build(rows: &[Row], cat: Cat, c: Ctor, n: usize, r: BigUint) -> Expr {
    let kids = production(cat, c).expect("production exists");
    match kids {
        [] => Expr::leaf(c),
        [k] => Expr::app(c, &[unrank_same_size(rows, *k, n - 1, r, ALL_HEADS)]),
        [k0, k1] => {
            let mut r = r;
            for m in 1..n - 1 {
                let right = &rows[n - 1 - m][total(*k1)];
                let block = &rows[m][total(*k0)] * right;
                if r < block {
                    let (ia, ib) = (&r / right, &r % right);
                    let a = unrank_same_size(rows, *k0, m, ia, ALL_HEADS);
                    let b = unrank_same_size(rows, *k1, n - 1 - m, ib, ALL_HEADS);
                    return Expr::app(c, &[a, b]);
                }
                r -= block;
            }
            unreachable!("rank within the head block")
        }
        _ => unreachable!("arity at most two"),
    }
}

const ALL_HEADS: u16 = (1 << 11) - 1;

/// A category restricted to a set of head constructors, in graded order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    pub cat: Cat,
    heads: u16,
}

impl Universe {
    pub fn all(cat: Cat) -> Universe {
        Universe { cat, heads: ALL_HEADS }
    }

    pub fn head(cat: Cat, c: Ctor) -> Universe {
        Universe { cat, heads: 1 << c as u16 }
    }

    pub fn except(cat: Cat, c: Ctor) -> Universe {
        Universe { cat, heads: ALL_HEADS & !(1 << c as u16) }
    }

    pub fn allows(&self, c: Ctor) -> bool {
        self.heads & (1 << c as u16) != 0 && production(self.cat, c).is_some()
    }

    pub fn heads(&self) -> impl Iterator<Item = Ctor> + '_ {
        Ctor::ALL.into_iter().filter(|&c| self.allows(c))
    }

    pub fn contains(&self, e: &Expr) -> bool {
        self.allows(e.ctor()) && contains(self.cat, e)
    }

    /// Members of size `n`.
    pub fn count(&self, n: usize) -> Result<BigUint> {
        let rows = counts(n)?;
        Ok(self.heads().map(|c| &rows[n][cell(self.cat, c)]).sum())
    }

    /// Position of `e` among the members, from zero.
    pub fn rank(&self, e: &Expr) -> Result<BigUint> {
        if !self.contains(e) {
            return Err(Error::UnsupportedShape { numbering: format!("{:?} order", self.cat), expr: e.clone() });
        }
        let n = size_of(e)?;
        let rows = counts(n)?;
        let mut acc = BigUint::zero();
        for row in &rows[1..n] {
            for c in self.heads() {
                acc += &row[cell(self.cat, c)];
            }
        }
        for c in self.heads().filter(|&c| c < e.ctor()) {
            acc += &rows[n][cell(self.cat, c)];
        }
        Ok(acc + within(&rows, self.cat, e, n))
    }

    pub fn unrank(&self, r: &BigUint) -> Result<Expr> {
        let mut r = r.clone();
        let mut n = 1;
        loop {
            let rows = counts(n)?;
            let block: BigUint = self.heads().map(|c| &rows[n][cell(self.cat, c)]).sum();
            if r < block {
                return Ok(unrank_same_size(&rows, self.cat, n, r, self.heads));
            }
            r -= block;
            n += 1;
            if n > MAX_RANK_SIZE {
                return Err(too_large(n));
            }
        }
    }
}

type ListKey = (Cat, usize);

static LISTS: LazyLock<RwLock<HashMap<ListKey, Arc<Vec<Expr>>>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

fn listing_guard(u: &Universe, n: usize) -> Result<()> {
    let c = u.count(n)?;
    if c > BigUint::from(MAX_LISTING) {
        return Err(Error::OracleIncomplete(format!("{c} expressions of size {n} is too many to list")));
    }
    Ok(())
}

/// All members of `cat` of size `n`, sorted.
pub fn list(cat: Cat, n: usize) -> Result<Arc<Vec<Expr>>> {
    if let Some(v) = LISTS.read().get(&(cat, n)) {
        return Ok(v.clone());
    }
    let v = Arc::new(list_universe(&Universe::all(cat), n)?);
    LISTS.write().insert((cat, n), v.clone());
    Ok(v)
}

/// All members of the universe of size `n`, sorted.
pub fn list_universe(u: &Universe, n: usize) -> Result<Vec<Expr>> {
    listing_guard(u, n)?;
    let mut out = Vec::new();
    for c in u.heads() {
        match production(u.cat, c).expect("allowed head") {
            [] => {
                if n == 1 {
                    out.push(Expr::leaf(c));
                }
            }
            [k] => {
                if n >= 2 {
                    for a in list(*k, n - 1)?.iter() {
                        out.push(Expr::app(c, std::slice::from_ref(a)));
                    }
                }
            }
            [k0, k1] => {
                for m in 1..n.saturating_sub(1) {
                    let right = list(*k1, n - 1 - m)?;
                    if right.is_empty() {
                        continue;
                    }
                    for a in list(*k0, m)?.iter() {
                        for b in right.iter() {
                            out.push(Expr::app(c, &[a.clone(), b.clone()]));
                        }
                    }
                }
            }
            _ => unreachable!("arity at most two"),
        }
    }
    Ok(out)
}

/// Classified members of one size.
#[derive(Debug, Default)]
pub struct Level {
    pub members: Vec<Expr>,
    /// Expressions whose classification was inconclusive.
    pub unknown: Vec<Expr>,
}

type Classifier = Box<dyn Fn(&Expr) -> Option<bool> + Send + Sync>;

/// A subset of a listing universe, enumerated densely in graded order.
/// Sizes are classified in parallel, one size at a time, and never revised.
/// Unclassified expressions are left out of every count and have no position.
pub struct MemberTable {
    name: String,
    listing: Universe,
    limit: usize,
    classify: Classifier,
    levels: RwLock<Vec<Arc<Level>>>,
    writer: Mutex<()>,
}

impl MemberTable {
    pub fn new(
        name: impl Into<String>,
        listing: Universe,
        limit: usize,
        classify: impl Fn(&Expr) -> Option<bool> + Send + Sync + 'static,
    ) -> MemberTable {
        MemberTable {
            name: name.into(),
            listing,
            limit,
            classify: Box::new(classify),
            levels: RwLock::new(vec![Arc::new(Level::default())]),
            writer: Mutex::new(()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn listing(&self) -> Universe {
        self.listing
    }

    fn beyond(&self, what: impl std::fmt::Display) -> Error {
        Error::OracleIncomplete(format!("{}: {what} beyond the enumeration limit {}", self.name, self.limit))
    }

    pub fn level(&self, n: usize) -> Result<Arc<Level>> {
        if n > self.limit {
            return Err(self.beyond(format_args!("size {n}")));
        }
        if let Some(l) = self.levels.read().get(n) {
            return Ok(l.clone());
        }
        let _w = self.writer.lock();
        loop {
            let size = self.levels.read().len();
            if size > n {
                break;
            }
            let exprs = list_universe(&self.listing, size)?;
            let verdicts: Vec<Option<bool>> = exprs.par_iter().map(|e| (self.classify)(e)).collect();
            let mut level = Level::default();
            for (e, v) in exprs.into_iter().zip(verdicts) {
                match v {
                    Some(true) => level.members.push(e),
                    Some(false) => {}
                    None => level.unknown.push(e),
                }
            }
            self.levels.write().push(Arc::new(level));
        }
        Ok(self.levels.read()[n].clone())
    }

    fn incomplete(&self, at: &Expr) -> Error {
        Error::OracleIncomplete(format!("{}: classification of {at} is unknown", self.name))
    }

    /// Members strictly below `e` in graded order.
    pub fn members_before(&self, e: &Expr) -> Result<BigUint> {
        Ok(self.before(e)?.0)
    }

    /// Unclassified expressions strictly below `e`.
    pub fn unknown_before(&self, e: &Expr) -> Result<BigUint> {
        Ok(self.before(e)?.1)
    }

    fn before(&self, e: &Expr) -> Result<(BigUint, BigUint)> {
        let n = e
            .size()
            .to_usize()
            .filter(|&n| n <= self.limit)
            .ok_or_else(|| self.beyond(format_args!("size {}", e.size_big())))?;
        let (mut members, mut unknown) = (0usize, 0usize);
        for m in 1..n {
            let l = self.level(m)?;
            members += l.members.len();
            unknown += l.unknown.len();
        }
        let l = self.level(n)?;
        members += l.members.partition_point(|x| x < e);
        unknown += l.unknown.partition_point(|x| x < e);
        Ok((BigUint::from(members), BigUint::from(unknown)))
    }

    pub fn is_member(&self, e: &Expr) -> Result<bool> {
        if !self.listing.contains(e) {
            return Ok(false);
        }
        let n = e
            .size()
            .to_usize()
            .filter(|&n| n <= self.limit)
            .ok_or_else(|| self.beyond(format_args!("size {}", e.size_big())))?;
        let l = self.level(n)?;
        if l.members.binary_search(e).is_ok() {
            return Ok(true);
        }
        if l.unknown.binary_search(e).is_ok() {
            return Err(self.incomplete(e));
        }
        Ok(false)
    }

    /// The member with index `k`.
    pub fn nth(&self, k: &BigUint) -> Result<Expr> {
        let mut k = k.to_usize().ok_or_else(|| self.beyond(format_args!("member {k}")))?;
        for n in 1..=self.limit {
            let l = self.level(n)?;
            if k < l.members.len() {
                return Ok(l.members[k].clone());
            }
            k -= l.members.len();
        }
        Err(self.beyond(format_args!("member {k}")))
    }

    /// Member or unclassified; the latter is an error only in `is_member`.
    fn excludes(&self, e: &Expr) -> Result<bool> {
        match self.is_member(e) {
            Err(Error::OracleIncomplete(_)) if self.listing.contains(e) => Ok(true),
            r => r,
        }
    }
}

/// Position of `e` among the members of `u` that belong to none of the
/// tables and are classified by all of them. Every table must list a
/// subset of `u`.
pub fn residual_rank(u: &Universe, tables: &[&MemberTable], e: &Expr) -> Result<BigUint> {
    let mut r = u.rank(e)?;
    for t in tables {
        if t.is_member(e)? {
            return Err(Error::UnsupportedShape { numbering: format!("residual of {}", t.name()), expr: e.clone() });
        }
        let (m, q) = t.before(e)?;
        r -= m + q;
    }
    Ok(r)
}

/// Inverse of [`residual_rank`].
pub fn residual_unrank(u: &Universe, tables: &[&MemberTable], k: &BigUint) -> Result<Expr> {
    let below = |e: &Expr| -> Result<BigUint> {
        let mut s = BigUint::zero();
        for t in tables {
            let (m, q) = t.before(e)?;
            s += m + q;
        }
        Ok(s)
    };
    // The k-th residual element sits at the first residual rank r with
    // r - (members below r) = k.
    let mut r = k.clone();
    loop {
        let next = k + below(&u.unrank(&r)?)?;
        if next == r {
            break;
        }
        r = next;
    }
    loop {
        let e = u.unrank(&r)?;
        let mut member = false;
        for t in tables {
            member |= t.excludes(&e)?;
        }
        if !member {
            return Ok(e);
        }
        r += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{is_formula, is_term, is_variable, parse};
    use proptest::prelude::*;

    /// Brute-force oracle: every raw expression of size `n`, by recursion
    /// on the sizes of the children.
    fn brute(n: usize) -> Vec<Expr> {
        if n == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        for c in Ctor::ALL {
            match c.arity() {
                0 if n == 1 => out.push(Expr::leaf(c)),
                1 if n >= 2 => out.extend(brute(n - 1).into_iter().map(|a| Expr::app(c, &[a]))),
                2 if n >= 3 => {
                    for m in 1..n - 1 {
                        for a in brute(m) {
                            for b in brute(n - 1 - m) {
                                out.push(Expr::app(c, &[a.clone(), b]));
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }

    fn in_cat(cat: Cat, e: &Expr) -> bool {
        let term_layer = crate::syntax::is_term_layer;
        match cat {
            Cat::Any => true,
            Cat::Tl => term_layer(e),
            Cat::Var => is_variable(e),
            Cat::Term => is_term(e),
            Cat::Form => is_formula(e),
            Cat::Gen => fn_gen(e),
        }
    }

    fn fn_gen(e: &Expr) -> bool {
        if e.ctor().is_term_ctor() {
            return crate::syntax::is_term_layer(e);
        }
        e.children().iter().all(fn_gen)
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=6 {
            let all = brute(n);
            for cat in Cat::ALL {
                let k = all.iter().filter(|e| in_cat(cat, e)).count();
                assert_eq!(count(cat, n).unwrap(), BigUint::from(k), "{cat:?} size {n}");
            }
        }
    }

    #[test]
    fn listings_are_sorted_and_ranked() {
        for cat in Cat::ALL {
            let u = Universe::all(cat);
            let mut offset = 0u32;
            for n in 1..=6 {
                let l = list(cat, n).unwrap();
                assert!(l.windows(2).all(|w| w[0] < w[1]));
                for (i, e) in l.iter().enumerate() {
                    let r = BigUint::from(offset + i as u32);
                    assert_eq!(u.rank(e).unwrap(), r);
                    assert_eq!(&u.unrank(&r).unwrap(), e);
                }
                offset += l.len() as u32;
            }
        }
    }

    #[test]
    fn head_restricted_universes() {
        let u = Universe::head(Cat::Gen, Ctor::Not);
        assert_eq!(u.unrank(&BigUint::zero()).unwrap(), parse("(not 0)").unwrap());
        assert_eq!(u.rank(&parse("(not 1)").unwrap()).unwrap(), BigUint::from(1u32));
        let nn = Universe::except(Cat::Any, Ctor::Not);
        assert_eq!(nn.rank(&parse("(S 0)").unwrap()).unwrap(), BigUint::from(3u32));
        assert!(nn.rank(&parse("(not 0)").unwrap()).is_err());
        assert!(!Universe::all(Cat::Gen).contains(&parse("(S (= 0 0))").unwrap()));
    }

    #[test]
    fn residual_numbering_inverts() {
        let even_size = MemberTable::new("even", Universe::all(Cat::Term), 6, |e| Some(e.size() % 2 == 0));
        let u = Universe::all(Cat::Term);
        for i in 0..200u32 {
            let k = BigUint::from(i);
            let e = residual_unrank(&u, &[&even_size], &k).unwrap();
            assert_eq!(e.size() % 2, 1);
            assert_eq!(residual_rank(&u, &[&even_size], &e).unwrap(), k);
        }
        let first = even_size.nth(&BigUint::zero()).unwrap();
        assert_eq!(first, parse("(S 0)").unwrap());
        assert!(even_size.nth(&BigUint::from(10u64.pow(9))).is_err());
    }

    #[test]
    fn unclassified_items_have_no_position() {
        let hole = parse("(S 0)").unwrap();
        let h = hole.clone();
        let t =
            MemberTable::new(
                "holes",
                Universe::all(Cat::Term),
                6,
                move |e| if *e == h { None } else { Some(e.size() == 2) },
            );
        let u = Universe::all(Cat::Term);
        assert!(matches!(t.is_member(&hole), Err(Error::OracleIncomplete(_))));
        assert!(matches!(residual_rank(&u, &[&t], &hole), Err(Error::OracleIncomplete(_))));
        let after = parse("(S 1)").unwrap();
        assert_eq!(t.members_before(&after).unwrap(), BigUint::zero());
        assert_eq!(t.unknown_before(&after).unwrap(), BigUint::from(1u32));
        assert_eq!(t.nth(&BigUint::zero()).unwrap(), after);
        let listed: Vec<Expr> = (0..30u32).map(|i| residual_unrank(&u, &[&t], &BigUint::from(i)).unwrap()).collect();
        assert!(listed.iter().all(|e| e.size() != 2));
        for (i, e) in listed.iter().enumerate() {
            assert_eq!(residual_rank(&u, &[&t], e).unwrap(), BigUint::from(i));
        }
    }

    proptest! {
        #[test]
        fn unrank_then_rank(r in 0u64..1_000_000_000, ci in 0usize..6) {
            let u = Universe::all(Cat::ALL[ci]);
            // one variable per size
            let r = BigUint::from(if u.cat == Cat::Var { r % 500 } else { r });
            let e = u.unrank(&r).unwrap();
            prop_assert!(u.contains(&e));
            prop_assert_eq!(u.rank(&e).unwrap(), r);
        }

        #[test]
        fn rank_is_monotone(a in 0u64..100_000, b in 0u64..100_000) {
            let u = Universe::all(Cat::Any);
            let (ea, eb) = (u.unrank(&BigUint::from(a)).unwrap(), u.unrank(&BigUint::from(b)).unwrap());
            prop_assert_eq!(a.cmp(&b), ea.cmp(&eb));
        }
    }
}
