//! Multivariate polynomials with integer coefficients in canonical form.
//!
//! Term polynomials only ever carry natural coefficients; differences of
//! them (weight deltas, equation residues) need signed ones, so a single
//! signed type serves both.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Monomial {
        Monomial(vec![(i, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => a.next().copied(),
                    Ordering::Greater => b.next().copied(),
                    Ordering::Equal => {
                        a.next();
                        b.next();
                        Some((va, ea + eb))
                    }
                },
                (Some(_), None) => a.next().copied(),
                (None, Some(_)) => b.next().copied(),
                (None, None) => break,
            };
            out.extend(next);
        }
        Monomial(out)
    }

    fn without(&self, var: usize) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(v, _)| v != var).collect())
    }
}

/// Graded lexicographic: total degree first, then exponent vectors with
/// lower variables more significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut a, mut b) = (self.0.iter(), other.0.iter());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        // the lower variable present in only one side decides
                        if va != vb {
                            return vb.cmp(&va);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c.into());
        p
    }

    pub fn var(i: usize) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::var(i), BigInt::one());
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_natural(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn variables(&self) -> Vec<usize> {
        let set: std::collections::BTreeSet<usize> =
            self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        set.into_iter().collect()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Evaluates with `assign(var)` for every variable.
    pub fn eval(&self, assign: impl Fn(usize) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                t *= assign(v).pow(e);
            }
            total += t;
        }
        total
    }

    pub fn eval_nat(&self, assign: &[BigUint]) -> BigInt {
        self.eval(|v| BigInt::from(assign.get(v).cloned().unwrap_or_default()))
    }

    /// Replaces `var` by the constant `value`.
    pub fn substitute(&self, var: usize, value: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            out.add_term(m.without(var), c * value.pow(e));
        }
        out
    }

    /// Replaces every variable `x` by `x + shift`.
    pub fn shift_all(&self, shift: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in &m.0 {
                let base = Polynomial::var(v).add(&Polynomial::constant(shift.clone()));
                for _ in 0..e {
                    t = t.mul(&base);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Coefficients of `var^0, var^1, ...` as polynomials in the other variables.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exponent(var) as usize].add_term(m.without(var), c.clone());
        }
        out
    }

    /// Univariate coefficients, lowest degree first; `None` if other
    /// variables occur.
    pub fn univariate(&self, var: usize) -> Option<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().any(|&(v, _)| v != var) {
                return None;
            }
            out[m.exponent(var) as usize] += c;
        }
        Some(out)
    }

    /// Sign of the polynomial when it is the same for every assignment of
    /// naturals: all coefficients share one sign and the constant term is
    /// nonzero.
    pub fn definite_sign(&self) -> Option<Sign> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let s = c0.sign();
        self.terms.values().all(|c| c.sign() == s).then_some(s)
    }

    /// Positive at every assignment into `{n >= 2}`: after the shift
    /// `x = y + 2` all coefficients are nonnegative and the constant is positive.
    pub fn positive_on_two_up(&self) -> bool {
        let shifted = self.shift_all(&BigInt::from(2));
        shifted.is_natural() && shifted.constant_term().is_positive()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, name: impl Fn(usize) -> String) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> =
                m.0.iter().map(|&(v, e)| if e == 1 { name(v) } else { format!("{}^{e}", name(v)) }).collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                f.write_str(&mono.join(""))?;
            }
        }
        Ok(())
    }

    /// Renders with the weight indeterminates `X, Y, Z, ...`.
    pub fn display_xyz(&self) -> String {
        struct D<'a>(&'a Polynomial);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, |v| ["X", "Y", "Z", "W"].get(v).map_or(format!("X{v}"), |s| s.to_string()))
            }
        }
        D(self).to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, |v| format!("x{v}"))
    }
}
