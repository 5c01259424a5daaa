//! Seeded random expressions for corpora, benches and property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{universal_closure, Ctor, Expr};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn leaf<R: Rng>(rng: &mut R, nvars: usize) -> Expr {
    let k = rng.gen_range(0..2 + nvars);
    match k {
        0 => Expr::zero(),
        1 => Expr::one(),
        _ => Expr::var(k - 2),
    }
}

/// A term of depth at most `depth` over the variables `v0 .. v(nvars-1)`.
pub fn random_term<R: Rng>(rng: &mut R, depth: usize, nvars: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return leaf(rng, nvars);
    }
    match rng.gen_range(0..3) {
        0 => Expr::s(random_term(rng, depth - 1, nvars)),
        1 => Expr::add(random_term(rng, depth - 1, nvars), random_term(rng, depth - 1, nvars)),
        _ => Expr::mul(random_term(rng, depth - 1, nvars), random_term(rng, depth - 1, nvars)),
    }
}

/// Like [`random_term`] but with primes allowed on any operand.
pub fn random_term_layer<R: Rng>(rng: &mut R, depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return [Expr::zero(), Expr::one(), Expr::v()].choose(rng).cloned().expect("nonempty");
    }
    let c = *[Ctor::S, Ctor::Prime, Ctor::Add, Ctor::Mul].choose(rng).expect("nonempty");
    let kids: Vec<Expr> = (0..c.arity()).map(|_| random_term_layer(rng, depth - 1)).collect();
    Expr::app(c, &kids)
}

/// A formula whose atoms are equations between terms of depth at most
/// `term_depth`.
pub fn random_formula<R: Rng>(rng: &mut R, depth: usize, term_depth: usize, nvars: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.35) {
        return Expr::eq(random_term(rng, term_depth, nvars), random_term(rng, term_depth, nvars));
    }
    match rng.gen_range(0..3) {
        0 => Expr::not(random_formula(rng, depth - 1, term_depth, nvars)),
        1 => Expr::and(
            random_formula(rng, depth - 1, term_depth, nvars),
            random_formula(rng, depth - 1, term_depth, nvars),
        ),
        _ => Expr::forall(Expr::var(rng.gen_range(0..nvars.max(1))), random_formula(rng, depth - 1, term_depth, nvars)),
    }
}

/// The universal closure of a random formula.
pub fn random_sentence<R: Rng>(rng: &mut R, depth: usize, term_depth: usize, nvars: usize) -> Expr {
    universal_closure(&random_formula(rng, depth, term_depth, nvars)).expect("formulas close")
}

/// Any raw expression, well-formed or not.
pub fn random_expr<R: Rng>(rng: &mut R, depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return leaf(rng, 2);
    }
    let c = *Ctor::ALL.choose(rng).expect("nonempty");
    if c.arity() == 0 {
        return Expr::leaf(c);
    }
    let kids: Vec<Expr> = (0..c.arity()).map(|_| random_expr(rng, depth - 1)).collect();
    Expr::app(c, &kids)
}
