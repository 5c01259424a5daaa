use num_bigint::BigUint;
use thiserror::Error;

use crate::syntax::{Ctor, Expr, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("expected a variable, got {0}")]
    NotAVariable(Expr),
    #[error("expected a formula, got {0}")]
    NotAFormula(Expr),
    #[error("expected a term, got {0}")]
    NotATerm(Expr),
    #[error("term is not closed: {0}")]
    NotClosed(Expr),
    #[error("expected a sentence, got {0}")]
    NotASentence(Expr),
    #[error("{0} is not in the image of the pairing function")]
    NotInPairImage(BigUint),
    #[error("expected a term-layer expression, got {0}")]
    NotTermLayer(Expr),
    #[error("code too large to materialise: {0}")]
    CodeTooLarge(String),
    #[error("code {code} is not in the image of {numbering}")]
    NotInImage { numbering: String, code: BigUint },
    #[error("oracle incomplete: {0}")]
    OracleIncomplete(String),
    #[error("unsupported shape for {numbering}: {expr}")]
    UnsupportedShape { numbering: String, expr: Expr },
    #[error("{numbering} has no closed-form tracker for {ctor:?}")]
    NoTracker { numbering: String, ctor: Ctor },
    #[error("growth function is not strictly increasing at {0}")]
    NotMonotoneH(u64),
    #[error("numberings {0} and {1} are not equivalent on the corpus")]
    NotEquivalent(String, String),
    #[error("predicate {0} has no syntactic form")]
    MissingSyntacticForm(String),
    #[error("this consistency form needs a sentence psi")]
    MissingPsi,
    #[error("fixed point outside the decidable fragment: {0}")]
    FixedPointOutsideFragment(String),
    #[error("ill-formed representation payload: {0}")]
    IllFormedPayload(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
