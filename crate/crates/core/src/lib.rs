//! Executable numbering-invariance machinery for arithmetical syntax:
//! expressions, semiring rewriting, fragment truth, numberings, deviant
//! codings and Loeb-condition checks.

pub mod deviant;
pub mod error;
pub mod loeb;
pub mod numbering;
pub mod order;
pub mod pairing;
pub mod poly;
pub mod repr;
pub mod rewrite;
pub mod samples;
pub mod syntax;
pub mod truth;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use syntax::{parse, Ctor, Expr, View};

/// Codes are arbitrary-precision naturals.
pub type Code = BigUint;
