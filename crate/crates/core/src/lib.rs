//! Exact enumerative combinatorics.
//!
//! Every counting operation returns an arbitrary-precision natural number
//! ([`Nat`]) or an exact rational ([`Rat`]); nothing is ever rounded. Closed
//! forms (binomial and multinomial coefficients, surjection and derangement
//! counts, Stirling numbers, inclusion-exclusion sums) live alongside
//! independent brute-force enumerators ([`oracle`]) that validate them on
//! small instances.

pub mod asymptotics;
pub mod binomials;
mod dd;
pub mod exactnum;
pub mod expand;
pub mod family;
pub mod inclexcl;
pub mod mapscount;
pub mod oracle;

pub use binomials::Composition;
pub use exactnum::{Nat, Rat};
pub use expand::{Monomial, Poly};
pub use family::{Measure, SetFamily};

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Arguments outside an operation's domain (mismatched universes,
    /// bad arity, p > n, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// Instance exceeds a hard enumeration cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
