//! Exact tools around the effective Nullstellensatz.
//!
//! * [`poly`]: polynomials over `Q` with pluggable term orders.
//! * [`parse`]: the expression grammar, problem files and reports.
//! * [`groebner`]: Buchberger with cofactor traces, ideal operations and a
//!   Macaulay-matrix membership oracle.
//! * [`monomial`]: Newton polyhedra of monomial ideals, their Rees
//!   valuations (distinguished centers and coefficients), integral
//!   closures, multiplier-type ideals, symbolic powers and the inclusion
//!   checks built from them.
//! * [`nullstellensatz`]: minimal-degree certificates `1 = sum g_j f_j`
//!   and the classical degree bounds.
//! * [`verify`]: random corpora and the verification suites.

pub mod error;
pub mod groebner;
pub mod linalg;
pub mod lp;
pub mod monomial;
pub mod nullstellensatz;
pub mod parse;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};
