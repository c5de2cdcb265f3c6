//! Exact polynomial arithmetic over the rationals.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::{minimalize, monomials_of_degree, monomials_up_to_degree, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{ArithOp, Polynomial};
pub use ring::PolyRing;

pub(crate) use polynomial::same_ring;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
