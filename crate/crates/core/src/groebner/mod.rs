//! Buchberger's algorithm with cofactor traces, and the ideal operations
//! built on it.

mod buchberger;
mod ideal;
mod macaulay;

pub use buchberger::{
    buchberger, divide, normal_form, Division, GbOptions, GroebnerBasis, DEFAULT_PAIR_BUDGET,
};
pub use ideal::Ideal;
pub use macaulay::{bounded_combination, macaulay_member, DEFAULT_MAX_COLUMNS};
