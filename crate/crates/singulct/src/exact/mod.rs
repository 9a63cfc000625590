//! Exact arithmetic substrate: rationals, sparse polynomials, monomial
//! ideals, and monomial weight valuations.
//!
//! Everything here is immutable after construction and safe to share across
//! workers; all operations are pure functions.

pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;

pub use ideal::{MonomialIdeal, OrdValue, WeightVector};
pub use monomial::Monomial;
pub use parse::{parse, parse_polynomial};
pub use poly::Polynomial;
pub use rational::{fmt_rat, rat, rat_int, ExtRat, Rat};
