//! Exact arithmetic over prime fields: monomials, monomial orders and
//! graded multivariate polynomials.

mod field;
mod hilbert;
mod monomial;
mod poly;

pub use field::PrimeField;
pub use hilbert::{hilbert_numerator, IntPoly};
pub use monomial::{Monomial, MonomialOrder, OrderKind, MAX_VARS};
pub use poly::{leading_term, poly_arith, ArithOp, PolyRing, Polynomial};

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 101;
