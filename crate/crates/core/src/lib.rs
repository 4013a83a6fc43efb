//! Exact graded commutative algebra over prime fields, built to verify the
//! theory of semidualizing modules on concrete examples.
//!
//! The layers, bottom up: [`polyring`] (coefficients, monomials, orders),
//! [`groebner`] (Buchberger, quotient rings), [`fpmod`] (finitely presented
//! graded modules, Hom, tensor), [`homalg`] (resolutions, Ext, depth),
//! [`semidual`] (semidualizing checks, C-resolutions, the Auslander-Buchsbaum
//! verifier) and [`cli`] (the input language, corpus runner and reports).

pub mod cli;
pub mod error;
pub mod fpmod;
pub mod groebner;
pub mod homalg;
pub mod polyring;
pub mod semidual;
pub mod syntax;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
