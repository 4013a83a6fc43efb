//! Finitely presented graded modules over a quotient ring `R = S/I`.
//!
//! A module is a cokernel `R^m / im(rel)` with graded generators. Membership
//! and syzygies go through one module Groebner basis per presentation,
//! computed lazily and shared between clones.

mod hom;
mod linalg;
mod matrix;
mod module;
mod ops;
mod summand;

pub use hom::{syzygies, ModuleHom};
pub use matrix::{rank_mod_p, MatrixJson, RingMatrix};
pub use module::{minimize_tracked, FPModule, Minimized, ModuleJson, Subquotient};
pub use ops::{
    annihilator, hom_module, image_module, is_isomorphic, is_nonzerodivisor, kernel_of_scalar, minimal_generators,
    minimize_with_projection, quotient_by_element, tensor, tensor_presentation, zerodivisor_witness, HomModule, IsoResult,
};
pub use summand::{summand_analysis, unit_pivot_split, SummandAnalysis, Splitting};

#[cfg(test)]
pub(crate) use linalg::{mono_times, sparse, Echelon};
pub(crate) use module::{first_outside, preimage, subquotient};

#[cfg(test)]
mod tests;
