//! Semidualizing modules: the certificate for a candidate `C`, splitting
//! of surjections between sums of `C`, the Bass class and C-resolutions,
//! reduction by a nonzerodivisor, and the verifier for
//! `C-dim Y = depth C - depth Y`.

mod ab;
mod certificate;
mod cres;
mod functor;

pub use ab::{
    corollary_suite, extend_regular_sequence, reduce_by_nzd, verify_ab, ABReport, Check, CorollaryReport, Extension,
    Reduction, ReductionStep, ReportJson, Witnesses,
};
pub use certificate::{
    check_semidualizing, default_ext_bound, split_surjection, CertificateJson, Config, Failure,
    SemidualizingCertificate, EXT_BOUND_VAR,
};
pub use functor::{functor_properties, FunctorReport};
pub use cres::{bass_class_check, c_dimension, c_resolution, BassReport, CResolution};

use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

pub(crate) fn format_vector(ring: &GradedRing, v: &[Polynomial]) -> String {
    let parts: Vec<String> = v.iter().map(|p| ring.format(p)).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests;
