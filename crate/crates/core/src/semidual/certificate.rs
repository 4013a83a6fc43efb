use serde::Serialize;

use super::format_vector;
use crate::error::{Error, Result};
use crate::fpmod::{annihilator, first_outside, hom_module, unit_pivot_split, FPModule, ModuleHom, RingMatrix, Splitting};
use crate::groebner::GradedRing;
use crate::homalg::{HomComplex, DEFAULT_DEGREE_BOUND};

/// Environment variable overriding the default Ext bound.
pub const EXT_BOUND_VAR: &str = "SEMIDUAL_EXT_BOUND";

/// `2 * nvars + 2`, unless overridden by `SEMIDUAL_EXT_BOUND`.
pub fn default_ext_bound(ring: &GradedRing) -> usize {
    std::env::var(EXT_BOUND_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b| b >= 1)
        .unwrap_or(2 * ring.nvars() + 2)
}

/// Bounds and seed for a verification run. `None` means the ring-dependent
/// default.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    pub ext_bound: Option<usize>,
    pub max_length: Option<usize>,
    pub degree_bound: i32,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ext_bound: None,
            max_length: None,
            degree_bound: DEFAULT_DEGREE_BOUND,
            seed: 0x5eed,
        }
    }
}

impl Config {
    pub fn ext_bound_for(&self, ring: &GradedRing) -> usize {
        self.ext_bound.unwrap_or_else(|| default_ext_bound(ring))
    }

    /// Resolution length bound, `nvars + 2` by default.
    pub fn max_length_for(&self, ring: &GradedRing) -> usize {
        self.max_length.unwrap_or(ring.nvars() + 2)
    }
}

/// Why a module is not (or not provably) semidualizing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    /// `End(C)` needs more than the identity to generate it.
    EndNotCyclic { generators: usize, witness: String },
    /// A ring element outside the defining ideal kills `C`.
    NotFaithful { element: String },
    /// `Ext^index(C, C)` has the given nonzero cocycle.
    ExtNonzero { index: usize, witness: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidualizingCertificate {
    pub ring: GradedRing,
    pub module: FPModule,
    /// Minimal number of generators of `End(C)`.
    pub end_generators: usize,
    /// `End(C)` is generated by the identity.
    pub end_cyclic: bool,
    /// `ann C = 0`.
    pub faithful: bool,
    pub ext_bound: usize,
    /// Largest `i` with `Ext^1..Ext^i` checked to vanish.
    pub ext_vanishing_through: usize,
    pub failure: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub verdict: String,
    pub end_generators: usize,
    pub end_cyclic: bool,
    pub faithful: bool,
    pub ext_bound: usize,
    pub ext_vanishing_through: usize,
    pub failure: Option<Failure>,
}

impl SemidualizingCertificate {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// `verified_up_to_bound` or `failed`.
    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "verified_up_to_bound"
        } else {
            "failed"
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            verdict: self.verdict().to_string(),
            end_generators: self.end_generators,
            end_cyclic: self.end_cyclic,
            faithful: self.faithful,
            ext_bound: self.ext_bound,
            ext_vanishing_through: self.ext_vanishing_through,
            failure: self.failure.clone(),
        }
    }
}

/// Decide `R -> End(C)` bijective exactly (End generated by the identity
/// and `ann C = 0`) and check `Ext^i(C, C) = 0` for `1 <= i <= ext_bound`.
pub fn check_semidualizing(c: &FPModule, ext_bound: usize) -> Result<SemidualizingCertificate> {
    if ext_bound == 0 {
        return Err(Error::Precondition("ext bound must be at least 1".into()));
    }
    let c = c.minimize();
    if c.ngens() == 0 {
        return Err(Error::ZeroModule("semidualizing check"));
    }
    let ring = c.ring().clone();
    let mut cert = SemidualizingCertificate {
        ring: ring.clone(),
        module: c.clone(),
        end_generators: 0,
        end_cyclic: false,
        faithful: false,
        ext_bound,
        ext_vanishing_through: 0,
        failure: None,
    };

    let end = hom_module(&c, &c);
    cert.end_generators = end.ngens();
    let id = ModuleHom::identity(&c);
    let outside = first_outside(&end.ambient(), &[end.flatten(&id)], end.embedding());
    cert.end_cyclic = outside.is_none();
    if let Some(h) = outside {
        cert.failure = Some(Failure::EndNotCyclic {
            generators: end.ngens(),
            witness: format_vector(&ring, &end.embedding()[h]),
        });
        return Ok(cert);
    }
    let ann = annihilator(&c);
    let extra = ann.generators().iter().find(|g| !ring.is_zero(g));
    cert.faithful = extra.is_none();
    if let Some(g) = extra {
        cert.failure = Some(Failure::NotFaithful { element: ring.format(g) });
        return Ok(cert);
    }

    let res = crate::homalg::free_resolution_bounded(&c, ext_bound + 1);
    let hc = HomComplex::new(&res, &c);
    for i in 1..=ext_bound {
        if let Some(w) = hc.nonzero_class(i) {
            cert.failure = Some(Failure::ExtNonzero {
                index: i,
                witness: format_vector(&ring, &w),
            });
            return Ok(cert);
        }
        cert.ext_vanishing_through = i;
    }
    Ok(cert)
}

/// A right inverse of a surjection `T : C^n -> C^q`, given as a `q x n`
/// matrix over `R = End(C)`, by unit-pivot elimination. The product `T S`
/// is checked to be the identity.
pub fn split_surjection(ring: &GradedRing, t: &RingMatrix) -> Result<Splitting> {
    let s = unit_pivot_split(ring, t)?;
    let ts = t.mul(ring, &s.section);
    if ts.columns() != RingMatrix::identity(ring, t.row_degrees()).columns() {
        return Err(Error::Verification("T S is not the identity".into()));
    }
    if !t.mul(ring, &s.complement).is_zero() {
        return Err(Error::Verification("complement is not in the kernel of T".into()));
    }
    Ok(s)
}
