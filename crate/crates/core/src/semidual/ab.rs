use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::certificate::{check_semidualizing, CertificateJson, Config, SemidualizingCertificate};
use super::cres::{bass_class_check, build_c_resolution, c_dimension, CResolution};
use super::format_vector;
use crate::error::{Error, Result};
use crate::fpmod::{
    annihilator, hom_module, is_isomorphic, is_nonzerodivisor, quotient_by_element, zerodivisor_witness, FPModule,
    MatrixJson, ModuleJson,
};
use crate::groebner::{radical_membership, GradedRing, GroebnerBasis};
use crate::homalg::{depth, free_resolution, module_dimension, regular_sequence_search_with, DepthResult};
use crate::polyring::Polynomial;

/// `C/xC` over `R/(x)` with its certificate.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub ring: GradedRing,
    pub module: FPModule,
    pub certificate: SemidualizingCertificate,
}

fn require_nzd(m: &FPModule, x: &Polynomial, on: &str) -> Result<()> {
    if let Some(w) = zerodivisor_witness(m, x)? {
        return Err(Error::ZeroDivisor {
            element: m.ring().format(x),
            on: on.to_string(),
            witness: format_vector(m.ring(), &w),
        });
    }
    Ok(())
}

/// Pass from `(R, C)` to `(R/(x), C/xC)` for a homogeneous nonzerodivisor
/// `x` and re-run the semidualizing check there.
pub fn reduce_by_nzd(ring: &GradedRing, c: &FPModule, x: &Polynomial, ext_bound: usize) -> Result<Reduction> {
    if c.ring() != ring {
        return Err(Error::AmbientMismatch("C lives over another ring".into()));
    }
    let x = ring.nf(x);
    require_nzd(&FPModule::free(ring, vec![0]), &x, "the ring")?;
    require_nzd(c, &x, "C")?;
    let q = ring.quotient_by(&[x.clone()])?;
    let module = quotient_by_element(c, &x)?.base_change(&q)?.minimize();
    let certificate = check_semidualizing(&module, ext_bound)?;
    Ok(Reduction {
        ring: q,
        module,
        certificate,
    })
}

/// One step of the reduction replayed from the proof of the main identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub element: String,
    pub nzd_on_y: bool,
    pub nzd_on_c: bool,
    /// A nonzerodivisor on a module of finite projective dimension is one
    /// on the ring; checked, not assumed.
    pub nzd_in_ring: bool,
    pub pd_before: usize,
    pub pd_after: usize,
    /// `Hom(C, Y) / x Hom(C, Y)` is `Hom(C/xC, Y/xY)` over `R/(x)`.
    pub hom_commutes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub checks: Vec<Check>,
}

impl CorollaryReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

/// Outcome of [`verify_ab`].
#[derive(Debug, Clone)]
pub struct ABReport {
    pub certificate: SemidualizingCertificate,
    pub y: FPModule,
    pub c_dim: usize,
    pub depth_c: DepthResult,
    pub depth_y: DepthResult,
    pub pd_hom: usize,
    /// `C-dim Y = depth C - depth Y`.
    pub identity_holds: bool,
    /// `C-dim Y = pd Hom(C, Y)`.
    pub pd_matches: bool,
    pub reduction: Vec<ReductionStep>,
    pub corollaries: CorollaryReport,
    pub c_resolution: CResolution,
    pub ext_bound: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub regular_sequence: Vec<String>,
    pub splitting_matrices: Vec<MatrixJson>,
}

/// The JSON report, keys in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub ring: String,
    #[serde(rename = "C")]
    pub c: ModuleJson,
    #[serde(rename = "Y")]
    pub y: ModuleJson,
    pub certificate: CertificateJson,
    pub c_dim: usize,
    #[serde(rename = "depth_C")]
    pub depth_c: usize,
    #[serde(rename = "depth_Y")]
    pub depth_y: usize,
    pub pd_hom: usize,
    pub ab_identity: bool,
    pub ext_bound: usize,
    pub witnesses: Witnesses,
}

impl ABReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.pd_matches && self.corollaries.all_passed()
    }

    pub fn to_json(&self) -> ReportJson {
        let ring = &self.certificate.ring;
        ReportJson {
            ring: ring.describe(),
            c: self.certificate.module.to_json(),
            y: self.y.to_json(),
            certificate: self.certificate.to_json(),
            c_dim: self.c_dim,
            depth_c: self.depth_c.value,
            depth_y: self.depth_y.value,
            pd_hom: self.pd_hom,
            ab_identity: self.identity_holds,
            ext_bound: self.ext_bound,
            witnesses: Witnesses {
                regular_sequence: self.depth_y.witness.iter().map(|f| ring.format(f)).collect(),
                splitting_matrices: vec![],
            },
        }
    }
}

fn pd_of(m: &FPModule, max_length: usize) -> Result<usize> {
    free_resolution(m, max_length)
        .projective_dimension()
        .ok_or_else(|| Error::Truncated {
            bound: max_length,
            what: "no finite projective dimension detected".into(),
        })
}

/// Replay the reduction along a regular sequence on `Y`.
fn replay(c: &FPModule, y: &FPModule, seq: &[Polynomial], max_length: usize) -> Result<Vec<ReductionStep>> {
    let mut ring = c.ring().clone();
    let mut c = c.clone();
    let mut y = y.clone();
    let mut h = hom_module(&c, &y).module;
    let mut steps = Vec::new();
    for x in seq {
        let x = ring.adopt(x);
        let name = ring.format(&x);
        let nzd_on_y = is_nonzerodivisor(&y, &x)?;
        let nzd_on_c = is_nonzerodivisor(&c, &x)?;
        let nzd_in_ring = is_nonzerodivisor(&FPModule::free(&ring, vec![0]), &x)?;
        if !(nzd_on_y && nzd_on_c && nzd_in_ring) {
            let (m, on) = if !nzd_on_y {
                (&y, "Y")
            } else if !nzd_on_c {
                (&c, "C")
            } else {
                return require_nzd(&FPModule::free(&ring, vec![0]), &x, "the ring").map(|_| steps);
            };
            require_nzd(m, &x, on)?;
        }
        let pd_before = pd_of(&h, max_length)?;
        let q = ring.quotient_by(&[x.clone()])?;
        let h_red = quotient_by_element(&h, &x)?.base_change(&q)?.minimize();
        let pd_after = pd_of(&h_red, max_length)?;
        let c_next = quotient_by_element(&c, &x)?.base_change(&q)?.minimize();
        let y_next = quotient_by_element(&y, &x)?.base_change(&q)?.minimize();
        let h_next = hom_module(&c_next, &y_next).module;
        let hom_commutes = is_isomorphic(&h_red, &h_next).isomorphic;
        let step = ReductionStep {
            element: name,
            nzd_on_y,
            nzd_on_c,
            nzd_in_ring,
            pd_before,
            pd_after,
            hom_commutes,
        };
        if pd_before != pd_after || !hom_commutes {
            return Err(Error::Verification(format!("reduction step failed: {step:?}")));
        }
        steps.push(step);
        ring = q;
        c = c_next;
        y = y_next;
        h = h_next;
    }
    let d = depth(&y)?.value;
    if d != 0 {
        return Err(Error::Verification(format!("Y modulo the regular sequence still has depth {d}")));
    }
    Ok(steps)
}

/// Verify `C-dim Y = depth C - depth Y` together with `C-dim Y =
/// pd Hom(C, Y)`, replaying the reduction to depth zero and running the
/// corollary suite.
pub fn verify_ab(c: &FPModule, y: &FPModule, config: &Config) -> Result<ABReport> {
    if c.ring() != y.ring() {
        return Err(Error::AmbientMismatch("C and Y live over different rings".into()));
    }
    let c = c.minimize();
    let y = y.minimize();
    if y.ngens() == 0 {
        return Err(Error::ZeroModule("verify_ab: Y"));
    }
    let ring = c.ring().clone();
    let bound = config.ext_bound_for(&ring);
    let max_length = config.max_length_for(&ring);
    let certificate = check_semidualizing(&c, bound)?;
    if let Some(f) = &certificate.failure {
        return Err(Error::Verification(format!("C is not semidualizing: {f:?}")));
    }
    let bass = bass_class_check(&c, &y, bound)?;
    if !bass.holds() {
        return Err(Error::Verification(format!(
            "Y is not in the Bass class: Ext index {:?}, evaluation iso {}",
            bass.first_nonvanishing, bass.evaluation_iso
        )));
    }
    let h = hom_module(&c, &y).module;
    let pd_hom = pd_of(&h, max_length).map_err(|_| Error::Truncated {
        bound: max_length,
        what: "no finite C-dimension detected: free resolution of Hom(C, Y)".into(),
    })?;
    let cres = build_c_resolution(&c, &y, max_length)?;
    let c_dim = cres.length;
    let depth_c = depth(&c)?;
    let depth_y = depth(&y)?;
    let identity_holds = c_dim as i64 == depth_c.value as i64 - depth_y.value as i64;
    let reduction = replay(&c, &y, &depth_y.witness, max_length)?;
    let corollaries = corollary_suite(&c, Some(&y), config)?;
    Ok(ABReport {
        certificate,
        y,
        c_dim,
        depth_c,
        depth_y,
        pd_hom,
        identity_holds,
        pd_matches: c_dim == pd_hom,
        reduction,
        corollaries,
        c_resolution: cres,
        ext_bound: bound,
        seed: config.seed,
    })
}

/// `rad(a) = rad(b)` for ideals of the same ambient ring.
fn same_radical(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool> {
    for g in a.generators() {
        if !radical_membership(g, b)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !radical_membership(g, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Homogeneous test elements: all standard monomials in each degree up to
/// `degree_bound` variable factors, plus 64 random combinations where a
/// degree has more than one monomial.
fn sample_elements(ring: &GradedRing, degree_bound: i32, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ring.characteristic();
    let mut out = Vec::new();
    for d in 1..=degree_bound * ring.max_weight() as i32 {
        let monos: Vec<Polynomial> = ring
            .standard_monomials(d)
            .iter()
            .map(|m| ring.ambient().monomial(*m, 1))
            .collect();
        out.extend(monos.iter().cloned());
        if monos.len() > 1 {
            for _ in 0..64 {
                let mut f = Polynomial::zero();
                for m in &monos {
                    f = ring.add(&f, &ring.scale(m, rng.gen_range(0..p)));
                }
                if !f.is_zero() {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// The corollary identities for `C`, and for `Y` against `Hom(C, Y)` when
/// `Y` is given. Each identity is reported; none aborts the run.
pub fn corollary_suite(c: &FPModule, y: Option<&FPModule>, config: &Config) -> Result<CorollaryReport> {
    let c = c.minimize();
    let ring = c.ring().clone();
    let mut report = CorollaryReport { checks: vec![] };
    let ann = annihilator(&c);
    let faithful = ring.ideal().contains_ideal(&ann);
    report.push("ann C = 0", faithful, format!("{} generators", ann.generators().len()));
    let full = same_radical(&ann, ring.ideal())?;
    report.push("Supp C = Spec R", full, "radical membership both ways".into());
    let dim_c = module_dimension(&c)?;
    report.push(
        "dim C = dim R",
        dim_c == ring.dimension(),
        format!("{dim_c} vs {}", ring.dimension()),
    );
    let depth_c = depth(&c)?.value;
    let depth_r = depth(&FPModule::free(&ring, vec![0]))?.value;
    report.push("depth C = depth R", depth_c == depth_r, format!("{depth_c} vs {depth_r}"));

    if let Some(y) = y {
        let y = y.minimize();
        let h = hom_module(&c, &y).module;
        if y.ngens() == 0 || h.ngens() == 0 {
            report.push(
                "Hom(C, Y) = 0 iff Y = 0",
                (y.ngens() == 0) == (h.ngens() == 0),
                format!("{} vs {} generators", y.ngens(), h.ngens()),
            );
            return Ok(report);
        }
        let supp = same_radical(&annihilator(&y), &annihilator(&h))?;
        report.push("Supp Y = Supp Hom(C, Y)", supp, "radicals of annihilators".into());
        let (dy, dh) = (module_dimension(&y)?, module_dimension(&h)?);
        report.push("dim Y = dim Hom(C, Y)", dy == dh, format!("{dy} vs {dh}"));
        let (ey, eh) = (depth(&y)?.value, depth(&h)?.value);
        report.push("depth Y = depth Hom(C, Y)", ey == eh, format!("{ey} vs {eh}"));
        let sample = sample_elements(&ring, config.degree_bound.min(3), config.seed);
        let mut mismatch = None;
        for x in &sample {
            if is_nonzerodivisor(&y, x)? != is_nonzerodivisor(&h, x)? {
                mismatch = Some(ring.format(x));
                break;
            }
        }
        report.push(
            "nonzerodivisors of Y and Hom(C, Y) agree",
            mismatch.is_none(),
            match mismatch {
                Some(x) => format!("disagree on {x}"),
                None => format!("{} elements, seed {:#x}", sample.len(), config.seed),
            },
        );
    }
    Ok(report)
}

/// A regular sequence on `C` extending one on `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub sequence: Vec<Polynomial>,
    /// How many leading elements were given.
    pub given: usize,
}

/// Check that `seq` is regular on `Y`, on `C` and in `R`, then extend it to
/// a maximal regular sequence on `C`.
pub fn extend_regular_sequence(c: &FPModule, y: &FPModule, seq: &[Polynomial], config: &Config) -> Result<Extension> {
    let ring = c.ring().clone();
    let max_length = config.max_length_for(&ring);
    let mut yq = y.minimize();
    let mut cq = c.minimize();
    let mut rq = FPModule::free(&ring, vec![0]);
    for x in seq {
        require_nzd(&yq, x, "Y modulo the earlier elements")?;
        require_nzd(&cq, x, "C modulo the earlier elements")?;
        require_nzd(&rq, x, "R modulo the earlier elements")?;
        yq = quotient_by_element(&yq, x)?.minimize();
        cq = quotient_by_element(&cq, x)?.minimize();
        rq = quotient_by_element(&rq, x)?.minimize();
    }
    c_dimension(c, y, max_length)?;
    let want = depth(c)?.value;
    let mut sequence = seq.to_vec();
    if want > seq.len() {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let more = regular_sequence_search_with(&cq, want - seq.len(), config.degree_bound, &mut rng);
        sequence.extend(more);
    }
    if sequence.len() < want {
        return Err(Error::SearchExhausted {
            bound: config.degree_bound,
            found: sequence.len(),
            wanted: want,
        });
    }
    Ok(Extension {
        sequence,
        given: seq.len(),
    })
}
