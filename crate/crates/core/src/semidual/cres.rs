use super::certificate::{check_semidualizing, default_ext_bound};
use super::format_vector;
use crate::error::{Error, Result};
use crate::fpmod::{first_outside, hom_module, preimage, tensor_presentation, FPModule, HomModule, ModuleHom, RingMatrix};
use crate::homalg::{free_resolution, free_resolution_bounded, ChainComplex, HomComplex};
use crate::polyring::Polynomial;

/// Outcome of the Bass class test for `Y` with respect to `C`.
#[derive(Debug, Clone)]
pub struct BassReport {
    pub ext_bound: usize,
    /// First `i` in `1..=ext_bound` with `Ext^i(C, Y) != 0`.
    pub first_nonvanishing: Option<usize>,
    /// Cocycle representing the nonzero class.
    pub ext_witness: Option<String>,
    /// `C (x) Hom(C, Y) -> Y`, on the unminimized tensor presentation.
    pub evaluation: Option<ModuleHom>,
    pub evaluation_iso: bool,
}

impl BassReport {
    pub fn holds(&self) -> bool {
        self.first_nonvanishing.is_none() && self.evaluation_iso
    }
}

/// The evaluation map `c_i (x) phi_h -> phi_h(c_i)`.
fn evaluation(c: &FPModule, hom: &HomModule, y: &FPModule) -> Result<ModuleHom> {
    let t = tensor_presentation(c, &hom.module);
    let phis = hom.generators();
    let mut cols = Vec::with_capacity(c.ngens() * phis.len());
    for i in 0..c.ngens() {
        for phi in &phis {
            cols.push(phi.matrix.column(i).to_vec());
        }
    }
    ModuleHom::new(&t, y, cols, 0)
}

/// `Ext^i(C, Y) = 0` for `1 <= i <= ext_bound` and the evaluation map is an
/// isomorphism.
pub fn bass_class_check(c: &FPModule, y: &FPModule, ext_bound: usize) -> Result<BassReport> {
    if c.ring() != y.ring() {
        return Err(Error::AmbientMismatch("C and Y live over different rings".into()));
    }
    let c = c.minimize();
    let y = y.minimize();
    let ring = c.ring();
    let mut report = BassReport {
        ext_bound,
        first_nonvanishing: None,
        ext_witness: None,
        evaluation: None,
        evaluation_iso: false,
    };
    let res = free_resolution_bounded(&c, ext_bound + 1);
    let hc = HomComplex::new(&res, &y);
    for i in 1..=ext_bound {
        if let Some(w) = hc.nonzero_class(i) {
            report.first_nonvanishing = Some(i);
            report.ext_witness = Some(format_vector(ring, &w));
            break;
        }
    }
    let hom = hom_module(&c, &y);
    let ev = evaluation(&c, &hom, &y)?;
    report.evaluation_iso = ev.is_isomorphism();
    report.evaluation = Some(ev);
    Ok(report)
}

/// A resolution of `Y` by sums of copies of `C`, read off a minimal free
/// resolution of `Hom(C, Y)`.
#[derive(Debug, Clone)]
pub struct CResolution {
    pub c: FPModule,
    pub y: FPModule,
    /// The free resolution of `Hom(C, Y)`; the same matrices act on
    /// `C^{b_i}`.
    pub base: ChainComplex,
    pub length: usize,
    /// Exactness of `C (x) F` at positions `0..=length` (position 0 means
    /// the augmentation onto `Y` identifies `H_0` with `Y`).
    pub exact: Vec<bool>,
    /// `C^{b_0} -> Y`, column `(l, i)` the image of `c_i` in copy `l`.
    pub augmentation: RingMatrix,
}

impl CResolution {
    pub fn verified(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }
}

/// Generators `(l, i)` of `C^{b}` in the given shifts and the images under
/// `d (x) C`.
fn tensored_images(c: &FPModule, d: &RingMatrix) -> Vec<Vec<Polynomial>> {
    let nc = c.ngens();
    let mut images = Vec::with_capacity(d.nrows() * nc);
    for l in 0..d.ncols() {
        for i in 0..nc {
            let mut v = vec![Polynomial::zero(); d.nrows() * nc];
            for j in 0..d.nrows() {
                v[j * nc + i] = d.entry(j, l).clone();
            }
            images.push(v);
        }
    }
    images
}

fn copies(c: &FPModule, degrees: &[i32]) -> (FPModule, Vec<i32>) {
    let m = FPModule::sum_of_shifts(c, degrees);
    let degs = m.gen_degrees().to_vec();
    (m, degs)
}

/// Build the C-resolution of `Y` from `Hom(C, Y)` and verify it: the
/// complex `C (x) F` must be exact in positive degrees and its `H_0` must be
/// `Y` via evaluation.
pub fn c_resolution(c: &FPModule, y: &FPModule, max_length: usize) -> Result<CResolution> {
    let bound = default_ext_bound(c.ring());
    let cert = check_semidualizing(c, bound)?;
    if !cert.passed() {
        return Err(Error::Precondition("C is not semidualizing".into()));
    }
    let bass = bass_class_check(c, y, bound)?;
    if !bass.holds() {
        return Err(Error::Precondition("Y is not in the Bass class of C".into()));
    }
    build_c_resolution(c, y, max_length)
}

/// [`c_resolution`] for callers that already ran the semidualizing and
/// Bass class checks.
pub(crate) fn build_c_resolution(c: &FPModule, y: &FPModule, max_length: usize) -> Result<CResolution> {
    let c = c.minimize();
    let y = y.minimize();
    let hom = hom_module(&c, &y);
    let res = free_resolution(&hom.module, max_length);
    if res.truncated {
        return Err(Error::Truncated {
            bound: max_length,
            what: "no finite C-dimension detected: free resolution of Hom(C, Y)".into(),
        });
    }
    let base = res.complex;
    let s = base.length();
    let mut exact = Vec::with_capacity(s + 1);

    // Augmentation C^{b_0} -> Y: copy h carries c_i to phi_h(c_i).
    let phis = hom.generators();
    let mut aug_cols = Vec::new();
    for phi in &phis {
        for i in 0..c.ngens() {
            aug_cols.push(phi.matrix.column(i).to_vec());
        }
    }
    let (c0, c0_degs) = copies(&c, &base.degrees[0]);
    let augmentation = RingMatrix::from_columns(y.gen_degrees().to_vec(), c0_degs.clone(), aug_cols.clone());
    let d1 = base.boundary(1).map(|d| tensored_images(&c, d)).unwrap_or_default();
    {
        let eps = ModuleHom::new(&c0, &y, aug_cols, 0)?;
        let well = eps.is_well_defined();
        let onto = eps.is_surjective();
        let kernel = preimage(&y, &[], eps.matrix.columns(), &c0_degs);
        let kernel: Vec<Vec<Polynomial>> = kernel.into_iter().map(|(v, _)| v).collect();
        let kills = d1.iter().all(|v| y.contains(&eps.apply(v)));
        let ker_is_image = first_outside(&c0, &d1, &kernel).is_none();
        exact.push(well && onto && kills && ker_is_image);
    }
    for i in 1..=s {
        let d = base.boundary(i).expect("within length");
        let (ci, degs) = copies(&c, &base.degrees[i]);
        let (below, _) = copies(&c, &base.degrees[i - 1]);
        let images = tensored_images(&c, d);
        let cycles: Vec<Vec<Polynomial>> = preimage(&below, &[], &images, &degs)
            .into_iter()
            .map(|(v, _)| v)
            .collect();
        let bounds = base.boundary(i + 1).map(|e| tensored_images(&c, e)).unwrap_or_default();
        exact.push(first_outside(&ci, &bounds, &cycles).is_none());
    }
    let out = CResolution {
        c: c.clone(),
        y: y.clone(),
        length: s,
        base,
        exact,
        augmentation,
    };
    if !out.verified() {
        let at = out.exact.iter().position(|e| !e).unwrap_or(0);
        return Err(Error::Verification(format!("C-resolution is not exact at position {at}")));
    }
    Ok(out)
}

/// `C-dim Y`, the projective dimension of `Hom(C, Y)`, after verifying the
/// corresponding C-resolution.
pub fn c_dimension(c: &FPModule, y: &FPModule, max_length: usize) -> Result<usize> {
    let hom = hom_module(&c.minimize(), &y.minimize());
    let pd = free_resolution(&hom.module, max_length)
        .projective_dimension()
        .ok_or_else(|| Error::Truncated {
            bound: max_length,
            what: "no finite C-dimension detected up to bound".into(),
        })?;
    let cres = c_resolution(c, y, max_length)?;
    if cres.length != pd {
        return Err(Error::Verification(format!(
            "C-resolution length {} differs from pd Hom(C, Y) = {pd}",
            cres.length
        )));
    }
    Ok(pd)
}
