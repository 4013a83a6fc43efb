use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpmod::{
    annihilator, first_outside, hom_module, is_nonzerodivisor, kernel_of_scalar, FPModule, ModuleHom,
};
use crate::groebner::radical_membership;
use crate::homalg::module_dimension;
use crate::polyring::Polynomial;

/// The behaviour of `h_C = Hom(C, -)` on multiplication by `x` on `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    /// `0 -> h_C(K) -> h_C(M)` is exact, `K = (0 :_M x)`.
    pub injective: bool,
    /// `h_C(K) -> h_C(M) -> h_C(M)` composes to zero.
    pub composite_zero: bool,
    /// The kernel of `x` on `h_C(M)` is the image of `h_C(K)`.
    pub exact_in_middle: bool,
    pub nzd_on_m: bool,
    pub nzd_on_hom: bool,
    pub same_support: bool,
    pub same_dimension: bool,
}

impl FunctorReport {
    pub fn passed(&self) -> bool {
        self.injective && self.composite_zero && self.exact_in_middle && self.nzd_on_m == self.nzd_on_hom
            && self.same_support
            && self.same_dimension
    }
}

/// Check left exactness of `h_C` on `0 -> K -> M -x-> M` and that `M` and
/// `h_C(M)` share nonzerodivisors (for `x`), support and dimension.
pub fn functor_properties(c: &FPModule, m: &FPModule, x: &Polynomial) -> Result<FunctorReport> {
    if c.ring() != m.ring() {
        return Err(Error::AmbientMismatch("C and M live over different rings".into()));
    }
    let ring = m.ring();
    let c = c.minimize();
    let m = m.minimize();
    let x = ring.nf(x);
    let k = kernel_of_scalar(&m, &x)?;
    let hm = hom_module(&c, &m);
    let hk = hom_module(&c, &k.module);
    let amb = hm.ambient();

    // psi : C -> K composed with K -> M, flattened into M^{ngens C}.
    let images: Vec<Vec<Polynomial>> = hk
        .generators()
        .iter()
        .map(|psi| {
            let mut v = Vec::with_capacity(c.ngens() * m.ngens());
            for col in psi.matrix.columns() {
                let mut img = vec![Polynomial::zero(); m.ngens()];
                for (coef, e) in col.iter().zip(&k.embedding) {
                    for (i, ei) in e.iter().enumerate() {
                        img[i] = ring.add(&img[i], &ring.mul(coef, ei));
                    }
                }
                v.extend(img);
            }
            v
        })
        .collect();
    let incl = ModuleHom::new(&hk.module, &amb, images.clone(), 0)?;
    let injective = incl.is_well_defined() && incl.is_injective();
    let times_x = |v: &Vec<Polynomial>| -> Vec<Polynomial> { v.iter().map(|e| ring.mul(&x, e)).collect() };
    let composite_zero = images.iter().all(|v| amb.contains(&times_x(v)));
    // Kernel of x on h_C(M), as vectors of the ambient M^{ngens C}.
    let on_hom = ModuleHom::scalar(&hm.module, &x)?.kernel();
    let kernel_vectors: Vec<Vec<Polynomial>> = on_hom
        .embedding
        .iter()
        .map(|coeffs| {
            let mut v = vec![Polynomial::zero(); c.ngens() * m.ngens()];
            for (a, g) in coeffs.iter().zip(hm.embedding()) {
                for (slot, gi) in v.iter_mut().zip(g) {
                    *slot = ring.add(slot, &ring.mul(a, gi));
                }
            }
            v
        })
        .collect();
    let exact_in_middle = first_outside(&amb, &images, &kernel_vectors).is_none();

    let nzd_on_m = is_nonzerodivisor(&m, &x)?;
    let nzd_on_hom = is_nonzerodivisor(&hm.module, &x)?;
    let (am, ah) = (annihilator(&m), annihilator(&hm.module));
    let mut same_support = true;
    for (a, b) in [(&am, &ah), (&ah, &am)] {
        for g in a.generators() {
            if !radical_membership(g, b)? {
                same_support = false;
            }
        }
    }
    let dim = |n: &FPModule| if n.is_zero() { Ok(-1) } else { module_dimension(n) };
    let same_dimension = dim(&m)? == dim(&hm.module)?;
    Ok(FunctorReport {
        injective,
        composite_zero,
        exact_in_middle,
        nzd_on_m,
        nzd_on_hom,
        same_support,
        same_dimension,
    })
}
