use rayon::prelude::*;

use super::complex::{resolve, ResolutionResult};
use crate::fpmod::{first_outside, preimage, subquotient, FPModule, Subquotient};
use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

/// `Hom(F, N)` for a free resolution `F` of `M`: the cochain complex whose
/// cohomology is `Ext(M, N)`.
pub struct HomComplex<'a> {
    res: &'a ResolutionResult,
    target: FPModule,
}

impl<'a> HomComplex<'a> {
    pub fn new(res: &'a ResolutionResult, target: &FPModule) -> Self {
        HomComplex {
            res,
            target: target.clone(),
        }
    }

    /// Highest `i` for which `Ext^i` is determined by the resolution.
    pub fn max_index(&self) -> usize {
        if self.res.truncated {
            self.res.length.saturating_sub(1)
        } else {
            usize::MAX
        }
    }

    fn degrees(&self, i: usize) -> &[i32] {
        self.res.complex.degrees.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `Hom(F_i, N) = sum_l N(-a_l)`.
    fn term(&self, i: usize) -> FPModule {
        let shifts: Vec<i32> = self.degrees(i).iter().map(|a| -a).collect();
        FPModule::sum_of_shifts(&self.target, &shifts)
    }

    /// Images of the generators of `Hom(F_i, N)` under `phi -> phi d_{i+1}`.
    fn differential(&self, i: usize) -> (Vec<Vec<Polynomial>>, Vec<i32>) {
        let ng = self.target.ngens();
        let src = self.degrees(i);
        let d = self.res.complex.boundary(i + 1);
        let p = d.map(|d| d.ncols()).unwrap_or(0);
        let mut images = Vec::with_capacity(src.len() * ng);
        let mut degs = Vec::with_capacity(src.len() * ng);
        for (l, a) in src.iter().enumerate() {
            for k in 0..ng {
                let mut v = vec![Polynomial::zero(); p * ng];
                if let Some(d) = d {
                    for j in 0..p {
                        v[j * ng + k] = d.entry(l, j).clone();
                    }
                }
                images.push(v);
                degs.push(self.target.gen_degrees()[k] - a);
            }
        }
        (images, degs)
    }

    fn cocycles(&self, i: usize) -> Vec<(Vec<Polynomial>, i32)> {
        let (images, degs) = self.differential(i);
        if self.res.complex.boundary(i + 1).is_none() {
            let n = images.len();
            let ring = self.target.ring();
            return (0..n)
                .map(|j| ((0..n).map(|k| if k == j { ring.one() } else { ring.zero() }).collect(), degs[j]))
                .collect();
        }
        preimage(&self.term(i + 1), &[], &images, &degs)
    }

    fn coboundaries(&self, i: usize) -> Vec<Vec<Polynomial>> {
        if i == 0 {
            return vec![];
        }
        self.differential(i - 1).0
    }

    /// `Ext^i(M, N)` with its generators as cocycles in `Hom(F_i, N)`.
    pub fn ext(&self, i: usize) -> Subquotient {
        assert!(i <= self.max_index(), "resolution too short for Ext^{i}");
        let ring = self.target.ring();
        if self.degrees(i).is_empty() || self.target.ngens() == 0 {
            return Subquotient {
                module: FPModule::zero(ring),
                embedding: vec![],
            };
        }
        subquotient(&self.term(i), &self.coboundaries(i), self.cocycles(i))
    }

    /// A cocycle representing a nonzero class of `Ext^i`, if any.
    pub fn nonzero_class(&self, i: usize) -> Option<Vec<Polynomial>> {
        assert!(i <= self.max_index(), "resolution too short for Ext^{i}");
        if self.degrees(i).is_empty() || self.target.ngens() == 0 {
            return None;
        }
        let cocycles: Vec<Vec<Polynomial>> = self.cocycles(i).into_iter().map(|(v, _)| v).collect();
        first_outside(&self.term(i), &self.coboundaries(i), &cocycles).map(|k| cocycles[k].clone())
    }
}

/// `Ext^i(M, N)` for `0 <= i <= i_max`, each minimally presented.
pub fn ext_modules(m: &FPModule, n: &FPModule, i_max: usize) -> Vec<FPModule> {
    let res = resolve(m, i_max + 1, false);
    let hc = HomComplex::new(&res, n);
    (0..=i_max).into_par_iter().map(|i| hc.ext(i).module).collect()
}

/// Resolution of `k = R/m` of length `dim(ambient) + 1`, computed once per
/// ring.
pub fn residue_resolution(ring: &GradedRing) -> &ResolutionResult {
    ring.residue_resolution_cell()
        .get_or_init(|| resolve(&FPModule::residue_field(ring), ring.nvars() + 1, false))
}
