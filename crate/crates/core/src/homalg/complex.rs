use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpmod::{first_outside, is_nonzerodivisor, preimage, subquotient, syzygies, FPModule, MatrixJson, RingMatrix};
use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

/// A complex of graded free modules `F_s -> ... -> F_1 -> F_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub ring: GradedRing,
    /// Generator degrees of `F_0, F_1, ..`.
    pub degrees: Vec<Vec<i32>>,
    /// `boundaries[i]` is `d_{i+1} : F_{i+1} -> F_i`.
    pub boundaries: Vec<RingMatrix>,
    /// The module the complex resolves, when there is one.
    pub augmentation: Option<FPModule>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub ranks: Vec<usize>,
    pub degrees: Vec<Vec<i32>>,
    pub boundaries: Vec<MatrixJson>,
}

impl ChainComplex {
    pub fn new(ring: &GradedRing, f0: Vec<i32>, boundaries: Vec<RingMatrix>) -> Result<Self> {
        let mut degrees = vec![f0];
        for (i, d) in boundaries.iter().enumerate() {
            if d.row_degrees() != degrees[i].as_slice() {
                return Err(Error::Semantic(format!("boundary {} does not match the degrees of F_{i}", i + 1)));
            }
            degrees.push(d.col_degrees().to_vec());
        }
        Ok(ChainComplex {
            ring: ring.clone(),
            degrees,
            boundaries,
            augmentation: None,
        })
    }

    pub fn length(&self) -> usize {
        self.boundaries.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// `d_i`, or `None` outside `1..=length`.
    pub fn boundary(&self, i: usize) -> Option<&RingMatrix> {
        if i == 0 {
            None
        } else {
            self.boundaries.get(i - 1)
        }
    }

    /// Every composite `d_i d_{i+1}` vanishes.
    pub fn is_complex(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].mul(&self.ring, &w[1]).is_zero())
    }

    /// No boundary entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.boundaries.iter().all(RingMatrix::is_minimal)
    }

    fn cycles(&self, i: usize) -> Vec<(Vec<Polynomial>, i32)> {
        let r = self.degrees[i].len();
        match self.boundary(i) {
            None => (0..r)
                .map(|j| {
                    let v = (0..r).map(|k| if k == j { self.ring.one() } else { self.ring.zero() }).collect();
                    (v, self.degrees[i][j])
                })
                .collect(),
            Some(d) => {
                let target = FPModule::free(&self.ring, self.degrees[i - 1].clone());
                preimage(&target, &[], d.columns(), d.col_degrees())
            }
        }
    }

    fn boundaries_into(&self, i: usize) -> &[Vec<Polynomial>] {
        self.boundary(i + 1).map(|d| d.columns()).unwrap_or(&[])
    }

    /// `H_i` as a minimally presented module.
    pub fn homology(&self, i: usize) -> FPModule {
        if i >= self.degrees.len() {
            return FPModule::zero(&self.ring);
        }
        let base = FPModule::free(&self.ring, self.degrees[i].clone());
        subquotient(&base, self.boundaries_into(i), self.cycles(i)).module
    }

    /// `H_i = 0`, decided without presenting the homology. On failure the
    /// returned cycle is not a boundary.
    pub fn homology_witness(&self, i: usize) -> Option<Vec<Polynomial>> {
        if i >= self.degrees.len() {
            return None;
        }
        let base = FPModule::free(&self.ring, self.degrees[i].clone());
        let cycles: Vec<Vec<Polynomial>> = self.cycles(i).into_iter().map(|(v, _)| v).collect();
        first_outside(&base, self.boundaries_into(i), &cycles).map(|k| cycles[k].clone())
    }

    /// Exact in every positive position.
    pub fn is_acyclic(&self) -> bool {
        (1..self.degrees.len()).all(|i| self.homology_witness(i).is_none())
    }

    /// `coker d_1`.
    pub fn h0(&self) -> FPModule {
        match self.boundary(1) {
            Some(d) => FPModule::from_matrix(&self.ring, d.clone()),
            None => FPModule::free(&self.ring, self.degrees[0].clone()),
        }
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            ranks: self.ranks(),
            degrees: self.degrees.clone(),
            boundaries: self.boundaries.iter().map(|d| d.to_json(&self.ring)).collect(),
        }
    }
}

/// A free resolution, possibly cut off at a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionResult {
    pub complex: ChainComplex,
    pub minimal: bool,
    pub length: usize,
    /// The bound was reached with a nonzero (or unexamined) next syzygy.
    pub truncated: bool,
}

impl ResolutionResult {
    pub fn betti(&self) -> Vec<usize> {
        self.complex.ranks()
    }

    /// Projective dimension when the resolution terminated.
    pub fn projective_dimension(&self) -> Option<usize> {
        (!self.truncated).then_some(self.length)
    }
}

/// Minimal graded free resolution by iterated syzygies, stopping after
/// `max_length` boundary maps.
pub fn free_resolution(m: &FPModule, max_length: usize) -> ResolutionResult {
    resolve(m, max_length, true)
}

/// [`free_resolution`] without computing the syzygies of the last map: a
/// resolution reaching the bound is reported as truncated even if it would
/// stop there. Enough for `Ext^i` with `i < max_length`.
pub fn free_resolution_bounded(m: &FPModule, max_length: usize) -> ResolutionResult {
    resolve(m, max_length, false)
}

/// With `probe` false the syzygies of the last map are not computed, so a
/// resolution that reaches the bound is reported as truncated even if it
/// would have stopped there.
pub(crate) fn resolve(m: &FPModule, max_length: usize, probe: bool) -> ResolutionResult {
    let ring = m.ring();
    let m = m.minimize();
    let mut boundaries: Vec<RingMatrix> = Vec::new();
    let mut cur = m.relations().clone();
    let mut truncated = false;
    while cur.ncols() > 0 {
        if boundaries.len() == max_length {
            truncated = true;
            break;
        }
        let next_needed = probe || boundaries.len() + 1 < max_length;
        let next = next_needed.then(|| syzygies(ring, &cur));
        boundaries.push(cur);
        match next {
            Some(n) => cur = n,
            None => {
                truncated = true;
                break;
            }
        }
    }
    let mut complex =
        ChainComplex::new(ring, m.gen_degrees().to_vec(), boundaries).expect("syzygy degrees are consistent");
    complex.augmentation = Some(m);
    ResolutionResult {
        minimal: complex.is_minimal(),
        length: complex.length(),
        truncated,
        complex,
    }
}

/// `K / xK` over `R/(x)` for a nonzerodivisor `x` on `R` and on `H_0(K)`.
/// The result is checked to have homology only in degree 0, equal to
/// `H_0(K) / x H_0(K)`.
pub fn complex_quotient(k: &ChainComplex, x: &Polynomial) -> Result<ChainComplex> {
    let ring = &k.ring;
    let x = ring.nf(x);
    let free = FPModule::free(ring, vec![0]);
    if !is_nonzerodivisor(&free, &x)? {
        return Err(Error::Precondition(format!("{} is a zerodivisor in the ring", ring.format(&x))));
    }
    let h0 = k.augmentation.clone().unwrap_or_else(|| k.h0());
    if !is_nonzerodivisor(&h0, &x)? {
        return Err(Error::Precondition(format!("{} is a zerodivisor on H_0", ring.format(&x))));
    }
    let q = ring.quotient_by(&[x.clone()])?;
    let boundaries: Vec<RingMatrix> = k
        .boundaries
        .iter()
        .map(|d| {
            let cols = d.columns().iter().map(|c| c.iter().map(|p| q.adopt(p)).collect()).collect();
            RingMatrix::from_columns(d.row_degrees().to_vec(), d.col_degrees().to_vec(), cols)
        })
        .collect();
    let mut out = ChainComplex::new(&q, k.degrees[0].clone(), boundaries)?;
    for i in 1..out.degrees.len() {
        if out.homology_witness(i).is_some() {
            return Err(Error::Verification(format!("K/xK has homology in degree {i}")));
        }
    }
    let expected = crate::fpmod::quotient_by_element(&h0, &x)?.base_change(&q)?;
    let iso = crate::fpmod::is_isomorphic(&out.h0(), &expected);
    if !iso.isomorphic {
        return Err(Error::Verification(format!("H_0(K/xK) differs from H_0/xH_0: {}", iso.reason)));
    }
    out.augmentation = Some(expected.minimize());
    Ok(out)
}
