use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use super::hom::ModuleHom;
use super::matrix::{rank_mod_p, RingMatrix};
use super::module::{minimize_tracked, preimage, subquotient, FPModule, Subquotient};
use crate::error::{Error, Result};
use crate::groebner::{groebner_in, GroebnerBasis};
use crate::polyring::Polynomial;

/// `Hom(M, N)` with a way back from its generators to explicit maps.
#[derive(Debug, Clone)]
pub struct HomModule {
    /// Minimal presentation.
    pub module: FPModule,
    pub source: FPModule,
    pub target: FPModule,
    /// Generator `h` as a vector of `N^m`, block `l` holding the image of
    /// the `l`-th generator of `M`.
    embedding: Vec<Vec<Polynomial>>,
}

impl HomModule {
    pub fn ngens(&self) -> usize {
        self.module.ngens()
    }

    /// The `h`-th generator as an explicit homomorphism.
    pub fn generator(&self, h: usize) -> ModuleHom {
        self.element(&self.embedding[h], self.module.gen_degrees()[h])
    }

    /// All generators.
    pub fn generators(&self) -> Vec<ModuleHom> {
        (0..self.ngens()).map(|h| self.generator(h)).collect()
    }

    fn element(&self, v: &[Polynomial], degree: i32) -> ModuleHom {
        let n = self.target.ngens();
        let cols: Vec<Vec<Polynomial>> = v.chunks(n.max(1)).map(|c| c.to_vec()).collect();
        let cols = if n == 0 { vec![vec![]; self.source.ngens()] } else { cols };
        let col_deg: Vec<i32> = self.source.gen_degrees().iter().map(|d| d + degree).collect();
        ModuleHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: RingMatrix::from_columns(self.target.gen_degrees().to_vec(), col_deg, cols),
            degree,
        }
    }

    /// `sum_h coeffs[h] * generator(h)` for homogeneous coefficients making a
    /// map of degree `degree`.
    pub fn combination(&self, coeffs: &[Polynomial], degree: i32) -> ModuleHom {
        let ring = self.module.ring();
        let len = self.source.ngens() * self.target.ngens();
        let mut v = vec![Polynomial::zero(); len];
        for (c, e) in coeffs.iter().zip(&self.embedding) {
            if c.is_zero() {
                continue;
            }
            for i in 0..len {
                v[i] = ring.add(&v[i], &ring.mul(c, &e[i]));
            }
        }
        self.element(&v, degree)
    }

    /// The generator vectors, for membership questions inside `N^m`.
    pub(crate) fn embedding(&self) -> &[Vec<Polynomial>] {
        &self.embedding
    }

    /// `N^m` with generator `(l, k)` in degree `deg N_k - deg M_l`, the
    /// ambient module the generators live in.
    pub(crate) fn ambient(&self) -> FPModule {
        let shifts: Vec<i32> = self.source.gen_degrees().iter().map(|a| -a).collect();
        FPModule::sum_of_shifts(&self.target, &shifts)
    }

    /// Flatten a homomorphism `M -> N` into a vector of the ambient module.
    pub(crate) fn flatten(&self, phi: &ModuleHom) -> Vec<Polynomial> {
        phi.matrix.columns().iter().flat_map(|c| c.iter().cloned()).collect()
    }
}

/// `Hom_R(M, N)` as the kernel of `N^m -> N^p`, `phi -> phi * A` where `A`
/// is the relation matrix of `M`.
pub fn hom_module(m: &FPModule, n: &FPModule) -> HomModule {
    let ring = m.ring();
    let (mg, ng, p) = (m.ngens(), n.ngens(), m.nrels());
    if mg == 0 || ng == 0 {
        return HomModule {
            module: FPModule::zero(ring),
            source: m.clone(),
            target: n.clone(),
            embedding: vec![],
        };
    }
    let a = m.relations();
    let src_shifts: Vec<i32> = m.gen_degrees().iter().map(|d| -d).collect();
    let tgt_shifts: Vec<i32> = a.col_degrees().iter().map(|d| -d).collect();
    let source = FPModule::sum_of_shifts(n, &src_shifts);
    let target = FPModule::sum_of_shifts(n, &tgt_shifts);

    let mut images = Vec::with_capacity(mg * ng);
    let mut degs = Vec::with_capacity(mg * ng);
    for l in 0..mg {
        for k in 0..ng {
            let mut v = vec![Polynomial::zero(); p * ng];
            for j in 0..p {
                v[j * ng + k] = a.entry(l, j).clone();
            }
            images.push(v);
            degs.push(n.gen_degrees()[k] - m.gen_degrees()[l]);
        }
    }
    let gens = preimage(&target, &[], &images, &degs);
    let sq = subquotient(&source, &[], gens);
    HomModule {
        module: sq.module,
        source: m.clone(),
        target: n.clone(),
        embedding: sq.embedding,
    }
}

/// `M (x) N`, minimally presented.
pub fn tensor(m: &FPModule, n: &FPModule) -> FPModule {
    tensor_presentation(m, n).minimize()
}

/// `M (x) N` presented on the generator pairs `(i, k)`, generator
/// `i * n.ngens() + k` standing for `m_i (x) n_k`.
pub fn tensor_presentation(m: &FPModule, n: &FPModule) -> FPModule {
    let ring = m.ring();
    let (mg, ng) = (m.ngens(), n.ngens());
    let degs: Vec<i32> = m
        .gen_degrees()
        .iter()
        .flat_map(|a| n.gen_degrees().iter().map(move |c| a + c))
        .collect();
    let mut cols = Vec::new();
    let mut cdeg = Vec::new();
    for (j, col) in m.relations().columns().iter().enumerate() {
        for k in 0..ng {
            let mut v = vec![Polynomial::zero(); mg * ng];
            for i in 0..mg {
                v[i * ng + k] = col[i].clone();
            }
            cols.push(v);
            cdeg.push(m.relation_degrees()[j] + n.gen_degrees()[k]);
        }
    }
    for i in 0..mg {
        for (j, col) in n.relations().columns().iter().enumerate() {
            let mut v = vec![Polynomial::zero(); mg * ng];
            for k in 0..ng {
                v[i * ng + k] = col[k].clone();
            }
            cols.push(v);
            cdeg.push(n.relation_degrees()[j] + m.gen_degrees()[i]);
        }
    }
    FPModule::from_matrix(ring, RingMatrix::from_columns(degs, cdeg, cols))
}

/// Number of minimal generators and a minimal presentation.
pub fn minimal_generators(m: &FPModule) -> (usize, FPModule) {
    let min = m.minimize();
    (min.ngens(), min)
}

/// `M / xM` by appending `x * e_i` relations.
pub fn quotient_by_element(m: &FPModule, x: &Polynomial) -> Result<FPModule> {
    let ring = m.ring();
    let x = ring.nf(x);
    let d = ring.degree(&x).ok_or_else(|| Error::NotHomogeneous(ring.format(&x)))?;
    if d <= 0 {
        return Err(Error::Precondition(format!("{} must have positive degree", ring.format(&x))));
    }
    let n = m.ngens();
    let cols: Vec<Vec<Polynomial>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { x.clone() } else { ring.zero() }).collect())
        .collect();
    let xs = RingMatrix::from_columns(
        m.gen_degrees().to_vec(),
        m.gen_degrees().iter().map(|a| a + d).collect(),
        cols,
    );
    Ok(FPModule::from_matrix(ring, m.relations().hstack(&xs)))
}

/// `ann_R(M)` as an ideal of the ambient ring containing the defining ideal.
pub fn annihilator(m: &FPModule) -> GroebnerBasis {
    let ring = m.ring();
    let amb = ring.ambient();
    let n = m.ngens();
    let mut gens: Vec<Polynomial> = ring.ideal_generators().to_vec();
    if n == 0 {
        gens.push(amb.one());
        return groebner_in(amb, &gens);
    }
    // r * (e_1, .., e_n) in M^n with copy i shifted so that e_i sits in
    // degree 0.
    let shifts: Vec<i32> = m.gen_degrees().iter().map(|a| -a).collect();
    let target = FPModule::sum_of_shifts(m, &shifts);
    let mut diag = vec![Polynomial::zero(); n * n];
    for i in 0..n {
        diag[i * n + i] = ring.one();
    }
    for (v, _) in preimage(&target, &[], &[diag], &[0]) {
        gens.push(v[0].clone());
    }
    groebner_in(amb, &gens)
}

/// `(0 :_M x)` as a submodule of `M`.
pub fn kernel_of_scalar(m: &FPModule, x: &Polynomial) -> Result<Subquotient> {
    Ok(ModuleHom::scalar(m, x)?.kernel())
}

/// Whether `x` is a nonzerodivisor on `M`. Cheaper than computing the
/// kernel: every preimage generator must already be a relation.
pub fn is_nonzerodivisor(m: &FPModule, x: &Polynomial) -> Result<bool> {
    Ok(zerodivisor_witness(m, x)?.is_none())
}

/// An element of `M` killed by `x` but nonzero, if any.
pub fn zerodivisor_witness(m: &FPModule, x: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
    let phi = ModuleHom::scalar(m, x)?;
    if m.ngens() == 0 {
        return Ok(None);
    }
    let degs: Vec<i32> = m.gen_degrees().iter().map(|d| d + phi.degree).collect();
    let gens = preimage(m, &[], phi.matrix.columns(), &degs);
    Ok(gens.into_iter().map(|(v, _)| v).find(|v| !m.contains(v)))
}

/// Outcome of [`is_isomorphic`].
#[derive(Debug, Clone)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// A degree-0 isomorphism `M -> N` when `isomorphic`.
    pub witness: Option<ModuleHom>,
    /// Which test decided a negative answer.
    pub reason: String,
}

fn sorted(v: &[i32]) -> Vec<i32> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Graded isomorphism test: matching generator and relation degrees, equal
/// Hilbert series, and a degree-0 map whose reduction modulo the maximal
/// ideal is invertible (then it is onto by Nakayama and injective by
/// comparing Hilbert functions). The map is sought as a seeded random
/// combination of the degree-0 part of `Hom(M, N)`.
pub fn is_isomorphic(m: &FPModule, n: &FPModule) -> IsoResult {
    let no = |reason: &str| IsoResult {
        isomorphic: false,
        witness: None,
        reason: reason.to_string(),
    };
    let m = m.minimize();
    let n = n.minimize();
    if sorted(m.gen_degrees()) != sorted(n.gen_degrees()) {
        return no("generator degrees differ");
    }
    if sorted(m.relation_degrees()) != sorted(n.relation_degrees()) {
        return no("relation degrees differ");
    }
    if m.ngens() == 0 {
        return IsoResult {
            isomorphic: true,
            witness: Some(ModuleHom::identity(&m)),
            reason: String::new(),
        };
    }
    if crate::homalg::hilbert_series(&m) != crate::homalg::hilbert_series(&n) {
        return no("Hilbert series differ");
    }
    let ring = m.ring();
    let hom = hom_module(&m, &n);
    // Degree-0 elements are r * phi_h with deg r = -deg phi_h.
    let mut basis: Vec<(usize, Polynomial)> = Vec::new();
    for (h, &d) in hom.module.gen_degrees().iter().enumerate() {
        if d > 0 {
            continue;
        }
        for mono in ring.standard_monomials(-d).iter() {
            basis.push((h, ring.ambient().monomial(*mono, 1)));
        }
    }
    if basis.is_empty() {
        return no("no degree-0 homomorphisms");
    }
    let p = ring.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..16 {
        let mut coeffs = vec![Polynomial::zero(); hom.ngens()];
        for (h, r) in &basis {
            let c = rng.gen_range(0..p);
            coeffs[*h] = ring.add(&coeffs[*h], &ring.scale(r, c));
        }
        let phi = hom.combination(&coeffs, 0);
        if rank_mod_p(ring.field(), &phi.matrix.constant_part()) == m.ngens() {
            return IsoResult {
                isomorphic: true,
                witness: Some(phi),
                reason: String::new(),
            };
        }
    }
    no("no degree-0 map invertible modulo the maximal ideal found")
}

/// The image of `M` under a homomorphism as a minimal module, with the
/// inclusion recorded.
pub fn image_module(phi: &ModuleHom) -> Subquotient {
    phi.image()
}

/// Minimal presentation together with how the old generators map.
pub fn minimize_with_projection(m: &FPModule) -> (FPModule, RingMatrix) {
    let min = minimize_tracked(m);
    (min.module, min.projection)
}
