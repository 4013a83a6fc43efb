use super::matrix::RingMatrix;
use super::module::{first_outside, minimal_columns, preimage, subquotient, FPModule, Subquotient};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// A graded homomorphism given by the images of the source generators:
/// column `l` of `matrix` is the image of generator `l`, written in the
/// target's generators. The map raises degrees by `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleHom {
    pub source: FPModule,
    pub target: FPModule,
    pub matrix: RingMatrix,
    pub degree: i32,
}

impl ModuleHom {
    pub fn new(source: &FPModule, target: &FPModule, cols: Vec<Vec<Polynomial>>, degree: i32) -> Result<Self> {
        if cols.len() != source.ngens() || cols.iter().any(|c| c.len() != target.ngens()) {
            return Err(Error::Semantic("homomorphism matrix has the wrong shape".into()));
        }
        let ring = source.ring();
        let cols: Vec<Vec<Polynomial>> = cols.iter().map(|c| c.iter().map(|p| ring.nf(p)).collect()).collect();
        let col_deg: Vec<i32> = source.gen_degrees().iter().map(|d| d + degree).collect();
        let matrix = RingMatrix::from_columns(target.gen_degrees().to_vec(), col_deg, cols);
        matrix.check_degrees(ring)?;
        Ok(ModuleHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
            degree,
        })
    }

    pub fn identity(m: &FPModule) -> ModuleHom {
        ModuleHom {
            source: m.clone(),
            target: m.clone(),
            matrix: RingMatrix::identity(m.ring(), m.gen_degrees()),
            degree: 0,
        }
    }

    /// Multiplication by a homogeneous ring element.
    pub fn scalar(m: &FPModule, x: &Polynomial) -> Result<ModuleHom> {
        let ring = m.ring();
        let d = ring
            .degree(x)
            .ok_or_else(|| Error::NotHomogeneous(ring.format(x)))?;
        let n = m.ngens();
        let cols = (0..n)
            .map(|j| (0..n).map(|i| if i == j { ring.nf(x) } else { ring.zero() }).collect())
            .collect();
        ModuleHom::new(m, m, cols, d)
    }

    /// Image of an element vector of the source.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        self.matrix.apply(self.source.ring(), v)
    }

    /// Relations of the source map into relations of the target.
    pub fn is_well_defined(&self) -> bool {
        let imgs: Vec<Vec<Polynomial>> = self
            .source
            .relations()
            .columns()
            .iter()
            .map(|c| self.apply(c))
            .collect();
        first_outside(&self.target, &[], &imgs).is_none()
    }

    pub fn compose(&self, first: &ModuleHom) -> ModuleHom {
        ModuleHom {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(self.source.ring(), &first.matrix),
            degree: self.degree + first.degree,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.columns().iter().all(|c| self.target.contains(c))
    }

    /// Kernel as a submodule of the source.
    pub fn kernel(&self) -> Subquotient {
        let ring = self.source.ring();
        let n = self.source.ngens();
        if n == 0 {
            return Subquotient {
                module: FPModule::zero(ring),
                embedding: vec![],
            };
        }
        let degs: Vec<i32> = self.source.gen_degrees().iter().map(|d| d + self.degree).collect();
        let gens = preimage(&self.target, &[], self.matrix.columns(), &degs);
        let gens: Vec<(Vec<Polynomial>, i32)> = gens.into_iter().map(|(v, d)| (v, d - self.degree)).collect();
        subquotient(&self.source, &[], gens)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().module.ngens() == 0
    }

    pub fn is_surjective(&self) -> bool {
        let ring = self.target.ring();
        let k = self.target.ngens();
        let units: Vec<Vec<Polynomial>> = (0..k)
            .map(|j| (0..k).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        first_outside(&self.target, self.matrix.columns(), &units).is_none()
    }

    /// Cokernel presentation: the target modulo the image.
    pub fn cokernel(&self) -> FPModule {
        let rel = self.target.relations().hstack(&self.matrix);
        FPModule::from_matrix(self.target.ring(), rel).minimize()
    }

    /// Image as a submodule of the target.
    pub fn image(&self) -> Subquotient {
        let gens: Vec<(Vec<Polynomial>, i32)> = self
            .matrix
            .columns()
            .iter()
            .zip(self.matrix.col_degrees())
            .map(|(c, d)| (c.clone(), *d))
            .collect();
        subquotient(&self.target, &[], gens)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_well_defined() && self.is_surjective() && self.is_injective()
    }
}

/// Generators of the kernel of the map of free modules given by `m`
/// (over R, so relations coming from the defining ideal are included).
pub fn syzygies(ring: &crate::groebner::GradedRing, m: &RingMatrix) -> RingMatrix {
    let target = FPModule::free(ring, m.row_degrees().to_vec());
    let gens = preimage(&target, &[], m.columns(), m.col_degrees());
    let gens = minimal_columns(ring, gens);
    RingMatrix::from_columns(
        m.col_degrees().to_vec(),
        gens.iter().map(|(_, d)| *d).collect(),
        gens.into_iter().map(|(v, _)| v).collect(),
    )
}
