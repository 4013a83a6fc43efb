use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::{groebner_in, ideal_dimension, GroebnerBasis};
use crate::error::{Error, Result};
use crate::homalg::ResolutionResult;
use crate::polyring::{Monomial, OrderKind, PolyRing, Polynomial, PrimeField};

struct Inner {
    ambient: PolyRing,
    ideal: GroebnerBasis,
    dim: i64,
    standard: Mutex<HashMap<i32, Arc<Vec<Monomial>>>>,
    residue_resolution: OnceLock<ResolutionResult>,
}

/// R = S/I for a homogeneous ideal I of the ambient ring S. Elements are
/// polynomials in normal form with respect to the Gröbner basis of I; the
/// irrelevant ideal plays the role of the maximal ideal.
///
/// Cloning is cheap and clones share caches.
#[derive(Clone)]
pub struct GradedRing(Arc<Inner>);

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRing({})", self.describe())
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.ambient == other.0.ambient && self.0.ideal == other.0.ideal)
    }
}

impl Eq for GradedRing {}

impl GradedRing {
    pub fn new(ambient: PolyRing, gens: &[Polynomial]) -> Result<Self> {
        for g in gens {
            if !ambient.contains(&ambient.adopt(g)) {
                return Err(Error::AmbientMismatch("ideal generator outside the ambient ring".into()));
            }
            if !ambient.is_homogeneous(g) {
                return Err(Error::NotHomogeneous(ambient.format(g)));
            }
        }
        let ideal = groebner_in(&ambient, gens);
        Ok(GradedRing::from_basis(ambient, ideal))
    }

    fn from_basis(ambient: PolyRing, ideal: GroebnerBasis) -> Self {
        let dim = ideal_dimension(&ideal);
        GradedRing(Arc::new(Inner {
            ambient,
            ideal,
            dim,
            standard: Mutex::new(HashMap::new()),
            residue_resolution: OnceLock::new(),
        }))
    }

    /// Shorthand used by examples and tests: variables as `"x"` or `"x:3"`
    /// (name and weight), degrevlex, ideal generators in the usual syntax.
    pub fn from_strs(p: u32, vars: &[&str], ideal: &[&str]) -> Result<Self> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for v in vars {
            let (name, w) = match v.split_once(':') {
                Some((n, w)) => (n, w.trim().parse().map_err(|_| Error::InvalidRing(format!("bad weight in {v}")))?),
                None => (*v, 1),
            };
            names.push(name.trim().to_string());
            weights.push(w);
        }
        let ambient = PolyRing::new(p, names, weights, OrderKind::DegRevLex)?;
        let gens = ideal.iter().map(|g| ambient.parse(g)).collect::<Result<Vec<_>>>()?;
        GradedRing::new(ambient, &gens)
    }

    /// The ambient ring itself (I = 0).
    pub fn polynomial(ambient: PolyRing) -> Self {
        let ideal = groebner_in(&ambient, &[]);
        GradedRing::from_basis(ambient, ideal)
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.0.ambient
    }

    pub fn ideal(&self) -> &GroebnerBasis {
        &self.0.ideal
    }

    pub fn ideal_generators(&self) -> &[Polynomial] {
        self.0.ideal.generators()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.0.ideal.is_zero_ideal()
    }

    pub fn field(&self) -> &PrimeField {
        self.0.ambient.field()
    }

    pub fn characteristic(&self) -> u32 {
        self.0.ambient.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.0.ambient.nvars()
    }

    pub fn weights(&self) -> &[u32] {
        self.0.ambient.weights()
    }

    /// Krull dimension of R.
    pub fn dimension(&self) -> i64 {
        self.0.dim
    }

    pub(crate) fn residue_resolution_cell(&self) -> &OnceLock<ResolutionResult> {
        &self.0.residue_resolution
    }

    pub fn nf(&self, f: &Polynomial) -> Polynomial {
        self.0.ideal.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.nf(f).is_zero()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.nf(&self.0.ambient.one())
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.nf(&self.0.ambient.constant(c))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.nf(&self.0.ambient.var(i))
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.0.ambient.add(a, b)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.0.ambient.sub(a, b)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        self.0.ambient.neg(a)
    }

    pub fn scale(&self, a: &Polynomial, c: u32) -> Polynomial {
        self.0.ambient.scale(a, c)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let p = self.0.ambient.mul(a, b);
        if self.is_polynomial_ring() {
            p
        } else {
            self.nf(&p)
        }
    }

    pub fn pow(&self, a: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Parse in the ambient syntax and reduce.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        Ok(self.nf(&self.0.ambient.parse(src)?))
    }

    pub fn degree(&self, f: &Polynomial) -> Option<i32> {
        self.0.ambient.homogeneous_degree(f)
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        self.0.ambient.is_homogeneous(f)
    }

    /// Units of a positively graded ring are the nonzero constants.
    pub fn is_unit(&self, f: &Polynomial) -> bool {
        let f = self.nf(f);
        f.is_constant() && !f.is_zero()
    }

    /// Degree-zero part of `f` as a field element.
    pub fn constant_part(&self, f: &Polynomial) -> u32 {
        f.constant_coeff()
    }

    /// Standard monomials of degree `d`: a basis of R_d.
    pub fn standard_monomials(&self, d: i32) -> Arc<Vec<Monomial>> {
        let mut cache = self.0.standard.lock().unwrap();
        cache
            .entry(d)
            .or_insert_with(|| {
                let all = self.0.ambient.monomials_of_degree(d);
                Arc::new(all.into_iter().filter(|m| self.0.ideal.is_standard(m)).collect())
            })
            .clone()
    }

    /// dim_k R_d.
    pub fn hilbert_function(&self, d: i32) -> usize {
        self.standard_monomials(d).len()
    }

    pub fn max_weight(&self) -> u32 {
        self.weights().iter().copied().max().unwrap_or(1)
    }

    /// R/(elems), sharing the ambient ring.
    pub fn quotient_by(&self, elems: &[Polynomial]) -> Result<GradedRing> {
        let mut gens = self.ideal_generators().to_vec();
        gens.extend(elems.iter().map(|e| self.0.ambient.adopt(e)));
        GradedRing::new(self.0.ambient.clone(), &gens)
    }

    /// The same ring with its Gröbner basis recomputed under another order.
    pub fn with_order(&self, kind: OrderKind) -> GradedRing {
        let ambient = self.0.ambient.reordered(kind);
        let gens: Vec<Polynomial> = self.ideal_generators().iter().map(|g| ambient.adopt(g)).collect();
        GradedRing::from_basis(ambient.clone(), groebner_in(&ambient, &gens))
    }

    /// Bring a polynomial from a ring over the same variables (possibly
    /// another order or a smaller ideal) into normal form here.
    pub fn adopt(&self, f: &Polynomial) -> Polynomial {
        self.nf(&self.0.ambient.adopt(f))
    }

    pub fn format(&self, f: &Polynomial) -> String {
        self.0.ambient.format(f)
    }

    /// Compact description such as `F101[x,y]/(x^2)`.
    pub fn describe(&self) -> String {
        let a = &self.0.ambient;
        let vars: Vec<String> = a
            .names()
            .iter()
            .zip(a.weights())
            .map(|(n, w)| if *w == 1 { n.clone() } else { format!("{n}:{w}") })
            .collect();
        let mut s = format!("F{}[{}]", a.characteristic(), vars.join(","));
        if !self.is_polynomial_ring() {
            s.push_str(&format!("/({})", self.0.ideal.format().join(", ")));
        }
        s
    }
}
