//! Buchberger engine and ideal-level queries; [`GradedRing`] realizes the
//! quotient S/I by normal forms.

pub(crate) mod elim;
pub(crate) mod engine;
mod ring;

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, OrderKind, PolyRing, Polynomial};
use elim::{Elim, ElimSpec};
use engine::{Gb, GbInput, ModOrder};

pub use ring::GradedRing;

/// A reduced Gröbner basis: monic, interreduced, sorted ascending by
/// leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    engine: Gb,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| self.ring.format(g)).collect();
        f.debug_struct("GroebnerBasis")
            .field("order", &self.ring.order().kind)
            .field("generators", &gens)
            .finish()
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl Eq for GroebnerBasis {}

fn ideal_order(ring: &PolyRing) -> ModOrder {
    ModOrder::new(ring, vec![0], 1, true)
}

impl GroebnerBasis {
    fn from_reduced(ring: PolyRing, generators: Vec<Polynomial>) -> Self {
        let ord = ideal_order(&ring);
        let inputs = generators
            .iter()
            .map(|g| GbInput {
                vec: ord.pack(std::slice::from_ref(g), 0),
                known_gb: true,
            })
            .collect();
        let engine = Gb::compute(ord, inputs);
        GroebnerBasis {
            ring,
            generators,
            engine,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> OrderKind {
        self.ring.order().kind
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.terms()[0].0).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        if self.generators.is_empty() {
            return f.clone();
        }
        let ord = &self.engine.ord;
        let v = self.engine.full_reduce(ord.pack(std::slice::from_ref(f), 0));
        ord.unpack(&self.ring, &v, 0, 1).pop().unwrap()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether the monomial is outside the initial ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.generators.iter().any(|g| g.terms()[0].0.divides(m))
    }

    /// Inclusion of ideals: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &GroebnerBasis) -> bool {
        other.generators.iter().all(|g| self.contains(&self.ring.adopt(g)))
    }

    pub fn format(&self) -> Vec<String> {
        self.generators.iter().map(|g| self.ring.format(g)).collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ord`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial], ord: OrderKind) -> Result<GroebnerBasis> {
    for g in gens {
        if !ring.contains(&ring.adopt(g)) {
            return Err(Error::AmbientMismatch("generator outside the ambient ring".into()));
        }
    }
    let ring = ring.reordered(ord);
    Ok(groebner_in(&ring, gens))
}

/// Gröbner basis under the ring's own order.
pub(crate) fn groebner_in(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let ord = ideal_order(ring);
    let inputs = gens
        .iter()
        .map(|g| GbInput {
            vec: ord.pack(&[ring.adopt(g)], 0),
            known_gb: false,
        })
        .collect();
    let gb = Gb::compute(ord, inputs);
    let reduced: Vec<Polynomial> = gb
        .reduced()
        .into_iter()
        .map(|v| gb.ord.unpack(ring, &v, 0, 1).pop().unwrap())
        .collect();
    GroebnerBasis::from_reduced(ring.clone(), reduced)
}

pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Polynomial {
    g.normal_form(&g.ring.adopt(f))
}

/// Krull dimension of S/I from the initial ideal: the size of a largest
/// set of variables containing the support of no leading monomial.
/// Returns -1 for the unit ideal.
pub fn ideal_dimension(g: &GroebnerBasis) -> i64 {
    if g.is_unit_ideal() {
        return -1;
    }
    let n = g.ring.nvars();
    let leads = g.leading_monomials();
    let mut best = 0i64;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        let independent = leads.iter().all(|m| (0..n).any(|i| m.exponent(i) > 0 && mask & (1 << i) == 0));
        if independent {
            best = size;
        }
    }
    best
}

/// `f` lies in the radical of `I` iff `1` lies in `I + (1 - t*f)` over
/// `S[t]`.
pub fn radical_membership(f: &Polynomial, g: &GroebnerBasis) -> Result<bool> {
    let ring = &g.ring;
    if !ring.contains(&ring.adopt(f)) {
        return Err(Error::AmbientMismatch("element outside the ambient ring".into()));
    }
    if f.is_zero() {
        return Ok(true);
    }
    let ext = ring.extended("_t")?;
    let t = ext.var(ring.nvars());
    let mut gens: Vec<Polynomial> = g.generators.iter().map(|p| ext.adopt(p)).collect();
    let tf = ext.mul(&t, &ext.adopt(f));
    gens.push(ext.sub(&ext.one(), &tf));
    Ok(groebner_in(&ext, &gens).is_unit_ideal())
}

/// Generators of `(I : f)`, computed from the syzygies of `(f, g_1..g_k)`.
pub fn ideal_colon_element(g: &GroebnerBasis, f: &Polynomial) -> Result<GroebnerBasis> {
    let ring = &g.ring;
    let f = ring.adopt(f);
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut tracked = vec![vec![f.clone()]];
    let mut degs = vec![ring.max_degree(&f).unwrap_or(0)];
    for p in &g.generators {
        tracked.push(vec![p.clone()]);
        degs.push(ring.max_degree(p).unwrap_or(0));
    }
    let elim = Elim::new(ElimSpec {
        ring,
        ideal: &[],
        row_degrees: &[0],
        tracked: &tracked,
        tracked_degrees: &degs,
        untracked: &[],
        known_gb: &[],
        rows_have_ideal: false,
    });
    let gens: Vec<Polynomial> = elim.syzygies(ring).into_iter().map(|(mut s, _)| s.swap_remove(0)).collect();
    let mut all = gens;
    all.extend(g.generators.iter().cloned());
    Ok(groebner_in(ring, &all))
}

/// Saturation `(I : f^inf)` by iterated colons.
pub fn saturation(g: &GroebnerBasis, f: &Polynomial) -> Result<GroebnerBasis> {
    let mut cur = g.clone();
    loop {
        let next = ideal_colon_element(&cur, f)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Intersection of two ideals via `I ∩ J = {a : (a, a) ∈ I ⊕ J}`.
pub fn intersect(a: &GroebnerBasis, b: &GroebnerBasis) -> GroebnerBasis {
    let ring = &a.ring;
    let mut tracked = Vec::new();
    let mut degs = Vec::new();
    for p in &a.generators {
        tracked.push(vec![p.clone()]);
        degs.push(ring.max_degree(p).unwrap_or(0));
    }
    for p in &b.generators {
        tracked.push(vec![ring.neg(&ring.adopt(p))]);
        degs.push(ring.max_degree(p).unwrap_or(0));
    }
    let elim = Elim::new(ElimSpec {
        ring,
        ideal: &[],
        row_degrees: &[0],
        tracked: &tracked,
        tracked_degrees: &degs,
        untracked: &[],
        known_gb: &[],
        rows_have_ideal: false,
    });
    let na = a.generators.len();
    let gens: Vec<Polynomial> = elim
        .syzygies(ring)
        .into_iter()
        .map(|(s, _)| {
            let mut acc = ring.zero();
            for (c, p) in s[..na].iter().zip(&a.generators) {
                acc = ring.add(&acc, &ring.mul(c, p));
            }
            acc
        })
        .collect();
    groebner_in(ring, &gens)
}
