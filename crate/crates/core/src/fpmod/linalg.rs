//! Degree-wise linear algebra over the residue field: graded Nakayama
//! turns minimality questions into rank questions in a single degree.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use crate::groebner::GradedRing;
use crate::polyring::{Monomial, Polynomial, PrimeField};

type Key = (u32, Monomial);
type SparseVec = BTreeMap<Key, u32>;

/// Row-echelon set of sparse vectors indexed by (component, monomial).
pub(crate) struct Echelon {
    field: PrimeField,
    rows: BTreeMap<Key, Vec<(Key, u32)>>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            rows: BTreeMap::new(),
        }
    }

    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let f = &self.field;
        let mut lower: Option<Key> = None;
        loop {
            let next = match lower {
                None => v.keys().next().copied(),
                Some(k) => v.range((Excluded(k), Unbounded)).next().map(|(k, _)| *k),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let c = v[&k];
                for (rk, rc) in row {
                    let e = v.entry(*rk).or_insert(0);
                    *e = f.sub(*e, f.mul(c, *rc));
                    if *e == 0 {
                        v.remove(rk);
                    }
                }
            }
            lower = Some(k);
        }
        v
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&k, &c)) = v.iter().next() else {
            return false;
        };
        let inv = self.field.inv(c);
        let row = v.into_iter().map(|(key, x)| (key, self.field.mul(x, inv))).collect();
        self.rows.insert(k, row);
        true
    }
}

pub(crate) fn sparse(col: &[Polynomial]) -> SparseVec {
    let mut v = BTreeMap::new();
    for (i, p) in col.iter().enumerate() {
        for (m, c) in p.terms() {
            v.insert((i as u32, *m), *c);
        }
    }
    v
}

pub(crate) fn mono_times(ring: &GradedRing, m: &Monomial, col: &[Polynomial]) -> Vec<Polynomial> {
    let mp = ring.ambient().monomial(*m, 1);
    col.iter().map(|p| ring.mul(&mp, p)).collect()
}

/// Indices of a minimal generating subset of the submodule spanned by
/// homogeneous columns, scanning by degree and then by index so earlier
/// columns are preferred.
pub(crate) fn minimize_columns(ring: &GradedRing, cols: &[Vec<Polynomial>], degrees: &[i32]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&j| (degrees[j], j));
    let mut kept: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let d = degrees[order[i]];
        let mut ech = Echelon::new(*ring.field());
        for &k in &kept {
            for m in ring.standard_monomials(d - degrees[k]).iter() {
                ech.insert(sparse(&mono_times(ring, m, &cols[k])));
            }
        }
        while i < order.len() && degrees[order[i]] == d {
            let j = order[i];
            if ech.insert(sparse(&cols[j])) {
                kept.push(j);
            }
            i += 1;
        }
    }
    kept.sort_unstable();
    kept
}
