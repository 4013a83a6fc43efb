//! Buchberger's algorithm for submodules of a free module S^r.
//!
//! Ideals are the rank-one case. Module elements are flat term lists
//! sorted under a module order that compares, in turn: total degree
//! (monomial degree plus a per-component shift), block (components below
//! `split` dominate), the ring's monomial order, and the component index.
//! With homogeneous input the block comparison makes the order an
//! elimination order for the second block, which is how syzygies and
//! liftings are extracted.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::polyring::{Monomial, OrderKind, PolyRing, Polynomial, PrimeField, MAX_VARS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct MTerm {
    pub comp: u32,
    pub deg: i32,
    pub mono: Monomial,
    pub coeff: u32,
}

pub(crate) type MVec = Vec<MTerm>;

#[derive(Debug, Clone)]
pub(crate) struct ModOrder {
    pub field: PrimeField,
    kind: OrderKind,
    nvars: usize,
    var_order: [usize; MAX_VARS],
    weights: [u32; MAX_VARS],
    pub comp_deg: Vec<i32>,
    pub split: u32,
    pub degree_first: bool,
}

impl ModOrder {
    pub fn new(ring: &PolyRing, comp_deg: Vec<i32>, split: usize, degree_first: bool) -> Self {
        let mut var_order = [0usize; MAX_VARS];
        var_order[..ring.nvars()].copy_from_slice(&ring.order().var_order);
        let mut weights = [0u32; MAX_VARS];
        weights[..ring.nvars()].copy_from_slice(ring.weights());
        ModOrder {
            field: *ring.field(),
            kind: ring.order().kind,
            nvars: ring.nvars(),
            var_order,
            weights,
            comp_deg,
            split: split as u32,
            degree_first: degree_first && ring.order().is_degree_compatible(),
        }
    }

    #[inline]
    pub fn mono_degree(&self, m: &Monomial) -> i32 {
        m.weighted_degree(&self.weights)
    }

    #[inline]
    pub fn term(&self, comp: u32, mono: Monomial, coeff: u32) -> MTerm {
        MTerm {
            comp,
            deg: self.mono_degree(&mono) + self.comp_deg[comp as usize],
            mono,
            coeff,
        }
    }

    #[inline]
    fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::DegRevLex => {
                let c = self.mono_degree(a).cmp(&self.mono_degree(b));
                if c != Ordering::Equal {
                    return c;
                }
                for k in (0..self.nvars).rev() {
                    let i = self.var_order[k];
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegLex => {
                let c = self.mono_degree(a).cmp(&self.mono_degree(b));
                if c != Ordering::Equal {
                    return c;
                }
                self.lex(a, b)
            }
            OrderKind::Lex => self.lex(a, b),
        }
    }

    #[inline]
    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for k in 0..self.nvars {
            let i = self.var_order[k];
            if a.0[i] != b.0[i] {
                return a.0[i].cmp(&b.0[i]);
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub fn cmp(&self, a: &MTerm, b: &MTerm) -> Ordering {
        if self.degree_first {
            let c = a.deg.cmp(&b.deg);
            if c != Ordering::Equal {
                return c;
            }
        }
        let (ba, bb) = (a.comp < self.split, b.comp < self.split);
        if ba != bb {
            return if ba { Ordering::Greater } else { Ordering::Less };
        }
        let c = self.cmp_mono(&a.mono, &b.mono);
        if c != Ordering::Equal {
            return c;
        }
        b.comp.cmp(&a.comp)
    }

    /// Sort descending and merge duplicate (component, monomial) pairs.
    pub fn normalize(&self, mut v: MVec) -> MVec {
        v.sort_by(|a, b| self.cmp(b, a));
        let mut out: MVec = Vec::with_capacity(v.len());
        for t in v {
            if let Some(last) = out.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                    if last.coeff == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            if t.coeff != 0 {
                out.push(t);
            }
        }
        out
    }

    /// Pack a column of polynomials (entry i in component `offset + i`).
    pub fn pack(&self, col: &[Polynomial], offset: usize) -> MVec {
        let mut v = Vec::new();
        for (i, p) in col.iter().enumerate() {
            for (m, c) in p.terms() {
                v.push(self.term((offset + i) as u32, *m, *c));
            }
        }
        self.normalize(v)
    }

    /// Unpack components `offset..offset+len` back into polynomials.
    pub fn unpack(&self, ring: &PolyRing, v: &[MTerm], offset: usize, len: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); len];
        for t in v {
            let c = t.comp as usize;
            if c >= offset && c < offset + len {
                buckets[c - offset].push((t.mono, t.coeff));
            }
        }
        buckets.into_iter().map(|b| ring.from_terms(b)).collect()
    }

    /// `v - c * q * g` for `g` with leading coefficient 1.
    pub fn sub_scaled(&self, v: &[MTerm], start: usize, c: u32, q: &Monomial, g: &[MTerm]) -> MVec {
        let f = &self.field;
        let neg_c = f.neg(c);
        let qd = self.mono_degree(q);
        let mut out = Vec::with_capacity(v.len() + g.len());
        out.extend_from_slice(&v[..start]);
        let (mut i, mut j) = (start, 0);
        while i < v.len() && j < g.len() {
            let gt = MTerm {
                comp: g[j].comp,
                deg: g[j].deg + qd,
                mono: g[j].mono.mul(q),
                coeff: g[j].coeff,
            };
            match self.cmp(&v[i], &gt) {
                Ordering::Greater => {
                    out.push(v[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(MTerm {
                        coeff: f.mul(neg_c, gt.coeff),
                        ..gt
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(v[i].coeff, f.mul(neg_c, gt.coeff));
                    if s != 0 {
                        out.push(MTerm { coeff: s, ..v[i] });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&v[i..]);
        while j < g.len() {
            out.push(MTerm {
                comp: g[j].comp,
                deg: g[j].deg + qd,
                mono: g[j].mono.mul(q),
                coeff: f.mul(neg_c, g[j].coeff),
            });
            j += 1;
        }
        out
    }

    pub fn scale(&self, v: &[MTerm], c: u32) -> MVec {
        if c == 0 {
            return Vec::new();
        }
        v.iter()
            .map(|t| MTerm {
                coeff: self.field.mul(t.coeff, c),
                ..*t
            })
            .collect()
    }

    pub fn mul_mono(&self, v: &[MTerm], q: &Monomial) -> MVec {
        let qd = self.mono_degree(q);
        v.iter()
            .map(|t| MTerm {
                mono: t.mono.mul(q),
                deg: t.deg + qd,
                ..*t
            })
            .collect()
    }

    pub fn monic(&self, v: MVec) -> MVec {
        match v.first() {
            Some(t) if t.coeff != 1 => {
                let inv = self.field.inv(t.coeff);
                self.scale(&v, inv)
            }
            _ => v,
        }
    }

    /// Homogeneous degree of a nonzero vector, if all terms agree.
    pub fn homogeneous_degree(&self, v: &[MTerm]) -> Option<i32> {
        let d = v.first()?.deg;
        v.iter().all(|t| t.deg == d).then_some(d)
    }

    /// Maximal term degree (the sugar of an input element).
    pub fn top_degree(&self, v: &[MTerm]) -> i32 {
        v.iter().map(|t| t.deg).max().unwrap_or(0)
    }
}

/// Input element for [`Gb::compute`]. Elements sharing a `known_gb` group
/// are a Gröbner basis of their own span, so pairs among them are skipped.
pub(crate) struct GbInput {
    pub vec: MVec,
    pub known_gb: bool,
}

#[derive(Debug, Clone)]
struct PairRec {
    i: usize,
    j: usize,
    lcm: Monomial,
    alive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Item {
    Gen(usize),
    Pair(usize),
}

/// A Gröbner basis of a submodule, together with its order.
#[derive(Debug, Clone)]
pub(crate) struct Gb {
    pub ord: ModOrder,
    pub basis: Vec<MVec>,
    lead: Vec<(u32, Monomial)>,
    sugar: Vec<i32>,
    known: Vec<bool>,
    by_comp: Vec<Vec<usize>>,
    product_criterion: bool,
}

impl Gb {
    pub fn empty(ord: ModOrder) -> Self {
        let ncomp = ord.comp_deg.len();
        Gb {
            ord,
            basis: Vec::new(),
            lead: Vec::new(),
            sugar: Vec::new(),
            known: Vec::new(),
            by_comp: vec![Vec::new(); ncomp],
            product_criterion: ncomp == 1,
        }
    }

    pub fn compute(ord: ModOrder, inputs: Vec<GbInput>) -> Self {
        let mut gb = Gb::empty(ord);
        let mut pairs: Vec<PairRec> = Vec::new();
        let mut pairs_by_comp: Vec<Vec<usize>> = vec![Vec::new(); gb.by_comp.len()];
        let mut queue: BTreeSet<(i32, Item)> = BTreeSet::new();
        let mut gens: Vec<MVec> = Vec::new();

        for inp in inputs {
            if inp.vec.is_empty() {
                continue;
            }
            if inp.known_gb {
                let s = gb.ord.top_degree(&inp.vec);
                let v = gb.ord.monic(inp.vec);
                gb.insert(v, s, true, &mut pairs, &mut pairs_by_comp, &mut queue);
            } else {
                let s = gb.ord.top_degree(&inp.vec);
                queue.insert((s, Item::Gen(gens.len())));
                gens.push(inp.vec);
            }
        }

        while let Some((sugar, item)) = queue.pop_first() {
            let v = match item {
                Item::Gen(k) => std::mem::take(&mut gens[k]),
                Item::Pair(pid) => {
                    let p = &pairs[pid];
                    if !p.alive {
                        continue;
                    }
                    gb.spoly(p.i, p.j, &p.lcm)
                }
            };
            let v = gb.top_reduce(v);
            if v.is_empty() {
                continue;
            }
            let v = gb.ord.monic(v);
            gb.insert(v, sugar, false, &mut pairs, &mut pairs_by_comp, &mut queue);
        }
        gb
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> MVec {
        let qi = self.lead[i].1.quotient_of(lcm);
        let qj = self.lead[j].1.quotient_of(lcm);
        let a = self.ord.mul_mono(&self.basis[i], &qi);
        self.ord.sub_scaled(&a, 0, 1, &qj, &self.basis[j])
    }

    fn insert(
        &mut self,
        v: MVec,
        sugar: i32,
        known: bool,
        pairs: &mut Vec<PairRec>,
        pairs_by_comp: &mut [Vec<usize>],
        queue: &mut BTreeSet<(i32, Item)>,
    ) {
        let h = self.basis.len();
        let (hc, hm) = (v[0].comp, v[0].mono);
        self.basis.push(v);
        self.lead.push((hc, hm));
        self.sugar.push(sugar);
        self.known.push(known);

        // Gebauer-Moeller update.
        let cands: Vec<(usize, Monomial)> = self.by_comp[hc as usize]
            .iter()
            .filter(|&&g| !(known && self.known[g]))
            .map(|&g| (g, hm.lcm(&self.lead[g].1)))
            .collect();
        let mut accepted: Vec<(usize, bool)> = Vec::new();
        for a in 0..cands.len() {
            let (g, l) = cands[a];
            let coprime = self.product_criterion && hm.is_coprime(&self.lead[g].1);
            if coprime {
                accepted.push((a, true));
                continue;
            }
            let dominated = cands[a + 1..].iter().any(|(_, l2)| l2.divides(&l))
                || accepted.iter().any(|(b, _)| cands[*b].1.divides(&l));
            if !dominated {
                accepted.push((a, false));
            }
        }
        for &pid in &pairs_by_comp[hc as usize] {
            let p = &pairs[pid];
            if !p.alive || !hm.divides(&p.lcm) {
                continue;
            }
            let li = self.lead[p.i].1.lcm(&hm);
            let lj = self.lead[p.j].1.lcm(&hm);
            if li != p.lcm && lj != p.lcm {
                pairs[pid].alive = false;
            }
        }
        pairs_by_comp[hc as usize].retain(|&pid| pairs[pid].alive);
        for (a, coprime) in accepted {
            if coprime {
                continue;
            }
            let (g, l) = cands[a];
            let qd_h = self.ord.mono_degree(&hm.quotient_of(&l));
            let qd_g = self.ord.mono_degree(&self.lead[g].1.quotient_of(&l));
            let s = (sugar + qd_h).max(self.sugar[g] + qd_g);
            let pid = pairs.len();
            pairs.push(PairRec {
                i: g,
                j: h,
                lcm: l,
                alive: true,
            });
            pairs_by_comp[hc as usize].push(pid);
            queue.insert((s, Item::Pair(pid)));
        }
        self.by_comp[hc as usize].push(h);
    }

    #[inline]
    fn find_reducer(&self, comp: u32, m: &Monomial) -> Option<usize> {
        self.by_comp
            .get(comp as usize)?
            .iter()
            .copied()
            .find(|&g| self.lead[g].1.divides(m))
    }

    /// Reduce until the leading term is irreducible.
    pub fn top_reduce(&self, mut v: MVec) -> MVec {
        while let Some(t) = v.first().copied() {
            match self.find_reducer(t.comp, &t.mono) {
                Some(r) => {
                    let q = self.lead[r].1.quotient_of(&t.mono);
                    v = self.ord.sub_scaled(&v, 0, t.coeff, &q, &self.basis[r]);
                }
                None => break,
            }
        }
        v
    }

    /// Full normal form: no term is divisible by a leading term.
    pub fn full_reduce(&self, mut v: MVec) -> MVec {
        let mut start = 0;
        while start < v.len() {
            let t = v[start];
            match self.find_reducer(t.comp, &t.mono) {
                Some(r) => {
                    let q = self.lead[r].1.quotient_of(&t.mono);
                    v = self.ord.sub_scaled(&v, start, t.coeff, &q, &self.basis[r]);
                }
                None => start += 1,
            }
        }
        v
    }

    /// Reduce only terms in components `< split`; terms of the second
    /// block are carried along untouched.
    pub fn reduce_first_block(&self, mut v: MVec) -> MVec {
        let mut start = 0;
        while start < v.len() {
            let t = v[start];
            if t.comp >= self.ord.split {
                start += 1;
                continue;
            }
            match self.find_reducer(t.comp, &t.mono) {
                Some(r) => {
                    let q = self.lead[r].1.quotient_of(&t.mono);
                    v = self.ord.sub_scaled(&v, start, t.coeff, &q, &self.basis[r]);
                }
                None => start += 1,
            }
        }
        v
    }

    /// Drop elements whose leading term is divisible by another's, then
    /// fully interreduce, make monic and sort ascending.
    pub fn reduced(&self) -> Vec<MVec> {
        let n = self.basis.len();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..n {
            let (ci, mi) = self.lead[i];
            let redundant = (0..n).any(|j| {
                j != i
                    && self.lead[j].0 == ci
                    && self.lead[j].1.divides(&mi)
                    && (self.lead[j].1 != mi || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let mut sub = Gb::empty(self.ord.clone());
        sub.product_criterion = false;
        for &i in &keep {
            let h = sub.basis.len();
            sub.basis.push(self.basis[i].clone());
            sub.lead.push(self.lead[i]);
            sub.sugar.push(self.sugar[i]);
            sub.known.push(false);
            sub.by_comp[self.lead[i].0 as usize].push(h);
        }
        let mut out: Vec<MVec> = Vec::with_capacity(keep.len());
        for k in 0..sub.basis.len() {
            let v = &sub.basis[k];
            let head = v[0];
            let tail = sub.full_reduce(v[1..].to_vec());
            let mut r = vec![head];
            r.extend(tail);
            out.push(self.ord.monic(r));
        }
        out.sort_by(|a, b| self.ord.cmp(&a[0], &b[0]));
        out
    }
}
