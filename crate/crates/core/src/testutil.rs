//! Shared fixtures and brute-force oracles for unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fpmod::{mono_times, sparse, Echelon, FPModule};
use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

pub fn ring(p: u32, vars: &[&str], ideal: &[&str]) -> GradedRing {
    GradedRing::from_strs(p, vars, ideal).unwrap()
}

/// k[t^3, t^4, t^5] as a quotient of F101[x:3, y:4, z:5].
pub fn semigroup() -> GradedRing {
    ring(101, &["x:3", "y:4", "z:5"], &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])
}

/// Canonical module of the semigroup ring.
pub fn omega(r: &GradedRing) -> FPModule {
    FPModule::from_strs(r, &[-1, -2], &[&["x", "y"], &["y", "z"], &["z", "x^2"]]).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random homogeneous element of degree `d` (possibly zero).
pub fn random_element(r: &GradedRing, d: i32, rng: &mut ChaCha8Rng) -> Polynomial {
    let p = r.characteristic();
    let mut f = Polynomial::zero();
    if d < 0 {
        return f;
    }
    for m in r.standard_monomials(d).iter() {
        let c = rng.gen_range(0..p);
        f = r.add(&f, &r.ambient().monomial(*m, c));
    }
    f
}

/// Random module with 1-2 generators and 1-2 relations of low degree.
pub fn random_module(r: &GradedRing, rng: &mut ChaCha8Rng) -> FPModule {
    let w = r.max_weight() as i32;
    let ng = rng.gen_range(1..=2);
    let degs: Vec<i32> = (0..ng).map(|_| rng.gen_range(0..=w)).collect();
    let top = *degs.iter().max().unwrap();
    let nr = rng.gen_range(1..=2);
    let cols: Vec<Vec<Polynomial>> = (0..nr)
        .map(|_| {
            let d = top + rng.gen_range(1..=2 * w);
            degs.iter().map(|a| random_element(r, d - a, rng)).collect()
        })
        .collect();
    FPModule::new(r, degs, cols).unwrap()
}

/// Rank of the degree-`d` part of the submodule spanned by the given
/// homogeneous columns of a free module.
fn span_rank(r: &GradedRing, ech: &mut Echelon, cols: &[Vec<Polynomial>], degs: &[i32], d: i32) -> usize {
    let mut rank = 0;
    for (c, e) in cols.iter().zip(degs) {
        for m in r.standard_monomials(d - e).iter() {
            if ech.insert(sparse(&mono_times(r, m, c))) {
                rank += 1;
            }
        }
    }
    rank
}

/// dim_k M_d by linear algebra in a single degree.
pub fn piece_dim(m: &FPModule, d: i32) -> usize {
    let r = m.ring();
    let free: usize = m.gen_degrees().iter().map(|a| r.hilbert_function(d - a)).sum();
    let mut ech = Echelon::new(*r.field());
    free - span_rank(r, &mut ech, m.relations().columns(), m.relation_degrees(), d)
}

/// dim_k Hom(M, N)_d by brute force: maps are tuples of vectors of the free
/// cover of N, constrained by the relations of M, modulo maps into the
/// relations of N.
pub fn hom_piece_dim(m: &FPModule, n: &FPModule, d: i32) -> usize {
    let r = m.ring();
    let ngn = n.ngens();
    let p = m.nrels();
    // Block (j, k): generator k of N in the copy belonging to relation j.
    let lift = |col: &[Polynomial], j: usize| {
        let mut v = vec![Polynomial::zero(); p * ngn];
        v[j * ngn..(j + 1) * ngn].clone_from_slice(col);
        v
    };
    let mut ech = Echelon::new(*r.field());
    for j in 0..p {
        let e = m.relation_degrees()[j] + d;
        let cols: Vec<Vec<Polynomial>> = n.relations().columns().iter().map(|c| lift(c, j)).collect();
        span_rank(r, &mut ech, &cols, n.relation_degrees(), e);
    }
    let mut domain = 0;
    let mut image_rank = 0;
    for (l, a) in m.gen_degrees().iter().enumerate() {
        for k in 0..ngn {
            for mono in r.standard_monomials(a + d - n.gen_degrees()[k]).iter() {
                domain += 1;
                let phi = r.ambient().monomial(*mono, 1);
                let mut v = vec![Polynomial::zero(); p * ngn];
                for j in 0..p {
                    v[j * ngn + k] = r.mul(m.relations().entry(l, j), &phi);
                }
                if ech.insert(sparse(&v)) {
                    image_rank += 1;
                }
            }
        }
    }
    let inner: usize = m
        .gen_degrees()
        .iter()
        .map(|a| {
            let mut e = Echelon::new(*r.field());
            span_rank(r, &mut e, n.relations().columns(), n.relation_degrees(), a + d)
        })
        .sum();
    domain - image_rank - inner
}

/// Random homogeneous `q x n` matrix whose constant part has rank `q`.
/// Entries have weighted degree at most `2 * max_weight`.
pub fn random_surjection(r: &GradedRing, q: usize, n: usize, rng: &mut ChaCha8Rng) -> crate::fpmod::RingMatrix {
    use crate::fpmod::{rank_mod_p, RingMatrix};
    let w = r.max_weight() as i32;
    loop {
        let mut cols: Vec<i32> = (0..n).map(|j| if j < q { 0 } else { rng.gen_range(0..=2 * w) }).collect();
        for j in (1..n).rev() {
            cols.swap(j, rng.gen_range(0..=j));
        }
        let rows: Vec<Vec<Polynomial>> = (0..q)
            .map(|_| cols.iter().map(|&d| random_element(r, d, rng)).collect())
            .collect();
        let t = RingMatrix::from_rows(vec![0; q], cols, rows);
        if rank_mod_p(r.field(), &t.constant_part()) == q {
            return t;
        }
    }
}
