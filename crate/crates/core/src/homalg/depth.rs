use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ext::{residue_resolution, HomComplex};
use crate::error::{Error, Result};
use crate::fpmod::{annihilator, first_outside, is_nonzerodivisor, preimage, quotient_by_element, FPModule};
use crate::groebner::ideal_dimension;
use crate::polyring::Polynomial;

/// Largest number of variable factors tried by the regular sequence search.
pub const DEFAULT_DEGREE_BOUND: i32 = 4;

/// Seed used when no generator is supplied.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthMethod {
    ExtK,
    Koszul,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    pub value: usize,
    /// A regular sequence of length `value`.
    pub witness: Vec<Polynomial>,
    pub method: DepthMethod,
}

/// `depth M = min { i : Ext^i(k, M) != 0 }`, with a regular sequence of
/// that length as witness.
pub fn depth(m: &FPModule) -> Result<DepthResult> {
    let m = m.minimize();
    if m.ngens() == 0 {
        return Err(Error::ZeroModule("depth"));
    }
    let ring = m.ring();
    let hc = HomComplex::new(residue_resolution(ring), &m);
    let value = (0..=ring.nvars())
        .find(|&i| hc.nonzero_class(i).is_some())
        .ok_or_else(|| Error::Verification("Ext(k, M) vanishes up to the number of variables".into()))?;
    let witness = regular_sequence_search(&m, value, DEFAULT_DEGREE_BOUND);
    if witness.len() < value {
        return Err(Error::SearchExhausted {
            bound: DEFAULT_DEGREE_BOUND,
            found: witness.len(),
            wanted: value,
        });
    }
    Ok(DepthResult {
        value,
        witness,
        method: DepthMethod::ExtK,
    })
}

/// Subsets of `0..n` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `depth M = n - max { i : H_i(x_1..x_n; M) != 0 }` from the Koszul
/// complex on the variables.
pub fn depth_koszul(m: &FPModule) -> Result<usize> {
    let m = m.minimize();
    if m.ngens() == 0 {
        return Err(Error::ZeroModule("depth"));
    }
    let ring = m.ring();
    let n = ring.nvars();
    let ng = m.ngens();
    let w = ring.weights();
    let layers: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets(n, k)).collect();
    let term = |i: usize| {
        let shifts: Vec<i32> = layers[i].iter().map(|s| s.iter().map(|&j| w[j] as i32).sum()).collect();
        FPModule::sum_of_shifts(&m, &shifts)
    };
    // Images of the generators (S, k) of K_i (x) M under the Koszul map.
    let differential = |i: usize| -> (Vec<Vec<Polynomial>>, Vec<i32>) {
        let mut images = Vec::new();
        let mut degs = Vec::new();
        if i == 0 {
            return (images, degs);
        }
        let lower = &layers[i - 1];
        for s in &layers[i] {
            let ds: i32 = s.iter().map(|&j| w[j] as i32).sum();
            for k in 0..ng {
                let mut v = vec![Polynomial::zero(); lower.len() * ng];
                for (t, &j) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(t);
                    let pos = lower.binary_search(&rest).expect("subset present");
                    let xj = ring.var(j);
                    v[pos * ng + k] = if t % 2 == 0 { xj } else { ring.neg(&xj) };
                }
                images.push(v);
                degs.push(m.gen_degrees()[k] + ds);
            }
        }
        (images, degs)
    };
    for i in (1..=n).rev() {
        let (images, degs) = differential(i);
        let cycles: Vec<Vec<Polynomial>> = preimage(&term(i - 1), &[], &images, &degs)
            .into_iter()
            .map(|(v, _)| v)
            .collect();
        let bounds = if i < n { differential(i + 1).0 } else { vec![] };
        if first_outside(&term(i), &bounds, &cycles).is_some() {
            return Ok(n - i);
        }
    }
    Ok(n)
}

/// Krull dimension of `R / ann M`.
pub fn module_dimension(m: &FPModule) -> Result<i64> {
    if m.is_zero() {
        return Err(Error::ZeroModule("dimension"));
    }
    Ok(ideal_dimension(&annihilator(m)))
}

/// [`regular_sequence_search_with`] using the default seed.
pub fn regular_sequence_search(m: &FPModule, target: usize, degree_bound: i32) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    regular_sequence_search_with(m, target, degree_bound, &mut rng)
}

/// Greedy search for a homogeneous regular sequence on `M` of length at
/// most `target`. Degrees run up to `degree_bound` times the largest
/// variable weight; in each degree the standard monomials are tried first,
/// then 64 random combinations of them.
pub fn regular_sequence_search_with(
    m: &FPModule,
    target: usize,
    degree_bound: i32,
    rng: &mut ChaCha8Rng,
) -> Vec<Polynomial> {
    let ring = m.ring();
    let p = ring.characteristic();
    let max_deg = degree_bound * ring.max_weight() as i32;
    let mut cur = m.minimize();
    let mut seq = Vec::new();
    while seq.len() < target && cur.ngens() > 0 {
        let mut found = None;
        'degrees: for d in 1..=max_deg {
            let monos = ring.standard_monomials(d);
            if monos.is_empty() {
                continue;
            }
            let basis: Vec<Polynomial> = monos.iter().map(|mo| ring.ambient().monomial(*mo, 1)).collect();
            let mut candidates = basis.clone();
            if basis.len() > 1 {
                for _ in 0..64 {
                    let mut f = Polynomial::zero();
                    for b in &basis {
                        f = ring.add(&f, &ring.scale(b, rng.gen_range(0..p)));
                    }
                    if !f.is_zero() {
                        candidates.push(f);
                    }
                }
            }
            for x in candidates {
                if is_nonzerodivisor(&cur, &x).unwrap_or(false) {
                    found = Some(x);
                    break 'degrees;
                }
            }
        }
        let Some(x) = found else { break };
        cur = quotient_by_element(&cur, &x).expect("positive degree").minimize();
        seq.push(x);
    }
    seq
}
