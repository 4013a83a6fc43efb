use super::matrix::{rank_mod_p, RingMatrix};
use crate::error::{Error, Result};
use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

/// Output of the unit-pivot elimination on a `q x n` matrix `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    /// `n x q` with `T * S = I_q`.
    pub section: RingMatrix,
    /// `n x (n - q)` with `T * K = 0`; `[S | K]` is invertible.
    pub complement: RingMatrix,
    /// Invertible row operations `P` (`q x q`).
    pub row_ops: RingMatrix,
    /// Invertible column operations `Q` (`n x n`) with `P T Q = [I | 0]`.
    pub col_ops: RingMatrix,
    /// Pivot positions in the order they were used, in the coordinates of
    /// the partially reduced matrix.
    pub pivots: Vec<(usize, usize)>,
}

fn swap_rows(m: &mut [Vec<Polynomial>], a: usize, b: usize) {
    if a != b {
        m.swap(a, b);
    }
}

fn swap_cols(m: &mut [Vec<Polynomial>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn rows_of(m: &RingMatrix) -> Vec<Vec<Polynomial>> {
    (0..m.nrows()).map(|i| m.row(i)).collect()
}

fn ident(ring: &GradedRing, n: usize) -> Vec<Vec<Polynomial>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect()
}

/// Split a surjection `T : C^n -> C^q`: bring a unit to the corner, clear
/// its row and column, recurse.
/// Units are entries whose normal form is a nonzero constant; ties go to the
/// smallest (row, column).
pub fn unit_pivot_split(ring: &GradedRing, t: &RingMatrix) -> Result<Splitting> {
    let f = ring.field();
    let (q, n) = (t.nrows(), t.ncols());
    let rank = rank_mod_p(f, &t.constant_part());
    if rank < q {
        return Err(Error::NotSurjective { rank, needed: q });
    }
    let mut w = rows_of(t);
    let mut p = ident(ring, q);
    let mut qm = ident(ring, n);
    let mut pivots = Vec::new();
    // Degree labels follow the permutations.
    let mut rdeg = t.row_degrees().to_vec();
    let mut cdeg = t.col_degrees().to_vec();
    for k in 0..q {
        let found = (k..q).flat_map(|r| (k..n).map(move |c| (r, c))).find(|&(r, c)| ring.is_unit(&w[r][c]));
        let Some((r, c)) = found else {
            // Unreachable for a graded surjection: the constant part keeps
            // rank q - k on the remaining block.
            return Err(Error::NotSurjective { rank: k, needed: q });
        };
        pivots.push((r, c));
        swap_rows(&mut w, r, k);
        swap_rows(&mut p, r, k);
        rdeg.swap(r, k);
        swap_cols(&mut w, c, k);
        swap_cols(&mut qm, c, k);
        cdeg.swap(c, k);
        let inv = f.inv(w[k][k].constant_coeff());
        for j in 0..n {
            w[k][j] = ring.scale(&w[k][j], inv);
        }
        for j in 0..q {
            p[k][j] = ring.scale(&p[k][j], inv);
        }
        for r2 in 0..q {
            if r2 == k || w[r2][k].is_zero() {
                continue;
            }
            let a = w[r2][k].clone();
            for j in 0..n {
                let t = ring.mul(&a, &w[k][j]);
                w[r2][j] = ring.sub(&w[r2][j], &t);
            }
            for j in 0..q {
                let t = ring.mul(&a, &p[k][j]);
                p[r2][j] = ring.sub(&p[r2][j], &t);
            }
        }
        for c2 in 0..n {
            if c2 == k || w[k][c2].is_zero() {
                continue;
            }
            let a = w[k][c2].clone();
            for i in 0..q {
                let t = ring.mul(&a, &w[i][k]);
                w[i][c2] = ring.sub(&w[i][c2], &t);
            }
            for i in 0..n {
                let t = ring.mul(&a, &qm[i][k]);
                qm[i][c2] = ring.sub(&qm[i][c2], &t);
            }
        }
    }
    // P T Q = [I | 0], so S = Q [I; 0] P and K = Q [0; I].
    let row_ops = RingMatrix::from_rows(rdeg.clone(), t.row_degrees().to_vec(), p);
    let col_ops = RingMatrix::from_rows(t.col_degrees().to_vec(), cdeg.clone(), qm);
    let mut sel = vec![Vec::new(); n];
    for (i, row) in sel.iter_mut().enumerate() {
        for j in 0..q {
            row.push(if i == j { ring.one() } else { ring.zero() });
        }
    }
    let embed = RingMatrix::from_rows(cdeg.clone(), rdeg.clone(), sel);
    let section = col_ops.mul(ring, &embed).mul(ring, &row_ops);
    let comp_idx: Vec<usize> = (q..n).collect();
    let complement = col_ops.select_columns(&comp_idx);
    Ok(Splitting {
        section,
        complement,
        row_ops,
        col_ops,
        pivots,
    })
}

/// Decomposition `C^n = U + V` from an idempotent `e` over `R = End(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandAnalysis {
    /// `U = im e = C^p`.
    pub p: usize,
    /// `V = ker e = C^q`.
    pub q: usize,
    /// `n x p` and `p x n` with `B A = I_p`, `A B = e`.
    pub image_maps: (RingMatrix, RingMatrix),
    /// Same for `1 - e`.
    pub complement_maps: (RingMatrix, RingMatrix),
}

/// Factor an idempotent `e` as `A B` with `B A = I`: `A` is a set of columns
/// of `e` independent modulo the maximal ideal, and `B` comes from splitting
/// the surjection `A^T`.
fn factor_idempotent(ring: &GradedRing, e: &RingMatrix) -> Result<(RingMatrix, RingMatrix)> {
    let f = ring.field();
    let cp = e.constant_part();
    let n = e.nrows();
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..e.ncols() {
        let mut trial: Vec<Vec<u32>> = (0..n).map(|i| chosen.iter().map(|&c| cp[i][c]).collect()).collect();
        for (i, row) in trial.iter_mut().enumerate() {
            row.push(cp[i][j]);
        }
        if rank_mod_p(f, &trial) == chosen.len() + 1 {
            chosen.push(j);
        }
    }
    let a = e.select_columns(&chosen);
    if chosen.is_empty() {
        let b = RingMatrix::zeros(vec![], e.col_degrees().to_vec());
        if !e.is_zero() {
            return Err(Error::Verification("idempotent with zero reduction is nonzero".into()));
        }
        return Ok((a, b));
    }
    let split = unit_pivot_split(ring, &a.transpose())?;
    let b0 = split.section.transpose();
    let b = b0.mul(ring, e);
    let ba = b.mul(ring, &a);
    let id = RingMatrix::identity(ring, ba.row_degrees());
    if ba.columns() != id.columns() {
        return Err(Error::Verification("B A is not the identity".into()));
    }
    if a.mul(ring, &b).columns() != e.columns() {
        return Err(Error::Verification("A B does not reproduce the idempotent".into()));
    }
    Ok((a, b))
}

/// Split `C^n` along an idempotent endomorphism `e`, given as an `n x n`
/// matrix over `R = End(C)`. Both summands come with explicit maps.
pub fn summand_analysis(ring: &GradedRing, e: &RingMatrix) -> Result<SummandAnalysis> {
    let n = e.nrows();
    if e.ncols() != n {
        return Err(Error::Precondition("endomorphism matrix must be square".into()));
    }
    if e.mul(ring, e).columns() != e.columns() {
        return Err(Error::NotIdempotent);
    }
    let id = RingMatrix::identity(ring, e.row_degrees()).with_degrees(e.row_degrees().to_vec(), e.col_degrees().to_vec());
    let comp = id.sub(ring, e);
    let (a, b) = factor_idempotent(ring, e)?;
    let (a2, b2) = factor_idempotent(ring, &comp)?;
    let p = a.ncols();
    let q = a2.ncols();
    if p + q != n {
        return Err(Error::Verification(format!("summand ranks {p} + {q} differ from {n}")));
    }
    Ok(SummandAnalysis {
        p,
        q,
        image_maps: (a, b),
        complement_maps: (a2, b2),
    })
}
