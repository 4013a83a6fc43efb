use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

/// A matrix over R describing a map of graded free modules
/// `F(col_degrees) -> F(row_degrees)`: entry (i, j) is homogeneous of degree
/// `col_degrees[j] - row_degrees[i]` or zero. Stored column-major, entries
/// in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    row_degrees: Vec<i32>,
    col_degrees: Vec<i32>,
    cols: Vec<Vec<Polynomial>>,
}

impl RingMatrix {
    pub fn from_columns(row_degrees: Vec<i32>, col_degrees: Vec<i32>, cols: Vec<Vec<Polynomial>>) -> Self {
        assert_eq!(cols.len(), col_degrees.len(), "one degree per column");
        for c in &cols {
            assert_eq!(c.len(), row_degrees.len(), "column length must match row count");
        }
        RingMatrix {
            row_degrees,
            col_degrees,
            cols,
        }
    }

    /// Build from row vectors; all rows must have equal length.
    pub fn from_rows(row_degrees: Vec<i32>, col_degrees: Vec<i32>, rows: Vec<Vec<Polynomial>>) -> Self {
        let ncols = col_degrees.len();
        let mut cols = vec![Vec::with_capacity(rows.len()); ncols];
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
            for (j, e) in r.into_iter().enumerate() {
                cols[j].push(e);
            }
        }
        RingMatrix::from_columns(row_degrees, col_degrees, cols)
    }

    pub fn zeros(row_degrees: Vec<i32>, col_degrees: Vec<i32>) -> Self {
        let cols = vec![vec![Polynomial::zero(); row_degrees.len()]; col_degrees.len()];
        RingMatrix::from_columns(row_degrees, col_degrees, cols)
    }

    pub fn identity(ring: &GradedRing, degrees: &[i32]) -> Self {
        let n = degrees.len();
        let cols = (0..n)
            .map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        RingMatrix::from_columns(degrees.to_vec(), degrees.to_vec(), cols)
    }

    /// Matrix with homogeneous entries whose degrees are inferred from the
    /// entries: rows get the given degrees and each column the degree of its
    /// first nonzero entry (or `default` for zero columns). Fails when an
    /// entry is inhomogeneous or of inconsistent degree.
    pub fn infer(ring: &GradedRing, row_degrees: Vec<i32>, cols: Vec<Vec<Polynomial>>, default: i32) -> Result<Self> {
        let mut col_degrees = Vec::with_capacity(cols.len());
        let mut normalized = Vec::with_capacity(cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            let col: Vec<Polynomial> = col.iter().map(|p| ring.nf(p)).collect();
            let mut deg = None;
            for (i, p) in col.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let d = ring.degree(p).ok_or_else(|| {
                    Error::NotHomogeneous(format!("entry ({i}, {j}) = {} is not homogeneous", ring.format(p)))
                })?;
                let cd = d + row_degrees[i];
                match deg {
                    None => deg = Some(cd),
                    Some(prev) if prev != cd => {
                        return Err(Error::NotHomogeneous(format!(
                            "column {j} mixes degrees {prev} and {cd} (entry ({i}, {j}) = {})",
                            ring.format(p)
                        )))
                    }
                    _ => {}
                }
            }
            col_degrees.push(deg.unwrap_or(default));
            normalized.push(col);
        }
        Ok(RingMatrix::from_columns(row_degrees, col_degrees, normalized))
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_degrees(&self) -> &[i32] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i32] {
        &self.col_degrees
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.cols[j][i] = p;
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.cols.iter().map(|c| c[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    /// `self * other`.
    pub fn mul(&self, ring: &GradedRing, other: &RingMatrix) -> RingMatrix {
        assert_eq!(self.ncols(), other.nrows(), "inner dimensions differ");
        let cols = other.cols.iter().map(|c| self.apply(ring, c)).collect();
        RingMatrix::from_columns(self.row_degrees.clone(), other.col_degrees.clone(), cols)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, ring: &GradedRing, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.ncols());
        let mut out = vec![Polynomial::zero(); self.nrows()];
        for (j, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, e) in self.cols[j].iter().enumerate() {
                if !e.is_zero() {
                    out[i] = ring.add(&out[i], &ring.mul(e, a));
                }
            }
        }
        out
    }

    pub fn add(&self, ring: &GradedRing, other: &RingMatrix) -> RingMatrix {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect())
            .collect();
        RingMatrix::from_columns(self.row_degrees.clone(), self.col_degrees.clone(), cols)
    }

    pub fn sub(&self, ring: &GradedRing, other: &RingMatrix) -> RingMatrix {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| ring.sub(x, y)).collect())
            .collect();
        RingMatrix::from_columns(self.row_degrees.clone(), self.col_degrees.clone(), cols)
    }

    pub fn transpose(&self) -> RingMatrix {
        let rows: Vec<Vec<Polynomial>> = self.cols.clone();
        let neg = |d: &[i32]| d.iter().map(|x| -x).collect::<Vec<_>>();
        RingMatrix::from_rows(neg(&self.col_degrees), neg(&self.row_degrees), rows)
    }

    /// Columns side by side; row degrees must agree.
    pub fn hstack(&self, other: &RingMatrix) -> RingMatrix {
        assert_eq!(self.row_degrees, other.row_degrees);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        let mut cd = self.col_degrees.clone();
        cd.extend_from_slice(&other.col_degrees);
        RingMatrix::from_columns(self.row_degrees.clone(), cd, cols)
    }

    pub fn block_diag(blocks: &[&RingMatrix]) -> RingMatrix {
        let rd: Vec<i32> = blocks.iter().flat_map(|b| b.row_degrees.iter().copied()).collect();
        let mut cd = Vec::new();
        let mut cols = Vec::new();
        let mut offset = 0;
        for b in blocks {
            for (j, c) in b.cols.iter().enumerate() {
                let mut col = vec![Polynomial::zero(); rd.len()];
                col[offset..offset + b.nrows()].clone_from_slice(c);
                cols.push(col);
                cd.push(b.col_degrees[j]);
            }
            offset += b.nrows();
        }
        RingMatrix::from_columns(rd, cd, cols)
    }

    pub fn select_columns(&self, idx: &[usize]) -> RingMatrix {
        RingMatrix::from_columns(
            self.row_degrees.clone(),
            idx.iter().map(|&j| self.col_degrees[j]).collect(),
            idx.iter().map(|&j| self.cols[j].clone()).collect(),
        )
    }

    /// Shift every degree label by `s`.
    pub fn shifted(&self, s: i32) -> RingMatrix {
        RingMatrix::from_columns(
            self.row_degrees.iter().map(|d| d + s).collect(),
            self.col_degrees.iter().map(|d| d + s).collect(),
            self.cols.clone(),
        )
    }

    pub fn with_degrees(mut self, row_degrees: Vec<i32>, col_degrees: Vec<i32>) -> RingMatrix {
        assert_eq!(row_degrees.len(), self.nrows());
        assert_eq!(col_degrees.len(), self.ncols());
        self.row_degrees = row_degrees;
        self.col_degrees = col_degrees;
        self
    }

    /// The matrix reduced modulo the maximal ideal, row-major.
    pub fn constant_part(&self) -> Vec<Vec<u32>> {
        (0..self.nrows())
            .map(|i| self.cols.iter().map(|c| c[i].constant_coeff()).collect())
            .collect()
    }

    /// Minimal in the graded sense: no entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.constant_coeff() == 0))
    }

    /// Every entry is zero or homogeneous of its forced degree.
    pub fn check_degrees(&self, ring: &GradedRing) -> Result<()> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.col_degrees[j] - self.row_degrees[i];
                if ring.degree(p) != Some(want) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i}, {j}) = {} should have degree {want}",
                        ring.format(p)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Rows rendered in the polynomial syntax.
    pub fn format_rows(&self, ring: &GradedRing) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| self.cols.iter().map(|c| ring.format(&c[i])).collect())
            .collect()
    }

    pub fn to_json(&self, ring: &GradedRing) -> MatrixJson {
        MatrixJson {
            row_degrees: self.row_degrees.clone(),
            col_degrees: self.col_degrees.clone(),
            rows: self.format_rows(ring),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixJson {
    pub row_degrees: Vec<i32>,
    pub col_degrees: Vec<i32>,
    pub rows: Vec<Vec<String>>,
}

/// Rank of a matrix over F_p (row-major input).
pub fn rank_mod_p(field: &crate::polyring::PrimeField, rows: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field.inv(m[rank][c]);
        for v in m[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..ncols {
                    let t = field.mul(f, m[rank][k]);
                    m[r][k] = field.sub(m[r][k], t);
                }
            }
        }
        rank += 1;
    }
    rank
}
