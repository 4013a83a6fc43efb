//! Elimination computations over S^(r+c).
//!
//! Tracked generators `t_j` enter as `(t_j, e_j)`; the first block holds the
//! target free module and the second block records cofactors. Elements of
//! the Gröbner basis whose leading term lies in the second block project to
//! generators of the syzygy module, and reducing `(v, 0)` lifts `v` to a
//! combination of the tracked generators. Untracked generators enter as
//! `(u, 0)` and are therefore divided out, as is `I * S^(r+c)` when the
//! computation is over a quotient ring.

use super::engine::{Gb, GbInput, MVec, ModOrder};
use crate::polyring::{PolyRing, Polynomial};

pub(crate) struct Elim {
    pub gb: Gb,
    rows: usize,
    tracked: usize,
}

pub(crate) struct ElimSpec<'a> {
    pub ring: &'a PolyRing,
    /// Defining-ideal Gröbner basis (empty for the polynomial ring).
    pub ideal: &'a [Polynomial],
    pub row_degrees: &'a [i32],
    pub tracked: &'a [Vec<Polynomial>],
    pub tracked_degrees: &'a [i32],
    pub untracked: &'a [Vec<Polynomial>],
    /// Columns that, together with `ideal * e_i`, already form a Gröbner
    /// basis of their span under this computation's order.
    pub known_gb: &'a [Vec<Polynomial>],
    /// `known_gb` already contains `ideal * e_i` for the first block.
    pub rows_have_ideal: bool,
}

impl Elim {
    pub fn order_for(ring: &PolyRing, row_degrees: &[i32], tracked_degrees: &[i32], homogeneous: bool) -> ModOrder {
        let mut comp_deg = row_degrees.to_vec();
        comp_deg.extend_from_slice(tracked_degrees);
        ModOrder::new(ring, comp_deg, row_degrees.len(), homogeneous)
    }

    pub fn new(spec: ElimSpec<'_>) -> Elim {
        let r = spec.row_degrees.len();
        let c = spec.tracked.len();
        assert_eq!(c, spec.tracked_degrees.len());

        // Probe homogeneity with a provisional degree-first order.
        let probe = Elim::order_for(spec.ring, spec.row_degrees, spec.tracked_degrees, true);
        let mut homogeneous = true;
        for (j, col) in spec.tracked.iter().enumerate() {
            let v = probe.pack(col, 0);
            if let Some(d) = probe.homogeneous_degree(&v) {
                if d != spec.tracked_degrees[j] {
                    homogeneous = false;
                }
            } else if !v.is_empty() {
                homogeneous = false;
            }
        }
        for col in spec.untracked.iter().chain(spec.known_gb) {
            let v = probe.pack(col, 0);
            if !v.is_empty() && probe.homogeneous_degree(&v).is_none() {
                homogeneous = false;
            }
        }
        if spec.ideal.iter().any(|g| !spec.ring.is_homogeneous(g)) {
            homogeneous = false;
        }
        let ord = Elim::order_for(spec.ring, spec.row_degrees, spec.tracked_degrees, homogeneous);

        let mut inputs = Vec::new();
        let first = if spec.rows_have_ideal { r } else { 0 };
        for comp in first..r + c {
            for g in spec.ideal {
                let v: MVec = g.terms().iter().map(|(m, k)| ord.term(comp as u32, *m, *k)).collect();
                inputs.push(GbInput {
                    vec: ord.normalize(v),
                    known_gb: homogeneous,
                });
            }
        }
        // A known basis stays a basis only under the order it was computed
        // for, which is the degree-first one.
        for col in spec.known_gb {
            inputs.push(GbInput {
                vec: ord.pack(col, 0),
                known_gb: homogeneous,
            });
        }
        for col in spec.untracked {
            inputs.push(GbInput {
                vec: ord.pack(col, 0),
                known_gb: false,
            });
        }
        for (j, col) in spec.tracked.iter().enumerate() {
            let mut v = ord.pack(col, 0);
            v.push(ord.term((r + j) as u32, crate::polyring::Monomial::ONE, 1));
            inputs.push(GbInput {
                vec: ord.normalize(v),
                known_gb: false,
            });
        }
        Elim {
            gb: Gb::compute(ord, inputs),
            rows: r,
            tracked: c,
        }
    }

    /// Generators of the module of relations among the tracked columns
    /// modulo the untracked ones, with their degrees (entries not yet in
    /// normal form).
    pub fn syzygies(&self, ring: &PolyRing) -> Vec<(Vec<Polynomial>, i32)> {
        let split = self.rows as u32;
        self.gb
            .basis
            .iter()
            .filter(|v| v[0].comp >= split)
            .map(|v| {
                debug_assert!(v.iter().all(|t| t.comp >= split));
                (self.gb.ord.unpack(ring, v, self.rows, self.tracked), self.gb.ord.top_degree(v))
            })
            .collect()
    }

    /// Normal form of `v` modulo the span of all generators (first block).
    pub fn reduce(&self, ring: &PolyRing, v: &[Polynomial]) -> Vec<Polynomial> {
        let w = self.gb.ord.pack(v, 0);
        let w = self.gb.reduce_first_block(w);
        self.gb.ord.unpack(ring, &w, 0, self.rows)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        let w = self.gb.ord.pack(v, 0);
        self.gb.reduce_first_block(w).iter().all(|t| t.comp >= self.rows as u32)
    }

    /// Basis elements living entirely in the first block, as columns.
    pub fn first_block_basis(&self, ring: &PolyRing) -> Vec<Vec<Polynomial>> {
        let split = self.rows as u32;
        self.gb
            .basis
            .iter()
            .filter(|v| v.iter().all(|t| t.comp < split))
            .map(|v| self.gb.ord.unpack(ring, v, 0, self.rows))
            .collect()
    }
}
