use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use super::linalg::minimize_columns;
use super::matrix::{MatrixJson, RingMatrix};
use crate::error::{Error, Result};
use crate::groebner::elim::{Elim, ElimSpec};
use crate::groebner::GradedRing;
use crate::polyring::Polynomial;

/// Gröbner basis of `im(relations) + I * F`, kept with its columns so it can
/// be replicated into direct sums.
pub(crate) struct RelGb {
    elim: Elim,
    columns: Vec<Vec<Polynomial>>,
}

/// A finitely presented graded module `coker(F1 -> F0)`: generators of the
/// given degrees modulo the column span of `relations`.
#[derive(Clone)]
pub struct FPModule {
    ring: GradedRing,
    gen_degrees: Vec<i32>,
    relations: RingMatrix,
    minimal: bool,
    gb: Arc<OnceLock<RelGb>>,
}

impl fmt::Debug for FPModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FPModule")
            .field("gen_degrees", &self.gen_degrees)
            .field("relations", &self.relations.format_rows(&self.ring))
            .finish()
    }
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gen_degrees == other.gen_degrees && self.relations == other.relations
    }
}

impl Eq for FPModule {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleJson {
    pub gen_degrees: Vec<i32>,
    pub relations: MatrixJson,
}

/// Build an elimination over the ring's ambient polynomial ring.
pub(crate) fn make_elim(
    ring: &GradedRing,
    rows: &[i32],
    tracked: &[Vec<Polynomial>],
    tracked_degrees: &[i32],
    untracked: &[Vec<Polynomial>],
    known: Option<&[Vec<Polynomial>]>,
) -> Elim {
    Elim::new(ElimSpec {
        ring: ring.ambient(),
        ideal: ring.ideal_generators(),
        row_degrees: rows,
        tracked,
        tracked_degrees,
        untracked,
        known_gb: known.unwrap_or(&[]),
        rows_have_ideal: known.is_some(),
    })
}

impl FPModule {
    /// Module with the given generator degrees and relation columns. Column
    /// degrees are inferred; entries must be homogeneous of consistent
    /// degree. Zero columns are dropped.
    pub fn new(ring: &GradedRing, gen_degrees: Vec<i32>, relations: Vec<Vec<Polynomial>>) -> Result<Self> {
        for (j, c) in relations.iter().enumerate() {
            if c.len() != gen_degrees.len() {
                return Err(Error::Semantic(format!(
                    "relation {j} has {} entries but the module has {} generators",
                    c.len(),
                    gen_degrees.len()
                )));
            }
        }
        let m = RingMatrix::infer(ring, gen_degrees.clone(), relations, 0)?;
        let keep: Vec<usize> = (0..m.ncols()).filter(|&j| m.column(j).iter().any(|p| !p.is_zero())).collect();
        Ok(FPModule::from_matrix(ring, m.select_columns(&keep)))
    }

    /// [`FPModule::new`] with relation entries parsed from strings, one
    /// slice per relation column.
    pub fn from_strs(ring: &GradedRing, gen_degrees: &[i32], relations: &[&[&str]]) -> Result<Self> {
        let cols = relations
            .iter()
            .map(|c| c.iter().map(|e| ring.parse(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FPModule::new(ring, gen_degrees.to_vec(), cols)
    }

    /// Module presented by a relation matrix whose row degrees are the
    /// generator degrees. Entries must already be in normal form.
    pub fn from_matrix(ring: &GradedRing, relations: RingMatrix) -> Self {
        FPModule {
            ring: ring.clone(),
            gen_degrees: relations.row_degrees().to_vec(),
            relations,
            minimal: false,
            gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn free(ring: &GradedRing, degrees: Vec<i32>) -> Self {
        let mut m = FPModule::from_matrix(ring, RingMatrix::zeros(degrees, vec![]));
        m.minimal = true;
        m
    }

    pub fn zero(ring: &GradedRing) -> Self {
        FPModule::free(ring, vec![])
    }

    /// R/(f_1..f_k) for homogeneous f_i.
    pub fn cyclic(ring: &GradedRing, ideal: &[Polynomial]) -> Result<Self> {
        FPModule::new(ring, vec![0], ideal.iter().map(|f| vec![f.clone()]).collect())
    }

    /// The residue field k = R/m.
    pub fn residue_field(ring: &GradedRing) -> Self {
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        FPModule::cyclic(ring, &vars).expect("variables are homogeneous").minimize()
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn nrels(&self) -> usize {
        self.relations.ncols()
    }

    pub fn gen_degrees(&self) -> &[i32] {
        &self.gen_degrees
    }

    pub fn relations(&self) -> &RingMatrix {
        &self.relations
    }

    pub fn relation_degrees(&self) -> &[i32] {
        self.relations.col_degrees()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub(crate) fn mark_minimal(mut self) -> Self {
        self.minimal = true;
        self
    }

    pub(crate) fn rel_gb(&self) -> &RelGb {
        self.gb.get_or_init(|| {
            let elim = make_elim(&self.ring, &self.gen_degrees, &[], &[], self.relations.columns(), None);
            let columns = elim.first_block_basis(self.ring.ambient());
            RelGb { elim, columns }
        })
    }

    /// Columns of a Gröbner basis of `im(relations) + I * F`.
    pub(crate) fn gb_columns(&self) -> &[Vec<Polynomial>] {
        &self.rel_gb().columns
    }

    /// Whether the vector `v` of F0 represents zero in the module.
    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.rel_gb().elim.contains(v)
    }

    /// Canonical representative of `v` modulo the relations.
    pub fn reduce(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        self.rel_gb().elim.reduce(self.ring.ambient(), v)
    }

    /// Degree of a homogeneous element vector (`None` for zero or mixed).
    pub fn element_degree(&self, v: &[Polynomial]) -> Option<i32> {
        let mut deg = None;
        for (p, a) in v.iter().zip(&self.gen_degrees) {
            if p.is_zero() {
                continue;
            }
            let d = self.ring.degree(p)? + a;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// The module with all degrees increased by `s` (so `M(-s)` in the
    /// usual twist notation).
    pub fn shifted(&self, s: i32) -> FPModule {
        let mut out = FPModule::from_matrix(&self.ring, self.relations.shifted(s));
        out.minimal = self.minimal;
        out
    }

    pub fn direct_sum(parts: &[&FPModule]) -> FPModule {
        assert!(!parts.is_empty());
        let ring = parts[0].ring.clone();
        let mats: Vec<&RingMatrix> = parts.iter().map(|p| &p.relations).collect();
        let mut out = FPModule::from_matrix(&ring, RingMatrix::block_diag(&mats));
        out.minimal = parts.iter().all(|p| p.minimal);
        out
    }

    /// `N(s_1) + ... + N(s_r)` (degrees of copy `i` raised by `s_i`), with
    /// the relation Gröbner basis replicated from `N` rather than recomputed.
    pub fn sum_of_shifts(n: &FPModule, shifts: &[i32]) -> FPModule {
        let ring = &n.ring;
        let copies: Vec<RingMatrix> = shifts.iter().map(|s| n.relations.shifted(*s)).collect();
        let refs: Vec<&RingMatrix> = copies.iter().collect();
        let rel = if refs.is_empty() {
            RingMatrix::zeros(vec![], vec![])
        } else {
            RingMatrix::block_diag(&refs)
        };
        let mut out = FPModule::from_matrix(ring, rel);
        out.minimal = n.minimal;
        let k = n.ngens();
        let total = k * shifts.len();
        if n.ring.is_polynomial_ring() && n.nrels() == 0 {
            return out;
        }
        let mut known = Vec::new();
        for b in 0..shifts.len() {
            for col in n.gb_columns() {
                let mut v = vec![Polynomial::zero(); total];
                v[b * k..(b + 1) * k].clone_from_slice(col);
                known.push(v);
            }
        }
        let elim = make_elim(ring, &out.gen_degrees, &[], &[], &[], Some(&known));
        let _ = out.gb.set(RelGb { elim, columns: known });
        out
    }

    /// Same generators and relations read over another quotient of the same
    /// ambient ring (typically R/(x)).
    pub fn base_change(&self, target: &GradedRing) -> Result<FPModule> {
        if target.ambient().names() != self.ring.ambient().names() {
            return Err(Error::AmbientMismatch("base change needs the same variables".into()));
        }
        let cols: Vec<Vec<Polynomial>> = self
            .relations
            .columns()
            .iter()
            .map(|c| c.iter().map(|p| target.adopt(p)).collect())
            .collect();
        let m = RingMatrix::from_columns(self.gen_degrees.clone(), self.relations.col_degrees().to_vec(), cols);
        let keep: Vec<usize> = (0..m.ncols()).filter(|&j| m.column(j).iter().any(|p| !p.is_zero())).collect();
        Ok(FPModule::from_matrix(target, m.select_columns(&keep)))
    }

    /// Minimal presentation (see [`minimize_tracked`]).
    pub fn minimize(&self) -> FPModule {
        if self.minimal {
            return self.clone();
        }
        minimize_tracked(self).module
    }

    /// True iff the module is zero.
    pub fn is_zero(&self) -> bool {
        self.minimize().ngens() == 0
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            gen_degrees: self.gen_degrees.clone(),
            relations: self.relations.to_json(&self.ring),
        }
    }

    /// One-line rendering such as `gens [0, -1]; rels [[x, y], [y, z]]`.
    pub fn describe(&self) -> String {
        let cols: Vec<String> = self
            .relations
            .columns()
            .iter()
            .map(|c| {
                let e: Vec<String> = c.iter().map(|p| self.ring.format(p)).collect();
                format!("[{}]", e.join(", "))
            })
            .collect();
        format!("gens {:?}; rels [{}]", self.gen_degrees, cols.join(", "))
    }
}

/// Result of minimizing a presentation.
#[derive(Debug, Clone)]
pub struct Minimized {
    pub module: FPModule,
    /// Indices of the original generators that survive, in order; new
    /// generator `i` is old generator `kept[i]`.
    pub kept: Vec<usize>,
    /// Column `i` expresses old generator `i` in the new generators.
    pub projection: RingMatrix,
}

/// Minimal presentation by graded Nakayama: repeatedly drop the
/// lowest-index generator occurring with a unit coefficient in some
/// relation, then discard relations that are redundant modulo the maximal
/// ideal.
pub fn minimize_tracked(m: &FPModule) -> Minimized {
    let ring = &m.ring;
    let f = ring.field();
    let n = m.ngens();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<Vec<Polynomial>> = m.relations.columns().to_vec();
    let mut col_deg: Vec<i32> = m.relations.col_degrees().to_vec();
    let mut proj: Vec<Vec<Polynomial>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect();
    loop {
        let found = (0..rows.len()).find_map(|r| cols.iter().position(|c| ring.is_unit(&c[r])).map(|j| (r, j)));
        let Some((r, j)) = found else { break };
        let piv = cols.remove(j);
        col_deg.remove(j);
        let c_inv = f.inv(piv[r].constant_coeff());
        for col in cols.iter_mut().chain(proj.iter_mut()) {
            if !col[r].is_zero() {
                let factor = ring.scale(&col[r], c_inv);
                for i in 0..col.len() {
                    if !piv[i].is_zero() {
                        col[i] = ring.sub(&col[i], &ring.mul(&factor, &piv[i]));
                    }
                }
            }
            col.remove(r);
        }
        rows.remove(r);
    }
    let gen_degrees: Vec<i32> = rows.iter().map(|&i| m.gen_degrees[i]).collect();
    let nonzero: Vec<usize> = (0..cols.len()).filter(|&j| cols[j].iter().any(|p| !p.is_zero())).collect();
    let cols: Vec<Vec<Polynomial>> = nonzero.iter().map(|&j| cols[j].clone()).collect();
    let col_deg: Vec<i32> = nonzero.iter().map(|&j| col_deg[j]).collect();
    let keep = minimize_columns(ring, &cols, &col_deg);
    let rel = RingMatrix::from_columns(
        gen_degrees.clone(),
        keep.iter().map(|&j| col_deg[j]).collect(),
        keep.iter().map(|&j| cols[j].clone()).collect(),
    );
    let projection = RingMatrix::from_columns(gen_degrees, m.gen_degrees.clone(), proj);
    Minimized {
        module: FPModule::from_matrix(ring, rel).mark_minimal(),
        kept: rows,
        projection,
    }
}

/// Generators (in normal form, nonzero) of `{a : sum_j a_j * images_j = 0
/// in target / extra}` where `extra` are additional relation columns of the
/// target's free module.
pub(crate) fn preimage(
    target: &FPModule,
    extra: &[Vec<Polynomial>],
    images: &[Vec<Polynomial>],
    image_degrees: &[i32],
) -> Vec<(Vec<Polynomial>, i32)> {
    let ring = &target.ring;
    let elim = make_elim(
        ring,
        &target.gen_degrees,
        images,
        image_degrees,
        extra,
        Some(target.gb_columns()),
    );
    elim.syzygies(ring.ambient())
        .into_iter()
        .map(|(v, d)| (v.iter().map(|p| ring.nf(p)).collect::<Vec<_>>(), d))
        .filter(|(v, _)| v.iter().any(|p| !p.is_zero()))
        .collect()
}

/// Minimal generators of the submodule of a free module spanned by the
/// given homogeneous columns.
pub(crate) fn minimal_columns(ring: &GradedRing, cols: Vec<(Vec<Polynomial>, i32)>) -> Vec<(Vec<Polynomial>, i32)> {
    let vecs: Vec<Vec<Polynomial>> = cols.iter().map(|(v, _)| v.clone()).collect();
    let degs: Vec<i32> = cols.iter().map(|(_, d)| *d).collect();
    minimize_columns(ring, &vecs, &degs).into_iter().map(|j| cols[j].clone()).collect()
}

/// A module given as generators inside another module's free cover.
#[derive(Debug, Clone)]
pub struct Subquotient {
    /// Minimal presentation.
    pub module: FPModule,
    /// Generator `i` of `module` as a vector of the ambient free module.
    pub embedding: Vec<Vec<Polynomial>>,
}

/// `(span(gens) + R) / R` where `R` is the relation module of `base` plus the
/// `extra` columns.
pub(crate) fn subquotient(
    base: &FPModule,
    extra: &[Vec<Polynomial>],
    gens: Vec<(Vec<Polynomial>, i32)>,
) -> Subquotient {
    let ring = &base.ring;
    let gens = minimal_columns(ring, gens);
    let vecs: Vec<Vec<Polynomial>> = gens.iter().map(|(v, _)| v.clone()).collect();
    let degs: Vec<i32> = gens.iter().map(|(_, d)| *d).collect();
    let rels = preimage(base, extra, &vecs, &degs);
    let rels = minimal_columns(ring, rels);
    let rel = RingMatrix::from_columns(
        degs.clone(),
        rels.iter().map(|(_, d)| *d).collect(),
        rels.into_iter().map(|(v, _)| v).collect(),
    );
    let pres = FPModule::from_matrix(ring, rel);
    let min = minimize_tracked(&pres);
    Subquotient {
        embedding: min.kept.iter().map(|&i| vecs[i].clone()).collect(),
        module: min.module,
    }
}

/// Index of the first vector outside `im(relations of base) + span(extra)`.
pub(crate) fn first_outside(base: &FPModule, extra: &[Vec<Polynomial>], vs: &[Vec<Polynomial>]) -> Option<usize> {
    if extra.is_empty() {
        return vs.iter().position(|v| !base.contains(v));
    }
    let elim = make_elim(&base.ring, &base.gen_degrees, &[], &[], extra, Some(base.gb_columns()));
    vs.iter().position(|v| !elim.contains(v))
}
