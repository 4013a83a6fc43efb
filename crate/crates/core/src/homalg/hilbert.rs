use std::fmt;

use serde::Serialize;

use super::complex::free_resolution;
use crate::fpmod::{FPModule, RingMatrix};
use crate::groebner::GradedRing;
use crate::polyring::{hilbert_numerator, IntPoly};

/// `numerator / prod_i (1 - t^{w_i})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub weights: Vec<u32>,
}

impl HilbertSeries {
    /// `dim_k M_d` read off by expanding the series.
    pub fn coefficient(&self, d: i32) -> i64 {
        // Coefficients of 1/prod(1 - t^w) up to the needed degree.
        let lo = self.numerator.terms().map(|(e, _)| e).min().unwrap_or(0);
        if d < lo {
            return 0;
        }
        let span = (d - lo) as usize;
        let mut denom = vec![0i64; span + 1];
        denom[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            for k in w..=span {
                denom[k] += denom[k - w];
            }
        }
        self.numerator
            .terms()
            .filter(|(e, _)| *e <= d)
            .map(|(e, c)| c * denom[(d - e) as usize])
            .sum()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .weights
            .iter()
            .map(|w| if *w == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{w})") })
            .collect();
        write!(f, "({}) / {}", self.numerator, den.join(""))
    }
}

/// Lift `M` to the ambient polynomial ring `S` by adding `I * e_j` to the
/// relations.
fn over_ambient(m: &FPModule) -> FPModule {
    let ring = m.ring();
    let s = GradedRing::polynomial(ring.ambient().clone());
    let base = m.base_change(&s).expect("same ambient ring");
    if ring.is_polynomial_ring() {
        return base;
    }
    let n = m.ngens();
    let mut cols = base.relations().columns().to_vec();
    let mut degs = base.relation_degrees().to_vec();
    for (j, a) in m.gen_degrees().iter().enumerate() {
        for g in ring.ideal_generators() {
            let mut v = vec![s.zero(); n];
            v[j] = g.clone();
            cols.push(v);
            degs.push(a + s.degree(g).expect("defining ideal is homogeneous"));
        }
    }
    FPModule::from_matrix(&s, RingMatrix::from_columns(m.gen_degrees().to_vec(), degs, cols))
}

/// Hilbert series from a finite minimal resolution over the ambient ring.
pub fn hilbert_series(m: &FPModule) -> HilbertSeries {
    let lifted = over_ambient(m);
    let res = free_resolution(&lifted, m.ring().nvars() + 1);
    debug_assert!(!res.truncated, "Hilbert syzygy theorem bounds the length");
    let mut num = IntPoly::zero();
    for (i, degs) in res.complex.degrees.iter().enumerate() {
        let h = hilbert_numerator(degs);
        num = if i % 2 == 0 { num.add(&h) } else { num.sub(&h) };
    }
    HilbertSeries {
        numerator: num,
        weights: m.ring().weights().to_vec(),
    }
}
