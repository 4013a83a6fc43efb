use std::cmp::Ordering;
use std::fmt::Write as _;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder, OrderKind, MAX_VARS};
use crate::error::{Error, Result};

/// A polynomial as a list of `(monomial, coefficient)` pairs sorted in
/// strictly decreasing order under the ring's monomial order. Coefficients
/// are never zero, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    pub(crate) terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading `(monomial, coefficient)` pair, if any.
    pub fn lead(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    /// Coefficient of the monomial 1.
    pub fn constant_coeff(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }
}

/// Arithmetic selector for [`PolyRing::poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// The ambient polynomial ring F_p[x_1..x_n] with a positive grading
/// (`weights`) and a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(p: u32, names: Vec<String>, weights: Vec<u32>, order: OrderKind) -> Result<Self> {
        let n = names.len();
        let order = MonomialOrder::new(order, n);
        PolyRing::with_order(p, names, weights, order)
    }

    pub fn with_order(
        p: u32,
        names: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceed the supported maximum of {}",
                names.len(),
                MAX_VARS
            )));
        }
        if weights.len() != names.len() {
            return Err(Error::InvalidRing("one weight per variable required".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("variable weights must be positive".into()));
        }
        let mut seen = order.var_order.clone();
        seen.sort_unstable();
        if seen != (0..names.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidRing("variable order is not a permutation".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidRing(format!("variable {a} declared twice")));
            }
        }
        Ok(PolyRing {
            field,
            names,
            weights,
            order,
        })
    }

    /// Standard-graded ring with default (degrevlex) order.
    pub fn standard(p: u32, names: &[&str]) -> Result<Self> {
        PolyRing::new(
            p,
            names.iter().map(|s| s.to_string()).collect(),
            vec![1; names.len()],
            OrderKind::DegRevLex,
        )
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and grading under another order family.
    pub fn reordered(&self, kind: OrderKind) -> PolyRing {
        PolyRing {
            order: MonomialOrder {
                kind,
                var_order: self.order.var_order.clone(),
            },
            ..self.clone()
        }
    }

    /// Append one variable of weight 1, least significant in the order.
    pub fn extended(&self, name: &str) -> Result<PolyRing> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        let mut weights = self.weights.clone();
        weights.push(1);
        let mut var_order = self.order.var_order.clone();
        var_order.push(self.names.len());
        PolyRing::with_order(
            self.characteristic(),
            names,
            weights,
            MonomialOrder::with_permutation(self.order.kind, var_order),
        )
    }

    #[inline]
    pub fn mono_degree(&self, m: &Monomial) -> i32 {
        m.weighted_degree(&self.weights)
    }

    #[inline]
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars());
        Polynomial {
            terms: vec![(Monomial::var(i), 1)],
        }
    }

    pub fn monomial(&self, m: Monomial, c: u32) -> Polynomial {
        let c = c % self.characteristic();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Build a normalized polynomial from arbitrary terms (duplicates are
    /// merged, zero coefficients dropped).
    pub fn from_terms(&self, mut terms: Vec<(Monomial, u32)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % self.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
            if let Some(last) = out.last() {
                if last.1 == 0 {
                    out.pop();
                }
            }
        }
        // a zero sum may leave an equal monomial behind a dropped one
        out.retain(|t| t.1 != 0);
        Polynomial { terms: out }
    }

    /// Re-sort a polynomial coming from a ring with the same variables but
    /// a different order.
    pub fn adopt(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }

    /// True iff `f` is a normalized polynomial of this ring.
    pub fn contains(&self, f: &Polynomial) -> bool {
        f.terms
            .iter()
            .all(|(m, c)| m.support_within(self.nvars()) && *c != 0 && *c < self.characteristic())
            && f.terms
                .windows(2)
                .all(|w| self.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add_scaled(a, 1, &Monomial::ONE, b)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add_scaled(a, self.field.neg(1), &Monomial::ONE, b)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        Polynomial {
            terms: a.terms.iter().map(|(m, c)| (*m, self.field.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|(m, k)| (*m, self.field.mul(*k, c))).collect(),
        }
    }

    pub fn mul_term(&self, a: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), self.field.mul(*k, c)))
                .collect(),
        }
    }

    /// `a + c * m * b` by a single merge pass.
    pub fn add_scaled(&self, a: &Polynomial, c: u32, m: &Monomial, b: &Polynomial) -> Polynomial {
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let bm = b.terms[j].0.mul(m);
            match self.cmp_monomials(&a.terms[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, f.mul(c, b.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a.terms[i].1, f.mul(c, b.terms[j].1));
                    if s != 0 {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        for t in &b.terms[j..] {
            out.push((t.0.mul(m), f.mul(c, t.1)));
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, *c, m, large);
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Checked arithmetic: both operands must belong to this ring.
    pub fn poly_arith(&self, a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        for (name, f) in [("left", a), ("right", b)] {
            if !self.contains(f) {
                return Err(Error::AmbientMismatch(format!(
                    "{name} operand is not a normalized element of this ring"
                )));
            }
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
        })
    }

    /// The maximal term of `f` under this ring's order.
    pub fn leading_term(&self, f: &Polynomial) -> Result<(u32, Monomial)> {
        f.lead().map(|(m, c)| (*c, *m)).ok_or(Error::ZeroPolynomial)
    }

    /// Degree of a nonzero homogeneous polynomial; `None` for zero or
    /// mixed-degree input.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Option<i32> {
        let d = self.mono_degree(&f.terms.first()?.0);
        f.terms
            .iter()
            .all(|(m, _)| self.mono_degree(m) == d)
            .then_some(d)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.homogeneous_degree(f).is_some()
    }

    pub fn max_degree(&self, f: &Polynomial) -> Option<i32> {
        f.terms.iter().map(|(m, _)| self.mono_degree(m)).max()
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.lead() {
            Some((_, c)) => self.scale(f, self.field.inv(*c)),
            None => Polynomial::zero(),
        }
    }

    /// Substitute-free evaluation modulo the maximal ideal: the constant term.
    pub fn residue(&self, f: &Polynomial) -> u32 {
        f.constant_coeff()
    }

    /// All monomials of the given weighted degree, in decreasing order.
    pub fn monomials_of_degree(&self, d: i32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut cur = [0u16; MAX_VARS];
        self.enumerate(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }

    fn enumerate(&self, i: usize, rem: i32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if rem == 0 {
                out.push(Monomial(*cur));
            }
            return;
        }
        let w = self.weights[i] as i32;
        let mut e = 0;
        while e * w <= rem {
            cur[i] = e as u16;
            self.enumerate(i + 1, rem - e * w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for i in 0..self.nvars() {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.names[i]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Canonical ASCII rendering, e.g. `3*x^2*y - z + 1`.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let v = self.field.signed(*c);
            let neg = v < 0;
            let a = v.unsigned_abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(s, "{a}");
            } else if a == 1 {
                s.push_str(&self.format_monomial(m));
            } else {
                let _ = write!(s, "{a}*{}", self.format_monomial(m));
            }
        }
        s
    }
}

/// Free-standing form of [`PolyRing::poly_arith`].
pub fn poly_arith(ring: &PolyRing, a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    ring.poly_arith(a, b, op)
}

/// Free-standing form of [`PolyRing::leading_term`] under an explicit order.
pub fn leading_term(ring: &PolyRing, f: &Polynomial, ord: OrderKind) -> Result<(u32, Monomial)> {
    let r = ring.reordered(ord);
    r.leading_term(&r.adopt(f))
}
