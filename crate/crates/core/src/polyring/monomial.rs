use std::cmp::Ordering;

/// Hard cap on the number of ring variables (ambient variables plus one
/// auxiliary variable for the Rabinowitsch construction).
pub const MAX_VARS: usize = 8;

/// Exponent vector. Unused trailing slots are always zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub(crate) [u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = [0u16; MAX_VARS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = [0u16; MAX_VARS];
        m[i] = 1;
        Monomial(m)
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.0[..nvars]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of variable factors, ignoring weights.
    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn weighted_degree(&self, weights: &[u32]) -> i32 {
        let mut d = 0i32;
        for (e, w) in self.0.iter().zip(weights) {
            d += *e as i32 * *w as i32;
        }
        d
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(m)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = other.0;
        for (a, b) in m.iter_mut().zip(self.0.iter()) {
            debug_assert!(*a >= *b);
            *a -= *b;
        }
        Monomial(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Monomial(m)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support_within(&self, nvars: usize) -> bool {
        self.0[nvars..].iter().all(|&e| e == 0)
    }
}

/// Monomial order families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    DegLex,
    Lex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::DegLex => "deglex",
            OrderKind::Lex => "lex",
        }
    }

    pub fn from_name(s: &str) -> Option<OrderKind> {
        match s {
            "degrevlex" | "grevlex" => Some(OrderKind::DegRevLex),
            "deglex" | "grlex" => Some(OrderKind::DegLex),
            "lex" => Some(OrderKind::Lex),
            _ => None,
        }
    }
}

/// A monomial order: a family plus the precedence of variables
/// (`var_order[0]` is the most significant variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub var_order: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            var_order: (0..nvars).collect(),
        }
    }

    pub fn with_permutation(kind: OrderKind, var_order: Vec<usize>) -> Self {
        MonomialOrder { kind, var_order }
    }

    pub fn is_degree_compatible(&self) -> bool {
        !matches!(self.kind, OrderKind::Lex)
    }

    /// Compare two monomials; `weights` supply the grading for the degree
    /// compatible families.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::DegRevLex => {
                let c = a.weighted_degree(weights).cmp(&b.weighted_degree(weights));
                if c != Ordering::Equal {
                    return c;
                }
                for &i in self.var_order.iter().rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegLex => {
                let c = a.weighted_degree(weights).cmp(&b.weighted_degree(weights));
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
        for &i in &self.var_order {
            if a.0[i] != b.0[i] {
                return a.0[i].cmp(&b.0[i]);
            }
        }
        Ordering::Equal
    }
}
