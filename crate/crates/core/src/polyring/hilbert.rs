use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// Integer Laurent polynomial in `t`, used for Hilbert-series numerators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        let mut p = IntPoly::zero();
        p.add_term(exp, c);
        p
    }

    pub fn add_term(&mut self, exp: i32, c: i64) {
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Value at t = 1.
    pub fn at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let a = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Hilbert numerator of a free module with generators in the given degrees:
/// one `t^d` per generator.
pub fn hilbert_numerator(degrees: &[i32]) -> IntPoly {
    let mut p = IntPoly::zero();
    for &d in degrees {
        p.add_term(d, 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_module_numerators() {
        assert_eq!(hilbert_numerator(&[0]).to_string(), "1");
        assert_eq!(hilbert_numerator(&[0, 1]).to_string(), "1 + t");
        assert_eq!(hilbert_numerator(&[2, 2]).to_string(), "2*t^2");
        assert!(hilbert_numerator(&[]).is_zero());
    }

    #[test]
    fn product_and_cancellation() {
        let one_minus_t = IntPoly::monomial(0, 1).sub(&IntPoly::monomial(1, 1));
        let sq = one_minus_t.mul(&one_minus_t);
        assert_eq!(sq.to_string(), "1 - 2*t + t^2");
        assert_eq!(sq.at_one(), 0);
    }
}
