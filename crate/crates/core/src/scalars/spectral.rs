//! Sparse Laurent polynomials in the spectral parameters x, y over Q(q).

use super::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of Q(q)[x^{±1}, y^{±1}], stored as a sparse exponent map.
///
/// No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SpectralScalar {
    terms: BTreeMap<(i64, i64), Scalar>,
}

impl SpectralScalar {
    pub fn zero() -> Self {
        SpectralScalar::default()
    }

    pub fn from_scalar(s: Scalar) -> Self {
        SpectralScalar::monomial(0, 0, s)
    }

    /// `s * x^i y^j`.
    pub fn monomial(i: i64, j: i64, s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert((i, j), s);
        }
        SpectralScalar { terms }
    }

    pub fn x() -> Self {
        SpectralScalar::monomial(1, 0, Scalar::one())
    }

    pub fn y() -> Self {
        SpectralScalar::monomial(0, 1, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Scalar)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (i64, i64), s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, s);
            }
            Some(old) => {
                let sum = old + s;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
    }
}

impl Add for SpectralScalar {
    type Output = SpectralScalar;
    fn add(mut self, other: SpectralScalar) -> SpectralScalar {
        for (k, v) in other.terms {
            self.insert_add(k, v);
        }
        self
    }
}

impl Sub for SpectralScalar {
    type Output = SpectralScalar;
    fn sub(self, other: SpectralScalar) -> SpectralScalar {
        self + (-other)
    }
}

impl Neg for SpectralScalar {
    type Output = SpectralScalar;
    fn neg(mut self) -> SpectralScalar {
        for v in self.terms.values_mut() {
            *v = -(v.clone());
        }
        self
    }
}

impl Mul for SpectralScalar {
    type Output = SpectralScalar;
    fn mul(self, other: SpectralScalar) -> SpectralScalar {
        let mut out = SpectralScalar::zero();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &other.terms {
                out.insert_add((i1 + i2, j1 + j2), a.clone() * b.clone());
            }
        }
        out
    }
}

impl fmt::Display for SpectralScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if *i != 0 {
                write!(f, "*x^{}", i)?;
            }
            if *j != 0 {
                write!(f, "*y^{}", j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SpectralScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q_bracket;

    #[test]
    fn laurent_arithmetic() {
        // (x - x^{-1})(x + x^{-1}) = x^2 - x^{-2}
        let a = SpectralScalar::monomial(1, 0, Scalar::one())
            + SpectralScalar::monomial(-1, 0, -Scalar::one());
        let b = SpectralScalar::monomial(1, 0, Scalar::one())
            + SpectralScalar::monomial(-1, 0, Scalar::one());
        let prod = a * b;
        assert_eq!(prod.coeff(2, 0), Scalar::one());
        assert_eq!(prod.coeff(-2, 0), -Scalar::one());
        assert!(prod.coeff(0, 0).is_zero());
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = SpectralScalar::monomial(2, -1, q_bracket());
        let b = SpectralScalar::monomial(2, -1, -q_bracket());
        assert!((a + b).is_zero());
    }
}
