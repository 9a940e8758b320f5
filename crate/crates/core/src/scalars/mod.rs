//! Exact arithmetic in the coefficient field Q(q) and in the Laurent
//! extension Q(q)[x^{±1}, y^{±1}] used for spectral parameters.
//!
//! A [`Scalar`] is a reduced fraction of integer polynomials in `q`, kept in
//! a canonical form (coprime, denominator with positive leading coefficient)
//! so that structural equality is field equality. All arithmetic is exact;
//! there is no floating-point mode and `q` is never evaluated.

mod poly;
mod spectral;

pub use poly::IntPoly;
pub use spectral::SpectralScalar;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
}

/// An element of Q(q) in canonical form.
///
/// Invariants: the denominator is nonzero with positive leading coefficient,
/// gcd(num, den) = 1, and zero is stored as 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    fn canonical(num: IntPoly, den: IntPoly) -> Scalar {
        assert!(!den.is_zero(), "scalar denominator is zero");
        if num.is_zero() {
            return Scalar {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        if den
            .leading_coeff()
            .map(|c| c < &BigInt::from(0))
            .unwrap_or(false)
        {
            num = num.neg();
            den = den.neg();
        }
        Scalar { num, den }
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Scalar {
        Scalar {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Scalar {
        Scalar {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_fraction(num: IntPoly, den: IntPoly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::canonical(num, den))
    }

    /// The generator `q`.
    pub fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Scalar {
        if k >= 0 {
            Scalar {
                num: IntPoly::monomial(1, k as usize),
                den: IntPoly::one(),
            }
        } else {
            Scalar {
                num: IntPoly::one(),
                den: IntPoly::monomial(1, (-k) as usize),
            }
        }
    }

    /// `c * q^k`.
    pub fn q_monomial(c: i64, k: i64) -> Scalar {
        Scalar::from_int(c) * Scalar::q_pow(k)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.clone() * other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc * base.clone();
        }
        Ok(acc)
    }

    /// Renders as LaTeX, e.g. `\frac{q^{2}-1}{q}`.
    pub fn latex(&self) -> String {
        fn poly_latex(p: &IntPoly) -> String {
            p.to_string()
                .replace('*', " ")
                .replace('^', "^")
                .split('^')
                .collect::<Vec<_>>()
                .join("^")
        }
        if self.den.is_one() {
            poly_latex(&self.num)
        } else {
            format!("\\frac{{{}}}{{{}}}", poly_latex(&self.num), poly_latex(&self.den))
        }
    }
}

/// `q_a`: `q` for `a <= m`, `p = -q^{-1}` for `a > m`.
pub fn q_sub(a: usize, m: usize, n: usize) -> Result<Scalar, ScalarError> {
    if a < 1 || a > m + n {
        return Err(ScalarError::IndexOutOfRange { index: a, max: m + n });
    }
    Ok(if a <= m {
        Scalar::q()
    } else {
        -Scalar::q_pow(-1)
    })
}

/// `q_a^k` without intermediate blow-up: `(-q^{-1})^k = (-1)^k q^{-k}`.
pub fn q_sub_pow(a: usize, m: usize, n: usize, k: i64) -> Result<Scalar, ScalarError> {
    if a < 1 || a > m + n {
        return Err(ScalarError::IndexOutOfRange { index: a, max: m + n });
    }
    Ok(if a <= m {
        Scalar::q_pow(k)
    } else {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Scalar::q_monomial(sign, -k)
    })
}

/// `q - q^{-1} = (q^2-1)/q`, the ubiquitous quantum bracket.
pub fn q_bracket() -> Scalar {
    Scalar::q() - Scalar::q_pow(-1)
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, other: Scalar) -> Scalar {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Scalar::canonical(num, den)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, other: Scalar) -> Scalar {
        self + (-other)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, other: Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return other;
        }
        if other.is_one() {
            return self;
        }
        // Cross-cancel first to keep the final gcd small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = other.den.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        Scalar::canonical(n1.mul(&n2), d1.mul(&d2))
    }
}

impl<'a> Mul<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, other: &'a Scalar) -> Scalar {
        self * other.clone()
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, other: Scalar) -> Scalar {
        self.checked_div(&other).expect("scalar division by zero")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_terms = self.num.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
        let den_terms = self.den.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
        if num_terms > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        if den_terms > 1 {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn serialize_poly<S: serde::Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    let nonzero: Vec<(String, usize)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(e, c)| (c.to_string(), e))
        .collect();
    let mut seq = s.serialize_seq(Some(nonzero.len()))?;
    for (c, e) in nonzero {
        // Coefficients serialize as strings so arbitrary precision survives JSON.
        seq.serialize_element(&(c, e))?;
    }
    seq.end()
}

fn deserialize_poly<'de, D: serde::Deserializer<'de>>(d: D) -> Result<IntPoly, D::Error> {
    let pairs: Vec<(String, usize)> = Vec::deserialize(d)?;
    let maxe = pairs.iter().map(|(_, e)| *e).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::from(0); maxe + 1];
    for (c, e) in pairs {
        coeffs[e] = c
            .parse()
            .map_err(|_| serde::de::Error::custom("bad integer coefficient"))?;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    #[serde(serialize_with = "serialize_poly", deserialize_with = "deserialize_poly")]
    num: IntPoly,
    #[serde(serialize_with = "serialize_poly", deserialize_with = "deserialize_poly")]
    den: IntPoly,
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let repr = ScalarRepr::deserialize(d)?;
        Scalar::from_fraction(repr.num, repr.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_bracket_display() {
        // (q - q^{-1}) computed as add(q, neg(inv(q)))
        let v = Scalar::q() + (-Scalar::q().inv().unwrap());
        assert_eq!(v, q_bracket());
        assert_eq!(v.to_string(), "(q^2-1)/q");
    }

    #[test]
    fn q_sub_values() {
        assert_eq!(q_sub(1, 1, 1).unwrap(), Scalar::q());
        assert_eq!(q_sub(2, 1, 1).unwrap(), -Scalar::q_pow(-1));
        assert!(q_sub(3, 1, 1).is_err());
        assert!(q_sub(0, 1, 1).is_err());
        // q_sub(a) * q_sub(a)^{-1} = 1
        for a in 1..=2 {
            let s = q_sub(a, 1, 1).unwrap();
            assert!((s.clone() * s.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn bracket_uniform_over_subscripts() {
        // q_a - q_a^{-1} = q - q^{-1} for every a
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
            for a in 1..=m + n {
                let qa = q_sub(a, m, n).unwrap();
                let v = qa.clone() - qa.inv().unwrap();
                assert_eq!(v, q_bracket(), "a={a} m={m} n={n}");
            }
        }
    }

    #[test]
    fn inv_zero_errors() {
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn canonical_is_idempotent() {
        let s = Scalar::from_fraction(
            IntPoly::monomial(2, 3).sub(&IntPoly::monomial(2, 1)),
            IntPoly::monomial(-4, 2),
        )
        .unwrap();
        let t = Scalar::from_fraction(s.numerator().clone(), s.denominator().clone()).unwrap();
        assert_eq!(s, t);
        // denominator sign convention
        assert!(s.denominator().leading_coeff().unwrap() > &BigInt::from(0));
    }

    #[test]
    fn q_sub_pow_matches_pow() {
        for a in 1..=3 {
            for k in -4i64..=4 {
                let direct = q_sub_pow(a, 1, 2, k).unwrap();
                let slow = q_sub(a, 1, 2).unwrap().pow(k).unwrap();
                assert_eq!(direct, slow, "a={a} k={k}");
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let s = q_bracket().pow(3).unwrap() * Scalar::q_monomial(-7, -2);
        let js = serde_json::to_string(&s).unwrap();
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(s, back);
    }
}
