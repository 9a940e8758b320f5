//! Free-algebra elements: finite Q(q)-linear combinations of words.

use super::letter::{Letter, Word};
use crate::scalars::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of the free algebra over [`Word`]s with [`Scalar`] coefficients.
///
/// No zero coefficients are stored; the term map is keyed by the deglex order
/// so the leading monomial is the last entry.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly::default()
    }

    pub fn one() -> NCPoly {
        NCPoly::from_term(Word::empty(), Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> NCPoly {
        NCPoly::from_term(Word::empty(), s)
    }

    pub fn from_term(w: Word, c: Scalar) -> NCPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn from_word(w: Word) -> NCPoly {
        NCPoly::from_term(w, Scalar::one())
    }

    pub fn from_letter(l: Letter) -> NCPoly {
        NCPoly::from_word(Word::single(l))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading (deglex-maximal) term.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Maximal word length, or 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map(|w| w.len()).unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone() * s.clone());
        }
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        if s.is_zero() {
            return NCPoly::zero();
        }
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Applies a map on letters multiplicatively, word by word.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(mut self, other: NCPoly) -> NCPoly {
        for (w, c) in other.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(mut self, other: NCPoly) -> NCPoly {
        for (w, c) in other.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(mut self) -> NCPoly {
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms.into_iter().map(|(w, c)| (w, -c)).collect();
        self
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, other: NCPoly) -> NCPoly {
        &self * &other
    }
}

impl Mul<&NCPoly> for NCPoly {
    type Output = NCPoly;
    fn mul(self, other: &NCPoly) -> NCPoly {
        &self * other
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading term first reads naturally.
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() && !w.is_empty() {
                write!(f, "{}", w)?;
            } else if w.is_empty() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*{}", c, w)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire form of one term, matching the documented JSON schema.
#[derive(Serialize, Deserialize)]
struct TermRepr {
    coef: Scalar,
    word: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct NCPolyRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for NCPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        NCPolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermRepr {
                    coef: c.clone(),
                    word: w.letters().to_vec(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NCPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<NCPoly, D::Error> {
        let repr = NCPolyRepr::deserialize(d)?;
        let mut out = NCPoly::zero();
        for t in repr.terms {
            out.add_term(Word::from_letters(t.word), t.coef);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::letter::{e, f, kp};
    use crate::scalars::q_bracket;

    #[test]
    fn product_concatenates_words() {
        let a = NCPoly::from_letter(e(1));
        let b = NCPoly::from_letter(f(1));
        let ab = &a * &b;
        assert_eq!(ab.num_terms(), 1);
        let (w, c) = ab.leading().unwrap();
        assert_eq!(w, &Word::from_letters([e(1), f(1)]));
        assert!(c.is_one());
    }

    #[test]
    fn cancellation() {
        let a = NCPoly::from_term(Word::single(kp(1)), q_bracket());
        let b = NCPoly::from_term(Word::single(kp(1)), -q_bracket());
        assert!((a + b).is_zero());
    }

    #[test]
    fn leading_is_deglex_max() {
        let mut p = NCPoly::from_word(Word::from_letters([e(1), e(2)]));
        p.add_term(Word::from_letters([e(2), e(1)]), Scalar::one());
        p.add_term(Word::single(e(2)), Scalar::one());
        let (w, _) = p.leading().unwrap();
        assert_eq!(w, &Word::from_letters([e(2), e(1)]));
    }

    #[test]
    fn json_roundtrip() {
        let p = NCPoly::from_term(Word::from_letters([e(1), f(2)]), q_bracket())
            + NCPoly::from_scalar(-Scalar::one());
        let js = serde_json::to_string(&p).unwrap();
        let back: NCPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(p, back);
    }
}
