//! Generator letters and free-monoid words.
//!
//! The monomial order is degree-lexicographic: longer words are greater, and
//! equal-length words compare letterwise by a fixed precedence. The
//! precedence is intrinsic to the letter so words order without consulting a
//! table:
//!
//! * Chevalley alphabets: F(1) < ... < F(N-1) < K-(1) < K+(1) < ... <
//!   K-(N) < K+(N) < E(1) < ... < E(N-1), which shapes normal forms as
//!   (F part)(K part)(E part).
//! * RLL alphabets: every l- letter below every l+ letter, diagonals before
//!   off-diagonals, then lexicographic on (a, b).
//! * Tensor copies dominate everything: copy-1 letters sort below copy-2,
//!   which orients the slot-commutation rules letter2·letter1 -> letter1·letter2.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum LetterKind {
    /// Lowering generator f_a.
    F(u8),
    /// K_b^{-1}.
    KMinus(u8),
    /// K_b.
    KPlus(u8),
    /// Raising generator e_a.
    E(u8),
    /// RLL generator l+_{ab}, a <= b.
    LPlus(u8, u8),
    /// RLL generator l-_{ab}, a >= b.
    LMinus(u8, u8),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub kind: LetterKind,
    /// Tensor-slot tag; 1 unless the presentation is a tensor power.
    pub copy: u8,
}

impl Letter {
    pub fn new(kind: LetterKind) -> Letter {
        Letter { kind, copy: 1 }
    }

    pub fn in_copy(kind: LetterKind, copy: u8) -> Letter {
        Letter { kind, copy }
    }

    pub fn with_copy(self, copy: u8) -> Letter {
        Letter { kind: self.kind, copy }
    }

    /// Precedence key; lower sorts first.
    fn rank(&self) -> (u8, u8, u8, u8, u8) {
        match self.kind {
            LetterKind::F(a) => (self.copy, 0, 0, a, 0),
            // K-(b) just below K+(b), ladder interleaved by index.
            LetterKind::KMinus(b) => (self.copy, 1, 0, b, 0),
            LetterKind::KPlus(b) => (self.copy, 1, 0, b, 1),
            LetterKind::E(a) => (self.copy, 2, 0, a, 0),
            LetterKind::LMinus(a, b) => (self.copy, 0, u8::from(a != b), a, b),
            LetterKind::LPlus(a, b) => (self.copy, 1, u8::from(a != b), a, b),
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::F(a) => write!(f, "f{}", a)?,
            LetterKind::KMinus(b) => write!(f, "K{}^-1", b)?,
            LetterKind::KPlus(b) => write!(f, "K{}", b)?,
            LetterKind::E(a) => write!(f, "e{}", a)?,
            LetterKind::LPlus(a, b) => write!(f, "l+{}{}", a, b)?,
            LetterKind::LMinus(a, b) => write!(f, "l-{}{}", a, b)?,
        }
        if self.copy != 1 {
            write!(f, "'{}", self.copy)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience constructors for single-copy letters.
pub fn f(a: usize) -> Letter {
    Letter::new(LetterKind::F(a as u8))
}
pub fn e(a: usize) -> Letter {
    Letter::new(LetterKind::E(a as u8))
}
pub fn kp(b: usize) -> Letter {
    Letter::new(LetterKind::KPlus(b as u8))
}
pub fn km(b: usize) -> Letter {
    Letter::new(LetterKind::KMinus(b as u8))
}
pub fn lp(a: usize, b: usize) -> Letter {
    Letter::new(LetterKind::LPlus(a as u8, b as u8))
}
pub fn lm(a: usize, b: usize) -> Letter {
    Letter::new(LetterKind::LMinus(a as u8, b as u8))
}

/// A word in the free monoid over [`Letter`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    letters: SmallVec<[Letter; 8]>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn single(l: Letter) -> Word {
        let mut letters = SmallVec::new();
        letters.push(l);
        Word { letters }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    /// Replaces `self[pos .. pos+len]` by `mid`.
    pub fn splice(&self, pos: usize, len: usize, mid: &Word) -> Word {
        let mut letters: SmallVec<[Letter; 8]> =
            SmallVec::with_capacity(self.letters.len() - len + mid.len());
        letters.extend_from_slice(&self.letters[..pos]);
        letters.extend_from_slice(&mid.letters);
        letters.extend_from_slice(&self.letters[pos + len..]);
        Word { letters }
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word {
            letters: SmallVec::from_slice(&self.letters[from..to]),
        }
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Retags every letter with the given tensor copy.
    pub fn retag_copy(&self, copy: u8) -> Word {
        Word {
            letters: self.letters.iter().map(|l| l.with_copy(copy)).collect(),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    /// Degree-lexicographic: length first, then letterwise precedence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chevalley_precedence() {
        assert!(f(1) < f(2));
        assert!(f(2) < km(1));
        assert!(km(1) < kp(1));
        assert!(kp(1) < km(2));
        assert!(kp(3) < e(1));
        assert!(e(1) < e(2));
    }

    #[test]
    fn deglex_examples() {
        // compare(E1.F1, F1.E1) -> greater (E outranks F)
        let a = Word::from_letters([e(1), f(1)]);
        let b = Word::from_letters([f(1), e(1)]);
        assert!(a > b);
        // compare(K1, K1.K1^-1) -> less (degree dominates)
        let c = Word::single(kp(1));
        let d = Word::from_letters([kp(1), km(1)]);
        assert!(c < d);
        // compare(E2.E1.E1, E1.E1.E2) -> greater (first-letter precedence)
        let x = Word::from_letters([e(2), e(1), e(1)]);
        let y = Word::from_letters([e(1), e(1), e(2)]);
        assert!(x > y);
    }

    #[test]
    fn copies_dominate() {
        let one = Letter::in_copy(LetterKind::E(3), 1);
        let two = Letter::in_copy(LetterKind::F(1), 2);
        assert!(one < two);
    }

    #[test]
    fn rll_precedence() {
        assert!(lm(1, 1) < lm(2, 2));
        assert!(lm(3, 3) < lm(2, 1));
        assert!(lm(2, 1) < lm(3, 1));
        assert!(lm(3, 2) < lp(1, 1));
        assert!(lp(2, 2) < lp(1, 2));
        assert!(lp(1, 2) < lp(1, 3));
        assert!(lp(1, 3) < lp(2, 3));
    }

    #[test]
    fn splice_replaces_segment() {
        let w = Word::from_letters([e(1), e(2), e(3)]);
        let mid = Word::from_letters([f(1), f(2)]);
        let out = w.splice(1, 1, &mid);
        assert_eq!(out, Word::from_letters([e(1), f(1), f(2), e(3)]));
    }
}
