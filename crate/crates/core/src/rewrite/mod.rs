//! Free noncommutative algebra over Q(q) with a monomial order, oriented
//! rewriting, reduction to normal form, and degree-bounded overlap
//! completion. Every algebra in this crate runs on this engine.

mod letter;
mod ncpoly;
mod presentation;
pub mod serialize;

pub use letter::{e, f, km, kp, lm, lp, Letter, LetterKind, Word};
pub use ncpoly::NCPoly;
pub use presentation::{
    orient, EngineError, Presentation, RewriteRule, Verdict, VerdictStatus, DEFAULT_RULE_CAP,
};

use std::cmp::Ordering;

/// Degree-lexicographic comparison of two words (longer is greater; equal
/// lengths compare letterwise by precedence).
pub fn monomial_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}
