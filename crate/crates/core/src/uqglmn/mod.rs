//! The degenerate quantum general linear group U_q(gl_{m,n}): its completed
//! presentation, root vectors, Hopf structure maps, the element K_2rho, and
//! the commutation-relation verification suites.

pub mod hopf;
pub mod relations;
pub mod suites;

pub use hopf::{HopfImage, HopfMap};

use crate::rewrite::{e, f, km, kp, EngineError, Letter, NCPoly, Presentation, Verdict, Word};
use crate::scalars::{q_bracket, q_sub, Scalar, ScalarError};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("m and n must both be at least 1 (got m={m}, n={n})")]
    BadParams { m: usize, n: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("root vector indices must be distinct and within 1..={max}")]
    BadRootIndices { max: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootVariant {
    Plain,
    Bar,
}

/// A completed U_q(gl_{m,n}) with cached root-vector expansions and the
/// tensor-square presentation for coproduct computations.
pub struct AlgebraHandle {
    m: usize,
    n: usize,
    pres: Arc<Presentation>,
    square: Arc<Presentation>,
    root_plain: HashMap<(usize, usize), NCPoly>,
    root_bar: HashMap<(usize, usize), NCPoly>,
}

impl AlgebraHandle {
    /// Builds the presentation from the defining relations and completes it
    /// to `degree_bound`.
    pub fn build(m: usize, n: usize, degree_bound: usize) -> Result<AlgebraHandle, AlgebraError> {
        if m < 1 || n < 1 {
            return Err(AlgebraError::BadParams { m, n });
        }
        let pres = relations::chevalley_relations(m, n).complete(degree_bound)?;
        Ok(AlgebraHandle::from_presentation(m, n, pres))
    }

    /// Wraps an already-completed presentation (e.g. loaded from cache).
    pub fn from_presentation(m: usize, n: usize, pres: Presentation) -> AlgebraHandle {
        let square = Arc::new(pres.tensor_square());
        let pres = Arc::new(pres);
        let mut handle = AlgebraHandle {
            m,
            n,
            pres,
            square,
            root_plain: HashMap::new(),
            root_bar: HashMap::new(),
        };
        handle.fill_root_cache();
        handle
    }

    pub fn params(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Total rank m + n.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn square(&self) -> &Arc<Presentation> {
        &self.square
    }

    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        self.pres.reduce(p)
    }

    pub fn check_zero(&self, p: &NCPoly) -> Verdict {
        self.pres.check_zero(p)
    }

    /// `q_a` for this handle.
    pub fn q_a(&self, a: usize) -> Scalar {
        q_sub(a, self.m, self.n).expect("index in range")
    }

    /// The generators e_a, f_a, K_b^{±1} in a fixed order.
    pub fn generators(&self) -> Vec<(String, Letter)> {
        let t = self.size();
        let mut out = Vec::new();
        for a in 1..t {
            out.push((format!("e{a}"), e(a)));
        }
        for a in 1..t {
            out.push((format!("f{a}"), f(a)));
        }
        for b in 1..=t {
            out.push((format!("K{b}"), kp(b)));
            out.push((format!("K{b}^-1"), km(b)));
        }
        out
    }

    /// The defining relations, fresh from the construction (not the completed
    /// rule set); used for homomorphism checks.
    pub fn defining_relations(&self) -> Vec<NCPoly> {
        relations::chevalley_relations(self.m, self.n)
            .rules()
            .iter()
            .map(|r| r.as_poly())
            .collect()
    }

    /// `k_a = K_a K_{a+1}^{-1}` as an element.
    pub fn k(&self, a: usize) -> NCPoly {
        NCPoly::from_word(relations::k_word(a))
    }

    pub fn k_inv(&self, a: usize) -> NCPoly {
        NCPoly::from_word(relations::k_inv_word(a))
    }

    fn fill_root_cache(&mut self) {
        let t = self.size();
        // Fill by increasing distance so recursion hits the cache.
        for dist in 1..t {
            for a in 1..=t {
                for b in 1..=t {
                    if a.abs_diff(b) != dist {
                        continue;
                    }
                    let plain = self.expand_root(a, b, RootVariant::Plain);
                    self.root_plain.insert((a, b), plain);
                    let bar = self.expand_root(a, b, RootVariant::Bar);
                    self.root_bar.insert((a, b), bar);
                }
            }
        }
    }

    /// Recursive expansion with the intermediate index pinned adjacent to the
    /// second index: c = b-1 when a < b, c = b+1 when a > b.
    fn expand_root(&self, a: usize, b: usize, variant: RootVariant) -> NCPoly {
        if a.abs_diff(b) == 1 {
            let l = if a < b { e(a) } else { f(b) };
            return NCPoly::from_letter(l);
        }
        let cache = match variant {
            RootVariant::Plain => &self.root_plain,
            RootVariant::Bar => &self.root_bar,
        };
        let (c, tail): (usize, Letter) = if a < b { (b - 1, e(b - 1)) } else { (b + 1, f(b)) };
        let head = cache.get(&(a, c)).expect("smaller distance cached").clone();
        let qc = self.q_a(c);
        // def-E / def-E': the q_c twist flips between the plain and bar
        // families and between the raising and lowering directions.
        let coeff = match (variant, a < b) {
            (RootVariant::Plain, true) => qc.inv().unwrap(),
            (RootVariant::Plain, false) => qc,
            (RootVariant::Bar, true) => qc,
            (RootVariant::Bar, false) => qc.inv().unwrap(),
        };
        let tail = NCPoly::from_letter(tail);
        self.reduce(&(&head * &tail - (&tail * &head).scale(&coeff)))
    }

    /// The cached, fully reduced root vector E_ab or Ebar_ab.
    pub fn root_vector(&self, a: usize, b: usize, variant: RootVariant) -> Result<NCPoly, AlgebraError> {
        let t = self.size();
        if a == b || a < 1 || b < 1 || a > t || b > t {
            return Err(AlgebraError::BadRootIndices { max: t });
        }
        let cache = match variant {
            RootVariant::Plain => &self.root_plain,
            RootVariant::Bar => &self.root_bar,
        };
        Ok(cache.get(&(a, b)).expect("cache is total").clone())
    }

    /// Exponent of K_c inside K_2rho; branches on the parity of m + n.
    pub fn k2rho_exponent(&self, c: usize) -> i64 {
        let (m, n) = (self.m as i64, self.n as i64);
        let even = (self.m + self.n) % 2 == 0;
        let c_i = c as i64;
        if c <= self.m {
            let base = m - n + 1 - 2 * c_i;
            if even {
                base
            } else {
                base + 1
            }
        } else {
            let b = c_i - m;
            let base = m + n + 1 - 2 * b;
            if even {
                base
            } else {
                base - 1
            }
        }
    }

    /// `K_2rho` (or its inverse) as a sorted K-word; pure exponent
    /// arithmetic, no rewriting needed.
    pub fn k2rho(&self, inverse: bool) -> NCPoly {
        let mut w = Word::empty();
        for c in 1..=self.size() {
            let mut z = self.k2rho_exponent(c);
            if inverse {
                z = -z;
            }
            let l = if z >= 0 { kp(c) } else { km(c) };
            for _ in 0..z.unsigned_abs() {
                w.push(l);
            }
        }
        NCPoly::from_word(w)
    }

    /// Eigenvalue of pi(K_2rho) on the basis vector v_c (the weight used in
    /// the partial-trace construction): q_c^{k2rho_exponent(c)}.
    pub fn k2rho_weight(&self, c: usize) -> Scalar {
        crate::scalars::q_sub_pow(c, self.m, self.n, self.k2rho_exponent(c)).expect("index in range")
    }

    /// The quantum bracket q - q^{-1}.
    pub fn bracket(&self) -> Scalar {
        q_bracket()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::VerdictStatus;

    fn word(letters: impl IntoIterator<Item = Letter>) -> NCPoly {
        NCPoly::from_word(Word::from_letters(letters))
    }

    #[test]
    fn build_1_1_has_no_serre() {
        // Serre and degenerate-Serre relations do not exist at (1,1):
        // no initial relation involves three E letters or three F letters.
        let pres = relations::chevalley_relations(1, 1);
        for rule in pres.rules() {
            assert!(rule.lhs.len() <= 2, "unexpected rule {:?}", rule);
        }
    }

    #[test]
    fn zachos_conjugation() {
        // k_m e_m k_m^{-1} = -e_m, checked as k_m e_m + e_m k_m -> 0.
        let h = AlgebraHandle::build(1, 1, 6).unwrap();
        let p = &h.k(1) * &NCPoly::from_letter(e(1)) * &h.k_inv(1) + NCPoly::from_letter(e(1));
        assert_eq!(h.check_zero(&p).status, VerdictStatus::Verified);
    }

    #[test]
    fn degenerate_serre_count() {
        // At (2,1) the degenerate Serre relations do not exist (n = 1);
        // at (2,2) there are two of them (one for e, one for f).
        let p21 = relations::chevalley_relations(2, 1);
        let quartic = p21.rules().iter().filter(|r| r.lhs.len() >= 4).count();
        assert_eq!(quartic, 0);
        let p22 = relations::chevalley_relations(2, 2);
        let quartic = p22.rules().iter().filter(|r| r.lhs.len() >= 4).count();
        assert_eq!(quartic, 2);
    }

    #[test]
    fn root_vectors_at_distance_one() {
        let h = AlgebraHandle::build(2, 1, 8).unwrap();
        assert_eq!(h.root_vector(1, 2, RootVariant::Plain).unwrap(), NCPoly::from_letter(e(1)));
        assert_eq!(h.root_vector(2, 1, RootVariant::Bar).unwrap(), NCPoly::from_letter(f(1)));
    }

    #[test]
    fn root_vector_2_1_expansion() {
        // E_13 = e_1 e_2 - q_2^{-1} e_2 e_1 with q_2 = q at (2,1).
        let h = AlgebraHandle::build(2, 1, 8).unwrap();
        let got = h.root_vector(1, 3, RootVariant::Plain).unwrap();
        let expect = h.reduce(
            &(word([e(1), e(2)]) - word([e(2), e(1)]).scale(&Scalar::q_pow(-1))),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn bar_root_recursion_identity() {
        // Ebar_31 = E_31 + (q - q^{-1}) E_21 Ebar_32 at (2,1).
        let h = AlgebraHandle::build(2, 1, 8).unwrap();
        let lhs = h.root_vector(3, 1, RootVariant::Bar).unwrap();
        let rhs = h.root_vector(3, 1, RootVariant::Plain).unwrap()
            + (&h.root_vector(2, 1, RootVariant::Plain).unwrap()
                * &h.root_vector(3, 2, RootVariant::Bar).unwrap())
                .scale(&q_bracket());
        assert_eq!(h.check_zero(&(lhs - rhs)).status, VerdictStatus::Verified);
    }

    #[test]
    fn k2rho_1_1() {
        // K_2rho = K_1^{-1} K_2 at (1,1).
        let h = AlgebraHandle::build(1, 1, 6).unwrap();
        assert_eq!(h.k2rho(false), word([km(1), kp(2)]));
        assert_eq!(h.k2rho(true), word([kp(1), km(2)]));
    }

    #[test]
    fn k2rho_conjugates_em_to_minus() {
        // K_2rho e_m K_2rho^{-1} = -e_m for every handle.
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2)] {
            let h = AlgebraHandle::build(m, n, 2 * (m + n) + 6).unwrap();
            let p = &h.k2rho(false) * &NCPoly::from_letter(e(m)) * &h.k2rho(true)
                + NCPoly::from_letter(e(m));
            assert_eq!(h.check_zero(&p).status, VerdictStatus::Verified, "({m},{n})");
        }
    }
}
