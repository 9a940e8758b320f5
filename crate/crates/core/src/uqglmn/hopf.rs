//! Hopf structure maps of U_q(gl_{m,n}): coproduct, opposite coproduct,
//! counit, antipode and its inverse.
//!
//! The generator images of S^{-1} are not stated in the paper; the candidates
//! used here are derived from the triangular action of S and must pass the
//! explicit S∘S^{-1} = S^{-1}∘S = id check (see `verify_antipode_inverse`)
//! before anything downstream trusts them.

use super::relations::{k_inv_word, k_word};
use super::AlgebraHandle;
use crate::rewrite::{e, f, km, kp, Letter, LetterKind, NCPoly, Verdict, Word};
use crate::scalars::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HopfMap {
    Delta,
    DeltaPrime,
    Counit,
    Antipode,
    AntipodeInverse,
}

/// Image of an element under a Hopf map, tagged with its codomain.
#[derive(Clone, Debug)]
pub enum HopfImage {
    /// In the algebra itself (antipodes).
    Algebra(NCPoly),
    /// In the tensor square (coproducts).
    TensorSquare(NCPoly),
    /// In the ground field (counit).
    Scalar(Scalar),
}

impl HopfImage {
    pub fn algebra(self) -> NCPoly {
        match self {
            HopfImage::Algebra(p) => p,
            other => panic!("expected algebra-valued image, got {other:?}"),
        }
    }

    pub fn tensor_square(self) -> NCPoly {
        match self {
            HopfImage::TensorSquare(p) => p,
            other => panic!("expected tensor-square image, got {other:?}"),
        }
    }

    pub fn scalar(self) -> Scalar {
        match self {
            HopfImage::Scalar(s) => s,
            other => panic!("expected scalar image, got {other:?}"),
        }
    }
}

fn two_copy(first: &[Letter], second: &[Letter]) -> Word {
    let mut w = Word::empty();
    for &l in first {
        w.push(l.with_copy(1));
    }
    for &l in second {
        w.push(l.with_copy(2));
    }
    w
}

/// Delta on a generator letter, as an element of the tensor square.
pub fn delta_letter(l: Letter) -> NCPoly {
    match l.kind {
        // Delta(e_a) = e_a (x) k_a + 1 (x) e_a
        LetterKind::E(a) => {
            let a = a as usize;
            NCPoly::from_word(two_copy(&[e(a)], k_word(a).letters()))
                + NCPoly::from_word(two_copy(&[], &[e(a)]))
        }
        // Delta(f_a) = f_a (x) 1 + k_a^{-1} (x) f_a
        LetterKind::F(a) => {
            let a = a as usize;
            NCPoly::from_word(two_copy(&[f(a)], &[]))
                + NCPoly::from_word(two_copy(k_inv_word(a).letters(), &[f(a)]))
        }
        // Group-likes.
        LetterKind::KPlus(b) => NCPoly::from_word(two_copy(&[kp(b as usize)], &[kp(b as usize)])),
        LetterKind::KMinus(b) => NCPoly::from_word(two_copy(&[km(b as usize)], &[km(b as usize)])),
        _ => panic!("delta is defined on Chevalley letters only"),
    }
}

/// S on a generator letter.
pub fn antipode_letter(l: Letter) -> NCPoly {
    match l.kind {
        // S(e_a) = -e_a k_a^{-1}
        LetterKind::E(a) => {
            let a = a as usize;
            let mut w = Word::single(e(a));
            for &x in k_inv_word(a).letters() {
                w.push(x);
            }
            -NCPoly::from_word(w)
        }
        // S(f_a) = -k_a f_a
        LetterKind::F(a) => {
            let a = a as usize;
            let mut w = k_word(a);
            w.push(f(a));
            -NCPoly::from_word(w)
        }
        LetterKind::KPlus(b) => NCPoly::from_letter(km(b as usize)),
        LetterKind::KMinus(b) => NCPoly::from_letter(kp(b as usize)),
        _ => panic!("antipode is defined on Chevalley letters only"),
    }
}

/// Candidate S^{-1} on a generator letter: S^{-1}(e_a) = -k_a^{-1} e_a,
/// S^{-1}(f_a) = -f_a k_a, S^{-1}(K_b) = K_b^{-1}.
pub fn antipode_inverse_letter(l: Letter) -> NCPoly {
    match l.kind {
        LetterKind::E(a) => {
            let a = a as usize;
            let mut w = k_inv_word(a);
            w.push(e(a));
            -NCPoly::from_word(w)
        }
        LetterKind::F(a) => {
            let a = a as usize;
            let mut w = Word::single(f(a));
            for &x in k_word(a).letters() {
                w.push(x);
            }
            -NCPoly::from_word(w)
        }
        LetterKind::KPlus(b) => NCPoly::from_letter(km(b as usize)),
        LetterKind::KMinus(b) => NCPoly::from_letter(kp(b as usize)),
        _ => panic!("antipode is defined on Chevalley letters only"),
    }
}

/// Extends a generator map multiplicatively (or anti-multiplicatively),
/// reducing in the target after every factor.
pub fn extend_hom(
    u: &NCPoly,
    target: &crate::rewrite::Presentation,
    image: &dyn Fn(Letter) -> NCPoly,
    anti: bool,
) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in u.terms() {
        let mut acc = NCPoly::one();
        let letters: Vec<Letter> = if anti {
            w.letters().iter().rev().copied().collect()
        } else {
            w.letters().to_vec()
        };
        for l in letters {
            acc = target.reduce(&(&acc * &image(l)));
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// Applies a Hopf structure map to an element over the handle's alphabet.
pub fn hopf(map: HopfMap, u: &NCPoly, handle: &AlgebraHandle) -> HopfImage {
    match map {
        HopfMap::Delta => {
            HopfImage::TensorSquare(extend_hom(u, handle.square(), &delta_letter, false))
        }
        HopfMap::DeltaPrime => {
            let d = extend_hom(u, handle.square(), &delta_letter, false);
            HopfImage::TensorSquare(flip_tensor(&d, handle))
        }
        HopfMap::Counit => {
            let mut total = Scalar::zero();
            for (w, c) in u.terms() {
                let kills = w
                    .letters()
                    .iter()
                    .any(|l| matches!(l.kind, LetterKind::E(_) | LetterKind::F(_)));
                if !kills {
                    total = total + c.clone();
                }
            }
            HopfImage::Scalar(total)
        }
        HopfMap::Antipode => {
            HopfImage::Algebra(extend_hom(u, handle.presentation(), &antipode_letter, true))
        }
        HopfMap::AntipodeInverse => HopfImage::Algebra(extend_hom(
            u,
            handle.presentation(),
            &antipode_inverse_letter,
            true,
        )),
    }
}

/// The tensor flip sigma(x (x) y) = y (x) x on a reduced tensor-square
/// element. Normal words factor as (copy-1 part)(copy-2 part), so the flip is
/// a tag swap plus reassembly.
pub fn flip_tensor(p: &NCPoly, handle: &AlgebraHandle) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let split = w.letters().iter().position(|l| l.copy == 2).unwrap_or(w.len());
        let first = w.slice(0, split).retag_copy(2);
        let second = w.slice(split, w.len()).retag_copy(1);
        out.add_term(second.concat(&first), c.clone());
    }
    handle.square().reduce(&out)
}

/// Checks S∘S^{-1} = S^{-1}∘S = id on every generator.
pub fn verify_antipode_inverse(handle: &AlgebraHandle) -> Vec<(String, Verdict)> {
    let mut out = Vec::new();
    for (name, l) in handle.generators() {
        let g = NCPoly::from_letter(l);
        let si = hopf(HopfMap::AntipodeInverse, &g, handle).algebra();
        let s_si = hopf(HopfMap::Antipode, &si, handle).algebra();
        out.push((
            format!("S.S^-1[{name}]"),
            handle.check_zero(&(s_si - g.clone())),
        ));
        let s = hopf(HopfMap::Antipode, &g, handle).algebra();
        let si_s = hopf(HopfMap::AntipodeInverse, &s, handle).algebra();
        out.push((format!("S^-1.S[{name}]"), handle.check_zero(&(si_s - g))));
    }
    out
}

/// S^2(u) = K_2rho u K_2rho^{-1} on generators.
pub fn verify_s_squared(handle: &AlgebraHandle) -> Vec<(String, Verdict)> {
    let k2 = handle.k2rho(false);
    let k2i = handle.k2rho(true);
    handle
        .generators()
        .into_iter()
        .map(|(name, l)| {
            let g = NCPoly::from_letter(l);
            let s2 = hopf(
                HopfMap::Antipode,
                &hopf(HopfMap::Antipode, &g, handle).algebra(),
                handle,
            )
            .algebra();
            let conj = &(&k2 * &g) * &k2i;
            (format!("S^2[{name}]"), handle.check_zero(&(s2 - conj)))
        })
        .collect()
}

/// The antipode axiom m∘(S⊗id)∘Delta(g) = eps(g)·1 on generators, together
/// with its (id⊗S) mirror.
pub fn verify_antipode_axiom(handle: &AlgebraHandle) -> Vec<(String, Verdict)> {
    let mut out = Vec::new();
    for (name, l) in handle.generators() {
        let g = NCPoly::from_letter(l);
        let d = hopf(HopfMap::Delta, &g, handle).tensor_square();
        let eps = hopf(HopfMap::Counit, &g, handle).scalar();
        for (label, s_on_first) in [("S(x)id", true), ("id(x)S", false)] {
            let mut sum = NCPoly::zero();
            for (w, c) in d.terms() {
                let split = w.letters().iter().position(|x| x.copy == 2).unwrap_or(w.len());
                let first = w.slice(0, split);
                let second = w.slice(split, w.len()).retag_copy(1);
                let (fa, fb) = if s_on_first {
                    (
                        hopf(HopfMap::Antipode, &NCPoly::from_word(first), handle).algebra(),
                        NCPoly::from_word(second),
                    )
                } else {
                    (
                        NCPoly::from_word(first),
                        hopf(HopfMap::Antipode, &NCPoly::from_word(second), handle).algebra(),
                    )
                };
                sum.add_scaled(&(&fa * &fb), c);
            }
            let expected = NCPoly::from_scalar(eps.clone());
            out.push((
                format!("antipode-axiom[{label},{name}]"),
                handle.check_zero(&(sum - expected)),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::VerdictStatus;

    fn handle11() -> AlgebraHandle {
        AlgebraHandle::build(1, 1, 8).unwrap()
    }

    #[test]
    fn counit_values() {
        let h = handle11();
        assert!(hopf(HopfMap::Counit, &NCPoly::from_letter(kp(1)), &h)
            .scalar()
            .is_one());
        assert!(hopf(HopfMap::Counit, &NCPoly::from_letter(e(1)), &h)
            .scalar()
            .is_zero());
    }

    #[test]
    fn antipode_on_k() {
        let h = handle11();
        let img = hopf(HopfMap::Antipode, &NCPoly::from_letter(kp(2)), &h).algebra();
        assert_eq!(img, NCPoly::from_letter(km(2)));
    }

    #[test]
    fn antipode_axiom_on_generators() {
        let h = handle11();
        for (name, v) in verify_antipode_axiom(&h) {
            assert_eq!(v.status, VerdictStatus::Verified, "{name}");
        }
    }

    #[test]
    fn antipode_inverse_round_trips() {
        for (m, n) in [(1usize, 1usize), (2, 1)] {
            let h = AlgebraHandle::build(m, n, 2 * (m + n) + 6).unwrap();
            for (name, v) in verify_antipode_inverse(&h) {
                assert_eq!(v.status, VerdictStatus::Verified, "({m},{n}) {name}");
            }
        }
    }

    #[test]
    fn s_squared_is_k2rho_conjugation() {
        let h = handle11();
        for (name, v) in verify_s_squared(&h) {
            assert_eq!(v.status, VerdictStatus::Verified, "{name}");
        }
    }

    #[test]
    fn delta_is_algebra_map_on_relations() {
        let h = handle11();
        for rel in h.defining_relations() {
            let img = hopf(HopfMap::Delta, &rel, &h).tensor_square();
            assert!(
                h.square().reduce(&img).is_zero(),
                "Delta failed on {rel:?}"
            );
        }
    }

    #[test]
    fn delta_prime_flips() {
        let h = handle11();
        // Delta'(e) = k (x) e + e (x) 1
        let d = hopf(HopfMap::DeltaPrime, &NCPoly::from_letter(e(1)), &h).tensor_square();
        let expect = NCPoly::from_word(two_copy(k_word(1).letters(), &[e(1)]))
            + NCPoly::from_word(two_copy(&[e(1)], &[]));
        assert_eq!(d, h.square().reduce(&expect));
    }

    #[test]
    fn coassociativity_on_generators() {
        let h = handle11();
        let triple = h.presentation().tensor_power(3);
        for (name, l) in h.generators() {
            let g = NCPoly::from_letter(l);
            let d = hopf(HopfMap::Delta, &g, &h).tensor_square();
            // (Delta (x) id) and (id (x) Delta) into copies {1,2,3}.
            let mut lhs = NCPoly::zero();
            let mut rhs = NCPoly::zero();
            for (w, c) in d.terms() {
                let split = w.letters().iter().position(|x| x.copy == 2).unwrap_or(w.len());
                let first = w.slice(0, split);
                let second = w.slice(split, w.len()).retag_copy(1);
                // Delta on the first slot, then shift its copy-2 part to slot 2, second part to slot 3.
                let d_first = hopf(HopfMap::Delta, &NCPoly::from_word(first.clone()), &h).tensor_square();
                for (w2, c2) in d_first.terms() {
                    let promoted = Word::from_letters(
                        w2.letters()
                            .iter()
                            .map(|x| x.with_copy(x.copy))
                            .chain(second.letters().iter().map(|x| x.with_copy(3))),
                    );
                    lhs.add_term(promoted, c2.clone() * c.clone());
                }
                // Delta on the second slot, shifted to copies {2,3}.
                let d_second = hopf(HopfMap::Delta, &NCPoly::from_word(second.clone()), &h).tensor_square();
                for (w2, c2) in d_second.terms() {
                    let promoted = Word::from_letters(
                        first
                            .letters()
                            .iter()
                            .copied()
                            .chain(w2.letters().iter().map(|x| x.with_copy(x.copy + 1))),
                    );
                    rhs.add_term(promoted, c2.clone() * c.clone());
                }
            }
            assert!(
                triple.reduce(&(lhs - rhs)).is_zero(),
                "coassociativity failed on {name}"
            );
        }
    }
}
