//! The defining relations of U_q(gl_{m,n}) over Chevalley generators.

use crate::rewrite::{e, f, km, kp, Letter, NCPoly, Presentation, Word};
use crate::scalars::{q_bracket, q_sub, q_sub_pow, Scalar};

/// The Chevalley alphabet F(1..N-1), K∓(1..N), E(1..N-1) in precedence order.
pub fn chevalley_alphabet(m: usize, n: usize) -> Vec<Letter> {
    let t = m + n;
    let mut alphabet = Vec::new();
    for a in 1..t {
        alphabet.push(f(a));
    }
    for b in 1..=t {
        alphabet.push(km(b));
        alphabet.push(kp(b));
    }
    for a in 1..t {
        alphabet.push(e(a));
    }
    alphabet
}

/// `k_a = K_a K_{a+1}^{-1}` as a normal-form word.
pub fn k_word(a: usize) -> Word {
    Word::from_letters([kp(a), km(a + 1)])
}

/// `k_a^{-1} = K_a^{-1} K_{a+1}`.
pub fn k_inv_word(a: usize) -> Word {
    Word::from_letters([km(a), kp(a + 1)])
}

fn word(letters: impl IntoIterator<Item = Letter>) -> NCPoly {
    NCPoly::from_word(Word::from_letters(letters))
}

/// `E_{m-1,m+2}` expanded into Chevalley words exactly as displayed with the
/// defining relations (intermediate indices m, then m+1). Here q_m = q and
/// q_{m+1} = p = -q^{-1}.
fn degenerate_e_word(m: usize) -> NCPoly {
    let qm_inv = Scalar::q_pow(-1);
    let qm1_inv = Scalar::q_monomial(-1, 1); // p^{-1} = -q
    let e_upper = word([e(m - 1), e(m)]) - word([e(m), e(m - 1)]).scale(&qm_inv);
    let right = &e_upper * &NCPoly::from_letter(e(m + 1));
    let left = &NCPoly::from_letter(e(m + 1)) * &e_upper;
    right - left.scale(&qm1_inv)
}

/// `E_{m+2,m-1}` expanded into Chevalley words (intermediates m, then m+1).
fn degenerate_f_word(m: usize) -> NCPoly {
    let qm = Scalar::q();
    let qm1 = Scalar::q_monomial(-1, -1); // p
    let f_lower = word([f(m), f(m - 1)]) - word([f(m - 1), f(m)]).scale(&qm);
    let left = &NCPoly::from_letter(f(m + 1)) * &f_lower;
    let right = &f_lower * &NCPoly::from_letter(f(m + 1));
    left - right.scale(&qm1)
}

/// All defining relations of U_q(gl_{m,n}) as elements to be rewritten to
/// zero, oriented and inter-reduced into a presentation (not yet completed).
pub fn chevalley_relations(m: usize, n: usize) -> Presentation {
    let t = m + n;
    let mut rels: Vec<NCPoly> = Vec::new();

    // K_a K_a^{-1} = K_a^{-1} K_a = 1.
    for b in 1..=t {
        rels.push(word([kp(b), km(b)]) - NCPoly::one());
        rels.push(word([km(b), kp(b)]) - NCPoly::one());
    }
    // K^{±1} letters with distinct indices commute.
    for b1 in 1..t {
        for b2 in b1 + 1..=t {
            for x in [kp(b1), km(b1)] {
                for y in [kp(b2), km(b2)] {
                    rels.push(word([x, y]) - word([y, x]));
                }
            }
        }
    }
    // K_a e_b K_a^{-1} = q_a^{d_ab - d_{a,b+1}} e_b and the f counterpart.
    for a in 1..=t {
        for b in 1..t {
            let eps = i64::from(a == b) - i64::from(a == b + 1);
            for s in [1i64, -1] {
                let k = if s == 1 { kp(a) } else { km(a) };
                // e_b K_a^s = q_a^{-s.eps} K_a^s e_b and K_a^s f_b = q_a^{-s.eps} f_b K_a^s.
                let c = q_sub_pow(a, m, n, -s * eps).unwrap();
                rels.push(word([e(b), k]) - word([k, e(b)]).scale(&c));
                rels.push(word([k, f(b)]) - word([f(b), k]).scale(&c));
            }
        }
    }
    // e_a f_b - f_b e_a = d_ab (k_a - k_a^{-1})/(q_a - q_a^{-1}).
    let bracket_inv = q_bracket().inv().unwrap();
    for a in 1..t {
        for b in 1..t {
            let mut rel = word([e(a), f(b)]) - word([f(b), e(a)]);
            if a == b {
                rel = rel
                    - (NCPoly::from_word(k_word(a)) - NCPoly::from_word(k_inv_word(a)))
                        .scale(&bracket_inv);
            }
            rels.push(rel);
        }
    }
    // Locality for |a-b| > 1.
    for b in 1..t {
        for a in b + 2..t {
            rels.push(word([e(a), e(b)]) - word([e(b), e(a)]));
            rels.push(word([f(a), f(b)]) - word([f(b), f(a)]));
        }
    }
    // Serre relations away from the degenerate node m.
    for a in 1..t {
        if a == m {
            continue;
        }
        let qa = q_sub(a, m, n).unwrap();
        let coeff = qa.clone() + qa.inv().unwrap();
        for b in [a.wrapping_sub(1), a + 1] {
            if b < 1 || b >= t {
                continue;
            }
            rels.push(
                word([e(a), e(a), e(b)]) - word([e(a), e(b), e(a)]).scale(&coeff)
                    + word([e(b), e(a), e(a)]),
            );
            rels.push(
                word([f(a), f(a), f(b)]) - word([f(a), f(b), f(a)]).scale(&coeff)
                    + word([f(b), f(a), f(a)]),
            );
        }
    }
    // The Zachos node: e_m^2 = f_m^2 = 0.
    rels.push(word([e(m), e(m)]));
    rels.push(word([f(m), f(m)]));
    // Degenerate Serre relations; they do not exist when m = 1 or n = 1.
    if m >= 2 && n >= 2 {
        let x = degenerate_e_word(m);
        rels.push(&NCPoly::from_letter(e(m)) * &x - &x * &NCPoly::from_letter(e(m)));
        let y = degenerate_f_word(m);
        rels.push(&NCPoly::from_letter(f(m)) * &y - &y * &NCPoly::from_letter(f(m)));
    }

    Presentation::new((m, n), chevalley_alphabet(m, n), rels)
}
