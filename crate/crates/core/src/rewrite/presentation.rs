//! Oriented rewriting systems over the free algebra, with reduction to
//! normal form and degree-bounded diamond-lemma completion.
//!
//! A [`Presentation`] owns an alphabet and an inter-reduced rule set oriented
//! by the deglex order. `complete` resolves all overlap ambiguities up to a
//! degree bound, which certifies that reduction of any element of that degree
//! is a projection onto normal forms; `check_zero` turns that certificate
//! into sound `Failed` verdicts.

use super::letter::{Letter, Word};
use super::ncpoly::NCPoly;
use crate::scalars::Scalar;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

/// Hard cap on reduction steps; a trip here means a broken rule orientation.
const STEP_CAP: u64 = 500_000_000;

/// Default cap on the rule count during completion.
pub const DEFAULT_RULE_CAP: usize = 50_000;

#[derive(Debug, Error, Clone)]
pub enum EngineError {
    #[error("rule count exceeded cap {cap} while completing at degree {degree}")]
    RuleCapExceeded { cap: usize, degree: usize },
    #[error("degree bound {bound} is below the maximal rule degree {max_rule}")]
    BoundTooSmall { bound: usize, max_rule: usize },
}

/// An oriented rule `lhs -> rhs` with every rhs monomial strictly below lhs.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl RewriteRule {
    /// The rule as the element `lhs - rhs` it rewrites to zero.
    pub fn as_poly(&self) -> NCPoly {
        NCPoly::from_word(self.lhs.clone()) - self.rhs.clone()
    }
}

impl fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// Orients `p = 0` into a rule by its deglex-leading monomial.
pub fn orient(p: &NCPoly) -> Option<RewriteRule> {
    let (lead, c) = p.leading()?;
    let lead = lead.clone();
    let cinv = c.inv().expect("leading coefficient is nonzero");
    let mut rhs = NCPoly::zero();
    for (w, a) in p.terms() {
        if w == &lead {
            continue;
        }
        rhs.add_term(w.clone(), -(a.clone() * cinv.clone()));
    }
    Some(RewriteRule { lhs: lead, rhs })
}

/// Outcome of an identity check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum VerdictStatus {
    Verified,
    Failed,
    Undecided,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// Nonzero normal form witnessing a genuine failure.
    pub witness: Option<NCPoly>,
    /// Completion degree that would be needed to decide.
    pub needed_degree: usize,
}

impl Verdict {
    pub fn verified() -> Verdict {
        Verdict {
            status: VerdictStatus::Verified,
            witness: None,
            needed_degree: 0,
        }
    }

    pub fn failed(witness: NCPoly) -> Verdict {
        Verdict {
            status: VerdictStatus::Failed,
            witness: Some(witness),
            needed_degree: 0,
        }
    }

    pub fn undecided(needed: usize) -> Verdict {
        Verdict {
            status: VerdictStatus::Undecided,
            witness: None,
            needed_degree: needed,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == VerdictStatus::Verified
    }

    /// Combines verdicts, keeping the worst status (Failed > Undecided > Verified).
    pub fn combine(self, other: Verdict) -> Verdict {
        use VerdictStatus::*;
        match (self.status, other.status) {
            (Failed, _) => self,
            (_, Failed) => other,
            (Undecided, Undecided) => Verdict::undecided(self.needed_degree.max(other.needed_degree)),
            (Undecided, _) => self,
            (_, Undecided) => other,
            (Verified, Verified) => self,
        }
    }
}

/// An alphabet plus an oriented, inter-reduced rule set with a certified
/// completion degree.
#[derive(Clone)]
pub struct Presentation {
    alphabet: Vec<Letter>,
    rules: Vec<RewriteRule>,
    /// First letter of lhs -> rule ids, longest lhs first.
    index: HashMap<Letter, Vec<usize>>,
    completion_degree: usize,
    params: (usize, usize),
    copies: u8,
    rule_cap: usize,
}

impl Presentation {
    /// Builds an inter-reduced (but not yet completed) presentation.
    pub fn new(params: (usize, usize), alphabet: Vec<Letter>, relations: Vec<NCPoly>) -> Presentation {
        let mut pres = Presentation {
            alphabet,
            rules: Vec::new(),
            index: HashMap::new(),
            completion_degree: 0,
            params,
            copies: 1,
            rule_cap: DEFAULT_RULE_CAP,
        };
        for rel in relations {
            let reduced = pres.reduce(&rel);
            if let Some(rule) = orient(&reduced) {
                pres.rules.push(rule);
                pres.rebuild_index();
            }
        }
        pres.inter_reduce();
        pres
    }

    pub fn params(&self) -> (usize, usize) {
        self.params
    }

    pub fn copies(&self) -> u8 {
        self.copies
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn completion_degree(&self) -> usize {
        self.completion_degree
    }

    pub fn with_rule_cap(mut self, cap: usize) -> Presentation {
        self.rule_cap = cap;
        self
    }

    pub(crate) fn from_parts(
        params: (usize, usize),
        alphabet: Vec<Letter>,
        rules: Vec<RewriteRule>,
        completion_degree: usize,
        copies: u8,
    ) -> Presentation {
        let mut pres = Presentation {
            alphabet,
            rules,
            index: HashMap::new(),
            completion_degree,
            params,
            copies,
            rule_cap: DEFAULT_RULE_CAP,
        };
        pres.rebuild_index();
        pres
    }

    fn rebuild_index(&mut self) {
        let mut index: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (i, rule) in self.rules.iter().enumerate() {
            index.entry(rule.lhs.letters()[0]).or_default().push(i);
        }
        for ids in index.values_mut() {
            ids.sort_by_key(|&i| std::cmp::Reverse(self.rules[i].lhs.len()));
        }
        self.index = index;
    }

    /// Leftmost redex with the longest matching lhs at that position.
    fn find_redex(&self, w: &Word, skip: Option<usize>) -> Option<(usize, usize)> {
        let letters = w.letters();
        for pos in 0..letters.len() {
            if let Some(ids) = self.index.get(&letters[pos]) {
                for &rid in ids {
                    if Some(rid) == skip {
                        continue;
                    }
                    let lhs = self.rules[rid].lhs.letters();
                    if lhs.len() <= letters.len() - pos && &letters[pos..pos + lhs.len()] == lhs {
                        return Some((pos, rid));
                    }
                }
            }
        }
        None
    }

    /// Reduces to normal form. Terminates because every step strictly
    /// decreases the deglex multiset of monomials.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        self.reduce_skipping(p, None)
    }

    fn reduce_skipping(&self, p: &NCPoly, skip: Option<usize>) -> NCPoly {
        let mut pending: BTreeMap<Word, Scalar> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NCPoly::zero();
        let mut steps: u64 = 0;
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w, skip) {
                None => out.add_term(w, c),
                Some((pos, rid)) => {
                    steps += 1;
                    assert!(steps < STEP_CAP, "reduction step cap hit; rule orientation is broken");
                    let rule = &self.rules[rid];
                    for (t, rc) in rule.rhs.terms() {
                        let nw = w.splice(pos, rule.lhs.len(), t);
                        let nc = c.clone() * rc.clone();
                        if nc.is_zero() {
                            continue;
                        }
                        match pending.remove(&nw) {
                            None => {
                                pending.insert(nw, nc);
                            }
                            Some(old) => {
                                let sum = old + nc;
                                if !sum.is_zero() {
                                    pending.insert(nw, sum);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn reduce_word(&self, w: &Word) -> NCPoly {
        self.reduce(&NCPoly::from_word(w.clone()))
    }

    /// Whether `w` is already in normal form.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w, None).is_none()
    }

    /// Sound zero test: `Failed` is only reported when the certificate covers
    /// the degree of `p`, otherwise `Undecided` with the needed degree.
    pub fn check_zero(&self, p: &NCPoly) -> Verdict {
        let deg = p.degree();
        let nf = self.reduce(p);
        if nf.is_zero() {
            Verdict::verified()
        } else if deg <= self.completion_degree {
            Verdict::failed(nf)
        } else {
            Verdict::undecided(deg)
        }
    }

    /// Inter-reduction: every rule, read as `lhs - rhs`, is in normal form
    /// with respect to all other rules.
    fn inter_reduce(&mut self) {
        loop {
            let mut changed = false;
            let mut i = 0;
            while i < self.rules.len() {
                let p = self.rules[i].as_poly();
                let reduced = self.reduce_skipping(&p, Some(i));
                if reduced != p {
                    changed = true;
                    self.rules.remove(i);
                    self.rebuild_index();
                    let renorm = self.reduce(&reduced);
                    if let Some(rule) = orient(&renorm) {
                        self.rules.push(rule);
                        self.rebuild_index();
                    }
                } else {
                    i += 1;
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// All proper overlap ambiguities between rule lhs's, with the overlap
    /// word bounded by `bound`. Returns `(i, j, k)`: a length-`k` suffix of
    /// `lhs_i` equals a prefix of `lhs_j`.
    fn overlaps(&self, bound: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, ri) in self.rules.iter().enumerate() {
            let u = ri.lhs.letters();
            for (j, rj) in self.rules.iter().enumerate() {
                let v = rj.lhs.letters();
                let kmax = u.len().min(v.len()) - 1;
                for k in 1..=kmax {
                    if u.len() + v.len() - k > bound {
                        continue;
                    }
                    if u[u.len() - k..] == v[..k] {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// S-polynomial of one overlap: the difference of the two one-step
    /// reductions of the overlap word, fully normalized.
    fn s_poly(&self, i: usize, j: usize, k: usize) -> NCPoly {
        let ri = &self.rules[i];
        let rj = &self.rules[j];
        let tail = rj.lhs.slice(k, rj.lhs.len());
        let head = ri.lhs.slice(0, ri.lhs.len() - k);
        // Path 1: rewrite the leading copy of lhs_i, then normalize.
        let t1 = self.reduce(&(&ri.rhs * &NCPoly::from_word(tail)));
        // Path 2: rewrite the trailing copy of lhs_j, then normalize.
        let t2 = self.reduce(&(&NCPoly::from_word(head) * &rj.rhs));
        t1 - t2
    }

    /// Degree-bounded completion. All overlap ambiguities with overlap word
    /// of degree <= `bound` reduce to zero afterwards; terminates with the
    /// final clean scan as the confluence certificate.
    pub fn complete(mut self, bound: usize) -> Result<Presentation, EngineError> {
        let max_rule = self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        if bound < max_rule {
            return Err(EngineError::BoundTooSmall { bound, max_rule });
        }
        if self.rules.len() > self.rule_cap {
            return Err(EngineError::RuleCapExceeded {
                cap: self.rule_cap,
                degree: bound,
            });
        }
        loop {
            let overlaps = self.overlaps(bound);
            let fresh: Vec<NCPoly> = overlaps
                .par_iter()
                .map(|&(i, j, k)| self.s_poly(i, j, k))
                .filter(|p| !p.is_zero())
                .collect();
            if fresh.is_empty() {
                break;
            }
            for p in fresh {
                let reduced = self.reduce(&p);
                if let Some(rule) = orient(&reduced) {
                    self.rules.push(rule);
                    self.rebuild_index();
                    self.inter_reduce();
                    if self.rules.len() > self.rule_cap {
                        return Err(EngineError::RuleCapExceeded {
                            cap: self.rule_cap,
                            degree: bound,
                        });
                    }
                }
            }
        }
        self.completion_degree = bound;
        Ok(self)
    }

    /// Re-checks the confluence certificate: every overlap ambiguity with
    /// word degree <= the completion degree resolves to zero. Returns the
    /// offending overlap words on failure.
    pub fn certify(&self) -> Result<usize, Vec<Word>> {
        let overlaps = self.overlaps(self.completion_degree);
        let bad: Vec<Word> = overlaps
            .par_iter()
            .filter(|&&(i, j, k)| !self.s_poly(i, j, k).is_zero())
            .map(|&(i, j, _)| {
                let u = &self.rules[i].lhs;
                let v = &self.rules[j].lhs;
                u.concat(v)
            })
            .collect();
        if bad.is_empty() {
            Ok(overlaps.len())
        } else {
            Err(bad)
        }
    }

    /// Tensor power: `k` tagged copies of the alphabet, all per-copy rules,
    /// and slot-commutation rules letter_j·letter_i -> letter_i·letter_j for
    /// copies i < j. Cross overlaps resolve at every degree, so the
    /// completion certificate carries over from the base presentation.
    pub fn tensor_power(&self, k: u8) -> Presentation {
        assert!(self.copies == 1, "tensor power of a single-copy presentation only");
        let mut alphabet = Vec::new();
        for copy in 1..=k {
            alphabet.extend(self.alphabet.iter().map(|l| l.with_copy(copy)));
        }
        let mut rules = Vec::new();
        for copy in 1..=k {
            for rule in &self.rules {
                rules.push(RewriteRule {
                    lhs: rule.lhs.retag_copy(copy),
                    rhs: rule.rhs.map_words(|w| w.retag_copy(copy)),
                });
            }
        }
        for hi in 2..=k {
            for lo in 1..hi {
                for &x in &self.alphabet {
                    for &y in &self.alphabet {
                        let a = x.with_copy(hi);
                        let b = y.with_copy(lo);
                        rules.push(RewriteRule {
                            lhs: Word::from_letters([a, b]),
                            rhs: NCPoly::from_word(Word::from_letters([b, a])),
                        });
                    }
                }
            }
        }
        Presentation::from_parts(self.params, alphabet, rules, self.completion_degree, k)
    }

    /// Tensor square, the coproduct codomain.
    pub fn tensor_square(&self) -> Presentation {
        self.tensor_power(2)
    }

    /// All normal-form words of degree <= `max_deg` (exhaustive; test-sized
    /// alphabets only).
    pub fn enumerate_normal_words(&self, max_deg: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_deg {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &self.alphabet {
                    let mut nw = w.clone();
                    nw.push(l);
                    // Only the new suffix can introduce a redex.
                    if self.is_normal(&nw) {
                        next.push(nw);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Presentation(params={:?}, copies={}, rules={}, completion_degree={})",
            self.params,
            self.copies,
            self.rules.len(),
            self.completion_degree
        )?;
        for r in &self.rules {
            writeln!(f, "  {:?}", r)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::letter::{e, f, km, kp};
    use crate::scalars::{q_bracket, Scalar};

    /// The Zachos relations for (1,1): K inverses/commutation, K-e/K-f
    /// conjugations, the e-f commutator, and e^2 = f^2 = 0.
    fn zachos() -> Presentation {
        crate::uqglmn::relations::chevalley_relations(1, 1)
    }

    #[test]
    fn orient_picks_leading() {
        let p = NCPoly::from_word(Word::from_letters([e(1), f(1)]))
            - NCPoly::from_word(Word::from_letters([f(1), e(1)]));
        let rule = orient(&p).unwrap();
        assert_eq!(rule.lhs, Word::from_letters([e(1), f(1)]));
    }

    #[test]
    fn reduce_inverse_pair() {
        let pres = Presentation::new(
            (1, 1),
            vec![kp(1), km(1)],
            vec![
                NCPoly::from_word(Word::from_letters([kp(1), km(1)])) - NCPoly::one(),
                NCPoly::from_word(Word::from_letters([km(1), kp(1)])) - NCPoly::one(),
            ],
        );
        let w = Word::from_letters([kp(1), kp(1), km(1), km(1)]);
        assert_eq!(pres.reduce_word(&w), NCPoly::one());
    }

    #[test]
    fn zachos_normal_forms() {
        let pres = zachos().complete(8).unwrap();
        // e^2 -> 0
        assert!(pres.reduce_word(&Word::from_letters([e(1), e(1)])).is_zero());
        // K1 K1^-1 -> 1
        assert_eq!(pres.reduce_word(&Word::from_letters([kp(1), km(1)])), NCPoly::one());
        // ef - fe -> (k - k^-1)/(q_1 - q_1^-1)
        let comm = NCPoly::from_word(Word::from_letters([e(1), f(1)]))
            - NCPoly::from_word(Word::from_letters([f(1), e(1)]));
        let bracket_inv = q_bracket().inv().unwrap();
        let expected = NCPoly::from_term(Word::from_letters([kp(1), km(2)]), bracket_inv.clone())
            - NCPoly::from_term(Word::from_letters([km(1), kp(2)]), bracket_inv);
        assert_eq!(pres.reduce(&comm), expected);
    }

    #[test]
    fn completion_is_idempotent_at_fixed_degree() {
        let a = zachos().complete(6).unwrap();
        let b = a.clone().complete(6).unwrap();
        assert_eq!(a.rules().len(), b.rules().len());
        for (x, y) in a.rules().iter().zip(b.rules()) {
            assert_eq!(x.lhs, y.lhs);
            assert_eq!(x.rhs, y.rhs);
        }
    }

    #[test]
    fn self_overlap_of_nilpotent_resolves() {
        // e^2 -> 0 overlapping itself on e^3 reduces to 0 both ways.
        let pres = Presentation::new((1, 1), vec![e(1)], vec![NCPoly::from_word(Word::from_letters([e(1), e(1)]))]);
        let done = pres.complete(6).unwrap();
        assert_eq!(done.rules().len(), 1);
        assert!(done.certify().is_ok());
    }

    #[test]
    fn verdict_semantics() {
        let pres = zachos().complete(6).unwrap();
        // A generator is nonzero: Failed with itself as witness.
        let v = pres.check_zero(&NCPoly::from_letter(e(1)));
        assert_eq!(v.status, VerdictStatus::Failed);
        assert_eq!(v.witness.unwrap(), NCPoly::from_letter(e(1)));
        // Beyond the certificate: Undecided, with the needed degree reported.
        let mut w = Word::empty();
        for _ in 0..7 {
            w.push(kp(1));
        }
        let v = pres.check_zero(&NCPoly::from_word(w));
        assert_eq!(v.status, VerdictStatus::Undecided);
        assert_eq!(v.needed_degree, 7);
        // Witness soundness: reduce(p - witness) = 0.
        let p = NCPoly::from_letter(e(1)).scale(&q_bracket())
            + NCPoly::from_word(Word::from_letters([kp(1), km(1)]));
        let v = pres.check_zero(&p);
        let witness = v.witness.unwrap();
        assert!(pres.reduce(&(p - witness)).is_zero());
    }

    #[test]
    fn tensor_square_slots_commute() {
        let pres = zachos().complete(6).unwrap();
        let sq = pres.tensor_square();
        assert_eq!(sq.completion_degree(), 6);
        // (x (x) 1)(1 (x) y) = (1 (x) y)(x (x) 1) for all generator letters.
        for &x in pres.alphabet() {
            for &y in pres.alphabet() {
                let a = Word::from_letters([x.with_copy(2), y.with_copy(1)]);
                let b = Word::from_letters([y.with_copy(1), x.with_copy(2)]);
                let diff = NCPoly::from_word(a) - NCPoly::from_word(b);
                assert!(sq.reduce(&diff).is_zero());
            }
        }
        assert!(sq.certify().is_ok());
    }

    #[test]
    fn rule_cap_errors_loudly() {
        let pres = zachos().with_rule_cap(3);
        match pres.complete(6) {
            Err(EngineError::RuleCapExceeded { cap: 3, degree: 6 }) => {}
            other => panic!("expected rule cap error, got {:?}", other.map(|p| p.rules().len())),
        }
    }

    #[test]
    fn scaled_relations_do_not_duplicate() {
        let rel = NCPoly::from_word(Word::from_letters([e(1), e(1)]));
        let pres = Presentation::new(
            (1, 1),
            vec![e(1)],
            vec![rel.clone(), rel.scale(&q_bracket()), rel.scale(&Scalar::from_int(-3))],
        );
        assert_eq!(pres.rules().len(), 1);
    }
}
