//! Colored polynomials in finitely many variable slots.
//!
//! A variable is `x_{w,i}`: a non-empty word `w` in slot `i`. Variables in
//! different slots commute; two variables in the same slot multiply by
//! concatenating their words in product order. Monomials are therefore kept
//! as `(slot, word)` pairs with strictly increasing slots.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::hopf::{iota, m_from_m_basis};
use crate::linear::{bilinear, q, LinComb};
use crate::sentence::{Alphabet, PSentence, Sentence, Word};

pub type Monomial = Vec<(usize, Word)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("slot counts differ: {0} vs {1}")]
    SlotMismatch(usize, usize),
    #[error("not quasisymmetric: {first:?} and {second:?} carry different coefficients")]
    NotQuasisymmetric { first: Monomial, second: Monomial },
    #[error("not symmetric: {first:?} and {second:?} carry different coefficients")]
    NotSymmetric { first: Monomial, second: Monomial },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPoly {
    slots: usize,
    terms: LinComb<Monomial>,
}

fn increasing_slots(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..=n {
            if n - s + 1 < k - cur.len() {
                break;
            }
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn place(words: &[Word], slots: &[usize]) -> Monomial {
    slots.iter().copied().zip(words.iter().cloned()).collect()
}

fn merge(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((sa, wa)), Some((sb, wb))) if sa == sb => {
                out.push((*sa, wa.concat(wb)));
                i += 1;
                j += 1;
            }
            (Some((sa, wa)), Some((sb, _))) if sa < sb => {
                out.push((*sa, wa.clone()));
                i += 1;
            }
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push(y.clone());
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn words_of(m: &Monomial) -> Vec<Word> {
    m.iter().map(|(_, w)| w.clone()).collect()
}

impl TruncatedPoly {
    pub fn zero(slots: usize) -> Self {
        Self { slots, terms: LinComb::zero() }
    }

    pub fn one(slots: usize) -> Self {
        Self { slots, terms: LinComb::singleton(Vec::new()) }
    }

    /// `x_{w,i}`; panics unless `1 ≤ slot ≤ slots` and `w` is non-empty.
    pub fn variable(slots: usize, word: Word, slot: usize) -> Self {
        assert!((1..=slots).contains(&slot) && !word.is_empty());
        Self { slots, terms: LinComb::singleton(vec![(slot, word)]) }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> &LinComb<Monomial> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_slots(other)?;
        Ok(Self { slots: self.slots, terms: self.terms.add(&other.terms) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_slots(other)?;
        let terms = bilinear(&self.terms, &other.terms, |a, b| LinComb::singleton(merge(a, b)));
        Ok(Self { slots: self.slots, terms })
    }

    fn same_slots(&self, other: &Self) -> Result<(), PolyError> {
        if self.slots == other.slots {
            Ok(())
        } else {
            Err(PolyError::SlotMismatch(self.slots, other.slots))
        }
    }

    /// Groups coefficients by word sequence, keyed by slot choice.
    fn classes(&self) -> BTreeMap<Vec<Word>, BTreeMap<Vec<usize>, crate::linear::Q>> {
        let mut out: BTreeMap<Vec<Word>, BTreeMap<Vec<usize>, _>> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            out.entry(words_of(m)).or_default().insert(m.iter().map(|(s, _)| *s).collect(), c.clone());
        }
        out
    }

    /// Expansion in the colored monomial quasisymmetric basis, if every
    /// slot choice of a word sequence carries the same coefficient.
    pub fn to_m_basis(&self) -> Result<LinComb<Sentence>, PolyError> {
        let mut out = LinComb::zero();
        for (words, by_slots) in self.classes() {
            let choices = increasing_slots(self.slots, words.len());
            let first = &choices[0];
            let c0 = by_slots.get(first).cloned().unwrap_or_else(|| q(0));
            for other in &choices[1..] {
                if by_slots.get(other).cloned().unwrap_or_else(|| q(0)) != c0 {
                    return Err(PolyError::NotQuasisymmetric {
                        first: place(&words, first),
                        second: place(&words, other),
                    });
                }
            }
            out.add_term(Sentence::new_unchecked(words), c0);
        }
        Ok(out)
    }

    pub fn is_quasisymmetric(&self) -> bool {
        self.to_m_basis().is_ok()
    }

    /// Expansion in the colored monomial symmetric basis.
    pub fn to_sym_m(&self) -> Result<LinComb<PSentence>, PolyError> {
        let m = self.to_m_basis()?;
        m_from_m_basis(&m).map_err(|e| {
            let slots: Vec<usize> = (1..=e.first.len()).collect();
            PolyError::NotSymmetric { first: place(e.first.words(), &slots), second: place(e.second.words(), &slots) }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.to_sym_m().is_ok()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> =
                    m.iter().map(|(s, w)| format!("x[{},{}]", alphabet.render_word(w), s)).collect();
                let body = if vars.is_empty() { "1".to_string() } else { vars.join("") };
                format!("{}*{}", c, body)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `M_I` restricted to `slots` variable slots.
pub fn realize_m_basis(i: &Sentence, slots: usize) -> TruncatedPoly {
    let terms =
        increasing_slots(slots, i.len()).into_iter().map(|s| (place(i.words(), &s), q(1))).collect();
    TruncatedPoly { slots, terms }
}

/// `m_P` restricted to `slots` variable slots.
pub fn realize_sym_m(p: &PSentence, slots: usize) -> TruncatedPoly {
    realize_qsym(&iota(&LinComb::singleton(p.clone())), slots)
}

/// Linear extension of [`realize_m_basis`].
pub fn realize_qsym(f: &LinComb<Sentence>, slots: usize) -> TruncatedPoly {
    let mut terms = LinComb::zero();
    for (i, c) in f.iter() {
        terms.add_scaled(&realize_m_basis(i, slots).terms, c);
    }
    TruncatedPoly { slots, terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    fn s(t: &str) -> Sentence {
        ab().parse_sentence(t).unwrap()
    }

    #[test]
    fn realization_of_monomials() {
        let p = realize_m_basis(&s("(ab,c)"), 3);
        assert_eq!(p.render(&ab()), "1*x[ab,1]x[c,2] + 1*x[ab,1]x[c,3] + 1*x[ab,2]x[c,3]");
        assert!(realize_m_basis(&s("(a,b,c)"), 2).terms().is_zero());
        assert_eq!(realize_m_basis(&Sentence::empty(), 2), TruncatedPoly::one(2));
    }

    #[test]
    fn same_slot_variables_concatenate() {
        let a = ab().word("a").unwrap();
        let b = ab().word("b").unwrap();
        let x = TruncatedPoly::variable(2, a.clone(), 1);
        let y = TruncatedPoly::variable(2, b.clone(), 1);
        assert_eq!(x.mul(&y).unwrap(), TruncatedPoly::variable(2, ab().word("ab").unwrap(), 1));
        let z = TruncatedPoly::variable(2, b.clone(), 2);
        let want = TruncatedPoly { slots: 2, terms: LinComb::singleton(vec![(1, a), (2, b)]) };
        assert_eq!(z.mul(&x).unwrap(), want);
        assert!(x.mul(&TruncatedPoly::one(3)).is_err());
    }

    #[test]
    fn product_matches_quasishuffle() {
        let prod = realize_m_basis(&s("(a)"), 2).mul(&realize_m_basis(&s("(b)"), 2)).unwrap();
        let want: LinComb<Sentence> = ["(a,b)", "(b,a)", "(ab)"].iter().map(|t| (s(t), q(1))).collect();
        assert_eq!(prod.to_m_basis().unwrap(), want);
    }

    #[test]
    fn symmetry_checks() {
        let p = ab().parse_psentence("(ab,c)").unwrap();
        let r = realize_sym_m(&p, 4);
        assert!(r.is_symmetric());
        assert_eq!(r.to_sym_m().unwrap(), LinComb::singleton(p));
        let m = realize_m_basis(&s("(a,b)"), 4);
        assert!(m.is_quasisymmetric());
        match m.to_sym_m() {
            Err(PolyError::NotSymmetric { first, second }) => {
                assert_eq!(words_of(&first), s("(a,b)").words());
                assert_eq!(words_of(&second), s("(b,a)").words());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(realize_m_basis(&s("(ab,c)"), 5).to_m_basis().unwrap(), LinComb::singleton(s("(ab,c)")));
        let lone = TruncatedPoly::variable(2, ab().word("a").unwrap(), 1);
        assert!(!lone.is_quasisymmetric());
    }
}
