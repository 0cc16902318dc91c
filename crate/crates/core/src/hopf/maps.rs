//! Morphisms between the colored algebras and down to the classical ones.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::classical::{Composition, Partition};
use crate::linear::{LinComb, Q};
use crate::sentence::{rearrangements, sort_sentence, PSentence, Sentence};

/// Raised when an `M`-expansion is not constant on a rearrangement class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not symmetric: {first:?} has coefficient {first_coeff} but {second:?} has {second_coeff}")]
pub struct NotSymmetric {
    pub first: Sentence,
    pub first_coeff: Q,
    pub second: Sentence,
    pub second_coeff: Q,
}

/// Forgetful map `H_I ↦ h_{sort(I)}`.
pub fn chi(f: &LinComb<Sentence>) -> LinComb<PSentence> {
    f.map_keys(sort_sentence)
}

/// Inclusion `Sym_A → QSym_A`: `m_P ↦ Σ_{sort(I)=P} M_I`.
pub fn iota(f: &LinComb<PSentence>) -> LinComb<Sentence> {
    f.extend_linear(|p| rearrangements(p).into_iter().map(|i| (i, Q::from_integer(1.into()))).collect())
}

/// Inverse of [`iota`] on its image. Reads the coefficient of each sort class and
/// checks that every rearrangement in the class carries the same coefficient.
pub fn m_from_m_basis(g: &LinComb<Sentence>) -> Result<LinComb<PSentence>, NotSymmetric> {
    let mut classes: BTreeMap<PSentence, ()> = BTreeMap::new();
    for (i, _) in g.iter() {
        classes.insert(sort_sentence(i), ());
    }
    let mut out = LinComb::zero();
    for p in classes.into_keys() {
        let members = rearrangements(&p);
        let first = &members[0];
        let c0 = g.coeff(first);
        for other in &members[1..] {
            let c = g.coeff(other);
            if c != c0 {
                return Err(NotSymmetric {
                    first: first.clone(),
                    first_coeff: c0,
                    second: other.clone(),
                    second_coeff: c,
                });
            }
        }
        if !c0.is_zero() {
            out.add_term(p, c0);
        }
    }
    Ok(out)
}

/// `υ` on `H_I` or `M_I`: index goes to its word lengths.
pub fn uncolor_sentence(f: &LinComb<Sentence>) -> LinComb<Composition> {
    f.map_keys(|i| Composition(i.word_lengths()))
}

/// `υ` on `m_P`, as the restriction of the `QSym_A` uncoloring. The image of
/// `m_P` is `c·m_λ` with `λ = wℓ(P)` and `c` the number of distinct orderings
/// of the words of `P` over the number of distinct orderings of `λ`. Plain
/// `m_P ↦ m_λ` is not multiplicative once two letters are around:
/// `m(a)m(b) = m(a,b) + m(ab)` but `m_1 m_1 = 2m_{11} + m_2`.
pub fn uncolor_m_psentence(f: &LinComb<PSentence>) -> LinComb<Partition> {
    f.extend_linear(|p| {
        let lengths = p.word_lengths();
        let c = multiplicity_factorials(&lengths) / multiplicity_factorials(p.words());
        LinComb::from_iter([(Partition(lengths), c)])
    })
}

/// `∏ k!` over the multiplicities `k` of a sorted sequence.
fn multiplicity_factorials<T: PartialEq>(xs: &[T]) -> Q {
    let mut out = Q::from_integer(1.into());
    let mut run = 0u32;
    for (i, x) in xs.iter().enumerate() {
        run = if i > 0 && xs[i - 1] == *x { run + 1 } else { 1 };
        out *= Q::from_integer(run.into());
    }
    out
}

/// `υ` on `h_P`: `h_P ↦ h_{wℓ(P)}`.
pub fn uncolor_h(f: &LinComb<PSentence>) -> LinComb<Partition> {
    f.map_keys(|p| Partition(p.word_lengths()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::q;
    use crate::sentence::Alphabet;

    fn alpha() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    fn s(t: &str) -> Sentence {
        alpha().parse_sentence(t).unwrap()
    }

    fn p(t: &str) -> PSentence {
        alpha().parse_psentence(t).unwrap()
    }

    #[test]
    fn chi_sorts_and_collapses() {
        assert_eq!(chi(&LinComb::singleton(s("(c,aba,bc)"))), LinComb::singleton(p("(aba,bc,c)")));
        assert_eq!(chi(&LinComb::singleton(Sentence::empty())), LinComb::singleton(PSentence::empty()));
        let diff = LinComb::singleton(s("(a,b)")).sub(&LinComb::singleton(s("(b,a)")));
        assert!(chi(&diff).is_zero());
    }

    #[test]
    fn iota_and_back() {
        let m = LinComb::singleton(p("(ab,c,c)"));
        let expanded = iota(&m);
        let want: LinComb<Sentence> =
            ["(ab,c,c)", "(c,ab,c)", "(c,c,ab)"].iter().map(|t| (s(t), q(1))).collect();
        assert_eq!(expanded, want);
        assert_eq!(m_from_m_basis(&expanded).unwrap(), m);
        let sym: LinComb<Sentence> = [(s("(a,b)"), q(1)), (s("(b,a)"), q(1))].into_iter().collect();
        assert_eq!(m_from_m_basis(&sym).unwrap(), LinComb::singleton(p("(a,b)")));
        let err = m_from_m_basis(&LinComb::singleton(s("(a,b)"))).unwrap_err();
        assert_eq!((err.first, err.second), (s("(a,b)"), s("(b,a)")));
    }

    #[test]
    fn uncoloring() {
        assert_eq!(uncolor_sentence(&LinComb::singleton(s("(ab,c)"))), LinComb::singleton(Composition(vec![2, 1])));
        assert_eq!(
            uncolor_m_psentence(&LinComb::singleton(p("(ab,c,c)"))),
            LinComb::singleton(Partition(vec![2, 1, 1]))
        );
        // two orderings of (a,b) but one of (1,1)
        let two: LinComb<Partition> = [(Partition(vec![1, 1]), q(2))].into_iter().collect();
        assert_eq!(uncolor_m_psentence(&LinComb::singleton(p("(a,b)"))), two);
        assert_eq!(uncolor_h(&LinComb::singleton(p("(a,b)"))), LinComb::singleton(Partition(vec![1, 1])));
    }
}
