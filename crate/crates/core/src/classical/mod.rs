//! Classical `Sym`, `QSym` and `NSym`.
//!
//! The `m`, `h`, `M` and `H` kernels run through the one-color instance of the
//! colored algebras via the word-length bijection. [`direct`] holds
//! stand-alone implementations of the same formulas used to cross-check them.

pub mod bases;
pub mod direct;
pub mod ssyt;

use std::fmt;

use crate::hopf::{GradedHopf, NSymA, PSymA, QSymA, SymA};
use crate::linear::{LinComb, Tensor};
use crate::sentence::{partitions, Alphabet, PSentence, Sentence, Word};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(pub Vec<usize>);

fn render_parts(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(usize::to_string).collect();
    format!("({})", inner.join(","))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_parts(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_parts(&self.0))
    }
}

impl Composition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    fn from_partial_sums(sums: &[usize]) -> Self {
        let mut prev = 0;
        Composition(
            sums.iter()
                .map(|&s| {
                    let part = s - prev;
                    prev = s;
                    part
                })
                .collect(),
        )
    }

    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// `α ⊙ β`; `None` when either side is empty.
    pub fn near_concat(&self, other: &Composition) -> Option<Composition> {
        let (last, head) = self.0.split_last()?;
        let (first, tail) = other.0.split_first()?;
        let mut v = head.to_vec();
        v.push(last + first);
        v.extend_from_slice(tail);
        Some(Composition(v))
    }

    /// All compositions refining `self`, i.e. whose partial sums contain ours.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        if n == 0 {
            return vec![Composition::default()];
        }
        let fixed = self.partial_sums();
        let free: Vec<usize> = (1..n).filter(|p| !fixed.contains(p)).collect();
        (0u64..1 << free.len())
            .map(|mask| {
                let mut sums: Vec<usize> = fixed.clone();
                sums.extend(free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p));
                sums.sort_unstable();
                Composition::from_partial_sums(&sums)
            })
            .collect()
    }

    /// All compositions that `self` refines.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::default()];
        }
        let sums = self.partial_sums();
        let n = *sums.last().unwrap();
        let inner = &sums[..sums.len() - 1];
        (0u64..1 << inner.len())
            .map(|mask| {
                let mut kept: Vec<usize> =
                    inner.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
                kept.push(n);
                Composition::from_partial_sums(&kept)
            })
            .collect()
    }

    /// All compositions of `n`, ordered by number of parts then lexicographically descending.
    pub fn all(n: usize) -> Vec<Composition> {
        Composition(vec![n]).refinements_if_positive()
    }

    fn refinements_if_positive(&self) -> Vec<Composition> {
        if self.size() == 0 {
            return vec![Composition::default()];
        }
        let mut v = self.refinements();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.0.cmp(&a.0)));
        v
    }
}

/// `α ⪯ β`: the partial sums of `β` are among those of `α`.
pub fn composition_refines(alpha: &Composition, beta: &Composition) -> bool {
    if alpha.size() != beta.size() {
        return false;
    }
    let fine = alpha.partial_sums();
    beta.partial_sums().iter().all(|s| fine.contains(s))
}

impl Partition {
    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Partition {
        let mut v: Vec<usize> = parts.into_iter().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn is_valid(parts: &[usize]) -> bool {
        parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Partitions of `n`, `(n)` first (reverse lexicographic).
    pub fn all(n: usize) -> Vec<Partition> {
        partitions(n).into_iter().map(Partition).collect()
    }
}

pub(crate) fn unary_word(n: usize) -> Word {
    Word::repeat(0, n)
}

pub(crate) fn comp_to_sentence(a: &Composition) -> Sentence {
    Sentence::new(a.0.iter().map(|&n| unary_word(n)).collect()).expect("composition parts are positive")
}

pub(crate) fn sentence_to_comp(s: &Sentence) -> Composition {
    Composition(s.word_lengths())
}

pub(crate) fn part_to_psentence(p: &Partition) -> PSentence {
    PSentence::from_canonical(comp_to_sentence(&Composition(p.0.clone()))).expect("partition is sorted")
}

pub(crate) fn psentence_to_part(p: &PSentence) -> Partition {
    Partition(p.word_lengths())
}

fn lift<A: Ord + Clone, B: Ord + Clone>(f: &LinComb<A>, g: impl Fn(&A) -> B) -> LinComb<B> {
    f.map_keys(g)
}

macro_rules! unary_wrapper {
    ($name:ident, $inner:ty, $key:ty, $to:expr, $from:expr, $label:literal, $basis:literal, $comm:expr, $all:expr) => {
        #[derive(Debug, Clone)]
        pub struct $name {
            inner: $inner,
        }

        impl Default for $name {
            fn default() -> Self {
                Self { inner: <$inner>::new(Alphabet::unary()) }
            }
        }

        impl $name {
            pub fn new() -> Self {
                Self::default()
            }
        }

        impl GradedHopf for $name {
            type Key = $key;

            fn name(&self) -> &'static str {
                $label
            }

            fn commutative(&self) -> bool {
                $comm
            }

            fn unit(&self) -> $key {
                <$key>::default()
            }

            fn degree(&self, k: &$key) -> usize {
                k.size()
            }

            fn basis(&self, n: usize) -> Vec<$key> {
                $all(n)
            }

            fn basis_len(&self, n: usize) -> u128 {
                $all(n).len() as u128
            }

            fn mul_keys(&self, a: &$key, b: &$key) -> LinComb<$key> {
                lift(&self.inner.mul_keys(&$to(a), &$to(b)), $from)
            }

            fn delta_key(&self, a: &$key) -> Tensor<$key> {
                lift(&self.inner.delta_key(&$to(a)), |(x, y)| ($from(x), $from(y)))
            }

            fn antipode_key(&self, a: &$key) -> LinComb<$key> {
                lift(&self.inner.antipode_key(&$to(a)), $from)
            }

            fn render(&self, k: &$key) -> String {
                format!("{}{}", $basis, k)
            }
        }
    };
}

unary_wrapper!(SymM, SymA, Partition, part_to_psentence, psentence_to_part, "Sym", "m", true, Partition::all);
unary_wrapper!(SymH, PSymA, Partition, part_to_psentence, psentence_to_part, "Sym", "h", true, Partition::all);
unary_wrapper!(QSymM, QSymA, Composition, comp_to_sentence, sentence_to_comp, "QSym", "M", true, Composition::all);
unary_wrapper!(NSymH, NSymA, Composition, comp_to_sentence, sentence_to_comp, "NSym", "H", false, Composition::all);

/// Classical forgetful map `H_α ↦ h_{sort(α)}`.
pub fn chi_classical(f: &LinComb<Composition>) -> LinComb<Partition> {
    f.map_keys(Composition::sorted)
}

/// Classical inclusion `m_λ ↦ Σ_{sort(α)=λ} M_α`.
pub fn iota_classical(f: &LinComb<Partition>) -> LinComb<Composition> {
    let qsym = crate::hopf::iota(&f.map_keys(part_to_psentence));
    qsym.map_keys(sentence_to_comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::q;

    fn c(parts: &[usize]) -> Composition {
        Composition(parts.to_vec())
    }

    #[test]
    fn refinement_order() {
        assert!(composition_refines(&c(&[1, 2]), &c(&[3])));
        assert!(composition_refines(&c(&[3]), &c(&[3])));
        assert!(!composition_refines(&c(&[2, 1]), &c(&[1, 2])));
        let mut r = c(&[2, 1]).refinements();
        r.sort();
        assert_eq!(r, vec![c(&[1, 1, 1]), c(&[2, 1])]);
        assert_eq!(c(&[1, 1, 1]).coarsenings().len(), 4);
        assert_eq!(Composition::all(4).len(), 8);
        assert_eq!(Composition::all(0), vec![c(&[])]);
    }

    #[test]
    fn conjugation() {
        assert_eq!(Partition(vec![3, 2]).conjugate(), Partition(vec![2, 2, 1]));
        assert_eq!(Partition(vec![2, 1]).conjugate(), Partition(vec![2, 1]));
        assert_eq!(Partition(vec![]).conjugate(), Partition(vec![]));
    }

    #[test]
    fn wrappers_follow_classical_examples() {
        let m = QSymM::new();
        let prod = m.mul_keys(&c(&[1]), &c(&[2, 1]));
        let want: LinComb<Composition> =
            [(c(&[1, 2, 1]), q(1)), (c(&[2, 1, 1]), q(2)), (c(&[3, 1]), q(1)), (c(&[2, 2]), q(1))]
                .into_iter()
                .collect();
        assert_eq!(prod, want);
        let d = m.delta_key(&c(&[2, 1, 1]));
        let want: Tensor<Composition> = [
            ((c(&[]), c(&[2, 1, 1])), q(1)),
            ((c(&[2]), c(&[1, 1])), q(1)),
            ((c(&[2, 1]), c(&[1])), q(1)),
            ((c(&[2, 1, 1]), c(&[])), q(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, want);
        let h = SymH::new();
        let d = h.delta_key(&Partition(vec![3]));
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn classical_chi_and_iota() {
        assert_eq!(chi_classical(&LinComb::singleton(c(&[1, 2]))), LinComb::singleton(Partition(vec![2, 1])));
        let want: LinComb<Composition> = [(c(&[2, 1]), q(1)), (c(&[1, 2]), q(1))].into_iter().collect();
        assert_eq!(iota_classical(&LinComb::singleton(Partition(vec![2, 1]))), want);
    }
}
