use std::collections::BTreeSet;

use num_traits::One;

use super::maps::{iota, m_from_m_basis};
use super::GradedHopf;
use crate::linear::{q, LinComb, Tensor, Q};
use crate::sentence::{
    self, coarsenings, concat, count_sentences, enumerate_psentences, enumerate_sentences, flatten,
    quasishuffles, r_coefficient, refinements, reversal, right_splittings, sort_sentence, sort_weak,
    Alphabet, PSentence, Sentence, Word,
};

fn sign(len: usize) -> Q {
    if len % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

fn count_psentences(n: usize, alphabet_len: usize) -> u128 {
    // Multisets of words, one multichoose per block of equal-length words.
    fn multichoose(n: u128, k: u128) -> u128 {
        let mut acc = 1u128;
        for i in 0..k {
            acc = acc.saturating_mul(n + i) / (i + 1);
        }
        acc
    }
    sentence::partitions(n)
        .into_iter()
        .map(|shape| {
            let mut total = 1u128;
            let mut i = 0;
            while i < shape.len() {
                let j = shape[i..].iter().take_while(|&&x| x == shape[i]).count();
                let words = (alphabet_len as u128).saturating_pow(shape[i] as u32);
                total = total.saturating_mul(multichoose(words, j as u128));
                i += j;
            }
            total
        })
        .fold(0u128, u128::saturating_add)
}

/// Colored noncommutative symmetric functions on the `H` basis.
#[derive(Debug, Clone)]
pub struct NSymA {
    pub alphabet: Alphabet,
}

impl NSymA {
    pub fn new(alphabet: Alphabet) -> Self {
        Self { alphabet }
    }
}

impl GradedHopf for NSymA {
    type Key = Sentence;

    fn name(&self) -> &'static str {
        "NSymA"
    }

    fn commutative(&self) -> bool {
        false
    }

    fn unit(&self) -> Sentence {
        Sentence::empty()
    }

    fn degree(&self, k: &Sentence) -> usize {
        k.size()
    }

    fn basis(&self, n: usize) -> Vec<Sentence> {
        enumerate_sentences(n, &self.alphabet)
    }

    fn basis_len(&self, n: usize) -> u128 {
        count_sentences(n, self.alphabet.len())
    }

    fn mul_keys(&self, a: &Sentence, b: &Sentence) -> LinComb<Sentence> {
        LinComb::singleton(concat(a, b))
    }

    /// Sum over right-contained `J` of `H_{flat(I/J)} ⊗ H_{flat(J)}`.
    fn delta_key(&self, a: &Sentence) -> Tensor<Sentence> {
        right_splittings(a)
            .into_iter()
            .map(|(quot, part)| ((flatten(&quot), flatten(&part)), Q::one()))
            .collect()
    }

    /// Sum over refinements `J` of the reversal, signed by `(-1)^ℓ(J)`.
    fn antipode_key(&self, a: &Sentence) -> LinComb<Sentence> {
        refinements(&reversal(a))
            .into_iter()
            .map(|j| {
                let c = sign(j.len());
                (j, c)
            })
            .collect()
    }

    fn render(&self, k: &Sentence) -> String {
        format!("H{}", self.alphabet.render_sentence(k))
    }
}

/// Colored quasisymmetric functions on the `M` basis.
#[derive(Debug, Clone)]
pub struct QSymA {
    pub alphabet: Alphabet,
}

impl QSymA {
    pub fn new(alphabet: Alphabet) -> Self {
        Self { alphabet }
    }
}

impl GradedHopf for QSymA {
    type Key = Sentence;

    fn name(&self) -> &'static str {
        "QSymA"
    }

    /// Glued words keep their order (`M(a)M(b)` has `M(ab)`, `M(b)M(a)` has
    /// `M(ba)`), so only a one-letter alphabet gives a commutative product.
    fn commutative(&self) -> bool {
        self.alphabet.len() == 1
    }

    fn unit(&self) -> Sentence {
        Sentence::empty()
    }

    fn degree(&self, k: &Sentence) -> usize {
        k.size()
    }

    fn basis(&self, n: usize) -> Vec<Sentence> {
        enumerate_sentences(n, &self.alphabet)
    }

    fn basis_len(&self, n: usize) -> u128 {
        count_sentences(n, self.alphabet.len())
    }

    fn mul_keys(&self, a: &Sentence, b: &Sentence) -> LinComb<Sentence> {
        quasishuffles(a, b).into_iter().map(|k| (k, Q::one())).collect()
    }

    /// Deconcatenation.
    fn delta_key(&self, a: &Sentence) -> Tensor<Sentence> {
        let words = a.words();
        (0..=words.len())
            .map(|k| {
                let left = Sentence::new_unchecked(words[..k].to_vec());
                let right = Sentence::new_unchecked(words[k..].to_vec());
                ((left, right), Q::one())
            })
            .collect()
    }

    /// `(-1)^ℓ(I)` times the sum of `M_J` over `J` whose reversal coarsens `I`.
    fn antipode_key(&self, a: &Sentence) -> LinComb<Sentence> {
        let s = sign(a.len());
        coarsenings(a).into_iter().map(|c| (reversal(&c), s.clone())).collect()
    }

    fn render(&self, k: &Sentence) -> String {
        format!("M{}", self.alphabet.render_sentence(k))
    }
}

/// Commutative image of `NSymA`, on the colored complete homogeneous basis `h`.
#[derive(Debug, Clone)]
pub struct PSymA {
    pub alphabet: Alphabet,
}

impl PSymA {
    pub fn new(alphabet: Alphabet) -> Self {
        Self { alphabet }
    }
}

impl GradedHopf for PSymA {
    type Key = PSentence;

    fn name(&self) -> &'static str {
        "PSymA"
    }

    fn commutative(&self) -> bool {
        true
    }

    fn unit(&self) -> PSentence {
        PSentence::empty()
    }

    fn degree(&self, k: &PSentence) -> usize {
        k.size()
    }

    fn basis(&self, n: usize) -> Vec<PSentence> {
        enumerate_psentences(n, &self.alphabet)
    }

    fn basis_len(&self, n: usize) -> u128 {
        count_psentences(n, self.alphabet.len())
    }

    fn mul_keys(&self, a: &PSentence, b: &PSentence) -> LinComb<PSentence> {
        LinComb::singleton(sort_sentence(&concat(a.as_sentence(), b.as_sentence())))
    }

    fn delta_key(&self, a: &PSentence) -> Tensor<PSentence> {
        right_splittings(a.as_sentence())
            .into_iter()
            .map(|(quot, part)| ((sort_weak(&quot), sort_weak(&part)), Q::one()))
            .collect()
    }

    /// Signed sum over sentences refining `P`, each sorted.
    fn antipode_key(&self, a: &PSentence) -> LinComb<PSentence> {
        refinements(a.as_sentence())
            .into_iter()
            .map(|j| {
                let c = sign(j.len());
                (sort_sentence(&j), c)
            })
            .collect()
    }

    fn render(&self, k: &PSentence) -> String {
        format!("h{}", self.alphabet.render_sentence(k.as_sentence()))
    }
}

/// Colored symmetric functions on the colored monomial basis `m`.
#[derive(Debug, Clone)]
pub struct SymA {
    pub alphabet: Alphabet,
    qsym: QSymA,
}

impl SymA {
    pub fn new(alphabet: Alphabet) -> Self {
        Self { qsym: QSymA::new(alphabet.clone()), alphabet }
    }

    pub fn qsym(&self) -> &QSymA {
        &self.qsym
    }

    /// Candidate indices of `m_P m_S`: each word of `P` is glued in front of at
    /// most one word of `S`, everything else is kept as is.
    fn product_support(p: &PSentence, s: &PSentence) -> BTreeSet<PSentence> {
        fn rec(
            p: &[Word],
            s: &[Word],
            used: &mut Vec<bool>,
            cur: &mut Vec<Word>,
            out: &mut BTreeSet<PSentence>,
        ) {
            let Some((first, rest)) = p.split_first() else {
                let mut words = cur.clone();
                words.extend(s.iter().zip(used.iter()).filter(|(_, u)| !**u).map(|(w, _)| w.clone()));
                out.insert(sentence::sort_words(words));
                return;
            };
            cur.push(first.clone());
            rec(rest, s, used, cur, out);
            cur.pop();
            for j in 0..s.len() {
                if used[j] || (j > 0 && s[j] == s[j - 1] && !used[j - 1]) {
                    continue;
                }
                used[j] = true;
                cur.push(first.concat(&s[j]));
                rec(rest, s, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
        let mut out = BTreeSet::new();
        let mut used = vec![false; s.len()];
        rec(p.words(), s.words(), &mut used, &mut Vec::new(), &mut out);
        out
    }

    /// Distinct sub-multisets of the words of `p`.
    fn sub_multisets(p: &PSentence) -> Vec<(PSentence, PSentence)> {
        let words = p.words();
        let mut blocks: Vec<(&Word, usize)> = Vec::new();
        for w in words {
            match blocks.last_mut() {
                Some((last, n)) if *last == w => *n += 1,
                _ => blocks.push((w, 1)),
            }
        }
        let mut out = vec![(Vec::new(), Vec::new())];
        for (w, n) in blocks {
            let mut next = Vec::with_capacity(out.len() * (n + 1));
            for (taken, rest) in &out {
                for t in 0..=n {
                    let mut a: Vec<Word> = taken.clone();
                    let mut b: Vec<Word> = rest.clone();
                    a.extend(std::iter::repeat_n(w.clone(), t));
                    b.extend(std::iter::repeat_n(w.clone(), n - t));
                    next.push((a, b));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(a, b)| (PSentence::from_sorted_words(a), PSentence::from_sorted_words(b)))
            .collect()
    }
}

impl GradedHopf for SymA {
    type Key = PSentence;

    fn name(&self) -> &'static str {
        "SymA"
    }

    fn commutative(&self) -> bool {
        true
    }

    fn unit(&self) -> PSentence {
        PSentence::empty()
    }

    fn degree(&self, k: &PSentence) -> usize {
        k.size()
    }

    fn basis(&self, n: usize) -> Vec<PSentence> {
        enumerate_psentences(n, &self.alphabet)
    }

    fn basis_len(&self, n: usize) -> u128 {
        count_psentences(n, self.alphabet.len())
    }

    fn mul_keys(&self, a: &PSentence, b: &PSentence) -> LinComb<PSentence> {
        Self::product_support(a, b)
            .into_iter()
            .map(|qs| {
                let c = r_coefficient(a, b, &qs);
                (qs, q(c as i64))
            })
            .collect()
    }

    /// Sum over sub-multisets `Q` of `m_Q ⊗ m_{P ⧵⧵ Q}`.
    fn delta_key(&self, a: &PSentence) -> Tensor<PSentence> {
        Self::sub_multisets(a).into_iter().map(|pair| (pair, Q::one())).collect()
    }

    /// Computed inside `QSymA`: expand, apply its antipode, read back.
    fn antipode_key(&self, a: &PSentence) -> LinComb<PSentence> {
        let image = self.qsym.antipode(&iota(&LinComb::singleton(a.clone())));
        m_from_m_basis(&image).expect("QSymA antipode left Sym_A")
    }

    fn render(&self, k: &PSentence) -> String {
        format!("m{}", self.alphabet.render_sentence(k.as_sentence()))
    }
}
