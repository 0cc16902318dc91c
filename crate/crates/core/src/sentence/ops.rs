use std::collections::BTreeSet;

use super::{canonical_key, Alphabet, PSentence, Sentence, SentenceError, WeakSentence, Word};

pub fn concat(i: &Sentence, j: &Sentence) -> Sentence {
    let mut words = i.words().to_vec();
    words.extend_from_slice(j.words());
    Sentence::new_unchecked(words)
}

/// `I ⊙ J`: concatenation that also glues the last word of `I` to the first of `J`.
pub fn near_concat(i: &Sentence, j: &Sentence) -> Result<Sentence, SentenceError> {
    let (Some((last, head)), Some((first, tail))) = (i.words().split_last(), j.words().split_first())
    else {
        return Err(SentenceError::UndefinedOperand);
    };
    let mut words = head.to_vec();
    words.push(last.concat(first));
    words.extend_from_slice(tail);
    Ok(Sentence::new_unchecked(words))
}

pub fn reversal(i: &Sentence) -> Sentence {
    Sentence::new_unchecked(i.words().iter().rev().cloned().collect())
}

/// Same maximal word, splitting exactly where `i` does not.
pub fn complement(i: &Sentence) -> Sentence {
    let n = i.size();
    if n == 0 {
        return Sentence::empty();
    }
    let splits: BTreeSet<usize> = i.split_positions().into_iter().collect();
    let comp: Vec<usize> = (1..n).filter(|p| !splits.contains(p)).collect();
    Sentence::from_splits(&i.maximal_word(), &comp)
}

pub fn flatten(k: &WeakSentence) -> Sentence {
    Sentence::new_unchecked(k.words().iter().filter(|w| !w.is_empty()).cloned().collect())
}

/// Sorts the words of a sentence into canonical p-sentence order.
pub fn sort_sentence(i: &Sentence) -> PSentence {
    sort_words(i.words().to_vec())
}

/// `sort(K) = sort(flatten(K))`.
pub fn sort_weak(k: &WeakSentence) -> PSentence {
    sort_words(k.words().iter().filter(|w| !w.is_empty()).cloned().collect())
}

pub(crate) fn sort_words(mut words: Vec<Word>) -> PSentence {
    words.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));
    PSentence::from_sorted_words(words)
}

/// `i ⪯ j`: same maximal word and `i` splits wherever `j` does.
pub fn refines(i: &Sentence, j: &Sentence) -> bool {
    if i.maximal_word() != j.maximal_word() {
        return false;
    }
    let fine: BTreeSet<usize> = i.split_positions().into_iter().collect();
    j.split_positions().iter().all(|p| fine.contains(p))
}

/// Every sentence refining `i`. Each word is cut along a subset of its
/// interior positions; subsets run in binary-counter order, first word slowest.
pub fn refinements(i: &Sentence) -> Vec<Sentence> {
    let per_word: Vec<Vec<Vec<Word>>> = i.words().iter().map(word_refinements).collect();
    let mut out = vec![Vec::<Word>::new()];
    for options in per_word {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for opt in &options {
                let mut v = prefix.clone();
                v.extend(opt.iter().cloned());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Sentence::new_unchecked).collect()
}

fn word_refinements(w: &Word) -> Vec<Vec<Word>> {
    let interior = w.len().saturating_sub(1);
    (0u64..1 << interior)
        .map(|mask| {
            let cuts: Vec<usize> = (0..interior).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            Sentence::from_splits(w, &cuts).into_words()
        })
        .collect()
}

/// Every sentence coarsening `i`: keep any subset of its word boundaries.
pub fn coarsenings(i: &Sentence) -> Vec<Sentence> {
    if i.is_empty() {
        return vec![Sentence::empty()];
    }
    let splits = i.split_positions();
    let word = i.maximal_word();
    (0u64..1 << splits.len())
        .map(|mask| {
            let kept: Vec<usize> = splits
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Sentence::from_splits(&word, &kept)
        })
        .collect()
}

/// Odometer over one cut point per word; yields the (prefix, suffix) weak sentences.
fn splittings(i: &Sentence) -> Vec<(WeakSentence, WeakSentence)> {
    let words = i.words();
    let total: usize = words.iter().map(|w| w.len() + 1).product();
    let mut out = Vec::with_capacity(total);
    let mut cut = vec![0usize; words.len()];
    loop {
        let prefix = words.iter().zip(&cut).map(|(w, &c)| Word(w.0[..c].to_vec())).collect();
        let suffix = words.iter().zip(&cut).map(|(w, &c)| Word(w.0[c..].to_vec())).collect();
        out.push((WeakSentence::new(prefix), WeakSentence::new(suffix)));
        let mut k = words.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cut[k] += 1;
            if cut[k] <= words[k].len() {
                break;
            }
            cut[k] = 0;
        }
    }
}

/// All `J ⊆_R I` paired with their quotients: `(I/_R J, J)` with `w_i = u_i v_i`.
pub fn right_splittings(i: &Sentence) -> Vec<(WeakSentence, WeakSentence)> {
    splittings(i)
}

/// All `K ⊆_L I` paired with their quotients: `(K, I/_L K)` with `w_i = v_i q_i`.
pub fn left_splittings(i: &Sentence) -> Vec<(WeakSentence, WeakSentence)> {
    splittings(i)
}

/// Interleavings of the words of `i` and `j`, with multiplicity.
pub fn shuffles(i: &Sentence, j: &Sentence) -> Vec<Sentence> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(i.len() + j.len());
    shuffle_rec(i.words(), j.words(), &mut cur, false, &mut out);
    out
}

/// Shuffles plus every variant gluing an `i`-word directly followed by a
/// `j`-word into their concatenation, with multiplicity.
pub fn quasishuffles(i: &Sentence, j: &Sentence) -> Vec<Sentence> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(i.len() + j.len());
    shuffle_rec(i.words(), j.words(), &mut cur, true, &mut out);
    out
}

fn shuffle_rec(a: &[Word], b: &[Word], cur: &mut Vec<Word>, quasi: bool, out: &mut Vec<Sentence>) {
    if a.is_empty() || b.is_empty() {
        let mut words = cur.clone();
        words.extend_from_slice(a);
        words.extend_from_slice(b);
        out.push(Sentence::new_unchecked(words));
        return;
    }
    cur.push(a[0].clone());
    shuffle_rec(&a[1..], b, cur, quasi, out);
    cur.pop();
    if quasi {
        cur.push(a[0].concat(&b[0]));
        shuffle_rec(&a[1..], &b[1..], cur, quasi, out);
        cur.pop();
    }
    cur.push(b[0].clone());
    shuffle_rec(a, &b[1..], cur, quasi, out);
    cur.pop();
}

/// Multiset containment of word lists.
pub fn is_submultiset(q: &PSentence, p: &PSentence) -> bool {
    remove_words(p.words(), q.words()).is_some()
}

fn remove_words(from: &[Word], remove: &[Word]) -> Option<Vec<Word>> {
    let mut rest = from.to_vec();
    for w in remove {
        let pos = rest.iter().position(|x| x == w)?;
        rest.remove(pos);
    }
    Some(rest)
}

/// `P ⧵⧵ Q`: remove the words of `q` from `p` as multisets.
pub fn multiset_difference(p: &PSentence, q: &PSentence) -> Result<PSentence, SentenceError> {
    match remove_words(p.words(), q.words()) {
        Some(rest) => Ok(PSentence::from_sorted_words(rest)),
        None => Err(SentenceError::NotContained(format!("{q:?}"), format!("{p:?}"))),
    }
}

/// Number of weak-sentence pairs `(Y, Z)` of length `ℓ(Q)` with `sort(Y) = P`,
/// `sort(Z) = S` and `q_i = y_i z_i`. Brute force over one cut per word of `Q`.
pub fn r_coefficient(p: &PSentence, s: &PSentence, q: &PSentence) -> u64 {
    if p.size() + s.size() != q.size() || p.len() + s.len() < q.len() {
        return 0;
    }
    splittings(q.as_sentence())
        .into_iter()
        .filter(|(y, z)| sort_weak(y) == *p && sort_weak(z) == *s)
        .count() as u64
}

/// All sentences of size `n`: split subsets in binary-counter order (outer),
/// maximal words in lexicographic order (inner).
pub fn enumerate_sentences(n: usize, alphabet: &Alphabet) -> Vec<Sentence> {
    if n == 0 {
        return vec![Sentence::empty()];
    }
    let words = alphabet.words_of_len(n);
    let mut out = Vec::with_capacity(words.len() << (n - 1));
    for mask in 0u64..1 << (n - 1) {
        let cuts: Vec<usize> = (0..n - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        for w in &words {
            out.push(Sentence::from_splits(w, &cuts));
        }
    }
    out
}

/// Number of sentences of size `n` without materializing them.
pub fn count_sentences(n: usize, alphabet_len: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    (1u128 << (n - 1)).saturating_mul((alphabet_len as u128).saturating_pow(n as u32))
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All p-sentences of size `n`, ordered by word-length partition in reverse
/// lexicographic order and then lexicographically on the word sequence.
pub fn enumerate_psentences(n: usize, alphabet: &Alphabet) -> Vec<PSentence> {
    let mut out = Vec::new();
    for shape in partitions(n) {
        let mut cur: Vec<Word> = Vec::with_capacity(shape.len());
        fill_shape(&shape, alphabet, &mut cur, &mut out);
    }
    out
}

fn fill_shape(shape: &[usize], alphabet: &Alphabet, cur: &mut Vec<Word>, out: &mut Vec<PSentence>) {
    let k = cur.len();
    if k == shape.len() {
        out.push(PSentence::from_sorted_words(cur.clone()));
        return;
    }
    for w in alphabet.words_of_len(shape[k]) {
        if k > 0 && shape[k - 1] == shape[k] && w < cur[k - 1] {
            continue;
        }
        cur.push(w);
        fill_shape(shape, alphabet, cur, out);
        cur.pop();
    }
}

/// Distinct orderings of the words of `p`, in lexicographic order of word sequences.
pub fn rearrangements(p: &PSentence) -> Vec<Sentence> {
    let mut words = p.words().to_vec();
    words.sort();
    let mut out = Vec::new();
    loop {
        out.push(Sentence::new_unchecked(words.clone()));
        if !next_permutation(&mut words) {
            return out;
        }
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::parse("abcdef").unwrap()
    }

    fn s(text: &str) -> Sentence {
        abc().parse_sentence(text).unwrap()
    }

    fn p(text: &str) -> PSentence {
        abc().parse_psentence(text).unwrap()
    }

    fn r(x: &Sentence) -> String {
        abc().render_sentence(x)
    }

    fn rw(x: &WeakSentence) -> String {
        abc().render_weak(x)
    }

    #[test]
    fn concatenations() {
        assert_eq!(r(&concat(&s("(bc,a)"), &s("(b,ac)"))), "(bc,a,b,ac)");
        assert_eq!(r(&concat(&s("()"), &s("(ab)"))), "(ab)");
        assert_eq!(r(&concat(&s("(a)"), &s("()"))), "(a)");
        assert_eq!(r(&near_concat(&s("(bc,a)"), &s("(b,ac)")).unwrap()), "(bc,ab,ac)");
        assert_eq!(r(&near_concat(&s("(a)"), &s("(b)")).unwrap()), "(ab)");
        assert_eq!(r(&near_concat(&s("(ab)"), &s("(c,d)")).unwrap()), "(abc,d)");
        assert_eq!(near_concat(&s("()"), &s("(a)")), Err(SentenceError::UndefinedOperand));
    }

    #[test]
    fn split_points_of_concatenation() {
        assert_eq!(s("(bc,a,b,ac)").split_positions(), vec![2, 3, 4]);
    }

    #[test]
    fn reversal_and_complement() {
        assert_eq!(r(&reversal(&s("(ab,cde)"))), "(cde,ab)");
        assert_eq!(r(&complement(&s("(ab,cde)"))), "(a,bc,d,e)");
        let i = s("(bc,a,b,ac)");
        assert_eq!(complement(&complement(&i)), i);
        assert_eq!(complement(&s("()")), s("()"));
    }

    #[test]
    fn flattening() {
        let a = abc();
        assert_eq!(r(&flatten(&a.parse_weak("(-,ab,-,c)").unwrap())), "(ab,c)");
        assert_eq!(r(&flatten(&a.parse_weak("(-,-)").unwrap())), "()");
        assert_eq!(r(&flatten(&a.parse_weak("(a,b)").unwrap())), "(a,b)");
    }

    #[test]
    fn sorting() {
        assert_eq!(r(sort_sentence(&s("(c,aba,bc)")).as_sentence()), "(aba,bc,c)");
        assert_eq!(r(sort_sentence(&s("()")).as_sentence()), "()");
        assert_eq!(r(sort_sentence(&s("(b,a,cc)")).as_sentence()), "(cc,a,b)");
        let a = abc();
        assert_eq!(r(sort_weak(&a.parse_weak("(-,b,a)").unwrap()).as_sentence()), "(a,b)");
    }

    #[test]
    fn refinement_sets() {
        let got: Vec<String> = refinements(&s("(bac)")).iter().map(r).collect();
        assert_eq!(got, vec!["(bac)", "(b,ac)", "(ba,c)", "(b,a,c)"]);
        let got: Vec<String> = coarsenings(&s("(a,b)")).iter().map(r).collect();
        assert_eq!(got, vec!["(ab)", "(a,b)"]);
        assert_eq!(refinements(&s("(ab,cde)")).len(), 8);
        assert!(refines(&s("(b,a,c)"), &s("(ba,c)")));
        assert!(!refines(&s("(ba,c)"), &s("(b,ac)")));
        assert!(!refines(&s("(a,b)"), &s("(ba)")));
    }

    #[test]
    fn right_containment() {
        let all = right_splittings(&s("(abc,def)"));
        assert_eq!(all.len(), 16);
        let (quot, _) = all.iter().find(|(_, part)| rw(part) == "(c,ef)").unwrap();
        assert_eq!(rw(quot), "(ab,d)");
        assert_eq!(right_splittings(&s("(ab,bc)")).len(), 9);
        let one: Vec<(String, String)> =
            right_splittings(&s("(a)")).iter().map(|(q, j)| (rw(q), rw(j))).collect();
        assert_eq!(one, vec![("(-)".to_string(), "(a)".to_string()), ("(a)".into(), "(-)".into())]);
    }

    #[test]
    fn left_containment_follows_the_prefix_rule() {
        let all = left_splittings(&s("(abc,def)"));
        let (_, quot) = all.iter().find(|(part, _)| rw(part) == "(a,de)").unwrap();
        assert_eq!(rw(quot), "(bc,f)");
        let (_, quot) = left_splittings(&s("(ab)")).into_iter().find(|(k, _)| rw(k) == "(a)").unwrap();
        assert_eq!(rw(&quot), "(b)");
        assert_eq!(left_splittings(&s("(a)")).len(), 2);
    }

    #[test]
    fn quasishuffle_of_two_pairs() {
        let mut got: Vec<String> = quasishuffles(&s("(a,bc)"), &s("(d,e)")).iter().map(r).collect();
        got.sort();
        let mut want = vec![
            "(a,bc,d,e)", "(a,bcd,e)", "(a,d,bc,e)", "(ad,bc,e)", "(a,d,bce)", "(ad,bce)",
            "(d,a,bc,e)", "(d,a,bce)", "(a,d,e,bc)", "(ad,e,bc)", "(d,a,e,bc)", "(d,ae,bc)",
            "(d,e,a,bc)",
        ];
        want.sort();
        assert_eq!(got, want);
        let mut sh: Vec<String> = shuffles(&s("(a)"), &s("(b)")).iter().map(r).collect();
        sh.sort();
        assert_eq!(sh, vec!["(a,b)", "(b,a)"]);
        assert_eq!(quasishuffles(&s("()"), &s("(d,e)")), vec![s("(d,e)")]);
        assert_eq!(shuffles(&s("(a,bc)"), &s("(d,e)")).len(), 6);
    }

    #[test]
    fn multisets() {
        let big = p("(aaa,ab,ab,ab,ca,ca)");
        let small = p("(aaa,ab,ab)");
        assert!(is_submultiset(&small, &big));
        assert_eq!(r(multiset_difference(&big, &small).unwrap().as_sentence()), "(ab,ca,ca)");
        assert_eq!(multiset_difference(&big, &PSentence::empty()).unwrap(), big);
        assert_eq!(multiset_difference(&big, &big).unwrap(), PSentence::empty());
        assert!(!is_submultiset(&big, &small));
        assert!(multiset_difference(&small, &big).is_err());
    }

    #[test]
    fn structure_counter() {
        assert_eq!(r_coefficient(&p("(bc,a)"), &p("(b)"), &p("(ab,bc)")), 1);
        assert_eq!(r_coefficient(&p("(a)"), &p("(a)"), &p("(a,a)")), 2);
        let q = p("(ab,c)");
        assert_eq!(r_coefficient(&q, &PSentence::empty(), &q), 1);
        assert_eq!(r_coefficient(&q, &PSentence::empty(), &p("(ab,a)")), 0);
        assert_eq!(r_coefficient(&p("(a)"), &p("(a)"), &p("(aaa)")), 0);
    }

    #[test]
    fn enumeration() {
        let ab = Alphabet::parse("ab").unwrap();
        let got: Vec<String> = enumerate_sentences(2, &ab).iter().map(|x| ab.render_sentence(x)).collect();
        assert_eq!(got, vec!["(aa)", "(ab)", "(ba)", "(bb)", "(a,a)", "(a,b)", "(b,a)", "(b,b)"]);
        assert_eq!(enumerate_sentences(0, &ab), vec![Sentence::empty()]);
        assert_eq!(enumerate_sentences(4, &ab).len(), 128);
        assert_eq!(count_sentences(4, 2), 128);
        let got: Vec<String> = rearrangements(&p("(ab,c,c)")).iter().map(r).collect();
        assert_eq!(got, vec!["(ab,c,c)", "(c,ab,c)", "(c,c,ab)"]);
        let ps = enumerate_psentences(2, &ab);
        let got: Vec<String> = ps.iter().map(|x| ab.render_sentence(x.as_sentence())).collect();
        assert_eq!(got, vec!["(aa)", "(ab)", "(ba)", "(bb)", "(a,a)", "(a,b)", "(b,b)"]);
        assert_eq!(partitions(4), vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }
}
