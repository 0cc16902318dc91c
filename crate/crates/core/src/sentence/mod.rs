//! Words, sentences and p-sentences over an ordered alphabet of colors.
//!
//! Colors are stored as their rank in the declared [`Alphabet`], so the
//! derived orderings on [`Word`] are the lexicographic order induced by the
//! alphabet. Text rendering and parsing always go through an alphabet.

mod ops;

pub use ops::*;

use std::cmp::{Ordering, Reverse};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SentenceError {
    #[error("alphabet must be non-empty")]
    EmptyAlphabet,
    #[error("duplicate color '{0}' in alphabet")]
    DuplicateColor(char),
    #[error("color '{0}' is not in the alphabet")]
    UnknownColor(char),
    #[error("sentences may not contain empty words")]
    EmptyWord,
    #[error("near-concatenation needs two non-empty sentences")]
    UndefinedOperand,
    #[error("{0} is not a submultiset of {1}")]
    NotContained(String, String),
    #[error("malformed sentence literal: {0}")]
    Syntax(String),
    #[error("{0} is not in canonical p-sentence order (expected {1})")]
    NotCanonical(String, String),
}

/// Ordered set of single-character colors. Declaration order is the total order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    colors: Vec<char>,
}

impl Alphabet {
    pub fn new(colors: impl IntoIterator<Item = char>) -> Result<Self, SentenceError> {
        let colors: Vec<char> = colors.into_iter().collect();
        if colors.is_empty() {
            return Err(SentenceError::EmptyAlphabet);
        }
        for (i, c) in colors.iter().enumerate() {
            if colors[..i].contains(c) {
                return Err(SentenceError::DuplicateColor(*c));
            }
        }
        if colors.len() > u8::MAX as usize {
            return Err(SentenceError::Syntax("alphabet too large".into()));
        }
        Ok(Self { colors })
    }

    /// Parses an alphabet from a string such as `"abc"`.
    pub fn parse(spec: &str) -> Result<Self, SentenceError> {
        Self::new(spec.chars().filter(|c| !c.is_whitespace()))
    }

    /// The one-letter alphabet `{a}`.
    pub fn unary() -> Self {
        Self { colors: vec!['a'] }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[char] {
        &self.colors
    }

    pub fn rank(&self, c: char) -> Result<u8, SentenceError> {
        self.colors
            .iter()
            .position(|&x| x == c)
            .map(|p| p as u8)
            .ok_or(SentenceError::UnknownColor(c))
    }

    pub fn color(&self, rank: u8) -> char {
        self.colors[rank as usize]
    }

    pub fn word(&self, text: &str) -> Result<Word, SentenceError> {
        text.chars().map(|c| self.rank(c)).collect::<Result<Vec<_>, _>>().map(Word)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.0.iter().map(|&r| self.color(r)).collect()
    }

    fn render_words<'a>(&self, words: impl Iterator<Item = &'a Word>) -> String {
        let parts: Vec<String> = words
            .map(|w| if w.is_empty() { "-".to_string() } else { self.render_word(w) })
            .collect();
        format!("({})", parts.join(","))
    }

    pub fn render_sentence(&self, s: &Sentence) -> String {
        self.render_words(s.words().iter())
    }

    pub fn render_weak(&self, s: &WeakSentence) -> String {
        self.render_words(s.words().iter())
    }

    fn split_literal(text: &str) -> Result<Vec<&str>, SentenceError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| SentenceError::Syntax(t.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        Ok(inner.split(',').map(str::trim).collect())
    }

    /// Parses `"(ab,c)"`; `"()"` is the empty sentence.
    pub fn parse_sentence(&self, text: &str) -> Result<Sentence, SentenceError> {
        let words = Self::split_literal(text)?
            .into_iter()
            .map(|w| self.word(w))
            .collect::<Result<Vec<_>, _>>()?;
        Sentence::new(words)
    }

    /// Parses a weak sentence; `-` marks an empty word, as in `"(-,ab,-,c)"`.
    pub fn parse_weak(&self, text: &str) -> Result<WeakSentence, SentenceError> {
        let words = Self::split_literal(text)?
            .into_iter()
            .map(|w| if w == "-" { Ok(Word::empty()) } else { self.word(w) })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WeakSentence::new(words))
    }

    /// Parses a p-sentence, rejecting input that is not already canonical.
    pub fn parse_psentence(&self, text: &str) -> Result<PSentence, SentenceError> {
        let s = self.parse_sentence(text)?;
        PSentence::from_canonical(s.clone()).ok_or_else(|| {
            SentenceError::NotCanonical(
                self.render_sentence(&s),
                self.render_sentence(sort_sentence(&s).as_sentence()),
            )
        })
    }

    /// All words of length `n` in lexicographic order.
    pub fn words_of_len(&self, n: usize) -> Vec<Word> {
        let k = self.len() as u8;
        let mut out = Vec::with_capacity((k as usize).pow(n as u32));
        let mut cur = vec![0u8; n];
        loop {
            out.push(Word(cur.clone()));
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < k {
                    break;
                }
                cur[i] = 0;
            }
        }
    }
}

/// A finite sequence of colors, stored by rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Uniform word of `n` copies of the color with rank `r`.
    pub fn repeat(r: u8, n: usize) -> Word {
        Word(vec![r; n])
    }
}

/// Graded lexicographic comparison: shorter words first, then lexicographic.
pub fn cmp_graded_lex(v: &Word, w: &Word) -> Ordering {
    v.len().cmp(&w.len()).then_with(|| v.0.cmp(&w.0))
}

/// Position of a word inside a p-sentence: longer words first, ties ascending.
pub(crate) fn canonical_key(w: &Word) -> (Reverse<usize>, &Word) {
    (Reverse(w.len()), w)
}

/// A finite sequence of non-empty words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Sentence(Vec<Word>);

impl Sentence {
    pub fn new(words: Vec<Word>) -> Result<Self, SentenceError> {
        if words.iter().any(Word::is_empty) {
            return Err(SentenceError::EmptyWord);
        }
        Ok(Sentence(words))
    }

    pub(crate) fn new_unchecked(words: Vec<Word>) -> Self {
        debug_assert!(words.iter().all(|w| !w.is_empty()));
        Sentence(words)
    }

    pub fn empty() -> Self {
        Sentence(Vec::new())
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn into_words(self) -> Vec<Word> {
        self.0
    }

    /// Number of colors, `|I|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    /// Number of words, `ℓ(I)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word lengths, the composition underlying the sentence.
    pub fn word_lengths(&self) -> Vec<usize> {
        self.0.iter().map(Word::len).collect()
    }

    /// Concatenation of all words.
    pub fn maximal_word(&self) -> Word {
        Word(self.0.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// Positions `i` (1-based, `1 <= i < |I|`) after which the sentence splits.
    pub fn split_positions(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for w in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += w.len();
            out.push(acc);
        }
        out
    }

    /// Cuts `word` after each of the sorted `positions`.
    pub fn from_splits(word: &Word, positions: &[usize]) -> Sentence {
        if word.is_empty() {
            return Sentence::empty();
        }
        let mut words = Vec::with_capacity(positions.len() + 1);
        let mut start = 0;
        for &p in positions {
            words.push(Word(word.0[start..p].to_vec()));
            start = p;
        }
        words.push(Word(word.0[start..].to_vec()));
        Sentence::new_unchecked(words)
    }

    pub fn to_weak(&self) -> WeakSentence {
        WeakSentence(self.0.clone())
    }
}

/// A sequence of possibly-empty words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeakSentence(Vec<Word>);

impl WeakSentence {
    pub fn new(words: Vec<Word>) -> Self {
        WeakSentence(words)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }
}

/// A sentence in canonical order: strictly decreasing word size, ties in
/// ascending lexicographic order. Indexes the bases of `Sym_A` and `PSym_A`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PSentence(Sentence);

impl PSentence {
    pub fn empty() -> Self {
        PSentence(Sentence::empty())
    }

    /// Accepts `s` only if it is already in canonical order.
    pub fn from_canonical(s: Sentence) -> Option<Self> {
        if is_canonical(&s) {
            Some(PSentence(s))
        } else {
            None
        }
    }

    pub(crate) fn from_sorted_words(words: Vec<Word>) -> Self {
        let s = Sentence::new_unchecked(words);
        debug_assert!(is_canonical(&s));
        PSentence(s)
    }

    pub fn as_sentence(&self) -> &Sentence {
        &self.0
    }

    pub fn into_sentence(self) -> Sentence {
        self.0
    }

    pub fn words(&self) -> &[Word] {
        self.0.words()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word lengths; a partition because of the canonical order.
    pub fn word_lengths(&self) -> Vec<usize> {
        self.0.word_lengths()
    }
}

pub fn is_canonical(s: &Sentence) -> bool {
    s.words()
        .windows(2)
        .all(|p| canonical_key(&p[0]) <= canonical_key(&p[1]))
}

/// Helper for `Display` of sentence-like values.
pub struct Rendered<'a, T>(pub &'a Alphabet, pub &'a T);

impl fmt::Display for Rendered<'_, Sentence> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render_sentence(self.1))
    }
}

impl fmt::Display for Rendered<'_, PSentence> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render_sentence(self.1.as_sentence()))
    }
}

impl fmt::Display for Rendered<'_, WeakSentence> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render_weak(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert_eq!(Alphabet::parse("aba"), Err(SentenceError::DuplicateColor('a')));
        assert_eq!(Alphabet::parse(""), Err(SentenceError::EmptyAlphabet));
    }

    #[test]
    fn graded_lex_examples() {
        let a = abc();
        let w = |s| a.word(s).unwrap();
        assert_eq!(cmp_graded_lex(&w("abc"), &w("acb")), Ordering::Less);
        assert_eq!(cmp_graded_lex(&w("acb"), &w("bac")), Ordering::Less);
        assert_eq!(cmp_graded_lex(&w("ab"), &w("ab")), Ordering::Equal);
        assert_eq!(cmp_graded_lex(&w("b"), &w("aa")), Ordering::Less);
    }

    #[test]
    fn declared_order_is_color_order() {
        let ba = Alphabet::parse("ba").unwrap();
        let w = |s| ba.word(s).unwrap();
        assert_eq!(cmp_graded_lex(&w("b"), &w("a")), Ordering::Less);
    }

    #[test]
    fn parse_and_render() {
        let a = abc();
        let s = a.parse_sentence("(ab, c)").unwrap();
        assert_eq!(a.render_sentence(&s), "(ab,c)");
        assert_eq!(a.render_sentence(&a.parse_sentence("()").unwrap()), "()");
        let k = a.parse_weak("(-,ab,-,c)").unwrap();
        assert_eq!(a.render_weak(&k), "(-,ab,-,c)");
        assert_eq!(a.parse_sentence("(ad)"), Err(SentenceError::UnknownColor('d')));
        assert!(matches!(a.parse_sentence("ab,c"), Err(SentenceError::Syntax(_))));
    }

    #[test]
    fn sentence_rejects_empty_words() {
        assert_eq!(Sentence::new(vec![Word::empty()]), Err(SentenceError::EmptyWord));
    }

    #[test]
    fn sizes_and_lengths() {
        let a = abc();
        let s = a.parse_sentence("(cb,aaa,c)").unwrap();
        assert_eq!(s.size(), 6);
        assert_eq!(s.len(), 3);
        assert_eq!(s.word_lengths(), vec![2, 3, 1]);
        assert_eq!(a.render_word(&s.maximal_word()), "cbaaac");
        assert_eq!(s.split_positions(), vec![2, 5]);
    }

    #[test]
    fn canonical_order_check() {
        let a = abc();
        let p = a.parse_sentence("(abb,cab,ba,cc,a,b)").unwrap();
        assert!(is_canonical(&p));
        assert!(a.parse_psentence("(b,a)").is_err());
        assert!(a.parse_psentence("(a,b)").is_ok());
    }
}
