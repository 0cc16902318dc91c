//! Colored semistandard tableaux, colored Kostka numbers and the two colored
//! Schur bases.
//!
//! Rows are listed top to bottom, longest first. A tableau's type is read
//! entry by entry: for each value, collect the colors of the cells holding it
//! from the bottom row upward, each row left to right.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::exec::Execution;
use crate::linear::{q, LinComb, Q};
use crate::sentence::{enumerate_psentences, is_canonical, Alphabet, PSentence, Sentence, WeakSentence, Word};
use crate::triangular::{invert_upper_unitriangular, is_upper_unitriangular};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row {row} has {got} entries but the shape needs {want}")]
    RowLength { row: usize, got: usize, want: usize },
    #[error("wrong number of rows: {got} given, shape has {want}")]
    RowCount { got: usize, want: usize },
    #[error("entries must be positive")]
    NonPositive,
    #[error("row {row} decreases at column {col}")]
    RowNotWeak { row: usize, col: usize },
    #[error("column {col} does not strictly increase at row {row}")]
    ColumnNotStrict { row: usize, col: usize },
}

/// Diagram of a p-sentence: row `i` holds the letters of its `i`-th word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredDiagram {
    shape: PSentence,
}

impl ColoredDiagram {
    pub fn new(shape: PSentence) -> Self {
        Self { shape }
    }

    pub fn shape(&self) -> &PSentence {
        &self.shape
    }

    pub fn color(&self, row: usize, col: usize) -> u8 {
        self.shape.words()[row].0[col]
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.shape.word_lengths()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredTableau {
    diagram: ColoredDiagram,
    entries: Vec<Vec<usize>>,
}

impl ColoredTableau {
    /// Checks shape, positivity, weak rows and strict columns.
    pub fn new(shape: PSentence, entries: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let lens = shape.word_lengths();
        if entries.len() != lens.len() {
            return Err(TableauError::RowCount { got: entries.len(), want: lens.len() });
        }
        for (row, (r, &want)) in entries.iter().zip(&lens).enumerate() {
            if r.len() != want {
                return Err(TableauError::RowLength { row, got: r.len(), want });
            }
            if r.contains(&0) {
                return Err(TableauError::NonPositive);
            }
            if let Some(col) = (1..r.len()).find(|&c| r[c - 1] > r[c]) {
                return Err(TableauError::RowNotWeak { row, col });
            }
            if row > 0 {
                if let Some(col) = (0..r.len()).find(|&c| entries[row - 1][c] >= r[c]) {
                    return Err(TableauError::ColumnNotStrict { row, col });
                }
            }
        }
        Ok(Self { diagram: ColoredDiagram::new(shape), entries })
    }

    pub fn diagram(&self) -> &ColoredDiagram {
        &self.diagram
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn max_entry(&self) -> usize {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.entries
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, v)| format!("{}{}", alphabet.color(self.diagram.color(r, c)), v))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

pub fn tableau_type(t: &ColoredTableau) -> WeakSentence {
    let mut words = vec![Vec::new(); t.max_entry()];
    for (r, row) in t.entries.iter().enumerate().rev() {
        for (c, &v) in row.iter().enumerate() {
            words[v - 1].push(t.diagram.color(r, c));
        }
    }
    WeakSentence::new(words.into_iter().map(Word).collect())
}

/// The type as a p-sentence when it is gap-free and canonically ordered.
pub fn admissible_type(t: &ColoredTableau) -> Option<PSentence> {
    let weak = tableau_type(t);
    if weak.words().iter().any(Word::is_empty) {
        return None;
    }
    let s = Sentence::new_unchecked(weak.words().to_vec());
    is_canonical(&s).then(|| PSentence::from_canonical(s)).flatten()
}

/// All fillings of the diagram of `shape` with entries in `1..=max_entry`,
/// rows weakly increasing and columns strictly increasing.
///
/// Cells are filled in column-major order, each column top to bottom.
pub fn enumerate_cssyt(shape: &PSentence, max_entry: usize) -> Vec<ColoredTableau> {
    let lens = shape.word_lengths();
    let width = lens.first().copied().unwrap_or(0);
    let heights: Vec<usize> = (0..width).map(|c| lens.iter().filter(|&&l| l > c).count()).collect();
    let mut grid: Vec<Vec<usize>> = lens.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill_column(&heights, max_entry, 0, 0, &mut grid, &mut |g| {
        out.push(ColoredTableau { diagram: ColoredDiagram::new(shape.clone()), entries: g.clone() })
    });
    out
}

fn fill_column(
    heights: &[usize],
    max_entry: usize,
    col: usize,
    row: usize,
    grid: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&Vec<Vec<usize>>),
) {
    if col == heights.len() {
        emit(grid);
        return;
    }
    if row == heights[col] {
        fill_column(heights, max_entry, col + 1, 0, grid, emit);
        return;
    }
    let from_left = if col > 0 { grid[row][col - 1] } else { 1 };
    let from_above = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
    // Leave room for the cells still below in this column.
    let cap = max_entry.saturating_sub(heights[col] - row - 1);
    for v in from_left.max(from_above)..=cap {
        grid[row][col] = v;
        fill_column(heights, max_entry, col, row + 1, grid, emit);
    }
    grid[row][col] = 0;
}

/// `𝒦_{P,Q}`: tableaux of shape `P` whose type is exactly `Q`.
pub fn colored_kostka(p: &PSentence, q_: &PSentence) -> u64 {
    if p.size() != q_.size() {
        return 0;
    }
    enumerate_cssyt(p, q_.len()).iter().filter(|t| admissible_type(t).as_ref() == Some(q_)).count() as u64
}

/// `s*_P = Σ_Q 𝒦_{P,Q} m_Q` in the colored monomial basis.
pub fn dual_schur_in_m(p: &PSentence) -> LinComb<PSentence> {
    let mut out = LinComb::zero();
    for t in enumerate_cssyt(p, p.size()) {
        if let Some(ty) = admissible_type(&t) {
            out.add_term(ty, q(1));
        }
    }
    out
}

/// Sorted multiset of letters, which every tableau of a shape shares with its type.
pub fn color_content(p: &PSentence) -> Vec<u8> {
    let mut v: Vec<u8> = p.words().iter().flat_map(|w| w.0.iter().copied()).collect();
    v.sort_unstable();
    v
}

/// Kostka matrix over an ordered list of p-sentences; `rows[i][j] = 𝒦_{order[i], order[j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub order: Vec<PSentence>,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct KostkaJson<'a> {
    order: Vec<String>,
    rows: &'a [Vec<i64>],
}

impl KostkaMatrix {
    /// Rows are filled from [`dual_schur_in_m`], one shape at a time.
    pub fn build(order: Vec<PSentence>, exec: Execution) -> Self {
        let pos: BTreeMap<&PSentence, usize> = order.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let rows = exec.map(&order, |p| {
            let mut row = vec![0i64; order.len()];
            for (ty, c) in dual_schur_in_m(p).iter() {
                let j = *pos.get(ty).expect("type has the same size and content as the shape");
                row[j] = i64::try_from(c.to_integer()).expect("Kostka numbers fit in i64");
            }
            row
        });
        Self { order, rows }
    }

    /// All p-sentences of size `n`, by word-length partition (reverse lexicographic)
    /// and then lexicographically on the word sequence.
    pub fn of_size(n: usize, alphabet: &Alphabet, exec: Execution) -> Self {
        Self::build(enumerate_psentences(n, alphabet), exec)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        is_upper_unitriangular(&self.rows)
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> serde_json::Value {
        let order = self.order.iter().map(|p| alphabet.render_sentence(p.as_sentence())).collect();
        serde_json::to_value(KostkaJson { order, rows: &self.rows }).expect("plain data serializes")
    }
}

struct Block {
    matrix: KostkaMatrix,
    inverse: Vec<Vec<BigInt>>,
    pos: BTreeMap<PSentence, usize>,
}

/// Kostka blocks by (size, color content) with their inverses, built on demand.
///
/// Nonzero entries only link p-sentences with the same letters, so each
/// content class is inverted on its own.
pub struct SchurTables {
    blocks: Mutex<BTreeMap<(usize, Vec<u8>), Arc<Block>>>,
    alphabet: Alphabet,
}

impl SchurTables {
    pub fn new(alphabet: &Alphabet) -> Self {
        Self { blocks: Mutex::default(), alphabet: alphabet.clone() }
    }

    fn block(&self, p: &PSentence) -> Arc<Block> {
        let key = (p.size(), color_content(p));
        if let Some(b) = self.blocks.lock().unwrap().get(&key) {
            return b.clone();
        }
        let order: Vec<PSentence> =
            enumerate_psentences(key.0, &self.alphabet).into_iter().filter(|x| color_content(x) == key.1).collect();
        let matrix = KostkaMatrix::build(order, Execution::default());
        let inverse = invert_upper_unitriangular(&matrix.rows);
        let pos = matrix.order.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let block = Arc::new(Block { matrix, inverse, pos });
        self.blocks.lock().unwrap().entry(key).or_insert(block).clone()
    }

    fn expand(&self, f: &LinComb<PSentence>, entry: impl Fn(&Block, usize, usize) -> Q) -> LinComb<PSentence> {
        f.extend_linear(|p| {
            let b = self.block(p);
            let i = b.pos[p];
            b.matrix.order.iter().enumerate().map(|(j, x)| (x.clone(), entry(&b, i, j))).collect()
        })
    }

    /// `s_P = Σ_Q (𝒦⁻¹)_{Q,P} h_Q`.
    pub fn s_to_h(&self, f: &LinComb<PSentence>) -> LinComb<PSentence> {
        self.expand(f, |b, i, j| Q::from_integer(b.inverse[j][i].clone()))
    }

    /// `h_Q = Σ_P 𝒦_{P,Q} s_P`.
    pub fn h_to_s(&self, f: &LinComb<PSentence>) -> LinComb<PSentence> {
        self.expand(f, |b, i, j| q(b.matrix.rows[j][i]))
    }

    /// `s*_P = Σ_Q 𝒦_{P,Q} m_Q`.
    pub fn sstar_to_m(&self, f: &LinComb<PSentence>) -> LinComb<PSentence> {
        self.expand(f, |b, i, j| q(b.matrix.rows[i][j]))
    }

    /// `m_Q = Σ_P (𝒦⁻¹)_{Q,P} s*_P`.
    pub fn m_to_sstar(&self, f: &LinComb<PSentence>) -> LinComb<PSentence> {
        self.expand(f, |b, i, j| Q::from_integer(b.inverse[i][j].clone()))
    }
}

/// `s_P` in the `h` basis.
pub fn schur_in_h(p: &PSentence, alphabet: &Alphabet) -> LinComb<PSentence> {
    SchurTables::new(alphabet).s_to_h(&LinComb::singleton(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    fn p(t: &str) -> PSentence {
        alpha().parse_psentence(t).unwrap()
    }

    #[test]
    fn displayed_types() {
        let t = ColoredTableau::new(p("(abb,ca)"), vec![vec![1, 1, 1], vec![2, 2]]).unwrap();
        assert_eq!(alpha().render_weak(&tableau_type(&t)), "(abb,ca)");
        let t = ColoredTableau::new(p("(abb,ca)"), vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(alpha().render_weak(&tableau_type(&t)), "(ab,cb,a)");
        let t = ColoredTableau::new(p("(a)"), vec![vec![3]]).unwrap();
        assert_eq!(tableau_type(&t).words().iter().map(Word::len).collect::<Vec<_>>(), vec![0, 0, 1]);
        assert!(ColoredTableau::new(p("(aa,a)"), vec![vec![1, 2], vec![1]]).is_err());
        assert!(ColoredTableau::new(p("(aa,a)"), vec![vec![2, 1], vec![3]]).is_err());
    }

    #[test]
    fn dual_schur_examples() {
        let want: LinComb<PSentence> =
            ["(abb,ca)", "(ab,cb,a)", "(ab,ca,b)"].iter().map(|t| (p(t), q(1))).collect();
        assert_eq!(dual_schur_in_m(&p("(abb,ca)")), want);
        let admissible: Vec<_> =
            enumerate_cssyt(&p("(abb,ca)"), 3).into_iter().filter(|t| admissible_type(t).is_some()).collect();
        assert_eq!(admissible.len(), 3);
        assert_eq!(enumerate_cssyt(&p("(aa,a)"), 3).len(), 8);
        assert_eq!(enumerate_cssyt(&p("(a)"), 1).len(), 1);
        assert_eq!(colored_kostka(&p("(aaa,aa)"), &p("(a,a,a,a,a)")), 5);
        assert_eq!(colored_kostka(&p("(abb,ca)"), &p("(ab,cb,a)")), 1);
    }

    #[test]
    fn unary_schur_in_h() {
        let a = Alphabet::unary();
        let s = schur_in_h(&a.parse_psentence("(a,a)").unwrap(), &a);
        let want: LinComb<PSentence> =
            [(a.parse_psentence("(a,a)").unwrap(), q(1)), (a.parse_psentence("(aa)").unwrap(), q(-1))]
                .into_iter()
                .collect();
        assert_eq!(s, want);
    }

    #[test]
    fn kostka_matrix_shape() {
        let ab = Alphabet::parse("ab").unwrap();
        for n in 0..=4 {
            assert!(KostkaMatrix::of_size(n, &ab, Execution::Sequential).is_upper_unitriangular());
        }
        let json = KostkaMatrix::of_size(1, &ab, Execution::Sequential).to_json(&ab);
        assert_eq!(json.to_string(), r#"{"order":["(a)","(b)"],"rows":[[1,0],[0,1]]}"#);
    }
}
