//! Tagged linear combinations: which algebra, which basis, which index.
//!
//! This is the value layer shared by the expression evaluator and the CLI.
//! Typed kernels work on bare indices; here every key also carries its basis
//! and every sum its algebra, and rendering is deterministic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::classical::{Composition, Partition};
use crate::linear::{render_abs, LinComb, Q};
use crate::sentence::{Alphabet, PSentence, Sentence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    NSymA,
    QSymA,
    SymA,
    PSymA,
    Sym,
    QSym,
    NSym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// `H`, complete homogeneous noncommutative.
    H,
    /// `M`, monomial quasisymmetric.
    M,
    F,
    R,
    E,
    /// `m`
    Mono,
    /// `h`
    Homog,
    /// `e`
    Elem,
    /// `s`
    Schur,
    /// `sstar`
    DualSchur,
}

impl Algebra {
    pub const ALL: [Algebra; 7] =
        [Algebra::NSymA, Algebra::QSymA, Algebra::SymA, Algebra::PSymA, Algebra::Sym, Algebra::QSym, Algebra::NSym];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::NSymA => "NSymA",
            Algebra::QSymA => "QSymA",
            Algebra::SymA => "SymA",
            Algebra::PSymA => "PSymA",
            Algebra::Sym => "Sym",
            Algebra::QSym => "QSym",
            Algebra::NSym => "NSym",
        }
    }

    pub fn is_colored(self) -> bool {
        matches!(self, Algebra::NSymA | Algebra::QSymA | Algebra::SymA | Algebra::PSymA)
    }

    pub fn bases(self) -> &'static [Basis] {
        use Basis::*;
        match self {
            Algebra::NSymA => &[H],
            Algebra::QSymA => &[M],
            Algebra::SymA => &[Mono, DualSchur],
            Algebra::PSymA => &[Homog, Schur],
            Algebra::Sym => &[Mono, Homog, Elem, Schur],
            Algebra::QSym => &[M, F],
            Algebra::NSym => &[H, R, E],
        }
    }

    /// The basis carrying the structure maps; everything else converts through it.
    pub fn distinguished(self) -> Basis {
        self.bases()[0]
    }

    pub fn has_basis(self, b: Basis) -> bool {
        self.bases().contains(&b)
    }

    /// The algebra a basis symbol lands in for colored or integer indices.
    pub fn for_basis(b: Basis, colored: bool) -> Option<Algebra> {
        Algebra::ALL.into_iter().find(|a| a.is_colored() == colored && a.has_basis(b))
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Basis {
    pub const ALL: [Basis; 10] = [
        Basis::H,
        Basis::M,
        Basis::F,
        Basis::R,
        Basis::E,
        Basis::Mono,
        Basis::Homog,
        Basis::Elem,
        Basis::Schur,
        Basis::DualSchur,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::H => "H",
            Basis::M => "M",
            Basis::F => "F",
            Basis::R => "R",
            Basis::E => "E",
            Basis::Mono => "m",
            Basis::Homog => "h",
            Basis::Elem => "e",
            Basis::Schur => "s",
            Basis::DualSchur => "sstar",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == s)
    }

    /// Whether colored indices are p-sentences (otherwise sentences), and
    /// classical indices partitions (otherwise compositions).
    pub fn symmetric_index(self) -> bool {
        matches!(self, Basis::Mono | Basis::Homog | Basis::Elem | Basis::Schur | Basis::DualSchur)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Sentence(Sentence),
    PSentence(PSentence),
    Composition(Composition),
    Partition(Partition),
}

impl Index {
    pub fn size(&self) -> usize {
        match self {
            Index::Sentence(s) => s.size(),
            Index::PSentence(p) => p.size(),
            Index::Composition(c) => c.size(),
            Index::Partition(p) => p.size(),
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            Index::Sentence(s) => alphabet.render_sentence(s),
            Index::PSentence(p) => alphabet.render_sentence(p.as_sentence()),
            Index::Composition(c) => c.to_string(),
            Index::Partition(p) => p.to_string(),
        }
    }

    /// The empty index of the right kind for `(algebra, basis)`.
    pub fn empty(algebra: Algebra, basis: Basis) -> Index {
        match (algebra.is_colored(), basis.symmetric_index()) {
            (true, false) => Index::Sentence(Sentence::empty()),
            (true, true) => Index::PSentence(PSentence::empty()),
            (false, false) => Index::Composition(Composition::default()),
            (false, true) => Index::Partition(Partition::default()),
        }
    }

    fn fits(&self, algebra: Algebra, basis: Basis) -> bool {
        std::mem::discriminant(self) == std::mem::discriminant(&Index::empty(algebra, basis))
    }
}

/// Conversion between typed kernel keys and [`Index`].
pub trait IndexKind: Ord + Clone {
    fn wrap(self) -> Index;
    fn unwrap(i: &Index) -> &Self;
}

macro_rules! index_kind {
    ($t:ty, $v:ident) => {
        impl IndexKind for $t {
            fn wrap(self) -> Index {
                Index::$v(self)
            }

            fn unwrap(i: &Index) -> &Self {
                match i {
                    Index::$v(x) => x,
                    other => panic!("expected {} index, got {:?}", stringify!($v), other),
                }
            }
        }
    };
}

index_kind!(Sentence, Sentence);
index_kind!(PSentence, PSentence);
index_kind!(Composition, Composition);
index_kind!(Partition, Partition);

pub fn typed<K: IndexKind>(f: &LinComb<Index>) -> LinComb<K> {
    f.map_keys(|i| K::unwrap(i).clone())
}

pub fn untyped<K: IndexKind>(f: &LinComb<K>) -> LinComb<Index> {
    f.map_keys(|k| k.clone().wrap())
}

pub fn typed_tensor<K: IndexKind>(t: &LinComb<(Index, Index)>) -> LinComb<(K, K)> {
    t.map_keys(|(a, b)| (K::unwrap(a).clone(), K::unwrap(b).clone()))
}

pub fn untyped_tensor<K: IndexKind>(t: &LinComb<(K, K)>) -> LinComb<(Index, Index)> {
    t.map_keys(|(a, b)| (a.clone().wrap(), b.clone().wrap()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub basis: Basis,
    pub index: Index,
}

impl BasisKey {
    pub fn degree(&self) -> usize {
        self.index.size()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("{}{}", self.basis.symbol(), self.index.render(alphabet))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormalError {
    #[error("cannot combine {0} with {1}")]
    AlgebraMismatch(Algebra, Algebra),
    #[error("{0} has no basis {1}")]
    IllegalBasis(Algebra, Basis),
    #[error("index kind does not match basis {1} of {0}")]
    IndexKind(Algebra, Basis),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum {
    pub algebra: Algebra,
    pub terms: LinComb<BasisKey>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSum {
    pub algebra: Algebra,
    pub terms: LinComb<(BasisKey, BasisKey)>,
}

fn check_key(algebra: Algebra, key: &BasisKey) -> Result<(), FormalError> {
    if !algebra.has_basis(key.basis) {
        return Err(FormalError::IllegalBasis(algebra, key.basis));
    }
    if !key.index.fits(algebra, key.basis) {
        return Err(FormalError::IndexKind(algebra, key.basis));
    }
    Ok(())
}

impl FormalSum {
    pub fn zero(algebra: Algebra) -> Self {
        Self { algebra, terms: LinComb::zero() }
    }

    pub fn unit(algebra: Algebra) -> Self {
        let basis = algebra.distinguished();
        Self { algebra, terms: LinComb::singleton(BasisKey { basis, index: Index::empty(algebra, basis) }) }
    }

    pub fn singleton(algebra: Algebra, key: BasisKey) -> Result<Self, FormalError> {
        check_key(algebra, &key)?;
        Ok(Self { algebra, terms: LinComb::singleton(key) })
    }

    /// All terms in one basis, from bare indices.
    pub fn in_basis(algebra: Algebra, basis: Basis, f: &LinComb<Index>) -> Self {
        debug_assert!(algebra.has_basis(basis));
        Self { algebra, terms: f.map_keys(|i| BasisKey { basis, index: i.clone() }) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn same(&self, other: &Self) -> Result<(), FormalError> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(FormalError::AlgebraMismatch(self.algebra, other.algebra))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FormalError> {
        self.same(other)?;
        Ok(Self { algebra: self.algebra, terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FormalError> {
        self.same(other)?;
        Ok(Self { algebra: self.algebra, terms: self.terms.sub(&other.terms) })
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { algebra: self.algebra, terms: self.terms.scale(c) }
    }

    /// The single basis all terms use, if there is one. Zero has none.
    pub fn sole_basis(&self) -> Option<Basis> {
        let mut bases = self.terms.keys().map(|k| k.basis);
        let first = bases.next()?;
        bases.all(|b| b == first).then_some(first)
    }

    /// Terms grouped by basis.
    pub fn by_basis(&self) -> Vec<(Basis, LinComb<Index>)> {
        let mut out: Vec<(Basis, LinComb<Index>)> = Vec::new();
        for (k, c) in self.terms.iter() {
            match out.iter_mut().find(|(b, _)| *b == k.basis) {
                Some((_, f)) => f.add_term(k.index.clone(), c.clone()),
                None => out.push((k.basis, LinComb::term(k.index.clone(), c.clone()))),
            }
        }
        out
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        render_terms(self.terms.iter().map(|(k, c)| (k.degree(), k.render(alphabet), c)))
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        let mut rows: Vec<(usize, String, Value)> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let idx = k.index.render(alphabet);
                let text = k.render(alphabet);
                let mut v = json!({ "basis": k.basis.symbol(), "index": idx });
                attach_coeff(&mut v, c);
                (k.degree(), text, v)
            })
            .collect();
        rows.sort_by(|a, b| cmp_rendered(a.0, &a.1, b.0, &b.1));
        Value::Array(rows.into_iter().map(|r| r.2).collect())
    }
}

impl TensorSum {
    pub fn zero(algebra: Algebra) -> Self {
        Self { algebra, terms: LinComb::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn same(&self, other: &Self) -> Result<(), FormalError> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(FormalError::AlgebraMismatch(self.algebra, other.algebra))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FormalError> {
        self.same(other)?;
        Ok(Self { algebra: self.algebra, terms: self.terms.add(&other.terms) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FormalError> {
        self.same(other)?;
        Ok(Self { algebra: self.algebra, terms: self.terms.sub(&other.terms) })
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { algebra: self.algebra, terms: self.terms.scale(c) }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        render_terms(self.terms.iter().map(|((a, b), c)| {
            (a.degree() + b.degree(), format!("{} ⊗ {}", a.render(alphabet), b.render(alphabet)), c)
        }))
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        let mut rows: Vec<(usize, String, Value)> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let text = format!("{} ⊗ {}", a.render(alphabet), b.render(alphabet));
                let mut v = json!({
                    "left": { "basis": a.basis.symbol(), "index": a.index.render(alphabet) },
                    "right": { "basis": b.basis.symbol(), "index": b.index.render(alphabet) },
                });
                attach_coeff(&mut v, c);
                (a.degree() + b.degree(), text, v)
            })
            .collect();
        rows.sort_by(|x, y| cmp_rendered(x.0, &x.1, y.0, &y.1));
        Value::Array(rows.into_iter().map(|r| r.2).collect())
    }
}

fn cmp_rendered(da: usize, ta: &str, db: usize, tb: &str) -> Ordering {
    da.cmp(&db).then_with(|| ta.cmp(tb))
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn attach_coeff(v: &mut Value, c: &Q) {
    v["num"] = int_json(c.numer());
    v["den"] = int_json(c.denom());
}

/// `{num, den}` for a bare rational.
pub fn scalar_json(c: &Q) -> Value {
    let mut v = json!({});
    attach_coeff(&mut v, c);
    v
}

/// Integers render plainly, other rationals as `n/d`.
pub fn render_scalar(c: &Q) -> String {
    if c.is_negative() {
        format!("-{}", render_abs(c))
    } else {
        render_abs(c)
    }
}

/// `c1*X + c2*Y - c3*Z`, ordered by degree and then text; `0` when empty.
fn render_terms<'a>(items: impl Iterator<Item = (usize, String, &'a Q)>) -> String {
    let mut items: Vec<(usize, String, &Q)> = items.collect();
    if items.is_empty() {
        return "0".into();
    }
    items.sort_by(|a, b| cmp_rendered(a.0, &a.1, b.0, &b.1));
    let mut out = String::new();
    for (i, (_, text, c)) in items.iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        debug_assert!(!c.is_zero());
        out.push_str(&render_abs(c));
        out.push('*');
        out.push_str(text);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{q, q_frac};

    fn alpha() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    fn h(t: &str) -> BasisKey {
        BasisKey { basis: Basis::H, index: Index::Sentence(alpha().parse_sentence(t).unwrap()) }
    }

    #[test]
    fn arithmetic_and_rendering() {
        let a = FormalSum::singleton(Algebra::NSymA, h("(a)")).unwrap();
        let five = a.scale(&q(2)).add(&a.scale(&q(3))).unwrap();
        assert_eq!(five.render(&alpha()), "5*H(a)");
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.sub(&a).unwrap().render(&alpha()), "0");
        let mixed = FormalSum::singleton(Algebra::NSymA, h("(c,ab)"))
            .unwrap()
            .scale(&q(-2))
            .add(&FormalSum::singleton(Algebra::NSymA, h("(ab,c)")).unwrap().scale(&q_frac(1, 2)))
            .unwrap()
            .add(&FormalSum::unit(Algebra::NSymA))
            .unwrap();
        assert_eq!(mixed.render(&alpha()), "1*H() + 1/2*H(ab,c) - 2*H(c,ab)");
        let json = mixed.to_json(&alpha()).to_string();
        assert_eq!(
            json,
            r#"[{"basis":"H","den":1,"index":"()","num":1},{"basis":"H","den":2,"index":"(ab,c)","num":1},{"basis":"H","den":1,"index":"(c,ab)","num":-2}]"#
        );
    }

    #[test]
    fn legality() {
        assert_eq!(
            FormalSum::singleton(Algebra::SymA, h("(a)")).unwrap_err(),
            FormalError::IllegalBasis(Algebra::SymA, Basis::H)
        );
        let bad = BasisKey { basis: Basis::H, index: Index::Composition(Composition(vec![1])) };
        assert!(FormalSum::singleton(Algebra::NSymA, bad).is_err());
        let a = FormalSum::unit(Algebra::NSymA);
        assert!(a.add(&FormalSum::unit(Algebra::QSymA)).is_err());
        assert_eq!(Algebra::for_basis(Basis::Homog, true), Some(Algebra::PSymA));
        assert_eq!(Algebra::for_basis(Basis::Homog, false), Some(Algebra::Sym));
        assert_eq!(Algebra::for_basis(Basis::DualSchur, false), None);
        assert_eq!(Algebra::for_basis(Basis::F, true), None);
    }

    #[test]
    fn tensor_rendering() {
        let t = TensorSum {
            algebra: Algebra::NSymA,
            terms: LinComb::singleton((h("(a)"), h("()"))).add(&LinComb::term((h("()"), h("(a)")), q(-1))),
        };
        assert_eq!(t.render(&alpha()), "-1*H() ⊗ H(a) + 1*H(a) ⊗ H()");
    }
}
