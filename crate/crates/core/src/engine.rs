//! Structure maps on tagged sums.
//!
//! Each algebra has a distinguished basis with native kernels. Input in any
//! other basis is converted to it, operated on, and converted back when the
//! input used a single basis.

use thiserror::Error;

use crate::classical::bases::{nsym_from_h, nsym_to_h, omega, qsym_from_m, qsym_to_m, sym_convert, NSymBasis, QSymBasis, SymBasis};
use crate::classical::{self, direct, Composition, NSymH, Partition, QSymM, SymH, SymM};
use crate::formal::{
    typed, untyped, untyped_tensor, Algebra, Basis, BasisKey, FormalError, FormalSum, Index, TensorSum,
};
use crate::hopf::{self, GradedHopf, NSymA, NotSymmetric, PSymA, QSymA, SymA};
use crate::linear::{bilinear, LinComb, Q};
use crate::sentence::{Alphabet, PSentence, Sentence};
use crate::tableaux::SchurTables;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Formal(#[from] FormalError),
    #[error("{op} is not defined on {algebra}")]
    Unsupported { op: &'static str, algebra: Algebra },
    #[error("cannot convert {from} to basis {to}")]
    Conversion { from: Algebra, to: Basis },
    #[error("cannot pair {0} with {1}")]
    Pairing(Algebra, Algebra),
    #[error("not symmetric: {first} has coefficient {first_coeff} but {second} has {second_coeff}")]
    NotSymmetric { first: String, first_coeff: String, second: String, second_coeff: String },
}

type Idx = LinComb<Index>;
type IdxTensor = LinComb<(Index, Index)>;

pub struct Engine {
    alphabet: Alphabet,
    nsym: NSymA,
    qsym: QSymA,
    sym: SymA,
    psym: PSymA,
    sym_m: SymM,
    sym_h: SymH,
    qsym_m: QSymM,
    nsym_h: NSymH,
    schur: SchurTables,
}

fn sym_basis(b: Basis) -> SymBasis {
    match b {
        Basis::Mono => SymBasis::M,
        Basis::Homog => SymBasis::H,
        Basis::Elem => SymBasis::E,
        Basis::Schur => SymBasis::S,
        other => unreachable!("{other} is not a Sym basis"),
    }
}

fn nsym_basis(b: Basis) -> NSymBasis {
    match b {
        Basis::H => NSymBasis::H,
        Basis::R => NSymBasis::R,
        Basis::E => NSymBasis::E,
        other => unreachable!("{other} is not an NSym basis"),
    }
}

fn qsym_basis(b: Basis) -> QSymBasis {
    match b {
        Basis::M => QSymBasis::M,
        Basis::F => QSymBasis::F,
        other => unreachable!("{other} is not a QSym basis"),
    }
}

fn map_tensor(t: &IdxTensor, f: impl Fn(&Idx) -> Idx) -> IdxTensor {
    t.extend_linear(|(a, b)| {
        let l = f(&LinComb::singleton(a.clone()));
        let r = f(&LinComb::singleton(b.clone()));
        bilinear(&l, &r, |x, y| LinComb::singleton((x.clone(), y.clone())))
    })
}

impl Engine {
    pub fn new(alphabet: Alphabet) -> Self {
        Self {
            nsym: NSymA::new(alphabet.clone()),
            qsym: QSymA::new(alphabet.clone()),
            sym: SymA::new(alphabet.clone()),
            psym: PSymA::new(alphabet.clone()),
            sym_m: SymM::new(),
            sym_h: SymH::new(),
            qsym_m: QSymM::new(),
            nsym_h: NSymH::new(),
            schur: SchurTables::new(&alphabet),
            alphabet,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn schur(&self) -> &SchurTables {
        &self.schur
    }

    fn not_symmetric(&self, e: NotSymmetric) -> EngineError {
        EngineError::NotSymmetric {
            first: format!("M{}", self.alphabet.render_sentence(&e.first)),
            first_coeff: e.first_coeff.to_string(),
            second: format!("M{}", self.alphabet.render_sentence(&e.second)),
            second_coeff: e.second_coeff.to_string(),
        }
    }

    /// Re-expresses `f`, given in `basis` of `alg`, in the distinguished basis.
    fn to_dist(&self, alg: Algebra, basis: Basis, f: &Idx) -> Idx {
        if basis == alg.distinguished() {
            return f.clone();
        }
        match alg {
            Algebra::SymA => untyped(&self.schur.sstar_to_m(&typed::<PSentence>(f))),
            Algebra::PSymA => untyped(&self.schur.s_to_h(&typed::<PSentence>(f))),
            Algebra::Sym => untyped(&sym_convert(&typed::<Partition>(f), sym_basis(basis), SymBasis::M)),
            Algebra::QSym => untyped(&qsym_to_m(&typed::<Composition>(f), qsym_basis(basis))),
            Algebra::NSym => untyped(&nsym_to_h(&typed::<Composition>(f), nsym_basis(basis))),
            Algebra::NSymA | Algebra::QSymA => unreachable!("single-basis algebra"),
        }
    }

    fn from_dist(&self, alg: Algebra, basis: Basis, f: &Idx) -> Idx {
        if basis == alg.distinguished() {
            return f.clone();
        }
        match alg {
            Algebra::SymA => untyped(&self.schur.m_to_sstar(&typed::<PSentence>(f))),
            Algebra::PSymA => untyped(&self.schur.h_to_s(&typed::<PSentence>(f))),
            Algebra::Sym => untyped(&sym_convert(&typed::<Partition>(f), SymBasis::M, sym_basis(basis))),
            Algebra::QSym => untyped(&qsym_from_m(&typed::<Composition>(f), qsym_basis(basis))),
            Algebra::NSym => untyped(&nsym_from_h(&typed::<Composition>(f), nsym_basis(basis))),
            Algebra::NSymA | Algebra::QSymA => unreachable!("single-basis algebra"),
        }
    }

    /// All of `f` in the distinguished basis, as bare indices.
    pub fn distinguished(&self, f: &FormalSum) -> Idx {
        let mut out = LinComb::zero();
        for (b, part) in f.by_basis() {
            out = out.add(&self.to_dist(f.algebra, b, &part));
        }
        out
    }

    fn dist_mul(&self, alg: Algebra, f: &Idx, g: &Idx) -> Idx {
        fn go<H: GradedHopf>(h: &H, f: &Idx, g: &Idx) -> Idx
        where
            H::Key: crate::formal::IndexKind,
        {
            untyped(&h.mul(&typed(f), &typed(g)))
        }
        match alg {
            Algebra::NSymA => go(&self.nsym, f, g),
            Algebra::QSymA => go(&self.qsym, f, g),
            Algebra::SymA => go(&self.sym, f, g),
            Algebra::PSymA => go(&self.psym, f, g),
            Algebra::Sym => go(&self.sym_m, f, g),
            Algebra::QSym => go(&self.qsym_m, f, g),
            Algebra::NSym => go(&self.nsym_h, f, g),
        }
    }

    fn dist_delta(&self, alg: Algebra, f: &Idx) -> IdxTensor {
        fn go<H: GradedHopf>(h: &H, f: &Idx) -> IdxTensor
        where
            H::Key: crate::formal::IndexKind,
        {
            untyped_tensor(&h.delta(&typed(f)))
        }
        match alg {
            Algebra::NSymA => go(&self.nsym, f),
            Algebra::QSymA => go(&self.qsym, f),
            Algebra::SymA => go(&self.sym, f),
            Algebra::PSymA => go(&self.psym, f),
            Algebra::Sym => go(&self.sym_m, f),
            Algebra::QSym => go(&self.qsym_m, f),
            Algebra::NSym => go(&self.nsym_h, f),
        }
    }

    fn dist_antipode(&self, alg: Algebra, f: &Idx) -> Idx {
        fn go<H: GradedHopf>(h: &H, f: &Idx) -> Idx
        where
            H::Key: crate::formal::IndexKind,
        {
            untyped(&h.antipode(&typed(f)))
        }
        match alg {
            Algebra::NSymA => go(&self.nsym, f),
            Algebra::QSymA => go(&self.qsym, f),
            Algebra::SymA => go(&self.sym, f),
            Algebra::PSymA => go(&self.psym, f),
            Algebra::Sym => go(&self.sym_m, f),
            Algebra::QSym => go(&self.qsym_m, f),
            Algebra::NSym => go(&self.nsym_h, f),
        }
    }

    /// Products available directly on a basis other than the distinguished one.
    fn native_mul(&self, alg: Algebra, basis: Basis, f: &Idx, g: &Idx) -> Option<Idx> {
        let parts = |op: fn(&Partition, &Partition) -> LinComb<Partition>| {
            untyped(&bilinear(&typed::<Partition>(f), &typed::<Partition>(g), op))
        };
        let comps = |op: fn(&Composition, &Composition) -> LinComb<Composition>| {
            untyped(&bilinear(&typed::<Composition>(f), &typed::<Composition>(g), op))
        };
        match (alg, basis) {
            (Algebra::Sym, Basis::Homog) => Some(untyped(&self.sym_h.mul(&typed(f), &typed(g)))),
            // e_λ e_μ = e_{λ ∪ μ}, the same rule as for h.
            (Algebra::Sym, Basis::Elem) => Some(parts(direct::h_product)),
            (Algebra::NSym, Basis::R) => Some(comps(direct::ribbon_product)),
            (Algebra::NSym, Basis::E) => Some(comps(direct::nsym_h_product)),
            _ => None,
        }
    }

    pub fn convert(&self, f: &FormalSum, target: Basis) -> Result<FormalSum, EngineError> {
        match (f.algebra, target) {
            (a, b) if a.has_basis(b) => {
                let dist = self.distinguished(f);
                Ok(FormalSum::in_basis(a, b, &self.from_dist(a, b, &dist)))
            }
            (Algebra::QSymA, Basis::Mono | Basis::DualSchur) => {
                let m = hopf::m_from_m_basis(&typed::<Sentence>(&self.distinguished(f)))
                    .map_err(|e| self.not_symmetric(e))?;
                self.convert(&FormalSum::in_basis(Algebra::SymA, Basis::Mono, &untyped(&m)), target)
            }
            (Algebra::QSym, Basis::Mono | Basis::Homog | Basis::Elem | Basis::Schur) => {
                let comps = typed::<Composition>(&self.distinguished(f));
                let m = hopf::m_from_m_basis(&comps.map_keys(classical::comp_to_sentence)).map_err(|e| {
                    EngineError::NotSymmetric {
                        first: format!("M({})", join_lengths(&e.first)),
                        first_coeff: e.first_coeff.to_string(),
                        second: format!("M({})", join_lengths(&e.second)),
                        second_coeff: e.second_coeff.to_string(),
                    }
                })?;
                let parts = m.map_keys(classical::psentence_to_part);
                self.convert(&FormalSum::in_basis(Algebra::Sym, Basis::Mono, &untyped(&parts)), target)
            }
            (from, to) => Err(EngineError::Conversion { from, to }),
        }
    }

    pub fn product(&self, f: &FormalSum, g: &FormalSum) -> Result<FormalSum, EngineError> {
        if f.algebra != g.algebra {
            return Err(FormalError::AlgebraMismatch(f.algebra, g.algebra).into());
        }
        let alg = f.algebra;
        let shared = match (f.sole_basis(), g.sole_basis()) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        if let Some(b) = shared {
            let (fi, gi) = (strip(f), strip(g));
            if b == alg.distinguished() {
                return Ok(FormalSum::in_basis(alg, b, &self.dist_mul(alg, &fi, &gi)));
            }
            if let Some(r) = self.native_mul(alg, b, &fi, &gi) {
                return Ok(FormalSum::in_basis(alg, b, &r));
            }
        }
        let r = self.dist_mul(alg, &self.distinguished(f), &self.distinguished(g));
        Ok(self.back(alg, shared, r))
    }

    /// Result in `basis` when the inputs shared one, else in the distinguished basis.
    fn back(&self, alg: Algebra, basis: Option<Basis>, r: Idx) -> FormalSum {
        let b = basis.unwrap_or(alg.distinguished());
        FormalSum::in_basis(alg, b, &self.from_dist(alg, b, &r))
    }

    pub fn coproduct(&self, f: &FormalSum) -> TensorSum {
        let alg = f.algebra;
        let t = self.dist_delta(alg, &self.distinguished(f));
        let b = f.sole_basis().unwrap_or(alg.distinguished());
        let t = if b == alg.distinguished() { t } else { map_tensor(&t, |x| self.from_dist(alg, b, x)) };
        TensorSum { algebra: alg, terms: tag_tensor(b, &t) }
    }

    pub fn antipode(&self, f: &FormalSum) -> FormalSum {
        let alg = f.algebra;
        let r = self.dist_antipode(alg, &self.distinguished(f));
        self.back(alg, f.sole_basis(), r)
    }

    /// Every basis element of degree 0 is the unit, so this is the degree-0 coefficient sum.
    pub fn counit(&self, f: &FormalSum) -> Q {
        f.terms.iter().filter(|(k, _)| k.degree() == 0).map(|(_, c)| c.clone()).sum()
    }

    pub fn chi(&self, f: &FormalSum) -> Result<FormalSum, EngineError> {
        let d = self.distinguished(f);
        match f.algebra {
            Algebra::NSymA => Ok(FormalSum::in_basis(Algebra::PSymA, Basis::Homog, &untyped(&hopf::chi(&typed(&d))))),
            Algebra::NSym => Ok(FormalSum::in_basis(
                Algebra::Sym,
                Basis::Homog,
                &untyped(&classical::chi_classical(&typed(&d))),
            )),
            algebra => Err(EngineError::Unsupported { op: "chi", algebra }),
        }
    }

    pub fn iota(&self, f: &FormalSum) -> Result<FormalSum, EngineError> {
        let d = self.distinguished(f);
        match f.algebra {
            Algebra::SymA => Ok(FormalSum::in_basis(Algebra::QSymA, Basis::M, &untyped(&hopf::iota(&typed(&d))))),
            Algebra::Sym => Ok(FormalSum::in_basis(
                Algebra::QSym,
                Basis::M,
                &untyped(&classical::iota_classical(&typed(&d))),
            )),
            algebra => Err(EngineError::Unsupported { op: "iota", algebra }),
        }
    }

    /// `υ`; Schur-type input comes back in the classical Schur basis.
    pub fn uncolor(&self, f: &FormalSum) -> Result<FormalSum, EngineError> {
        let d = self.distinguished(f);
        let schurish = matches!(f.sole_basis(), Some(Basis::Schur | Basis::DualSchur));
        let (alg, basis, r) = match f.algebra {
            Algebra::NSymA => (Algebra::NSym, Basis::H, untyped(&hopf::uncolor_sentence(&typed(&d)))),
            Algebra::QSymA => (Algebra::QSym, Basis::M, untyped(&hopf::uncolor_sentence(&typed(&d)))),
            Algebra::SymA => (Algebra::Sym, Basis::Mono, untyped(&hopf::uncolor_m_psentence(&typed(&d)))),
            Algebra::PSymA => (Algebra::Sym, Basis::Homog, untyped(&hopf::uncolor_h(&typed(&d)))),
            algebra => return Err(EngineError::Unsupported { op: "uncolor", algebra }),
        };
        let out = FormalSum::in_basis(alg, basis, &r);
        if schurish {
            self.convert(&out, Basis::Schur)
        } else {
            Ok(out)
        }
    }

    pub fn omega(&self, f: &FormalSum) -> Result<FormalSum, EngineError> {
        if f.algebra != Algebra::Sym {
            return Err(EngineError::Unsupported { op: "omega", algebra: f.algebra });
        }
        let mut out = FormalSum::zero(Algebra::Sym);
        for (b, part) in f.by_basis() {
            let w = untyped(&omega(&typed::<Partition>(&part), sym_basis(b)));
            out = out.add(&FormalSum::in_basis(Algebra::Sym, b, &w))?;
        }
        Ok(out)
    }

    /// Side of a pairing: which basis each algebra is expanded in.
    fn pairing_bases(left: Algebra, right: Algebra) -> Option<(Basis, Basis)> {
        use Algebra::*;
        match (left, right) {
            (NSymA, QSymA) | (NSym, QSym) => Some((Basis::H, Basis::M)),
            (QSymA, NSymA) | (QSym, NSym) => Some((Basis::M, Basis::H)),
            (PSymA, SymA) | (Sym, Sym) => Some((Basis::Homog, Basis::Mono)),
            (SymA, PSymA) => Some((Basis::Mono, Basis::Homog)),
            _ => None,
        }
    }

    fn expanded(&self, f: &FormalSum, b: Basis) -> Idx {
        let d = self.distinguished(f);
        self.from_dist(f.algebra, b, &d)
    }

    pub fn pair(&self, f: &FormalSum, g: &FormalSum) -> Result<Q, EngineError> {
        let (bf, bg) =
            Self::pairing_bases(f.algebra, g.algebra).ok_or(EngineError::Pairing(f.algebra, g.algebra))?;
        Ok(self.expanded(f, bf).dot(&self.expanded(g, bg)))
    }

    pub fn pair_tensors(&self, x: &TensorSum, y: &TensorSum) -> Result<Q, EngineError> {
        let (bx, by) =
            Self::pairing_bases(x.algebra, y.algebra).ok_or(EngineError::Pairing(x.algebra, y.algebra))?;
        let expand = |t: &TensorSum, b: Basis| {
            let alg = t.algebra;
            t.terms.extend_linear(|(l, r)| {
                let l = self.from_dist(alg, b, &self.to_dist(alg, l.basis, &LinComb::singleton(l.index.clone())));
                let r = self.from_dist(alg, b, &self.to_dist(alg, r.basis, &LinComb::singleton(r.index.clone())));
                bilinear(&l, &r, |a, c| LinComb::singleton((a.clone(), c.clone())))
            })
        };
        Ok(expand(x, bx).dot(&expand(y, by)))
    }
}

fn strip(f: &FormalSum) -> Idx {
    f.terms.map_keys(|k| k.index.clone())
}

fn tag_tensor(b: Basis, t: &IdxTensor) -> LinComb<(BasisKey, BasisKey)> {
    t.map_keys(|(x, y)| (BasisKey { basis: b, index: x.clone() }, BasisKey { basis: b, index: y.clone() }))
}

fn join_lengths(s: &Sentence) -> String {
    s.word_lengths().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
