//! Changes of basis in the classical algebras.
//!
//! `QSym` goes through `M`, `NSym` through `H` and `Sym` through `s`.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::ssyt::kostka_matrix;
use super::{Composition, Partition};
use crate::linear::{q, LinComb, Q};
use crate::triangular::invert_upper_unitriangular;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QSymBasis {
    M,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NSymBasis {
    H,
    R,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymBasis {
    M,
    H,
    E,
    S,
}

fn sign(exp: usize) -> Q {
    if exp % 2 == 0 { q(1) } else { q(-1) }
}

pub fn qsym_to_m(f: &LinComb<Composition>, from: QSymBasis) -> LinComb<Composition> {
    match from {
        QSymBasis::M => f.clone(),
        // F_α = Σ_{β⪯α} M_β
        QSymBasis::F => f.extend_linear(|a| a.refinements().into_iter().map(|b| (b, q(1))).collect()),
    }
}

pub fn qsym_from_m(f: &LinComb<Composition>, to: QSymBasis) -> LinComb<Composition> {
    match to {
        QSymBasis::M => f.clone(),
        QSymBasis::F => f.extend_linear(|a| {
            a.refinements().into_iter().map(|b| {
                let s = sign(b.len() - a.len());
                (b, s)
            }).collect()
        }),
    }
}

pub fn nsym_to_h(f: &LinComb<Composition>, from: NSymBasis) -> LinComb<Composition> {
    match from {
        NSymBasis::H => f.clone(),
        NSymBasis::R => f.extend_linear(|a| {
            a.coarsenings().into_iter().map(|b| {
                let s = sign(a.len() - b.len());
                (b, s)
            }).collect()
        }),
        NSymBasis::E => f.extend_linear(|a| {
            a.refinements().into_iter().map(|b| {
                let s = sign(a.size() - b.len());
                (b, s)
            }).collect()
        }),
    }
}

pub fn nsym_from_h(f: &LinComb<Composition>, to: NSymBasis) -> LinComb<Composition> {
    match to {
        NSymBasis::H => f.clone(),
        // H_β = Σ over coarsenings α of β of R_α, the inverse of the signed sum above.
        NSymBasis::R => f.extend_linear(|b| b.coarsenings().into_iter().map(|a| (a, q(1))).collect()),
        NSymBasis::E => f.extend_linear(|b| {
            b.refinements().into_iter().map(|a| {
                let s = sign(b.size() - a.len());
                (a, s)
            }).collect()
        }),
    }
}

/// Kostka matrix of size `n` together with its inverse and a position lookup.
pub struct KostkaTable {
    pub order: Vec<Partition>,
    pub k: Vec<Vec<i64>>,
    pub inv: Vec<Vec<BigInt>>,
    pos: BTreeMap<Partition, usize>,
}

impl KostkaTable {
    pub fn index(&self, p: &Partition) -> usize {
        self.pos[p]
    }
}

/// Cached per size; tables are small and immutable.
pub fn kostka_table(n: usize) -> Arc<KostkaTable> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let (order, k) = kostka_matrix(n);
    let inv = invert_upper_unitriangular(&k);
    let pos = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = Arc::new(KostkaTable { order, k, inv, pos });
    cache.lock().unwrap().entry(n).or_insert(table).clone()
}

fn int(x: i64) -> Q {
    q(x)
}

fn big(x: &BigInt) -> Q {
    Q::from_integer(x.clone())
}

/// Expresses `f` (given in `from`) in the Schur basis.
pub fn sym_to_s(f: &LinComb<Partition>, from: SymBasis) -> LinComb<Partition> {
    f.extend_linear(|mu| {
        let t = kostka_table(mu.size());
        let j = t.index(mu);
        let mut out = LinComb::zero();
        match from {
            SymBasis::S => out.add_term(mu.clone(), q(1)),
            // m_μ = Σ_λ (K⁻¹)_{μ,λ} s_λ
            SymBasis::M => {
                for (i, lam) in t.order.iter().enumerate() {
                    out.add_term(lam.clone(), big(&t.inv[j][i]));
                }
            }
            // h_μ = Σ_λ K_{λ,μ} s_λ
            SymBasis::H => {
                for (i, lam) in t.order.iter().enumerate() {
                    out.add_term(lam.clone(), int(t.k[i][j]));
                }
            }
            // e_μ = Σ_λ K_{λ,μ} s_{λ'}
            SymBasis::E => {
                for (i, lam) in t.order.iter().enumerate() {
                    out.add_term(lam.conjugate(), int(t.k[i][j]));
                }
            }
        }
        out
    })
}

/// Expresses a Schur expansion in the target basis.
pub fn sym_from_s(f: &LinComb<Partition>, to: SymBasis) -> LinComb<Partition> {
    f.extend_linear(|lam| {
        let t = kostka_table(lam.size());
        let i = t.index(lam);
        let mut out = LinComb::zero();
        match to {
            SymBasis::S => out.add_term(lam.clone(), q(1)),
            // s_λ = Σ_μ K_{λ,μ} m_μ
            SymBasis::M => {
                for (j, mu) in t.order.iter().enumerate() {
                    out.add_term(mu.clone(), int(t.k[i][j]));
                }
            }
            // s_λ = Σ_μ (K⁻¹)_{μ,λ} h_μ
            SymBasis::H => {
                for (j, mu) in t.order.iter().enumerate() {
                    out.add_term(mu.clone(), big(&t.inv[j][i]));
                }
            }
            // s_λ = ω(s_λ') = Σ_μ (K⁻¹)_{μ,λ'} e_μ
            SymBasis::E => {
                let ic = t.index(&lam.conjugate());
                for (j, mu) in t.order.iter().enumerate() {
                    out.add_term(mu.clone(), big(&t.inv[j][ic]));
                }
            }
        }
        out
    })
}

pub fn sym_convert(f: &LinComb<Partition>, from: SymBasis, to: SymBasis) -> LinComb<Partition> {
    if from == to {
        return f.clone();
    }
    sym_from_s(&sym_to_s(f, from), to)
}

/// `ω` on `f` given in `basis`; the result is in the same basis.
pub fn omega(f: &LinComb<Partition>, basis: SymBasis) -> LinComb<Partition> {
    match basis {
        SymBasis::S => f.map_keys(Partition::conjugate),
        // ω swaps e and h, so the h-coefficients of f become e-coefficients.
        SymBasis::H => sym_convert(f, SymBasis::E, SymBasis::H),
        SymBasis::E => sym_convert(f, SymBasis::H, SymBasis::E),
        SymBasis::M => {
            let s = sym_to_s(f, SymBasis::M).map_keys(Partition::conjugate);
            sym_from_s(&s, SymBasis::M)
        }
    }
}
