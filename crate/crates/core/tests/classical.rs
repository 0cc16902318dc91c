//! The classical layer against independent formulas.

use colsym::classical::bases::{nsym_from_h, nsym_to_h, omega, qsym_from_m, qsym_to_m, sym_convert, NSymBasis, QSymBasis, SymBasis};
use colsym::classical::{direct, ssyt, Composition, NSymH, Partition, QSymM, SymH, SymM};
use colsym::hopf::GradedHopf;
use colsym::linear::{bilinear, q, LinComb};

const N: usize = 6;

fn lc<K: Ord + Clone>(k: K) -> LinComb<K> {
    LinComb::singleton(k)
}

fn p(parts: &[usize]) -> Partition {
    Partition(parts.to_vec())
}

/// Pairs of keys of total degree at most `n`.
fn pairs<K: Clone>(all: impl Fn(usize) -> Vec<K>, n: usize) -> Vec<(K, K)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for x in all(a) {
                for y in all(b) {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

fn up_to<K>(all: impl Fn(usize) -> Vec<K>, n: usize) -> Vec<K> {
    (0..=n).flat_map(all).collect()
}

#[test]
fn unary_bridge_matches_direct_formulas() {
    let (m, h, mm, hh) = (SymM::new(), SymH::new(), QSymM::new(), NSymH::new());
    for (x, y) in pairs(Partition::all, N) {
        assert_eq!(m.mul_keys(&x, &y), direct::m_product(&x, &y), "m{x} m{y}");
        assert_eq!(h.mul_keys(&x, &y), direct::h_product(&x, &y), "h{x} h{y}");
    }
    for (x, y) in pairs(Composition::all, N) {
        assert_eq!(mm.mul_keys(&x, &y), direct::qsym_m_product(&x, &y), "M{x} M{y}");
        assert_eq!(hh.mul_keys(&x, &y), direct::nsym_h_product(&x, &y), "H{x} H{y}");
    }
    for x in up_to(Partition::all, N) {
        assert_eq!(m.delta_key(&x), direct::m_coproduct(&x));
        assert_eq!(h.delta_key(&x), direct::h_coproduct(&x));
    }
    for x in up_to(Composition::all, N) {
        assert_eq!(mm.delta_key(&x), direct::qsym_m_coproduct(&x));
        assert_eq!(hh.delta_key(&x), direct::nsym_h_coproduct(&x));
    }
}

#[test]
fn antipode_of_h_is_signed_e() {
    let h = SymH::new();
    for n in 1..=N {
        let want = sym_convert(&lc(p(&[n])), SymBasis::E, SymBasis::H).scale(&q(if n % 2 == 0 { 1 } else { -1 }));
        assert_eq!(h.antipode_key(&p(&[n])), want, "S(h_{n})");
    }
}

#[test]
fn basis_changes_round_trip() {
    use SymBasis::*;
    for n in 0..=N {
        for lam in Partition::all(n) {
            for from in [M, H, E, S] {
                for to in [M, H, E, S] {
                    let there = sym_convert(&lc(lam.clone()), from, to);
                    assert_eq!(sym_convert(&there, to, from), lc(lam.clone()), "{lam} {from:?}→{to:?}");
                }
            }
        }
        for a in Composition::all(n) {
            let f = qsym_to_m(&lc(a.clone()), QSymBasis::F);
            assert_eq!(qsym_from_m(&f, QSymBasis::F), lc(a.clone()));
            for b in [NSymBasis::R, NSymBasis::E] {
                assert_eq!(nsym_from_h(&nsym_to_h(&lc(a.clone()), b), b), lc(a.clone()), "{a} {b:?}");
            }
        }
    }
}

#[test]
fn ribbons_and_fundamentals_are_dual() {
    for n in 0..=N {
        let all = Composition::all(n);
        for a in &all {
            let r = nsym_to_h(&lc(a.clone()), NSymBasis::R);
            for b in &all {
                let f = qsym_to_m(&lc(b.clone()), QSymBasis::F);
                assert_eq!(r.dot(&f), q((a == b) as i64), "⟨R{a}, F{b}⟩");
            }
        }
    }
}

#[test]
fn ribbon_product_matches_h_expansion() {
    for (a, b) in pairs(Composition::all, N) {
        let through_h = bilinear(
            &nsym_to_h(&lc(a.clone()), NSymBasis::R),
            &nsym_to_h(&lc(b.clone()), NSymBasis::R),
            direct::nsym_h_product,
        );
        assert_eq!(direct::ribbon_product(&a, &b), nsym_from_h(&through_h, NSymBasis::R), "R{a} R{b}");
    }
}

#[test]
fn omega_is_an_isometric_involution() {
    for n in 0..=N {
        let all = Partition::all(n);
        for lam in &all {
            assert_eq!(omega(&lc(lam.clone()), SymBasis::S), lc(lam.conjugate()));
            let twice = omega(&omega(&lc(lam.clone()), SymBasis::M), SymBasis::M);
            assert_eq!(twice, lc(lam.clone()));
            let wh = omega(&lc(lam.clone()), SymBasis::H);
            for mu in &all {
                let wm = omega(&lc(mu.clone()), SymBasis::M);
                assert_eq!(wh.dot(&wm), q((lam == mu) as i64), "⟨ωh{lam}, ωm{mu}⟩");
            }
        }
    }
}

/// Pieri: `s_λ h_1` is the sum of `s_μ` over `μ` obtained by adding one box.
#[test]
fn pieri_rule() {
    for n in 0..N {
        for lam in Partition::all(n) {
            let m = sym_convert(&lc(lam.clone()), SymBasis::S, SymBasis::M);
            let prod = bilinear(&m, &lc(p(&[1])), direct::m_product);
            let got = sym_convert(&prod, SymBasis::M, SymBasis::S);
            let mut want = LinComb::zero();
            for i in 0..=lam.len() {
                let mut parts = lam.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                if Partition::is_valid(&parts) {
                    want.add_term(Partition(parts), q(1));
                }
            }
            assert_eq!(got, want, "s{lam} h1");
        }
    }
}

/// `K_{λ,(1^n)}` counts standard tableaux, given by the hook length formula.
#[test]
fn kostka_against_hook_lengths() {
    for n in 1..=7 {
        let ones = Partition(vec![1; n]);
        for lam in Partition::all(n) {
            let conj = lam.conjugate();
            let hooks: u64 = lam
                .0
                .iter()
                .enumerate()
                .flat_map(|(i, &row)| (0..row).map(move |j| (i, j, row)))
                .map(|(i, j, row)| (row - j + conj.0[j] - i - 1) as u64)
                .product();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(ssyt::kostka(&lam, &ones), fact / hooks, "f^{lam}");
        }
    }
}

#[test]
fn schur_in_monomials() {
    let s32 = sym_convert(&lc(p(&[3, 2])), SymBasis::S, SymBasis::M);
    let want: LinComb<Partition> = [
        (p(&[3, 2]), 1),
        (p(&[3, 1, 1]), 1),
        (p(&[2, 2, 1]), 2),
        (p(&[2, 1, 1, 1]), 3),
        (p(&[1, 1, 1, 1, 1]), 5),
    ]
    .into_iter()
    .map(|(k, c)| (k, q(c)))
    .collect();
    assert_eq!(s32, want);
}
