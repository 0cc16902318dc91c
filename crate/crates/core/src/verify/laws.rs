//! Exhaustive law checks for a single graded Hopf algebra or a dual pair.
//!
//! Every check walks its cases in increasing degree and canonical basis
//! order and reports the first failing case.

use crate::exec::Execution;
use crate::hopf::GradedHopf;
use crate::linear::{bilinear, LinComb, Tensor, Triple, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub cases: u64,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn pass(cases: u64) -> Self {
        Self { cases, witness: None }
    }

    /// Concatenates outcomes in order; the first witness wins.
    pub fn chain(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut out = Outcome::pass(0);
        for p in parts {
            out.cases += p.cases;
            if out.witness.is_none() {
                out.witness = p.witness;
            }
        }
        out
    }

    pub fn prefixed(mut self, prefix: &str) -> Self {
        self.witness = self.witness.map(|w| format!("{prefix}: {w}"));
        self
    }
}

pub fn scan<T, F>(exec: Execution, items: &[T], f: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    Outcome { cases: items.len() as u64, witness: exec.find_first(items, f).map(|(_, w)| w) }
}

/// Basis keys by degree, `0..=max`.
pub fn levels<H: GradedHopf>(h: &H, max: usize) -> Vec<Vec<H::Key>> {
    (0..=max).map(|n| h.basis(n)).collect()
}

pub fn flat<K: Clone>(levels: &[Vec<K>]) -> Vec<K> {
    levels.iter().flatten().cloned().collect()
}

/// Pairs of total degree `≤ max`, by total degree and then by the degree of the first entry.
pub fn pairs<K: Clone>(levels: &[Vec<K>], max: usize) -> Vec<(K, K)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for i in 0..=n {
            for a in &levels[i] {
                for b in &levels[n - i] {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

pub fn triples<K: Clone>(levels: &[Vec<K>], max: usize) -> Vec<(K, K, K)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for i in 0..=n {
            for j in 0..=n - i {
                for a in &levels[i] {
                    for b in &levels[j] {
                        for c in &levels[n - i - j] {
                            out.push((a.clone(), b.clone(), c.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn render_sum<H: GradedHopf>(h: &H, f: &LinComb<H::Key>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.iter().map(|(k, c)| format!("{}*{}", c, h.render(k))).collect::<Vec<_>>().join(" + ")
}

pub fn render_tensor<H: GradedHopf>(h: &H, t: &Tensor<H::Key>) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter().map(|((a, b), c)| format!("{}*{} ⊗ {}", c, h.render(a), h.render(b))).collect::<Vec<_>>().join(" + ")
}

fn differ<H: GradedHopf>(h: &H, what: &str, left: &LinComb<H::Key>, right: &LinComb<H::Key>) -> Option<String> {
    (left != right).then(|| format!("{what}: {} vs {}", render_sum(h, left), render_sum(h, right)))
}

pub fn associativity<H: GradedHopf>(h: &H, max: usize, exec: Execution) -> Outcome {
    let lv = levels(h, max);
    let one = h.one();
    let units = scan(exec, &flat(&lv), |a| {
        let x = LinComb::singleton(a.clone());
        differ(h, &format!("1·{0} = {0} = {0}·1 at {0}", h.render(a)), &h.mul(&one, &x), &x)
            .or_else(|| differ(h, &format!("{0}·1 = {0} at {0}", h.render(a)), &h.mul(&x, &one), &x))
    });
    let assoc = scan(exec, &triples(&lv, max), |(a, b, c)| {
        let left = h.mul(&h.mul_keys(a, b), &LinComb::singleton(c.clone()));
        let right = h.mul(&LinComb::singleton(a.clone()), &h.mul_keys(b, c));
        differ(h, &format!("(xy)z = x(yz) at ({}, {}, {})", h.render(a), h.render(b), h.render(c)), &left, &right)
    });
    Outcome::chain([units, assoc])
}

fn delta_left<H: GradedHopf>(h: &H, d: &Tensor<H::Key>) -> Triple<H::Key> {
    d.extend_linear(|(x, y)| h.delta_key(x).map_keys(|(p, q)| (p.clone(), q.clone(), y.clone())))
}

fn delta_right<H: GradedHopf>(h: &H, d: &Tensor<H::Key>) -> Triple<H::Key> {
    d.extend_linear(|(x, y)| h.delta_key(y).map_keys(|(p, q)| (x.clone(), p.clone(), q.clone())))
}

pub fn coassociativity<H: GradedHopf>(h: &H, max: usize, exec: Execution) -> Outcome {
    scan(exec, &flat(&levels(h, max)), |a| {
        let d = h.delta_key(a);
        (delta_left(h, &d) != delta_right(h, &d)).then(|| format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ at {}", h.render(a)))
    })
}

pub fn counit_laws<H: GradedHopf>(h: &H, max: usize, exec: Execution) -> Outcome {
    let unit_ok = h.counit(&h.one()) == Q::from_integer(1.into());
    let base = Outcome { cases: 1, witness: (!unit_ok).then(|| format!("ε({}) ≠ 1", h.render(&h.unit()))) };
    let keys = scan(exec, &flat(&levels(h, max)), |a| {
        let d = h.delta_key(a);
        let x = LinComb::singleton(a.clone());
        let left: LinComb<H::Key> =
            d.iter().filter(|((p, _), _)| h.degree(p) == 0).map(|((_, q), c)| (q.clone(), c.clone())).collect();
        let right: LinComb<H::Key> =
            d.iter().filter(|((_, q), _)| h.degree(q) == 0).map(|((p, _), c)| (p.clone(), c.clone())).collect();
        differ(h, &format!("(ε⊗id)Δx = x at {}", h.render(a)), &left, &x)
            .or_else(|| differ(h, &format!("(id⊗ε)Δx = x at {}", h.render(a)), &right, &x))
    });
    Outcome::chain([base, keys])
}

pub fn bialgebra_compat<H: GradedHopf>(h: &H, max: usize, exec: Execution) -> Outcome {
    let unit = h.unit();
    let ok = h.delta_key(&unit) == LinComb::singleton((unit.clone(), unit.clone()));
    let base = Outcome { cases: 1, witness: (!ok).then(|| "Δ(1) ≠ 1 ⊗ 1".to_string()) };
    let lv = levels(h, max);
    let body = scan(exec, &pairs(&lv, max), |(a, b)| {
        let left = h.delta(&h.mul_keys(a, b));
        let right = h.mul_in_tensor(&h.delta_key(a), &h.delta_key(b));
        if left != right {
            return Some(format!(
                "Δ(xy) = Δ(x)Δ(y) at ({}, {}): {} vs {}",
                h.render(a),
                h.render(b),
                render_tensor(h, &left),
                render_tensor(h, &right)
            ));
        }
        let x = LinComb::singleton(a.clone());
        let y = LinComb::singleton(b.clone());
        (h.counit(&h.mul_keys(a, b)) != h.counit(&x) * h.counit(&y))
            .then(|| format!("ε(xy) = ε(x)ε(y) at ({}, {})", h.render(a), h.render(b)))
    });
    Outcome::chain([base, body])
}

pub fn antipode_axiom<H: GradedHopf>(h: &H, max: usize, exec: Execution) -> Outcome {
    scan(exec, &flat(&levels(h, max)), |a| {
        let d = h.delta_key(a);
        let target = h.one().scale(&h.counit(&LinComb::singleton(a.clone())));
        let left = d.extend_linear(|(x, y)| h.mul(&h.antipode_key(x), &LinComb::singleton(y.clone())));
        let right = d.extend_linear(|(x, y)| h.mul(&LinComb::singleton(x.clone()), &h.antipode_key(y)));
        differ(h, &format!("μ(S⊗id)Δ = ηε at {}", h.render(a)), &left, &target)
            .or_else(|| differ(h, &format!("μ(id⊗S)Δ = ηε at {}", h.render(a)), &right, &target))
    })
}

/// `S∘S = id`, checked only when the product is commutative.
pub fn antipode_squared<H: GradedHopf>(h: &H, max: usize, exec: Execution) -> Outcome {
    if !h.commutative() {
        return Outcome::pass(0);
    }
    scan(exec, &flat(&levels(h, max)), |a| {
        let x = LinComb::singleton(a.clone());
        differ(h, &format!("S(S(x)) = x at {}", h.render(a)), &h.antipode(&h.antipode_key(a)), &x)
    })
}

/// `⟨b1 b2, a⟩ = ⟨b1 ⊗ b2, Δa⟩` and `⟨Δb, a1 ⊗ a2⟩ = ⟨b, a1 a2⟩` for Kronecker-dual
/// bases indexed by the same keys.
pub fn duality_product_coproduct<K, B, A>(b: &B, a: &A, max: usize, exec: Execution) -> Outcome
where
    K: Ord + Clone + std::fmt::Debug + Send + Sync,
    B: GradedHopf<Key = K>,
    A: GradedHopf<Key = K>,
{
    let lv = levels(a, max);
    Outcome::chain([
        one_side(b, a, &lv, max, exec, "⟨xy, z⟩ = ⟨x ⊗ y, Δz⟩"),
        one_side(a, b, &lv, max, exec, "⟨Δz, x ⊗ y⟩ = ⟨z, xy⟩"),
    ])
}

/// Product structure constants of `p` against coproduct structure constants of `c`.
fn one_side<K, P, C>(p: &P, c: &C, lv: &[Vec<K>], max: usize, exec: Execution, label: &str) -> Outcome
where
    K: Ord + Clone + std::fmt::Debug + Send + Sync,
    P: GradedHopf<Key = K>,
    C: GradedHopf<Key = K>,
{
    let deltas: Vec<Vec<Tensor<K>>> = lv.iter().map(|keys| exec.map(keys, |k| c.delta_key(k))).collect();
    scan(exec, &pairs(lv, max), |(x, y)| {
        let n = p.degree(x) + p.degree(y);
        let prod = p.mul_keys(x, y);
        let key = (x.clone(), y.clone());
        lv[n].iter().zip(&deltas[n]).find_map(|(z, dz)| {
            let l = prod.coeff(z);
            let r = dz.coeff(&key);
            (l != r).then(|| {
                format!(
                    "{label} at x = {}, y = {}, z = {}: {} vs {}",
                    p.render(x),
                    p.render(y),
                    c.render(z),
                    l,
                    r
                )
            })
        })
    })
}

/// `⟨S(b), a⟩ = ⟨b, S*(a)⟩`.
pub fn duality_antipode<K, B, A>(b: &B, a: &A, max: usize, exec: Execution) -> Outcome
where
    K: Ord + Clone + std::fmt::Debug + Send + Sync,
    B: GradedHopf<Key = K>,
    A: GradedHopf<Key = K>,
{
    let lv = levels(b, max);
    Outcome::chain(lv.iter().map(|keys| {
        let dual: Vec<LinComb<K>> = exec.map(keys, |k| a.antipode_key(k));
        scan(exec, keys, |x| {
            let sx = b.antipode_key(x);
            keys.iter().zip(&dual).find_map(|(y, sy)| {
                let l = sx.coeff(y);
                let r = sy.coeff(x);
                (l != r).then(|| format!("⟨S(x), y⟩ = ⟨x, S*(y)⟩ at x = {}, y = {}: {} vs {}", b.render(x), a.render(y), l, r))
            })
        })
    }))
}

/// `(f⊗f)` applied to a tensor, for a key map `f`.
pub fn tensor_map<K: Ord + Clone, L: Ord + Clone>(t: &Tensor<K>, f: impl Fn(&LinComb<K>) -> LinComb<L>) -> Tensor<L> {
    t.extend_linear(|(x, y)| {
        bilinear(&f(&LinComb::singleton(x.clone())), &f(&LinComb::singleton(y.clone())), |p, q| {
            LinComb::singleton((p.clone(), q.clone()))
        })
    })
}
