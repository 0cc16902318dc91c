//! Stand-alone classical structure maps on compositions and partitions.
//!
//! Nothing here touches the colored kernel; these are the formulas the
//! unary bridge is checked against.

use std::collections::BTreeSet;

use super::{Composition, Partition};
use crate::linear::{bilinear, q, LinComb, Tensor};

fn distinct_permutations(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// `m_λ m_μ = Σ_ν r^ν_{λμ} m_ν`, with `r` counted over pairs of padded sequences.
pub fn m_product(lambda: &Partition, mu: &Partition) -> LinComb<Partition> {
    let n = lambda.size() + mu.size();
    let mut out = LinComb::zero();
    for nu in Partition::all(n) {
        let k = nu.len();
        if lambda.len() > k || mu.len() > k {
            continue;
        }
        let mut padded = lambda.0.clone();
        padded.resize(k, 0);
        let count = distinct_permutations(&padded)
            .into_iter()
            .filter(|alpha| {
                alpha.iter().zip(&nu.0).all(|(a, v)| a <= v)
                    && Partition::from_parts(alpha.iter().zip(&nu.0).map(|(a, v)| v - a)) == *mu
            })
            .count();
        if count > 0 {
            out.add_term(nu, q(count as i64));
        }
    }
    out
}

/// `Δ m_λ = Σ_{μ ⊔ ν = λ} m_μ ⊗ m_ν` over distinct sub-multisets `μ`.
pub fn m_coproduct(lambda: &Partition) -> Tensor<Partition> {
    let mut values: Vec<(usize, usize)> = Vec::new();
    for &p in &lambda.0 {
        match values.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => values.push((p, 1)),
        }
    }
    let mut out = LinComb::zero();
    let mut choice = vec![0usize; values.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (&(v, c), &k) in values.iter().zip(&choice) {
            left.extend(std::iter::repeat_n(v, k));
            right.extend(std::iter::repeat_n(v, c - k));
        }
        out.add_term((Partition(left), Partition(right)), q(1));
        let Some(i) = (0..values.len()).find(|&i| choice[i] < values[i].1) else {
            return out;
        };
        choice[i] += 1;
        choice[..i].iter_mut().for_each(|c| *c = 0);
    }
}

pub fn h_product(lambda: &Partition, mu: &Partition) -> LinComb<Partition> {
    LinComb::singleton(Partition::from_parts(lambda.0.iter().chain(&mu.0).copied()))
}

/// `Δ h_λ = Π_i Σ_k h_k ⊗ h_{λ_i - k}`.
pub fn h_coproduct(lambda: &Partition) -> Tensor<Partition> {
    lambda.0.iter().fold(LinComb::singleton((Partition::default(), Partition::default())), |acc, &n| {
        let factor: Tensor<Partition> =
            (0..=n).map(|k| ((Partition::from_parts([k]), Partition::from_parts([n - k])), q(1))).collect();
        bilinear(&acc, &factor, |(a1, a2), (b1, b2)| {
            LinComb::singleton((
                Partition::from_parts(a1.0.iter().chain(&b1.0).copied()),
                Partition::from_parts(a2.0.iter().chain(&b2.0).copied()),
            ))
        })
    })
}

/// Quasishuffle of compositions, with multiplicity.
pub fn quasishuffle(alpha: &[usize], beta: &[usize]) -> Vec<Vec<usize>> {
    match (alpha.split_first(), beta.split_first()) {
        (None, _) => vec![beta.to_vec()],
        (_, None) => vec![alpha.to_vec()],
        (Some((&a, ar)), Some((&b, br))) => {
            let mut out = Vec::new();
            for (head, rest) in [(a, quasishuffle(ar, beta)), (b, quasishuffle(alpha, br)), (a + b, quasishuffle(ar, br))] {
                out.extend(rest.into_iter().map(|mut tail| {
                    tail.insert(0, head);
                    tail
                }));
            }
            out
        }
    }
}

pub fn qsym_m_product(alpha: &Composition, beta: &Composition) -> LinComb<Composition> {
    quasishuffle(&alpha.0, &beta.0).into_iter().map(|g| (Composition(g), q(1))).collect()
}

pub fn qsym_m_coproduct(alpha: &Composition) -> Tensor<Composition> {
    (0..=alpha.len())
        .map(|i| ((Composition(alpha.0[..i].to_vec()), Composition(alpha.0[i..].to_vec())), q(1)))
        .collect()
}

pub fn nsym_h_product(alpha: &Composition, beta: &Composition) -> LinComb<Composition> {
    LinComb::singleton(alpha.concat(beta))
}

/// `Δ H_α = Π_i Σ_k H_k ⊗ H_{α_i - k}`, with `H_0 = 1`.
pub fn nsym_h_coproduct(alpha: &Composition) -> Tensor<Composition> {
    let single = |k: usize| Composition(if k == 0 { vec![] } else { vec![k] });
    alpha.0.iter().fold(LinComb::singleton((Composition::default(), Composition::default())), |acc, &n| {
        let factor: Tensor<Composition> = (0..=n).map(|k| ((single(k), single(n - k)), q(1))).collect();
        bilinear(&acc, &factor, |(a1, a2), (b1, b2)| LinComb::singleton((a1.concat(b1), a2.concat(b2))))
    })
}

/// `R_α R_β = R_{α·β} + R_{α⊙β}`.
pub fn ribbon_product(alpha: &Composition, beta: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::singleton(alpha.concat(beta));
    if let Some(near) = alpha.near_concat(beta) {
        out.add_term(near, q(1));
    }
    out
}

/// Distinct partitions `μ` with `μ ⊔ ν = λ`, used by callers that need just the support.
pub fn sub_partitions(lambda: &Partition) -> BTreeSet<Partition> {
    m_coproduct(lambda).keys().map(|(a, _)| a.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition(parts.to_vec())
    }

    fn c(parts: &[usize]) -> Composition {
        Composition(parts.to_vec())
    }

    #[test]
    fn monomial_product_small_cases() {
        // m_1 m_1 = m_2 + 2 m_11
        let want: LinComb<Partition> = [(p(&[2]), q(1)), (p(&[1, 1]), q(2))].into_iter().collect();
        assert_eq!(m_product(&p(&[1]), &p(&[1])), want);
        // m_1 m_21 = m_31 + 2 m_22 + 2 m_211
        let want: LinComb<Partition> =
            [(p(&[3, 1]), q(1)), (p(&[2, 2]), q(2)), (p(&[2, 1, 1]), q(2))].into_iter().collect();
        assert_eq!(m_product(&p(&[1]), &p(&[2, 1])), want);
    }

    #[test]
    fn coproducts() {
        assert_eq!(m_coproduct(&p(&[2, 1, 1])).len(), 6);
        let d = h_coproduct(&p(&[3]));
        let want: Tensor<Partition> = (0..=3)
            .map(|k| ((Partition::from_parts([k]), Partition::from_parts([3 - k])), q(1)))
            .collect();
        assert_eq!(d, want);
        assert_eq!(nsym_h_coproduct(&c(&[1, 1])).coeff(&(c(&[1]), c(&[1]))), q(2));
    }

    #[test]
    fn quasishuffle_example() {
        let want: LinComb<Composition> =
            [(c(&[1, 2, 1]), q(1)), (c(&[2, 1, 1]), q(2)), (c(&[3, 1]), q(1)), (c(&[2, 2]), q(1))]
                .into_iter()
                .collect();
        assert_eq!(qsym_m_product(&c(&[1]), &c(&[2, 1])), want);
    }

    #[test]
    fn ribbons() {
        let want: LinComb<Composition> = [(c(&[2, 1]), q(1)), (c(&[3]), q(1))].into_iter().collect();
        assert_eq!(ribbon_product(&c(&[2]), &c(&[1])), want);
        assert_eq!(ribbon_product(&c(&[]), &c(&[2])), LinComb::singleton(c(&[2])));
    }
}
