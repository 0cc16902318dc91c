//! Finite linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `n*B(i) + ...` style rendering of a single coefficient, without sign.
pub fn render_abs(c: &Q) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Free module element: basis key to nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn singleton(k: K) -> Self {
        Self::term(k, Q::one())
    }

    pub fn term(k: K, c: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Q> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        out
    }

    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn scale(&self, c: &Q) -> LinComb<K> {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Linear extension of `op`: `Σ c_k op(k)`.
    pub fn extend_linear<K2: Ord + Clone>(&self, mut op: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&op(k), c);
        }
        out
    }

    pub fn try_extend_linear<K2: Ord + Clone, E>(
        &self,
        mut op: impl FnMut(&K) -> Result<LinComb<K2>, E>,
    ) -> Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&op(k)?, c);
        }
        Ok(out)
    }

    /// Relabels keys; colliding keys have their coefficients summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Diagonal pairing `Σ_k a_k b_k`.
    pub fn dot(&self, other: &LinComb<K>) -> Q {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small
            .iter()
            .filter_map(|(k, v)| big.terms.get(k).map(|w| v * w))
            .fold(Q::zero(), |acc, x| acc + x)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Q);
    type IntoIter = btree_map::IntoIter<K, Q>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

pub type Tensor<K> = LinComb<(K, K)>;
pub type Triple<K> = LinComb<(K, K, K)>;

/// Bilinear extension of a per-key-pair rule.
pub fn bilinear<A, B, C>(
    f: &LinComb<A>,
    g: &LinComb<B>,
    mut op: impl FnMut(&A, &B) -> LinComb<C>,
) -> LinComb<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            out.add_scaled(&op(a, b), &(ca * cb));
        }
    }
    out
}

/// Tensor pairing: product of slotwise diagonal pairings.
pub fn tensor_dot<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<(A, B)>, y: &LinComb<(A, B)>) -> Q {
    x.dot(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_prunes_zero() {
        let a = LinComb::term("H(a)", q(2));
        let b = LinComb::term("H(a)", q(3));
        assert_eq!(a.add(&b), LinComb::term("H(a)", q(5)));
        let neg = LinComb::term("H(a)", q(-1));
        assert!(LinComb::singleton("H(a)").add(&neg).is_zero());
        assert_eq!(LinComb::term("m(ab)", q(2)).scale(&q_frac(1, 2)), LinComb::singleton("m(ab)"));
    }

    #[test]
    fn linear_extension() {
        let f: LinComb<u32> = [(1, q(2)), (2, q(-1))].into_iter().collect();
        assert_eq!(f.extend_linear(|k| LinComb::singleton(*k)), f);
        assert!(f.extend_linear(|_| LinComb::<u32>::zero()).is_zero());
        let doubled = f.extend_linear(|k| LinComb::singleton(k * 10));
        assert_eq!(doubled.coeff(&20), q(-1));
    }

    #[test]
    fn dot_is_diagonal() {
        let f: LinComb<u32> = [(1, q(2)), (2, q(3))].into_iter().collect();
        let g: LinComb<u32> = [(2, q(5)), (3, q(7))].into_iter().collect();
        assert_eq!(f.dot(&g), q(15));
    }

    #[test]
    fn render_coefficients() {
        assert_eq!(render_abs(&q(-3)), "3");
        assert_eq!(render_abs(&q_frac(1, 2)), "1/2");
    }
}
