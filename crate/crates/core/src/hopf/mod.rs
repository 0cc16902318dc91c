//! Graded connected Hopf algebras on a distinguished basis.
//!
//! Each algebra only has to say what its structure maps do on a single basis
//! key; bilinear and linear extension is shared.

mod colored;
mod maps;

pub use colored::{NSymA, PSymA, QSymA, SymA};
pub use maps::{chi, iota, m_from_m_basis, uncolor_h, uncolor_m_psentence, uncolor_sentence, NotSymmetric};

use std::fmt::Debug;

use num_traits::Zero;

use crate::linear::{bilinear, LinComb, Tensor, Q};

pub trait GradedHopf: Sync {
    type Key: Ord + Clone + Debug + Send + Sync;

    fn name(&self) -> &'static str;

    /// Whether the product is commutative (so `S∘S = id`).
    fn commutative(&self) -> bool;

    fn unit(&self) -> Self::Key;

    fn degree(&self, k: &Self::Key) -> usize;

    /// Basis of the degree-`n` component in canonical order.
    fn basis(&self, n: usize) -> Vec<Self::Key>;

    /// Number of basis keys of degree `n`, without enumerating them.
    fn basis_len(&self, n: usize) -> u128;

    fn mul_keys(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    fn delta_key(&self, a: &Self::Key) -> Tensor<Self::Key>;

    fn antipode_key(&self, a: &Self::Key) -> LinComb<Self::Key>;

    fn render(&self, k: &Self::Key) -> String;

    fn one(&self) -> LinComb<Self::Key> {
        LinComb::singleton(self.unit())
    }

    fn mul(&self, f: &LinComb<Self::Key>, g: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        bilinear(f, g, |a, b| self.mul_keys(a, b))
    }

    fn delta(&self, f: &LinComb<Self::Key>) -> Tensor<Self::Key> {
        f.extend_linear(|k| self.delta_key(k))
    }

    fn antipode(&self, f: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        f.extend_linear(|k| self.antipode_key(k))
    }

    fn counit(&self, f: &LinComb<Self::Key>) -> Q {
        f.iter()
            .filter(|(k, _)| self.degree(k) == 0)
            .fold(Q::zero(), |acc, (_, c)| acc + c)
    }

    /// `μ` applied to a tensor.
    fn mul_tensor(&self, t: &Tensor<Self::Key>) -> LinComb<Self::Key> {
        t.extend_linear(|(a, b)| self.mul_keys(a, b))
    }

    /// Product in `H ⊗ H`: `(a1 ⊗ a2)(b1 ⊗ b2) = a1 b1 ⊗ a2 b2`.
    fn mul_in_tensor(&self, x: &Tensor<Self::Key>, y: &Tensor<Self::Key>) -> Tensor<Self::Key> {
        bilinear(x, y, |(a1, a2), (b1, b2)| {
            bilinear(&self.mul_keys(a1, b1), &self.mul_keys(a2, b2), |l, r| {
                LinComb::singleton((l.clone(), r.clone()))
            })
        })
    }
}
