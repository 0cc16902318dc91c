//! Integer upper unitriangular matrices and their inverses.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// True when every diagonal entry is 1 and everything below it is 0.
pub fn is_upper_unitriangular(m: &[Vec<i64>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len() && row[i] == 1 && row[..i].iter().all(|&x| x == 0)
    })
}

/// Inverse of an upper unitriangular integer matrix by back-substitution.
///
/// Panics if the matrix is not upper unitriangular.
pub fn invert_upper_unitriangular(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    assert!(is_upper_unitriangular(m), "matrix is not upper unitriangular");
    let n = m.len();
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    // Column j of the inverse solves M x = e_j; rows above the diagonal only.
    for j in 0..n {
        inv[j][j] = BigInt::one();
        for i in (0..j).rev() {
            let mut acc = BigInt::zero();
            for (k, inv_row) in inv.iter().enumerate().take(j + 1).skip(i + 1) {
                if m[i][k] != 0 {
                    acc += BigInt::from(m[i][k]) * &inv_row[j];
                }
            }
            inv[i][j] = -acc;
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = vec![vec![1, 1, 2], vec![0, 1, 3], vec![0, 0, 1]];
        let inv = invert_upper_unitriangular(&m);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = BigInt::zero();
                for k in 0..3 {
                    acc += BigInt::from(m[i][k]) * &inv[k][j];
                }
                assert_eq!(acc, BigInt::from((i == j) as i64));
            }
        }
        assert!(!is_upper_unitriangular(&[vec![1, 0], vec![1, 1]]));
    }
}
