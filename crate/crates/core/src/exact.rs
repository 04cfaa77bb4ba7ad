//! Fraction-free exact determinants over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix by Bareiss (fraction-free) one-step
/// elimination. All intermediate values are determinants of submatrices, so
/// every division below is exact.
pub fn bareiss_det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(matrix.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search below row k
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Absolute value of `bareiss_det`, for unsigned invariants.
pub fn bareiss_det_abs(matrix: &[Vec<BigInt>]) -> BigInt {
    bareiss_det(matrix).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(bareiss_det(&[]), BigInt::one());
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_det(&mat(&[&[5]])), BigInt::from(5));
        assert_eq!(bareiss_det(&mat(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(
            bareiss_det(&mat(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
    }

    #[test]
    fn singular_matrix() {
        assert_eq!(bareiss_det(&mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn pivot_swap_keeps_sign() {
        // row-swapped identity: det = -1
        assert_eq!(bareiss_det(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    }
}
