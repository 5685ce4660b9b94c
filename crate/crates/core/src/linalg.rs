//! Small fixed-size matrix helpers, generic over [`Scalar`].
//!
//! Everything here works on plain `[[T; N]; N]` arrays; dimensions stay at
//! 3 or 4 so dense Gauss-Jordan with primal-magnitude pivoting is plenty.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Mat<T, const N: usize> = [[T; N]; N];

pub fn zeros<T: Scalar, const N: usize>() -> Mat<T, N> {
    [[T::zero(); N]; N]
}

pub fn identity<T: Scalar, const N: usize>() -> Mat<T, N> {
    let mut m = zeros();
    for i in 0..N {
        m[i][i] = T::one();
    }
    m
}

pub fn mat_mul<T: Scalar, const N: usize>(a: &Mat<T, N>, b: &Mat<T, N>) -> Mat<T, N> {
    let mut out = zeros();
    for i in 0..N {
        for j in 0..N {
            let mut acc = T::zero();
            for k in 0..N {
                acc = acc + a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn mat_vec<T: Scalar, const N: usize>(a: &Mat<T, N>, v: &[T; N]) -> [T; N] {
    std::array::from_fn(|i| {
        let mut acc = T::zero();
        for k in 0..N {
            acc = acc + a[i][k] * v[k];
        }
        acc
    })
}

pub fn transpose<T: Scalar, const N: usize>(a: &Mat<T, N>) -> Mat<T, N> {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i]))
}

/// Gauss-Jordan inverse with partial pivoting on primal magnitude.
///
/// Dual layers ride along untouched, so the result carries exact
/// derivatives of the inverse.
pub fn invert<T: Scalar, const N: usize>(m: &Mat<T, N>) -> Result<Mat<T, N>> {
    let mut a = *m;
    let mut inv = identity::<T, N>();
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&i, &j| {
                a[i][col]
                    .re()
                    .abs()
                    .partial_cmp(&a[j][col].re().abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if a[pivot][col].re().abs() < 1e-14 {
            return Err(Error::SingularMatrix);
        }
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let diag = a[col][col];
        for j in 0..N {
            a[col][j] = a[col][j] / diag;
            inv[col][j] = inv[col][j] / diag;
        }
        for row in 0..N {
            if row == col {
                continue;
            }
            let factor = a[row][col];
            for j in 0..N {
                a[row][j] = a[row][j] - factor * a[col][j];
                inv[row][j] = inv[row][j] - factor * inv[col][j];
            }
        }
    }
    Ok(inv)
}

/// Determinant by LU elimination (primal-pivoted).
pub fn determinant<T: Scalar, const N: usize>(m: &Mat<T, N>) -> T {
    let mut a = *m;
    let mut det = T::one();
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&i, &j| {
                a[i][col]
                    .re()
                    .abs()
                    .partial_cmp(&a[j][col].re().abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if a[pivot][col].re() == 0.0 {
            return T::zero();
        }
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det = det * a[col][col];
        for row in col + 1..N {
            let factor = a[row][col] / a[col][col];
            for j in col..N {
                a[row][j] = a[row][j] - factor * a[col][j];
            }
        }
    }
    det
}

/// Cholesky feasibility: `Ok` iff the primal matrix is symmetric positive
/// definite. Used as the point-admissibility gate for metric evaluations.
pub fn check_positive_definite<const N: usize>(m: &Mat<f64, N>) -> Result<()> {
    let scale = m
        .iter()
        .flatten()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1.0);
    for i in 0..N {
        for j in 0..i {
            if (m[i][j] - m[j][i]).abs() > 1e-12 * scale {
                return Err(Error::NotPositiveDefinite);
            }
        }
    }
    let mut l = [[0.0f64; N]; N];
    for i in 0..N {
        for j in 0..=i {
            let mut sum = m[i][j];
            for k in 0..j {
                sum -= l[i][k] * l[j][k];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::NotPositiveDefinite);
                }
                l[i][i] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    Ok(())
}

pub fn max_abs<const N: usize>(m: &Mat<f64, N>) -> f64 {
    m.iter().flatten().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn inverse_roundtrip() {
        let m: Mat<f64, 4> = [
            [4.0, 1.0, 0.2, 0.0],
            [1.0, 3.0, 0.0, 0.5],
            [0.2, 0.0, 2.0, 0.1],
            [0.0, 0.5, 0.1, 1.5],
        ];
        let inv = invert(&m).unwrap();
        let prod = mat_mul(&m, &inv);
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert_relative_eq!(prod[i][j], expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn singular_matrix_rejected() {
        let m: Mat<f64, 3> = [[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]];
        assert!(invert(&m).is_err());
    }

    #[test]
    fn determinant_of_triangular_product() {
        let m: Mat<f64, 3> = [[2.0, 1.0, 0.0], [0.0, 3.0, 1.0], [0.0, 0.0, 0.5]];
        assert_relative_eq!(determinant(&m), 3.0);
    }

    #[test]
    fn cholesky_accepts_spd_rejects_indefinite() {
        let spd: Mat<f64, 2> = [[2.0, 0.3], [0.3, 1.0]];
        assert!(check_positive_definite(&spd).is_ok());
        let indef: Mat<f64, 2> = [[1.0, 2.0], [2.0, 1.0]];
        assert!(check_positive_definite(&indef).is_err());
    }

    #[test]
    fn derivative_of_inverse_via_duals() {
        use crate::scalar::Dual;
        // d/dt (1/(1+t)) at t=0.5 computed through the generic inverse.
        let t = Dual::variable(0.5f64);
        let m = [[Dual::constant(1.0) + t]];
        let inv = invert(&m).unwrap();
        assert_relative_eq!(inv[0][0].val, 1.0 / 1.5);
        assert_relative_eq!(inv[0][0].eps, -1.0 / (1.5 * 1.5));
    }
}
