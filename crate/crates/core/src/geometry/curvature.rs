//! Dimension-generic curvature engine.
//!
//! A metric enters as a pure component function over dual-capable scalars;
//! Christoffel symbols come from one forward-mode layer, the Riemann tensor
//! from a second. Conventions, fixed once and used everywhere:
//!
//! ```text
//! Gamma^mu_{nu lam} = 1/2 g^{mu rho} (d_nu g_{rho lam} + d_lam g_{rho nu} - d_rho g_{nu lam})
//! R^mu_{nu lam sig} = d_lam Gamma^mu_{nu sig} - d_sig Gamma^mu_{nu lam}
//!                     + Gamma^mu_{lam rho} Gamma^rho_{nu sig} - Gamma^mu_{sig rho} Gamma^rho_{nu lam}
//! Ric_{nu sig}      = R^mu_{nu mu sig}
//! ```
//!
//! With these signs the round sphere has positive scalar curvature.

use crate::error::Result;
use crate::linalg::{check_positive_definite, invert, Mat};
use crate::scalar::{seed, Dual, Scalar};

/// A metric given by a pure, dual-capable component function.
pub trait MetricField<const N: usize>: Sync {
    fn components<T: Scalar>(&self, x: &[T; N]) -> Mat<T, N>;
}

/// Metric, inverse, Christoffels, Riemann, Ricci and scalar curvature,
/// generic over the scalar type so the whole bundle can itself be
/// differentiated.
#[derive(Debug, Clone)]
pub struct CurvatureBundle<T, const N: usize> {
    pub g: Mat<T, N>,
    pub g_inv: Mat<T, N>,
    /// `gamma[mu][nu][lam] = Gamma^mu_{nu lam}`.
    pub gamma: [Mat<T, N>; N],
    /// `riemann[mu][nu][lam][sig] = R^mu_{nu lam sig}`.
    pub riemann: [[Mat<T, N>; N]; N],
    pub ricci: Mat<T, N>,
    pub scalar: T,
}

/// Metric and first derivatives at `x` through one dual layer.
fn metric_with_gradient<T: Scalar, const N: usize>(
    field: &impl MetricField<N>,
    x: &[T; N],
) -> (Mat<T, N>, [Mat<T, N>; N]) {
    let mut g = [[T::zero(); N]; N];
    let mut dg = [[[T::zero(); N]; N]; N];
    for dir in 0..N {
        let gd = field.components(&seed(x, dir));
        for i in 0..N {
            for j in 0..N {
                dg[dir][i][j] = gd[i][j].eps;
                if dir == 0 {
                    g[i][j] = gd[i][j].val;
                }
            }
        }
    }
    (g, dg)
}

/// Christoffel symbols of the second kind at `x`.
pub fn christoffel_at<T: Scalar, const N: usize>(
    field: &impl MetricField<N>,
    x: &[T; N],
) -> Result<[Mat<T, N>; N]> {
    let (g, dg) = metric_with_gradient(field, x);
    let g_inv = invert(&g)?;
    Ok(christoffel_from_jet(&g_inv, &dg))
}

fn christoffel_from_jet<T: Scalar, const N: usize>(
    g_inv: &Mat<T, N>,
    dg: &[Mat<T, N>; N],
) -> [Mat<T, N>; N] {
    let half = T::from_f64(0.5);
    let mut gamma = [[[T::zero(); N]; N]; N];
    for mu in 0..N {
        for nu in 0..N {
            for lam in 0..=nu {
                let mut acc = T::zero();
                for rho in 0..N {
                    acc = acc
                        + g_inv[mu][rho]
                            * (dg[nu][rho][lam] + dg[lam][rho][nu] - dg[rho][nu][lam]);
                }
                let value = half * acc;
                gamma[mu][nu][lam] = value;
                gamma[mu][lam][nu] = value;
            }
        }
    }
    gamma
}

/// Full curvature data at `x`, generic over the scalar type.
pub fn curvature_bundle<T: Scalar, const N: usize>(
    field: &impl MetricField<N>,
    x: &[T; N],
) -> Result<CurvatureBundle<T, N>> {
    let (g, dg) = metric_with_gradient(field, x);
    let g_inv = invert(&g)?;
    let gamma = christoffel_from_jet(&g_inv, &dg);

    // d_lam Gamma via a dual layer over the Christoffel evaluation itself.
    let mut dgamma = [[[[T::zero(); N]; N]; N]; N];
    for lam in 0..N {
        let gd: [Mat<Dual<T>, N>; N] = christoffel_at(field, &seed(x, lam))?;
        for mu in 0..N {
            for nu in 0..N {
                for sig in 0..N {
                    dgamma[lam][mu][nu][sig] = gd[mu][nu][sig].eps;
                }
            }
        }
    }

    let mut riemann = [[[[T::zero(); N]; N]; N]; N];
    for mu in 0..N {
        for nu in 0..N {
            for lam in 0..N {
                for sig in 0..lam {
                    let mut acc = dgamma[lam][mu][nu][sig] - dgamma[sig][mu][nu][lam];
                    for rho in 0..N {
                        acc = acc + gamma[mu][lam][rho] * gamma[rho][nu][sig]
                            - gamma[mu][sig][rho] * gamma[rho][nu][lam];
                    }
                    riemann[mu][nu][lam][sig] = acc;
                    riemann[mu][nu][sig][lam] = -acc;
                }
            }
        }
    }

    let mut ricci = [[T::zero(); N]; N];
    for nu in 0..N {
        for sig in 0..N {
            let mut acc = T::zero();
            for mu in 0..N {
                acc = acc + riemann[mu][nu][mu][sig];
            }
            ricci[nu][sig] = acc;
        }
    }

    let mut scalar = T::zero();
    for nu in 0..N {
        for sig in 0..N {
            scalar = scalar + g_inv[nu][sig] * ricci[nu][sig];
        }
    }

    Ok(CurvatureBundle {
        g,
        g_inv,
        gamma,
        riemann,
        ricci,
        scalar,
    })
}

/// Curvature at an `f64` point, with the positive-definiteness gate.
pub fn curvature_at<const N: usize>(
    field: &impl MetricField<N>,
    x: &[f64; N],
) -> Result<CurvatureBundle<f64, N>> {
    check_positive_definite(&field.components(x))?;
    curvature_bundle(field, x)
}

impl<const N: usize> CurvatureBundle<f64, N> {
    /// Largest absolute Riemann component; curvature scale for
    /// relative comparisons (floored at 1).
    pub fn curvature_scale(&self) -> f64 {
        let mut scale: f64 = 1.0;
        for mu in 0..N {
            for nu in 0..N {
                for lam in 0..N {
                    for sig in 0..N {
                        scale = scale.max(self.riemann[mu][nu][lam][sig].abs());
                    }
                }
            }
        }
        scale
    }

    /// Max |R^mu_{[nu lam sig]}| over index choices (first Bianchi identity).
    pub fn bianchi_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..N {
            for nu in 0..N {
                for lam in 0..N {
                    for sig in 0..N {
                        let cyc = self.riemann[mu][nu][lam][sig]
                            + self.riemann[mu][lam][sig][nu]
                            + self.riemann[mu][sig][nu][lam];
                        worst = worst.max(cyc.abs());
                    }
                }
            }
        }
        worst
    }

    pub fn ricci_symmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.ricci[i][j] - self.ricci[j][i]).abs());
            }
        }
        worst
    }

    pub fn max_abs_ricci(&self) -> f64 {
        crate::linalg::max_abs(&self.ricci)
    }
}

/// Max |g_{mu nu; lam}|: the covariant derivative of the metric itself,
/// which must vanish for a Levi-Civita connection.
pub fn metric_compatibility_residual<const N: usize>(
    field: &impl MetricField<N>,
    x: &[f64; N],
) -> Result<f64> {
    let (_, dg) = metric_with_gradient(field, x);
    let gamma = christoffel_at(field, x)?;
    let g = field.components(x);
    let mut worst = 0.0f64;
    for lam in 0..N {
        for mu in 0..N {
            for nu in 0..N {
                let mut cov = dg[lam][mu][nu];
                for rho in 0..N {
                    cov -= gamma[rho][lam][mu] * g[rho][nu] + gamma[rho][lam][nu] * g[mu][rho];
                }
                worst = worst.max(cov.abs());
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    struct FlatCartesian;
    impl MetricField<4> for FlatCartesian {
        fn components<T: Scalar>(&self, _x: &[T; 4]) -> Mat<T, 4> {
            crate::linalg::identity()
        }
    }

    /// Flat plane in polar coordinates: nonzero Christoffels, zero curvature.
    struct FlatPolar;
    impl MetricField<2> for FlatPolar {
        fn components<T: Scalar>(&self, x: &[T; 2]) -> Mat<T, 2> {
            let r = x[0];
            [[T::one(), T::zero()], [T::zero(), r * r]]
        }
    }

    /// Round 2-sphere of radius `R` in (theta, phi).
    struct Sphere2 {
        radius: f64,
    }
    impl MetricField<2> for Sphere2 {
        fn components<T: Scalar>(&self, x: &[T; 2]) -> Mat<T, 2> {
            let r2 = T::from_f64(self.radius * self.radius);
            let s = x[0].sin();
            [[r2, T::zero()], [T::zero(), r2 * s * s]]
        }
    }

    #[test]
    fn flat_metric_is_flat() {
        let b = curvature_at(&FlatCartesian, &[0.3, -1.0, 2.0, 0.1]).unwrap();
        assert_eq!(b.scalar, 0.0);
        assert_eq!(b.max_abs_ricci(), 0.0);
        for mu in 0..4 {
            assert_eq!(crate::linalg::max_abs(&b.gamma[mu]), 0.0);
        }
    }

    #[test]
    fn flat_polar_has_christoffels_but_no_curvature() {
        let x = [1.7, 0.8];
        let b = curvature_at(&FlatPolar, &x).unwrap();
        assert_relative_eq!(b.gamma[0][1][1], -1.7, max_relative = 1e-12);
        assert_relative_eq!(b.gamma[1][0][1], 1.0 / 1.7, max_relative = 1e-12);
        assert!(b.max_abs_ricci() < 1e-12);
        assert!(b.scalar.abs() < 1e-12);
        assert!(metric_compatibility_residual(&FlatPolar, &x).unwrap() < 1e-12);
    }

    #[test]
    fn sphere_curvature_matches_closed_form() {
        let radius = 1.3;
        let field = Sphere2 { radius };
        let b = curvature_at(&field, &[1.1, 0.4]).unwrap();
        // Ric = g / R^2 and scal = 2/R^2 in this convention.
        assert_relative_eq!(b.scalar, 2.0 / (radius * radius), max_relative = 1e-11);
        for i in 0..2 {
            for j in 0..2 {
                assert_relative_eq!(
                    b.ricci[i][j],
                    b.g[i][j] / (radius * radius),
                    epsilon = 1e-11
                );
            }
        }
        assert!(b.bianchi_residual() < 1e-11);
        assert!(b.ricci_symmetry_residual() < 1e-11);
    }

    #[test]
    fn indefinite_input_is_rejected() {
        struct Indefinite;
        impl MetricField<2> for Indefinite {
            fn components<T: Scalar>(&self, _x: &[T; 2]) -> Mat<T, 2> {
                [[T::one(), T::zero()], [T::zero(), -T::one()]]
            }
        }
        assert!(curvature_at(&Indefinite, &[0.0, 0.0]).is_err());
    }
}
