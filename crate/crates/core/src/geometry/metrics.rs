//! The three concrete metrics: extended family in the spherical chart,
//! Berger spheres, and the Cartesian monopole form.

use crate::error::Result;
use crate::geometry::curvature::{curvature_at, MetricField};
use crate::geometry::gauge::{GaugeForm, MonopoleForm};
use crate::geometry::{ChartPoint, MetricParams};
use crate::linalg::{check_positive_definite, Mat};
use crate::scalar::Scalar;

/// Extended family in spherical coordinates `(r, theta, phi, chi)`:
/// `f (dr^2 + r^2 dtheta^2 + r^2 sin^2(theta) dphi^2) + g (dchi + cos(theta) dphi)^2`.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedMetric {
    pub params: MetricParams,
}

impl MetricField<4> for ExtendedMetric {
    fn components<T: Scalar>(&self, x: &[T; 4]) -> Mat<T, 4> {
        let (r, theta) = (x[0], x[1]);
        let f = self.params.f(r);
        let g = self.params.g(r);
        let sin = theta.sin();
        let cos = theta.cos();
        let mut m = [[T::zero(); 4]; 4];
        m[0][0] = f;
        m[1][1] = f * r * r;
        m[2][2] = f * r * r * sin * sin + g * cos * cos;
        m[2][3] = g * cos;
        m[3][2] = m[2][3];
        m[3][3] = g;
        m
    }
}

/// Berger metric on `S^3` in `(theta, phi, chi)`:
/// `g_lambda = g_H + lambda^2 g_V` with `g_H = ds2^2/4` and
/// `g_V = (dchi + cos(theta) dphi)^2 / 4`.
#[derive(Debug, Clone, Copy)]
pub struct BergerMetric {
    pub lambda: f64,
}

impl MetricField<3> for BergerMetric {
    fn components<T: Scalar>(&self, x: &[T; 3]) -> Mat<T, 3> {
        let theta = x[0];
        let quarter = T::from_f64(0.25);
        let l2 = T::from_f64(self.lambda * self.lambda);
        let sin = theta.sin();
        let cos = theta.cos();
        let mut m = [[T::zero(); 3]; 3];
        m[0][0] = quarter;
        m[1][1] = quarter * (sin * sin + l2 * cos * cos);
        m[1][2] = quarter * l2 * cos;
        m[2][1] = m[1][2];
        m[2][2] = quarter * l2;
        m
    }
}

/// Cartesian monopole form `U dx.dx + V (dx4 + A_i dx^i)^2`.
#[derive(Debug, Clone, Copy)]
pub struct CartesianMetric {
    pub form: MonopoleForm,
}

impl CartesianMetric {
    pub fn new(params: MetricParams) -> Self {
        CartesianMetric {
            form: MonopoleForm { params },
        }
    }
}

impl MetricField<4> for CartesianMetric {
    fn components<T: Scalar>(&self, x: &[T; 4]) -> Mat<T, 4> {
        let spatial = [x[0], x[1], x[2]];
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        let u = self.form.u(r);
        let v = self.form.v(r);
        let a = self.form.potential(&spatial);
        let mut m = [[T::zero(); 4]; 4];
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = v * a[i] * a[j];
                if i == j {
                    m[i][j] = m[i][j] + u;
                }
            }
            m[i][3] = v * a[i];
            m[3][i] = m[i][3];
        }
        m[3][3] = v;
        m
    }
}

/// Euclidean metric in Cartesian coordinates, any dimension.
#[derive(Debug, Clone, Copy)]
pub struct FlatMetric;

impl<const N: usize> MetricField<N> for FlatMetric {
    fn components<T: Scalar>(&self, _x: &[T; N]) -> Mat<T, N> {
        crate::linalg::identity()
    }
}

/// Extended metric components at a screened spherical point.
pub fn extended_metric(params: &MetricParams, point: &ChartPoint) -> Result<Mat<f64, 4>> {
    let x = point.require_spherical()?;
    let m = ExtendedMetric { params: *params }.components(&x);
    check_positive_definite(&m)?;
    Ok(m)
}

/// Berger metric components at `(theta, phi, chi)`, off the poles.
pub fn berger_metric(lambda: f64, angles: &[f64; 3]) -> Result<Mat<f64, 3>> {
    if !(lambda > 0.0) {
        return Err(crate::error::Error::InvalidArgument(format!(
            "Berger parameter must be positive, got {lambda}"
        )));
    }
    let theta = angles[0];
    if theta < crate::geometry::POLE_MARGIN
        || theta > std::f64::consts::PI - crate::geometry::POLE_MARGIN
    {
        return Err(crate::error::Error::CoordinateSingularity(format!(
            "theta = {theta} within pole margin"
        )));
    }
    let m = BergerMetric { lambda }.components(angles);
    check_positive_definite(&m)?;
    Ok(m)
}

/// Cartesian monopole-form components at a screened Cartesian point.
pub fn cartesian_metric(params: &MetricParams, point: &ChartPoint) -> Result<Mat<f64, 4>> {
    let x = point.require_cartesian()?;
    let m = CartesianMetric::new(*params).components(&x);
    check_positive_definite(&m)?;
    Ok(m)
}

/// Scalar curvature of the Berger sphere `g_lambda`, computed by the
/// curvature engine (it is constant over the sphere).
pub fn berger_scalar_curvature(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(crate::error::Error::InvalidArgument(format!(
            "Berger parameter must be positive, got {lambda}"
        )));
    }
    let bundle = curvature_at(&BergerMetric { lambda }, &[1.1, 0.6, 2.3])?;
    Ok(bundle.scalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use crate::linalg::determinant;

    fn tiny_d(a: f64, b: f64, c: f64) -> MetricParams {
        // d -> 0 limit member, admissible but numerically flat-denominator.
        MetricParams::with_mu(a, b, c, 1e-300, 1.0).unwrap()
    }

    #[test]
    fn equator_cross_term_vanishes() {
        let params = tiny_d(1.0, 1.0, 0.0);
        let p = ChartPoint::spherical(1.0, std::f64::consts::FRAC_PI_2, 0.7, 1.2);
        let m = extended_metric(&params, &p).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 2.0 } else { 0.0 };
                assert_relative_eq!(m[i][j], expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn determinant_factorization() {
        let params = MetricParams::new(1.3, 0.8, -0.4, 0.9).unwrap();
        for (r, theta) in [(0.7, 0.9), (2.1, 2.0), (5.0, 1.2)] {
            let p = ChartPoint::spherical(r, theta, 0.3, 0.1);
            let m = extended_metric(&params, &p).unwrap();
            let f = params.f(r);
            let g = params.g(r);
            let expected = f * f * f * g * r.powi(4) * theta.sin().powi(2);
            assert_relative_eq!(determinant(&m), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn berger_form_agreement() {
        // Extended metric equals (a r + b r^2) (dr^2/r^2 + 4 g_lambda(r))
        // componentwise.
        let params = MetricParams::new(0.6, 1.4, -0.9, 1.1).unwrap();
        for (r, theta) in [(0.4, 0.8), (1.0, 1.9), (3.3, 2.6)] {
            let p = ChartPoint::spherical(r, theta, 0.5, 0.9);
            let m = extended_metric(&params, &p).unwrap();
            let conf = params.a * r + params.b * r * r;
            let lambda = params.lambda(r);
            let gb = BergerMetric { lambda }.components(&[theta, 0.5, 0.9]);
            assert_relative_eq!(m[0][0], conf / (r * r), max_relative = 1e-12);
            for i in 0..3 {
                for j in 0..3 {
                    assert_relative_eq!(
                        m[i + 1][j + 1],
                        4.0 * conf * gb[i][j],
                        max_relative = 1e-12,
                        epsilon = 1e-300
                    );
                }
            }
        }
    }

    #[test]
    fn berger_unit_parameter_is_round() {
        let m = berger_metric(1.0, &[0.9, 0.3, 2.0]).unwrap();
        let s = 0.9f64.sin();
        let c = 0.9f64.cos();
        let round = [
            [0.25, 0.0, 0.0],
            [0.0, 0.25 * (s * s + c * c), 0.25 * c],
            [0.0, 0.25 * c, 0.25],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(m[i][j], round[i][j], epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn berger_scalar_curvature_sign_pattern() {
        // Round sphere of radius 1/2: scal = 6/(1/2)^2 = 24.
        assert_relative_eq!(berger_scalar_curvature(1.0).unwrap(), 24.0, max_relative = 1e-9);
        assert!(berger_scalar_curvature(1.5).unwrap() > 0.0);
        assert!(berger_scalar_curvature(2.0).unwrap().abs() < 1e-8);
        assert!(berger_scalar_curvature(2.5).unwrap() < 0.0);
        assert!(berger_scalar_curvature(4.0).unwrap() < 0.0);
    }

    #[test]
    fn cartesian_metric_examples() {
        let params = MetricParams::standard(1.0, 1.0).unwrap();
        let metric = CartesianMetric::new(params);
        // U V = 1 everywhere for standard constants with mu = a/b.
        for x in [[1.0, 0.2, 0.4, 0.0], [0.1, -0.5, 0.9, 2.0]] {
            let u = metric.form.u((x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt());
            let v = metric.form.v((x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt());
            assert_relative_eq!(u * v, 1.0, max_relative = 1e-12);
        }
        // On the positive x3 axis the potential vanishes and the metric is
        // diagonal there.
        let p = ChartPoint::cartesian([0.0, 0.0, 1.3, 0.2]);
        let m = cartesian_metric(&params, &p).unwrap();
        for i in 0..3 {
            assert_relative_eq!(m[i][3], 0.0);
        }
        // String singularity rejected.
        let s = ChartPoint::cartesian([0.0, 0.0, -1.3, 0.2]);
        assert!(cartesian_metric(&params, &s).is_err());
    }

    #[test]
    fn spherical_and_cartesian_charts_agree_on_invariants() {
        // Scalar curvature is chart-independent; compare the two charts of
        // the same geometry at matching points.
        let params = MetricParams::new(1.0, 1.0, 0.4, 0.7).unwrap();
        let sph = ChartPoint::spherical(1.3, 1.1, 0.7, 2.0);
        let cart = sph.to_cartesian(params.mu).unwrap();
        let bs = curvature_at(&ExtendedMetric { params }, &sph.coords).unwrap();
        let bc = curvature_at(&CartesianMetric::new(params), &cart.coords).unwrap();
        // The Cartesian line element carries a global 1/b factor, which
        // rescales the scalar curvature by b.
        assert_relative_eq!(bs.scalar * params.b, bc.scalar, max_relative = 1e-8, epsilon = 1e-10);
    }

    #[test]
    fn generic_extension_is_not_ricci_flat() {
        let params = MetricParams::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let b = curvature_at(&ExtendedMetric { params }, &[1.0, 1.2, 0.4, 0.7]).unwrap();
        assert!(b.max_abs_ricci() > 1e-3);
    }

    #[test]
    fn standard_member_is_ricci_flat() {
        let params = MetricParams::standard(1.0, 1.0).unwrap();
        for (r, theta) in [(0.5, 0.8), (1.7, 2.1), (4.0, 1.3)] {
            let b = curvature_at(&ExtendedMetric { params }, &[r, theta, 0.9, 0.2]).unwrap();
            assert!(
                b.max_abs_ricci() <= 1e-8 * b.curvature_scale(),
                "|Ric| = {} at r = {r}",
                b.max_abs_ricci()
            );
        }
    }
}
