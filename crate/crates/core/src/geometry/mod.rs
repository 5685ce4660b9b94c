//! Metric family, curvature engine, tetrads and spin connection.
//!
//! The family lives on punctured `R^4` and is controlled by four real
//! constants `(a, b, c, d)` through the radial profiles
//! `f(r) = (a + b r)/r` and `g(r) = (a r + b r^2)/(1 + c r + d r^2)`,
//! plus the Kaluza-Klein scale `mu` used by the Cartesian monopole chart.

mod curvature;
mod gauge;
mod metrics;
mod profiles;
mod tetrad;

pub use curvature::{curvature_at, curvature_bundle, CurvatureBundle, MetricField};
pub use gauge::{monopole_field, monopole_potential, GaugeForm, MonopoleForm};
pub use metrics::{
    berger_metric, berger_scalar_curvature, cartesian_metric, extended_metric, BergerMetric,
    CartesianMetric, ExtendedMetric, FlatMetric,
};
pub use profiles::{lambda_max, lambda_of_r, profile_f, profile_g, LambdaMax};
pub use tetrad::{
    dirac_apply, dirac_apply_closed_form, gamma5, gamma_matrices, spin_commutator_check,
    spin_connection_at, tetrad_at, SpinorField, Tetrad,
};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Points closer than this to a coordinate-singular set are rejected
/// outright instead of producing huge finite values.
pub const POLE_MARGIN: f64 = 1e-6;

/// The four metric constants plus the Kaluza-Klein scale `mu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub mu: f64,
}

impl MetricParams {
    /// Validated constructor; `mu` defaults to `a/b` when `a > 0`, else 1.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let mu = if a > 0.0 { a / b } else { 1.0 };
        Self::with_mu(a, b, c, d, mu)
    }

    pub fn with_mu(a: f64, b: f64, c: f64, d: f64, mu: f64) -> Result<Self> {
        if !(a >= 0.0) {
            return Err(Error::InadmissibleParams(format!("a = {a} must be >= 0")));
        }
        if !(b > 0.0) {
            return Err(Error::InadmissibleParams(format!("b = {b} must be > 0")));
        }
        if !(d > 0.0) {
            return Err(Error::InadmissibleParams(format!("d = {d} must be > 0")));
        }
        if !(c > -2.0 * d.sqrt()) {
            return Err(Error::InadmissibleParams(format!(
                "c = {c} must exceed -2*sqrt(d) = {}",
                -2.0 * d.sqrt()
            )));
        }
        if !(mu > 0.0) {
            return Err(Error::InadmissibleParams(format!("mu = {mu} must be > 0")));
        }
        Ok(MetricParams { a, b, c, d, mu })
    }

    /// Constants `c = 2b/a`, `d = b^2/a^2`, `mu = a/b`: the self-dual member
    /// of the family, for which the anomaly vanishes and `U*V = 1`.
    pub fn standard(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::InadmissibleParams(
                "standard constants need a > 0".into(),
            ));
        }
        Self::with_mu(a, b, 2.0 * b / a, (b / a) * (b / a), a / b)
    }

    /// Whether `(c, d)` sit on the standard constraint surface.
    pub fn is_standard(&self) -> bool {
        if self.a <= 0.0 {
            return false;
        }
        let c0 = 2.0 * self.b / self.a;
        let d0 = (self.b / self.a) * (self.b / self.a);
        (self.c - c0).abs() <= 1e-12 * c0.abs().max(1.0)
            && (self.d - d0).abs() <= 1e-12 * d0.abs().max(1.0)
    }

    /// Profile `f(r) = (a + b r)/r`, generic over the scalar type.
    pub fn f<T: Scalar>(&self, r: T) -> T {
        (T::from_f64(self.a) + T::from_f64(self.b) * r) / r
    }

    /// Profile `g(r) = (a r + b r^2)/(1 + c r + d r^2)`.
    pub fn g<T: Scalar>(&self, r: T) -> T {
        (T::from_f64(self.a) * r + T::from_f64(self.b) * r * r) / self.poly(r)
    }

    /// Berger parameter `lambda(r) = (1 + c r + d r^2)^(-1/2)`.
    pub fn lambda<T: Scalar>(&self, r: T) -> T {
        T::one() / self.poly(r).sqrt()
    }

    pub(crate) fn poly<T: Scalar>(&self, r: T) -> T {
        T::one() + T::from_f64(self.c) * r + T::from_f64(self.d) * r * r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chart {
    Spherical,
    Cartesian,
}

/// A point of the punctured manifold in one of the two charts.
///
/// Spherical coordinates are `(r, theta, phi, chi)` with `r > 0`,
/// `theta` in `(0, pi)`, `phi` in `[0, 2pi)` and `chi` in `[0, 4pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChartPoint {
    pub chart: Chart,
    pub coords: [f64; 4],
}

impl ChartPoint {
    pub fn spherical(r: f64, theta: f64, phi: f64, chi: f64) -> Self {
        ChartPoint {
            chart: Chart::Spherical,
            coords: [r, theta, phi, chi],
        }
    }

    pub fn cartesian(x: [f64; 4]) -> Self {
        ChartPoint {
            chart: Chart::Cartesian,
            coords: x,
        }
    }

    /// Spherical coordinates after singularity screening.
    pub fn require_spherical(&self) -> Result<[f64; 4]> {
        match self.chart {
            Chart::Cartesian => Err(Error::InvalidArgument(
                "expected a spherical-chart point".into(),
            )),
            Chart::Spherical => {
                let [r, theta, ..] = self.coords;
                if !(r > 0.0) {
                    return Err(Error::NonpositiveRadius(r));
                }
                if theta < POLE_MARGIN || theta > std::f64::consts::PI - POLE_MARGIN {
                    return Err(Error::CoordinateSingularity(format!(
                        "theta = {theta} within {POLE_MARGIN} of a pole"
                    )));
                }
                Ok(self.coords)
            }
        }
    }

    /// Cartesian coordinates after puncture and monopole-string screening.
    pub fn require_cartesian(&self) -> Result<[f64; 4]> {
        match self.chart {
            Chart::Spherical => Err(Error::InvalidArgument(
                "expected a Cartesian-chart point".into(),
            )),
            Chart::Cartesian => {
                let [x1, x2, x3, _] = self.coords;
                let r = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
                if !(r > 0.0) {
                    return Err(Error::NonpositiveRadius(r));
                }
                if r + x3 <= POLE_MARGIN * r {
                    return Err(Error::GaugeSingularity(x1, x2, x3));
                }
                Ok(self.coords)
            }
        }
    }

    /// Map a spherical point to the Cartesian chart (`x4 = -mu (chi + phi)`).
    pub fn to_cartesian(&self, mu: f64) -> Result<ChartPoint> {
        let [r, theta, phi, chi] = self.require_spherical()?;
        Ok(ChartPoint::cartesian([
            r * theta.sin() * phi.cos(),
            r * theta.sin() * phi.sin(),
            r * theta.cos(),
            -mu * (chi + phi),
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_gates() {
        assert!(MetricParams::new(1.0, 1.0, 0.0, 1.0).is_ok());
        assert!(MetricParams::new(-0.1, 1.0, 0.0, 1.0).is_err());
        assert!(MetricParams::new(1.0, 0.0, 0.0, 1.0).is_err());
        assert!(MetricParams::new(1.0, 1.0, 0.0, -1.0).is_err());
        // c = -2 sqrt(d) exactly is already inadmissible.
        assert!(MetricParams::new(1.0, 1.0, -2.0, 1.0).is_err());
        assert!(MetricParams::new(1.0, 1.0, -1.95, 1.0).is_ok());
    }

    #[test]
    fn standard_constants() {
        let p = MetricParams::standard(2.0, 0.5).unwrap();
        assert_eq!(p.c, 0.5);
        assert_eq!(p.d, 0.0625);
        assert_eq!(p.mu, 4.0);
        assert!(p.is_standard());
        assert!(!MetricParams::new(1.0, 1.0, 0.0, 1.0).unwrap().is_standard());
    }

    #[test]
    fn pole_screening() {
        let p = ChartPoint::spherical(1.0, 1e-8, 0.0, 0.0);
        assert!(p.require_spherical().is_err());
        let q = ChartPoint::spherical(1.0, 1.0, 0.3, 0.2);
        assert!(q.require_spherical().is_ok());
    }

    #[test]
    fn string_screening() {
        // On the negative x3 axis the monopole potential is singular.
        let p = ChartPoint::cartesian([0.0, 0.0, -2.0, 0.4]);
        assert!(p.require_cartesian().is_err());
        let q = ChartPoint::cartesian([0.0, 0.0, 2.0, 0.4]);
        assert!(q.require_cartesian().is_ok());
    }
}
