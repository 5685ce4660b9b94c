//! Radial profile functions and the Berger parameter along the radius.

use crate::error::{Error, Result};
use crate::geometry::MetricParams;

/// `f(r) = (a + b r)/r`, the conformal factor of the flat 3-part.
pub fn profile_f(params: &MetricParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    Ok(params.f(r))
}

/// `g(r) = (a r + b r^2)/(1 + c r + d r^2)`, the fiber profile.
pub fn profile_g(params: &MetricParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    let denom = params.poly(r);
    if denom <= 0.0 {
        return Err(Error::InadmissibleParams(format!(
            "1 + c r + d r^2 = {denom} <= 0 at r = {r}"
        )));
    }
    Ok(params.g(r))
}

/// `lambda(r) = (1 + c r + d r^2)^(-1/2)`: the Berger parameter of the
/// radius-`r` sphere.
pub fn lambda_of_r(params: &MetricParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    let radicand = params.poly(r);
    if radicand <= 0.0 {
        return Err(Error::InadmissibleParams(format!(
            "1 + c r + d r^2 = {radicand} <= 0 at r = {r}"
        )));
    }
    Ok(1.0 / radicand.sqrt())
}

/// Supremum of `lambda(r)` over `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LambdaMax {
    pub sup: f64,
    /// Radius where the supremum is attained; `None` when it is only the
    /// boundary limit `r -> 0` (which happens exactly for `c >= 0`).
    pub attained_at: Option<f64>,
}

/// Closed-form supremum of the Berger parameter.
///
/// For `c >= 0` the polynomial `1 + c r + d r^2` exceeds 1 on `r > 0`, so
/// the supremum is the limit value 1 at `r -> 0`. For `c < 0` the minimum
/// of the polynomial sits at `r* = -c/(2 d)` and
/// `lambda_max = (1 - c^2/(4 d))^(-1/2)`.
pub fn lambda_max(params: &MetricParams) -> LambdaMax {
    if params.c >= 0.0 {
        LambdaMax {
            sup: 1.0,
            attained_at: None,
        }
    } else {
        let r_star = -params.c / (2.0 * params.d);
        let min_poly = 1.0 - params.c * params.c / (4.0 * params.d);
        LambdaMax {
            sup: 1.0 / min_poly.sqrt(),
            attained_at: Some(r_star),
        }
    }
}
