//! Kaluza-Klein gauge data for the Cartesian chart: the conformal factors
//! `U`, `V` and the monopole vector potential.

use crate::geometry::MetricParams;
use crate::scalar::{seed, Scalar};

/// A metric of the form `U(r) dx.dx + V(r)(dx4 + A_i dx^i)^2` on punctured
/// `R^4`, given through dual-capable component functions.
pub trait GaugeForm: Sync {
    fn u<T: Scalar>(&self, r: T) -> T;
    fn v<T: Scalar>(&self, r: T) -> T;
    fn potential<T: Scalar>(&self, x: &[T; 3]) -> [T; 3];
}

/// The extended family in its Cartesian monopole form:
/// `U = f/b`, `V = g/(b mu^2)`, `A` the Dirac monopole potential.
#[derive(Debug, Clone, Copy)]
pub struct MonopoleForm {
    pub params: MetricParams,
}

impl GaugeForm for MonopoleForm {
    fn u<T: Scalar>(&self, r: T) -> T {
        self.params.f(r) / T::from_f64(self.params.b)
    }
    fn v<T: Scalar>(&self, r: T) -> T {
        self.params.g(r) / T::from_f64(self.params.b * self.params.mu * self.params.mu)
    }
    fn potential<T: Scalar>(&self, x: &[T; 3]) -> [T; 3] {
        monopole_potential(self.params.mu, x)
    }
}

/// Flat gauge data (`U = V = 1`, `A = 0`); tetrads built from it are the
/// identity and the spin connection vanishes.
#[derive(Debug, Clone, Copy)]
pub struct FlatForm;

impl GaugeForm for FlatForm {
    fn u<T: Scalar>(&self, _r: T) -> T {
        T::one()
    }
    fn v<T: Scalar>(&self, _r: T) -> T {
        T::one()
    }
    fn potential<T: Scalar>(&self, _x: &[T; 3]) -> [T; 3] {
        [T::zero(); 3]
    }
}

/// Dirac monopole potential with the string along the negative `x3` axis:
/// `A = mu/(r (r + x3)) * (-x2, x1, 0)`.
pub fn monopole_potential<T: Scalar, const D: usize>(mu: f64, x: &[T; D]) -> [T; 3] {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let scale = T::from_f64(mu) / (r * (r + x[2]));
    [-(scale * x[1]), scale * x[0], T::zero()]
}

/// `rot A` evaluated by forward-mode differentiation of the potential.
pub fn monopole_field(mu: f64, x: &[f64; 3]) -> [f64; 3] {
    curl(|y| monopole_potential(mu, y), x)
}

/// Curl of a 3-vector field via dual numbers.
pub fn curl(a: impl Fn(&[crate::scalar::D1; 3]) -> [crate::scalar::D1; 3], x: &[f64; 3]) -> [f64; 3] {
    let mut grad = [[0.0f64; 3]; 3]; // grad[j][k] = d_j A_k
    for j in 0..3 {
        let v = a(&seed(&lift3(x), j));
        for k in 0..3 {
            grad[j][k] = v[k].eps;
        }
    }
    [
        grad[1][2] - grad[2][1],
        grad[2][0] - grad[0][2],
        grad[0][1] - grad[1][0],
    ]
}

fn lift3(x: &[f64; 3]) -> [f64; 3] {
    *x
}
