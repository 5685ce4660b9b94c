//! Forward-mode dual-number arithmetic.
//!
//! Every metric, tensor and phase-space function in this crate is written
//! generically over [`Scalar`], so the same code path that evaluates a
//! quantity also produces its exact derivatives when fed [`Dual`] arguments.
//! Nesting duals (`Dual<Dual<f64>>`, ...) yields second and higher
//! derivatives without step-size tuning; central finite differences survive
//! only as a test oracle.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arithmetic interface shared by `f64` and (nested) dual numbers.
pub trait Scalar:
    Copy
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn from_f64(v: f64) -> Self;
    /// Fully primal value: strips every derivative layer.
    fn re(self) -> f64;
    fn sqrt(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Scalar for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn re(self) -> f64 {
        self
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
}

/// First-order dual number `val + eps·ε` over any [`Scalar`] base.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dual<T> {
    pub val: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(val: T, eps: T) -> Self {
        Dual { val, eps }
    }

    /// Constant: derivative part zero.
    pub fn constant(val: T) -> Self {
        Dual {
            val,
            eps: T::zero(),
        }
    }

    /// Seed for differentiation: unit derivative part.
    pub fn variable(val: T) -> Self {
        Dual {
            val,
            eps: T::one(),
        }
    }
}

impl<T: Scalar> Add for Dual<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Dual::new(self.val + rhs.val, self.eps + rhs.eps)
    }
}

impl<T: Scalar> Sub for Dual<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Dual::new(self.val - rhs.val, self.eps - rhs.eps)
    }
}

impl<T: Scalar> Mul for Dual<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Dual::new(
            self.val * rhs.val,
            self.val * rhs.eps + self.eps * rhs.val,
        )
    }
}

impl<T: Scalar> Div for Dual<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let val = self.val / rhs.val;
        Dual::new(val, (self.eps - val * rhs.eps) / rhs.val)
    }
}

impl<T: Scalar> Neg for Dual<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual::new(-self.val, -self.eps)
    }
}

impl<T: Scalar> Scalar for Dual<T> {
    fn from_f64(v: f64) -> Self {
        Dual::constant(T::from_f64(v))
    }
    fn re(self) -> f64 {
        self.val.re()
    }
    fn sqrt(self) -> Self {
        let root = self.val.sqrt();
        Dual::new(root, self.eps / (T::from_f64(2.0) * root))
    }
    fn sin(self) -> Self {
        Dual::new(self.val.sin(), self.eps * self.val.cos())
    }
    fn cos(self) -> Self {
        Dual::new(self.val.cos(), -(self.eps * self.val.sin()))
    }
}

/// One dual layer over `f64`: first derivatives.
pub type D1 = Dual<f64>;
/// Two layers: second derivatives.
pub type D2 = Dual<D1>;

/// Promote an `f64` coordinate tuple into any scalar type as constants.
pub fn lift<T: Scalar, const N: usize>(x: &[f64; N]) -> [T; N] {
    std::array::from_fn(|i| T::from_f64(x[i]))
}

/// Copy `x` into dual numbers, seeding a unit derivative in direction `dir`.
pub fn seed<T: Scalar, const N: usize>(x: &[T; N], dir: usize) -> [Dual<T>; N] {
    std::array::from_fn(|i| {
        if i == dir {
            Dual::variable(x[i])
        } else {
            Dual::constant(x[i])
        }
    })
}

/// Gradient of a scalar-valued function of `N` variables at `x`.
pub fn gradient<T: Scalar, const N: usize>(
    f: impl Fn(&[Dual<T>; N]) -> Dual<T>,
    x: &[T; N],
) -> [T; N] {
    std::array::from_fn(|dir| f(&seed(x, dir)).eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn poly<T: Scalar>(x: T) -> T {
        // x^3 - 2x + 1/x
        x * x * x - T::from_f64(2.0) * x + T::one() / x
    }

    #[test]
    fn first_derivative_matches_analytic() {
        let x = Dual::variable(1.7_f64);
        let y = poly(x);
        assert_relative_eq!(y.val, 1.7f64.powi(3) - 2.0 * 1.7 + 1.0 / 1.7);
        assert_relative_eq!(y.eps, 3.0 * 1.7f64.powi(2) - 2.0 - 1.0 / 1.7f64.powi(2));
    }

    #[test]
    fn nested_duals_give_second_derivative() {
        // d²/dx² [sin(x)·sqrt(x)] checked against the analytic expansion.
        let f = |x: D2| x.sin() * x.sqrt();
        let x0 = 0.9_f64;
        let x = Dual::variable(Dual::variable(x0));
        let y = f(x);
        let s = x0.sin();
        let c = x0.cos();
        let r = x0.sqrt();
        assert_relative_eq!(y.val.val, s * r, max_relative = 1e-14);
        assert_relative_eq!(y.val.eps, c * r + s / (2.0 * r), max_relative = 1e-14);
        assert_relative_eq!(y.eps.val, c * r + s / (2.0 * r), max_relative = 1e-14);
        let d2 = -s * r + c / r - s / (4.0 * x0 * r);
        assert_relative_eq!(y.eps.eps, d2, max_relative = 1e-13);
    }

    #[test]
    fn division_chain_rule() {
        let x = Dual::variable(2.0_f64);
        let y = (x * x + Dual::constant(1.0)) / x; // f = x + 1/x, f' = 1 - 1/x^2
        assert_relative_eq!(y.val, 2.5);
        assert_relative_eq!(y.eps, 1.0 - 0.25);
    }

    #[test]
    fn gradient_of_radius() {
        let r2 = |x: &[Dual<f64>; 3]| x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        let g = gradient(r2, &[1.0, -2.0, 0.5]);
        assert_eq!(g, [2.0, -4.0, 1.0]);
    }

    #[test]
    fn dual_against_central_differences() {
        let f = |x: f64| (x * x).sin() / x.sqrt();
        let fd = |x: f64, h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
        for &x0 in &[0.4, 1.3, 2.9] {
            let d = {
                let y = Dual::variable(x0);
                ((y * y).sin() / y.sqrt()).eps
            };
            assert_relative_eq!(d, fd(x0, 1e-5), max_relative = 1e-5);
        }
    }
}
