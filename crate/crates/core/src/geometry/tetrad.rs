//! Local frames, spin connection and the Dirac operator assembly on the
//! Cartesian chart.
//!
//! The coframe of the gauge form `U dx.dx + V (dx4 + A)^2` is
//! `ehat^i = sqrt(U) dx^i`, `ehat^4 = sqrt(V)(dx4 + A_i dx^i)`; the dual
//! frame follows from `ehat^mu_alpha e^alpha_nu = delta^mu_nu`, which fixes
//! `e^4_i = -A_i/sqrt(U)` (this coincides with `-sqrt(V) A_i` exactly when
//! `U V = 1`). Cartan coefficients come from dual-number derivatives of the
//! coframe; gamma matrices are the chiral Euclidean set.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::curvature::curvature_bundle;
use crate::geometry::gauge::{curl, GaugeForm, MonopoleForm};
use crate::geometry::metrics::CartesianMetric;
use crate::geometry::{ChartPoint, MetricParams};
use crate::linalg::Mat;
use crate::scalar::{seed, Scalar};

pub type CMat = [[Complex64; 4]; 4];

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn cmat_zero() -> CMat {
    [[ZERO; 4]; 4]
}

fn cmat_mul(a: &CMat, b: &CMat) -> CMat {
    let mut out = cmat_zero();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = ZERO;
            for k in 0..4 {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn cmat_add(a: &CMat, b: &CMat) -> CMat {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] += b[i][j];
        }
    }
    out
}

fn cmat_scale(a: &CMat, s: Complex64) -> CMat {
    let mut out = *a;
    for row in out.iter_mut() {
        for v in row.iter_mut() {
            *v *= s;
        }
    }
    out
}

fn cmat_vec(a: &CMat, v: &[Complex64; 4]) -> [Complex64; 4] {
    std::array::from_fn(|i| {
        let mut acc = ZERO;
        for k in 0..4 {
            acc += a[i][k] * v[k];
        }
        acc
    })
}

pub fn cmat_max_abs(a: &CMat) -> f64 {
    a.iter()
        .flatten()
        .fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Hermitian Euclidean gamma matrices in the chiral representation:
/// `gamma^i` off-diagonal in the Pauli matrices, `gamma^4` off-diagonal
/// identity blocks. They satisfy `{gamma^a, gamma^b} = 2 delta^{ab}`.
pub fn gamma_matrices() -> [CMat; 4] {
    let one = Complex64::new(1.0, 0.0);
    let sigma: [[[Complex64; 2]; 2]; 3] = [
        [[ZERO, one], [one, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[one, ZERO], [ZERO, -one]],
    ];
    let mut gammas = [cmat_zero(); 4];
    for (k, s) in sigma.iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                gammas[k][r][c + 2] = -I * s[r][c];
                gammas[k][r + 2][c] = I * s[r][c];
            }
        }
    }
    for r in 0..2 {
        gammas[3][r][r + 2] = one;
        gammas[3][r + 2][r] = one;
    }
    gammas
}

/// Chirality matrix `diag(1, 1, -1, -1)`.
pub fn gamma5() -> CMat {
    let mut m = cmat_zero();
    m[0][0] = Complex64::new(1.0, 0.0);
    m[1][1] = Complex64::new(1.0, 0.0);
    m[2][2] = Complex64::new(-1.0, 0.0);
    m[3][3] = Complex64::new(-1.0, 0.0);
    m
}

/// Spinor generators `S^{ab} = (i/4)[gamma^a, gamma^b]`.
fn spin_generators() -> [[CMat; 4]; 4] {
    let g = gamma_matrices();
    let mut s = [[cmat_zero(); 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            let ab = cmat_mul(&g[a], &g[b]);
            let ba = cmat_mul(&g[b], &g[a]);
            for r in 0..4 {
                for c in 0..4 {
                    s[a][b][r][c] = I * 0.25 * (ab[r][c] - ba[r][c]);
                }
            }
        }
    }
    s
}

/// Orthonormal coframe and frame at a point.
///
/// `e_hat[alpha][mu]` holds `ehat^alpha_mu` (coframe) and `e[mu][alpha]`
/// holds `e^mu_alpha` (frame); hatted indices run over the flat Euclidean
/// labels.
#[derive(Debug, Clone, Copy)]
pub struct Tetrad {
    pub e_hat: Mat<f64, 4>,
    pub e: Mat<f64, 4>,
}

impl Tetrad {
    /// Max deviation of `ehat . e` from the identity.
    pub fn duality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                let mut acc = 0.0;
                for mu in 0..4 {
                    acc += self.e_hat[a][mu] * self.e[mu][b];
                }
                let expect = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((acc - expect).abs());
            }
        }
        worst
    }

    /// Max deviation of `delta_{ab} ehat^a_mu ehat^b_nu` from `g`.
    pub fn reconstruction_residual(&self, g: &Mat<f64, 4>) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                let mut acc = 0.0;
                for a in 0..4 {
                    acc += self.e_hat[a][mu] * self.e_hat[a][nu];
                }
                worst = worst.max((acc - g[mu][nu]).abs());
            }
        }
        worst
    }
}

/// Coframe/frame component functions, generic so they can be differentiated.
fn tetrad_components<T: Scalar>(form: &impl GaugeForm, x: &[T; 4]) -> (Mat<T, 4>, Mat<T, 4>) {
    let spatial = [x[0], x[1], x[2]];
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let su = form.u(r).sqrt();
    let sv = form.v(r).sqrt();
    let a = form.potential(&spatial);
    let mut e_hat = [[T::zero(); 4]; 4];
    let mut e = [[T::zero(); 4]; 4];
    for i in 0..3 {
        e_hat[i][i] = su;
        e_hat[3][i] = sv * a[i];
        e[i][i] = T::one() / su;
        e[3][i] = -(a[i] / su);
    }
    e_hat[3][3] = sv;
    e[3][3] = T::one() / sv;
    (e_hat, e)
}

/// Tetrad of an arbitrary gauge form at an unscreened point.
pub fn tetrad_for(form: &impl GaugeForm, x: &[f64; 4]) -> Tetrad {
    let (e_hat, e) = tetrad_components(form, x);
    Tetrad { e_hat, e }
}

/// Tetrad of the extended family at a screened Cartesian point.
pub fn tetrad_at(params: &MetricParams, point: &ChartPoint) -> Result<Tetrad> {
    let x = point.require_cartesian()?;
    Ok(tetrad_for(&MonopoleForm { params: *params }, &x))
}

/// Rotation coefficients `W[sigma][a][b]` contracted for the spin
/// connection: `Gamma_sigma = (i/4) W_{sigma a b} S^{ab}` summed over all
/// `a, b`.
fn spin_coefficients<T: Scalar>(form: &impl GaugeForm, x: &[T; 4]) -> [[[T; 4]; 4]; 4] {
    let (_, e) = tetrad_components(form, x);
    // d_hat[beta][sigma][alpha] = d_beta ehat^sigma_alpha
    let mut d_hat = [[[T::zero(); 4]; 4]; 4];
    for beta in 0..4 {
        let (eh, _) = tetrad_components(form, &seed(x, beta));
        for sigma in 0..4 {
            for alpha in 0..4 {
                d_hat[beta][sigma][alpha] = eh[sigma][alpha].eps;
            }
        }
    }
    // Cartan coefficients C[mu][nu][sigma] = C_{mu nu}^sigma in flat labels.
    let mut cartan = [[[T::zero(); 4]; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            for sigma in 0..4 {
                let mut acc = T::zero();
                for alpha in 0..4 {
                    for beta in 0..4 {
                        acc = acc
                            + e[alpha][mu]
                                * e[beta][nu]
                                * (d_hat[beta][sigma][alpha] - d_hat[alpha][sigma][beta]);
                    }
                }
                cartan[mu][nu][sigma] = acc;
            }
        }
    }
    let (e_hat, _) = tetrad_components(form, x);
    let mut w = [[[T::zero(); 4]; 4]; 4];
    for sigma_coord in 0..4 {
        for nu in 0..4 {
            for lam in 0..4 {
                let mut acc = T::zero();
                for mu in 0..4 {
                    acc = acc
                        + e_hat[mu][sigma_coord]
                            * (cartan[mu][nu][lam] + cartan[lam][mu][nu] + cartan[lam][nu][mu]);
                }
                w[sigma_coord][nu][lam] = acc;
            }
        }
    }
    w
}

fn assemble_spin(w: &[[[f64; 4]; 4]; 4]) -> [CMat; 4] {
    let s = spin_generators();
    let mut out = [cmat_zero(); 4];
    for sigma in 0..4 {
        for nu in 0..4 {
            for lam in 0..4 {
                let coeff = I * 0.25 * w[sigma][nu][lam];
                for r in 0..4 {
                    for c in 0..4 {
                        out[sigma][r][c] += coeff * s[nu][lam][r][c];
                    }
                }
            }
        }
    }
    out
}

/// Spin connection matrices of an arbitrary gauge form.
pub fn spin_connection_for(form: &impl GaugeForm, x: &[f64; 4]) -> [CMat; 4] {
    assemble_spin(&spin_coefficients(form, x))
}

/// Spin connection of the extended family at a screened Cartesian point.
pub fn spin_connection_at(params: &MetricParams, point: &ChartPoint) -> Result<[CMat; 4]> {
    let x = point.require_cartesian()?;
    Ok(spin_connection_for(&MonopoleForm { params: *params }, &x))
}

/// Spinor test field: a value plus its coordinate gradient.
pub trait SpinorField {
    fn value(&self, x: &[f64; 4]) -> [Complex64; 4];
    /// `gradient(x)[mu]` is the partial derivative of the value along `x^mu`.
    fn gradient(&self, x: &[f64; 4]) -> [[Complex64; 4]; 4];
}

/// `gamma^mu(x) (d_mu + Gamma_mu) psi`: the Dirac operator assembled from
/// frame and spin connection.
pub fn dirac_apply(
    params: &MetricParams,
    point: &ChartPoint,
    psi: &impl SpinorField,
) -> Result<[Complex64; 4]> {
    let x = point.require_cartesian()?;
    let form = MonopoleForm { params: *params };
    let tet = tetrad_for(&form, &x);
    let conn = spin_connection_for(&form, &x);
    let gammas = gamma_matrices();
    let value = psi.value(&x);
    let grad = psi.gradient(&x);
    let mut out = [ZERO; 4];
    for mu in 0..4 {
        let mut cov = grad[mu];
        let gpsi = cmat_vec(&conn[mu], &value);
        for k in 0..4 {
            cov[k] += gpsi[k];
        }
        // gamma^mu(x) = gamma^a e^mu_a
        for a in 0..4 {
            let coeff = tet.e[mu][a];
            if coeff == 0.0 {
                continue;
            }
            let term = cmat_vec(&gammas[a], &cov);
            for k in 0..4 {
                out[k] += coeff * term[k];
            }
        }
    }
    Ok(out)
}

/// Explicit monopole-chart form of the Dirac operator:
///
/// ```text
/// D = (i/sqrt(U)) gamma.P + (i/sqrt(V)) gamma^4 P_4
///     + (i/2)(V/sqrt(U)) gamma^4 Sigma*.B_ef
/// ```
///
/// with `P_i = -i(d_i - sqrt(UV) A_i d_4)`, `B_ef = rot(sqrt(UV) A)` and
/// `Sigma*_i = S_i + (i/2) gamma^4 gamma^i`. Valid only when `U V = 1`
/// (the self-dual subfamily); rejected otherwise.
pub fn dirac_apply_closed_form(
    params: &MetricParams,
    point: &ChartPoint,
    psi: &impl SpinorField,
) -> Result<[Complex64; 4]> {
    let x = point.require_cartesian()?;
    let form = MonopoleForm { params: *params };
    let spatial = [x[0], x[1], x[2]];
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let u = form.u(r);
    let v = form.v(r);
    if (u * v - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnitUvProduct(u * v));
    }
    let a = form.potential(&spatial);
    let suv = (u * v).sqrt();
    let b_ef = curl(
        |y| {
            let ry = (y[0] * y[0] + y[1] * y[1] + y[2] * y[2]).sqrt();
            let s = (form.u(ry) * form.v(ry)).sqrt();
            let ay = form.potential(y);
            [s * ay[0], s * ay[1], s * ay[2]]
        },
        &spatial,
    );

    let gammas = gamma_matrices();
    let s_gen = spin_generators();
    let value = psi.value(&x);
    let grad = psi.gradient(&x);

    // P_i psi and P_4 psi.
    let p4: [Complex64; 4] = std::array::from_fn(|k| -I * grad[3][k]);
    let p_spatial: [[Complex64; 4]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|k| -I * (grad[i][k] - suv * a[i] * grad[3][k]))
    });

    let mut out = [ZERO; 4];
    for i in 0..3 {
        let term = cmat_vec(&gammas[i], &p_spatial[i]);
        for k in 0..4 {
            out[k] += I / u.sqrt() * term[k];
        }
    }
    let term = cmat_vec(&gammas[3], &p4);
    for k in 0..4 {
        out[k] += I / v.sqrt() * term[k];
    }

    // Sigma*_i = S_i + (i/2) gamma^4 gamma^i with S_i = -(1/2) eps_{ijk} S^{jk}.
    let eps = |i: usize, j: usize, k: usize| -> f64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
            _ => 0.0,
        }
    };
    let g4 = gammas[3];
    for i in 0..3 {
        let mut sigma_star = cmat_zero();
        for j in 0..3 {
            for k in 0..3 {
                let e = eps(i, j, k);
                if e == 0.0 {
                    continue;
                }
                for rr in 0..4 {
                    for cc in 0..4 {
                        sigma_star[rr][cc] += -0.5 * e * s_gen[j][k][rr][cc];
                    }
                }
            }
        }
        let g4gi = cmat_mul(&g4, &gammas[i]);
        for rr in 0..4 {
            for cc in 0..4 {
                sigma_star[rr][cc] += I * 0.5 * g4gi[rr][cc];
            }
        }
        let acting = cmat_mul(&g4, &sigma_star);
        let term = cmat_vec(&acting, &value);
        let coeff = I * 0.5 * (v / u.sqrt()) * b_ef[i];
        for k in 0..4 {
            out[k] += coeff * term[k];
        }
    }
    Ok(out)
}

/// Relative residual of `[D_mu, D_nu] = (1/4) R_{ab mu nu} gamma^a gamma^b`,
/// tying the spin connection to the curvature engine. Independent of the
/// closed-form Dirac assembly, so it validates generic (non-self-dual)
/// parameters too.
pub fn spin_commutator_check(params: &MetricParams, point: &ChartPoint) -> Result<f64> {
    let x = point.require_cartesian()?;
    let form = MonopoleForm { params: *params };
    let metric = CartesianMetric::new(*params);

    let gamma = {
        let w = spin_coefficients(&form, &x);
        assemble_spin(&w)
    };
    // d_mu Gamma_nu through a dual layer on the coefficients.
    let mut dgamma = [[cmat_zero(); 4]; 4];
    for mu in 0..4 {
        let w = spin_coefficients(&form, &seed(&x, mu));
        let mut w_eps = [[[0.0f64; 4]; 4]; 4];
        for s in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    w_eps[s][a][b] = w[s][a][b].eps;
                }
            }
        }
        dgamma[mu] = assemble_spin(&w_eps);
    }

    let bundle = curvature_bundle(&metric, &x)?;
    let tet = tetrad_for(&form, &x);
    let gammas = gamma_matrices();

    let mut residual = 0.0f64;
    let mut scale = 1e-12f64;
    for mu in 0..4 {
        for nu in 0..mu {
            let comm = cmat_mul(&gamma[mu], &gamma[nu]);
            let comm2 = cmat_mul(&gamma[nu], &gamma[mu]);
            let mut lhs = cmat_zero();
            for r in 0..4 {
                for c in 0..4 {
                    lhs[r][c] =
                        dgamma[mu][nu][r][c] - dgamma[nu][mu][r][c] + comm[r][c] - comm2[r][c];
                }
            }
            // R_{ab mu nu} = e^rho_a e^sigma_b g_{rho tau} R^tau_{sigma mu nu}
            let mut rhs = cmat_zero();
            for a in 0..4 {
                for b in 0..4 {
                    let mut r_ab = 0.0;
                    for rho in 0..4 {
                        for sigma in 0..4 {
                            let mut lowered = 0.0;
                            for tau in 0..4 {
                                lowered += bundle.g[rho][tau] * bundle.riemann[tau][sigma][mu][nu];
                            }
                            r_ab += tet.e[rho][a] * tet.e[sigma][b] * lowered;
                        }
                    }
                    if r_ab == 0.0 {
                        continue;
                    }
                    let gg = cmat_mul(&gammas[a], &gammas[b]);
                    for r in 0..4 {
                        for c in 0..4 {
                            rhs[r][c] += 0.25 * r_ab * gg[r][c];
                        }
                    }
                }
            }
            scale = scale.max(cmat_max_abs(&rhs));
            for r in 0..4 {
                for c in 0..4 {
                    residual = residual.max((lhs[r][c] - rhs[r][c]).norm());
                }
            }
        }
    }
    Ok(residual / scale.max(1.0))
}
