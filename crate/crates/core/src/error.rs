use thiserror::Error;

/// Errors raised by geometry, symmetry, dynamics and spectral operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("radius must be positive, got {0}")]
    NonpositiveRadius(f64),
    #[error("inadmissible metric parameters: {0}")]
    InadmissibleParams(String),
    #[error("coordinate singularity: {0}")]
    CoordinateSingularity(String),
    #[error("gauge string singularity near x = ({0}, {1}, {2})")]
    GaugeSingularity(f64, f64, f64),
    #[error("metric is not positive definite at the evaluation point")]
    NotPositiveDefinite,
    #[error("singular matrix during inversion")]
    SingularMatrix,
    #[error("quadratic-form polarization residual {residual:e} exceeds tolerance {tol:e}")]
    NotQuadratic { residual: f64, tol: f64 },
    #[error("closed-form Dirac assembly requires U*V = 1, got U*V = {0}")]
    NotUnitUvProduct(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Short machine-readable kind tag, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonpositiveRadius(_) => "nonpositive_radius",
            Error::InadmissibleParams(_) => "inadmissible_params",
            Error::CoordinateSingularity(_) => "coordinate_singularity",
            Error::GaugeSingularity(..) => "gauge_singularity",
            Error::NotPositiveDefinite => "not_positive_definite",
            Error::SingularMatrix => "singular_matrix",
            Error::NotQuadratic { .. } => "not_quadratic",
            Error::NotUnitUvProduct(_) => "not_unit_uv_product",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
