use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("horizon must be positive, got {0}")]
    InvalidDelta(f64),
    #[error("kernel is not normalizable: tail moment {0} is not positive")]
    NonNormalizable(f64),
    #[error("secant integral endpoint {0} is too close to a pole at ±π/2")]
    DomainError(f64),
    #[error("degenerate triangle (area {area:e})")]
    DegenerateTriangle { area: f64 },
    #[error("degenerate quadrature geometry (measure {0:e})")]
    DegenerateGeometry(f64),
    #[error("unsupported quadrature order {0}")]
    UnsupportedOrder(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cell {cell} is not counterclockwise (signed area {area:e})")]
    Orientation { cell: usize, area: f64 },
    #[error("edge ({0}, {1}) is shared inconsistently or by more than two cells")]
    NonManifold(usize, usize),
    #[error("horizon 2δ = {two_delta} is below a tenth of the smallest cell diameter {min_diameter}")]
    HorizonTooSmall { two_delta: f64, min_diameter: f64 },
    #[error("conjugate gradient did not converge in {maxiter} iterations (relative residual {residual:e})")]
    NotConverged { maxiter: usize, residual: f64 },
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NonSymmetric(f64),
    #[error("matrix has a non-positive diagonal entry at row {0}")]
    ZeroDiagonal(usize),
    #[error("tensor quadrature oracle requested but kernel support clips the integrand")]
    RegimeError,
    #[error("unknown kernel preset {0:?}")]
    UnknownKernel(String),
    #[error("unknown problem {0:?}")]
    UnknownProblem(String),
    #[error("some checks failed")]
    VerificationFailed,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
