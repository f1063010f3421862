use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("polynomial is constant (degree zero)")]
    DegreeZero,
    #[error("companion eigenvalue iteration failed to converge")]
    IllConditioned,
    #[error("coefficient vector is empty")]
    EmptyCoeffs,
    #[error("1 + q(z) has a root of modulus {modulus} inside the closed unit disc")]
    PoleInsideDisc { modulus: f64 },
    #[error("inversion of the origin is the point at infinity")]
    OriginInversion,
    #[error("no pixel of the window belongs to the region")]
    EmptyRegion,
    #[error("anchor multiplier {mu0} does not lie in the rastered region")]
    Mu0NotInRegion { mu0: num_complex::Complex64 },
    #[error("coefficients sum to {sum}, not zero; not realizable as a difference control")]
    NotZeroSum { sum: f64 },
    #[error("alpha weights sum to {sum}, not one")]
    NotUnitSum { sum: f64 },
    #[error("interval ({a}, {b}) is outside the hypothesis -3 <= a < b <= 1")]
    OutOfRange { a: f64, b: f64 },
    #[error("multiplier-set primitive leaves the raster window at {point}")]
    WindowMiss { point: num_complex::Complex64 },
    #[error("unknown builtin system `{0}`")]
    UnknownSystem(String),
    #[error("equilibrium search did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("jacobian evaluation produced a non-finite entry")]
    SingularJacobianEvaluation,
    #[error("delay history holds {got} states but the control needs {need}")]
    HistoryTooShort { got: usize, need: usize },
    #[error("cannot parse multiplier set: {0}")]
    MultiplierSetParse(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
