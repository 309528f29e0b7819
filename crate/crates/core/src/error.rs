use core::fmt;

/// Failure modes shared by every layer of the library.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Parameters make a denominator vanish or break a family precondition.
    InvalidParameters(&'static str),
    /// Zero polynomial, empty input or similar.
    DegenerateInput(&'static str),
    NonConvergence {
        residual: f64,
    },
    CardinalityMismatch {
        left: usize,
        right: usize,
    },
    RepeatedZeros {
        separation: f64,
    },
    BranchPoint {
        index: usize,
    },
    SingularSample,
    SingularDenominator,
    SingularA,
    Collision {
        separation: f64,
    },
    DivideByZeroVariable {
        index: usize,
    },
    BasisIllConditioned {
        pivot: f64,
    },
    /// Operation not defined for the requested family.
    Unsupported(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameters(why) => write!(f, "invalid parameters: {why}"),
            Error::DegenerateInput(why) => write!(f, "degenerate input: {why}"),
            Error::NonConvergence { residual } => {
                write!(f, "root finder did not converge (residual {residual:e})")
            }
            Error::CardinalityMismatch { left, right } => {
                write!(f, "multiset sizes differ: {left} vs {right}")
            }
            Error::RepeatedZeros { separation } => {
                write!(f, "zeros are not distinct (separation {separation:e})")
            }
            Error::BranchPoint { index } => write!(f, "zero {index} sits on a square-root branch point"),
            Error::SingularSample => write!(f, "sample is too close to a singular point"),
            Error::SingularDenominator => write!(f, "a formula denominator vanishes"),
            Error::SingularA => write!(f, "c-system matrix is singular with nonzero affine term"),
            Error::Collision { separation } => {
                write!(f, "zeros collided during integration (separation {separation:e})")
            }
            Error::DivideByZeroVariable { index } => write!(f, "variable {index} reached zero"),
            Error::BasisIllConditioned { pivot } => {
                write!(f, "basis elimination pivot too small ({pivot:e})")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for Error {}
