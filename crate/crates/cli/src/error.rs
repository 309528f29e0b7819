use isospectra_core::Error;

/// Process exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Pass = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    DegenerateZeros = 3,
    NonConvergence = 4,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn from_pass(pass: bool) -> Exit {
        if pass {
            Exit::Pass
        } else {
            Exit::VerificationFailed
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Input(_) => Exit::InvalidInput,
            CliError::Core(e) => match e {
                Error::InvalidParameters(_)
                | Error::DegenerateInput(_)
                | Error::CardinalityMismatch { .. }
                | Error::SingularSample
                | Error::Unsupported(_) => Exit::InvalidInput,
                Error::RepeatedZeros { .. }
                | Error::BranchPoint { .. }
                | Error::SingularDenominator
                | Error::Collision { .. }
                | Error::DivideByZeroVariable { .. } => Exit::DegenerateZeros,
                Error::NonConvergence { .. } | Error::BasisIllConditioned { .. } | Error::SingularA => {
                    Exit::NonConvergence
                }
            },
        }
    }

    /// Stable snake-case tag for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Core(e) => match e {
                Error::InvalidParameters(_) => "invalid_parameters",
                Error::DegenerateInput(_) => "degenerate_input",
                Error::NonConvergence { .. } => "non_convergence",
                Error::CardinalityMismatch { .. } => "cardinality_mismatch",
                Error::RepeatedZeros { .. } => "repeated_zeros",
                Error::BranchPoint { .. } => "branch_point",
                Error::SingularSample => "singular_sample",
                Error::SingularDenominator => "singular_denominator",
                Error::SingularA => "singular_a",
                Error::Collision { .. } => "collision",
                Error::DivideByZeroVariable { .. } => "divide_by_zero_variable",
                Error::BasisIllConditioned { .. } => "basis_ill_conditioned",
                Error::Unsupported(_) => "unsupported",
            },
        }
    }
}
