use thiserror::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    /// A verdict came out false, or two routes that must agree did not.
    Violation = 1,
    Input = 2,
    Capacity = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) | CliError::NotApplicable(_) | CliError::Io(_) => ExitCode::Input,
            CliError::Capacity(_) => ExitCode::Capacity,
            CliError::Inconsistency(_) => ExitCode::Violation,
        }
    }

    /// Short status word for the report.
    pub fn status(&self) -> &'static str {
        match self {
            CliError::Input(_) | CliError::Io(_) => "input_error",
            CliError::NotApplicable(_) => "not_applicable",
            CliError::Capacity(_) => "capacity_error",
            CliError::Inconsistency(_) => "inconsistency",
        }
    }
}

impl From<wgrade::Error> for CliError {
    fn from(e: wgrade::Error) -> Self {
        use wgrade::Error as E;
        match e {
            E::Capacity(_) => CliError::Capacity(e.to_string()),
            E::Inconsistency(_) => CliError::Inconsistency(e.to_string()),
            E::NotApplicable(m) => CliError::NotApplicable(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<wgrade::parse::ParseError> for CliError {
    fn from(e: wgrade::parse::ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}
