//! Process exit discipline.
//!
//! Every failure is one of two kinds: the invocation itself was wrong (bad
//! flags, malformed config or input file — exit code 2), or the computation
//! ran and a checked invariant did not hold, or could not be tested (exit
//! code 1). Success is exit code 0. Core errors surface as check failures;
//! anything traceable to user input is raised as a usage error before the
//! computation starts.

use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// A violated invariant or a runtime failure while checking one; exit 1.
    Check(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl From<lifshitz_core::Error> for CliError {
    fn from(e: lifshitz_core::Error) -> Self {
        CliError::Check(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Check(m) => f.write_str(m),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn check(msg: impl Into<String>) -> CliError {
    CliError::Check(msg.into())
}
