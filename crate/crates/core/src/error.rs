// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arity {arity} outside the supported range 1..={cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error("state {state} out of range for {n} variables")]
    StateOutOfRange { state: u64, n: usize },

    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("function is not unate: variable {variable} is neither increasing nor decreasing")]
    NotUnate { variable: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
