//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for a constant polynomial")]
    ConstantPolynomial,
    #[error("division is not exact")]
    InexactDivision,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("coset enumeration exceeded the table limit of {0}")]
    CosetOverflow(usize),
    #[error("invalid word: {0}")]
    BadWord(String),
    #[error("generator index {0} out of range")]
    BadGenerator(usize),
}
