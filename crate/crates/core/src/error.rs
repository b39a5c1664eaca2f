use thiserror::Error;

use crate::decompose::NotInClassCertificate;

#[derive(Debug, Error)]
pub enum Error {
    #[error("trigraph with {n} vertices exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("exhaustive oracle refused: {n} vertices exceeds the cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("input is outside the class: {}", .0.reason)]
    NotInClass(Box<NotInClassCertificate>),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn certificate(&self) -> Option<&NotInClassCertificate> {
        match self {
            Error::NotInClass(c) => Some(c),
            _ => None,
        }
    }
}
