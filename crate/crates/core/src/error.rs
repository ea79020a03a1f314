use thiserror::Error;

use crate::freegroup::Alphabet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} is out of range for {alphabet}")]
    LetterOutOfRange { index: u8, alphabet: Alphabet },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("operation requires a word in {expected}, got a word in {found}")]
    WrongAlphabet { expected: Alphabet, found: Alphabet },

    #[error("word of length {len} exceeds the limit of {limit} letters")]
    WordTooLong { len: usize, limit: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// A mathematical precondition does not hold (non-commuting pair,
    /// inadmissible generator, identity without a primitive root, ...).
    #[error("{0}")]
    Domain(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    /// An invariant the algorithms guarantee has been broken.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

/// Checked integer helpers; every lattice/exponent computation goes through these.
pub(crate) mod checked {
    use super::{Error, Result};

    pub fn add(a: i64, b: i64, what: &'static str) -> Result<i64> {
        a.checked_add(b).ok_or(Error::Overflow(what))
    }

    pub fn sub(a: i64, b: i64, what: &'static str) -> Result<i64> {
        a.checked_sub(b).ok_or(Error::Overflow(what))
    }

    pub fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
        a.checked_mul(b).ok_or(Error::Overflow(what))
    }

    pub fn neg(a: i64, what: &'static str) -> Result<i64> {
        a.checked_neg().ok_or(Error::Overflow(what))
    }

    /// `p*s - q*r`
    pub fn det(p: i64, q: i64, r: i64, s: i64, what: &'static str) -> Result<i64> {
        sub(mul(p, s, what)?, mul(q, r, what)?, what)
    }
}
