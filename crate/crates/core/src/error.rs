use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    /// `position` is 1-based.
    #[error("unknown symbol {symbol:?} at position {position}")]
    UnknownSymbol { position: usize, symbol: char },

    #[error("words are over different alphabets")]
    AlphabetMismatch,

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("fractional power base must be nonempty")]
    EmptyBase,

    #[error("{u}^ω = {v}^ω: no comparison position exists")]
    OmegaEqual { u: String, v: String },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// `prefix|suffix` is the first split violating `prefix < suffix`.
    #[error("not Lyndon: split {prefix}|{suffix} has u ≥ v")]
    NotLyndon { prefix: String, suffix: String },

    #[error("word {0} is a single letter and has no standard factorization")]
    TooShort(String),

    #[error("address {0} does not name an internal node")]
    BadAddress(String),

    #[error("duplicate entry at position {position}")]
    DuplicateEntry { position: usize },

    #[error("empty sequence")]
    EmptySequence,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{count} nonincreasing Lyndon factorizations of {word} (expected exactly one)")]
    UniquenessViolation { word: String, count: usize },

    #[error("internal error: {0}")]
    InternalError(String),
}
