use thiserror::Error;

/// Domain errors raised by library operations.
///
/// Every variant has a stable short name (see [`Error::name`]) which the CLI
/// prints on stderr before exiting with status 1.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("InvalidAlphabet: alphabet must have at least 2 letters, got {0}")]
    InvalidAlphabet(u32),

    #[error("EmptyCode: a right-ideal generating set must be nonempty")]
    EmptyCode,

    #[error("LetterOutOfRange: letter index {index} exceeds alphabet size {k}")]
    LetterOutOfRange { index: u32, k: u32 },

    #[error("NotAPrefixCode: {0} and {1} are prefix-comparable")]
    NotAPrefixCode(String, String),

    #[error("NotMaximal: inner vertex {vertex} lacks child {child}")]
    NotMaximal { vertex: String, child: String },

    #[error("BadCardinality: no maximal prefix code of size {n} exists over {k} letters")]
    BadCardinality { n: usize, k: u32 },

    #[error("SizeMismatch: codes have sizes {0} and {1}")]
    SizeMismatch(usize, usize),

    #[error("NotInnerLeaf: {0} is not an inner leaf of the code")]
    NotInnerLeaf(String),

    #[error("TooSmall: a single-inner-leaf code of size {size} does not exceed the bound {bound}")]
    TooSmall { size: usize, bound: usize },

    #[error("NotInDomainCode: {0} is not in the domain code")]
    NotInDomainCode(String),

    #[error("SizeOrderViolated: domain code of the left element is smaller ({0} < {1})")]
    SizeOrderViolated(usize, usize),

    #[error("TooLarge: enumeration exceeds the configured cap ({0})")]
    TooLarge(String),

    #[error("NotIdempotent: element is not a partial identity")]
    NotIdempotent,

    #[error("NotDictPreserving: element does not preserve the dictionary order")]
    NotDictPreserving,

    #[error("DegenerateLevel: no maximally extended dictionary-order preserving element has this domain code")]
    DegenerateLevel,

    #[error("NoMatchingGenerator: no generator shares the required domain code")]
    NoMatchingGenerator,

    #[error("EqualInputs: the two elements are equal")]
    EqualInputs,

    #[error("NotInjective: table is not injective")]
    NotInjective,

    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidAlphabet(_) => "InvalidAlphabet",
            Error::EmptyCode => "EmptyCode",
            Error::LetterOutOfRange { .. } => "LetterOutOfRange",
            Error::NotAPrefixCode(_, _) => "NotAPrefixCode",
            Error::NotMaximal { .. } => "NotMaximal",
            Error::BadCardinality { .. } => "BadCardinality",
            Error::SizeMismatch(_, _) => "SizeMismatch",
            Error::NotInnerLeaf(_) => "NotInnerLeaf",
            Error::TooSmall { .. } => "TooSmall",
            Error::NotInDomainCode(_) => "NotInDomainCode",
            Error::SizeOrderViolated(_, _) => "SizeOrderViolated",
            Error::TooLarge(_) => "TooLarge",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotDictPreserving => "NotDictPreserving",
            Error::DegenerateLevel => "DegenerateLevel",
            Error::NoMatchingGenerator => "NoMatchingGenerator",
            Error::EqualInputs => "EqualInputs",
            Error::NotInjective => "NotInjective",
            Error::Parse(_) => "ParseError",
        }
    }
}
