//! Error type shared by all modules.

use core::fmt;

/// Everything that can go wrong in this crate.
///
/// Variants are deliberately flat and carry no payload so that callers
/// (in particular the CLI) can map them to stable machine-readable codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A generalized Cartan matrix admits no positive symmetrizer.
    NotSymmetrizable,
    /// Input matrix is not a well-formed generalized Cartan matrix.
    BadShape,
    /// Vectors or elements over Cartan data of different ranks were mixed.
    RankMismatch,
    /// Unknown finite-type letter or inadmissible rank.
    UnknownType,
    /// A simple-reflection or position index is out of range.
    IndexOutOfRange,
    /// The requested element is not below the given word in Bruhat order.
    NotBelow,
    /// A documented precondition was violated by the caller.
    PreconditionViolated,
    /// A word that must be reduced is not.
    NotReduced,
    /// Exponent vectors of different lengths were combined.
    LengthMismatch,
    /// Elements of two different quantum tori were combined.
    MixedTori,
    /// A multi-term element was used where a single monomial is required.
    NotMonomial,
    /// The input sequence is not a permutation of 1..n.
    NotAPermutation,
    /// Row and column sets of a minor have different sizes, or repeat.
    SizeMismatch,
    /// A subset index leaves the valid range.
    OutOfRange,
    /// An exhaustive search found more than one positive subexpression.
    UniquenessViolated,
    /// A minor image that must be a monomial is not (convention error).
    DictionaryMismatch,
    /// A restoration pivot was not a plain generator (ordering bug).
    PivotNotMonomial,
    /// A configured enumeration bound was exceeded.
    BoundExceeded,
}

impl Error {
    /// Stable machine-readable code, used verbatim in CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotSymmetrizable => "NotSymmetrizable",
            Error::BadShape => "BadShape",
            Error::RankMismatch => "RankMismatch",
            Error::UnknownType => "UnknownType",
            Error::IndexOutOfRange => "IndexOutOfRange",
            Error::NotBelow => "NotBelow",
            Error::PreconditionViolated => "PreconditionViolated",
            Error::NotReduced => "NotReduced",
            Error::LengthMismatch => "LengthMismatch",
            Error::MixedTori => "MixedTori",
            Error::NotMonomial => "NotMonomial",
            Error::NotAPermutation => "NotAPermutation",
            Error::SizeMismatch => "SizeMismatch",
            Error::OutOfRange => "OutOfRange",
            Error::UniquenessViolated => "UniquenessViolated",
            Error::DictionaryMismatch => "DictionaryMismatch",
            Error::PivotNotMonomial => "PivotNotMonomial",
            Error::BoundExceeded => "BoundExceeded",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let detail = match self {
            Error::NotSymmetrizable => "matrix admits no positive symmetrizer",
            Error::BadShape => "not a well-formed generalized Cartan matrix",
            Error::RankMismatch => "mixed data of different ranks",
            Error::UnknownType => "unknown type letter or inadmissible rank",
            Error::IndexOutOfRange => "index out of range",
            Error::NotBelow => "element is not below the word in Bruhat order",
            Error::PreconditionViolated => "documented precondition violated",
            Error::NotReduced => "word is not reduced",
            Error::LengthMismatch => "exponent vectors of different lengths",
            Error::MixedTori => "elements of different quantum tori",
            Error::NotMonomial => "element is not a single monomial",
            Error::NotAPermutation => "sequence is not a permutation",
            Error::SizeMismatch => "row and column sets incompatible",
            Error::OutOfRange => "subset leaves the valid range",
            Error::UniquenessViolated => "positive subexpression is not unique",
            Error::DictionaryMismatch => "minor image is not a monomial",
            Error::PivotNotMonomial => "restoration pivot is not a generator",
            Error::BoundExceeded => "enumeration bound exceeded",
        };
        write!(f, "{}: {}", self.code(), detail)
    }
}
