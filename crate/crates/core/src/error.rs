use std::fmt;

/// Errors produced by the exact-arithmetic kernel and the combinatorial
/// object layer. Every variant is either a contract violation on the
/// caller's side or a data-dependent outcome (`NonDivisible`,
/// `NotInImage`); the library never panics on valid input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    NonDivisible,
    /// Division by the zero polynomial.
    DivisionByZero,
    /// `reverse` called with a bound smaller than the degree.
    DegreeExceedsBound {
        degree: usize,
        bound: usize,
    },
    /// Binary series operation on series of different truncation orders.
    SeriesOrderMismatch {
        left: usize,
        right: usize,
    },
    /// Operation requires words with at least two copies per letter.
    RequiresK2 {
        k: usize,
    },
    /// Alternating runs are undefined for permutations of length < 2.
    RunsUndefined {
        n: usize,
    },
    /// The dual-set preimage is only defined for even-length permutations.
    OddLength {
        len: usize,
    },
    /// The permutation is not in the image of the first/second-occurrence
    /// relabeling of Stirling permutations.
    NotInImage,
    InvalidPermutation(String),
    InvalidInversionSequence(String),
    InvalidStirlingWord(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonDivisible => write!(f, "exact division left a nonzero remainder"),
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::DegreeExceedsBound { degree, bound } => {
                write!(f, "degree {degree} exceeds reversal bound {bound}")
            }
            Error::SeriesOrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::RequiresK2 { k } => {
                write!(
                    f,
                    "statistic requires k >= 2 copies per letter, got k = {k}"
                )
            }
            Error::RunsUndefined { n } => {
                write!(f, "alternating runs are undefined for length {n} < 2")
            }
            Error::OddLength { len } => {
                write!(f, "dual-set preimage needs even length, got {len}")
            }
            Error::NotInImage => write!(f, "permutation is not in the dual set"),
            Error::InvalidPermutation(reason) => write!(f, "invalid permutation: {reason}"),
            Error::InvalidInversionSequence(reason) => {
                write!(f, "invalid inversion sequence: {reason}")
            }
            Error::InvalidStirlingWord(reason) => write!(f, "invalid Stirling word: {reason}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
