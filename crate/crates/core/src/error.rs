use core::fmt;

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix or vector shapes do not line up.
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    /// A word of operators walked past the stored slice.
    DepthExceeded {
        level: usize,
        depth: usize,
    },
    Parity {
        n: i64,
        r: i64,
    },
    NotInIndexSet {
        n: i64,
        s: i64,
    },
    /// A kernel that must be one-dimensional was not.
    KernelDimension {
        expected: usize,
        found: usize,
    },
    /// A linear system that must be consistent was not.
    Inconsistent(String),
    OutOfRange(String),
    DegreeOverflow {
        degree: u32,
        bound: u32,
    },
    /// A computed object violated one of its defining identities.
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}x{}, found {}x{}", expected.0, expected.1, found.0, found.1)
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DepthExceeded { level, depth } => {
                write!(f, "level {level} lies outside the slice of depth {depth}")
            }
            Error::Parity { n, r } => write!(f, "n + r must be even and nonnegative (n={n}, r={r})"),
            Error::NotInIndexSet { n, s } => write!(f, "s={s} is not in the admissible index set for n={n}"),
            Error::KernelDimension { expected, found } => {
                write!(f, "expected a kernel of dimension {expected}, found {found}")
            }
            Error::Inconsistent(what) => write!(f, "inconsistent linear system: {what}"),
            Error::OutOfRange(what) => write!(f, "argument out of range: {what}"),
            Error::DegreeOverflow { degree, bound } => {
                write!(f, "degree {degree} exceeds the bound {bound}")
            }
            Error::Verification(what) => write!(f, "verification failed: {what}"),
        }
    }
}
