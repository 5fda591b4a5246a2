use alloc::string::String;
use core::fmt;

/// Errors raised by shape construction, counting and the bijections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts are not weakly decreasing.
    NotAPartition,
    /// Parts are not strictly decreasing and positive.
    NotStrict,
    /// A strict union was requested but a part repeats.
    StrictnessViolation(usize),
    /// The partition does not fit inside the enclosing staircase or rectangle.
    NotContained,
    /// The truncation does not fit the shape it is cut from.
    InvalidTruncation(String),
    /// The labels of a tableau are not exactly `1..=N`.
    LabelSetMismatch,
    /// The labels supplied do not match the row lengths of the region.
    ShapeMismatch,
    /// A factored ratio has a negative exponent or a negative sign.
    NotAnInteger,
    /// A part of `mu` does not exceed the staircase size.
    PartTooSmall { part: usize, bound: usize },
    /// The operation does not accept this kind of region.
    UnsupportedRegion,
    /// The two halves of a split do not tile the target region.
    IncompatibleShapes,
    /// The chosen pivot cell is not on the north-east boundary.
    NotOnBoundary { row: usize, col: usize },
    /// A parameter lies outside the domain of the operation.
    InvalidParameter(String),
    /// A shape descriptor does not follow the descriptor grammar.
    InvalidSpec(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPartition => f.write_str("parts are not weakly decreasing"),
            Error::NotStrict => f.write_str("parts are not strictly decreasing and positive"),
            Error::StrictnessViolation(p) => write!(f, "strict union repeats part {p}"),
            Error::NotContained => f.write_str("partition is not contained in the enclosing shape"),
            Error::InvalidTruncation(msg) => write!(f, "invalid truncation: {msg}"),
            Error::LabelSetMismatch => f.write_str("labels are not exactly 1..N"),
            Error::ShapeMismatch => f.write_str("labels do not match the region rows"),
            Error::NotAnInteger => f.write_str("factored value is not a nonnegative integer"),
            Error::PartTooSmall { part, bound } => {
                write!(f, "part {part} of mu must exceed {bound}")
            }
            Error::UnsupportedRegion => f.write_str("unsupported region for this operation"),
            Error::IncompatibleShapes => f.write_str("shapes do not tile the region"),
            Error::NotOnBoundary { row, col } => {
                write!(f, "cell ({row},{col}) is not on the north-east boundary")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::InvalidSpec(msg) => write!(f, "invalid shape descriptor: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
