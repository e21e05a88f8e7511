//! Crate-wide error type.

use std::fmt;

/// Errors raised by the exact kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The zero polynomial has no leading term.
    ZeroPolynomial,
    /// The operation needs a partition with at least one part.
    EmptyPartition,
    /// No integer partition represents the polynomial; the corresponding
    /// Hilbert scheme is empty in every ambient space.
    NotHilbert,
    /// A monomial has the wrong number of variables for its context.
    LengthMismatch { expected: usize, found: usize },
    /// Variable index outside `0..nvars`.
    IndexOutOfRange { index: usize, nvars: usize },
    /// The largest part of the partition exceeds the ambient dimension.
    PartitionTooLarge { part: u32, ambient: u32 },
    /// The construction needs a strictly larger ambient space.
    AmbientTooSmall { ambient: u32, needed: u32 },
    /// A parameter violates the constraints of the construction.
    ParameterOutOfRange(String),
    /// Interpolated values disagree with the Hilbert function at the
    /// validation degrees; retry with a larger regularity hint.
    NotYetPolynomial { hint: u32 },
    /// The ambient dimension must be at least 1.
    InvalidAmbient { ambient: u32 },
    /// A singular-verdict operation was called on a smooth or empty input.
    NotSingular,
    /// The zero ideal has no generators to work with.
    ZeroIdeal,
    /// A computation would exceed the configured degree cap.
    DegreeCapExceeded { degree: u32, cap: u32 },
    /// The witness ideal does not have the expected Hilbert polynomial.
    PolynomialMismatch { expected: String, found: String },
    /// The ideal is not saturated with respect to the last variable.
    NotSaturated,
    /// Malformed textual input (partition, residual type, polynomial, ideal).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "the zero polynomial has no leading term"),
            Error::EmptyPartition => write!(f, "the partition must have at least one part"),
            Error::NotHilbert => {
                write!(f, "no integer partition represents this polynomial")
            }
            Error::LengthMismatch { expected, found } => write!(
                f,
                "monomial has {found} exponents but the context has {expected} variables"
            ),
            Error::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variables")
            }
            Error::PartitionTooLarge { part, ambient } => write!(
                f,
                "largest part {part} exceeds the ambient dimension {ambient}"
            ),
            Error::AmbientTooSmall { ambient, needed } => write!(
                f,
                "ambient dimension {ambient} too small; need at least {needed}"
            ),
            Error::ParameterOutOfRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::NotYetPolynomial { hint } => write!(
                f,
                "Hilbert function not yet polynomial at degree hint {hint}; retry with a larger hint"
            ),
            Error::InvalidAmbient { ambient } => {
                write!(f, "ambient dimension must be at least 1, got {ambient}")
            }
            Error::NotSingular => write!(f, "the Hilbert scheme is not singular here"),
            Error::ZeroIdeal => write!(f, "the zero ideal is not allowed here"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "computation needs degree {degree}, above the cap {cap}")
            }
            Error::PolynomialMismatch { expected, found } => write!(
                f,
                "witness has Hilbert polynomial {found}, expected {expected}"
            ),
            Error::NotSaturated => {
                write!(f, "ideal is not saturated with respect to the last variable")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
