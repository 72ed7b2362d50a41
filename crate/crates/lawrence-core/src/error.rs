use std::fmt;

/// Errors raised by configuration validation and the guarded enumerations.
///
/// Failed mathematical cross-checks are not errors; they are reported as
/// failed entries by the [`crate::verify`] suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A configuration vector is the zero vector (1-based index).
    ZeroVector { index: usize },
    /// The configuration does not generate the lattice as an abelian group.
    NotGenerating,
    /// The configuration has no vectors.
    EmptyConfig,
    /// The configuration rank is zero.
    ZeroRank,
    /// An enumeration would exceed its configured guard bound.
    SizeGuard {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    /// Offset generation did not reach a simple arrangement within budget.
    RetryExhausted { rounds: u32 },
    /// The flat of an independent set is empty (cannot occur when the
    /// arrangement is simple; kept as a defect signal).
    EmptyFlat,
    /// Explicitly supplied offsets do not make the arrangement simple.
    NotSimple,
    /// `substitute_reciprocal` called with a total degree below the
    /// polynomial degree.
    DegreeTooLarge { total: usize, degree: usize },
    /// Offset list length does not match the number of vectors.
    OffsetCount { expected: usize, got: usize },
    /// Dilate counts produced a negative delta coefficient.
    NegativeDelta { index: usize },
    /// Dilate counts are inconsistent with a degree-(n+d-1) Ehrhart
    /// polynomial.
    PolynomialityViolation,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVector { index } => {
                write!(f, "vector b_{index} is zero")
            }
            Error::NotGenerating => {
                write!(f, "configuration does not generate the lattice")
            }
            Error::EmptyConfig => write!(f, "configuration has no vectors"),
            Error::ZeroRank => write!(f, "configuration rank must be at least 1"),
            Error::SizeGuard {
                what,
                limit,
                requested,
            } => write!(
                f,
                "size guard exceeded for {what}: requested {requested}, limit {limit}"
            ),
            Error::RetryExhausted { rounds } => write!(
                f,
                "no simple offsets found within {rounds} retry rounds"
            ),
            Error::EmptyFlat => write!(f, "independent set has an empty flat"),
            Error::NotSimple => write!(f, "offsets do not give a simple arrangement"),
            Error::DegreeTooLarge { total, degree } => write!(
                f,
                "reciprocal substitution needs total degree >= {degree}, got {total}"
            ),
            Error::OffsetCount { expected, got } => {
                write!(f, "expected {expected} offsets, got {got}")
            }
            Error::NegativeDelta { index } => {
                write!(f, "delta_{index} computed negative from dilate counts")
            }
            Error::PolynomialityViolation => write!(
                f,
                "dilate counts violate polynomiality of the Ehrhart counting function"
            ),
        }
    }
}

impl std::error::Error for Error {}
