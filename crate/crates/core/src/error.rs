use core::fmt;

use crate::scalar::Scalar;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `q` must satisfy `|q| > 1`.
    InvalidDeformation(Scalar),
    /// A scalar that must be nonzero was zero; the payload names it.
    ZeroScalar(&'static str),
    /// A q-string or evaluation module of length zero.
    ZeroLength,
    EmptyInput(&'static str),
    /// `scalar` and its inverse occur with different multiplicities.
    NotInverseClosed {
        scalar: Scalar,
        multiplicity: usize,
        inverse_multiplicity: usize,
    },
    /// `±1` occurs an odd number of times in an inverse-closed multiset.
    OddSelfInverse {
        scalar: Scalar,
        multiplicity: usize,
    },
    TooManyStrings {
        count: usize,
        max: usize,
    },
    DimensionMismatch {
        left: usize,
        right: usize,
    },
    DeformationMismatch,
    NotDiagonalizable,
    RequiresIrreducible,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDeformation(q) => {
                write!(f, "deformation parameter q = {} must satisfy |q| > 1", q)
            }
            Error::ZeroScalar(what) => write!(f, "{what} must be nonzero"),
            Error::ZeroLength => f.write_str("length must be at least 1"),
            Error::EmptyInput(what) => write!(f, "{what} must be nonempty"),
            Error::NotInverseClosed {
                scalar,
                multiplicity,
                inverse_multiplicity,
            } => {
                let inv = scalar.recip();
                write!(
                    f,
                    "not inverse-closed: {} occurs {} time(s) but {} occurs {} time(s)",
                    scalar, multiplicity, inv, inverse_multiplicity
                )
            }
            Error::OddSelfInverse {
                scalar,
                multiplicity,
            } => write!(
                f,
                "not inverse-closed: {} must occur an even number of times, found {}",
                scalar, multiplicity
            ),
            Error::TooManyStrings { count, max } => {
                write!(
                    f,
                    "{count} q-strings exceeds the supported maximum of {max}"
                )
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::DeformationMismatch => f.write_str("modules are defined over different q"),
            Error::NotDiagonalizable => f.write_str("not diagonalizable with expected spectrum"),
            Error::RequiresIrreducible => f.write_str("criteria require irreducibility"),
        }
    }
}

impl core::error::Error for Error {}
