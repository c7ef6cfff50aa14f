use core::fmt;

/// Errors produced by the algebra, engine, and code-construction layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic is not a prime number.
    NotPrime(u32),
    /// p^m exceeds the desk-scale bound of 2^16 elements.
    FieldTooLarge { p: u32, m: u32 },
    /// The extension degree is zero.
    ZeroDegree,
    /// The supplied modulus is malformed (wrong length, not monic, bad digit).
    BadModulus(&'static str),
    /// The supplied modulus factors over the prime field.
    ReducibleModulus,
    /// Operands belong to different fields.
    FieldMismatch,
    /// An integer encoding is outside `[0, q)`.
    ElementOutOfRange { value: u64, q: u32 },
    /// Inverse of zero requested.
    ZeroInverse,
    /// Polynomial division by the zero polynomial.
    DivisionByZero,
    /// The polynomial does not divide x^s - 1.
    NotADivisor,
    /// Operands have different ring shapes (field, s, or ell).
    ShapeMismatch,
    /// `s` or `ell` is zero or `s * ell` exceeds 2^16.
    BadShape { s: usize, ell: usize },
    /// An array or vector does not have the expected dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// Layer index outside `[0, ell)`.
    IndexOutOfRange { index: usize, bound: usize },
    /// An exact division that must succeed left a remainder.
    InternalDivisibilityViolation { layer: usize, coord: usize },
    /// The element is not in the ideal; detected at the given layer.
    NotMember { layer: usize },
    /// An enumeration would exceed its cap.
    TooLarge { size: u128, cap: u128 },
    /// Minimum distance of the zero code.
    Undefined,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "characteristic {p} is not prime"),
            Error::FieldTooLarge { p, m } => {
                write!(f, "field GF({p}^{m}) exceeds the 2^16 element bound")
            }
            Error::ZeroDegree => write!(f, "extension degree must be at least 1"),
            Error::BadModulus(why) => write!(f, "bad modulus: {why}"),
            Error::ReducibleModulus => write!(f, "modulus is reducible"),
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::ElementOutOfRange { value, q } => {
                write!(f, "element encoding {value} is outside [0, {q})")
            }
            Error::ZeroInverse => write!(f, "zero has no inverse"),
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::NotADivisor => write!(f, "polynomial does not divide x^s - 1"),
            Error::ShapeMismatch => write!(f, "ring shapes differ"),
            Error::BadShape { s, ell } => {
                write!(f, "invalid shape s={s}, ell={ell} (need s, ell >= 1 and s*ell <= 65536)")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 0..{bound}")
            }
            Error::InternalDivisibilityViolation { layer, coord } => write!(
                f,
                "internal error: coordinate {coord} of generator {layer} is not divisible by the layer-0 generator"
            ),
            Error::NotMember { layer } => write!(f, "element is not in the ideal (layer {layer})"),
            Error::TooLarge { size, cap } => write!(f, "enumeration size {size} exceeds cap {cap}"),
            Error::Undefined => write!(f, "minimum distance of the zero code is undefined"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
