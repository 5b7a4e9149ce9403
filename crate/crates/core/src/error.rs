use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed arguments: empty lists, zero generators, bad configs.
    InvalidInput(&'static str),
    /// The generators share a common factor, so the semigroup has
    /// infinitely many gaps and F is undefined.
    NotCoprime,
    /// A checked operation left the 63-bit signed range.
    Overflow,
    /// The operation requires a symmetric triple.
    NotSymmetric,
    /// The operation requires a non-symmetric triple.
    Symmetric,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::NotCoprime => f.write_str("generators are not coprime"),
            Error::Overflow => f.write_str("arithmetic overflow beyond the 63-bit range"),
            Error::NotSymmetric => f.write_str("semigroup is not symmetric"),
            Error::Symmetric => f.write_str("semigroup is symmetric"),
        }
    }
}

impl core::error::Error for Error {}
