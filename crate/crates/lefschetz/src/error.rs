//! Error type shared by the fallible constructors and operations.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

/// Everything that can go wrong when building or transforming factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A twist class needs gcd(p, q) = 1; in particular (0, 0) is rejected.
    NotPrimitive { p: BigInt, q: BigInt },
    /// A 2×2 integer matrix with determinant ≠ 1 is not in SL(2,Z).
    NotUnimodular { det: BigInt },
    /// A Hurwitz move index i must satisfy 1 ≤ i < len (moves act on the
    /// adjacent pair at positions i, i+1, both 1-based).
    IndexOutOfRange { index: usize, len: usize },
    /// The operation is only defined for factorizations of this length.
    WrongLength { expected: usize, found: usize },
    /// The conjugation normal form needs at least one factor to anchor.
    EmptyFactorization,
    /// Classification input must consist of factorizations of the same
    /// mapping class (equal products and equal lengths).
    MixedClasses { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrimitive { p, q } => {
                write!(f, "({p},{q}) is not a primitive pair")
            }
            Error::NotUnimodular { det } => {
                write!(f, "matrix has determinant {det}, expected 1")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(
                    f,
                    "move index {index} out of range for length {len} (need 1 <= i < len)"
                )
            }
            Error::WrongLength { expected, found } => {
                write!(f, "operation needs length {expected}, got {found}")
            }
            Error::EmptyFactorization => {
                write!(f, "operation is undefined for the empty factorization")
            }
            Error::MixedClasses { detail } => {
                write!(f, "factorizations describe different mapping classes: {detail}")
            }
        }
    }
}
