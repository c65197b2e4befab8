//! Integers extended with a single point at positive infinity.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A value in `Z ∪ {+inf}`.
///
/// The derived ordering places every finite value below [`ExtInt::PosInf`],
/// which is what both `min`/`max` and the connectivity comparisons rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub const INFINITY: ExtInt = ExtInt::PosInf;

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(k) => Some(k),
            ExtInt::PosInf => None,
        }
    }

    /// `k + 1` for finite `k`; infinity is fixed.
    pub fn succ(self) -> ExtInt {
        match self {
            ExtInt::Finite(k) => ExtInt::Finite(k + 1),
            ExtInt::PosInf => ExtInt::PosInf,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(k: i64) -> Self {
        ExtInt::Finite(k)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(k) => write!(f, "{k}"),
            ExtInt::PosInf => f.write_str("+inf"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not an extended integer: {0:?}")]
pub struct ParseExtIntError(String);

impl FromStr for ExtInt {
    type Err = ParseExtIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+inf" | "inf" => Ok(ExtInt::PosInf),
            t => t
                .parse::<i64>()
                .map(ExtInt::Finite)
                .map_err(|_| ParseExtIntError(s.to_string())),
        }
    }
}
