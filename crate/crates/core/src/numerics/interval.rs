//! Open intervals with exact rational endpoints.

use std::fmt;

use super::rational::{parse_rational, rational_string, Rational};
use super::NumericsError;

/// An open interval `(lo, hi)` with `lo < hi` strictly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, NumericsError> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(NumericsError::InvalidInterval {
                lo: rational_string(&lo),
                hi: rational_string(&hi),
            })
        }
    }

    /// Parses the command-line form `lo,hi`, each side a rational literal.
    pub fn parse_pair(input: &str) -> Result<Self, NumericsError> {
        let (lo, hi) = input.split_once(',').ok_or(NumericsError::ParseRational {
            input: input.to_string(),
        })?;
        Self::new(parse_rational(lo)?, parse_rational(hi)?)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    /// Strict membership: endpoints are not inside an open interval.
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// True when `self` sits strictly inside `other` on both sides.
    pub fn strictly_inside(&self, other: &Interval) -> bool {
        other.lo < self.lo && self.hi < other.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}
