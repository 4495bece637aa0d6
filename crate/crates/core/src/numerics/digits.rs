//! Lazy canonical decimal digit streams over `[0, 1)`.
//!
//! A stream is a total function from 1-based positions to digits. Rational
//! streams are produced by exact long division, which yields the
//! terminating-style expansion directly: a truncating division never emits
//! an infinite trailing run of 9s, so every value in `[0, 1)` gets its
//! unique canonical expansion.

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::{pow10, rational_string, Rational};
use super::NumericsError;

#[derive(Clone)]
pub struct DigitStream {
    inner: Arc<Inner>,
}

struct Inner {
    provenance: String,
    rule: Rule,
}

enum Rule {
    /// Memoized long division of a rational in `[0, 1)`.
    LongDivision(Mutex<LongDivision>),
    /// Arbitrary total digit rule. The caller is responsible for
    /// canonicality; non-canonical streams are still useful as comparison
    /// subjects in tests and audits.
    Fn(Box<dyn Fn(u64) -> u8 + Send + Sync>),
}

struct LongDivision {
    denom: BigInt,
    digits: Vec<u8>,
    remainder: BigInt,
}

impl LongDivision {
    fn digit_at(&mut self, position: u64) -> u8 {
        let wanted = position as usize;
        while self.digits.len() < wanted {
            self.remainder *= 10;
            let (digit, rest) = num_integer::div_rem(self.remainder.clone(), self.denom.clone());
            self.digits.push(digit.to_u8().expect("quotient digit in 0..=9"));
            self.remainder = rest;
        }
        self.digits[wanted - 1]
    }
}

impl DigitStream {
    /// Digit at the given 1-based position.
    pub fn digit_at(&self, position: u64) -> u8 {
        assert!(position >= 1, "digit positions are 1-based");
        match &self.inner.rule {
            Rule::LongDivision(state) => state.lock().unwrap().digit_at(position),
            Rule::Fn(f) => {
                let d = f(position);
                debug_assert!(d <= 9, "digit rule produced {d}");
                d
            }
        }
    }

    /// Description of the generating rule, for reports.
    pub fn provenance(&self) -> &str {
        &self.inner.provenance
    }

    /// Builds a stream from an arbitrary total digit rule.
    pub fn from_fn<F>(provenance: impl Into<String>, rule: F) -> Self
    where
        F: Fn(u64) -> u8 + Send + Sync + 'static,
    {
        Self {
            inner: Arc::new(Inner {
                provenance: provenance.into(),
                rule: Rule::Fn(Box::new(rule)),
            }),
        }
    }

    /// The first `k` digits as a vector.
    pub fn prefix(&self, k: u64) -> Vec<u8> {
        (1..=k).map(|n| self.digit_at(n)).collect()
    }
}

impl fmt::Debug for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: String = self.prefix(8).iter().map(|d| d.to_string()).collect();
        write!(f, "DigitStream(0.{head}…, {})", self.provenance())
    }
}

/// Canonical decimal expansion of a rational in `[0, 1)`.
///
/// Terminating expansions continue with 0s; a trailing run of 9s can never
/// appear because the digits come from truncating long division.
pub fn rational_to_stream(q: &Rational) -> Result<DigitStream, NumericsError> {
    if q.is_negative() || *q >= Rational::from_integer(1.into()) {
        return Err(NumericsError::OutOfRange {
            value: rational_string(q),
        });
    }
    Ok(DigitStream {
        inner: Arc::new(Inner {
            provenance: format!("decimal({})", rational_string(q)),
            rule: Rule::LongDivision(Mutex::new(LongDivision {
                denom: q.denom().clone(),
                digits: Vec::new(),
                remainder: q.numer().clone(),
            })),
        }),
    })
}

/// Outcome of a bounded digit-by-digit comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstDifference {
    /// Smallest position where the streams disagree.
    At(u64),
    /// No disagreement up to and including the budget position.
    AgreeToBudget,
}

/// Scans positions `1..=budget` for the first disagreement.
pub fn locate_first_difference(a: &DigitStream, b: &DigitStream, budget: u64) -> FirstDifference {
    assert!(budget >= 1, "comparison budget must be positive");
    for n in 1..=budget {
        if a.digit_at(n) != b.digit_at(n) {
            return FirstDifference::At(n);
        }
    }
    FirstDifference::AgreeToBudget
}

/// Exact value of the first `k` digits: `Σ digit(n)·10^(−n)`.
pub fn prefix_value(s: &DigitStream, k: u64) -> Rational {
    assert!(k >= 1, "prefix length must be positive");
    let mut acc = BigInt::zero();
    for n in 1..=k {
        acc = acc * 10 + BigInt::from(s.digit_at(n));
    }
    Rational::new(acc, pow10(k))
}

/// Exact value of an explicit digit prefix.
pub fn digits_value(digits: &[u8]) -> Rational {
    assert!(!digits.is_empty(), "prefix must be nonempty");
    let mut acc = BigInt::zero();
    for &d in digits {
        acc = acc * 10 + BigInt::from(d);
    }
    Rational::new(acc, pow10(digits.len() as u64))
}
