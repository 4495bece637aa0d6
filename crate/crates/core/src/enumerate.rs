//! Injective sequence sources.
//!
//! A source is a total (or eventually exhausted) map from 1-based indices
//! to rationals. Three kinds are provided: the alternating harmonic
//! sequence, an enumeration of all rationals inside an open interval, and
//! explicit term lists read from memory or from a file.
//!
//! File sources are rejected up front if they repeat a term; programmatic
//! sources are trusted at construction and re-checked lazily wherever a
//! scan actually inspects their terms.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numerics::{parse_rational, rational_string, Interval, Rational};

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("cannot read sequence file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: cannot parse `{content}` as a rational")]
    Parse { line: usize, content: String },
    #[error("duplicate term {value} on lines {first_line} and {second_line}; sequences must be injective")]
    Duplicate {
        value: String,
        first_line: usize,
        second_line: usize,
    },
    #[error("{value} is neither 0 nor a term of the alternating harmonic sequence")]
    NotAMember { value: String },
    #[error("the index of {value} does not fit in 64 bits")]
    IndexTooLarge { value: String },
}

/// Term `ν` of the alternating harmonic sequence: `(−1)^ν / ν`.
pub fn harmonic_term(nu: u64) -> Rational {
    assert!(nu >= 1, "sequence indices are 1-based");
    let numer = if nu % 2 == 1 { -1 } else { 1 };
    Rational::new(numer.into(), nu.into())
}

/// Index of `x` under the pairing `0 ↔ 1`, `(−1)^ν/ν ↔ ν + 1`.
pub fn bijection_index(x: &Rational) -> Result<u64, EnumerateError> {
    if x.is_zero() {
        return Ok(1);
    }
    // Reduced harmonic terms have |numerator| = 1 and are negative exactly
    // when the denominator (= ν) is odd.
    let is_unit = x.numer().abs().is_one();
    let denom_odd = x.denom().is_odd();
    if is_unit && (x.is_negative() == denom_odd) {
        let nu: u64 = x
            .denom()
            .try_into()
            .map_err(|_| EnumerateError::IndexTooLarge {
                value: rational_string(x),
            })?;
        return Ok(nu + 1);
    }
    Err(EnumerateError::NotAMember {
        value: rational_string(x),
    })
}

/// Diagonal pairing walk over reduced fractions `±p/q`, filtered to an
/// interval. Zero is the first candidate; each reduced pair then yields the
/// positive value followed by its negation.
struct Walk {
    interval: Interval,
    cache: Vec<Rational>,
    emitted_zero: bool,
    diagonal_sum: u64,
    numerator: u64,
    pending_negative: Option<Rational>,
}

impl Walk {
    fn new(interval: Interval) -> Self {
        Self {
            interval,
            cache: Vec::new(),
            emitted_zero: false,
            diagonal_sum: 2,
            numerator: 1,
            pending_negative: None,
        }
    }

    fn next_candidate(&mut self) -> Rational {
        if let Some(neg) = self.pending_negative.take() {
            return neg;
        }
        if !self.emitted_zero {
            self.emitted_zero = true;
            return Rational::zero();
        }
        loop {
            if self.numerator >= self.diagonal_sum {
                self.diagonal_sum += 1;
                self.numerator = 1;
                continue;
            }
            let p = self.numerator;
            let q = self.diagonal_sum - p;
            self.numerator += 1;
            if p.gcd(&q) == 1 {
                let positive = Rational::new(p.into(), q.into());
                self.pending_negative = Some(-positive.clone());
                return positive;
            }
        }
    }

    fn ensure(&mut self, count: usize) {
        while self.cache.len() < count {
            let candidate = self.next_candidate();
            if self.interval.contains(&candidate) {
                self.cache.push(candidate);
            }
        }
    }

    fn term_at(&mut self, index: u64) -> Rational {
        self.ensure(index as usize);
        self.cache[index as usize - 1].clone()
    }
}

enum SourceInner {
    Harmonic,
    RationalsIn(Mutex<Walk>),
    Terms(Vec<Rational>),
}

/// A concrete realization of an injective sequence.
#[derive(Clone)]
pub struct SequenceSource {
    inner: Arc<SourceInner>,
    description: String,
}

impl std::fmt::Debug for SequenceSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SequenceSource({})", self.description)
    }
}

impl SequenceSource {
    pub fn harmonic() -> Self {
        Self {
            inner: Arc::new(SourceInner::Harmonic),
            description: "harmonic".to_string(),
        }
    }

    /// Enumerates every rational strictly inside `interval` exactly once.
    pub fn rationals_in(interval: Interval) -> Self {
        let description = format!("rationals in {interval}");
        Self {
            inner: Arc::new(SourceInner::RationalsIn(Mutex::new(Walk::new(interval)))),
            description,
        }
    }

    /// Explicit finite term list. Injectivity is not checked here; scans
    /// that consume the source flag duplicates at the point of use.
    pub fn from_terms(name: impl Into<String>, terms: Vec<Rational>) -> Self {
        Self {
            inner: Arc::new(SourceInner::Terms(terms)),
            description: name.into(),
        }
    }

    /// Reads one rational per line; `#` starts a comment. Duplicate terms
    /// are rejected immediately.
    pub fn from_file(path: &Path) -> Result<Self, EnumerateError> {
        let text = std::fs::read_to_string(path)?;
        let terms = parse_term_lines(&text)?;
        Ok(Self::from_terms(path.display().to_string(), terms))
    }

    /// The term at a 1-based index, or `None` once a finite source is
    /// exhausted.
    pub fn term_at(&self, index: u64) -> Option<Rational> {
        assert!(index >= 1, "sequence indices are 1-based");
        match &*self.inner {
            SourceInner::Harmonic => Some(harmonic_term(index)),
            SourceInner::RationalsIn(walk) => Some(walk.lock().unwrap().term_at(index)),
            SourceInner::Terms(terms) => terms.get(index as usize - 1).cloned(),
        }
    }

    /// Number of terms for finite sources, `None` for infinite ones.
    pub fn len(&self) -> Option<u64> {
        match &*self.inner {
            SourceInner::Terms(terms) => Some(terms.len() as u64),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn describe(&self) -> &str {
        &self.description
    }
}

fn parse_term_lines(text: &str) -> Result<Vec<Rational>, EnumerateError> {
    let mut terms = Vec::new();
    let mut seen: HashMap<Rational, usize> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let value = parse_rational(line).map_err(|_| EnumerateError::Parse {
            line: lineno + 1,
            content: line.to_string(),
        })?;
        if let Some(&first_line) = seen.get(&value) {
            return Err(EnumerateError::Duplicate {
                value: rational_string(&value),
                first_line,
                second_line: lineno + 1,
            });
        }
        seen.insert(value.clone(), lineno + 1);
        terms.push(value);
    }
    Ok(terms)
}
