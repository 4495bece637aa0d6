//! Registry of named irrational generators.
//!
//! Irrationality and transcendence are never decided numerically anywhere
//! in the crate: a symbol's kind is declared here once, together with
//! rational bounds on its value and a fixed rational convergent used only
//! for rendering. Everything downstream is bookkeeping over these
//! declarations.

use once_cell::sync::Lazy;

use super::rational::{rat, Rational};
use num_traits::Signed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolKind {
    AlgebraicIrrational,
    Transcendental,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Symbol {
    pub id: &'static str,
    pub kind: SymbolKind,
    /// Declared rational bounds: the value lies in `(lower, upper)`.
    pub lower: Rational,
    pub upper: Rational,
    /// Fixed rational convergent used for plotting and approximate reports.
    pub approx: Rational,
}

impl Symbol {
    /// Largest absolute value the symbol can take under its bounds.
    pub fn magnitude_bound(&self) -> Rational {
        let lo = self.lower.abs();
        let hi = self.upper.abs();
        if lo > hi {
            lo
        } else {
            hi
        }
    }
}

static REGISTRY: Lazy<Vec<Symbol>> = Lazy::new(|| {
    vec![
        Symbol {
            id: "pi",
            kind: SymbolKind::Transcendental,
            lower: rat(3, 1),
            upper: rat(4, 1),
            approx: rat(355, 113),
        },
        Symbol {
            id: "e",
            kind: SymbolKind::Transcendental,
            lower: rat(2, 1),
            upper: rat(3, 1),
            approx: rat(193, 71),
        },
        Symbol {
            id: "liouville",
            kind: SymbolKind::Transcendental,
            lower: rat(11, 100),
            upper: rat(3, 25),
            approx: rat(110_001, 1_000_000),
        },
        Symbol {
            id: "sqrt2",
            kind: SymbolKind::AlgebraicIrrational,
            lower: rat(7, 5),
            upper: rat(3, 2),
            approx: rat(99, 70),
        },
        Symbol {
            id: "phi",
            kind: SymbolKind::AlgebraicIrrational,
            lower: rat(8, 5),
            upper: rat(13, 8),
            approx: rat(89, 55),
        },
    ]
});

pub fn symbols() -> &'static [Symbol] {
    &REGISTRY
}

pub fn lookup_symbol(id: &str) -> Option<&'static Symbol> {
    REGISTRY.iter().find(|s| s.id == id)
}

/// The generator used when a construction just needs "some transcendental".
pub fn default_generator() -> &'static Symbol {
    lookup_symbol("pi").expect("registry always contains pi")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_bracket_the_convergents() {
        for sym in symbols() {
            assert!(sym.lower < sym.upper, "{}", sym.id);
            assert!(
                sym.lower < sym.approx && sym.approx < sym.upper,
                "approx for {} outside declared bounds",
                sym.id
            );
        }
    }

    #[test]
    fn default_generator_is_bounded_by_four() {
        assert_eq!(default_generator().magnitude_bound(), rat(4, 1));
    }

    #[test]
    fn lookup_misses_return_none() {
        assert!(lookup_symbol("tau").is_none());
        assert_eq!(lookup_symbol("sqrt2").unwrap().kind, SymbolKind::AlgebraicIrrational);
    }
}
