//! Class-tagged exact reals: `offset + scale·symbol`.
//!
//! The class is part of the construction, never inferred from digits. A
//! value either is a plain rational (no symbol, scale 0) or a rational
//! affine image of a registered irrational generator, in which case its
//! class is the symbol's kind.

use std::fmt;

use num_traits::{Signed, Zero};

use super::rational::{rat, rational_string, Rational};
use super::symbols::{default_generator, lookup_symbol, Symbol, SymbolKind};
use super::NumericsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberClass {
    Natural,
    Rational,
    AlgebraicIrrational,
    Transcendental,
}

impl NumberClass {
    /// Naturals, rationals and algebraic irrationals are all algebraic.
    pub fn is_algebraic(self) -> bool {
        !matches!(self, NumberClass::Transcendental)
    }

    pub fn label(self) -> &'static str {
        match self {
            NumberClass::Natural => "natural",
            NumberClass::Rational => "rational",
            NumberClass::AlgebraicIrrational => "algebraic_irrational",
            NumberClass::Transcendental => "transcendental",
        }
    }

    pub fn parse(label: &str) -> Option<Self> {
        match label {
            "natural" => Some(NumberClass::Natural),
            "rational" => Some(NumberClass::Rational),
            "algebraic_irrational" => Some(NumberClass::AlgebraicIrrational),
            "transcendental" => Some(NumberClass::Transcendental),
            _ => None,
        }
    }
}

impl fmt::Display for NumberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, PartialEq)]
pub struct TaggedReal {
    class: NumberClass,
    symbol: Option<&'static Symbol>,
    scale: Rational,
    offset: Rational,
}

impl TaggedReal {
    /// A non-negative integer tagged as natural.
    pub fn natural(value: u64) -> Self {
        Self {
            class: NumberClass::Natural,
            symbol: None,
            scale: Rational::zero(),
            offset: Rational::from_integer(value.into()),
        }
    }

    pub fn rational(value: Rational) -> Self {
        Self {
            class: NumberClass::Rational,
            symbol: None,
            scale: Rational::zero(),
            offset: value,
        }
    }

    /// `offset + scale·symbol` with the class taken from the symbol's kind.
    pub fn symbolic(
        symbol_id: &str,
        scale: Rational,
        offset: Rational,
    ) -> Result<Self, NumericsError> {
        let symbol =
            lookup_symbol(symbol_id).ok_or(NumericsError::UnknownSymbol(symbol_id.to_string()))?;
        if scale.is_zero() {
            return Err(NumericsError::ZeroScale);
        }
        let class = match symbol.kind {
            SymbolKind::AlgebraicIrrational => NumberClass::AlgebraicIrrational,
            SymbolKind::Transcendental => NumberClass::Transcendental,
        };
        Ok(Self {
            class,
            symbol: Some(symbol),
            scale,
            offset,
        })
    }

    pub fn class(&self) -> NumberClass {
        self.class
    }

    pub fn symbol(&self) -> Option<&'static Symbol> {
        self.symbol
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Exact rational value, available only for symbol-free tags.
    pub fn exact_rational(&self) -> Option<&Rational> {
        if self.symbol.is_none() {
            Some(&self.offset)
        } else {
            None
        }
    }

    /// Plot-only approximation: symbols are replaced by their registered
    /// convergent. Never used in validation logic.
    pub fn render_approx(&self) -> Rational {
        match self.symbol {
            None => self.offset.clone(),
            Some(sym) => &self.offset + &self.scale * &sym.approx,
        }
    }

    /// Rational affine image `s·x + t`.
    ///
    /// A nonzero `s` preserves the class of irrational values; a natural
    /// input degrades to plain rational (the image is generally not a
    /// non-negative integer). `s = 0` collapses to the rational `t`.
    pub fn affine(&self, s: &Rational, t: &Rational) -> TaggedReal {
        if s.is_zero() {
            return TaggedReal::rational(t.clone());
        }
        match self.symbol {
            Some(sym) => TaggedReal {
                class: self.class,
                symbol: Some(sym),
                scale: s * &self.scale,
                offset: s * &self.offset + t,
            },
            None => TaggedReal::rational(s * &self.offset + t),
        }
    }
}

impl fmt::Debug for TaggedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}]", self.class)
    }
}

impl fmt::Display for TaggedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.symbol {
            None => f.write_str(&rational_string(&self.offset)),
            Some(sym) => write!(
                f,
                "{} + {}·{}",
                rational_string(&self.offset),
                rational_string(&self.scale),
                sym.id
            ),
        }
    }
}

/// A transcendental value within `radius` of `target`.
///
/// Picks `target + 10^(−j)·g` for the default generator `g` and the
/// smallest `j ≥ 0` whose scaled magnitude bound stays below `radius`, so
/// the distance bound holds under any valuation of `g` inside its declared
/// bounds.
pub fn shifted_transcendental(
    target: &Rational,
    radius: &Rational,
) -> Result<TaggedReal, NumericsError> {
    if !radius.is_positive() {
        return Err(NumericsError::NonPositiveRadius);
    }
    let generator = default_generator();
    let bound = generator.magnitude_bound();
    let tenth = rat(1, 10);
    let mut scale = rat(1, 1);
    while &scale * &bound >= *radius {
        scale *= &tenth;
    }
    TaggedReal::symbolic(generator.id, scale, target.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_transcendental_picks_the_coarsest_safe_scale() {
        let t = shifted_transcendental(&rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(t.class(), NumberClass::Transcendental);
        assert_eq!(t.scale(), &rat(1, 10));
        assert_eq!(t.offset(), &rat(0, 1));

        let t = shifted_transcendental(&rat(1, 2), &rat(1, 1000)).unwrap();
        assert_eq!(t.scale(), &rat(1, 10_000));
        assert_eq!(t.offset(), &rat(1, 2));
    }

    #[test]
    fn shifted_value_stays_within_radius_under_any_valuation() {
        let target = rat(3, 7);
        let radius = rat(1, 50);
        let t = shifted_transcendental(&target, &radius).unwrap();
        let sym = t.symbol().unwrap();
        // Worst case over the declared bounds.
        for extreme in [&sym.lower, &sym.upper] {
            let value = t.offset() + t.scale() * extreme;
            assert!((value - &target).abs() < radius);
        }
        assert!((t.render_approx() - &target).abs() < radius);
    }

    #[test]
    fn shifted_transcendental_rejects_nonpositive_radius() {
        assert!(shifted_transcendental(&rat(0, 1), &rat(0, 1)).is_err());
        assert!(shifted_transcendental(&rat(0, 1), &rat(-1, 2)).is_err());
    }

    #[test]
    fn affine_preserves_irrational_classes() {
        let pi_based = TaggedReal::symbolic("pi", rat(1, 10), rat(0, 1)).unwrap();
        let moved = pi_based.affine(&rat(3, 2), &rat(-5, 7));
        assert_eq!(moved.class(), NumberClass::Transcendental);
        assert_eq!(moved.scale(), &rat(3, 20));

        let root = TaggedReal::symbolic("sqrt2", rat(2, 1), rat(1, 1)).unwrap();
        assert_eq!(root.affine(&rat(-1, 3), &rat(0, 1)).class(), NumberClass::AlgebraicIrrational);
    }

    #[test]
    fn affine_demotes_naturals_to_rational() {
        let n = TaggedReal::natural(3);
        assert_eq!(n.class(), NumberClass::Natural);
        let image = n.affine(&rat(1, 2), &rat(0, 1));
        assert_eq!(image.class(), NumberClass::Rational);
        assert_eq!(image.exact_rational(), Some(&rat(3, 2)));
    }

    #[test]
    fn zero_scale_symbolic_is_rejected() {
        assert!(TaggedReal::symbolic("pi", rat(0, 1), rat(1, 2)).is_err());
        assert!(TaggedReal::symbolic("nosuch", rat(1, 1), rat(0, 1)).is_err());
    }
}
