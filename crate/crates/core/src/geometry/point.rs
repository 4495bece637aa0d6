//! Points with class-tagged coordinates, and the puncture predicate.

use crate::numerics::{NumberClass, Rational, TaggedReal};

use super::GeometryError;

/// A point of the n-dimensional scene, n ≥ 2. Coordinates carry their
/// number-class tags; the tags, not any digit computation, decide whether
/// a point belongs to a removed class set.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<TaggedReal>,
}

impl Point {
    pub fn new(coords: Vec<TaggedReal>) -> Result<Self, GeometryError> {
        if coords.len() < 2 {
            return Err(GeometryError::TooFewCoordinates(coords.len()));
        }
        Ok(Self { coords })
    }

    /// Plane point shorthand.
    pub fn plane(x: TaggedReal, y: TaggedReal) -> Self {
        Self { coords: vec![x, y] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, index: usize) -> &TaggedReal {
        &self.coords[index]
    }

    pub fn coords(&self) -> &[TaggedReal] {
        &self.coords
    }

    /// Copy with one coordinate replaced.
    pub fn with_coord(&self, index: usize, value: TaggedReal) -> Point {
        let mut coords = self.coords.clone();
        coords[index] = value;
        Point { coords }
    }

    /// Index of the first coordinate whose class satisfies the predicate.
    pub fn first_coord_where(&self, predicate: impl Fn(NumberClass) -> bool) -> Option<usize> {
        self.coords.iter().position(|c| predicate(c.class()))
    }

    /// Rendered rational approximations of all coordinates (plot only).
    pub fn render_approx(&self) -> Vec<Rational> {
        self.coords.iter().map(TaggedReal::render_approx).collect()
    }

    /// Exact rational coordinates, if every coordinate is symbol-free.
    pub fn exact_rational_coords(&self) -> Option<Vec<Rational>> {
        self.coords
            .iter()
            .map(|c| c.exact_rational().cloned())
            .collect()
    }
}

/// Which coordinate-class set has been removed from the scene.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PunctureSpec {
    /// Points whose coordinates are all algebraic are removed.
    PurelyAlgebraic,
    /// Points whose coordinates are all transcendental are removed.
    PurelyTranscendental,
    /// Points with no natural-number coordinate are removed.
    PurelyNonNatural,
}

impl PunctureSpec {
    /// Whether a coordinate of this class counts toward removal.
    pub fn forbids(self, class: NumberClass) -> bool {
        match self {
            PunctureSpec::PurelyAlgebraic => class.is_algebraic(),
            PunctureSpec::PurelyTranscendental => class == NumberClass::Transcendental,
            PunctureSpec::PurelyNonNatural => class != NumberClass::Natural,
        }
    }

    /// A coordinate of an exempt class keeps a whole point (and, held
    /// fixed, a whole segment) out of the removed set.
    pub fn exempts(self, class: NumberClass) -> bool {
        !self.forbids(class)
    }

    pub fn label(self) -> &'static str {
        match self {
            PunctureSpec::PurelyAlgebraic => "purely_algebraic",
            PunctureSpec::PurelyTranscendental => "purely_transcendental",
            PunctureSpec::PurelyNonNatural => "purely_non_natural",
        }
    }

    pub fn parse(label: &str) -> Option<Self> {
        match label {
            "purely_algebraic" => Some(PunctureSpec::PurelyAlgebraic),
            "purely_transcendental" => Some(PunctureSpec::PurelyTranscendental),
            "purely_non_natural" => Some(PunctureSpec::PurelyNonNatural),
            _ => None,
        }
    }

    /// Legend text for plots.
    pub fn removed_description(self) -> &'static str {
        match self {
            PunctureSpec::PurelyAlgebraic => "removed: points with all coordinates algebraic",
            PunctureSpec::PurelyTranscendental => {
                "removed: points with all coordinates transcendental"
            }
            PunctureSpec::PurelyNonNatural => "removed: points with no natural coordinate",
        }
    }
}

/// True when every coordinate class of `point` is forbidden, i.e. the
/// point belongs to the removed set.
pub fn is_punctured(point: &Point, spec: PunctureSpec) -> bool {
    point.coords().iter().all(|c| spec.forbids(c.class()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn rational(n: i64, d: i64) -> TaggedReal {
        TaggedReal::rational(rat(n, d))
    }

    fn transcendental() -> TaggedReal {
        TaggedReal::symbolic("pi", rat(1, 10), rat(0, 1)).unwrap()
    }

    #[test]
    fn all_algebraic_points_are_removed_by_the_algebraic_puncture() {
        let p = Point::plane(rational(1, 2), rational(3, 1));
        assert!(is_punctured(&p, PunctureSpec::PurelyAlgebraic));
        assert!(!is_punctured(&p, PunctureSpec::PurelyTranscendental));
        assert!(is_punctured(&p, PunctureSpec::PurelyNonNatural));
    }

    #[test]
    fn mixed_points_survive_both_class_punctures() {
        let p = Point::plane(transcendental(), rational(3, 1));
        assert!(!is_punctured(&p, PunctureSpec::PurelyAlgebraic));
        assert!(!is_punctured(&p, PunctureSpec::PurelyTranscendental));
    }

    #[test]
    fn all_transcendental_points_are_removed_by_the_transcendental_puncture() {
        let p = Point::plane(transcendental(), transcendental());
        assert!(is_punctured(&p, PunctureSpec::PurelyTranscendental));
        assert!(!is_punctured(&p, PunctureSpec::PurelyAlgebraic));
    }

    #[test]
    fn one_natural_coordinate_survives_the_grid_puncture() {
        let on_grid = Point::plane(TaggedReal::natural(2), transcendental());
        assert!(!is_punctured(&on_grid, PunctureSpec::PurelyNonNatural));
        let off_grid = Point::plane(rational(1, 2), transcendental());
        assert!(is_punctured(&off_grid, PunctureSpec::PurelyNonNatural));
    }

    #[test]
    fn points_need_two_coordinates() {
        assert!(Point::new(vec![rational(0, 1)]).is_err());
        assert!(Point::new(vec![rational(0, 1); 3]).is_ok());
    }
}
