//! Circle arcs through two points avoiding a finite excluded set.
//!
//! Centers are parameterized along the perpendicular bisector of the
//! chord. For each excluded point the on-circumference condition is affine
//! in the parameter (the quadratic terms cancel), so each point forbids at
//! most one parameter value and almost every center works; the smallest
//! admissible non-negative integer parameter is chosen for determinism.

use num_traits::Zero;

use crate::numerics::{rat, Rational};
use num_bigint::BigInt;
use num_integer::Integer;

use super::point::Point;
use super::GeometryError;

/// An arc of an exactly-represented circle: both endpoints lie on the
/// circle by construction, witnessed by `radius_squared`.
#[derive(Debug, Clone)]
pub struct CircleArc {
    pub center: (Rational, Rational),
    pub radius_squared: Rational,
    pub endpoints: (Point, Point),
    /// The bisector parameter that produced the center.
    pub parameter: Rational,
}

impl CircleArc {
    pub fn endpoint_coords(&self) -> ((Rational, Rational), (Rational, Rational)) {
        let a = self.endpoints.0.exact_rational_coords().expect("rational endpoints");
        let b = self.endpoints.1.exact_rational_coords().expect("rational endpoints");
        ((a[0].clone(), a[1].clone()), (b[0].clone(), b[1].clone()))
    }
}

pub fn squared_distance(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    let dx = &a.0 - &b.0;
    let dy = &a.1 - &b.1;
    &dx * &dx + &dy * &dy
}

/// Scales a rational vector to a primitive integer vector with the same
/// orientation.
fn primitive_direction(x: &Rational, y: &Rational) -> (Rational, Rational) {
    let scale = Rational::new(
        x.denom().lcm(y.denom()),
        BigInt::from(1),
    );
    let ix = (x * &scale).to_integer();
    let iy = (y * &scale).to_integer();
    let g = ix.gcd(&iy);
    debug_assert!(!g.is_zero(), "direction must be nonzero");
    (
        Rational::from_integer(ix / &g),
        Rational::from_integer(iy / &g),
    )
}

fn rational_plane_coords(
    point: &Point,
    which: &'static str,
) -> Result<(Rational, Rational), GeometryError> {
    if point.dim() != 2 {
        return Err(GeometryError::DimensionMismatch {
            from: 2,
            to: point.dim(),
        });
    }
    let coords = point
        .exact_rational_coords()
        .ok_or(GeometryError::NonRationalPoint { which })?;
    Ok((coords[0].clone(), coords[1].clone()))
}

/// Builds a circle through two rational plane points whose circumference
/// avoids every point of `excluded`, and returns the connecting arc.
pub fn circle_avoiding(
    from: &Point,
    to: &Point,
    excluded: &[(Rational, Rational)],
) -> Result<CircleArc, GeometryError> {
    let a = rational_plane_coords(from, "first")?;
    let b = rational_plane_coords(to, "second")?;
    if a == b {
        return Err(GeometryError::DegenerateInput);
    }
    for (index, e) in excluded.iter().enumerate() {
        if *e == a || *e == b {
            return Err(GeometryError::ExcludedIsEndpoint { index });
        }
    }

    let two = rat(2, 1);
    let mid = ((&a.0 + &b.0) / &two, (&a.1 + &b.1) / &two);
    let chord = (&b.0 - &a.0, &b.1 - &a.1);
    let dir = primitive_direction(&-&chord.1, &chord.0);

    // centre(t) = mid + t·dir. |centre − e|² = |centre − a|² collapses to
    // coeff·t = rhs with coeff = 2·dir·(a − e).
    let mut forbidden: Vec<Rational> = Vec::with_capacity(excluded.len());
    for e in excluded {
        let coeff = (&dir.0 * (&a.0 - &e.0) + &dir.1 * (&a.1 - &e.1)) * &two;
        let rhs = squared_distance(&mid, &a) - squared_distance(&mid, e);
        if coeff.is_zero() {
            // Only the endpoints are equidistant from every bisector
            // point, and those were rejected above.
            debug_assert!(!rhs.is_zero());
            continue;
        }
        forbidden.push(rhs / coeff);
    }

    let mut t = Rational::zero();
    while forbidden.contains(&t) {
        t += rat(1, 1);
    }

    let center = (&mid.0 + &t * &dir.0, &mid.1 + &t * &dir.1);
    let radius_squared = squared_distance(&center, &a);
    debug_assert_eq!(radius_squared, squared_distance(&center, &b));
    Ok(CircleArc {
        center,
        radius_squared,
        endpoints: (from.clone(), to.clone()),
        parameter: t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::TaggedReal;

    fn rational_point(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::plane(
            TaggedReal::rational(rat(x.0, x.1)),
            TaggedReal::rational(rat(y.0, y.1)),
        )
    }

    #[test]
    fn worked_example_dodges_the_forbidden_midperpendicular_point() {
        let from = rational_point((0, 1), (0, 1));
        let to = rational_point((2, 1), (0, 1));
        let arc = circle_avoiding(&from, &to, &[(rat(1, 1), rat(1, 1))]).unwrap();
        assert_eq!(arc.parameter, rat(1, 1));
        assert_eq!(arc.center, (rat(1, 1), rat(1, 1)));
        assert_eq!(arc.radius_squared, rat(2, 1));
    }

    #[test]
    fn no_exclusions_give_the_diameter_circle() {
        let from = rational_point((0, 1), (0, 1));
        let to = rational_point((2, 1), (0, 1));
        let arc = circle_avoiding(&from, &to, &[]).unwrap();
        assert_eq!(arc.parameter, rat(0, 1));
        assert_eq!(arc.center, (rat(1, 1), rat(0, 1)));
        assert_eq!(arc.radius_squared, rat(1, 1));
    }

    #[test]
    fn excluded_points_never_land_on_the_circle() {
        let from = rational_point((-1, 2), (1, 3));
        let to = rational_point((3, 1), (2, 1));
        let excluded: Vec<(Rational, Rational)> = (0..12)
            .map(|i| (rat(i, 5), rat(3 - i, 7)))
            .collect();
        let arc = circle_avoiding(&from, &to, &excluded).unwrap();
        let (a, b) = arc.endpoint_coords();
        assert_eq!(squared_distance(&arc.center, &a), arc.radius_squared);
        assert_eq!(squared_distance(&arc.center, &b), arc.radius_squared);
        for e in &excluded {
            assert_ne!(squared_distance(&arc.center, e), arc.radius_squared);
        }
    }

    #[test]
    fn degenerate_and_endpoint_collisions_are_rejected() {
        let p = rational_point((1, 1), (1, 1));
        assert!(matches!(
            circle_avoiding(&p, &p, &[]),
            Err(GeometryError::DegenerateInput)
        ));
        let q = rational_point((2, 1), (1, 1));
        assert!(matches!(
            circle_avoiding(&p, &q, &[(rat(2, 1), rat(1, 1))]),
            Err(GeometryError::ExcludedIsEndpoint { index: 0 })
        ));
    }

    #[test]
    fn symbolic_endpoints_are_rejected() {
        let p = rational_point((0, 1), (0, 1));
        let q = Point::plane(
            TaggedReal::symbolic("pi", rat(1, 1), rat(0, 1)).unwrap(),
            TaggedReal::rational(rat(1, 1)),
        );
        assert!(matches!(
            circle_avoiding(&p, &q, &[]),
            Err(GeometryError::NonRationalPoint { which: "second" })
        ));
    }
}
