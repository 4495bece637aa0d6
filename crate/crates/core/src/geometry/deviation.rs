//! Staircase plans hugging the straight line between two plane points.
//!
//! The chord is cut into `k = ⌈span/ε⌉` pieces at exact rational line
//! points; each piece is joined by the ordinary two-leg planner. Interior
//! cut points must carry exempt-class coordinates, so under the algebraic
//! puncture both coordinates receive one common transcendental shift
//! `s·g`: the shift moves every cut point by the same vector, risers and
//! treads keep their exact nominal lengths, and the perpendicular
//! deviation picks up less than `√2·(ε/8)` on top of the `span/k ≤ ε`
//! staircase bound. Under the transcendental puncture the cut points stay
//! exactly rational on the line.

use num_traits::{Signed, Zero};

use crate::numerics::{rat, shifted_transcendental, Rational, TaggedReal};

use super::plan::PathPlan;
use super::planner::{plan_path_algebraic_fixed, plan_path_transcendental_fixed, plane_span};
use super::point::{Point, PunctureSpec};
use super::GeometryError;

/// Exact squared perpendicular distance from `p` to the line through `a`
/// and `b` (all rational plane points).
pub fn squared_line_deviation(p: &[Rational], a: &[Rational], b: &[Rational]) -> Rational {
    let dx = &b[0] - &a[0];
    let dy = &b[1] - &a[1];
    let cross = &dx * (&p[1] - &a[1]) - &dy * (&p[0] - &a[0]);
    let len_sq = &dx * &dx + &dy * &dy;
    if len_sq.is_zero() {
        let ex = &p[0] - &a[0];
        let ey = &p[1] - &a[1];
        return &ex * &ex + &ey * &ey;
    }
    &cross * &cross / len_sq
}

fn ceil_to_u64(q: &Rational) -> u64 {
    q.ceil()
        .to_integer()
        .try_into()
        .expect("piece count fits in u64")
}

/// Connects two plane points with every waypoint within `epsilon`
/// (perpendicular, measured on rendered coordinates) of the straight line.
pub fn plan_path_bounded_deviation(
    from: &Point,
    to: &Point,
    epsilon: &Rational,
    spec: PunctureSpec,
) -> Result<PathPlan, GeometryError> {
    if !epsilon.is_positive() {
        return Err(GeometryError::NonPositiveEpsilon);
    }
    if from.dim() != 2 || to.dim() != 2 {
        return Err(GeometryError::UnsupportedDimension(from.dim().max(to.dim())));
    }
    let piece_planner = match spec {
        PunctureSpec::PurelyAlgebraic => plan_path_transcendental_fixed,
        PunctureSpec::PurelyTranscendental => plan_path_algebraic_fixed,
        PunctureSpec::PurelyNonNatural => return Err(GeometryError::UnsupportedPuncture),
    };

    let (span_x, span_y) = plane_span(from, to);
    let span = span_x.clone().max(span_y.clone());
    if span <= *epsilon {
        // One piece: the basic two-or-three leg plan already qualifies.
        return piece_planner(from, to);
    }
    let pieces = ceil_to_u64(&(&span / epsilon)).max(1);

    // Interior cut points: exact line points, shifted to an exempt class
    // where the puncture demands it.
    let a = from.render_approx();
    let b = to.render_approx();
    let shift_scale = match spec {
        PunctureSpec::PurelyAlgebraic => Some(
            shifted_transcendental(&Rational::zero(), &(epsilon / rat(8, 1)))
                .expect("eighth of a positive epsilon is positive"),
        ),
        _ => None,
    };
    let make_cut = |i: u64| -> Point {
        let frac = rat(i as i64, pieces as i64);
        let x = &a[0] + (&b[0] - &a[0]) * &frac;
        let y = &a[1] + (&b[1] - &a[1]) * &frac;
        match &shift_scale {
            Some(shift) => Point::plane(
                TaggedReal::symbolic(shift.symbol().unwrap().id, shift.scale().clone(), x)
                    .expect("nonzero scale"),
                TaggedReal::symbolic(shift.symbol().unwrap().id, shift.scale().clone(), y)
                    .expect("nonzero scale"),
            ),
            None => Point::plane(TaggedReal::rational(x), TaggedReal::rational(y)),
        }
    };

    let mut stops = Vec::with_capacity(pieces as usize + 1);
    stops.push(from.clone());
    for i in 1..pieces {
        stops.push(make_cut(i));
    }
    stops.push(to.clone());

    let mut legs = Vec::with_capacity(pieces as usize);
    for pair in stops.windows(2) {
        legs.push(piece_planner(&pair[0], &pair[1])?);
    }
    Ok(PathPlan::concat(legs))
}

/// Largest exact squared deviation of any waypoint from the straight line
/// between the plan's endpoints, measured on rendered coordinates.
pub fn max_squared_deviation(plan: &PathPlan) -> Rational {
    let a = plan.first().render_approx();
    let b = plan.last().render_approx();
    plan.waypoints
        .iter()
        .map(|w| squared_line_deviation(&w.render_approx(), &a, &b))
        .max()
        .expect("plans have at least one waypoint")
}
