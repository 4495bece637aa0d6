//! Axis-parallel planners.
//!
//! All three planners share one staircase scheme: hold an exempt
//! coordinate fixed while the others move, then release it once some other
//! coordinate has reached an exempt final value. When the destination has
//! no exempt coordinate besides the held one, the move detours through an
//! intermediate exempt value and finishes with one extra leg — the
//! two-versus-three segment dichotomy in the plane.

use num_traits::Signed;

use crate::numerics::{rat, NumberClass, Rational, TaggedReal};

use super::plan::PathPlan;
use super::point::{Point, PunctureSpec};
use super::GeometryError;

/// How the generic planner fills in class-specific choices.
struct ClassScheme {
    exempt: fn(NumberClass) -> bool,
    /// Error for a point with no exempt coordinate.
    missing: fn(&'static str) -> GeometryError,
    /// An exempt value near the given final coordinate, used as the
    /// intermediate hold in the three-leg case.
    hold_near: fn(&TaggedReal) -> TaggedReal,
}

fn plan_axis_parallel(
    from: &Point,
    to: &Point,
    scheme: &ClassScheme,
) -> Result<PathPlan, GeometryError> {
    if from.dim() != to.dim() {
        return Err(GeometryError::DimensionMismatch {
            from: from.dim(),
            to: to.dim(),
        });
    }
    let anchor = from
        .first_coord_where(scheme.exempt)
        .ok_or((scheme.missing)("first"))?;
    to.first_coord_where(scheme.exempt)
        .ok_or((scheme.missing)("second"))?;

    if from == to {
        return Ok(PathPlan::identity(from.clone()));
    }

    let mut plan = PathPlan::identity(from.clone());
    let exempt_final = (0..to.dim())
        .find(|&i| i != anchor && (scheme.exempt)(to.coord(i).class()));

    match exempt_final {
        Some(release) => {
            // Two phases: everything except the anchor, then the anchor
            // under cover of the already-final exempt coordinate.
            for index in (0..to.dim()).filter(|&i| i != anchor) {
                plan.push_move(index, to.coord(index).clone(), anchor);
            }
            plan.push_move(anchor, to.coord(anchor).clone(), release);
        }
        None => {
            // No exempt final besides the anchor's own column, so the
            // destination anchor coordinate is exempt. Park a neighbour
            // coordinate at an exempt hold value, move the anchor, then
            // finish the neighbour.
            let parked = (0..to.dim()).find(|&i| i != anchor).expect("dim ≥ 2");
            let hold = if (scheme.exempt)(plan.last().coord(parked).class()) {
                plan.last().coord(parked).clone()
            } else {
                (scheme.hold_near)(to.coord(parked))
            };
            for index in (0..to.dim()).filter(|&i| i != anchor && i != parked) {
                plan.push_move(index, to.coord(index).clone(), anchor);
            }
            plan.push_move(parked, hold, anchor);
            plan.push_move(anchor, to.coord(anchor).clone(), parked);
            plan.push_move(parked, to.coord(parked).clone(), anchor);
        }
    }
    Ok(plan)
}

/// Connects two points of the algebraic-punctured scene: every leg holds a
/// transcendental coordinate fixed, so no point of the plan has all
/// coordinates algebraic.
pub fn plan_path_transcendental_fixed(
    from: &Point,
    to: &Point,
) -> Result<PathPlan, GeometryError> {
    plan_axis_parallel(
        from,
        to,
        &ClassScheme {
            exempt: |class| class == NumberClass::Transcendental,
            missing: |which| GeometryError::NoTranscendentalCoordinate { which },
            hold_near: |target| {
                crate::numerics::shifted_transcendental(&target.render_approx(), &rat(1, 100))
                    .expect("fixed positive radius")
            },
        },
    )
}

/// The class-swapped construction for the transcendental-punctured scene:
/// every leg holds an algebraic coordinate fixed.
pub fn plan_path_algebraic_fixed(from: &Point, to: &Point) -> Result<PathPlan, GeometryError> {
    plan_axis_parallel(
        from,
        to,
        &ClassScheme {
            exempt: NumberClass::is_algebraic,
            missing: |which| GeometryError::NoAlgebraicCoordinate { which },
            // Any rational near the (transcendental) final value works; its
            // rendered convergent is rational by construction.
            hold_near: |target| TaggedReal::rational(target.render_approx()),
        },
    )
}

/// Grid-line route for the scene keeping only points with some natural
/// coordinate: drop to the grid line `x₂ = m`, ride it to the destination
/// column, climb to the destination. Identical endpoints produce the
/// degenerate there-and-back plan rather than an empty one.
pub fn plan_path_natural_grid(
    from: &Point,
    to: &Point,
    m: u64,
) -> Result<PathPlan, GeometryError> {
    if from.dim() != to.dim() {
        return Err(GeometryError::DimensionMismatch {
            from: from.dim(),
            to: to.dim(),
        });
    }
    if from.coord(0).class() != NumberClass::Natural {
        return Err(GeometryError::NotOnGrid { which: "first" });
    }
    if to.coord(0).class() != NumberClass::Natural {
        return Err(GeometryError::NotOnGrid { which: "second" });
    }
    let mut plan = PathPlan::identity(from.clone());
    for index in 1..from.dim() {
        plan.push_move(index, TaggedReal::natural(m), 0);
    }
    plan.push_move(0, to.coord(0).clone(), 1);
    for index in 1..from.dim() {
        plan.push_move(index, to.coord(index).clone(), 0);
    }
    Ok(plan)
}

/// Expected plane segment count for a generic query (both coordinates
/// change): two when an exempt coordinate of the start and an exempt
/// coordinate of the goal sit in different columns, so one can cover the
/// other's release; otherwise three, via the exempt hold detour. `None`
/// when either endpoint violates the planner precondition.
pub fn expected_plane_segments(from: &Point, to: &Point, spec: PunctureSpec) -> Option<usize> {
    let exempt = |p: &Point, i: usize| spec.exempts(p.coord(i).class());
    if (!exempt(from, 0) && !exempt(from, 1)) || (!exempt(to, 0) && !exempt(to, 1)) {
        return None;
    }
    let crossed = (exempt(from, 0) && exempt(to, 1)) || (exempt(from, 1) && exempt(to, 0));
    Some(if crossed { 2 } else { 3 })
}

/// The rational rectangle spanned by two plane points, for bounded
/// deviation and plotting.
pub fn plane_span(from: &Point, to: &Point) -> (Rational, Rational) {
    let a = from.render_approx();
    let b = to.render_approx();
    let dx = (&b[0] - &a[0]).abs();
    let dy = (&b[1] - &a[1]).abs();
    (dx, dy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::is_punctured;
    use crate::numerics::rat;

    fn transc(offset_n: i64, offset_d: i64) -> TaggedReal {
        TaggedReal::symbolic("pi", rat(1, 100), rat(offset_n, offset_d)).unwrap()
    }

    fn rational(n: i64, d: i64) -> TaggedReal {
        TaggedReal::rational(rat(n, d))
    }

    #[test]
    fn mixed_endpoints_connect_in_two_legs() {
        // Second coordinate transcendental at the start, first at the goal.
        let from = Point::plane(rational(0, 1), transc(0, 1));
        let to = Point::plane(transc(1, 1), rational(1, 1));
        let plan = plan_path_transcendental_fixed(&from, &to).unwrap();
        assert_eq!(plan.segment_count(), 2);
        assert_eq!(plan.first(), &from);
        assert_eq!(plan.last(), &to);
        assert_eq!(plan.waypoints[1], Point::plane(transc(1, 1), transc(0, 1)));
    }

    #[test]
    fn matching_transcendental_columns_need_three_legs() {
        // Only the second coordinates are transcendental on both ends.
        let from = Point::plane(rational(0, 1), transc(0, 1));
        let to = Point::plane(rational(1, 1), transc(1, 1));
        let plan = plan_path_transcendental_fixed(&from, &to).unwrap();
        assert_eq!(plan.segment_count(), 3);
        assert_eq!(plan.first(), &from);
        assert_eq!(plan.last(), &to);
        // The detour coordinate is transcendental while the anchor moves.
        let parked = plan.waypoints[1].coord(0);
        assert_eq!(parked.class(), NumberClass::Transcendental);
    }

    #[test]
    fn identical_endpoints_yield_the_empty_plan() {
        let p = Point::plane(transc(0, 1), rational(1, 2));
        let plan = plan_path_transcendental_fixed(&p, &p).unwrap();
        assert_eq!(plan.segment_count(), 0);
        assert_eq!(plan.waypoints, vec![p]);
    }

    #[test]
    fn missing_transcendental_coordinates_are_rejected() {
        let algebraic = Point::plane(rational(0, 1), rational(1, 1));
        let good = Point::plane(transc(0, 1), rational(1, 1));
        assert!(matches!(
            plan_path_transcendental_fixed(&algebraic, &good),
            Err(GeometryError::NoTranscendentalCoordinate { which: "first" })
        ));
        assert!(matches!(
            plan_path_transcendental_fixed(&good, &algebraic),
            Err(GeometryError::NoTranscendentalCoordinate { which: "second" })
        ));
    }

    #[test]
    fn algebraic_planner_swaps_the_roles() {
        // Worked two-leg case: fixed coordinates are the rationals 0 and 1.
        let from = Point::plane(rational(0, 1), transc(0, 1));
        let to = Point::plane(transc(1, 1), rational(1, 1));
        let plan = plan_path_algebraic_fixed(&from, &to).unwrap();
        assert_eq!(plan.segment_count(), 2);
        match (&plan.segments[0], &plan.segments[1]) {
            (
                crate::geometry::Segment::AxisParallel {
                    fixed_index: f0,
                    fixed_value: v0,
                    ..
                },
                crate::geometry::Segment::AxisParallel {
                    fixed_index: f1,
                    fixed_value: v1,
                    ..
                },
            ) => {
                assert_eq!((*f0, v0.exact_rational().unwrap()), (0, &rat(0, 1)));
                assert_eq!((*f1, v1.exact_rational().unwrap()), (1, &rat(1, 1)));
            }
            other => panic!("expected two axis-parallel segments, got {other:?}"),
        }
    }

    #[test]
    fn algebraic_planner_detours_through_a_rational_hold() {
        let from = Point::plane(transc(0, 1), rational(0, 1));
        let to = Point::plane(transc(1, 1), rational(1, 1));
        let plan = plan_path_algebraic_fixed(&from, &to).unwrap();
        assert_eq!(plan.segment_count(), 3);
        // The hold value is rational and sits near the transcendental goal.
        let hold = plan.waypoints[1].coord(0);
        assert_eq!(hold.class(), NumberClass::Rational);
    }

    #[test]
    fn grid_route_reproduces_the_three_leg_example() {
        let xi = rational(7, 2);
        let xi_prime = transc(1, 3);
        let from = Point::plane(TaggedReal::natural(2), xi.clone());
        let to = Point::plane(TaggedReal::natural(5), xi_prime.clone());
        let plan = plan_path_natural_grid(&from, &to, 0).unwrap();
        assert_eq!(plan.segment_count(), 3);
        assert_eq!(
            plan.waypoints,
            vec![
                from.clone(),
                Point::plane(TaggedReal::natural(2), TaggedReal::natural(0)),
                Point::plane(TaggedReal::natural(5), TaggedReal::natural(0)),
                to.clone(),
            ]
        );
        for w in &plan.waypoints {
            assert!(!is_punctured(w, PunctureSpec::PurelyNonNatural));
        }
    }

    #[test]
    fn grid_route_with_equal_endpoints_returns_to_start() {
        let p = Point::plane(TaggedReal::natural(2), rational(7, 2));
        let plan = plan_path_natural_grid(&p, &p, 0).unwrap();
        assert_eq!(plan.first(), &p);
        assert_eq!(plan.last(), &p);
        assert_eq!(plan.segment_count(), 2);
        assert_eq!(
            plan.waypoints[1],
            Point::plane(TaggedReal::natural(2), TaggedReal::natural(0))
        );
    }

    #[test]
    fn grid_route_requires_natural_first_coordinates() {
        let off = Point::plane(rational(5, 2), rational(0, 1));
        let on = Point::plane(TaggedReal::natural(1), rational(0, 1));
        assert!(matches!(
            plan_path_natural_grid(&off, &on, 0),
            Err(GeometryError::NotOnGrid { which: "first" })
        ));
    }

    #[test]
    fn planners_generalize_beyond_the_plane() {
        let from = Point::new(vec![rational(0, 1), transc(0, 1), rational(2, 3)]).unwrap();
        let to = Point::new(vec![transc(5, 1), rational(1, 1), rational(1, 3)]).unwrap();
        let plan = plan_path_transcendental_fixed(&from, &to).unwrap();
        assert_eq!(plan.first(), &from);
        assert_eq!(plan.last(), &to);
        // Two phase-one moves plus the anchor release.
        assert_eq!(plan.segment_count(), 3);
    }
}
