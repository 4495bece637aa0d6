//! Re-validation of finished plans against a puncture spec.
//!
//! An axis-parallel segment is cleared by exhibiting a held coordinate of
//! exempt class: every point of the segment keeps that coordinate, so none
//! can have all coordinates in the removed class set. A segment with no
//! exempt held coordinate meets the removed set (the moving coordinate
//! sweeps a continuum and realizes a forbidden class somewhere), and where
//! a concrete rational witness exists it is reported. Arcs are checked for
//! exact endpoint incidence and the recorded exclusions; class claims
//! about their interior points are out of scope and stated as such.

use serde::Serialize;

use num_traits::Signed;

use crate::numerics::{rat, rational_string, NumberClass, Rational};

use super::circle::squared_distance;
use super::plan::{PathPlan, Segment};
use super::point::{is_punctured, Point, PunctureSpec};

#[derive(Debug, Clone, Serialize)]
pub struct SegmentVerdict {
    pub index: usize,
    pub ok: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exempt_index: Option<usize>,
    /// Rational coordinates of a punctured point on the segment, when one
    /// can be exhibited exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub puncture: &'static str,
    pub segments: Vec<SegmentVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub malformed: Option<String>,
}

fn fail(index: usize, detail: String, witness: Option<Vec<String>>) -> SegmentVerdict {
    SegmentVerdict {
        index,
        ok: false,
        detail,
        exempt_index: None,
        witness,
    }
}

/// A rational value strictly between `a` and `b` that is not a
/// non-negative integer, when one exists among a few simple picks.
fn non_natural_between(a: &Rational, b: &Rational) -> Option<Rational> {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let gap = hi - lo;
    for k in 2..=64i64 {
        let candidate = lo + &gap / rat(k, 1);
        let is_natural = candidate.is_integer() && !candidate.is_negative();
        if !is_natural {
            return Some(candidate);
        }
    }
    None
}

fn axis_segment_verdict(
    index: usize,
    from: &Point,
    to: &Point,
    declared_fixed: usize,
    spec: PunctureSpec,
) -> SegmentVerdict {
    let differing: Vec<usize> = (0..from.dim())
        .filter(|&i| from.coord(i) != to.coord(i))
        .collect();
    let moving = match differing.as_slice() {
        [single] => *single,
        _ => {
            return fail(
                index,
                format!(
                    "axis-parallel segment must change exactly one coordinate, changes {differing:?}"
                ),
                None,
            )
        }
    };

    // Any held exempt coordinate clears the segment; prefer the declared one.
    let held_exempt = std::iter::once(declared_fixed)
        .chain(0..from.dim())
        .filter(|&i| i != moving)
        .find(|&i| spec.exempts(from.coord(i).class()));

    match held_exempt {
        Some(i) => SegmentVerdict {
            index,
            ok: true,
            detail: format!(
                "coordinate {i} held at a {} value; every point of the segment keeps it, so none is removed",
                from.coord(i).class()
            ),
            exempt_index: Some(i),
            witness: None,
        },
        None => {
            let witness = puncture_witness(from, to, moving, spec);
            let witness_strings = witness
                .as_ref()
                .map(|coords| coords.iter().map(rational_string).collect());
            fail(
                index,
                format!(
                    "every held coordinate is of a removed class; the moving coordinate {moving} realizes a removed-class value inside the segment"
                ),
                witness_strings,
            )
        }
    }
}

/// Exact rational coordinates of a punctured interior point, when the held
/// coordinates are all exactly rational.
fn puncture_witness(
    from: &Point,
    to: &Point,
    moving: usize,
    spec: PunctureSpec,
) -> Option<Vec<Rational>> {
    // Rational interior values only witness class punctures that forbid
    // rationals; the transcendental puncture admits no rational witness.
    if !spec.forbids(NumberClass::Rational) {
        return None;
    }
    let held: Option<Vec<Rational>> = (0..from.dim())
        .map(|i| {
            if i == moving {
                Some(Rational::from_integer(0.into()))
            } else {
                from.coord(i).exact_rational().cloned()
            }
        })
        .collect();
    let mut coords = held?;
    let a = from.coord(moving).render_approx();
    let b = to.coord(moving).render_approx();
    let interior = match spec {
        PunctureSpec::PurelyNonNatural => non_natural_between(&a, &b)?,
        _ => (&a + &b) / rat(2, 1),
    };
    coords[moving] = interior;
    Some(coords)
}

fn arc_segment_verdict(
    index: usize,
    arc: &super::circle::CircleArc,
    excluded: &[(Rational, Rational)],
) -> SegmentVerdict {
    let (a, b) = arc.endpoint_coords();
    if squared_distance(&arc.center, &a) != arc.radius_squared
        || squared_distance(&arc.center, &b) != arc.radius_squared
    {
        return fail(index, "arc endpoints are not on the circle".to_string(), None);
    }
    for e in excluded {
        if squared_distance(&arc.center, e) == arc.radius_squared {
            return fail(
                index,
                "an excluded point lies exactly on the circle".to_string(),
                Some(vec![rational_string(&e.0), rational_string(&e.1)]),
            );
        }
    }
    SegmentVerdict {
        index,
        ok: true,
        detail: format!(
            "endpoints exactly on the circle; {} exclusions verified off-circle (interior class tags are not decided)",
            excluded.len()
        ),
        exempt_index: None,
        witness: None,
    }
}

/// Checks every segment of a plan against the puncture spec, plus the
/// waypoints themselves.
pub fn validate_path(plan: &PathPlan, spec: PunctureSpec) -> ValidationReport {
    if plan.waypoints.is_empty() || plan.waypoints.len() != plan.segments.len() + 1 {
        return ValidationReport {
            ok: false,
            puncture: spec.label(),
            segments: Vec::new(),
            malformed: Some(format!(
                "{} waypoints cannot carry {} segments",
                plan.waypoints.len(),
                plan.segments.len()
            )),
        };
    }
    let mut segments = Vec::with_capacity(plan.segments.len());
    let mut ok = true;
    for (index, waypoint) in plan.waypoints.iter().enumerate() {
        if is_punctured(waypoint, spec) {
            ok = false;
            segments.push(fail(
                index,
                format!("waypoint {index} itself belongs to the removed set"),
                Some(waypoint.render_approx().iter().map(rational_string).collect()),
            ));
        }
    }
    for (index, segment) in plan.segments.iter().enumerate() {
        let verdict = match segment {
            Segment::AxisParallel {
                moving_index: _,
                fixed_index,
                fixed_value: _,
            } => axis_segment_verdict(
                index,
                &plan.waypoints[index],
                &plan.waypoints[index + 1],
                *fixed_index,
                spec,
            ),
            Segment::Arc { arc, excluded } => arc_segment_verdict(index, arc, excluded),
        };
        ok &= verdict.ok;
        segments.push(verdict);
    }
    ValidationReport {
        ok,
        puncture: spec.label(),
        segments,
        malformed: None,
    }
}
