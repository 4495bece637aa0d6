//! Path plans: waypoints joined by axis-parallel segments or circle arcs.

use crate::numerics::{Rational, TaggedReal};

use super::circle::CircleArc;
use super::point::Point;

/// One leg of a plan.
#[derive(Debug, Clone)]
pub enum Segment {
    /// Straight move along one coordinate axis. `fixed_index` names the
    /// coordinate whose (held) value exempts every point of the leg from
    /// the puncture; its value at plan time is recorded alongside.
    AxisParallel {
        moving_index: usize,
        fixed_index: usize,
        fixed_value: TaggedReal,
    },
    /// Circle arc between two rational points, avoiding a finite set of
    /// rational points recorded for later re-validation.
    Arc {
        arc: CircleArc,
        excluded: Vec<(Rational, Rational)>,
    },
}

#[derive(Debug, Clone)]
pub struct PathPlan {
    pub waypoints: Vec<Point>,
    pub segments: Vec<Segment>,
}

impl PathPlan {
    /// The empty plan sitting at a single point.
    pub fn identity(point: Point) -> Self {
        Self {
            waypoints: vec![point],
            segments: Vec::new(),
        }
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn first(&self) -> &Point {
        self.waypoints.first().expect("plans have at least one waypoint")
    }

    pub fn last(&self) -> &Point {
        self.waypoints.last().expect("plans have at least one waypoint")
    }

    /// Appends an axis-parallel move, skipping no-ops.
    pub(super) fn push_move(
        &mut self,
        moving_index: usize,
        target: TaggedReal,
        fixed_index: usize,
    ) {
        let current = self.last();
        if current.coord(moving_index) == &target {
            return;
        }
        let fixed_value = current.coord(fixed_index).clone();
        let next = current.with_coord(moving_index, target);
        self.segments.push(Segment::AxisParallel {
            moving_index,
            fixed_index,
            fixed_value,
        });
        self.waypoints.push(next);
    }

    /// Joins plans whose endpoints chain together.
    pub(super) fn concat(pieces: Vec<PathPlan>) -> PathPlan {
        let mut pieces = pieces.into_iter();
        let mut joined = pieces.next().expect("concat needs at least one piece");
        for piece in pieces {
            debug_assert_eq!(joined.last(), piece.first(), "pieces must chain");
            joined.waypoints.extend(piece.waypoints.into_iter().skip(1));
            joined.segments.extend(piece.segments);
        }
        joined
    }
}
