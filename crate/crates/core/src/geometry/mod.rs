//! Path constructions in coordinate planes with a class of points removed.
//!
//! Removing all purely algebraic points, all purely transcendental points,
//! or everything off the natural grid leaves a scene that is still
//! path-connected, and the planners here exhibit the connections: each leg
//! of an axis-parallel plan holds a coordinate whose class keeps the whole
//! leg clear of the removed set. Circle arcs dodge finite excluded sets
//! exactly; staircase plans stay within any requested deviation of the
//! straight line; everything re-validates from first principles and
//! renders to deterministic SVG.

mod circle;
mod deviation;
mod plan;
mod planner;
mod point;
mod scene;
mod svg;
mod validate;

pub use circle::{circle_avoiding, squared_distance, CircleArc};
pub use deviation::{max_squared_deviation, plan_path_bounded_deviation, squared_line_deviation};
pub use plan::{PathPlan, Segment};
pub use planner::{
    expected_plane_segments, plan_path_algebraic_fixed, plan_path_natural_grid,
    plan_path_transcendental_fixed, plane_span,
};
pub use point::{is_punctured, Point, PunctureSpec};
pub use scene::{load_scene, parse_scene, Query, Scene, SceneBounds};
pub use svg::{emit_svg, Viewport};
pub use validate::{validate_path, SegmentVerdict, ValidationReport};

use thiserror::Error;

use crate::numerics::NumericsError;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("points have different dimensions: {from} vs {to}")]
    DimensionMismatch { from: usize, to: usize },
    #[error("points need at least two coordinates, got {0}")]
    TooFewCoordinates(usize),
    #[error("the {which} point has no transcendental coordinate")]
    NoTranscendentalCoordinate { which: &'static str },
    #[error("the {which} point has no algebraic coordinate")]
    NoAlgebraicCoordinate { which: &'static str },
    #[error("the {which} point's first coordinate is not a natural number")]
    NotOnGrid { which: &'static str },
    #[error("circle construction needs two distinct points")]
    DegenerateInput,
    #[error("the {which} point must have exact rational coordinates")]
    NonRationalPoint { which: &'static str },
    #[error("excluded point {index} coincides with an endpoint")]
    ExcludedIsEndpoint { index: usize },
    #[error("deviation bound must be positive")]
    NonPositiveEpsilon,
    #[error("staircase plans are only built in the plane, got dimension {0}")]
    UnsupportedDimension(usize),
    #[error("the natural grid admits no bounded-deviation staircase: grid spacing bounds the deviation from below")]
    UnsupportedPuncture,
    #[error("scene: {0}")]
    Scene(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("cannot read scene: {0}")]
    Io(#[from] std::io::Error),
    #[error("scene JSON: {0}")]
    Json(#[from] serde_json::Error),
}
