//! Deterministic SVG rendering of plans.
//!
//! The viewport is fixed at 1000×1000 user units. Scene coordinates map
//! affinely: `vx = (x − min_x)·1000/(max_x − min_x)` and
//! `vy = 1000 − (y − min_y)·1000/(max_y − min_y)` (the y axis points up in
//! the scene, down in SVG). All numbers are rendered from exact rationals
//! truncated to three decimals, so equal inputs give byte-equal output.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::numerics::{pow10, Rational};

use super::plan::{PathPlan, Segment};
use super::scene::SceneBounds;

const VIEW: i64 = 1000;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Truncates a rational to three decimals.
fn fmt3(q: &Rational) -> String {
    let scaled = (q * Rational::from_integer(1000.into())).trunc().to_integer();
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let (whole, frac) = magnitude.div_mod_floor(&BigInt::from(1000));
    format!(
        "{}{}.{:03}",
        if negative { "-" } else { "" },
        whole,
        frac.to_u32().expect("three decimal digits")
    )
}

/// Truncated decimal square root: `⌊√(q·10⁶)⌋ / 1000` rendered to three
/// decimals. Exact enough for plotting; never used in validation.
fn fmt3_sqrt(q: &Rational) -> String {
    assert!(!q.is_negative(), "radius squared is non-negative");
    let scaled = (q * Rational::from_integer(pow10(6))).trunc().to_integer();
    let root = scaled.sqrt();
    let (whole, frac) = root.div_mod_floor(&BigInt::from(1000));
    format!("{}.{:03}", whole, frac.to_u32().expect("three decimal digits"))
}

pub struct Viewport {
    bounds: SceneBounds,
}

impl Viewport {
    pub fn new(bounds: SceneBounds) -> Self {
        Self { bounds }
    }

    /// Bounds covering all given plane points, padded by a tenth of each
    /// span (or one unit for degenerate spans).
    pub fn fitting(points: &[[Rational; 2]]) -> Self {
        let one = Rational::from_integer(1.into());
        let xs: Vec<&Rational> = points.iter().map(|p| &p[0]).collect();
        let ys: Vec<&Rational> = points.iter().map(|p| &p[1]).collect();
        let (min_x, max_x) = min_max(&xs);
        let (min_y, max_y) = min_max(&ys);
        let pad = |lo: &Rational, hi: &Rational| {
            let span = hi - lo;
            if span.is_zero() {
                one.clone()
            } else {
                span / Rational::from_integer(10.into())
            }
        };
        let px = pad(&min_x, &max_x);
        let py = pad(&min_y, &max_y);
        Self {
            bounds: SceneBounds {
                min: (&min_x - &px, &min_y - &py),
                max: (&max_x + &px, &max_y + &py),
            },
        }
    }

    fn to_view(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        let view = Rational::from_integer(VIEW.into());
        let sx = &view / (&self.bounds.max.0 - &self.bounds.min.0);
        let sy = &view / (&self.bounds.max.1 - &self.bounds.min.1);
        let vx = (x - &self.bounds.min.0) * sx;
        let vy = &view - (y - &self.bounds.min.1) * sy;
        (vx, vy)
    }

    fn scales(&self) -> (Rational, Rational) {
        let view = Rational::from_integer(VIEW.into());
        (
            &view / (&self.bounds.max.0 - &self.bounds.min.0),
            &view / (&self.bounds.max.1 - &self.bounds.min.1),
        )
    }
}

fn min_max<'a>(values: &[&'a Rational]) -> (Rational, Rational) {
    let zero = Rational::zero();
    let mut min = values.first().copied().unwrap_or(&zero).clone();
    let mut max = min.clone();
    for v in values {
        if **v < min {
            min = (*v).clone();
        }
        if **v > max {
            max = (*v).clone();
        }
    }
    (min, max)
}

fn push_polyline(out: &mut String, points: &[(Rational, Rational)], color: &str) {
    if points.len() < 2 {
        return;
    }
    let rendered: Vec<String> = points
        .iter()
        .map(|(x, y)| format!("{},{}", fmt3(x), fmt3(y)))
        .collect();
    writeln!(
        out,
        r#"  <polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
        rendered.join(" ")
    )
    .unwrap();
}

/// Renders plans into a standalone SVG document. Plans are drawn in input
/// order with a fixed palette; the first and last waypoints of each plan
/// are labeled N and N'.
pub fn emit_svg(plans: &[(&str, &PathPlan)], viewport: &Viewport, legend: &str) -> String {
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW} {VIEW}" width="{VIEW}" height="{VIEW}">"#
    )
    .unwrap();
    writeln!(out, r#"  <rect width="{VIEW}" height="{VIEW}" fill="white"/>"#).unwrap();
    if !legend.is_empty() {
        writeln!(
            out,
            r#"  <text x="12" y="24" font-family="monospace" font-size="16">{legend}</text>"#
        )
        .unwrap();
    }
    let (scale_x, scale_y) = viewport.scales();
    for (plan_index, (label, plan)) in plans.iter().enumerate() {
        let color = PALETTE[plan_index % PALETTE.len()];
        let approx: Vec<(Rational, Rational)> = plan
            .waypoints
            .iter()
            .map(|w| {
                let coords = w.render_approx();
                viewport.to_view(&coords[0], &coords[1])
            })
            .collect();

        // Runs of axis-parallel segments become polylines; arcs are drawn
        // as elliptical arc paths (independent axis scales).
        let mut run: Vec<(Rational, Rational)> = Vec::new();
        for (i, segment) in plan.segments.iter().enumerate() {
            match segment {
                Segment::AxisParallel { .. } => {
                    if run.is_empty() {
                        run.push(approx[i].clone());
                    }
                    run.push(approx[i + 1].clone());
                }
                Segment::Arc { arc, .. } => {
                    push_polyline(&mut out, &run, color);
                    run.clear();
                    let (a, b) = arc.endpoint_coords();
                    let start = viewport.to_view(&a.0, &a.1);
                    let end = viewport.to_view(&b.0, &b.1);
                    let center = viewport.to_view(&arc.center.0, &arc.center.1);
                    let rx_sq = &arc.radius_squared * &scale_x * &scale_x;
                    let ry_sq = &arc.radius_squared * &scale_y * &scale_y;
                    // Sweep flag: the minor arc bends away from the center;
                    // in view coordinates sweep=1 exactly when the center
                    // sits on the (−dy, dx) side of the chord midpoint.
                    let mid = (
                        (&start.0 + &end.0) / Rational::from_integer(2.into()),
                        (&start.1 + &end.1) / Rational::from_integer(2.into()),
                    );
                    let chord = (&end.0 - &start.0, &end.1 - &start.1);
                    let dot = (&center.0 - &mid.0) * -&chord.1 + (&center.1 - &mid.1) * &chord.0;
                    let sweep = if dot.is_negative() { 0 } else { 1 };
                    writeln!(
                        out,
                        r#"  <path d="M {} {} A {} {} 0 0 {sweep} {} {}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                        fmt3(&start.0),
                        fmt3(&start.1),
                        fmt3_sqrt(&rx_sq),
                        fmt3_sqrt(&ry_sq),
                        fmt3(&end.0),
                        fmt3(&end.1),
                    )
                    .unwrap();
                }
            }
        }
        push_polyline(&mut out, &run, color);

        if let (Some(first), Some(last)) = (approx.first(), approx.last()) {
            for (pos, text) in [(first, "N"), (last, "N'")] {
                writeln!(
                    out,
                    r#"  <circle cx="{}" cy="{}" r="4" fill="{color}"/>"#,
                    fmt3(&pos.0),
                    fmt3(&pos.1)
                )
                .unwrap();
                writeln!(
                    out,
                    r#"  <text x="{}" y="{}" font-family="monospace" font-size="14" fill="{color}">{text} {label}</text>"#,
                    fmt3(&(&pos.0 + Rational::from_integer(6.into()))),
                    fmt3(&(&pos.1 - Rational::from_integer(6.into())))
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "</svg>").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::circle::circle_avoiding;
    use crate::geometry::planner::plan_path_transcendental_fixed;
    use crate::geometry::point::Point;
    use crate::numerics::{rat, TaggedReal};

    fn viewport() -> Viewport {
        Viewport::new(SceneBounds {
            min: (rat(-1, 1), rat(-1, 1)),
            max: (rat(3, 1), rat(3, 1)),
        })
    }

    #[test]
    fn empty_plan_list_is_a_valid_scaffold() {
        let svg = emit_svg(&[], &viewport(), "empty");
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("polyline"));
    }

    #[test]
    fn two_leg_plan_renders_one_polyline_with_three_points() {
        let from = Point::plane(
            TaggedReal::rational(rat(0, 1)),
            TaggedReal::symbolic("pi", rat(1, 10), rat(0, 1)).unwrap(),
        );
        let to = Point::plane(
            TaggedReal::symbolic("pi", rat(1, 10), rat(1, 1)).unwrap(),
            TaggedReal::rational(rat(2, 1)),
        );
        let plan = plan_path_transcendental_fixed(&from, &to).unwrap();
        let svg = emit_svg(&[("q0", &plan)], &viewport(), "legend text");
        assert_eq!(svg.matches("<polyline").count(), 1);
        let points_attr = svg.split("points=\"").nth(1).unwrap();
        let points = points_attr.split('"').next().unwrap();
        assert_eq!(points.split(' ').count(), 3);
        assert!(svg.contains("legend text"));
        assert!(svg.contains(">N q0<"));
        assert!(svg.contains(">N' q0<"));
    }

    #[test]
    fn arcs_render_as_path_commands() {
        let from = Point::plane(
            TaggedReal::rational(rat(0, 1)),
            TaggedReal::rational(rat(0, 1)),
        );
        let to = Point::plane(
            TaggedReal::rational(rat(2, 1)),
            TaggedReal::rational(rat(0, 1)),
        );
        let arc = circle_avoiding(&from, &to, &[(rat(1, 1), rat(1, 1))]).unwrap();
        let plan = PathPlan {
            waypoints: vec![from, to],
            segments: vec![Segment::Arc {
                arc,
                excluded: vec![(rat(1, 1), rat(1, 1))],
            }],
        };
        let svg = emit_svg(&[("arc", &plan)], &viewport(), "");
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.contains(" A "));
    }

    #[test]
    fn output_is_reproducible() {
        let from = Point::plane(
            TaggedReal::rational(rat(0, 1)),
            TaggedReal::symbolic("pi", rat(1, 10), rat(0, 1)).unwrap(),
        );
        let to = Point::plane(
            TaggedReal::symbolic("e", rat(1, 10), rat(1, 1)).unwrap(),
            TaggedReal::rational(rat(2, 1)),
        );
        let plan = plan_path_transcendental_fixed(&from, &to).unwrap();
        let a = emit_svg(&[("q", &plan)], &viewport(), "legend");
        let b = emit_svg(&[("q", &plan)], &viewport(), "legend");
        assert_eq!(a, b);
    }

    #[test]
    fn truncation_is_stable_for_negatives() {
        assert_eq!(fmt3(&rat(-12345, 10000)), "-1.234");
        assert_eq!(fmt3(&rat(12345, 10000)), "1.234");
        assert_eq!(fmt3(&rat(0, 1)), "0.000");
        assert_eq!(fmt3(&rat(5, 2)), "2.500");
    }

    #[test]
    fn sqrt_rendering_truncates() {
        assert_eq!(fmt3_sqrt(&rat(2, 1)), "1.414");
        assert_eq!(fmt3_sqrt(&rat(4, 1)), "2.000");
        assert_eq!(fmt3_sqrt(&rat(0, 1)), "0.000");
    }
}
