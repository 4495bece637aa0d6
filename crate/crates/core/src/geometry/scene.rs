//! Scene files: tagged points, a puncture, and path/circle queries.

use std::path::Path;

use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::numerics::{lookup_symbol, parse_rational, NumberClass, Rational, TaggedReal};

use super::point::{Point, PunctureSpec};
use super::GeometryError;

#[derive(Debug, Deserialize)]
struct RawScene {
    dim: usize,
    puncture: String,
    points: Vec<RawPoint>,
    #[serde(default)]
    queries: Vec<RawQuery>,
    #[serde(default)]
    bounds: Option<RawBounds>,
    #[serde(default)]
    grid_m: Option<u64>,
}

#[derive(Debug, Deserialize)]
struct RawPoint {
    coords: Vec<RawCoord>,
}

#[derive(Debug, Deserialize)]
struct RawCoord {
    class: String,
    #[serde(default)]
    symbol: Option<String>,
    #[serde(default)]
    scale: Option<String>,
    #[serde(default)]
    offset: Option<String>,
}

#[derive(Debug, Deserialize)]
struct RawQuery {
    from: usize,
    to: usize,
    #[serde(default)]
    eps: Option<String>,
    #[serde(default)]
    avoid: Vec<usize>,
    #[serde(default)]
    m: Option<u64>,
}

#[derive(Debug, Deserialize)]
struct RawBounds {
    min: [String; 2],
    max: [String; 2],
}

#[derive(Debug, Clone)]
pub struct Query {
    pub from: usize,
    pub to: usize,
    /// Deviation bound; present turns the query into a staircase plan.
    pub eps: Option<Rational>,
    /// Indices of scene points the circle query must avoid.
    pub avoid: Vec<usize>,
    /// Grid intermediate for the natural-grid planner.
    pub m: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct SceneBounds {
    pub min: (Rational, Rational),
    pub max: (Rational, Rational),
}

#[derive(Debug)]
pub struct Scene {
    pub dim: usize,
    pub puncture: PunctureSpec,
    pub points: Vec<Point>,
    pub queries: Vec<Query>,
    pub bounds: Option<SceneBounds>,
    pub grid_m: u64,
}

fn scene_err(reason: impl Into<String>) -> GeometryError {
    GeometryError::Scene(reason.into())
}

fn parse_field(value: &Option<String>, what: &str, default: Option<Rational>) -> Result<Rational, GeometryError> {
    match value {
        Some(text) => parse_rational(text).map_err(|e| scene_err(format!("{what}: {e}"))),
        None => default.ok_or_else(|| scene_err(format!("{what} is required"))),
    }
}

fn convert_coord(raw: &RawCoord, at: &str) -> Result<TaggedReal, GeometryError> {
    let class = NumberClass::parse(&raw.class)
        .ok_or_else(|| scene_err(format!("{at}: unknown class `{}`", raw.class)))?;
    match class {
        NumberClass::Natural => {
            if raw.symbol.is_some() {
                return Err(scene_err(format!("{at}: natural coordinates carry no symbol")));
            }
            let offset = parse_field(&raw.offset, at, None)?;
            if !offset.is_integer() || offset.is_negative() {
                return Err(scene_err(format!("{at}: natural offset must be a non-negative integer")));
            }
            let value: u64 = offset
                .to_integer()
                .try_into()
                .map_err(|_| scene_err(format!("{at}: natural value too large")))?;
            Ok(TaggedReal::natural(value))
        }
        NumberClass::Rational => {
            if raw.symbol.is_some() {
                return Err(scene_err(format!("{at}: rational coordinates carry no symbol")));
            }
            Ok(TaggedReal::rational(parse_field(&raw.offset, at, None)?))
        }
        NumberClass::AlgebraicIrrational | NumberClass::Transcendental => {
            let symbol_id = raw
                .symbol
                .as_deref()
                .ok_or_else(|| scene_err(format!("{at}: class `{}` needs a symbol", raw.class)))?;
            let symbol = lookup_symbol(symbol_id)
                .ok_or_else(|| scene_err(format!("{at}: unknown symbol `{symbol_id}`")))?;
            let scale = parse_field(&raw.scale, at, Some(Rational::from_integer(1.into())))?;
            let offset = parse_field(&raw.offset, at, Some(Rational::zero()))?;
            let value = TaggedReal::symbolic(symbol.id, scale, offset)
                .map_err(|e| scene_err(format!("{at}: {e}")))?;
            if value.class() != class {
                return Err(scene_err(format!(
                    "{at}: symbol `{symbol_id}` has class {}, coordinate declared {}",
                    value.class(),
                    class
                )));
            }
            Ok(value)
        }
    }
}

pub fn parse_scene(text: &str) -> Result<Scene, GeometryError> {
    let raw: RawScene = serde_json::from_str(text)?;
    if raw.dim < 2 {
        return Err(scene_err("dim must be at least 2"));
    }
    let puncture = PunctureSpec::parse(&raw.puncture)
        .ok_or_else(|| scene_err(format!("unknown puncture `{}`", raw.puncture)))?;
    let mut points = Vec::with_capacity(raw.points.len());
    for (i, raw_point) in raw.points.iter().enumerate() {
        if raw_point.coords.len() != raw.dim {
            return Err(scene_err(format!(
                "point {i} has {} coordinates, scene dim is {}",
                raw_point.coords.len(),
                raw.dim
            )));
        }
        let coords = raw_point
            .coords
            .iter()
            .enumerate()
            .map(|(j, c)| convert_coord(c, &format!("point {i} coordinate {j}")))
            .collect::<Result<Vec<_>, _>>()?;
        points.push(Point::new(coords)?);
    }
    let mut queries = Vec::with_capacity(raw.queries.len());
    for (i, raw_query) in raw.queries.iter().enumerate() {
        let check = |index: usize| {
            if index >= points.len() {
                Err(scene_err(format!("query {i}: point index {index} out of range")))
            } else {
                Ok(index)
            }
        };
        let eps = match &raw_query.eps {
            Some(text) => {
                let eps = parse_rational(text)
                    .map_err(|e| scene_err(format!("query {i}: {e}")))?;
                if !eps.is_positive() {
                    return Err(scene_err(format!("query {i}: eps must be positive")));
                }
                Some(eps)
            }
            None => None,
        };
        queries.push(Query {
            from: check(raw_query.from)?,
            to: check(raw_query.to)?,
            eps,
            avoid: raw_query
                .avoid
                .iter()
                .map(|&a| check(a))
                .collect::<Result<Vec<_>, _>>()?,
            m: raw_query.m,
        });
    }
    let bounds = match raw.bounds {
        None => None,
        Some(raw_bounds) => {
            let parse = |s: &String| parse_rational(s).map_err(|e| scene_err(e.to_string()));
            let min = (parse(&raw_bounds.min[0])?, parse(&raw_bounds.min[1])?);
            let max = (parse(&raw_bounds.max[0])?, parse(&raw_bounds.max[1])?);
            if min.0 >= max.0 || min.1 >= max.1 {
                return Err(scene_err("bounds must have min < max on both axes"));
            }
            Some(SceneBounds { min, max })
        }
    };
    Ok(Scene {
        dim: raw.dim,
        puncture,
        points,
        queries,
        bounds,
        grid_m: raw.grid_m.unwrap_or(0),
    })
}

pub fn load_scene(path: &Path) -> Result<Scene, GeometryError> {
    parse_scene(&std::fs::read_to_string(path)?)
}
