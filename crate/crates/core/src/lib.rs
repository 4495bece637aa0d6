//! Exact-arithmetic constructions over the rationals.
//!
//! The crate executes and audits a family of classic set-theoretic
//! constructions without ever touching floating point:
//!
//! - [`numerics`] — reduced rationals, lazy canonical decimal digit
//!   streams, open intervals, and class-tagged reals with a symbol
//!   registry for named irrational generators.
//! - [`enumerate`] — concrete injective sequence sources: the alternating
//!   harmonic sequence, a pairing-walk enumeration of the rationals in an
//!   interval, and user-supplied term lists.
//! - [`first_proof`] — the nested-interval refinement run over any
//!   sequence source, with an exclusion audit of every consumed term.
//! - [`diagonal`] — digit diagonalization over row lists (including the
//!   all-ones special list with limit 1/9), integer function families on
//!   dyadic grids, and the self-referential consistency check.
//! - [`powerset`] — exhaustive finite audits of `M = {i : i ∉ s(i)}`
//!   against every mapping on small ground sets, plus membership
//!   oscillation traces.
//! - [`geometry`] — axis-parallel path planning in coordinate planes with
//!   a class of points removed, circle arcs avoiding finite exclusion
//!   sets, bounded-deviation staircases, and deterministic SVG output.

pub mod diagonal;
pub mod enumerate;
pub mod first_proof;
pub mod geometry;
pub mod numerics;
pub mod powerset;

pub use numerics::{DigitStream, Interval, NumberClass, Rational, TaggedReal};
