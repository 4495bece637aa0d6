//! Exact scalar types shared by every construction in the crate.
//!
//! All values are immutable after construction and all operations are
//! pure, so everything here may be shared between threads freely.

mod digits;
mod interval;
mod rational;
mod symbols;
mod tagged;

pub use digits::{
    digits_value, locate_first_difference, prefix_value, rational_to_stream, DigitStream,
    FirstDifference,
};
pub use interval::Interval;
pub use rational::{is_dyadic, parse_rational, pow10, rat, rational_string, Rational};
pub use symbols::{default_generator, lookup_symbol, symbols, Symbol, SymbolKind};
pub use tagged::{shifted_transcendental, NumberClass, TaggedReal};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("value {value} lies outside [0, 1)")]
    OutOfRange { value: String },
    #[error("open interval needs lo < hi, got ({lo}, {hi})")]
    InvalidInterval { lo: String, hi: String },
    #[error("cannot parse `{input}` as a rational")]
    ParseRational { input: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("a symbolic value needs a nonzero scale")]
    ZeroScale,
    #[error("class `{class}` is inconsistent with the coordinate data: {reason}")]
    ClassMismatch { class: String, reason: String },
    #[error("radius must be positive")]
    NonPositiveRadius,
}
