//! Digit diagonalization over row lists, and its function-family analogue.
//!
//! The digit side builds, from any list of digit streams and any
//! conformant replacement rule, the stream whose n-th digit transforms the
//! n-th digit of row n. Replacement digits are confined to 1..=8, which
//! keeps the result canonical and strictly inside `(0, 1)`. The function
//! side plays the same game with integer tables on dyadic grids, plus a
//! consistency check for the self-referencing variant that pins the
//! diagonal function back into the family.

mod consistency;
mod family;
mod list;
mod rule;
mod table2;

pub use consistency::{
    diagonal_only_check, eq7_consistency_check, pinned_points, Eq7Verdict, Eq7Witness,
};
pub use family::{build_g, verify_g_escapes, EscapeVerdict, FunctionFamily};
pub use list::ListView;
pub use rule::ReplacementRule;
pub use table2::{table2_limit_check, table2_prefix_identity, table2_row, LimitCheck, PrefixIdentity};

use thiserror::Error;

use crate::numerics::DigitStream;

#[derive(Debug, Error)]
pub enum DiagonalError {
    #[error("replacement rule maps {digit} to {to}; replacements must differ and lie in 1..=8")]
    InvalidRule { digit: u8, to: u8 },
    #[error("cannot parse `{input}` as a replacement rule (need 10 digits)")]
    ParseRule { input: String },
    #[error("row {n} requested from a list of {len} rows")]
    RowOutOfRange { n: u64, len: u64 },
    #[error("rows {row_a} and {row_b} agree on every digit up to {budget}; lists must be injective")]
    NotInjective { row_a: u64, row_b: u64, budget: u64 },
    #[error("diagonal and row {n} agree on the whole {prefix_len}-digit prefix")]
    NoDifferenceWithinPrefix { n: u64, prefix_len: u64 },
    #[error("a total diagonal stream needs an unbounded list, `{name}` has {len} rows")]
    FiniteList { name: String, len: u64 },
    #[error("cannot read list file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: `{content}` is not a row value in [0, 1)")]
    ListFile { line: usize, content: String },
    #[error("invalid function family: {reason}")]
    InvalidFamily { reason: String },
}

/// First `k` digits of the diagonal of `list` under `rule`.
pub fn build_diagonal(
    list: &ListView,
    rule: &ReplacementRule,
    k: u64,
) -> Result<Vec<u8>, DiagonalError> {
    assert!(k >= 1, "prefix length must be positive");
    (1..=k)
        .map(|n| Ok(rule.apply(list.row_at(n)?.digit_at(n))))
        .collect()
}

/// The full lazy diagonal stream. Only unbounded lists admit one.
pub fn diagonal_stream(list: &ListView, rule: &ReplacementRule) -> Result<DigitStream, DiagonalError> {
    if let Some(len) = list.len() {
        return Err(DiagonalError::FiniteList {
            name: list.name().to_string(),
            len,
        });
    }
    let provenance = format!("diagonal of {} under rule {}", list.name(), rule.as_string());
    let list = list.clone();
    let rule = *rule;
    Ok(DigitStream::from_fn(provenance, move |n| {
        rule.apply(
            list.row_at(n)
                .expect("unbounded lists have every row")
                .digit_at(n),
        )
    }))
}

/// First position where the diagonal prefix differs from row `n`.
///
/// For any rule-conformant diagonal the answer is at most `n`, because the
/// digit at position `n` was replaced away from the row's own digit.
pub fn locate_escape(
    list: &ListView,
    diagonal_prefix: &[u8],
    n: u64,
) -> Result<u64, DiagonalError> {
    assert!(n >= 1 && n <= diagonal_prefix.len() as u64, "row index must lie within the prefix");
    let row = list.row_at(n)?;
    for position in 1..=diagonal_prefix.len() as u64 {
        if diagonal_prefix[position as usize - 1] != row.digit_at(position) {
            return Ok(position);
        }
    }
    Err(DiagonalError::NoDifferenceWithinPrefix {
        n,
        prefix_len: diagonal_prefix.len() as u64,
    })
}
