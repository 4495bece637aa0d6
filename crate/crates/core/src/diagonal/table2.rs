//! The special all-ones-prefix list and its diagonal audits.
//!
//! Row n carries `n − 1` leading ones and then zeros, so the list is a
//! rational sequence converging to 1/9. Under the default rule the
//! diagonal replaces each diagonal 0 by 1, and two things hold at once for
//! every n: the n-digit diagonal prefix equals the n-digit prefix of row
//! n + 1, and the full diagonal differs from row n at position n.

use serde::Serialize;

use crate::numerics::{digits_value, rat, rational_string, Rational};
use num_traits::Signed;

use super::{build_diagonal, locate_escape, ListView, ReplacementRule};

/// Row n: digit j is 1 for j < n, 0 from position n on.
pub fn table2_row(n: u64) -> crate::numerics::DigitStream {
    assert!(n >= 1, "rows are 1-based");
    crate::numerics::DigitStream::from_fn(format!("table2 row {n}"), move |j| u8::from(j < n))
}

/// Outcome of comparing the n-digit diagonal prefix with row n + 1.
#[derive(Debug, Clone, Serialize)]
pub struct PrefixIdentity {
    pub n: u64,
    /// First n digits of the diagonal equal the first n digits of row n+1.
    pub identity_holds: bool,
    /// Position n + 1, where the row continues 0 and the diagonal 1.
    pub divergence_position: u64,
    pub diverges_there: bool,
}

impl PrefixIdentity {
    pub fn ok(&self) -> bool {
        self.identity_holds && self.diverges_there
    }
}

pub fn table2_prefix_identity(n: u64) -> PrefixIdentity {
    assert!(n >= 1);
    let list = ListView::table2();
    let rule = ReplacementRule::default();
    let diagonal = build_diagonal(&list, &rule, n + 1).expect("table2 is unbounded");
    let row = table2_row(n + 1);
    let identity_holds = (1..=n).all(|j| diagonal[j as usize - 1] == row.digit_at(j));
    let diverges_there = diagonal[n as usize] != row.digit_at(n + 1);
    PrefixIdentity {
        n,
        identity_holds,
        divergence_position: n + 1,
        diverges_there,
    }
}

/// Exact distance audit of the k-digit diagonal prefix against 1/9,
/// together with an escape check for every listed row up to k.
#[derive(Debug, Clone, Serialize)]
pub struct LimitCheck {
    pub k: u64,
    pub prefix_value: String,
    pub difference: String,
    pub bound: String,
    pub within_bound: bool,
    pub escapes_verified: u64,
    pub all_escapes_within_row_index: bool,
}

impl LimitCheck {
    pub fn ok(&self) -> bool {
        self.within_bound && self.all_escapes_within_row_index
    }
}

pub fn table2_limit_check(k: u64) -> LimitCheck {
    assert!(k >= 1);
    let list = ListView::table2();
    let rule = ReplacementRule::default();
    let diagonal = build_diagonal(&list, &rule, k).expect("table2 is unbounded");
    let value = digits_value(&diagonal);
    let difference = (rat(1, 9) - &value).abs();
    let bound = Rational::new(1.into(), crate::numerics::pow10(k));
    let mut escapes_verified = 0;
    let mut all_escapes_ok = true;
    for n in 1..=k {
        match locate_escape(&list, &diagonal, n) {
            Ok(position) if position <= n => escapes_verified += 1,
            _ => {
                all_escapes_ok = false;
                break;
            }
        }
    }
    LimitCheck {
        k,
        prefix_value: rational_string(&value),
        difference: rational_string(&difference),
        bound: rational_string(&bound),
        within_bound: difference <= bound,
        escapes_verified,
        all_escapes_within_row_index: all_escapes_ok,
    }
}
