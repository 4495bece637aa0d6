//! Exhaustive finite audits of the diagonal subset `M = {i : i ∉ s(i)}`.
//!
//! Ground sets are capped at four elements, which keeps the full space of
//! `(2^n)^n` mappings small enough to sweep in well under a second while
//! still exercising every mapping there is. Subsets are bitmasks with
//! element `i` at bit `i − 1`; mappings are enumerated in lexicographic
//! order of the tuple `(s(1), …, s(n))` so any counterexample report would
//! be reproducible.

use serde::Serialize;
use thiserror::Error;

pub const MAX_GROUND_SIZE: u8 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PowersetError {
    #[error("ground size must be 1..={MAX_GROUND_SIZE}, got {0}")]
    InvalidGroundSize(u8),
    #[error("image {mask:#06b} of element {element} spills outside the ground set")]
    InvalidImage { element: u8, mask: u16 },
    #[error("element {element} is not in the ground set 1..={ground_size}")]
    ElementOutOfRange { element: u8, ground_size: u8 },
}

/// A finite map from elements `1..=n` to subsets of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingTable {
    ground_size: u8,
    images: Vec<u16>,
}

impl MappingTable {
    pub fn new(ground_size: u8, images: Vec<u16>) -> Result<Self, PowersetError> {
        if !(1..=MAX_GROUND_SIZE).contains(&ground_size) {
            return Err(PowersetError::InvalidGroundSize(ground_size));
        }
        if images.len() != ground_size as usize {
            return Err(PowersetError::InvalidGroundSize(ground_size));
        }
        let full = full_mask(ground_size);
        for (i, &mask) in images.iter().enumerate() {
            if mask & !full != 0 {
                return Err(PowersetError::InvalidImage {
                    element: i as u8 + 1,
                    mask,
                });
            }
        }
        Ok(Self {
            ground_size,
            images,
        })
    }

    /// The mapping at position `code` in lexicographic order: `s(1)` lives
    /// in the most significant base-`2^n` digit.
    pub fn from_code(ground_size: u8, code: u64) -> Result<Self, PowersetError> {
        if !(1..=MAX_GROUND_SIZE).contains(&ground_size) {
            return Err(PowersetError::InvalidGroundSize(ground_size));
        }
        let n = ground_size as u32;
        debug_assert!(code < mapping_count(ground_size));
        let images = (1..=n)
            .map(|i| ((code >> ((n - i) * n)) & ((1 << n) - 1)) as u16)
            .collect();
        Self::new(ground_size, images)
    }

    pub fn ground_size(&self) -> u8 {
        self.ground_size
    }

    /// Image of element `i` (1-based).
    pub fn image(&self, element: u8) -> u16 {
        self.images[element as usize - 1]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }
}

pub fn full_mask(ground_size: u8) -> u16 {
    (1u16 << ground_size) - 1
}

/// Total number of mappings on a ground set: `(2^n)^n`.
pub fn mapping_count(ground_size: u8) -> u64 {
    let subsets = 1u64 << ground_size;
    subsets.pow(ground_size as u32)
}

/// Elements of a bitmask subset, ascending.
pub fn subset_elements(mask: u16) -> Vec<u8> {
    (1..=16u8).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

/// The diagonal subset `{i : i ∉ s(i)}` as a bitmask.
pub fn build_m(s: &MappingTable) -> u16 {
    let mut m = 0u16;
    for i in 1..=s.ground_size() {
        let bit = 1u16 << (i - 1);
        if s.image(i) & bit == 0 {
            m |= bit;
        }
    }
    m
}

/// Per-preimage disagreement between `M` and `s(i)`.
#[derive(Debug, Clone, Serialize)]
pub struct Disagreement {
    pub preimage: u8,
    /// Smallest element on which `M` and `s(preimage)` differ.
    pub witness_element: u8,
}

#[derive(Debug, Clone, Serialize)]
pub struct RangeExclusion {
    pub m: u16,
    pub holds: bool,
    pub disagreements: Vec<Disagreement>,
}

/// Confirms that `M` differs from every image, with a first witness per
/// preimage. `M` and `s(i)` always differ at `i` itself, so the witness is
/// never past `i`.
pub fn verify_m_not_in_range(s: &MappingTable) -> RangeExclusion {
    let m = build_m(s);
    let mut holds = true;
    let mut disagreements = Vec::with_capacity(s.ground_size() as usize);
    for i in 1..=s.ground_size() {
        let diff = m ^ s.image(i);
        if diff == 0 {
            holds = false;
            continue;
        }
        disagreements.push(Disagreement {
            preimage: i,
            witness_element: diff.trailing_zeros() as u8 + 1,
        });
    }
    RangeExclusion {
        m,
        holds,
        disagreements,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditFailure {
    pub code: u64,
    pub images: Vec<u16>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditOutcome {
    pub n: u8,
    pub mappings_checked: u64,
    pub failures: Vec<AuditFailure>,
}

impl AuditOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweeps every mapping on the ground set and verifies the exclusion for
/// each. Any failure (there are none: this is a theorem, the sweep is the
/// audit) is reported with its lexicographic code.
pub fn exhaustive_audit(ground_size: u8) -> Result<AuditOutcome, PowersetError> {
    if !(1..=MAX_GROUND_SIZE).contains(&ground_size) {
        return Err(PowersetError::InvalidGroundSize(ground_size));
    }
    let total = mapping_count(ground_size);
    let mut failures = Vec::new();
    for code in 0..total {
        let mapping = MappingTable::from_code(ground_size, code)?;
        if !verify_m_not_in_range(&mapping).holds {
            failures.push(AuditFailure {
                code,
                images: mapping.images().to_vec(),
            });
        }
    }
    Ok(AuditOutcome {
        n: ground_size,
        mappings_checked: total,
        failures,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    In,
    Out,
}

impl Membership {
    fn flipped(self) -> Self {
        match self {
            Membership::In => Membership::Out,
            Membership::Out => Membership::In,
        }
    }
}

/// Membership chase under the assumption `s(m) = M`.
///
/// The first state evaluates `m ∈ M` on the static table; each further
/// state re-evaluates `m ∈ M ⟺ m ∉ s(m) = M` under the previous state,
/// which negates it. The chase has period two and never stabilizes — the
/// operational content of the circular definition, demonstrated rather
/// than stored.
pub fn oscillation_trace(
    s: &MappingTable,
    m: u8,
    steps: u32,
) -> Result<Vec<Membership>, PowersetError> {
    if !(1..=s.ground_size()).contains(&m) {
        return Err(PowersetError::ElementOutOfRange {
            element: m,
            ground_size: s.ground_size(),
        });
    }
    assert!(steps >= 1, "a trace has at least its initial state");
    let initially_in = build_m(s) & (1 << (m - 1)) != 0;
    let mut state = if initially_in {
        Membership::In
    } else {
        Membership::Out
    };
    let mut trace = Vec::with_capacity(steps as usize);
    trace.push(state);
    for _ in 1..steps {
        state = state.flipped();
        trace.push(state);
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mapping(n: u8, images: &[u16]) -> MappingTable {
        MappingTable::new(n, images.to_vec()).unwrap()
    }

    #[test]
    fn hand_evaluated_diagonal_subsets() {
        // s(1) = {1}, s(2) = {1, 2}: both elements sit in their images.
        assert_eq!(build_m(&mapping(2, &[0b01, 0b11])), 0);
        // Single element with empty image.
        assert_eq!(build_m(&mapping(1, &[0b0])), 0b1);
        // Identity-singleton mapping on three elements.
        assert_eq!(build_m(&mapping(3, &[0b001, 0b010, 0b100])), 0);
    }

    #[test]
    fn exclusion_holds_with_witnesses() {
        let verdict = verify_m_not_in_range(&mapping(1, &[0b0]));
        assert!(verdict.holds);
        assert_eq!(verdict.m, 0b1);
        assert_eq!(verdict.disagreements[0].witness_element, 1);

        let verdict = verify_m_not_in_range(&mapping(2, &[0b01, 0b11]));
        assert!(verdict.holds);
        assert_eq!(verdict.m, 0);
        // M = {} differs from s(1) = {1} and s(2) = {1,2} at element 1.
        assert!(verdict.disagreements.iter().all(|d| d.witness_element == 1));
    }

    #[test]
    fn witnesses_are_genuine_disagreements() {
        for code in 0..mapping_count(3) {
            let s = MappingTable::from_code(3, code).unwrap();
            let verdict = verify_m_not_in_range(&s);
            assert!(verdict.holds);
            assert_eq!(verdict.disagreements.len(), 3);
            for d in &verdict.disagreements {
                let bit = 1u16 << (d.witness_element - 1);
                assert_ne!(verdict.m & bit, s.image(d.preimage) & bit);
            }
        }
    }

    #[test]
    fn audit_counts_match_the_mapping_space() {
        assert_eq!(exhaustive_audit(1).unwrap().mappings_checked, 2);
        assert_eq!(exhaustive_audit(2).unwrap().mappings_checked, 16);
        assert_eq!(exhaustive_audit(3).unwrap().mappings_checked, 512);
        let big = exhaustive_audit(4).unwrap();
        assert_eq!(big.mappings_checked, 65_536);
        assert!(big.ok());
    }

    #[test]
    fn audit_rejects_out_of_range_ground_sizes() {
        assert!(exhaustive_audit(0).is_err());
        assert!(exhaustive_audit(5).is_err());
    }

    #[test]
    fn lexicographic_codes_roundtrip() {
        // Code 0 is the all-empty mapping; the last code is all-full.
        let first = MappingTable::from_code(2, 0).unwrap();
        assert_eq!(first.images(), &[0, 0]);
        let last = MappingTable::from_code(2, 15).unwrap();
        assert_eq!(last.images(), &[0b11, 0b11]);
        // s(1) occupies the high digit.
        let s = MappingTable::from_code(2, 0b01_10).unwrap();
        assert_eq!(s.images(), &[0b01, 0b10]);
    }

    #[test]
    fn oscillation_has_period_two_from_either_phase() {
        // m = 1 with s(1) = {2}: statically 1 ∉ s(1), so the chase starts in.
        let s = mapping(2, &[0b10, 0b00]);
        let trace = oscillation_trace(&s, 1, 6).unwrap();
        assert_eq!(
            trace,
            vec![
                Membership::In,
                Membership::Out,
                Membership::In,
                Membership::Out,
                Membership::In,
                Membership::Out
            ]
        );

        // m = 1 with s(1) = {1}: starts out.
        let s = mapping(2, &[0b01, 0b00]);
        let trace = oscillation_trace(&s, 1, 4).unwrap();
        assert_eq!(trace[0], Membership::Out);
        assert_eq!(trace[1], Membership::In);

        let single = oscillation_trace(&s, 1, 1).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn long_traces_never_stabilize() {
        for code in [0u64, 7, 100, 65_535] {
            let s = MappingTable::from_code(4, code).unwrap();
            for m in 1..=4 {
                let trace = oscillation_trace(&s, m, 100).unwrap();
                for window in trace.windows(2) {
                    assert_ne!(window[0], window[1]);
                }
            }
        }
    }

    #[test]
    fn subset_rendering_is_ascending() {
        assert_eq!(subset_elements(0b1011), vec![1, 2, 4]);
        assert!(subset_elements(0).is_empty());
    }

    #[test]
    fn validation_errors() {
        assert!(MappingTable::new(2, vec![0b100, 0]).is_err());
        assert!(MappingTable::new(5, vec![0; 5]).is_err());
        let s = mapping(2, &[0, 0]);
        assert!(oscillation_trace(&s, 3, 4).is_err());
    }
}
