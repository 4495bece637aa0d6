//! Nested-interval refinement over a sequence source.
//!
//! Starting from an open interval, each step scans the source for the
//! first two terms strictly inside the current interval and shrinks to the
//! open interval they span. A run either completes its chain (the final
//! interval brackets a limit value that no consumed term can equal), runs
//! the source dry, or hits its scan budget. Whether a source *really* has
//! fewer than two members in an interval is undecidable for black-box
//! infinite sources, so the two non-converged outcomes are kept distinct:
//! exhaustion is a fact, a budget stop is only a bound on what was
//! inspected.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::enumerate::SequenceSource;
use crate::numerics::{rat, rational_string, Interval, Rational};

#[derive(Debug, Error)]
pub enum ProofError {
    #[error("sequence is not injective: indices {first_index} and {second_index} both yield {value}")]
    NotInjective {
        value: String,
        first_index: u64,
        second_index: u64,
    },
    #[error("exclusion audit requires a converged run")]
    AuditRequiresConverged,
}

/// One refinement step: the interval produced and the pair of source
/// indices whose terms became its endpoints.
#[derive(Debug, Clone)]
pub struct NestedStep {
    pub interval: Interval,
    pub consumed: (u64, u64),
}

#[derive(Debug, Clone)]
pub enum RunOutcome {
    /// The chain completed; the final interval brackets the limit.
    Converged { bounds: Interval },
    /// The source was exhausted with fewer than two members inside the
    /// last interval. `eta` is a concrete interior point distinct from the
    /// at-most-one member found.
    FiniteCaseWithinBudget {
        last: Interval,
        witness: Option<(u64, Rational)>,
        eta: Rational,
    },
    /// The scan budget ran out before two members (or the source's end)
    /// were found. No finite-case claim is made.
    BudgetExhausted {
        last: Interval,
        witness: Option<(u64, Rational)>,
    },
}

#[derive(Debug)]
pub struct NestedRun {
    pub start: Interval,
    pub steps: Vec<NestedStep>,
    pub outcome: RunOutcome,
    pub scan_budget: u64,
}

impl NestedRun {
    /// Highest source index consumed as an interval endpoint (0 when no
    /// refinement happened).
    pub fn last_consumed_index(&self) -> u64 {
        self.steps.last().map(|s| s.consumed.1).unwrap_or(0)
    }

    pub fn report(&self) -> NestedRunReport {
        let interval_repr = |iv: &Interval| IntervalRepr {
            lo: rational_string(iv.lo()),
            hi: rational_string(iv.hi()),
        };
        let steps = self
            .steps
            .iter()
            .map(|s| StepRepr {
                lo: rational_string(s.interval.lo()),
                hi: rational_string(s.interval.hi()),
                consumed: [s.consumed.0, s.consumed.1],
            })
            .collect();
        let mut report = NestedRunReport {
            start: interval_repr(&self.start),
            scan_budget: self.scan_budget,
            steps,
            outcome: "",
            bounds: None,
            last: None,
            eta: None,
            witnesses_found: None,
        };
        match &self.outcome {
            RunOutcome::Converged { bounds } => {
                report.outcome = "converged";
                report.bounds = Some(interval_repr(bounds));
            }
            RunOutcome::FiniteCaseWithinBudget { last, witness, eta } => {
                report.outcome = "finite-case-within-budget";
                report.last = Some(interval_repr(last));
                report.eta = Some(rational_string(eta));
                report.witnesses_found = Some(witness.iter().count() as u8);
            }
            RunOutcome::BudgetExhausted { last, witness } => {
                report.outcome = "budget-exhausted";
                report.last = Some(interval_repr(last));
                report.witnesses_found = Some(witness.iter().count() as u8);
            }
        }
        report
    }
}

#[derive(Debug, Serialize)]
pub struct IntervalRepr {
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Serialize)]
pub struct StepRepr {
    pub lo: String,
    pub hi: String,
    /// 1-based source indices of the two consumed terms.
    pub consumed: [u64; 2],
}

#[derive(Debug, Serialize)]
pub struct NestedRunReport {
    pub start: IntervalRepr,
    pub scan_budget: u64,
    pub steps: Vec<StepRepr>,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<IntervalRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub last: Option<IntervalRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses_found: Option<u8>,
}

/// Result of scanning for the next nested interval.
#[derive(Debug, Clone)]
pub enum NextScan {
    Refined {
        interval: Interval,
        consumed: (u64, u64),
        next_scan_from: u64,
    },
    /// Fewer than two members were found. `source_exhausted` tells whether
    /// the source actually ended or the budget stopped the scan.
    FiniteCase {
        found: Option<(u64, Rational)>,
        source_exhausted: bool,
    },
}

fn scan_two_inside(
    seq: &SequenceSource,
    interval: &Interval,
    scan_from: u64,
    budget: u64,
    seen: &mut HashMap<Rational, u64>,
) -> Result<NextScan, ProofError> {
    let mut found: Option<(u64, Rational)> = None;
    for index in scan_from..=budget {
        let term = match seq.term_at(index) {
            None => {
                return Ok(NextScan::FiniteCase {
                    found,
                    source_exhausted: true,
                })
            }
            Some(term) => term,
        };
        if let Some(&first_index) = seen.get(&term) {
            return Err(ProofError::NotInjective {
                value: rational_string(&term),
                first_index,
                second_index: index,
            });
        }
        seen.insert(term.clone(), index);
        if !interval.contains(&term) {
            continue;
        }
        match found.take() {
            None => found = Some((index, term)),
            Some((first_index, first_term)) => {
                let (lo, hi) = if first_term < term {
                    (first_term, term)
                } else {
                    (term, first_term)
                };
                let refined = Interval::new(lo, hi)
                    .expect("two distinct members strictly inside give lo < hi");
                return Ok(NextScan::Refined {
                    interval: refined,
                    consumed: (first_index, index),
                    next_scan_from: index + 1,
                });
            }
        }
    }
    Ok(NextScan::FiniteCase {
        found,
        source_exhausted: false,
    })
}

/// Scans `scan_from..=budget` for the first two terms strictly inside
/// `interval`; they span the next open interval. Ties to no run state:
/// duplicate detection covers just this scan window.
pub fn next_interval(
    seq: &SequenceSource,
    interval: &Interval,
    scan_from: u64,
    budget: u64,
) -> Result<NextScan, ProofError> {
    let mut seen = HashMap::new();
    scan_two_inside(seq, interval, scan_from, budget, &mut seen)
}

/// Runs the refinement chain.
///
/// `depth` counts the intervals of the chain *including the start*, so a
/// run performs at most `depth − 1` refinement steps; asking for depth 50
/// reports the start plus 49 nested successors. Duplicate terms anywhere
/// in the scanned range abort with [`ProofError::NotInjective`].
pub fn run_nested(
    seq: &SequenceSource,
    start: &Interval,
    depth: u64,
    budget: u64,
) -> Result<NestedRun, ProofError> {
    assert!(depth >= 1, "a chain contains at least its start interval");
    let mut seen = HashMap::new();
    let mut current = start.clone();
    let mut steps = Vec::new();
    let mut scan_from = 1;
    for _ in 1..depth {
        match scan_two_inside(seq, &current, scan_from, budget, &mut seen)? {
            NextScan::Refined {
                interval,
                consumed,
                next_scan_from,
            } => {
                steps.push(NestedStep {
                    interval: interval.clone(),
                    consumed,
                });
                current = interval;
                scan_from = next_scan_from;
            }
            NextScan::FiniteCase {
                found,
                source_exhausted,
            } => {
                let outcome = if source_exhausted {
                    let eta = pick_eta(&current, found.as_ref().map(|(_, t)| t));
                    RunOutcome::FiniteCaseWithinBudget {
                        last: current,
                        witness: found,
                        eta,
                    }
                } else {
                    RunOutcome::BudgetExhausted {
                        last: current,
                        witness: found,
                    }
                };
                return Ok(NestedRun {
                    start: start.clone(),
                    steps,
                    outcome,
                    scan_budget: budget,
                });
            }
        }
    }
    Ok(NestedRun {
        start: start.clone(),
        steps,
        outcome: RunOutcome::Converged { bounds: current },
        scan_budget: budget,
    })
}

/// Interior point of `interval` distinct from the optional member: the
/// midpoint, or the quarter point when the member happens to be the
/// midpoint.
fn pick_eta(interval: &Interval, member: Option<&Rational>) -> Rational {
    let mid = interval.midpoint();
    if member == Some(&mid) {
        interval.lo() + interval.width() / rat(4, 1)
    } else {
        mid
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditViolation {
    pub index: u64,
    pub value: String,
}

/// Result of checking that every consumed-range term stays outside the
/// final interval. Terms equal to an endpoint count as outside.
#[derive(Debug, Serialize)]
pub struct AuditReport {
    pub last_consumed: u64,
    pub checked: u64,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that every term with index up to the last consumed index lies
/// outside the converged bounds.
pub fn audit_members_outside(
    run: &NestedRun,
    seq: &SequenceSource,
) -> Result<AuditReport, ProofError> {
    let bounds = match &run.outcome {
        RunOutcome::Converged { bounds } => bounds,
        _ => return Err(ProofError::AuditRequiresConverged),
    };
    let last_consumed = run.last_consumed_index();
    let mut violations = Vec::new();
    let mut checked = 0;
    for index in 1..=last_consumed {
        if let Some(term) = seq.term_at(index) {
            checked += 1;
            if bounds.contains(&term) {
                violations.push(AuditViolation {
                    index,
                    value: rational_string(&term),
                });
            }
        }
    }
    Ok(AuditReport {
        last_consumed,
        checked,
        violations,
    })
}
