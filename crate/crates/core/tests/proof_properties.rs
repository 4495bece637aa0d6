//! Property tests for the nested-interval run.

use std::collections::BTreeSet;

use proptest::prelude::*;

use cantor_core::enumerate::SequenceSource;
use cantor_core::first_proof::{audit_members_outside, run_nested, RunOutcome};
use cantor_core::numerics::{rat, Interval, Rational};

/// A finite injective term list with some spread.
fn term_list() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set((-500i64..500, 1i64..60), 4..40).prop_map(|set: BTreeSet<(i64, i64)>| {
        let mut seen = BTreeSet::new();
        let mut terms = Vec::new();
        for (n, d) in set {
            let q = rat(n, d);
            if seen.insert(q.clone()) {
                terms.push(q);
            }
        }
        terms
    })
}

proptest! {
    #[test]
    fn runs_nest_strictly_and_audit_clean(terms in term_list(), depth in 1u64..8) {
        let source = SequenceSource::from_terms("random", terms);
        let start = Interval::new(rat(-10, 1), rat(10, 1)).unwrap();
        let run = run_nested(&source, &start, depth, 1_000_000).unwrap();

        let mut previous = start;
        for step in &run.steps {
            prop_assert!(step.interval.strictly_inside(&previous));
            prop_assert!(step.interval.width() < previous.width());
            previous = step.interval.clone();
        }

        match &run.outcome {
            RunOutcome::Converged { bounds } => {
                let audit = audit_members_outside(&run, &source).unwrap();
                prop_assert!(audit.ok(), "violations: {:?}", audit.violations);
                prop_assert_eq!(bounds, &previous);
            }
            RunOutcome::FiniteCaseWithinBudget { last, witness, eta } => {
                // The offered point is interior and distinct from the one
                // member possibly left inside.
                prop_assert!(last.contains(eta));
                if let Some((_, member)) = witness {
                    prop_assert_ne!(member, eta);
                    prop_assert!(last.contains(member));
                }
            }
            RunOutcome::BudgetExhausted { .. } => {
                prop_assert!(false, "finite sources cannot out-scan the budget");
            }
        }
    }

    #[test]
    fn consumed_indices_increase_and_pair_up(terms in term_list()) {
        let source = SequenceSource::from_terms("random", terms);
        let start = Interval::new(rat(-10, 1), rat(10, 1)).unwrap();
        let run = run_nested(&source, &start, 6, 1_000_000).unwrap();
        let mut last_index = 0;
        for step in &run.steps {
            let (first, second) = step.consumed;
            prop_assert!(first > last_index);
            prop_assert!(second > first);
            last_index = second;
            // The consumed terms are exactly the endpoints of the step.
            let a = source.term_at(first).unwrap();
            let b = source.term_at(second).unwrap();
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assert_eq!(&lo, step.interval.lo());
            prop_assert_eq!(&hi, step.interval.hi());
        }
    }
}

#[test]
fn harmonic_closed_form_holds_to_depth_one_hundred() {
    let source = SequenceSource::harmonic();
    let start = Interval::new(rat(-1, 1), rat(1, 2)).unwrap();
    let run = run_nested(&source, &start, 101, 100_000).unwrap();
    assert_eq!(run.steps.len(), 100);
    for (k, step) in run.steps.iter().enumerate() {
        let k = k as i64 + 1;
        assert_eq!(
            step.interval,
            Interval::new(rat(-1, 2 * k + 1), rat(1, 2 * k + 2)).unwrap()
        );
    }
    let audit = audit_members_outside(&run, &source).unwrap();
    assert!(audit.ok());
    assert_eq!(audit.checked, 202);
}
