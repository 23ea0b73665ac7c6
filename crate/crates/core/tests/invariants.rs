//! Cross-module properties over whole runs.

use std::collections::{BTreeMap, HashSet};

use uwca::analysis::{self, check_claim, write_reports, Claim, SuiteOptions};
use uwca::engine::{parse_snapshot, write_snapshot, Snapshot};
use uwca::genealogy::{
    children_of, family_tree_edges, fertility_class, lineage, permitted_child_counts,
};
use uwca::{run, AutomatonState, Cell, FertilityClass, LatticeKind};

#[test]
fn structural_claims_hold_on_complete_and_incomplete_shapes() {
    for kind in LatticeKind::ALL {
        for n in [15, 31, 63, 64] {
            let s = run(kind, n).unwrap();
            for r in [
                analysis::verify_symmetry(&s),
                analysis::verify_parent_generation(&s),
                analysis::verify_distance_bound(&s),
                analysis::verify_containment(&s),
            ] {
                assert!(r.passed(), "{}", r.summary());
            }
        }
    }
}

#[test]
fn pioneer_closure_and_completed_rings() {
    for kind in LatticeKind::ALL {
        let s = run(kind, 64).unwrap();
        let closure = analysis::verify_pioneer_closure(&s);
        assert!(closure.passed(), "{}", closure.summary());
        let rings = analysis::verify_completed_rings(&s);
        assert!(rings.passed(), "{}", rings.summary());
        assert_eq!(rings.counts["rings"], 7);
    }
}

#[test]
fn parent_relation_is_a_spanning_tree() {
    for kind in LatticeKind::ALL {
        let s = run(kind, 64).unwrap();
        let edges = family_tree_edges(&s);
        assert_eq!(edges.len() as u64, s.live_count() - 1);
        let mut seen = HashSet::from([kind.patriarch()]);
        let mut stack = vec![kind.patriarch()];
        while let Some(c) = stack.pop() {
            for child in children_of(&s, c).unwrap() {
                assert!(seen.insert(child), "{child} reached twice");
                stack.push(child);
            }
        }
        assert_eq!(seen.len() as u64, s.live_count());
    }
}

#[test]
fn lineage_length_is_generation_plus_one() {
    for kind in LatticeKind::ALL {
        let s = run(kind, 40).unwrap();
        for (c, rec) in s.iter() {
            let line = lineage(&s, c).unwrap();
            assert_eq!(line.len(), rec.generation as usize + 1);
            assert_eq!(*line.last().unwrap(), kind.patriarch());
        }
    }
}

#[test]
fn finalized_children_never_change() {
    for kind in LatticeKind::ALL {
        let early = run(kind, 30).unwrap();
        let late = run(kind, 64).unwrap();
        for (c, rec) in early.iter().filter(|(_, r)| r.generation < 30) {
            assert_eq!(
                children_of(&early, c).unwrap(),
                children_of(&late, c).unwrap(),
                "{c} born {}",
                rec.generation
            );
        }
    }
}

#[test]
fn fertility_classes_respect_lattice_domain() {
    for kind in LatticeKind::ALL {
        let s = run(kind, 64).unwrap();
        let allowed = permitted_child_counts(kind);
        let mut classes = BTreeMap::new();
        for (c, rec) in s.iter().filter(|(_, r)| r.generation < 64) {
            let class = fertility_class(&s, c).unwrap();
            *classes.entry(class).or_insert(0) += 1;
            if rec.generation > 0 {
                assert!(allowed.contains(&children_of(&s, c).unwrap().len()));
            }
        }
        assert_eq!(classes[&FertilityClass::Patriarch], 1);
        assert_eq!(
            classes.contains_key(&FertilityClass::Two),
            kind == LatticeKind::Hex
        );
    }
}

#[test]
fn full_suite_passes_and_reports_are_reproducible() {
    let opts = SuiteOptions::default();
    for (kind, n) in [
        (LatticeKind::Square, 63),
        (LatticeKind::Hex, 63),
        (LatticeKind::Square, 64),
    ] {
        let text = || {
            let s = run(kind, n).unwrap();
            let mut reports = Vec::new();
            for c in Claim::ALL.into_iter().filter(|c| c.applies_to(&s)) {
                reports.extend(check_claim(&s, c, &opts).unwrap());
            }
            assert!(reports.iter().all(|r| r.passed()));
            write_reports(&reports)
        };
        assert_eq!(text(), text());
    }
}

#[test]
fn snapshots_round_trip_and_are_deterministic() {
    for kind in LatticeKind::ALL {
        let s = run(kind, 33).unwrap();
        let text = write_snapshot(&s);
        assert_eq!(text, write_snapshot(&run(kind, 33).unwrap()));
        let back = parse_snapshot(&text).unwrap();
        assert_eq!(back, Snapshot::of(&s));
        assert_eq!(back.records.len() as u64, s.live_count());
    }
}

#[test]
fn stepping_one_at_a_time_matches_run_to() {
    for kind in LatticeKind::ALL {
        let mut a = AutomatonState::new(kind);
        let mut births = 1;
        for _ in 0..50 {
            births += a.step().unwrap().len() as u64;
            assert_eq!(births, a.live_count());
        }
        assert_eq!(a.sorted_records(), run(kind, 50).unwrap().sorted_records());
    }
}

#[test]
fn budget_overrun_is_an_error_not_a_partial_state() {
    let mut s = AutomatonState::with_budget(LatticeKind::Hex, 40);
    let err = s.run_to(10).unwrap_err();
    assert!(
        matches!(err, uwca::Error::CellBudgetExceeded { budget: 40, .. }),
        "{err}"
    );
    assert!(s.live_count() <= 40);
    assert!(s.is_live(Cell::hex(0, 0, 0)));
}
