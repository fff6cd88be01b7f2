mod common;

use braidc_core::search::{bidirectional, brute_force, enumerate_weaves, target};
use braidc_core::{BraidWord, SearchBudget, TargetGate};

fn gate(name: &str) -> TargetGate {
    target(name).unwrap()
}

fn word_gate(pairs: &[(usize, i64)]) -> TargetGate {
    TargetGate::custom("word", common::evaluate(pairs)).unwrap()
}

#[test]
fn brute_force_agrees_with_naive_oracle() {
    let targets = vec![
        gate("identity"),
        gate("hadamard"),
        gate("pauli_x"),
        gate("pauli_y"),
        gate("phase_s"),
        gate("t"),
        word_gate(&[(2, 2), (1, -4)]),
        word_gate(&[(1, 2), (2, 2), (1, 2), (2, 2), (1, 2), (2, 2)]),
    ];
    for t in &targets {
        for l in [2u32, 4, 6, 8, 10] {
            let budget = SearchBudget::new(l);
            let fast = brute_force(t, &budget).unwrap();
            let (word, err) = common::naive_search(t.matrix.entries(), u64::from(l), budget.max_slots as usize);
            assert!((fast.error - err).abs() < 1e-12, "{} L={l}: {} vs {err}", t.name, fast.error);
            assert_eq!(common::pairs(&fast.word), word, "{} L={l}", t.name);
        }
    }
}

#[test]
fn enumeration_matches_oracle_set() {
    for (l, s) in [(8u32, 4u32), (10, 2), (12, 6)] {
        let budget = SearchBudget::new(l).with_max_slots(s);
        let mut ours: Vec<Vec<(usize, i64)>> = enumerate_weaves(&budget).map(|w| common::pairs(&w)).collect();
        let mut theirs = common::all_weaves(u64::from(l), s as usize);
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs);
    }
}

#[test]
fn error_is_monotone_in_budget() {
    for name in ["hadamard", "t", "pauli_x"] {
        let t = gate(name);
        let mut last = f64::INFINITY;
        for l in (2..=18).step_by(2) {
            let r = brute_force(&t, &SearchBudget::new(l)).unwrap();
            assert!(r.error <= last, "{name} L={l}");
            last = r.error;
        }
    }
}

#[test]
fn result_is_independent_of_thread_count() {
    let t = gate("hadamard");
    let results: Vec<_> = [1, 2, 3, 8]
        .iter()
        .map(|&n| brute_force(&t, &SearchBudget::new(14).with_threads(n)).unwrap())
        .collect();
    for r in &results[1..] {
        assert_eq!(r.word, results[0].word);
        assert_eq!(r.error, results[0].error);
        assert_eq!(r.nodes_visited, results[0].nodes_visited);
    }
}

#[test]
fn reported_error_is_recomputable() {
    for name in ["hadamard", "pauli_z", "t"] {
        let t = gate(name);
        for r in [
            brute_force(&t, &SearchBudget::new(12)).unwrap(),
            bidirectional(&t, &SearchBudget::new(12)).unwrap(),
        ] {
            let again = common::distance(r.word.evaluate().entries(), t.matrix.entries());
            assert!((again - r.error).abs() < 1e-12);
            assert!(r.matrix.max_abs_diff(&r.word.evaluate()) == 0.0);
            assert!(r.word.crossings() <= 12);
        }
    }
}

#[test]
fn bidirectional_is_bounded_by_brute_force() {
    for name in ["hadamard", "t", "phase_s", "pauli_y"] {
        let t = gate(name);
        let full = brute_force(&t, &SearchBudget::new(14)).unwrap();
        let half = brute_force(&t, &SearchBudget::new(7)).unwrap();
        let bidir = bidirectional(&t, &SearchBudget::new(14)).unwrap();
        assert!(bidir.error >= full.error, "{name}");
        assert!(bidir.error <= half.error, "{name}");
    }
}

#[test]
fn user_supplied_word_target_is_found_exactly() {
    let w: BraidWord = "s2^-2 s1^4".parse().unwrap();
    let t = TargetGate::custom("w", *w.evaluate().entries()).unwrap();
    let r = brute_force(&t, &SearchBudget::new(8)).unwrap();
    assert_eq!(*r.word, w);
}
