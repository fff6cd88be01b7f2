//! Exhaustive depth-first search with prefix-product reuse.
//!
//! Each node of the enumeration tree costs one 2x2 product: the child's
//! operator is `P * M` where `M` is the parent's and `P` the new power. The
//! tree is cut at depth two into independent subtrees that run in parallel.

use std::time::Instant;

use rayon::prelude::*;

use crate::braid::{generator_matrix, Generator, WEAVE_EXPONENTS};
use crate::error::SearchError;
use crate::search::{finish, Method, SearchBudget, SearchResult, Selection, TargetGate};
use crate::unitary::{distance_unchecked, Unitary2};

const SPLIT_DEPTH: usize = 2;

/// Table of `sigma_g^e` for `e` in `WEAVE_EXPONENTS`.
pub(crate) struct PowerTable([[Unitary2; 4]; 2]);

impl PowerTable {
    pub fn new() -> Self {
        let row = |g| WEAVE_EXPONENTS.map(|e| generator_matrix(g).pow(e));
        Self([row(Generator::Sigma1), row(Generator::Sigma2)])
    }

    #[inline]
    pub fn get(&self, g: Generator, k: usize) -> &Unitary2 {
        &self.0[usize::from(g.index() - 1)][k]
    }
}

struct Walk<'a> {
    powers: &'a PowerTable,
    target: &'a Unitary2,
    max_exchanges: u64,
    max_slots: usize,
    start: Generator,
    exponents: Vec<i64>,
    selection: Selection,
    nodes: u64,
}

impl Walk<'_> {
    fn visit(&mut self, m: &Unitary2) {
        self.nodes += 1;
        let err = distance_unchecked(m, self.target);
        self.selection.offer(err, Some(self.start), &self.exponents);
    }

    /// Visits every proper descendant of the node described by
    /// `self.exponents`, whose operator is `m` and crossing count `cost`.
    fn descend(&mut self, m: &Unitary2, cost: u64) {
        if self.exponents.len() >= self.max_slots {
            return;
        }
        let g = if self.exponents.len().is_multiple_of(2) { self.start } else { self.start.other() };
        for (k, &e) in WEAVE_EXPONENTS.iter().enumerate() {
            let c = cost + e.unsigned_abs();
            if c > self.max_exchanges {
                continue;
            }
            let child = *self.powers.get(g, k) * *m;
            self.exponents.push(e);
            self.visit(&child);
            self.descend(&child, c);
            self.exponents.pop();
        }
    }
}

/// Global minimum of the gate distance over all weaves in `budget`.
pub fn brute_force(target: &TargetGate, budget: &SearchBudget) -> Result<SearchResult, SearchError> {
    budget.validate()?;
    let clock = Instant::now();
    let powers = PowerTable::new();
    let max_exchanges = u64::from(budget.max_exchanges);
    let max_slots = budget.max_slots as usize;

    let new_walk = |start| Walk {
        powers: &powers,
        target: &target.matrix,
        max_exchanges,
        max_slots,
        start,
        exponents: Vec::new(),
        selection: Selection::default(),
        nodes: 0,
    };

    // Shallow nodes are visited here; each node at SPLIT_DEPTH roots a task.
    let mut shallow = new_walk(Generator::Sigma1);
    shallow.nodes += 1;
    shallow
        .selection
        .offer(distance_unchecked(&Unitary2::IDENTITY, &target.matrix), None, &[]);
    let mut tasks: Vec<(Generator, Vec<i64>, Unitary2, u64)> = Vec::new();
    for start in [Generator::Sigma1, Generator::Sigma2] {
        shallow.start = start;
        collect_tasks(&mut shallow, &mut tasks, Unitary2::IDENTITY, 0);
    }

    let pool = budget.pool()?;
    let (selection, nodes) = pool.install(|| {
        tasks
            .par_iter()
            .map(|(start, prefix, m, cost)| {
                let mut walk = new_walk(*start);
                walk.exponents = prefix.clone();
                walk.visit(m);
                walk.descend(m, *cost);
                (walk.selection, walk.nodes)
            })
            .reduce(
                || (Selection::default(), 0),
                |(a, na), (b, nb)| (a.merge(b), na + nb),
            )
    });
    let selection = shallow.selection.merge(selection);
    let nodes = nodes + shallow.nodes;

    let winner = selection.winner().expect("the empty weave is always evaluated");
    Ok(finish(winner, target, nodes, clock.elapsed(), Method::Brute))
}

/// Visits nodes shallower than `SPLIT_DEPTH` and records the subtrees rooted
/// at that depth as tasks.
fn collect_tasks(
    walk: &mut Walk<'_>,
    tasks: &mut Vec<(Generator, Vec<i64>, Unitary2, u64)>,
    m: Unitary2,
    cost: u64,
) {
    if walk.exponents.len() >= walk.max_slots {
        return;
    }
    let g = if walk.exponents.len().is_multiple_of(2) { walk.start } else { walk.start.other() };
    for (k, &e) in WEAVE_EXPONENTS.iter().enumerate() {
        let c = cost + e.unsigned_abs();
        if c > walk.max_exchanges {
            continue;
        }
        let child = *walk.powers.get(g, k) * m;
        walk.exponents.push(e);
        if walk.exponents.len() == SPLIT_DEPTH {
            tasks.push((walk.start, walk.exponents.clone(), child, c));
        } else {
            walk.visit(&child);
            collect_tasks(walk, tasks, child, c);
        }
        walk.exponents.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::search::{count_weaves, target};

    #[test]
    fn identity_target_gives_empty_word() {
        for l in [2, 6, 10] {
            let r = brute_force(&target("identity").unwrap(), &SearchBudget::new(l)).unwrap();
            assert!(r.word.is_empty());
            assert_eq!(r.error, 0.0);
        }
    }

    #[test]
    fn exact_target_is_recovered() {
        let w = BraidWord::from_pairs(&[(1, 2)]).unwrap();
        let t = TargetGate { name: "s1^2".into(), matrix: w.evaluate() };
        let r = brute_force(&t, &SearchBudget::new(4)).unwrap();
        assert_eq!(*r.word, w);
        assert!(r.error < 1e-7);
    }

    #[test]
    fn visits_every_weave_once() {
        for (l, slots) in [(2, 1), (8, 4), (12, 3)] {
            let budget = SearchBudget::new(l).with_max_slots(slots);
            let r = brute_force(&target("hadamard").unwrap(), &budget).unwrap();
            assert_eq!(r.nodes_visited, count_weaves(l, slots));
        }
    }

    #[test]
    fn reported_error_matches_word() {
        let t = target("t").unwrap();
        let r = brute_force(&t, &SearchBudget::new(10)).unwrap();
        let recomputed = distance_unchecked(&r.word.evaluate(), &t.matrix);
        assert!((recomputed - r.error).abs() < 1e-12);
        assert!(r.word.crossings() <= 10);
    }

    #[test]
    fn rejects_bad_budget() {
        assert!(brute_force(&target("t").unwrap(), &SearchBudget::new(0)).is_err());
    }
}
