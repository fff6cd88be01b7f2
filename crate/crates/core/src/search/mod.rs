//! Weave synthesis: exhaustive depth-first search and a bidirectional
//! meet-in-the-middle variant, both minimising the phase-invariant gate
//! distance to a target.
//!
//! Both strategies share one selection rule. Let `e*` be the smallest error
//! seen; every weave within [`TIE_TOLERANCE`] of `e*` is a tie, and ties are
//! ordered by crossing count, then starting generator (`s1` before `s2`),
//! then the exponent sequence compared lexicographically. The rule depends
//! only on the set of evaluated weaves, so results do not depend on how the
//! work is split across threads.

mod bidirectional;
mod brute;
mod enumerate;
mod target;

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Factor, Generator, WeaveWord};
use crate::error::SearchError;
use crate::unitary::Unitary2;

pub use bidirectional::{bidirectional, bidirectional_with, BidirectionalOptions, HalfWeaveIndex};
pub use brute::brute_force;
pub use enumerate::{count_weaves, enumerate_weaves, WeaveIter};
pub use target::{matrix_to_json, target, TargetGate, TARGET_NAMES};

/// Errors closer than this are treated as equal when choosing a winner.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Bidirectional,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Bidirectional => "bidirectional",
        })
    }
}

/// Size limits of a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximum number of elementary crossings, `sum |exponent|`.
    pub max_exchanges: u32,
    /// Maximum number of power slots.
    pub max_slots: u32,
    pub method: Method,
    pub threads: usize,
}

impl SearchBudget {
    /// Brute-force budget with `max_slots = max_exchanges / 2` and one
    /// thread per available core.
    pub fn new(max_exchanges: u32) -> Self {
        Self {
            max_exchanges,
            max_slots: (max_exchanges / 2).max(1),
            method: Method::Brute,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_max_slots(mut self, max_slots: u32) -> Self {
        self.max_slots = max_slots;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_exchanges < 2 {
            return Err(SearchError::InvalidBudget(format!(
                "max_exchanges must be at least 2, got {}",
                self.max_exchanges
            )));
        }
        if self.max_slots < 1 {
            return Err(SearchError::InvalidBudget("max_slots must be at least 1".into()));
        }
        if self.threads < 1 {
            return Err(SearchError::InvalidBudget("threads must be at least 1".into()));
        }
        Ok(())
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool, SearchError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| SearchError::ThreadPool(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub word: WeaveWord,
    pub matrix: Unitary2,
    pub error: f64,
    /// Complete weaves whose distance to the target was evaluated.
    pub nodes_visited: u64,
    pub wall_time: Duration,
    pub method: Method,
}

/// Runs the strategy selected by `budget.method`.
pub fn search(target: &TargetGate, budget: &SearchBudget) -> Result<SearchResult, SearchError> {
    match budget.method {
        Method::Brute => brute_force(target, budget),
        Method::Bidirectional => bidirectional(target, budget),
    }
}

/// A weave as the pair (starting generator, exponent sequence).
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Candidate {
    pub error: f64,
    pub start: Option<Generator>,
    pub exponents: Vec<i64>,
}

impl Candidate {
    fn crossings(&self) -> u64 {
        self.exponents.iter().map(|e| e.unsigned_abs()).sum()
    }

    fn tie_key(&self) -> (u64, u8, &[i64]) {
        (self.crossings(), self.start.map_or(0, Generator::index), &self.exponents)
    }

    pub fn word(&self) -> BraidWord {
        weave_from_exponents(self.start, &self.exponents)
    }
}

pub(crate) fn weave_from_exponents(start: Option<Generator>, exponents: &[i64]) -> BraidWord {
    let mut g = start.unwrap_or(Generator::Sigma1);
    let mut w = BraidWord::empty();
    for &e in exponents {
        w.push(Factor::new(g, e));
        g = g.other();
    }
    w
}

/// Running state of the selection rule: the best error so far plus every
/// weave within the tie tolerance of it.
#[derive(Debug, Clone)]
pub(crate) struct Selection {
    best: f64,
    ties: Vec<Candidate>,
}

impl Default for Selection {
    fn default() -> Self {
        Self { best: f64::INFINITY, ties: Vec::new() }
    }
}

impl Selection {
    #[inline]
    pub fn offer(&mut self, error: f64, start: Option<Generator>, exponents: &[i64]) {
        if error > self.best + TIE_TOLERANCE {
            return;
        }
        self.insert(Candidate { error, start, exponents: exponents.to_vec() });
    }

    fn insert(&mut self, c: Candidate) {
        if c.error < self.best {
            self.best = c.error;
            let cutoff = self.best + TIE_TOLERANCE;
            self.ties.retain(|t| t.error <= cutoff);
        }
        self.ties.push(c);
    }

    pub fn merge(mut self, other: Selection) -> Selection {
        for c in other.ties {
            if c.error <= self.best + TIE_TOLERANCE {
                self.insert(c);
            }
        }
        self
    }

    pub fn winner(self) -> Option<Candidate> {
        let cutoff = self.best + TIE_TOLERANCE;
        self.ties
            .into_iter()
            .filter(|c| c.error <= cutoff)
            .min_by(|a, b| a.tie_key().cmp(&b.tie_key()))
    }
}

/// Builds the reported result from the winning candidate, recomputing the
/// matrix and error from the word itself.
pub(crate) fn finish(
    winner: Candidate,
    target: &TargetGate,
    nodes_visited: u64,
    wall_time: Duration,
    method: Method,
) -> SearchResult {
    let word = winner.word();
    let matrix = word.evaluate();
    let error = crate::unitary::distance_unchecked(&matrix, &target.matrix);
    SearchResult {
        word: WeaveWord::try_from(word).expect("search only yields weaves"),
        matrix,
        error,
        nodes_visited,
        wall_time,
        method,
    }
}
